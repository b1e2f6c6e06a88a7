"""One-variable series windows with explicit validity ranges.

A SeriesWindow holds coefficients of var^k for k in [lo, hi] of the expansion
of a rational function at 0, at infinity, or at a finite rational point.
Coefficients live in the Laurent-polynomial ring of the remaining variables.
Window arithmetic shrinks validity conservatively; asking for a coefficient
the window cannot certify raises WindowTooNarrow instead of guessing.
"""

from __future__ import annotations

from fractions import Fraction

from cybelab.poly import MPoly, as_fraction


class _Point:
    def __init__(self, label):
        self.label = label

    def __repr__(self):
        return self.label


ZERO_POINT = _Point("0")
INFINITY = _Point("inf")


class ExpansionError(ValueError):
    """The expansion is not computable in this coefficient ring."""


class WindowTooNarrow(ValueError):
    """A required coefficient lies outside the certified window."""


def _direction(point) -> int:
    return -1 if point is INFINITY else 1


def _point_key(point):
    return point.label if isinstance(point, _Point) else as_fraction(point)


FAR = 10 ** 9  # support sentinel for the identically-zero window


class SeriesWindow:
    """Windowed expansion sum_k c_k var^k, exact on [lo, hi].

    ``bound`` is the support boundary: for ascending expansions (0 or finite
    point) every coefficient below it is known to vanish; for descending
    expansions (infinity) every coefficient above it vanishes.
    """

    __slots__ = ("var", "point", "coeffs", "lo", "hi", "bound")

    def __init__(self, var, point, coeffs, lo, hi, bound):
        self.var = var
        self.point = point
        self.coeffs = {k: c for k, c in coeffs.items()
                       if lo <= k <= hi and not c.is_zero()}
        self.lo = lo
        self.hi = hi
        self.bound = bound

    @property
    def direction(self) -> int:
        return _direction(self.point)

    def coeff(self, k: int) -> MPoly:
        """Exact coefficient of var^k, or WindowTooNarrow."""
        if self.lo <= k <= self.hi:
            return self.coeffs.get(k, MPoly.zero())
        s = self.direction
        if (s > 0 and k < self.bound) or (s < 0 and k > self.bound):
            return MPoly.zero()
        raise WindowTooNarrow(
            f"coefficient of {self.var}^{k} outside window [{self.lo},{self.hi}]")

    def __eq__(self, other):
        if not isinstance(other, SeriesWindow):
            return NotImplemented
        if self.var != other.var or _point_key(self.point) != _point_key(other.point):
            return False
        lo, hi = max(self.lo, other.lo), min(self.hi, other.hi)
        return all(self.coeff(k) == other.coeff(k) for k in range(lo, hi + 1))

    def _check_compatible(self, other):
        if self.var != other.var or _point_key(self.point) != _point_key(other.point):
            raise ValueError("incompatible expansion frames")

    def __add__(self, other):
        if isinstance(other, SeriesWindow):
            self._check_compatible(other)
            lo, hi = max(self.lo, other.lo), min(self.hi, other.hi)
            coeffs = {k: self.coeff(k) + other.coeff(k) for k in range(lo, hi + 1)}
            s = self.direction
            bound = (min if s > 0 else max)(self.bound, other.bound)
            return SeriesWindow(self.var, self.point, coeffs, lo, hi, bound)
        return NotImplemented

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return SeriesWindow(self.var, self.point,
                            {k: -c for k, c in self.coeffs.items()},
                            self.lo, self.hi, self.bound)

    def scale(self, c) -> "SeriesWindow":
        c = c if isinstance(c, MPoly) else MPoly.const(as_fraction(c))
        if self.var in c.variables():
            raise ValueError("scale factor must be free of the series variable")
        return SeriesWindow(self.var, self.point,
                            {k: c * v for k, v in self.coeffs.items()},
                            self.lo, self.hi, self.bound)

    def __mul__(self, other):
        if not isinstance(other, SeriesWindow):
            return NotImplemented
        self._check_compatible(other)
        s = self.direction
        b1, b2 = self.bound, other.bound
        if s > 0:
            if self.lo > b1 or other.lo > b2:
                raise WindowTooNarrow("window does not reach the support base")
            hi = min(self.hi + b2, other.hi + b1)
            lo = b1 + b2
            rng = range(lo, hi + 1)
        else:
            if self.hi < b1 or other.hi < b2:
                raise WindowTooNarrow("window does not reach the support base")
            lo = max(self.lo + b2, other.lo + b1)
            hi = b1 + b2
            rng = range(lo, hi + 1)
        coeffs = {}
        for k in rng:
            acc = MPoly.zero()
            for i, ci in self.coeffs.items():
                j = k - i
                if (s > 0 and b2 <= j <= other.hi) or (s < 0 and other.lo <= j <= b2):
                    cj = other.coeffs.get(j)
                    if cj is not None:
                        acc = acc + ci * cj
            coeffs[k] = acc
        return SeriesWindow(self.var, self.point, coeffs, min(lo, hi), max(lo, hi), b1 + b2)

    def mul_poly(self, poly: MPoly) -> "SeriesWindow":
        """Multiply by a polynomial in the series variable (exact shift-sum)."""
        parts = poly.coeffs_in(self.var)
        if not parts:
            return SeriesWindow(self.var, self.point, {}, self.lo, self.hi, self.bound)
        s = self.direction
        lo = hi = None
        pieces = []
        for d, c in parts.items():
            plo, phi = self.lo + d, self.hi + d
            pieces.append((d, c, plo, phi))
            lo = plo if lo is None else max(lo, plo)
            hi = phi if hi is None else min(hi, phi)
        coeffs = {}
        for k in range(lo, hi + 1):
            acc = MPoly.zero()
            for d, c, _, _ in pieces:
                acc = acc + c * self.coeff(k - d)
            coeffs[k] = acc
        ds = [d for d, _, _, _ in pieces]
        bound = self.bound + (min(ds) if s > 0 else max(ds))
        return SeriesWindow(self.var, self.point, coeffs, lo, hi, bound)

    def is_zero_on_window(self) -> bool:
        return not self.coeffs

    def __repr__(self):
        inner = " + ".join(f"({c})*{self.var}^{k}"
                           for k, c in sorted(self.coeffs.items()))
        return (f"SeriesWindow[{self.var}@{self.point}, "
                f"[{self.lo},{self.hi}]]({inner or '0'})")


def _reciprocal_series(parts: dict[int, MPoly], s: int, steps: int):
    """Series of 1/A where A = sum parts[d] var^d, in direction s.

    Returns (base, {step: coeff}) with actual degree = base + s*step.
    The boundary coefficient must be an invertible monomial.
    """
    if not parts:
        raise ZeroDivisionError("reciprocal of zero")
    v = min(parts) if s > 0 else max(parts)
    cv = parts[v]
    cv_inv = cv.invert_monomial()
    if cv_inv is None:
        raise ExpansionError(
            f"boundary coefficient {cv} is not invertible; cannot expand")
    # u[step] for A = cv var^v (1 + u), u in strictly positive steps
    u = {}
    for d, c in parts.items():
        if d != v:
            u[s * (d - v)] = cv_inv * c
    inv = {0: MPoly.const(1)}
    for t in range(1, steps + 1):
        acc = MPoly.zero()
        for j, uj in u.items():
            if 0 < j <= t:
                prev = inv.get(t - j)
                if prev is not None and not prev.is_zero():
                    acc = acc - uj * prev
        if not acc.is_zero():
            inv[t] = acc
    return -v, {t: cv_inv * c for t, c in inv.items()}


def _series_mul(a, b, steps):
    base = a[0] + b[0]
    coeffs = {}
    for i, ci in a[1].items():
        for j, cj in b[1].items():
            t = i + j
            if t <= steps:
                acc = coeffs.get(t)
                coeffs[t] = ci * cj if acc is None else acc + ci * cj
    return base, coeffs


def expand_ratfn(f, var: str, point, lo: int, hi: int) -> SeriesWindow:
    """Expansion window of a RatFn at Zero / Infinity / a finite rational."""
    if lo > hi:
        raise ValueError("empty window")
    if point is not ZERO_POINT and point is not INFINITY:
        c = as_fraction(point if not isinstance(point, _Point) else 0)
        shifted = f.substitute(var, ("affine", 1, c))
        w = expand_ratfn(shifted, var, ZERO_POINT, lo, hi)
        return SeriesWindow(var, c, w.coeffs, w.lo, w.hi, w.bound)
    s = _direction(point)
    num_parts = f.num.coeffs_in(var)
    if not num_parts:
        return SeriesWindow(var, point, {}, lo, hi, s * FAR)
    base_num = (min if s > 0 else max)(num_parts)
    series = (0, {s * (d - base_num): c for d, c in num_parts.items()})
    series = (base_num, series[1])
    base_total = base_num
    for atom, k in f.den:
        parts = atom.poly.coeffs_in(var)
        vb = (min if s > 0 else max)(parts)
        base_total += -vb * k
    # steps needed to reach the far end of the requested window
    far = hi if s > 0 else lo
    steps = s * (far - base_total)
    if steps < 0:
        # whole window lies beyond the support: all zero, certified
        return SeriesWindow(var, point, {}, lo, hi, base_total)
    for atom, k in f.den:
        parts = atom.poly.coeffs_in(var)
        rec = _reciprocal_series(parts, s, steps)
        for _ in range(k):
            series = _series_mul(series, rec, steps)
    base, coeffs = series
    out = {}
    for t, c in coeffs.items():
        deg = base + s * t
        if lo <= deg <= hi and not c.is_zero():
            out[deg] = c
    return SeriesWindow(var, point, out, lo, hi, base)
