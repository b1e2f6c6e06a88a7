"""The R-operator, convention calibration, and the Manin-triple checks.

r_operator evaluates the four-term expansion of the contraction of the
kernel pencil against a loop element: a degree-splitting term from the
antisymmetrized singular part, plus three density-weighted exact residues.
Every convention the formulas leave open (residue sign at infinity,
expansion point, contraction leg order) is taken from a ConventionProfile;
calibrate_conventions searches the whole profile space against anchor
constraints and returns the unique survivor together with a certificate
listing every constraint's witness values, including any that fail.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from cybelab.atoms import density_poly
from cybelab.pairings import (ALL_PROFILES, B_POINT_INF, B_POINT_ZERO,
                              ConventionProfile, LEG_FIRST, LEG_SECOND,
                              PairingSpec, b_coeffs, gram_inverse_check,
                              pairing_eval)
from cybelab.poly import MPoly, as_fraction
from cybelab.ratfunc import RatFn
from cybelab.series import INFINITY, ZERO_POINT
from cybelab.sl2 import LoopElt, NotInBminus, Sl2Vec


class NoProfile(ValueError):
    """No convention profile satisfies the calibration constraints."""


class AmbiguousProfile(ValueError):
    """More than one convention profile survives calibration."""


class DecompositionMismatch(ValueError):
    """The eigenprojection route and the basis-solve route disagree."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


# -- the R operator ----------------------------------------------------------


def _res_density(scalar: MPoly, a, profile: ConventionProfile) -> Fraction:
    """Residue of scalar(l) / (a1 + 2 a2 l + a3 l^2) dl under the profile."""
    if scalar.is_zero():
        return Fraction(0)
    a1, a2, a3 = (as_fraction(c) for c in a)
    f = RatFn.from_quotient(scalar, density_poly(a1, a2, a3))
    if profile.b_point == B_POINT_INF:
        w = f.expand("l", INFINITY, -1, -1)
        c = w.coeff(-1)
        return Fraction(profile.sigma_inf) * (c.const_value() if not c.is_zero() else Fraction(0))
    w = f.expand("l", ZERO_POINT, -1, -1)
    c = w.coeff(-1)
    return c.const_value() if not c.is_zero() else Fraction(0)


def r_operator(A: LoopElt, a=(1, 0, -1),
               profile: ConventionProfile = ConventionProfile()) -> LoopElt:
    """Apply the kernel-pencil contraction operator to a loop element.

    Four exact terms: the degree splitting produced by the antisymmetrized
    singular kernel, a multiple of the identity-leg residue, and the two
    Borel-tail residues; the degree-0 placement in the splitting and all
    residue conventions come from the profile.
    """
    a1, a2, a3 = (as_fraction(c) for c in a)
    sig = Fraction(profile.sigma_inf)
    tail = MPoly.const(a2) + MPoly.const(a3) * MPoly.var("l")  # a2 + a3*l

    pos = A.split_degrees(lambda d: d >= 0)
    neg = A.split_degrees(lambda d: d < 0)
    if profile.leg_order == LEG_SECOND:
        term1 = (neg - pos).scale(sig)
        sign2, sign34 = 1, 1
    elif profile.leg_order == LEG_FIRST:
        term1 = (pos - neg).scale(sig)
        sign2, sign34 = -1, -1
    else:
        raise ValueError(f"unknown leg order {profile.leg_order!r}")

    # term 2: residue of <t, A>-type identity leg: 2 * res[A(l) tail(l) / dens]
    t2 = LoopElt()
    for x in ("e", "f", "h"):
        comp = A.component(x)
        val = _res_density(comp * tail, a, profile)
        if val:
            t2 = t2 + LoopElt.monomial(x, 0, 2 * sign2 * val)

    # term 3: e-output with polynomial weight: 2 (a2 + a3 l) e * res[A_e / dens]
    t3 = LoopElt()
    val = _res_density(A.component("e"), a, profile)
    if val:
        t3 = (LoopElt.monomial("e", 0, 2 * sign34 * a2 * val)
              + LoopElt.monomial("e", 1, 2 * sign34 * a3 * val))

    # term 4: f-output: -2 f * res[A_f(l) tail(l) / dens]
    t4 = LoopElt()
    val = _res_density(A.component("f") * tail, a, profile)
    if val:
        t4 = LoopElt.monomial("f", 0, -2 * sign34 * val)

    return term1 + t2 + t3 + t4


# -- explicit stable-subspace formulas ---------------------------------------


@dataclass(frozen=True)
class StableCoords:
    """Coordinates on the stable subspace h x C[l] + e x l^-1 C[l]:
    alpha[i] for h l^i (i >= 0), beta[i] for e l^i (i >= -1)."""

    alpha: tuple
    beta: tuple  # beta[0] is the coefficient of e l^-1

    @classmethod
    def from_loop(cls, A: LoopElt) -> "StableCoords":
        degs = A.degrees()
        if any(not A.coeff(d)["f"] == 0 for d in degs):
            raise ValueError("not in the stable subspace (f-component present)")
        top = max([0] + degs)
        alpha = tuple(as_fraction(A.coeff(i)["h"]) for i in range(0, top + 1))
        beta = tuple(as_fraction(A.coeff(i)["e"]) for i in range(-1, top + 1))
        if any(A.coeff(d)["h"] or d < -1 and A.coeff(d)["e"] for d in degs if d < 0):
            raise ValueError("not in the stable subspace")
        return cls(alpha, beta)

    def to_loop(self) -> LoopElt:
        out = LoopElt()
        for i, c in enumerate(self.alpha):
            if c:
                out = out + LoopElt.monomial("h", i, c)
        for i, c in enumerate(self.beta):
            if c:
                out = out + LoopElt.monomial("e", i - 1, c)
        return out


INTERPRETATION_NOTE = (
    "The displayed degree-0/1 rules are taken as normative: alpha'_0 = "
    "alpha_0 + 2(alpha_2 + alpha_4 + ...), beta'_0 = beta_0 + 2(beta_2 + "
    "...), beta'_1 = beta_-1 + 2(beta_1 + beta_3 + ...).  The printed sign "
    "rule 'for i < 0' is read as applying to the remaining indices i > 0 "
    "(alpha'_i = -alpha_i, beta'_i = -beta_i; beta'_-1 = +beta_-1, since "
    "the subspace has no further negative coordinates and e l^-1 is a "
    "fixed vector).  The operator computed from the kernel satisfies "
    "beta'_1 = beta_1 + 2(beta_3 + ...) instead; the comparison reports "
    "the displayed beta'_1 rule's beta_-1 + 2 beta_1 coupling as a finding."
)


def r_explicit_stable(coords: StableCoords) -> tuple[StableCoords, str]:
    """The displayed stable-subspace formulas under the documented index
    interpretation; returns (image coordinates, interpretation note)."""
    alpha, beta = coords.alpha, coords.beta

    def even_tail(seq, start):
        return sum(seq[i] for i in range(start, len(seq), 2)) if seq else 0

    a_out = list(Fraction(0) for _ in alpha)
    if alpha:
        a_out[0] = alpha[0] + 2 * even_tail(alpha, 2)
        for i in range(1, len(alpha)):
            a_out[i] = -alpha[i]
    # beta[k] is the coefficient of e l^(k-1)
    b_out = list(Fraction(0) for _ in beta)
    if beta:
        b_out[0] = beta[0]  # e l^-1 coefficient passes through
        if len(beta) > 1:
            b_out[1] = beta[1] + 2 * even_tail(beta, 3)
        if len(beta) > 2:
            b_out[2] = beta[0] + 2 * even_tail(beta, 2)
        for i in range(3, len(beta)):
            b_out[i] = -beta[i]
    return StableCoords(tuple(a_out), tuple(b_out)), INTERPRETATION_NOTE


def stable_comparison(max_degree: int, a=(1, 0, -1),
                      profile: ConventionProfile = ConventionProfile()) -> dict:
    """Compare r_explicit_stable with r_operator on stable basis vectors.

    Disagreements are reported as named findings, never hidden."""
    findings = []
    agree = []
    for x, deg0 in (("h", 0), ("e", -1)):
        for d in range(deg0, max_degree + 1):
            A = LoopElt.monomial(x, d)
            via_op = r_operator(A, a, profile)
            img, _ = r_explicit_stable(StableCoords.from_loop(A))
            via_formula = img.to_loop()
            if via_op == via_formula:
                agree.append(f"{x}*l^{d}")
            else:
                findings.append({
                    "name": "stable-formula-disagreement",
                    "input": f"{x}*l^{d}",
                    "operator": repr(via_op),
                    "displayed_formula": repr(via_formula),
                })
    return {"agree": agree, "findings": findings,
            "note": INTERPRETATION_NOTE}


# -- subspace predicates and bases -------------------------------------------


def h_projection(v: Sl2Vec) -> Sl2Vec:
    """Projection to the Cartan line inside the lower Borel."""
    if v["e"] != 0:
        raise NotInBminus(f"element has an e-component: {v}")
    return Sl2Vec({"h": v["h"]})


def gplus_membership(A: LoopElt) -> tuple[bool, list]:
    """The four membership conditions of the positive half.

    (1) degrees >= -1 only; (2) the l^-1 coefficient lies in span{e} and the
    l^0 coefficient in span{e, h}; (3) the e-component vanishes at 1 and -1;
    (4) the h-components satisfy H(1) + H(-1) = 0."""
    violated = []
    if any(d < -1 for d in A.degrees()):
        violated.append("degree-below--1")
    cm1 = A.coeff(-1)
    if cm1["f"] != 0 or cm1["h"] != 0:
        violated.append("l^-1-outside-span{e}")
    c0 = A.coeff(0)
    if c0["f"] != 0:
        violated.append("l^0-outside-upper-borel")
    ecomp = A.component("e")
    if not ecomp.subs_values({"l": Fraction(1)}).is_zero():
        violated.append("e-component-nonzero-at-1")
    if not ecomp.subs_values({"l": Fraction(-1)}).is_zero():
        violated.append("e-component-nonzero-at--1")
    h1 = A.component("h").subs_values({"l": Fraction(1)})
    hm1 = A.component("h").subs_values({"l": Fraction(-1)})
    if not (h1 + hm1).is_zero():
        violated.append("h-values-sum-nonzero")
    return not violated, violated


def gplus_spanning(N: int) -> list[LoopElt]:
    """The spanning family: e(l^{k+1} - l^{k-1}) for k = 0..N-1, the odd h
    monomials and even h differences up to degree N, and f l^k for k = 1..N."""
    out = []
    for k in range(0, N):
        out.append(LoopElt.monomial("e", k + 1) - LoopElt.monomial("e", k - 1))
    for k in range(1, N + 1, 2):
        out.append(LoopElt.monomial("h", k))
    for k in range(2, N + 1, 2):
        out.append(LoopElt.monomial("h", k) - LoopElt.monomial("h", 0))
    for k in range(1, N + 1):
        out.append(LoopElt.monomial("f", k))
    return out


def lower_basis(N: int) -> list[LoopElt]:
    """Truncated basis of the complementary half: x l^-k, 0 <= k <= N."""
    return [LoopElt.monomial(x, -k)
            for k in range(0, N + 1) for x in ("e", "f", "h")]


def true_eigenbasis(N: int) -> tuple[list[LoopElt], list[LoopElt]]:
    """Truncated bases of the operator's actual eigenspaces.

    The -1 space shifts the degree-0 boundary relative to the documented
    half: f sits on the -1 side (f l^k for k >= 0) and the e-part needs both
    parity sums to vanish; dually the +1 space contains e l^1.  Returns
    (minus_basis, plus_basis)."""
    minus = []
    for k in range(0, N - 1):
        minus.append(LoopElt.monomial("e", k + 2) - LoopElt.monomial("e", k))
    for k in range(1, N + 1, 2):
        minus.append(LoopElt.monomial("h", k))
    for k in range(2, N + 1, 2):
        minus.append(LoopElt.monomial("h", k) - LoopElt.monomial("h", 0))
    for k in range(0, N + 1):
        minus.append(LoopElt.monomial("f", k))
    plus = [LoopElt.monomial("e", 1)]
    for k in range(0, N + 1):
        plus.append(LoopElt.monomial("e", -k))
        plus.append(LoopElt.monomial("h", -k))
    for k in range(1, N + 1):
        plus.append(LoopElt.monomial("f", -k))
    return minus, plus


def true_minus_membership(A: LoopElt) -> bool:
    """Membership in the operator's actual -1 eigenspace: degrees >= 0,
    the e-component vanishing at 1 and -1, H(1) + H(-1) = 0, f free."""
    if any(d < 0 for d in A.degrees()):
        return False
    ecomp = A.component("e")
    if not ecomp.subs_values({"l": Fraction(1)}).is_zero():
        return False
    if not ecomp.subs_values({"l": Fraction(-1)}).is_zero():
        return False
    h = A.component("h")
    s = h.subs_values({"l": Fraction(1)}) + h.subs_values({"l": Fraction(-1)})
    return s.is_zero()


def true_plus_membership(A: LoopElt) -> bool:
    """Membership in the actual +1 eigenspace: h-degrees <= 0, f-degrees
    <= -1, e-degrees <= 1."""
    for d, v in A.parts.items():
        if v["h"] != 0 and d > 0:
            return False
        if v["f"] != 0 and d > -1:
            return False
        if v["e"] != 0 and d > 1:
            return False
    return True


def isotropy_check(basis: list[LoopElt], spec: PairingSpec) -> dict:
    """All pairwise pairings vanish exactly; failures carry witnesses."""
    witnesses = []
    n = len(basis)
    for i in range(n):
        for j in range(i, n):
            v = pairing_eval(basis[i], basis[j], spec)
            if v:
                witnesses.append(((i, j), str(v)))
    return {"size": n, "witnesses": witnesses, "pass": not witnesses}


# -- exact linear algebra -----------------------------------------------------


def _rank(rows: list[list[Fraction]]) -> int:
    rows = [list(r) for r in rows]
    rank = 0
    ncols = len(rows[0]) if rows else 0
    for col in range(ncols):
        piv = None
        for r in range(rank, len(rows)):
            if rows[r][col]:
                piv = r
                break
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = 1 / rows[rank][col]
        rows[rank] = [c * inv for c in rows[rank]]
        for r in range(len(rows)):
            if r != rank and rows[r][col]:
                f = rows[r][col]
                rows[r] = [a - f * b for a, b in zip(rows[r], rows[rank])]
        rank += 1
    return rank


def _solve_exact(columns: list[list[Fraction]], target: list[Fraction]):
    """Solve sum_j x_j columns[j] = target exactly; None if inconsistent."""
    nrows = len(target)
    ncols = len(columns)
    aug = [[columns[j][i] for j in range(ncols)] + [target[i]]
           for i in range(nrows)]
    pivots = []
    rank = 0
    for col in range(ncols):
        piv = None
        for r in range(rank, nrows):
            if aug[r][col]:
                piv = r
                break
        if piv is None:
            continue
        aug[rank], aug[piv] = aug[piv], aug[rank]
        inv = 1 / aug[rank][col]
        aug[rank] = [c * inv for c in aug[rank]]
        for r in range(nrows):
            if r != rank and aug[r][col]:
                f = aug[r][col]
                aug[r] = [a - f * b for a, b in zip(aug[r], aug[rank])]
        pivots.append(col)
        rank += 1
    for r in range(rank, nrows):
        if aug[r][ncols]:
            return None
    x = [Fraction(0)] * ncols
    for r, col in enumerate(pivots):
        x[col] = aug[r][ncols]
    return x


def _coordinates(elts: list[LoopElt], lo: int, hi: int):
    """Stack loop elements as exact coordinate columns over degrees [lo, hi]."""
    coords = []
    for A in elts:
        col = []
        for d in range(lo, hi + 1):
            v = A.coeff(d)
            col.extend([as_fraction(v["e"]), as_fraction(v["f"]),
                        as_fraction(v["h"])])
        coords.append(col)
    return coords


def duality_rank(N: int, spec: PairingSpec) -> dict:
    """Rank of the pairing matrix between the positive-half family (3N
    vectors, degrees up to N) and the matched block of monomials x l^-j,
    j = 0..N-1 (3N vectors)."""
    plus = gplus_spanning(N)
    dual = [LoopElt.monomial(x, -j)
            for j in range(0, N) for x in ("e", "f", "h")]
    rows = [[pairing_eval(p, q, spec) for q in dual] for p in plus]
    rank = _rank(rows)
    return {"N": N, "block": (len(plus), len(dual)), "rank": rank,
            "full": rank == len(plus)}


# -- decomposition ------------------------------------------------------------


def decompose(A: LoopElt, N: int | None = None, a=(1, 0, -1),
              profile: ConventionProfile = ConventionProfile(),
              require_agreement: bool = True):
    """Split A into (positive-half part, lower part), two ways.

    Route 1 applies the eigenprojections (1 -/+ R)/2; route 2 solves exactly
    against the positive-half spanning family and the lower monomial basis.
    DecompositionMismatch carries both answers when they disagree.
    """
    degs = A.degrees()
    if N is None:
        N = max(8, max((abs(d) for d in degs), default=0) + 2)
    RA = r_operator(A, a, profile)
    plus_r = (A - RA).scale(Fraction(1, 2))
    minus_r = (A + RA).scale(Fraction(1, 2))

    basis_plus = gplus_spanning(N)
    basis_minus = lower_basis(N)
    lo, hi = -N - 1, N + 1
    cols = _coordinates(basis_plus + basis_minus, lo, hi)
    target = _coordinates([A], lo, hi)[0]
    sol = _solve_exact(cols, target)
    if sol is None:
        raise ValueError(f"element outside the truncated sum of halves: {A!r}")
    plus_s = LoopElt()
    for c, b in zip(sol[:len(basis_plus)], basis_plus):
        if c:
            plus_s = plus_s + b.scale(c)
    minus_s = LoopElt()
    for c, b in zip(sol[len(basis_plus):], basis_minus):
        if c:
            minus_s = minus_s + b.scale(c)

    agree = (plus_r == plus_s) and (minus_r == minus_s)
    if not agree and require_agreement:
        raise DecompositionMismatch(
            "eigenprojection and basis-solve disagree",
            witness={"input": repr(A),
                     "projection": (repr(plus_r), repr(minus_r)),
                     "solve": (repr(plus_s), repr(minus_s))})
    return {"plus_projection": plus_r, "minus_projection": minus_r,
            "plus_solve": plus_s, "minus_solve": minus_s, "agree": agree}


# -- exploratory generalized half ---------------------------------------------


def generalized_gplus_membership(A: LoopElt, z1, z2) -> tuple[bool, list]:
    """The conjectural membership conditions at shifted points z1, z2."""
    z1, z2 = as_fraction(z1), as_fraction(z2)
    if z1 == z2 or z1 == 0 or z2 == 0:
        raise ValueError("points must be distinct and nonzero")
    violated = []
    if any(d < -1 for d in A.degrees()):
        violated.append("degree-below--1")
    cm1 = A.coeff(-1)
    if cm1["f"] != 0 or cm1["h"] != 0:
        violated.append("l^-1-outside-span{e}")
    if A.coeff(0)["f"] != 0:
        violated.append("l^0-outside-upper-borel")
    ecomp = A.component("e")
    for z in (z1, z2):
        if not ecomp.subs_values({"l": z}).is_zero():
            violated.append(f"e-component-nonzero-at-{z}")
    h1 = A.component("h").subs_values({"l": z1})
    h2 = A.component("h").subs_values({"l": z2})
    if not (h1 + h2).is_zero():
        violated.append("h-values-sum-nonzero")
    return not violated, violated


def generalized_spanning(N: int, z1, z2) -> list[LoopElt]:
    """Candidate spanning family for the shifted half (conjecture probing)."""
    z1, z2 = as_fraction(z1), as_fraction(z2)
    out = []
    quad = ((MPoly.var("l") - MPoly.const(z1))
            * (MPoly.var("l") - MPoly.const(z2)))
    for k in range(0, N):
        poly = quad * MPoly.var("l", k - 1)
        out.append(LoopElt.from_components(e=poly))
    for k in range(1, N + 1):
        mu = (z1 ** k + z2 ** k) / 2
        out.append(LoopElt.from_components(
            h=MPoly.var("l", k) - MPoly.const(mu)))
    for k in range(1, N + 1):
        out.append(LoopElt.monomial("f", k))
    return out


def generalized_exploration(N: int, z1, z2) -> dict:
    """Closure and isotropy evidence for the shifted half; reported as
    conjecture evidence, never asserted."""
    z1q, z2q = as_fraction(z1), as_fraction(z2)
    fam = generalized_spanning(N, z1q, z2q)
    member_fail = []
    for idx, v in enumerate(fam):
        ok, viol = generalized_gplus_membership(v, z1q, z2q)
        if not ok:
            member_fail.append((idx, viol))
    closure_fail = []
    for i in range(len(fam)):
        for j in range(i + 1, len(fam)):
            w = fam[i].bracket(fam[j])
            if w.is_zero():
                continue
            ok, viol = generalized_gplus_membership(w, z1q, z2q)
            if not ok:
                closure_fail.append(((i, j), viol))
    # density (l - z1)(l - z2) = z1 z2 - (z1 + z2) l + l^2
    a = (z1q * z2q, -(z1q + z2q) / 2, Fraction(1))
    spec = PairingSpec(("general", a))
    iso = isotropy_check(fam, spec)
    return {
        "z": (str(z1q), str(z2q)),
        "family_size": len(fam),
        "membership_failures": member_fail,
        "closure_failures": closure_fail,
        "isotropy_witnesses": iso["witnesses"],
        "evidence": (not member_fail) and (not closure_fail) and iso["pass"],
    }


# -- calibration ---------------------------------------------------------------


ANCHOR_FAMILY = (1, 0, -1)


def _constraint_pairing_match(profile: ConventionProfile) -> dict:
    """General (1,0,0) pairing equals the first indexed pairing on monomials."""
    failures = []
    spec_gen = PairingSpec(("general", (1, 0, 0)), profile)
    for i in range(-6, 7):
        for j in range(-6, 7):
            A = LoopElt.monomial("e", i)
            B = LoopElt.monomial("f", j)
            got = pairing_eval(A, B, spec_gen)
            want = pairing_eval(A, B, PairingSpec(("indexed", 1)))
            if got != want:
                failures.append((f"e*l^{i},f*l^{j}", str(got), str(want)))
    return {"name": "rational-pairing-match", "failures": failures[:4],
            "fail_count": len(failures), "pass": not failures}


def _constraint_gram(profile: ConventionProfile) -> dict:
    reps = [gram_inverse_check((1, 0, 0), 10, profile.b_point),
            gram_inverse_check(ANCHOR_FAMILY, 12, profile.b_point)]
    bad = [w for r in reps for w in r["witnesses"]]
    return {"name": "gram-inverse", "failures": bad[:4],
            "fail_count": len(bad), "pass": not bad}


def _constraint_anchors(profile: ConventionProfile) -> dict:
    """R fixes x l^-k (k = 0..6) and negates f l^k (k = 1..6)."""
    failures = []
    witnesses = {}
    for x in ("e", "f", "h"):
        for k in range(0, 7):
            A = LoopElt.monomial(x, -k)
            RA = r_operator(A, ANCHOR_FAMILY, profile)
            witnesses[f"R({x}*l^{-k})"] = repr(RA)
            if RA != A:
                failures.append((f"fix {x}*l^{-k}", repr(RA)))
    for k in range(1, 7):
        A = LoopElt.monomial("f", k)
        RA = r_operator(A, ANCHOR_FAMILY, profile)
        witnesses[f"R(f*l^{k})"] = repr(RA)
        if RA != -A:
            failures.append((f"negate f*l^{k}", repr(RA)))
    return {"name": "eigen-anchors", "failures": failures,
            "fail_count": len(failures), "pass": not failures,
            "witnesses": witnesses}


KNOWN_BOUNDARY_ANCHORS = {"fix f*l^0"}


def calibrate_conventions(a=ANCHOR_FAMILY) -> dict:
    """Search the 2x2x2 profile space against the anchor constraints.

    Returns a certificate dict with per-profile results and the selected
    profile.  If no profile satisfies everything, the unique profile whose
    only violations are the known boundary anchors (see the package notes on
    the degree-0 boundary of the f sector) is selected and the violations
    are recorded as findings; NoProfile / AmbiguousProfile otherwise.
    """
    if tuple(a) != ANCHOR_FAMILY:
        base = calibrate_conventions(ANCHOR_FAMILY)
        base["inherited_for"] = tuple(str(c) for c in a)
        return base
    rows = []
    for prof in ALL_PROFILES:
        checks = [_constraint_pairing_match(prof), _constraint_gram(prof),
                  _constraint_anchors(prof)]
        rows.append({"profile": prof, "checks": checks,
                     "violations": [f[0] for c in checks for f in c["failures"]],
                     "pass": all(c["pass"] for c in checks)})
    full = [r for r in rows if r["pass"]]
    if len(full) == 1:
        selected, findings = full[0], []
    elif len(full) > 1:
        raise AmbiguousProfile([r["profile"].label() for r in full])
    else:
        near = [r for r in rows
                if r["violations"] and set(r["violations"]) <= KNOWN_BOUNDARY_ANCHORS]
        if not near:
            raise NoProfile([(r["profile"].label(), r["violations"][:3])
                             for r in rows])
        if len(near) > 1:
            # profiles may coincide as operators; require a unique one
            raise AmbiguousProfile([r["profile"].label() for r in near])
        selected = near[0]
        findings = [{
            "name": "boundary-anchor-violation",
            "anchor": v,
            "witness": dict(selected["checks"][2]["failures"])[v],
        } for v in selected["violations"]]
    return {
        "family": tuple(ANCHOR_FAMILY),
        "selected": selected["profile"],
        "findings": findings,
        "profiles": [{"label": r["profile"].label(),
                      "pass": r["pass"],
                      "violations": r["violations"][:8],
                      "violation_count": len(r["violations"])}
                     for r in rows],
        "witnesses": selected["checks"][2]["witnesses"],
    }
