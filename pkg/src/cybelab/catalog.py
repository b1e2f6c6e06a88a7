"""Named r-matrix constructors and the two catalog transforms.

All tensors live in sl2 (x) sl2 with RatFn coefficients in the spectral
variables l (first leg) and m (second leg).  Both printed sign variants of
the trigonometric matrix are constructed; downstream checks select the
consistent one by computation.
"""

from __future__ import annotations

from fractions import Fraction

from cybelab.poly import MPoly, as_fraction
from cybelab.ratfunc import RatFn, ratfn
from cybelab.sl2 import Tensor2, casimir

L = MPoly.var("l")
M = MPoly.var("m")

CATALOG_NAMES = (
    "r1", "r2_plus", "r2_minus", "r3",
    "r1_stolin_const", "r1_stolin_lin",
    "r3_stolin_const", "r3_stolin_lin",
    "r3_stolin_const_derived", "r3_stolin_lin_derived",
)


class UnknownName(KeyError):
    pass


class RMatrixDef:
    """A named two-leg tensor with a provenance note."""

    __slots__ = ("name", "tensor", "note")

    def __init__(self, name: str, tensor: Tensor2, note: str = ""):
        self.name = name
        self.tensor = tensor
        self.note = note

    def __repr__(self):
        return f"RMatrixDef({self.name})"

    def __add__(self, other):
        return RMatrixDef(f"({self.name}+{other.name})", self.tensor + other.tensor)

    def __sub__(self, other):
        return RMatrixDef(f"({self.name}-{other.name})", self.tensor - other.tensor)

    def scale(self, c):
        return RMatrixDef(f"{c}*{self.name}", self.tensor.scale(ratfn(c)))

    def __eq__(self, other):
        return self.tensor == other.tensor


def _t_over(num) -> Tensor2:
    """num/(l-m) times the invariant tensor."""
    c = RatFn.from_quotient(num, L - M)
    return casimir().scale(c)


def _const(pairs) -> Tensor2:
    return Tensor2({k: ratfn(v) for k, v in pairs.items()})


def make(name: str) -> RMatrixDef:
    """Exact catalog tensor, as printed."""
    if name == "r1":
        return RMatrixDef("r1", _t_over(1), "rational")
    if name == "r2_plus":
        tail = _const({("e", "f"): 2, ("f", "e"): 2})
        return RMatrixDef("r2_plus", _t_over(L + M) + tail,
                          "trigonometric, symmetric tail variant")
    if name == "r2_minus":
        tail = _const({("e", "f"): 2, ("f", "e"): -2})
        return RMatrixDef("r2_minus", _t_over(L + M) + tail,
                          "trigonometric, antisymmetric tail variant")
    if name == "r3":
        tail = _const({("e", "f"): RatFn(2 * L), ("f", "e"): RatFn(-2 * M)})
        return RMatrixDef("r3", _t_over(L * M) + tail, "third structure")
    if name == "r1_stolin_const":
        tail = _const({("h", "e"): 2, ("e", "h"): -2})
        return RMatrixDef("r1_stolin_const", _t_over(1) + tail,
                          "rational with constant Borel tail")
    if name == "r1_stolin_lin":
        tail = _const({("h", "e"): RatFn(2 * M), ("e", "h"): RatFn(-2 * L)})
        return RMatrixDef("r1_stolin_lin", _t_over(1) + tail,
                          "rational with linear Borel tail")
    if name == "r3_stolin_const":
        tail = _const({("e", "f"): RatFn(2 * L), ("f", "e"): RatFn(2 * M),
                       ("h", "e"): 2, ("e", "h"): -2})
        return RMatrixDef("r3_stolin_const", _t_over(L * M) + tail,
                          "third structure with constant Borel tail, as printed")
    if name == "r3_stolin_lin":
        tail = _const({("e", "f"): RatFn(2 * L), ("f", "e"): RatFn(2 * M),
                       ("h", "e"): RatFn(2 * M), ("e", "h"): RatFn(-2 * L)})
        return RMatrixDef("r3_stolin_lin", _t_over(L * M) + tail,
                          "third structure with linear Borel tail, as printed")
    if name == "r3_stolin_const_derived":
        return RMatrixDef("r3_stolin_const_derived",
                          _negated_weyl_image("r1_stolin_lin"),
                          "negated inversion+Weyl image of the linear-tail matrix")
    if name == "r3_stolin_lin_derived":
        return RMatrixDef("r3_stolin_lin_derived",
                          _negated_weyl_image("r1_stolin_const"),
                          "negated inversion+Weyl image of the constant-tail matrix")
    raise UnknownName(name)


def _negated_weyl_image(name: str) -> Tensor2:
    return invert_weyl(make(name)).tensor.scale(ratfn(-1))


WEYL_WEIGHT = {"e": 1, "f": -1, "h": 0}


def invert_weyl(r: RMatrixDef) -> RMatrixDef:
    """Invert both spectral variables, then shift the root-vector degrees.

    Each coefficient is substituted l -> 1/l, m -> 1/m and multiplied by
    l^w(x) m^w(y), w(e) = +1, w(f) = -1, w(h) = 0 for legs x, y.
    """
    out = Tensor2()
    for (x, y), c in r.tensor.terms.items():
        cc = ratfn(c).substitute_many({"l": ("reciprocal",), "m": ("reciprocal",)})
        wx, wy = WEYL_WEIGHT[x], WEYL_WEIGHT[y]
        if wx:
            cc = cc * RatFn(MPoly.var("l", wx))
        if wy:
            cc = cc * RatFn(MPoly.var("m", wy))
        out = out + Tensor2({(x, y): cc})
    return RMatrixDef(f"invert_weyl({r.name})", out)


def tau_shift(r: RMatrixDef, shift=None) -> RMatrixDef:
    """Simultaneous substitution l -> l+E, m -> m+E (symbolic E by default)."""
    e = MPoly.var("E") if shift is None else MPoly.const(as_fraction(shift))
    out = Tensor2()
    for key, c in r.tensor.terms.items():
        cc = ratfn(c).substitute_many({"l": ("affine", 1, e),
                                       "m": ("affine", 1, e)})
        out = out + Tensor2({key: cc})
    return RMatrixDef(f"tau_shift({r.name})", out)


def stolin_middle(r3name: str) -> RMatrixDef:
    """The linear-in-shift coefficient of the shifted third structure: the
    member completing {r1-type, middle, r3-type} into a compatible triple."""
    ts = tau_shift(make(r3name))
    out = Tensor2()
    for key, c in ts.tensor.terms.items():
        r = ratfn(c)
        part = r.num.coeffs_in("E").get(1)
        if part is not None:
            out = out + Tensor2({key: RatFn(part, r.den)})
    return RMatrixDef(f"middle({r3name})", out)


def pencil(a1, a2, a3, r2_variant: str = "r2_minus") -> RMatrixDef:
    """a1*r1 + a2*r2 + a3*r3 with rational or symbolic coefficients."""
    def coeff(x):
        if isinstance(x, (MPoly, RatFn)):
            return ratfn(x)
        return ratfn(MPoly.const(as_fraction(x)))
    t = (make("r1").tensor.scale(coeff(a1))
         + make(r2_variant).tensor.scale(coeff(a2))
         + make("r3").tensor.scale(coeff(a3)))
    return RMatrixDef(f"pencil({a1},{a2},{a3};{r2_variant})", t)


def symbolic_pencil(r2_variant: str = "r2_minus") -> RMatrixDef:
    """The pencil with symbolic coefficients a1, a2, a3."""
    return pencil(MPoly.var("a1"), MPoly.var("a2"), MPoly.var("a3"), r2_variant)


def pencil_shift_action(a, shift=None):
    """The coefficient action of the shift: the quadratic a1 + 2 a2 x + a3 x^2
    pulled back along x -> x + E."""
    a1, a2, a3 = a
    e = MPoly.var("E") if shift is None else as_fraction(shift)
    return (a1 + 2 * e * a2 + e * e * a3, a2 + e * a3, a3)


def shift_invariant(a):
    """a2^2 - a1*a3, the discriminant-type invariant of the shift action."""
    a1, a2, a3 = a
    return a2 * a2 - a1 * a3
