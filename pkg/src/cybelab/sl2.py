"""sl2 structure constants, the trace form, small tensors, loop elements.

Basis is the Chevalley triple (e, f, h) with [h,e] = 2e, [h,f] = -2f,
[e,f] = h.  The bilinear form is the trace form of the 2-dimensional
representation: <h,h> = 2, <e,f> = <f,e> = 1, all other basis pairs 0.
Tensors of rank 2 and 3 carry coefficients in any ring of the tower
(Fraction, MPoly, RatFn); zero coefficients are never stored.
"""

from __future__ import annotations

from fractions import Fraction

from cybelab.poly import MPoly, as_fraction
from cybelab.ratfunc import RatFn, ratfn

BASIS = ("e", "f", "h")

# [x, y] = sum_z BRACKET[x, y][z] * z
BRACKET = {
    ("h", "e"): {"e": 2},
    ("e", "h"): {"e": -2},
    ("h", "f"): {"f": -2},
    ("f", "h"): {"f": 2},
    ("e", "f"): {"h": 1},
    ("f", "e"): {"h": -1},
}

# <x, y> in the fundamental representation
TRACE_FORM = {("h", "h"): 2, ("e", "f"): 1, ("f", "e"): 1}


class LegClash(ValueError):
    """Tensor legs overlap in more than one slot (or in none)."""


class NotInBminus(ValueError):
    """h-projection applied outside the lower Borel."""


class Sl2Vec:
    """An sl2 element with coefficients in an arbitrary ring of the tower."""

    __slots__ = ("comps",)

    def __init__(self, comps=None):
        self.comps = {}
        if comps:
            for x, c in comps.items():
                if _nonzero(c):
                    self.comps[x] = c

    @classmethod
    def basis(cls, x, ring=Fraction):
        return cls({x: ring(1)})

    def __getitem__(self, x):
        return self.comps.get(x, 0)

    def __add__(self, other):
        out = dict(self.comps)
        for x, c in other.comps.items():
            out[x] = out.get(x, 0) + c
        return Sl2Vec(out)

    def __sub__(self, other):
        out = dict(self.comps)
        for x, c in other.comps.items():
            out[x] = out.get(x, 0) - c
        return Sl2Vec(out)

    def __neg__(self):
        return Sl2Vec({x: -c for x, c in self.comps.items()})

    def scale(self, c):
        return Sl2Vec({x: c * v for x, v in self.comps.items()})

    def is_zero(self):
        return not self.comps

    def __eq__(self, other):
        keys = set(self.comps) | set(other.comps)
        return all(_eq(self[x], other[x]) for x in keys)

    def __repr__(self):
        if not self.comps:
            return "0"
        return " + ".join(f"({c})*{x}" for x, c in sorted(self.comps.items()))


def _nonzero(c):
    if isinstance(c, (int, Fraction)):
        return c != 0
    return bool(c)


def _eq(a, b):
    if isinstance(a, (int, Fraction)) and isinstance(b, (int, Fraction)):
        return a == b
    return ratfn(a) == ratfn(b)


def bracket(x: Sl2Vec, y: Sl2Vec) -> Sl2Vec:
    """Bilinear extension of the Chevalley relations."""
    out = {}
    for bx, cx in x.comps.items():
        for by, cy in y.comps.items():
            rule = BRACKET.get((bx, by))
            if rule:
                for bz, k in rule.items():
                    out[bz] = out.get(bz, 0) + cx * cy * k
    return Sl2Vec(out)


def trace_form(x: Sl2Vec, y: Sl2Vec):
    """<x, y> = tr(xy) in the fundamental representation."""
    out = 0
    for bx, cx in x.comps.items():
        for by, cy in y.comps.items():
            k = TRACE_FORM.get((bx, by))
            if k:
                out = out + cx * cy * k
    return out


class Tensor2:
    """Element of sl2 (x) sl2 with ring coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {}
        if terms:
            for key, c in terms.items():
                if _nonzero(c):
                    self.terms[key] = c

    def __add__(self, other):
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, 0) + c
        return Tensor2(out)

    def __sub__(self, other):
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, 0) - c
        return Tensor2(out)

    def __neg__(self):
        return Tensor2({k: -c for k, c in self.terms.items()})

    def scale(self, c):
        return Tensor2({k: c * v for k, v in self.terms.items()})

    def map_coeffs(self, fn):
        return Tensor2({k: fn(c) for k, c in self.terms.items()})

    def swap(self) -> "Tensor2":
        return Tensor2({(y, x): c for (x, y), c in self.terms.items()})

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        keys = set(self.terms) | set(other.terms)
        return all(_eq(self.terms.get(k, 0), other.terms.get(k, 0)) for k in keys)

    def __repr__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"({c})*{x}(x){y}"
                          for (x, y), c in sorted(self.terms.items()))


class Tensor3:
    """Element of sl2^(x)3 with ring coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {}
        if terms:
            for key, c in terms.items():
                if _nonzero(c):
                    self.terms[key] = c

    def __add__(self, other):
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, 0) + c
        return Tensor3(out)

    def __sub__(self, other):
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, 0) - c
        return Tensor3(out)

    def scale(self, c):
        return Tensor3({k: c * v for k, v in self.terms.items()})

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        keys = set(self.terms) | set(other.terms)
        return all(_eq(self.terms.get(k, 0), other.terms.get(k, 0)) for k in keys)

    def nonzero_witness(self):
        """A (basis triple, coefficient) pair proving non-vanishing, or None."""
        for k in sorted(self.terms):
            c = self.terms[k]
            if _nonzero(c):
                return k, c
        return None

    def __repr__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"({c})*{x}(x){y}(x){z}"
                          for (x, y, z), c in sorted(self.terms.items()))


def casimir() -> Tensor2:
    """The invariant tensor h(x)h + 2(e(x)f + f(x)e), dual to the trace form."""
    return Tensor2({("h", "h"): Fraction(1),
                    ("e", "f"): Fraction(2),
                    ("f", "e"): Fraction(2)})


def leg_bracket(a: Tensor2, legs_a, b: Tensor2, legs_b) -> Tensor3:
    """[a placed on legs_a, b placed on legs_b] inside sl2^(x)3.

    Exactly one leg must be shared; it receives the sl2 bracket of the
    operands' entries there, free legs pass through, coefficients multiply.
    """
    legs_a = tuple(legs_a)
    legs_b = tuple(legs_b)
    shared = set(legs_a) & set(legs_b)
    if len(shared) != 1 or len(set(legs_a)) != 2 or len(set(legs_b)) != 2:
        raise LegClash(f"invalid leg assignment {legs_a} vs {legs_b}")
    s = shared.pop()
    free_a = legs_a[0] if legs_a[1] == s else legs_a[1]
    free_b = legs_b[0] if legs_b[1] == s else legs_b[1]
    out = {}
    for (xa, ya), ca in a.terms.items():
        a_shared = xa if legs_a[0] == s else ya
        a_free = ya if legs_a[0] == s else xa
        for (xb, yb), cb in b.terms.items():
            b_shared = xb if legs_b[0] == s else yb
            b_free = yb if legs_b[0] == s else xb
            rule = BRACKET.get((a_shared, b_shared))
            if not rule:
                continue
            c = ca * cb
            for z, k in rule.items():
                slot = {s: z, free_a: a_free, free_b: b_free}
                key = (slot[1], slot[2], slot[3])
                out[key] = out.get(key, 0) + c * k
    return Tensor3(out)


class LoopElt:
    """sl2-valued Laurent polynomial: finite map degree -> Sl2Vec over Q."""

    __slots__ = ("parts",)

    def __init__(self, parts=None):
        self.parts = {}
        if parts:
            for d, v in parts.items():
                if not v.is_zero():
                    self.parts[d] = v

    @classmethod
    def monomial(cls, x: str, degree: int, coeff=1) -> "LoopElt":
        return cls({degree: Sl2Vec({x: as_fraction(coeff)})})

    def __add__(self, other):
        out = dict(self.parts)
        for d, v in other.parts.items():
            out[d] = out.get(d, Sl2Vec()) + v
        return LoopElt(out)

    def __sub__(self, other):
        out = dict(self.parts)
        for d, v in other.parts.items():
            out[d] = out.get(d, Sl2Vec()) - v
        return LoopElt(out)

    def __neg__(self):
        return LoopElt({d: -v for d, v in self.parts.items()})

    def scale(self, c):
        c = as_fraction(c)
        return LoopElt({d: v.scale(c) for d, v in self.parts.items()})

    def is_zero(self):
        return not self.parts

    def __eq__(self, other):
        keys = set(self.parts) | set(other.parts)
        return all(self.parts.get(d, Sl2Vec()) == other.parts.get(d, Sl2Vec())
                   for d in keys)

    def degrees(self):
        return sorted(self.parts)

    def coeff(self, degree: int) -> Sl2Vec:
        return self.parts.get(degree, Sl2Vec())

    def component(self, x: str) -> MPoly:
        """The x-component as a Laurent polynomial in l."""
        out = MPoly.zero()
        for d, v in self.parts.items():
            c = v[x]
            if c:
                out = out + MPoly.var("l", d) * MPoly.const(as_fraction(c))
        return out

    @classmethod
    def from_components(cls, e=None, f=None, h=None) -> "LoopElt":
        """Build from Laurent polynomials in l (one per basis direction)."""
        parts: dict[int, dict] = {}
        for x, poly in (("e", e), ("f", f), ("h", h)):
            if poly is None:
                continue
            for d, c in poly.coeffs_in("l").items():
                if not c.is_const():
                    raise ValueError("loop components must be Laurent in l only")
                q = c.const_value()
                if q:
                    parts.setdefault(d, {})[x] = q
        return cls({d: Sl2Vec(cs) for d, cs in parts.items()})

    def eval_at(self, q) -> Sl2Vec:
        """Evaluate the loop parameter at a nonzero rational."""
        q = as_fraction(q)
        out = Sl2Vec()
        for d, v in self.parts.items():
            out = out + v.scale(q ** d)
        return out

    def bracket(self, other: "LoopElt") -> "LoopElt":
        out = LoopElt()
        for d1, v1 in self.parts.items():
            for d2, v2 in other.parts.items():
                w = bracket(v1, v2)
                if not w.is_zero():
                    out = out + LoopElt({d1 + d2: w})
        return out

    def split_degrees(self, pred) -> "LoopElt":
        return LoopElt({d: v for d, v in self.parts.items() if pred(d)})

    def __repr__(self):
        if not self.parts:
            return "0"
        bits = []
        for d in sorted(self.parts):
            v = self.parts[d]
            for x, c in sorted(v.comps.items()):
                bits.append(f"({c})*{x}*l^{d}")
        return " + ".join(bits)


def pair_first_leg(T: Tensor2, A: LoopElt, weight: RatFn, var: str, point,
                   leg_order: str = "first-in-second-out",
                   sigma_inf: int = 1):
    """Contract one leg of T against A(var) under a residue weight.

    Returns an Sl2Vec whose coefficients are RatFn (constants when the
    surviving leg carries no other spectral variable).  leg_order selects
    which leg pairs with A; the residue at infinity uses sigma_inf.
    """
    out = Sl2Vec()
    a_parts = {x: RatFn(A.component(x)) for x in BASIS}
    if var != "l":
        a_parts = {x: p.rename_var("l", var) for x, p in a_parts.items()}
    for (x, y), c in T.terms.items():
        if leg_order == "first-in-second-out":
            pair_leg, out_leg = x, y
        elif leg_order == "second-in-first-out":
            pair_leg, out_leg = y, x
        else:
            raise ValueError(f"unknown leg order {leg_order!r}")
        acc = RatFn.zero()
        for z in BASIS:
            k = TRACE_FORM.get((pair_leg, z))
            if k:
                acc = acc + a_parts[z] * Fraction(k)
        if acc.is_zero():
            continue
        integrand = ratfn(c) * acc * weight
        res = integrand.residue(var, point, sigma_inf)
        if not res.is_zero():
            out = out + Sl2Vec({out_leg: res})
    return out
