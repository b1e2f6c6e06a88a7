"""The closed denominator-atom registry.

Rational functions keep their denominators as multisets of atoms: a fixed
family of irreducible factors (spectral-variable differences, linear shifts)
plus registered density quadratics.  Keeping the family closed under the
catalog's substitutions is what lets cancellation run on exact divisibility
tests instead of general multivariate factorization.
"""

from __future__ import annotations

from fractions import Fraction

from cybelab.poly import MPoly, VARS, as_fraction

LOOP_VARS = ("l", "m", "n")


class AtomEscape(ValueError):
    """A denominator factor fell outside the registrable atom family."""


class Atom:
    """A registered irreducible factor or named density."""

    __slots__ = ("key", "poly", "kind", "name")

    def __init__(self, poly: MPoly, kind: str, name: str):
        self.poly = poly
        self.kind = kind
        self.name = name
        self.key = frozenset(poly.terms.items())

    def __repr__(self):
        return f"Atom({self.name})"


_registry: dict[frozenset, Atom] = {}


def _normalize(poly: MPoly) -> tuple[Fraction, MPoly]:
    content, prim = poly.content_and_primitive()
    if content == 0:
        raise AtomEscape("zero cannot be an atom")
    return content, prim


def _kind_of(prim: MPoly) -> str | None:
    """Classify a primitive polynomial against the registrable shapes."""
    used = prim.variables()
    loop_used = [v for v in LOOP_VARS if v in used]
    if len(loop_used) == 2 and len(used) == 2:
        v, w = loop_used
        if prim == MPoly.var(v) - MPoly.var(w) or prim == MPoly.var(w) - MPoly.var(v):
            return "difference"
    if len(loop_used) == 1:
        v = loop_used[0]
        lo, hi = prim.degree_range(v)
        if lo < 0:
            return None
        rest = used - {v}
        if hi == 1 and rest <= {"E"}:
            # v + c, or v + E + c (image of a linear atom under the E-shift)
            lead = prim.coeff_of(v, 1)
            if lead.is_const() and prim.coeff_of(v, 0).degree_range("E")[1] <= 1:
                return "linear"
        if hi == 2 and not rest:
            return "density"  # fixed rational density q1 + q2 v + q3 v^2
        if hi == 2 and rest <= {"a1", "a2", "a3"}:
            return "density"  # symbolic density a1 + 2 a2 v + a3 v^2
    if len(loop_used) == 1 and len(used) == 1:
        v = loop_used[0]
        lo, hi = prim.degree_range(v)
        if lo >= 0 and hi == 1:
            return "linear"
    return None


def get_atom(poly: MPoly) -> tuple[Fraction, Atom]:
    """Resolve a polynomial to (unit content, Atom), registering on demand.

    Raises AtomEscape when the primitive part has no registrable shape.
    """
    content, prim = _normalize(poly)
    key = frozenset(prim.terms.items())
    atom = _registry.get(key)
    if atom is None:
        kind = _kind_of(prim)
        if kind is None:
            raise AtomEscape(f"not a registrable atom: {prim}")
        atom = Atom(prim, kind, str(prim))
        _registry[key] = atom
    return content, atom


def register_density(poly: MPoly, name: str | None = None) -> Atom:
    """Explicitly register a density polynomial as an atom."""
    content, prim = _normalize(poly)
    if content != 1:
        raise AtomEscape("densities are registered in primitive form")
    key = frozenset(prim.terms.items())
    atom = _registry.get(key)
    if atom is None:
        atom = Atom(prim, "density", name or str(prim))
        _registry[key] = atom
    return atom


def density_poly(a1, a2, a3, var: str = "l") -> MPoly:
    """The pairing density  a1 + 2 a2 var + a3 var^2  at fixed rationals."""
    v = MPoly.var(var)
    return (MPoly.const(as_fraction(a1))
            + MPoly.const(2 * as_fraction(a2)) * v
            + MPoly.const(as_fraction(a3)) * v * v)


def symbolic_density(var: str = "l") -> MPoly:
    """a1 + 2 a2 var + a3 var^2 with symbolic pencil coefficients."""
    v = MPoly.var(var)
    return MPoly.var("a1") + 2 * MPoly.var("a2") * v + MPoly.var("a3") * v * v
