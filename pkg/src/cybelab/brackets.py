"""Yang-Baxter bracket and the mixed compatibility bracket.

Tensors enter with legs in variables (l, m); the three-leg expressions use
(l, m) for legs 1-2, (l, n) for 1-3 and (m, n) for 2-3, with the standard
three-term reading [r12, r13] + [r12, r23] + [r13, r23].  Zero testing is
exact rational-function equality, never numeric.
"""

from __future__ import annotations

from fractions import Fraction

from cybelab.catalog import RMatrixDef, symbolic_pencil
from cybelab.ratfunc import RatFn, ratfn
from cybelab.sl2 import Tensor2, Tensor3, leg_bracket


class Bracket3Result:
    """A three-leg tensor plus its exact zero flag."""

    __slots__ = ("tensor",)

    def __init__(self, tensor: Tensor3):
        self.tensor = tensor

    @property
    def is_zero(self) -> bool:
        return all(not c for c in self.tensor.terms.values())

    def witness(self):
        for key in sorted(self.tensor.terms):
            c = self.tensor.terms[key]
            if c:
                return key, c
        return None

    def scale(self, c):
        return Bracket3Result(self.tensor.scale(ratfn(c)))

    def __sub__(self, other):
        return Bracket3Result(self.tensor - other.tensor)

    def __repr__(self):
        return f"Bracket3Result(zero={self.is_zero})"


def _legs12(t: Tensor2) -> Tensor2:
    return t


def _legs13(t: Tensor2) -> Tensor2:
    return t.map_coeffs(lambda c: ratfn(c).rename_var("m", "n"))


def _legs23(t: Tensor2) -> Tensor2:
    return t.map_coeffs(lambda c: ratfn(c).rename_var("m", "n").rename_var("l", "m"))


def cybe_bracket(r: RMatrixDef) -> Bracket3Result:
    """[r12(l,m), r13(l,n)] + [r12(l,m), r23(m,n)] + [r13(l,n), r23(m,n)]."""
    t12, t13, t23 = _legs12(r.tensor), _legs13(r.tensor), _legs23(r.tensor)
    acc = (leg_bracket(t12, (1, 2), t13, (1, 3))
           + leg_bracket(t12, (1, 2), t23, (2, 3))
           + leg_bracket(t13, (1, 3), t23, (2, 3)))
    return Bracket3Result(acc)


def mixed_schouten(a: RMatrixDef, b: RMatrixDef) -> Bracket3Result:
    """The symmetric compatibility bracket: [a12,b13] + [b12,a13] + the two
    remaining slot pairs, symmetrized.  mixed_schouten(r, r) = 2 cybe(r)."""
    a12, a13, a23 = _legs12(a.tensor), _legs13(a.tensor), _legs23(a.tensor)
    b12, b13, b23 = _legs12(b.tensor), _legs13(b.tensor), _legs23(b.tensor)
    acc = (leg_bracket(a12, (1, 2), b13, (1, 3))
           + leg_bracket(b12, (1, 2), a13, (1, 3))
           + leg_bracket(a12, (1, 2), b23, (2, 3))
           + leg_bracket(b12, (1, 2), a23, (2, 3))
           + leg_bracket(a13, (1, 3), b23, (2, 3))
           + leg_bracket(b13, (1, 3), a23, (2, 3)))
    return Bracket3Result(acc)


def pencil_cybe_symbolic(r2_variant: str = "r2_minus") -> Bracket3Result:
    """cybe(a1 r1 + a2 r2 + a3 r3) as a polynomial identity in a1, a2, a3."""
    return cybe_bracket(symbolic_pencil(r2_variant))


def compat_matrix(rs) -> list[list[bool]]:
    """Pairwise vanishing of the mixed bracket."""
    out = []
    for a in rs:
        row = []
        for b in rs:
            row.append(mixed_schouten(a, b).is_zero)
        out.append(row)
    return out


def evaluate_bracket(res: Bracket3Result, points) -> dict:
    """Exact evaluation of every coefficient at rational (l, m, n) points.

    Used by the cross-backend consistency oracle: the bracket vanishes as a
    rational function iff it vanishes at generic points avoiding the atoms.
    """
    out = {}
    for key, c in res.tensor.terms.items():
        out[key] = ratfn(c).eval_rational(points)
    return out
