"""Yang-Baxter and compatibility brackets over the exact backend."""

import random
from fractions import Fraction

from cybelab.brackets import (compat_matrix, cybe_bracket, evaluate_bracket,
                              mixed_schouten, pencil_cybe_symbolic)
from cybelab.catalog import RMatrixDef, make, stolin_middle, symbolic_pencil
from cybelab.poly import L, M, MPoly
from cybelab.ratfunc import RatFn, ratfn
from cybelab.sl2 import Tensor2

GENERIC_POINTS = [
    {"l": Fraction(5, 2), "m": Fraction(1, 3), "n": Fraction(-7, 4)},
    {"l": Fraction(9, 5), "m": Fraction(-2, 3), "n": Fraction(11, 7)},
    {"l": Fraction(13, 3), "m": Fraction(6, 5), "n": Fraction(-1, 2)},
    {"l": Fraction(-8, 3), "m": Fraction(3, 7), "n": Fraction(10, 9)},
    {"l": Fraction(17, 4), "m": Fraction(-5, 6), "n": Fraction(2, 11)},
]


def test_cybe_zero_for_solutions():
    for name in ("r1", "r2_minus", "r3", "r1_stolin_const", "r1_stolin_lin",
                 "r3_stolin_const_derived", "r3_stolin_lin_derived"):
        assert cybe_bracket(make(name)).is_zero, name


def test_cybe_sign_resolution():
    assert not cybe_bracket(make("r2_plus")).is_zero
    assert cybe_bracket(make("r2_minus")).is_zero


def test_cybe_printed_third_structure_fails_with_witness():
    for name in ("r3_stolin_const", "r3_stolin_lin"):
        res = cybe_bracket(make(name))
        assert not res.is_zero
        key, val = res.witness()
        assert not ratfn(val).is_zero()


def test_cybe_scaling():
    doubled = make("r1").scale(2)
    assert cybe_bracket(doubled).is_zero
    quad = cybe_bracket(make("r2_plus")).scale(4)
    direct = cybe_bracket(make("r2_plus").scale(2))
    assert (quad - direct).is_zero


def test_cybe_cartan_kernel_is_a_solution():
    # h(x)h/(l-m) satisfies the equation identically: every term brackets h
    # with h.  (It still fails compatibility with the rational structure.)
    hh = RMatrixDef("hh", Tensor2(
        {("h", "h"): RatFn.from_quotient(1, L - M)}))
    assert cybe_bracket(hh).is_zero


def test_cybe_non_solution_witness():
    ef = RMatrixDef("ef", Tensor2(
        {("e", "f"): RatFn.from_quotient(1, L - M)}))
    res = cybe_bracket(ef)
    assert not res.is_zero
    key, val = res.witness()
    assert not ratfn(val).is_zero()
    # cross-check through exact pointwise evaluation
    vals = evaluate_bracket(res, GENERIC_POINTS[0])
    assert any(v != 0 for v in vals.values())


def test_pointwise_backend_consistency():
    for name in ("r1", "r3", "r2_plus", "r2_minus"):
        res = cybe_bracket(make(name))
        for pt in GENERIC_POINTS:
            vals = evaluate_bracket(res, pt)
            assert all(v == 0 for v in vals.values()) == res.is_zero


def test_mixed_bracket_polarization():
    for name in ("r1", "r3", "r2_plus"):
        r = make(name)
        diff = mixed_schouten(r, r) - cybe_bracket(r).scale(2)
        assert diff.is_zero, name


def test_mixed_bracket_symmetry_and_bilinearity():
    rng = random.Random(99)
    pool = [make("r1"), make("r2_minus"), make("r3"), make("r1_stolin_const")]
    for _ in range(6):
        a, b, c = (rng.choice(pool) for _ in range(3))
        q = Fraction(rng.randint(-5, 5), rng.randint(1, 4))
        assert (mixed_schouten(a, b) - mixed_schouten(b, a)).is_zero
        lhs = mixed_schouten(a + b.scale(q), c)
        rhs = mixed_schouten(a, c)
        rhs = rhs.__class__(rhs.tensor + mixed_schouten(b, c).tensor.scale(ratfn(q)))
        assert (lhs - rhs).is_zero


def test_pairwise_compatibility_core():
    assert mixed_schouten(make("r1"), make("r2_minus")).is_zero
    assert mixed_schouten(make("r1"), make("r3")).is_zero
    assert mixed_schouten(make("r2_minus"), make("r3")).is_zero


def test_compat_matrix_and_negative_entry():
    core = [make("r1"), make("r2_minus"), make("r3")]
    assert all(all(row) for row in compat_matrix(core))
    bad = RMatrixDef("hh", Tensor2(
        {("h", "h"): RatFn.from_quotient(1, L - M)}))
    mat = compat_matrix([make("r1"), bad])
    assert mat[0][0] and not mat[0][1]


def test_compat_stolin_triples():
    for r1name, r3name in (("r1_stolin_const", "r3_stolin_lin_derived"),
                           ("r1_stolin_lin", "r3_stolin_const_derived")):
        triple = [make(r1name), stolin_middle(r3name), make(r3name)]
        assert all(all(row) for row in compat_matrix(triple))


def test_symbolic_pencil_identity():
    assert pencil_cybe_symbolic("r2_minus").is_zero
    res = pencil_cybe_symbolic("r2_plus")
    assert not res.is_zero
    key, val = res.witness()
    # witness carries the offending basis triple and a nonzero polynomial
    assert len(key) == 3 and not ratfn(val).is_zero()


def test_symbolic_pencil_specialization():
    res = pencil_cybe_symbolic("r2_minus")
    spec = {k: ratfn(v).subs_values({"a1": Fraction(1), "a2": Fraction(1),
                                     "a3": Fraction(1)})
            for k, v in res.tensor.terms.items()}
    assert all(v.is_zero() for v in spec.values())
