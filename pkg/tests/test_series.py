"""Series windows: expansion conventions, residues, validity bookkeeping."""

from fractions import Fraction

import pytest

from cybelab.poly import L, M, MPoly
from cybelab.ratfunc import RatFn
from cybelab.series import INFINITY, ZERO_POINT, WindowTooNarrow, expand_ratfn


def test_descending_expansion_of_simple_pole():
    # 1/(l-m) at l = infinity: m^3 l^-4 + m^2 l^-3 + m l^-2 + l^-1
    f = RatFn.from_quotient(1, L - M)
    w = f.expand("l", INFINITY, -4, -1)
    for k in range(-4, 0):
        assert w.coeff(k) == MPoly.var("m", -k - 1)
    assert w.coeff(0) == MPoly.zero()  # above the support bound


def test_geometric_expansion_at_zero():
    d = RatFn.from_quotient(1, MPoly.const(1) - L * L)
    w = d.expand("l", ZERO_POINT, 0, 4)
    assert [str(w.coeff(k)) for k in range(5)] == ["1", "0", "1", "0", "1"]


def test_reciprocal_density_is_exact_monomial():
    # (a1 l^-1 + a2 + a3 l)^-1 at (1,0,0) is exactly l
    gen = MPoly.var("l", -1)
    f = RatFn(gen).inverse()
    w = f.expand("l", INFINITY, -3, 3)
    assert w.coeff(1) == MPoly.const(1)
    assert all(w.coeff(k).is_zero() for k in (-3, -2, -1, 0, 2, 3))


def test_residues_at_finite_points():
    assert RatFn(MPoly.var("l", -1)).residue("l", 0) == RatFn(1)
    f = RatFn.from_quotient(1, L - MPoly.const(1))
    assert f.residue("l", 1) == RatFn(1)


def test_residue_at_infinity_sign_convention():
    # (l - 1/l)/(1 - l^2) simplifies to -1/l; res_inf = sigma * (coeff of 1/l)
    intg = RatFn(L - MPoly.var("l", -1)) * RatFn.from_quotient(
        1, MPoly.const(1) - L * L)
    assert intg == RatFn(-MPoly.var("l", -1))
    assert intg.residue("l", INFINITY, -1) == RatFn(1)
    assert intg.residue("l", INFINITY, +1) == RatFn(-1)


def test_residue_theorem_all_poles():
    # for every 1-form in the isotropy computation: sum of finite residues
    # plus the classical residue at infinity vanishes
    dens = RatFn.from_quotient(1, MPoly.const(1) - L * L)
    forms = [
        dens,
        RatFn(L) * dens,
        RatFn(L * L) * dens,
        RatFn(MPoly.var("l", -1)) * dens,
        RatFn(L - MPoly.var("l", -1)) * dens,
        RatFn(MPoly.var("l", -2)) * dens,
    ]
    for f in forms:
        total = (f.residue("l", 1) + f.residue("l", -1) + f.residue("l", 0)
                 + f.residue("l", INFINITY, -1))
        assert total.is_zero(), f"residue sum nonzero for {f}"


def test_expansion_correctness_property():
    # multiplying the window back by the denominator recovers the numerator
    # on the reliable part of the window
    cases = [RatFn.from_quotient(1, L - M),
             RatFn.from_quotient(L + M, L - M),
             RatFn.from_quotient(L * M, (L - M)) *
             RatFn.from_quotient(1, MPoly.const(1) - L * L)]
    for f in cases:
        w = f.expand("l", INFINITY, -8, 2)
        back = w.mul_poly(f.den_poly())
        for k in range(back.lo, back.hi + 1):
            assert back.coeff(k) == f.num.coeff_of("l", k)


def test_window_too_narrow():
    f = RatFn.from_quotient(1, L - M)
    w = f.expand("l", INFINITY, -3, -1)
    with pytest.raises(WindowTooNarrow):
        w.coeff(-4)


def test_window_product_validity():
    f = RatFn.from_quotient(1, L - M)
    w = f.expand("l", INFINITY, -6, -1)
    prod = w * w
    direct = (f * f).expand("l", INFINITY, prod.lo, prod.hi)
    for k in range(prod.lo, prod.hi + 1):
        assert prod.coeff(k) == direct.coeff(k)
