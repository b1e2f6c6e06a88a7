"""Rational-function layer: canonical form, arithmetic laws, substitutions."""

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from cybelab.atoms import AtomEscape
from cybelab.poly import E, L, M, MPoly, N
from cybelab.ratfunc import RatFn, ratfn


def q(num, den=1):
    return Fraction(num, den)


def test_sum_of_opposite_simple_poles_vanishes():
    f = RatFn.from_quotient(1, L - M)
    g = RatFn.from_quotient(1, M - L)
    assert (f + g).is_zero()


def test_denominator_cancellation():
    h = RatFn.from_quotient(L + M, L - M) * RatFn(L - M)
    assert h.is_poly() and h.as_poly() == L + M


def test_difference_collapses_to_polynomial():
    r = RatFn.from_quotient(L * M, L - M) - RatFn.from_quotient(M * M, L - M)
    assert r.is_poly() and r.as_poly() == M


def test_canonical_idempotence():
    f = RatFn.from_quotient((L - M) * (L + M), (L - M) * (L - M))
    again = RatFn(f.num, f.den)
    assert f.num == again.num and f.den == again.den
    assert len(f.den) == 1 and f.den[0][1] == 1


def test_equality_is_cross_multiplied():
    a = RatFn.from_quotient(L * L - M * M, L - M)
    b = RatFn(L + M)
    assert a == b


# a small pool of catalog-style sub-expressions for the field-law checks
def _pool():
    return [
        RatFn.from_quotient(1, L - M),
        RatFn.from_quotient(L + M, L - M),
        RatFn.from_quotient(L * M, L - M),
        RatFn(L * M - 1),
        RatFn(MPoly.var("l", -1)),
        RatFn.from_quotient(M, (L - M)) * RatFn.from_quotient(1, M - N),
    ]


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 5), st.integers(0, 5), st.integers(0, 5),
       st.fractions(min_value=-3, max_value=3))
def test_field_laws(i, j, k, c):
    pool = _pool()
    f, g, h = pool[i], pool[j], pool[k]
    assert (f + g) + h == f + (g + h)
    assert f + g == g + f
    assert (f * g) * h == f * (g * h)
    assert f * g == g * f
    assert f * (g + h) == f * g + f * h
    assert f * ratfn(c) + g * ratfn(c) == (f + g) * ratfn(c)


def test_substitute_reciprocal_scalar():
    g = RatFn(MPoly.var("l", -1)).substitute("l", ("reciprocal",))
    assert g.is_poly() and g.as_poly() == L


def test_substitute_shift_expands():
    t = RatFn.from_quotient(L * M, L - M).substitute_many(
        {"l": ("affine", 1, E), "m": ("affine", 1, E)})
    assert t == RatFn.from_quotient(L * M + E * (L + M) + E * E, L - M)


def test_substitute_shift_invariant_difference():
    f = RatFn.from_quotient(1, L - M)
    assert f.substitute_many({"l": ("affine", 1, E),
                              "m": ("affine", 1, E)}) == f


def test_atom_escape_on_unregistrable_image():
    f = RatFn.from_quotient(1, L - M)
    with pytest.raises(AtomEscape):
        # shifting only one spectral variable leaves the closed atom family
        f.substitute("l", ("affine", 1, E))


def test_inverse_requires_atom_factored_numerator():
    f = RatFn(L * L - M)  # not a registrable shape
    with pytest.raises(AtomEscape):
        f.inverse()


def test_eval_rational_matches_structure():
    f = RatFn.from_quotient(L + M, L - M)
    v = f.eval_rational({"l": q(5, 2), "m": q(1, 2)})
    assert v == q(3, 2)  # (5/2 + 1/2) / (5/2 - 1/2)
