"""Residue pairings, band coefficients, and the Gram machinery."""

from fractions import Fraction

from cybelab.pairings import (B_POINT_INF, B_POINT_ZERO, ConventionProfile,
                              PairingSpec, b_coeffs, band_inverse_coeffs,
                              gram_inverse_check, pairing_eval,
                              printed_generator_band_finding)
from cybelab.poly import MPoly
from cybelab.sl2 import LoopElt

mono = LoopElt.monomial


def test_indexed_pairing_examples():
    assert pairing_eval(mono("e", -1), mono("f", 0),
                        PairingSpec(("indexed", 1))) == 1
    assert pairing_eval(mono("h", 0), mono("h", 0),
                        PairingSpec(("indexed", 2))) == 1
    assert pairing_eval(mono("e", 1), mono("f", 0),
                        PairingSpec(("indexed", 3))) == 1


def test_b_coefficients_monomial_family():
    b = b_coeffs((1, 0, 0), -4, 4, B_POINT_INF)
    assert b[-1] == 1 and all(v == 0 for n, v in b.items() if n != -1)
    b0 = b_coeffs((1, 0, 0), -4, 4, B_POINT_ZERO)
    assert b0 == b


def test_b_coefficients_anchor_family_both_points():
    binf = b_coeffs((1, 0, -1), -6, 6, B_POINT_INF)
    assert all(binf[n] == -1 for n in (1, 3, 5))
    assert all(binf[n] == 0 for n in (-5, -3, -1, 0, 2, 4, 6))
    bzero = b_coeffs((1, 0, -1), -6, 6, B_POINT_ZERO)
    assert all(bzero[n] == 1 for n in (-1, -3, -5))
    assert all(bzero[n] == 0 for n in (0, 1, 2, 3, 4, 5, 6))


def test_gram_inverse_interior_blocks():
    assert gram_inverse_check((1, 0, 0), 10, B_POINT_INF)["pass"]
    assert gram_inverse_check((1, 0, -1), 12, B_POINT_INF)["pass"]
    # the zero-point expansion is also a band inverse
    assert gram_inverse_check((1, 0, -1), 12, B_POINT_ZERO)["pass"]


def test_gram_inverse_symbolic():
    A = (MPoly.var("a1"), MPoly.var("a2"), MPoly.var("a3"))
    rep = gram_inverse_check(A, 6, B_POINT_INF, symbolic=True)
    assert rep["pass"] and rep["checked"] == 49


def test_band_inverse_reduces_to_printed_generator_when_a2_zero():
    formal = band_inverse_coeffs((1, 0, -1), -6, 6, B_POINT_INF)
    printed = b_coeffs((1, 0, -1), -6, 6, B_POINT_INF)
    for n in range(-6, 7):
        assert formal[n] == MPoly.const(printed[n])


def test_printed_generator_finding_has_witness():
    f = printed_generator_band_finding()
    assert f["mismatch"]
    assert "a2" in f["value"]


def test_general_pairing_matches_band():
    prof = ConventionProfile(sigma_inf=1, b_point=B_POINT_INF)
    for fam in ((1, 0, 0), (1, 0, -1)):
        b = b_coeffs(fam, -12, 12, B_POINT_INF)
        spec = PairingSpec(("general", fam), prof)
        for i in range(-6, 7):
            for j in range(-6, 7):
                assert pairing_eval(mono("e", i), mono("f", j), spec) == b[i + j]
                assert pairing_eval(mono("h", i), mono("h", j), spec) \
                    == 2 * b[i + j]
                assert pairing_eval(mono("e", i), mono("h", j), spec) == 0


def test_sigma_selection_on_rational_family():
    A, B = mono("e", -1), mono("f", 0)
    want = pairing_eval(A, B, PairingSpec(("indexed", 1)))
    plus = pairing_eval(A, B, PairingSpec(("general", (1, 0, 0)),
                                          ConventionProfile(sigma_inf=1)))
    minus = pairing_eval(A, B, PairingSpec(("general", (1, 0, 0)),
                                           ConventionProfile(sigma_inf=-1)))
    assert plus == want == 1 and minus == -1


def test_pairing_invariance_indexed():
    consts = [mono(x, 0) for x in ("e", "f", "h")]
    basis = [mono(x, d) for x in ("e", "f", "h") for d in range(-2, 3)]
    for idx in (1, 2, 3):
        spec = PairingSpec(("indexed", idx))
        for x in consts:
            for A in basis:
                for B in basis:
                    assert pairing_eval(x.bracket(A), B, spec) \
                        + pairing_eval(A, x.bracket(B), spec) == 0
