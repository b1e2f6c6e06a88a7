"""Acceptance criteria, one test per criterion (sub-criteria split out where
a printed claim is refuted by the computation).

Every check is exact: tolerances are zero, windows are the stated ones.
Three sub-criteria assert printed claims that the engine refutes with
concrete witnesses; they are implemented faithfully and fail honestly:

  * criterion 1, printed third-structure matrices (their tails are
    misprints; the derived matrices pass, see the stolin suite);
  * criterion 7, the fix of f at degree 0 (the kernel's f-sector changes
    sign across the degree-0 boundary under every convention profile);
  * criterion 8, two-route decomposition agreement on random inputs
    (same boundary: the eigenprojections split g along the corrected
    triple, the basis solve along the documented one).

The analysis lives in the calibration certificate, the suite reports, and
the repository notes.
"""

import random
from fractions import Fraction

import pytest

from conftest import ACCEPTANCE_LINES
from cybelab import brackets, catalog, completed, dsl, manin, pairings
from cybelab.poly import MPoly
from cybelab.ratfunc import ratfn
from cybelab.report import Report
from cybelab.sl2 import LoopElt
from cybelab.suites import Config, run_suite

mono = LoopElt.monomial


def record(criterion: str, ok: bool, note: str = ""):
    status = "PASS" if ok else "FAIL"
    suffix = f" ({note})" if note else ""
    ACCEPTANCE_LINES.append(f"ACCEPTANCE {criterion}: {status}{suffix}")
    assert ok, f"criterion {criterion} failed{suffix}"


@pytest.fixture(scope="module")
def profile():
    cert = manin.calibrate_conventions()
    return cert


def test_criterion_01_cybe_solutions():
    ok = all(brackets.cybe_bracket(catalog.make(n)).is_zero
             for n in ("r1", "r3", "r1_stolin_const", "r1_stolin_lin",
                       "r3_stolin_const_derived", "r3_stolin_lin_derived"))
    variants = [n for n in ("r2_plus", "r2_minus")
                if brackets.cybe_bracket(catalog.make(n)).is_zero]
    record("1 (solutions + sign resolution)",
           ok and variants == ["r2_minus"],
           f"solving trigonometric variant: {variants}")


def test_criterion_01_printed_third_structure_matrices():
    bad = {}
    for n in ("r3_stolin_const", "r3_stolin_lin"):
        res = brackets.cybe_bracket(catalog.make(n))
        if not res.is_zero:
            bad[n] = res.witness()
    record("1 (printed third-structure matrices)", not bad,
           f"printed forms fail with witnesses {bad}; derived forms pass")


def test_criterion_02_compatibility():
    core = [catalog.make("r1"), catalog.make("r2_minus"), catalog.make("r3")]
    ok = all(all(row) for row in brackets.compat_matrix(core))
    for r1name, r3name in (("r1_stolin_const", "r3_stolin_lin_derived"),
                           ("r1_stolin_lin", "r3_stolin_const_derived")):
        triple = [catalog.make(r1name), catalog.stolin_middle(r3name),
                  catalog.make(r3name)]
        ok = ok and all(all(row) for row in brackets.compat_matrix(triple))
    record("2", ok)


def test_criterion_03_symbolic_pencil():
    import time
    t0 = time.monotonic()
    res = brackets.pencil_cybe_symbolic("r2_minus")
    elapsed = time.monotonic() - t0
    record("3", res.is_zero and elapsed <= 10.0,
           f"{elapsed:.2f}s (limit 10s)")


def test_criterion_04_transform_identities():
    E = MPoly.var("E")
    r1, r3 = catalog.make("r1"), catalog.make("r3")
    ok = catalog.invert_weyl(r1).tensor == r3.tensor.scale(ratfn(-1))
    want = (r3.tensor + catalog.make("r2_minus").tensor.scale(ratfn(E))
            + r1.tensor.scale(ratfn(E * E)))
    ok = ok and catalog.tau_shift(r3).tensor == want
    a = (MPoly.var("a1"), MPoly.var("a2"), MPoly.var("a3"))
    ok = ok and catalog.shift_invariant(catalog.pencil_shift_action(a)) \
        == catalog.shift_invariant(a)
    record("4", ok)


def test_criterion_05_completed_identities():
    ok = completed.lemma_identity_check(completed.symbolic_coeffs(), 5)["equal"]
    for fam in ((Fraction(1), Fraction(0), Fraction(-1)),
                (Fraction(0), Fraction(0), Fraction(1)),
                (Fraction(1), Fraction(1), Fraction(1))):
        ok = ok and completed.lemma_identity_check(fam, 8)["equal"]
    for kind in ("rational-shape", "inverse-shape"):
        rep = completed.cyclic_identity_check(kind, 6)
        ok = ok and rep["equal"] and rep["single_term_nonzero"]
    record("5", ok)


def test_criterion_06_gram(profile):
    prof = profile["selected"]
    ok = True
    for fam in ((1, 0, 0), (1, 0, -1)):
        b = pairings.b_coeffs(fam, -12, 12, prof.b_point)
        spec = pairings.PairingSpec(("general", fam), prof)
        for i in range(-6, 7):
            for j in range(-6, 7):
                ok = ok and pairings.pairing_eval(
                    mono("e", i), mono("f", j), spec) == b[i + j]
    for fam, N in (((1, 0, 0), 10), ((1, 0, -1), 12)):
        ok = ok and pairings.gram_inverse_check(fam, N, prof.b_point)["pass"]
    record("6", ok)


def test_criterion_07_calibration_core(profile):
    prof = profile["selected"]
    ok = prof is not None
    # numbers of full passes and near-misses documented in the certificate
    fixes = all(manin.r_operator(mono(x, -k), manin.ANCHOR_FAMILY, prof)
                == mono(x, -k)
                for x in ("e", "h") for k in range(0, 7))
    fixes = fixes and all(
        manin.r_operator(mono("f", -k), manin.ANCHOR_FAMILY, prof)
        == mono("f", -k) for k in range(1, 7))
    negations = all(manin.r_operator(mono("f", k), manin.ANCHOR_FAMILY, prof)
                    == -mono("f", k) for k in range(1, 7))
    involution = all(
        manin.r_operator(manin.r_operator(mono(x, d), manin.ANCHOR_FAMILY,
                                          prof), manin.ANCHOR_FAMILY, prof)
        == mono(x, d)
        for x in ("e", "f", "h") for d in range(-8, 9))
    comp = manin.stable_comparison(8, manin.ANCHOR_FAMILY, prof)
    named = bool(comp["agree"]) and all(
        f.get("name") == "stable-formula-disagreement"
        for f in comp["findings"])
    record("7 (profile, 20/21 fixes, negations, involution, "
           "explicit-formula findings)",
           ok and fixes and negations and involution and named,
           f"findings: {[f['input'] for f in comp['findings']]}")


def test_criterion_07_fixes_f_at_degree_zero(profile):
    prof = profile["selected"]
    image = manin.r_operator(mono("f", 0), manin.ANCHOR_FAMILY, prof)
    record("7 (fix of f at degree 0)", image == mono("f", 0),
           f"operator image is {image!r} under every profile "
           "(see calibration certificate findings)")


def test_criterion_08_manin_triple_core(profile):
    prof = profile["selected"]
    N = 6
    fam = manin.gplus_spanning(N)
    ok = all(manin.gplus_membership(v)[0] for v in fam)
    for i in range(len(fam)):
        for j in range(i + 1, len(fam)):
            w = fam[i].bracket(fam[j])
            if not w.is_zero():
                ok = ok and manin.gplus_membership(w)[0]
    spec = pairings.PairingSpec(("general", (1, 0, -1)), prof)
    ok = ok and manin.isotropy_check(fam, spec)["pass"]
    ok = ok and manin.isotropy_check(manin.lower_basis(N), spec)["pass"]
    ok = ok and manin.duality_rank(N, spec)["full"]
    res = manin.decompose(mono("h", 2), 8, manin.ANCHOR_FAMILY, prof)
    ok = ok and res["plus_solve"] == mono("h", 2) - mono("h", 0)
    record("8 (closure, isotropy, duality, example decompositions)", ok)


def test_criterion_08_decompose_two_route_agreement(profile):
    prof = profile["selected"]
    rng = random.Random(20240817)
    agree = 0
    trials = 50
    witness = None
    for _ in range(trials):
        A = LoopElt()
        for _ in range(4):
            x = rng.choice(["e", "f", "h"])
            d = rng.randint(-6, 6)
            c = Fraction(rng.randint(-9, 9), rng.randint(1, 5))
            if c:
                A = A + mono(x, d, c)
        res = manin.decompose(A, 9, manin.ANCHOR_FAMILY, prof,
                              require_agreement=False)
        if res["agree"]:
            agree += 1
        elif witness is None:
            witness = repr(A)
    record("8 (two-route decomposition agreement)", agree == trials,
           f"{agree}/{trials} agree; first disagreeing input {witness}")


def test_criterion_09_homogeneity():
    W = (-8, 8, -8, 8)
    ok = all(completed.homogeneity_degree(completed.build_rbar(i, W)) == i - 2
             and completed.homogeneity_degree(completed.build_t(i, W)) == i - 2
             for i in (1, 2, 3))
    record("9", ok)


def test_criterion_10_tooling():
    ok = True
    for name, text in dsl.CATALOG_EXPRESSIONS.items():
        ok = ok and dsl.eval_text(text) == catalog.make(name).tensor
        printed = dsl.pretty(dsl.parse_expr(text))
        ok = ok and dsl.pretty(dsl.parse_expr(printed)) == printed
    rep1 = run_suite("shift", Config(seed=5))
    rep2 = run_suite("shift", Config(seed=5))
    ok = ok and rep1.serialize(include_timing=False) \
        == rep2.serialize(include_timing=False)
    back = Report.parse(rep1.serialize())
    ok = ok and back.serialize() == rep1.serialize()
    ok = ok and rep1.exit_code() == 0
    ok = ok and run_suite("cybe", Config()).exit_code() == 1
    try:
        run_suite("nope", Config())
        ok = False
    except Exception:
        pass
    record("10", ok)
