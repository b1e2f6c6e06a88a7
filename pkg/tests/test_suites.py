"""Suite-level behavior: statuses, witnesses, and the honest failures."""

import pytest

from cybelab.report import FAIL, PASS
from cybelab.suites import Config, ConfigError, run_suite


def by_id(rep):
    return {c.check: c for c in rep.checks}


def test_unknown_suite():
    with pytest.raises(ConfigError):
        run_suite("unknown", Config())


def test_cybe_suite_statuses():
    rep = run_suite("cybe", Config())
    checks = by_id(rep)
    assert checks["cybe.r1"].status == PASS
    assert checks["cybe.r3"].status == PASS
    assert checks["cybe.r2-sign-resolution"].status == PASS
    assert checks["cybe.r2-sign-resolution"].fields["solving_variant"] == "r2_minus"
    # printed third-structure forms fail with witnesses attached
    for name in ("cybe.r3_stolin_const", "cybe.r3_stolin_lin"):
        assert checks[name].status == FAIL
        assert "witness_value" in checks[name].fields
    assert checks["cybe.r3_stolin_const_derived"].status == PASS
    assert rep.exit_code() == 1


def test_compat_suite_all_pass():
    rep = run_suite("compat", Config())
    assert rep.all_pass and rep.exit_code() == 0


def test_shift_suite_all_pass():
    rep = run_suite("shift", Config())
    assert rep.all_pass


def test_stolin_suite_documents_printed_mismatch():
    rep = run_suite("stolin", Config())
    checks = by_id(rep)
    assert checks["stolin.cybe.r3_stolin_lin_derived"].status == PASS
    assert checks["stolin.cybe.r3_stolin_lin"].status == FAIL
    assert checks["stolin.printed-vs-derived.r3_stolin_lin"].status == PASS
    assert "f(x)e" in checks["stolin.printed-vs-derived.r3_stolin_lin"] \
        .fields["differing_components"]
    assert checks["stolin.weyl-image.r1_stolin_const"].fields[
        "sign_vs_printed"] == "none"


def test_lemma3_suite_small_window():
    rep = run_suite("lemma3", Config(window=4))
    assert rep.all_pass, [c.check for c in rep.checks if c.status == FAIL]


def test_gram_suite():
    rep = run_suite("gram", Config())
    assert rep.all_pass
    checks = by_id(rep)
    assert checks["gram.printed-generator-finding"].fields["holds_when"] \
        == "a2 = 0"


def test_calibrate_suite_findings():
    rep = run_suite("calibrate", Config())
    checks = by_id(rep)
    assert checks["calibrate.unique-profile"].status == PASS
    assert checks["calibrate.fix.f.l^0"].status == FAIL
    assert checks["calibrate.fix.f.l^0"].fields["image"] == "(-1)*f*l^0"
    assert checks["calibrate.fix.e.l^0"].status == PASS
    assert checks["calibrate.involution"].status == PASS
    assert checks["calibrate.stable-formula-comparison"].status == PASS
    assert rep.profile == "sigma+/infinity/second-in-first-out"


def test_manin_suite_structure():
    rep = run_suite("manin", Config(window=6))
    checks = by_id(rep)
    for cid in ("manin.closure", "manin.isotropy-positive-half",
                "manin.isotropy-lower-half", "manin.duality-rank",
                "manin.true-eigenbasis", "manin.true-eigenspaces-closed",
                "manin.true-eigenspaces-isotropic",
                "manin.pairing-invariance", "manin.minus-one-conditions"):
        assert checks[cid].status == PASS, cid
    for cid in ("manin.lower-half-fixed-f-zero", "manin.spanning-negated",
                "manin.stable-plus-dimension",
                "manin.decompose.random-agreement"):
        assert checks[cid].status == FAIL, cid
    assert str(checks["manin.decompose.random-agreement"].fields["agree"]) == "34"
    assert "witness_input" in checks["manin.decompose.random-agreement"].fields


def test_explore_suite_is_labeled_evidence():
    rep = run_suite("explore-z", Config())
    checks = by_id(rep)
    assert checks["explore-z.conjecture-evidence"].fields["evidence"] == "true"
    assert "not asserted" in checks["explore-z.conjecture-evidence"] \
        .fields["note"]
    assert rep.all_pass


def test_reports_are_deterministic():
    a = run_suite("decompose", Config(seed=123))
    b = run_suite("decompose", Config(seed=123))
    assert a.serialize(include_timing=False) == b.serialize(include_timing=False)
    c = run_suite("decompose", Config(seed=124))
    assert c.serialize(include_timing=False) != a.serialize(include_timing=False)
