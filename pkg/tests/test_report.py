"""Report schema: round-trips, determinism, exit codes."""

from cybelab.report import (EXIT_FAIL, EXIT_OK, Check, Report, _quote,
                            _split_record)


def sample():
    rep = Report(suite="demo", profile="sigma+/infinity/second-in-first-out",
                 seed=7, window=5)
    rep.add("a.first", True, value="12/5")
    rep.add("b.second", False, witness='tridegree (1, -2, 0) value "x" e(x)f')
    rep.add_skip("c.third", "not configured")
    rep.elapsed_ms = 12
    return rep


def test_serialize_parse_round_trip():
    rep = sample()
    text = rep.serialize()
    back = Report.parse(text)
    assert back.serialize() == text
    assert back.suite == "demo" and back.seed == 7 and back.window == 5
    assert [c.check for c in sorted(back.checks, key=lambda c: c.check)] \
        == ["a.first", "b.second", "c.third"]
    assert back.checks[1].fields["witness"] \
        == 'tridegree (1, -2, 0) value "x" e(x)f'


def test_determinism_modulo_timing():
    a = sample()
    b = sample()
    b.elapsed_ms = 9999
    assert a.serialize(include_timing=False) == b.serialize(include_timing=False)
    assert a.serialize() != b.serialize()


def test_quoting_round_trip():
    values = ["plain", "with space", 'quo"te', "back\\slash", "", "a=b c=d"]
    for v in values:
        rec = _split_record(f"check=x status=pass value={_quote(v)}")
        assert rec["value"] == v


def test_exit_codes():
    rep = Report(suite="s")
    rep.add("only", True)
    assert rep.exit_code() == EXIT_OK
    rep.add("bad", False, witness="w")
    assert rep.exit_code() == EXIT_FAIL
    assert rep.counts["fail"] == 1


def test_ordering_is_by_check_id():
    rep = Report(suite="s")
    rep.add("z.last", True)
    rep.add("a.first", True)
    lines = rep.serialize().splitlines()
    za = [i for i, ln in enumerate(lines) if ln.startswith("check=")]
    assert lines[za[0]].startswith("check=a.first")
