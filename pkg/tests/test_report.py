import json

import pytest

from kuelsh.report import SCHEMA, AnalysisReport, analyze, parse, render

from conftest import q2b, q3a, truncated_poly


@pytest.fixture(scope="module")
def rep():
    return analyze(q2b("gf:2", 1, 3))


def test_json_roundtrip(rep):
    out = render(rep, "json")
    assert render(parse(out), "json") == out
    assert AnalysisReport.from_dict(parse(out)) == rep


def test_schema_and_key_values(rep):
    d = parse(render(rep, "json"))
    assert d["schema"] == SCHEMA
    assert d["cartan_det"] == 12 and d["center_dim"] == 6
    assert d["elementary_divisors"] == [2, 6]
    assert d["exceptional"] is True
    assert b'"cartan_det": 12' in render(rep, "json")


def test_rendering_is_deterministic():
    a = render(analyze(q2b("gf:4", 2, 3, "g", "1")), "json")
    b = render(analyze(q2b("gf:4", 2, 3, "g", "1")), "json")
    assert a == b


def test_empty_ladder_is_valid_json():
    r = analyze(truncated_poly("gf:2", 2), n_max=0)
    d = parse(render(r, "json"))
    assert len(d["ladder"]) == 1
    r.ladder = []
    assert parse(render(r, "json"))["ladder"] == []
    assert b"expectation" in render(r, "text")


def test_unknown_schema_rejected(rep):
    d = parse(render(rep, "json"))
    d["schema"] = "other/9"
    with pytest.raises(ValueError):
        AnalysisReport.from_dict(d)


def test_unknown_format(rep):
    with pytest.raises(ValueError):
        render(rep, "xml")


def test_user_algebra_is_uncovered():
    r = analyze(truncated_poly("gf:2", 3))
    assert r.status == "uncovered" and r.params is None
    assert r.center_dim == 3
    assert [s.t_perp_dim for s in r.ladder] == [3, 2, 1]


def test_three_simples_reports_computed_reynolds_quotient():
    r = analyze(q3a("rat:2", "t"))
    assert r.t1perp_mod_reynolds_dim == 2
    chk = {c["name"]: c for c in r.expectation["checks"]}
    assert chk["t1perp_mod_reynolds_dim"]["expected"] == 0
    assert not chk["t1perp_mod_reynolds_dim"]["ok"]
    assert r.status == "mismatch"


def test_matching_instance():
    r = analyze(q2b("gf:2", 2, 4))
    assert r.status == "match", [c for c in r.expectation["checks"] if not c["ok"]]
    assert r.expectation["case"] == "k even, s even, c=0"


def test_text_lists_every_ladder_row(rep):
    text = render(rep, "text").decode()
    assert "dim Z(A) = 6" in text
    assert sum(1 for line in text.splitlines() if line[:3].strip().isdigit()) == len(rep.ladder)


def test_mutated_coefficient_keeps_recorded_params():
    P = q2b("gf:2", 2, 5, "1", "1")
    r = analyze(P, 1, c_coefficient=P.field.zero)
    assert r.params["c"] == "1"
    assert r.status == "mismatch"
    json.loads(render(r, "json"))
