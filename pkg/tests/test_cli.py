import json
from pathlib import Path

import pytest
from hypothesis import given, settings, strategies as st

from hochpar import parse_field
from hochpar.cli import ParseError, build, main, parse, spec_from_fixture
from hochpar.epsgraded import FIXTURE_NAMES, fixture, regular_bimodule

GOLDEN = Path(__file__).parent / "golden"


def run_cli(capsys, *args):
    code = main(list(args))
    out = capsys.readouterr()
    return code, out.out, out.err


def write(tmp_path, doc, name="problem.json"):
    p = tmp_path / name
    p.write_text(doc if isinstance(doc, str) else json.dumps(doc))
    return str(p)


def pcp2_doc():
    return json.loads((GOLDEN / "pcp2_GF2.problem.json").read_text())


def test_fixture_serializes_to_dim3_algebra():
    spec = parse(spec_from_fixture("pcp2", parse_field("Q")).to_json())
    assert spec.algebra["dim"] == 3 and spec.algebra["names"] == ["u", "v", "d"]
    assert spec.field == "Q" and spec.group == {"cyclic": 2}


def test_empty_file(tmp_path, capsys):
    code, _, err = run_cli(capsys, "hh", "--input", write(tmp_path, ""))
    assert code == 2
    assert "missing field: field" in err


def test_json_syntax_error_has_position(tmp_path, capsys):
    code, _, err = run_cli(capsys, "hh", "--input", write(tmp_path, '{"field": "Q",\n  "group": }'))
    assert code == 2
    assert "line 2 column" in err


def test_wrong_length_names_index(tmp_path, capsys):
    doc = pcp2_doc()
    doc["algebra"]["mult"] = doc["algebra"]["mult"][:-2]
    code, _, err = run_cli(capsys, "hh", "--input", write(tmp_path, doc))
    assert code == 2
    assert "algebra.mult" in err and "(2, 2, 1)" in err


def test_nested_wrong_length_names_index():
    doc = pcp2_doc()
    flat = doc["algebra"]["mult"]
    nested = [[flat[(i * 3 + j) * 3:(i * 3 + j + 1) * 3] for j in range(3)] for i in range(3)]
    nested[1][2] = nested[1][2][:2]
    doc["algebra"]["mult"] = nested
    with pytest.raises(ParseError, match=r"algebra\.mult\[1\]\[2\]"):
        parse(json.dumps(doc))


@pytest.mark.parametrize("mutate, message", [
    (lambda d: d.pop("group"), "missing field: group"),
    (lambda d: d["algebra"].pop("unit"), "missing field: algebra.unit"),
    (lambda d: d.update(field="GF:4"), "field"),
    (lambda d: d["algebra"]["degrees"].__setitem__(2, 5), "algebra.degrees[2]"),
    (lambda d: d["algebra"]["unit"].__setitem__(0, 1.5), "algebra.unit[0]"),
    (lambda d: d.update(command="frobnicate"), "command"),
    (lambda d: d.update(bounds={"p": -1}), "bounds.p"),
])
def test_field_diagnostics(mutate, message):
    doc = pcp2_doc()
    mutate(doc)
    with pytest.raises(ParseError, match=message.replace("[", r"\[").replace("]", r"\]")):
        parse(json.dumps(doc))


def test_semantic_errors_exit_2(tmp_path, capsys):
    doc = pcp2_doc()
    doc["algebra"]["mult"][0] = "0"  # u * u = 0 breaks the unit
    code, _, err = run_cli(capsys, "hh", "--input", write(tmp_path, doc))
    assert code == 2 and "algebra" in err
    doc = pcp2_doc()
    doc["module"] = {"dim": 1, "left": ["1", "0", "1"], "right": ["1", "1", "0"]}
    code, _, err = run_cli(capsys, "hh", "--input", write(tmp_path, doc))
    assert code == 2 and "module" in err


@settings(max_examples=15, deadline=None)
@given(st.sampled_from(FIXTURE_NAMES), st.sampled_from(["Q", "GF:2", "GF:3", "GF:5"]))
def test_round_trip_is_identity(name, fs):
    spec = spec_from_fixture(name, parse_field(fs))
    once = parse(spec.to_json())
    twice = parse(once.to_json())
    assert once == twice
    assert once.to_json() == twice.to_json()


def test_canonical_form_normalizes_scalars_and_nesting():
    doc = pcp2_doc()
    doc["field"] = "Q"
    doc["algebra"]["unit"] = ["2/2", 1, "0/7"]
    flat = doc["algebra"]["mult"]
    doc["algebra"]["mult"] = [[flat[(i * 3 + j) * 3:(i * 3 + j + 1) * 3] for j in range(3)] for i in range(3)]
    doc["algebra"]["degrees"] = ["1", "1", "g"]
    spec = parse(json.dumps(doc))
    assert spec.algebra["unit"] == ["1", "1", "0"]
    assert spec.algebra["mult"] == flat
    assert spec.algebra["degrees"] == [0, 0, 1]


def test_explicit_module_matches_default(tmp_path, capsys):
    F = parse_field("GF:2")
    s = fixture("pcp2", F)
    x = regular_bimodule(s)
    doc = pcp2_doc()
    doc["module"] = {"dim": 3, "left": [F.format(c) for c in x.left.ravel()],
                     "right": [F.format(c) for c in x.right.ravel()], "degrees": [0, 0, 1]}
    s2, x2 = build(parse(json.dumps(doc)))
    assert x2.dim == 3
    code, out, _ = run_cli(capsys, "ss", "--input", write(tmp_path, doc), "--bounds", "2,2,2")
    assert code == 0
    assert "hh: [3, 2]" in out


def test_check_epsilon_exit_codes(capsys):
    code, out, _ = run_cli(capsys, "check-epsilon", "--fixture", "pcp2")
    assert code == 0 and 'units.g: "u"' in out
    code, out, _ = run_cli(capsys, "check-epsilon", "--fixture", "tri2")
    assert code == 1 and '"axiom": "iii"' in out and '"witness"' in out
    code, _, _ = run_cli(capsys, "e2", "--fixture", "tri2")
    assert code == 1


def test_bad_flags(capsys):
    assert run_cli(capsys, "hh", "--fixture", "nope")[0] == 2
    assert run_cli(capsys, "hh", "--bounds", "1,2")[0] == 2
    assert run_cli(capsys, "hh", "--field", "GF:9")[0] == 2
    assert run_cli(capsys, "main-theorem", "--fixture", "kgrp:Z2", "--element", "zz")[0] == 2
    assert run_cli(capsys, "hh", "--input", "/nonexistent/problem.json")[0] == 2


def test_ss_window_is_honest(capsys):
    code, out, _ = run_cli(capsys, "ss", "--fixture", "pcp2", "--field", "GF:2", "--bounds", "3,3,3")
    assert code == 0
    assert "certified n <= 2" in out
    assert "q=0: 3 2 2 -" in out and "q=3: - - - -" in out


def test_main_theorem_single_element(capsys, tmp_path):
    out_json = tmp_path / "r.json"
    code, _, _ = run_cli(capsys, "main-theorem", "--fixture", "kgrp:S3", "--field", "GF:3",
                         "--element", "(123)", "--json", str(out_json))
    assert code == 0
    rep = json.loads(out_json.read_text())
    assert list(rep["results"]["main_theorem"]) == ["(123)"]
    assert rep["results"]["main_theorem"]["(123)"]["centralizer_order"] == 3


def test_timing_only_on_request(capsys):
    code, out, _ = run_cli(capsys, "hh", "--fixture", "pcp2", "--json", "-")
    assert code == 0 and "timing_seconds" not in out
    code, out, _ = run_cli(capsys, "hh", "--fixture", "pcp2", "--json", "-", "--timing")
    assert code == 0 and "timing_seconds" in out


def test_export_round_trips(capsys, tmp_path):
    code, out, _ = run_cli(capsys, "export", "--fixture", "kgrp:Z3", "--field", "GF:3")
    assert code == 0
    path = write(tmp_path, out)
    code2, out2, _ = run_cli(capsys, "export", "--input", path)
    assert code2 == 0 and out2 == out


GOLDEN_CASES = [
    ("check-epsilon_pcp2_Q.json", ["check-epsilon", "--fixture", "pcp2", "--field", "Q", "--bounds", "2,2,2"], 0),
    ("check-epsilon_tri2_Q.json", ["check-epsilon", "--fixture", "tri2", "--field", "Q", "--bounds", "2,2,2"], 1),
    ("hh_pcp2_GF2.json", ["hh", "--fixture", "pcp2", "--field", "GF:2", "--bounds", "2,2,3"], 0),
    ("ss_pcp2_GF2.json", ["ss", "--fixture", "pcp2", "--field", "GF:2", "--bounds", "3,3,3"], 0),
    ("split_kgrp-S3_GF3.json", ["split", "--fixture", "kgrp:S3", "--field", "GF:3", "--bounds", "2,2,2"], 0),
    ("globalize_kgrp-Z2_GF2.json", ["globalize", "--fixture", "kgrp:Z2", "--field", "GF:2", "--bounds", "3,2,2"], 0),
    ("main-theorem_kgrp-S3_GF3.json",
     ["main-theorem", "--fixture", "kgrp:S3", "--field", "GF:3", "--bounds", "2,2,2"], 0),
]


@pytest.mark.parametrize("golden, args, expected_code", GOLDEN_CASES, ids=[c[0] for c in GOLDEN_CASES])
def test_golden_reports(golden, args, expected_code, tmp_path, capsys):
    out = tmp_path / "report.json"
    code, _, _ = run_cli(capsys, *args, "--json", str(out))
    assert code == expected_code
    assert out.read_text() == (GOLDEN / golden).read_text()


def test_input_file_matches_fixture(capsys, tmp_path):
    path = str(GOLDEN / "pcp2_GF2.problem.json")
    out = tmp_path / "a.json"
    code, _, _ = run_cli(capsys, "hh", "--input", path, "--bounds", "2,2,3", "--json", str(out))
    assert code == 0
    rep = json.loads(out.read_text())
    gold = json.loads((GOLDEN / "hh_pcp2_GF2.json").read_text())
    assert rep["results"] == gold["results"] and rep["checks"] == gold["checks"]


def test_reports_are_deterministic(capsys):
    args = ["split", "--fixture", "pcp2", "--field", "GF:2", "--json", "-"]
    first = run_cli(capsys, *args)[1]
    second = run_cli(capsys, *args)[1]
    assert first == second
