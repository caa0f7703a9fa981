from __future__ import annotations

import json

import jsonschema
import pytest

from liekernel.cli import main
from liekernel.notation import ALGEBRA_SCHEMA, parse
from liekernel.report import REPORT_SCHEMA


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_betti_text(capsys):
    code, out, _ = run(capsys, "betti", "(0,21,2.31)")
    assert code == 0
    assert out.split() == ["b0=1", "b1=1", "b2=0", "b3=0"]


def test_betti_with_param(capsys):
    code, out, _ = run(capsys, "betti", "(0,21,l.31)", "--param", "l=2", "--json")
    assert code == 0
    assert json.loads(out) == {"betti": [1, 1, 0, 0], "23_trivial": True}


def test_grading_find(capsys):
    code, out, _ = run(capsys, "grading", "(0^2,12)")
    assert (code, out.strip()) == (0, "1 1 2")


def test_grading_validate(capsys):
    assert run(capsys, "grading", "(0^2,12)", "--validate", "1 2 3")[0] == 0
    assert run(capsys, "grading", "(0^2,12)", "--validate", "1 1 1")[0] == 1


def test_check_reports_jacobi_failure(capsys):
    code, out, _ = run(capsys, "check", "(0,0,12,13,24)", "--json")
    assert code == 1
    assert json.loads(out)["jacobi"] is False


def test_check_classification(capsys):
    code, out, _ = run(capsys, "check", "(0,0,12)", "--json")
    doc = json.loads(out)
    assert code == 0 and doc["nilpotent"] and not doc["23_trivial"]


def test_parse_emits_schema_valid_json(capsys):
    code, out, _ = run(capsys, "parse", "(0,21+l.31,31)", "--json")
    assert code == 0
    jsonschema.validate(json.loads(out), ALGEBRA_SCHEMA)


def test_extend(capsys):
    code, out, _ = run(capsys, "extend", "(0^2,12)", "1 1 2")
    assert code == 0
    assert parse(out.strip()).bind({}) == parse("(0,21,31,2.41+23)").bind({})


def test_family_and_table(capsys):
    code, out, _ = run(capsys, "family", "f1", "5")
    assert code == 0
    f1 = out.strip()
    code, out, _ = run(capsys, "table", "T3.p5.lambda", "--param", "l=1")
    assert code == 0 and out.splitlines()[0] == f1


def test_table_reports_violation(capsys):
    code, out, _ = run(capsys, "table", "T2.r3.lambda", "--param", "l=-1", "--json")
    doc = json.loads(out)
    assert code == 0 and doc["admissible"] is False and doc["violated"]


def test_kernel_dimension(capsys):
    code, out, _ = run(capsys, "kernel", "su3", "--json")
    assert code == 0 and json.loads(out)["dim"] == 20


def test_orbit(capsys):
    code, out, _ = run(capsys, "orbit", "su3", "--json")
    doc = json.loads(out)
    assert code == 0 and doc["stabilizer_dim"] == 2 and doc["two_plectic"]


@pytest.mark.parametrize("argv", [
    ["betti", "(0,21"],
    ["betti", "(0,21,l.31)"],
    ["betti", "(0,21,l.31)", "--param", "l"],
    ["orbit", "so3"],
    ["grading", "(0^2,12)", "--validate", "1 x 2"],
    ["table", "nonsense"],
    ["nosuchcommand"],
    [],
])
def test_usage_errors_exit_2(capsys, argv):
    assert run(capsys, *argv)[0] == 2


def test_verify_section_json(capsys):
    code, out, _ = run(capsys, "verify-paper", "--section", "hkt", "--json")
    doc = json.loads(out)
    jsonschema.validate(doc, REPORT_SCHEMA)
    assert code == 0
    ids = {c["id"]: c["status"] for c in doc["checks"]}
    assert ids["hkt.IdI=JdJ=KdK"] == "pass"
    assert doc["summary"]["fail"] == 0


def test_info_diff_does_not_change_exit_code(capsys):
    code, out, _ = run(capsys, "verify-paper", "--section", "multimoment", "--json")
    doc = json.loads(out)
    assert doc["summary"]["info-diff"] > 0 and code == 0


def test_missing_g2_data_is_skipped(capsys, tmp_path):
    code, out, _ = run(capsys, "verify-paper", "--section", "extdi", "--json",
                       "--g2-data", str(tmp_path / "absent.json"))
    doc = json.loads(out)
    statuses = {c["id"]: c["status"] for c in doc["checks"]}
    assert code == 0 and statuses["g2.jacobi"] == "skip"
