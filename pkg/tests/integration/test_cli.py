"""
Integration tests for the kochlab command line.

Every test drives cli.run() in-process and inspects stdout and the exit status.
"""

import json

import pytest

from backend.kochlab.cli import EXIT_CONDITION_FAILED, EXIT_INVALID_INPUT, EXIT_OK, run


def run_json(capsys, *argv):
    status = run([*argv, "--format", "json"])
    return status, json.loads(capsys.readouterr().out)


def test_classify_labute_json(capsys):
    """classify -p 3 -S 7,31,229 --format json"""
    status, data = run_json(capsys, "classify", "-p", "3", "-S", "7,31,229")
    assert status == EXIT_OK
    labute = next(f for f in data["findings"] if f["rule"] == "labute_triple")
    assert labute["all_conditions"] is True
    assert labute["conclusion"] == "Sl21OnlyInfiniteOption"


def test_classify_alternate_roots_identical(capsys):
    """The report does not depend on the primitive roots"""
    run(["classify", "-p", "5", "-S", "11,31,1021", "--format", "json"])
    first = capsys.readouterr().out
    run(["classify", "-p", "5", "-S", "11,31,1021", "--format", "json", "--alternate-roots"])
    assert capsys.readouterr().out == first


def test_verify_witness_text(capsys):
    """verify-witness -p 3 -q 7 -K 8"""
    status = run(["verify-witness", "-p", "3", "-q", "7", "-K", "8"])
    assert status == EXIT_OK
    assert "relator ≡ I at precision 3^8" in capsys.readouterr().out


def test_verify_witness_control_fails(capsys):
    """The negative control exits 1 and reports the residual depth"""
    status, data = run_json(capsys, "verify-witness", "-p", "5", "-q", "11", "--control")
    assert status == EXIT_CONDITION_FAILED
    assert data["passed"] is False
    assert data["relators"][0]["omega"]["level"] == 2


def test_tame_bound(capsys):
    """tame-bound -S 2,3,5 gives product 30 and bound 360"""
    status, data = run_json(capsys, "tame-bound", "-S", "2,3,5")
    assert status == EXIT_OK
    assert data["product"] == 30
    assert data["bound"] == 360


def test_tame_bound_unbounded(capsys):
    """prod S >= 60.1 exits 1"""
    status, data = run_json(capsys, "tame-bound", "-S", "2,31")
    assert status == EXIT_CONDITION_FAILED
    assert data["bounded"] is False


def test_hensel_sqrt(capsys):
    status, data = run_json(capsys, "hensel-sqrt", "-p", "3", "-q", "7", "-K", "2")
    assert status == EXIT_OK
    assert data["root"] == 4


def test_link_with_recorded_roots(capsys):
    """--roots reproduces a table"""
    status, data = run_json(capsys, "link", "-p", "3", "-S", "7,31,229", "--roots", "5,11,6")
    assert status == EXIT_OK
    assert data["roots"] == [5, 11, 6]
    again = run_json(capsys, "link", "-p", "3", "-S", "7,31,229", "--roots", ",".join(map(str, data["roots"])))[1]
    assert again == data


def test_search_triples(capsys):
    status, data = run_json(capsys, "search-triples", "-p", "3", "--qmax", "250")
    assert status == EXIT_OK
    assert [7, 31, 229] in data["triples"]


def test_search_triples_parallel_same_output(capsys):
    """--parallel does not change the report"""
    run(["search-triples", "-p", "3", "--qmax", "120", "--format", "json"])
    serial = capsys.readouterr().out
    run(["search-triples", "-p", "3", "--qmax", "120", "--format", "json", "--parallel", "--workers", "2"])
    assert capsys.readouterr().out == serial


def test_linearize(capsys):
    status, data = run_json(capsys, "linearize", "-p", "3", "-S", "7,31,229", "--seed", "5")
    assert status == EXIT_OK
    assert data["passed"] is True
    assert 0 <= data["span_rank"] <= 3


def test_identical_invocations_identical_output(capsys):
    run(["classify", "-p", "3", "-S", "7,13", "--format", "json"])
    first = capsys.readouterr().out
    run(["classify", "-p", "3", "-S", "13,7", "--format", "json"])
    assert capsys.readouterr().out == first


def test_out_file(capsys, tmp_path):
    """--out writes the report and leaves stdout empty"""
    target = tmp_path / "report.json"
    status = run(["tame-bound", "-S", "2,3,5", "--format", "json", "--out", str(target)])
    assert status == EXIT_OK
    assert capsys.readouterr().out == ""
    assert json.loads(target.read_text())["bound"] == 360


def test_out_file_unwritable(capsys, tmp_path):
    """An --out path inside a missing directory is an input error, not a traceback"""
    target = tmp_path / "missing" / "r.json"
    status = run(["tame-bound", "-S", "2,3,5", "--out", str(target)])
    assert status == EXIT_INVALID_INPUT
    captured = capsys.readouterr()
    assert captured.out == ""
    assert "error: cannot write" in captured.err
    assert not target.exists()


@pytest.mark.parametrize(
    "argv",
    [
        ["classify", "-p", "3", "-S", "7,x"],
        ["classify", "-p", "3", "-S", "7,7"],
        ["classify", "-p", "3", "-S", "7,9"],
        ["classify", "-p", "4", "-S", "7"],
        ["verify-witness", "-p", "3", "-q", "7", "-K", "0"],
        ["verify-witness", "-p", "3", "-q", "7", "-K", "65"],
        ["hensel-sqrt", "-p", "3", "-q", "5"],
        ["link", "-p", "3", "-S", "7,31", "--roots", "2,3"],
        ["search-triples", "-p", "3", "--qmax", "2"],
        ["tame-bound", "-S", "4"],
        [],
    ],
)
def test_invalid_input_exits_2(argv, capsys):
    """Malformed or out-of-range input is rejected before computation"""
    assert run(argv) == EXIT_INVALID_INPUT
    assert capsys.readouterr().out == ""
