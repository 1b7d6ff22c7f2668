"""
Unit tests for report serialization
"""

import json

import pytest

from backend.kochlab.classify import classify, tame_degree_bound
from backend.kochlab.linkdata import TamePrimeSet, alternate_roots, link_table
from backend.kochlab.serialize import parse_report, serialize
from backend.kochlab.types import ClassificationReport


def test_empty_report():
    """An empty finding list serializes to {"findings":[]}"""
    assert serialize({"findings": []}, "json") == '{"findings":[]}'


def test_empty_report_round_trip():
    """The empty report parses back to itself"""
    text = serialize({"findings": []}, "json")
    assert parse_report(text) == {"findings": []}
    assert serialize(parse_report(text), "json") == text


def test_bare_findings_round_trip():
    """A findings-only payload keeps every finding"""
    payload = {"findings": classify(3, [7, 31, 229]).to_dict()["findings"]}
    text = serialize(payload, "json")
    assert serialize(parse_report(text), "json") == text


def test_classification_round_trip():
    """parse(serialize(r)) == r"""
    report = classify(3, [7, 31, 229])
    assert parse_report(serialize(report, "json")) == report


def test_round_trip_with_null_bound():
    """Unbounded products serialize their bound as null"""
    report = classify(5, [11, 31, 1021])
    text = serialize(report, "json")
    assert '"bound":null' in text
    assert parse_report(text) == report


def test_json_is_deterministic():
    """Identical inputs give byte-identical JSON with sorted keys"""
    a = serialize(classify(3, [7, 13]), "json")
    b = serialize(classify(3, [13, 7]), "json")
    assert a == b
    data = json.loads(a)
    assert list(data) == sorted(data)


def test_all_conditions_exported():
    """The aggregate flag is part of each finding"""
    data = json.loads(serialize(classify(3, [7, 31, 229]), "json"))
    labute = next(f for f in data["findings"] if f["rule"] == "labute_triple")
    assert labute["all_conditions"] is True


def test_link_table_includes_roots():
    """Serialized tables can be recomputed from the recorded roots"""
    S = TamePrimeSet.of(3, [7, 31, 229])
    table = link_table(S, alternate_roots(S.primes))
    restored = parse_report(serialize(table, "json"))
    assert restored.roots == table.roots
    assert link_table(S, restored.roots) == table


def test_text_one_finding_per_line():
    """Text mode renders one line per finding"""
    report = classify(3, [7, 31, 229])
    lines = serialize(report, "text").splitlines()
    assert len(lines) == len(report.findings)
    assert lines[0].startswith("small_s: ")


def test_tame_bound_json():
    """Bound results expose product and bound"""
    data = json.loads(serialize(tame_degree_bound([2, 3, 5]), "json"))
    assert data["product"] == 30
    assert data["bound"] == 360


def test_unknown_format():
    with pytest.raises(ValueError):
        serialize({"findings": []}, "yaml")


def test_parse_rejects_other_payloads():
    with pytest.raises(ValueError):
        parse_report('{"p": 3}')
    with pytest.raises(ValueError):
        parse_report("[]")
    with pytest.raises(ValueError):
        parse_report('{"findings": [{"rule": "nope", "conclusion": "Unknown"}]}')


def test_report_from_dict_defaults():
    """Missing optional keys fall back to empty tuples"""
    report = ClassificationReport.from_dict({"p": 3, "primes": [7], "findings": []})
    assert report.findings == ()
