"""
Report serialization.

JSON output is compact with sorted keys, so identical inputs give
byte-identical output. Key names are listed in docs/REPORTS.md.
"""

from __future__ import annotations

import json
from typing import Any, Dict, List, Literal, Protocol, Union, runtime_checkable

from .linkdata import LinkTable
from .types import ClassificationReport, Finding

OutputFormat = Literal["json", "text"]
FORMATS = ("json", "text")


@runtime_checkable
class Report(Protocol):
    def to_dict(self) -> Dict[str, Any]: ...

    def to_lines(self) -> List[str]: ...


def _text_of_dict(data: Dict[str, Any]) -> List[str]:
    return [f"{key}: {json.dumps(data[key], sort_keys=True)}" for key in sorted(data)]


def serialize(report: Union[Report, Dict[str, Any]], fmt: OutputFormat = "text") -> str:
    """Render a report (or a bare dict) as compact JSON or as text lines."""
    if fmt not in FORMATS:
        raise ValueError(f"unknown format {fmt!r}, expected one of {FORMATS}")
    data = report if isinstance(report, dict) else report.to_dict()
    if fmt == "json":
        return json.dumps(data, sort_keys=True, separators=(",", ":"), ensure_ascii=False)
    lines = _text_of_dict(report) if isinstance(report, dict) else report.to_lines()
    return "\n".join(lines)


def parse_report(text: str) -> Union[ClassificationReport, LinkTable, Dict[str, Any]]:
    """
    Inverse of serialize(..., "json") for classification reports and link tables.

    A bare {"findings": [...]} payload, such as the empty report, comes back
    as a plain dict whose findings have been checked against Finding.
    """
    data = json.loads(text)
    if not isinstance(data, dict):
        raise ValueError("a report is a JSON object")
    if "findings" in data and "p" in data:
        return ClassificationReport.from_dict(data)
    if "ell" in data and "roots" in data:
        return LinkTable.from_dict(data)
    if set(data) == {"findings"}:
        return {"findings": [Finding.from_dict(f).to_dict() for f in data["findings"]]}
    raise ValueError("not a classification report or link table")


__all__ = ["FORMATS", "OutputFormat", "Report", "serialize", "parse_report"]
