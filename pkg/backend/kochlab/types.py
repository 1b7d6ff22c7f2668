"""
KochLab report types.

Findings are plain value objects so that reports compare by value, which is
how primitive-root invariance is checked: two reports built from different
root choices must be equal.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, List, Tuple


# =============================================================================
# Enums
# =============================================================================


class Conclusion(str, Enum):
    """What a rule concludes about G_{Q,S}(p) (or its tame quotient)."""
    TRIVIAL_GROUP = "TrivialGroup"
    FINITE_CYCLIC = "FiniteCyclic"
    FINITE = "Finite"
    HOMS_TO_GLN1_TRIVIAL = "HomsToGLn1Trivial"
    HOMS_TO_GLNM0_TRIVIAL = "HomsToGLnM0Trivial"
    SL21_ONLY_INFINITE_OPTION = "Sl21OnlyInfiniteOption"
    IMAGE_AT_MOST_2 = "ImageAtMost2"
    UNKNOWN = "Unknown"
    INFINITE_BY_GS = "InfiniteByGS"


class RuleId(str, Enum):
    """Checker that produced a finding."""
    SMALL_S = "small_s"
    SIMPLE_THRESHOLD = "simple_threshold"
    ALL_LIJ_ZERO = "all_lij_zero"
    LABUTE_TRIPLE = "labute_triple"
    SL2_CONDITIONS = "sl2_conditions"
    GOLOD_SHAFAREVICH = "golod_shafarevich"
    TAME_DEGREE_BOUND = "tame_degree_bound"


# =============================================================================
# Findings
# =============================================================================


@dataclass(frozen=True)
class Condition:
    """A named boolean, recomputable from (p, S)."""
    name: str
    holds: bool

    def to_dict(self) -> Dict[str, Any]:
        return {"name": self.name, "holds": self.holds}

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "Condition":
        return cls(name=data["name"], holds=bool(data["holds"]))


@dataclass(frozen=True)
class Finding:
    """
    Result of one rule.

    Attributes:
        rule: checker id
        conclusion: Unknown unless every precondition holds
        preconditions: hypotheses of the rule
        criteria: necessary conditions tested on top of the hypotheses
        assumptions: hypotheses that cannot be decided from (p, S)
        notes: free-form remarks (companion facts, why a rule was skipped)
        details: numeric outputs (thresholds, bounds), JSON-compatible
        basis_invariant: independent of the primitive-root choice
    """
    rule: RuleId
    conclusion: Conclusion
    preconditions: Tuple[Condition, ...] = ()
    criteria: Tuple[Condition, ...] = ()
    assumptions: Tuple[str, ...] = ()
    notes: Tuple[str, ...] = ()
    details: Tuple[Tuple[str, Any], ...] = ()
    basis_invariant: bool = True

    def __post_init__(self) -> None:
        if self.conclusion is not Conclusion.UNKNOWN and not self.preconditions_hold:
            raise ValueError(f"{self.rule.value}: conclusion emitted with a failing precondition")

    @property
    def preconditions_hold(self) -> bool:
        return all(c.holds for c in self.preconditions)

    @property
    def all_conditions(self) -> bool:
        return self.preconditions_hold and all(c.holds for c in self.criteria)

    def detail(self, key: str, default: Any = None) -> Any:
        return dict(self.details).get(key, default)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "rule": self.rule.value,
            "conclusion": self.conclusion.value,
            "preconditions": [c.to_dict() for c in self.preconditions],
            "criteria": [c.to_dict() for c in self.criteria],
            "all_conditions": self.all_conditions,
            "assumptions": list(self.assumptions),
            "notes": list(self.notes),
            "details": dict(self.details),
            "basis_invariant": self.basis_invariant,
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "Finding":
        return cls(
            rule=RuleId(data["rule"]),
            conclusion=Conclusion(data["conclusion"]),
            preconditions=tuple(Condition.from_dict(c) for c in data.get("preconditions", [])),
            criteria=tuple(Condition.from_dict(c) for c in data.get("criteria", [])),
            assumptions=tuple(data.get("assumptions", [])),
            notes=tuple(data.get("notes", [])),
            details=tuple(sorted(data.get("details", {}).items())),
            basis_invariant=bool(data.get("basis_invariant", True)),
        )

    def to_line(self) -> str:
        failed = [c.name for c in self.preconditions + self.criteria if not c.holds]
        text = f"{self.rule.value}: {self.conclusion.value}"
        if self.details:
            text += " [" + ", ".join(f"{k}={v}" for k, v in self.details) + "]"
        if failed:
            text += " (failing: " + ", ".join(failed) + ")"
        if self.assumptions:
            text += " (assuming: " + "; ".join(self.assumptions) + ")"
        if self.notes:
            text += " -- " + " ".join(self.notes)
        return text


@dataclass(frozen=True)
class ClassificationReport:
    """All findings for one (p, S)."""
    p: int
    primes: Tuple[int, ...]
    findings: Tuple[Finding, ...] = field(default_factory=tuple)

    def finding(self, rule: RuleId) -> Finding:
        for f in self.findings:
            if f.rule is rule:
                return f
        raise KeyError(rule.value)

    def has(self, rule: RuleId) -> bool:
        return any(f.rule is rule for f in self.findings)

    @property
    def conclusions(self) -> List[Conclusion]:
        return [f.conclusion for f in self.findings]

    def to_dict(self) -> Dict[str, Any]:
        return {
            "p": self.p,
            "primes": list(self.primes),
            "findings": [f.to_dict() for f in self.findings],
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "ClassificationReport":
        return cls(
            p=data["p"],
            primes=tuple(data["primes"]),
            findings=tuple(Finding.from_dict(f) for f in data.get("findings", [])),
        )

    def to_lines(self) -> List[str]:
        return [f.to_line() for f in self.findings]


__all__ = [
    "Conclusion",
    "RuleId",
    "Condition",
    "Finding",
    "ClassificationReport",
]
