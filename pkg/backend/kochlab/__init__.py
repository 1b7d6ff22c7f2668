"""
KochLab - exact computations for the maximal pro-p quotient G_{Q,S}(p)

Architecture:

    padic ──▶ pmatrix ──▶ koch (presentations, witness, Frattini quotient)
      │                     ▲
      └──▶ linkdata ────────┤
                            │
                         classify (checkers, tame bound, search)
                            │
                         serialize ──▶ commands ──▶ cli

Everything is exact integer arithmetic modulo p^K; the only floating
point is the 60-digit mpmath evaluation of the tame degree bound.
"""

__version__ = "0.1.0"

from .classify import (
    TameBoundResult,
    check_all_lij_zero,
    check_labute_triple,
    check_sl2_conditions,
    check_small_S,
    classify,
    discriminant_exponent_bound,
    golod_shafarevich_flag,
    odlyzko_lower_bound,
    search_labute_triples,
    simple_threshold,
    tame_degree_bound,
)
from .config import KochConfig
from .errors import KochLabError
from .koch import (
    KochPresentation,
    MatrixAssignment,
    PresentationReport,
    TraceZeroMat,
    frattini_image,
    koch_presentation,
    lift_assignment,
    linearization_check,
    linearized_residual,
    local_witness,
    relator_eval,
    span_rank,
    tame_relation_holds,
    verify_presentation,
)
from .linkdata import (
    LinkTable,
    TamePrimeSet,
    alternate_roots,
    discrete_log,
    is_pth_power,
    link_table,
    primitive_root,
    s_min,
)
from .padic import PadicInt, ValLevel, hensel_sqrt, inv, power, ring_op, valuation
from .pmatrix import PMatrix, commutator, congruence_level_test, mat_op, omega, torsion_order_bound_char_p
from .serialize import parse_report, serialize
from .types import ClassificationReport, Conclusion, Condition, Finding, RuleId

__all__ = [
    # Arithmetic
    "PadicInt",
    "ValLevel",
    "ring_op",
    "inv",
    "valuation",
    "power",
    "hensel_sqrt",
    "PMatrix",
    "mat_op",
    "commutator",
    "omega",
    "congruence_level_test",
    "torsion_order_bound_char_p",
    # Link data
    "TamePrimeSet",
    "LinkTable",
    "primitive_root",
    "alternate_roots",
    "discrete_log",
    "is_pth_power",
    "s_min",
    "link_table",
    # Presentations
    "KochPresentation",
    "MatrixAssignment",
    "PresentationReport",
    "TraceZeroMat",
    "koch_presentation",
    "relator_eval",
    "tame_relation_holds",
    "verify_presentation",
    "local_witness",
    "frattini_image",
    "span_rank",
    "linearized_residual",
    "lift_assignment",
    "linearization_check",
    # Classification
    "Conclusion",
    "RuleId",
    "Condition",
    "Finding",
    "ClassificationReport",
    "TameBoundResult",
    "tame_degree_bound",
    "odlyzko_lower_bound",
    "discriminant_exponent_bound",
    "simple_threshold",
    "check_small_S",
    "check_all_lij_zero",
    "check_labute_triple",
    "check_sl2_conditions",
    "golod_shafarevich_flag",
    "classify",
    "search_labute_triples",
    # Plumbing
    "KochConfig",
    "KochLabError",
    "serialize",
    "parse_report",
]
