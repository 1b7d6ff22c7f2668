"""
Theorem-precondition checkers for G_{Q,S}(p) and tame degree bounds.

Every checker returns a Finding built only from choice-invariant data:
congruences of the primes, the predicates ell_ij = 0, and the ratio
identities evaluated cross-multiplied in F_p. Raw link numbers never leave
this module.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import combinations
from math import gcd, prod
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

import mpmath
from sympy import isprime, primerange

from ..utils.logger import get_logger
from .errors import (
    BadCongruence,
    EmptySMin,
    InvalidPrimeSet,
    KochLabError,
    RequiresPGreater3,
    WrongCardinality,
)
from .linkdata import (
    TamePrimeSet,
    discrete_log,
    link_table,
    p_valuation,
    primitive_root,
    s_min,
)
from .types import ClassificationReport, Conclusion, Condition, Finding, RuleId

logger = get_logger(__name__)

# Constants of the unconditional discriminant lower bound
# |disc K| >= 60.1^r1 * 22.2^(2 r2) * e^-254.
ODLYZKO_REAL = "60.1"
ODLYZKO_COMPLEX = "22.2"
ODLYZKO_SHIFT = 254

BOUND_DPS = 60

POWERFUL_ASSUMPTION = "G_{Q,S}(p) is powerful"

RootChoice = Optional[Mapping[int, int]]


def _details(**values) -> Tuple[Tuple[str, object], ...]:
    return tuple(sorted(values.items()))


def _link_ell(S: TamePrimeSet, roots: RootChoice) -> Dict[Tuple[int, int], int]:
    """ell keyed by (q_i, q_j)."""
    chosen = None if roots is None else [roots.get(q, primitive_root(q)) for q in S.primes]
    table = link_table(S, chosen)
    return {
        (qi, qj): table.ell[i][j]
        for i, qi in enumerate(S.primes)
        for j, qj in enumerate(S.primes)
        if i != j
    }


# =============================================================================
# Tame degree bound
# =============================================================================


def odlyzko_lower_bound(r1: int, r2: int) -> mpmath.mpf:
    """60.1^r1 * 22.2^(2 r2) * e^-254 for a field of signature (r1, r2)."""
    if r1 < 0 or r2 < 0 or r1 + r2 == 0:
        raise ValueError("signature must be non-negative and non-zero")
    with mpmath.workdps(BOUND_DPS):
        return (
            mpmath.mpf(ODLYZKO_REAL) ** r1
            * mpmath.mpf(ODLYZKO_COMPLEX) ** (2 * r2)
            * mpmath.exp(-ODLYZKO_SHIFT)
        )


def discriminant_exponent_bound(q: int, splitting: Sequence[Tuple[int, int]]) -> int:
    """
    Upper bound sum f (e - 1 + e v_q(e)) for v_q of a discriminant.

    Args:
        q: rational prime
        splitting: (e, f) for every prime above q
    """
    total = 0
    for e, f in splitting:
        if e < 1 or f < 1:
            raise ValueError("ramification index and residue degree must be >= 1")
        ve = p_valuation(e, q)
        total += f * (e - 1 + e * ve)
    return total


def is_tame(q: int, e: int) -> bool:
    return e % q != 0


@dataclass(frozen=True)
class TameBoundResult:
    """
    Degree bound for finite Galois extensions of Q, tame and unramified outside S.

    numerator/denominator are decimal strings of 254 - ln(prod) and
    ln(60.1 / prod) at BOUND_DPS digits.
    """

    primes: Tuple[int, ...]
    product: int
    bounded: bool
    bound: Optional[int]
    numerator: str
    denominator: str
    notes: Tuple[str, ...] = ()

    def to_dict(self) -> dict:
        return {
            "primes": list(self.primes),
            "product": self.product,
            "bounded": self.bounded,
            "bound": self.bound,
            "components": {"numerator": self.numerator, "denominator": self.denominator},
            "notes": list(self.notes),
        }

    def to_lines(self) -> List[str]:
        if self.bounded:
            head = f"product {self.product} < 60.1: every tame extension unramified outside S has degree <= {self.bound}"
        else:
            head = f"product {self.product} >= 60.1: NoBound"
        return [head, *self.notes]


def _degree_inequality_holds(product: int, n: int) -> bool:
    # 60.1 e^(-254/n) <= prod^(1 - 1/n), raised to the n-th power
    with mpmath.workdps(BOUND_DPS):
        return odlyzko_lower_bound(n, 0) <= mpmath.mpf(product) ** (n - 1)


def tame_degree_bound(primes: Sequence[int]) -> TameBoundResult:
    """
    floor((254 - ln P) / ln(60.1 / P)) for P = prod S < 60.1, else unbounded.

    The floor is certified by checking the discriminant inequality directly
    at n = bound (holds) and n = bound + 1 (fails).
    """
    primes = tuple(sorted(primes))
    if not primes:
        raise ValueError("S must be non-empty")
    if len(set(primes)) != len(primes):
        raise InvalidPrimeSet(f"repeated prime in {list(primes)}")
    composite = [q for q in primes if not isprime(q)]
    if composite:
        raise InvalidPrimeSet(f"not prime: {composite}")

    product = prod(primes)
    notes = []
    if len(primes) == 1 and primes[0] < 23:
        q = primes[0]
        notes.append(f"G^tame_(Q,{{{q}}}) is cyclic of order {q - 1} (q < 23)")

    with mpmath.workdps(BOUND_DPS):
        P = mpmath.mpf(product)
        num = ODLYZKO_SHIFT - mpmath.log(P)
        den = mpmath.log(mpmath.mpf(ODLYZKO_REAL) / P)
        numerator, denominator = mpmath.nstr(num, 30), mpmath.nstr(den, 30)

        # product < 60.1 in exact integer arithmetic
        if 10 * product >= 601:
            return TameBoundResult(primes, product, False, None, numerator, denominator, tuple(notes))

        bound = int(mpmath.floor(num / den))

    if not (_degree_inequality_holds(product, bound) and not _degree_inequality_holds(product, bound + 1)):
        raise ArithmeticError(f"could not certify floor of the degree bound at n = {bound}")
    logger.debug("Degree bound certified", product=product, bound=bound)
    return TameBoundResult(primes, product, True, bound, numerator, denominator, tuple(notes))


def tame_bound_finding(primes: Sequence[int]) -> Finding:
    result = tame_degree_bound(primes)
    return Finding(
        rule=RuleId.TAME_DEGREE_BOUND,
        conclusion=Conclusion.FINITE if result.bounded else Conclusion.UNKNOWN,
        preconditions=(Condition("prod S < 60.1", result.bounded),),
        notes=result.notes,
        details=_details(product=result.product, bound=result.bound),
    )


# =============================================================================
# Congruence thresholds
# =============================================================================


def simple_threshold(p: int, S: TamePrimeSet) -> int:
    """m0 = max_i v_p(q_i - 1) + 1 over S_min; homs G_{Q,S}(p) -> GL_n^m0(Z_p) are trivial."""
    smin = s_min(p, S)
    if not smin.primes:
        raise EmptySMin(f"no prime of {list(S.primes)} is 1 mod {p}")
    return max(p_valuation(q - 1, p) for q in smin.primes) + 1


def simple_threshold_finding(p: int, S: TamePrimeSet) -> Finding:
    m0 = simple_threshold(p, S)
    notes = ()
    if m0 == 2:
        notes = ("no prime of S_min is 1 mod p^2, so homs into GL_n^2(Z_p) are trivial",)
    return Finding(
        rule=RuleId.SIMPLE_THRESHOLD,
        conclusion=Conclusion.HOMS_TO_GLNM0_TRIVIAL,
        preconditions=(Condition("S_min non-empty", True),),
        notes=notes,
        details=_details(m0=m0),
    )


# =============================================================================
# Small S
# =============================================================================


def check_small_S(p: int, S: TamePrimeSet, roots: RootChoice = None) -> Finding:
    """|S_min| = 0, 1 or 2 (with a nonzero link number)."""
    smin = s_min(p, S)
    size = len(smin)
    if size == 0:
        return Finding(
            RuleId.SMALL_S, Conclusion.TRIVIAL_GROUP, (Condition("S_min empty", True),)
        )
    if size == 1:
        return Finding(
            RuleId.SMALL_S,
            Conclusion.FINITE_CYCLIC,
            (Condition("|S_min| = 1", True),),
            notes=("class number of Q is prime to p",),
        )
    if size > 2:
        return Finding(RuleId.SMALL_S, Conclusion.UNKNOWN, (Condition("|S_min| <= 2", False),))

    q1, q2 = smin.primes
    ell = _link_ell(smin, roots)
    linked = ell[(q1, q2)] != 0 or ell[(q2, q1)] != 0
    notes = ()
    if linked and all(q % (p * p) != 1 for q in smin.primes):
        notes = (f"G_(Q,S)({p}) is the non-abelian group of order {p}^3 and exponent {p}^2",)
    return Finding(
        RuleId.SMALL_S,
        Conclusion.FINITE if linked else Conclusion.UNKNOWN,
        (Condition("|S_min| = 2", True), Condition("ell_12 != 0 or ell_21 != 0", linked)),
        notes=notes,
    )


# =============================================================================
# Link-number rules
# =============================================================================


def check_all_lij_zero(p: int, S: TamePrimeSet, roots: RootChoice = None) -> Finding:
    """All ell_ij = 0 on S_min (and no q = 1 mod p^2): homs into GL_n^1(Z_p) are trivial."""
    bad = [q for q in S.primes if q % (p * p) == 1]
    if bad:
        raise BadCongruence(f"primes {bad} are 1 mod {p * p}")
    smin = s_min(p, S)
    ell = _link_ell(smin, roots) if len(smin) > 1 else {}
    conditions = tuple(
        Condition(f"ell({qi},{qj}) = 0", value == 0) for (qi, qj), value in sorted(ell.items())
    )
    holds = all(c.holds for c in conditions)
    return Finding(
        RuleId.ALL_LIJ_ZERO,
        Conclusion.HOMS_TO_GLN1_TRIVIAL if holds else Conclusion.UNKNOWN,
        conditions,
    )


def _labute_criteria(
    p: int,
    primes: Sequence[int],
    ell: Mapping[Tuple[int, int], int],
) -> Tuple[Condition, ...]:
    q1, q2, q3 = primes
    c = {q: ((q - 1) // p) % p for q in primes}
    conditions = [
        Condition(f"ell_{i}{j} != 0", ell[(qi, qj)] != 0)
        for (i, qi), (j, qj) in (
            ((1, q1), (2, q2)), ((1, q1), (3, q3)),
            ((2, q2), (1, q1)), ((2, q2), (3, q3)),
            ((3, q3), (1, q1)), ((3, q3), (2, q2)),
        )
    ]

    def ratio(a, ca, b, cb, column) -> bool:
        # ell_a/c_a = -ell_b/c_b  <=>  ell_a c_b = -ell_b c_a
        return (ell[(a, column)] * c[cb] + ell[(b, column)] * c[ca]) % p == 0

    conditions += [
        Condition("ell_13/c_1 = -ell_23/c_2", ratio(q1, q1, q2, q2, q3)),
        Condition("ell_21/c_2 = -ell_31/c_3", ratio(q2, q2, q3, q3, q1)),
        Condition("ell_12/c_1 = -ell_32/c_3", ratio(q1, q1, q3, q3, q2)),
    ]
    return tuple(conditions)


def _labute_congruences(p: int, primes: Sequence[int]) -> Tuple[Condition, ...]:
    conditions = []
    for q in primes:
        conditions.append(Condition(f"{q} = 1 mod {p}", q % p == 1))
        conditions.append(Condition(f"{q} != 1 mod {p * p}", q % (p * p) != 1))
    return tuple(conditions)


def check_labute_triple(p: int, S: TamePrimeSet, roots: RootChoice = None) -> Finding:
    """
    Necessary conditions for an infinite powerful G_{Q,S}(p), |S| = 3.

    Under the powerful assumption the group is finite or SL_2^1(Z_p), and the
    latter needs all ell_ij != 0 plus three ratio identities.
    """
    if len(S) != 3:
        raise WrongCardinality(f"need exactly 3 primes, got {len(S)}")
    preconditions = _labute_congruences(p, S.primes)
    if not all(c.holds for c in preconditions):
        return Finding(RuleId.LABUTE_TRIPLE, Conclusion.UNKNOWN, preconditions)

    criteria = _labute_criteria(p, S.primes, _link_ell(S, roots))
    satisfied = all(c.holds for c in criteria)
    return Finding(
        RuleId.LABUTE_TRIPLE,
        Conclusion.SL21_ONLY_INFINITE_OPTION if satisfied else Conclusion.FINITE,
        preconditions,
        criteria,
        assumptions=(POWERFUL_ASSUMPTION,),
    )


# =============================================================================
# SL_2 image
# =============================================================================


SL2_CLAUSES = (
    ("a", -1, -1),
    ("b", -1, +1),
    ("c", +1, -1),
    ("d", +1, +1),
)


def check_sl2_conditions(p: int, S: TamePrimeSet) -> Finding:
    """
    Conditions for a rep rho: G_{Q,S} -> SL_2(Z_p), p > 3.

    Per prime: tame (q does not divide p^2 - 1) and inertia-finite (q is a
    non-square mod p). Clause (x) holds when gcd(p -+ 1, q -+ 1) = 2 for every q.
    """
    if p <= 3:
        raise RequiresPGreater3(f"p = {p}")
    primes = S.primes
    tame = [Condition(f"{q} does not divide p^2 - 1", (p * p - 1) % q != 0) for q in primes]
    finite = [
        Condition(f"{q} is a non-square mod {p}", pow(q % p, (p - 1) // 2, p) == p - 1)
        for q in primes
    ]
    clauses = []
    for name, sp, sq in SL2_CLAUSES:
        holds = bool(primes) and all(gcd(p + sp, q + sq) == 2 for q in primes)
        clauses.append(Condition(f"clause ({name}): gcd(p{sp:+d}, q{sq:+d}) = 2 for all q", holds))

    chosen = next((c for c, cond in zip(SL2_CLAUSES, clauses) if cond.holds), None)
    preconditions = tuple(tame + finite) + (Condition("some gcd clause holds", chosen is not None),)
    if chosen is None or not all(c.holds for c in preconditions):
        return Finding(RuleId.SL2_CONDITIONS, Conclusion.UNKNOWN, preconditions, tuple(clauses))

    name, sp, sq = chosen
    return Finding(
        RuleId.SL2_CONDITIONS,
        Conclusion.IMAGE_AT_MOST_2,
        preconditions,
        tuple(clauses),
        assumptions=(f"the order of rho(I_q) divides p{sp:+d} and q{sq:+d} for every q",),
        details=_details(clause=name),
    )


# =============================================================================
# Golod-Shafarevich
# =============================================================================


def golod_shafarevich_flag(p: int, S: TamePrimeSet) -> Finding:
    size = len(s_min(p, S))
    return Finding(
        RuleId.GOLOD_SHAFAREVICH,
        Conclusion.INFINITE_BY_GS if p > 2 and size >= 4 else Conclusion.UNKNOWN,
        (Condition("p > 2", p > 2), Condition("|S_min| >= 4", size >= 4)),
        details=_details(s_min_size=size),
    )


# =============================================================================
# Aggregation
# =============================================================================


def _guarded(rule: RuleId, fn, *args) -> Finding:
    try:
        return fn(*args)
    except KochLabError as exc:
        logger.debug("Checker not applicable", rule=rule.value, reason=str(exc))
        return Finding(rule, Conclusion.UNKNOWN, notes=(f"not applicable: {exc}",))


def classify(p: int, primes: Sequence[int], roots: RootChoice = None) -> ClassificationReport:
    """
    Run every checker on (p, S).

    Args:
        p: odd prime
        primes: the set S (any order)
        roots: optional primitive root per prime; the report does not depend on it
    """
    S = TamePrimeSet.of(p, primes)
    smin = s_min(p, S)
    findings = [
        check_small_S(p, S, roots),
        _guarded(RuleId.SIMPLE_THRESHOLD, simple_threshold_finding, p, S),
        _guarded(RuleId.ALL_LIJ_ZERO, check_all_lij_zero, p, S, roots),
    ]
    if len(smin) == 3:
        findings.append(check_labute_triple(p, smin, roots))
    elif len(S) == 3:
        findings.append(check_labute_triple(p, S, roots))
    findings.append(_guarded(RuleId.SL2_CONDITIONS, check_sl2_conditions, p, S))
    findings.append(golod_shafarevich_flag(p, S))
    if S.primes:
        findings.append(tame_bound_finding(S.primes))

    logger.debug(
        "Classification finished",
        p=p,
        primes=list(S.primes),
        conclusions=[f.conclusion.value for f in findings],
    )
    return ClassificationReport(p, S.primes, tuple(findings))


# =============================================================================
# Search
# =============================================================================


def labute_candidates(p: int, qmax: int) -> List[int]:
    """Primes q <= qmax with q = 1 mod p and q != 1 mod p^2."""
    return [q for q in primerange(2, qmax + 1) if q % p == 1 and q % (p * p) != 1]


def _pair_ell(p: int, candidates: Sequence[int]) -> Dict[Tuple[int, int], int]:
    roots = {q: primitive_root(q) for q in candidates}
    return {
        (qi, qj): ((-discrete_log(qj, roots[qj], qi)) % (qj - 1)) % p
        for qi in candidates
        for qj in candidates
        if qi != qj
    }


def _scan_from(args) -> List[Tuple[int, int, int]]:
    p, candidates, ell, first = args
    found = []
    for q2, q3 in combinations(candidates[first + 1:], 2):
        triple = (candidates[first], q2, q3)
        if all(c.holds for c in _labute_criteria(p, triple, ell)):
            found.append(triple)
    return found


def search_labute_triples(
    p: int, qmax: int, parallel: bool = False, workers: Optional[int] = None
) -> List[Tuple[int, int, int]]:
    """All 3-sets of primes <= qmax passing check_labute_triple, sorted."""
    TamePrimeSet(p, ())
    candidates = labute_candidates(p, qmax)
    if len(candidates) < 3:
        return []
    ell = _pair_ell(p, candidates)
    jobs = [(p, candidates, ell, i) for i in range(len(candidates) - 2)]
    logger.debug("Searching triples", p=p, qmax=qmax, candidates=len(candidates), parallel=parallel)

    if parallel:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            chunks = list(pool.map(_scan_from, jobs))
    else:
        chunks = [_scan_from(job) for job in jobs]
    return sorted(t for chunk in chunks for t in chunk)


__all__ = [
    "TameBoundResult",
    "odlyzko_lower_bound",
    "discriminant_exponent_bound",
    "is_tame",
    "tame_degree_bound",
    "tame_bound_finding",
    "simple_threshold",
    "simple_threshold_finding",
    "check_small_S",
    "check_all_lij_zero",
    "check_labute_triple",
    "check_sl2_conditions",
    "golod_shafarevich_flag",
    "classify",
    "labute_candidates",
    "search_labute_triples",
]
