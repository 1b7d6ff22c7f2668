"""
Unit tests for the theorem-precondition checkers and the tame degree bound
"""

import mpmath
import pytest

from backend.kochlab.classify import (
    check_all_lij_zero,
    check_labute_triple,
    check_sl2_conditions,
    check_small_S,
    classify,
    discriminant_exponent_bound,
    golod_shafarevich_flag,
    is_tame,
    labute_candidates,
    odlyzko_lower_bound,
    search_labute_triples,
    simple_threshold,
    tame_degree_bound,
)
from backend.kochlab.errors import (
    BadCongruence,
    EmptySMin,
    InvalidPrimeSet,
    RequiresPGreater3,
    WrongCardinality,
)
from backend.kochlab.linkdata import TamePrimeSet, alternate_roots
from backend.kochlab.types import Conclusion, Finding, RuleId


def S(p, *primes):
    return TamePrimeSet.of(p, primes)


# =============================================================================
# Tame degree bound
# =============================================================================


def test_tame_bound_2_3_5():
    """prod = 30 gives degree bound 360"""
    result = tame_degree_bound([2, 3, 5])
    assert result.product == 30
    assert result.bounded
    assert result.bound == 360
    assert result.to_dict()["bound"] == 360


def test_tame_bound_certificate_inequality():
    """60.1 e^(-254/n) <= 30^(1 - 1/n) holds at 360 and fails at 361"""
    with mpmath.workdps(60):
        lhs = lambda n: mpmath.mpf("60.1") * mpmath.exp(mpmath.mpf(-254) / n)
        rhs = lambda n: mpmath.mpf(30) ** (1 - mpmath.mpf(1) / n)
        assert lhs(360) <= rhs(360)
        assert lhs(361) > rhs(361)


def test_tame_bound_unbounded():
    """prod = 62 >= 60.1"""
    result = tame_degree_bound([2, 31])
    assert not result.bounded
    assert result.bound is None
    assert "NoBound" in result.to_lines()[0]


def test_tame_bound_small_single_prime_note():
    """A single prime below 23 gets the cyclic note"""
    assert any("cyclic of order 12" in n for n in tame_degree_bound([13]).notes)
    assert tame_degree_bound([23]).notes == ()


def test_tame_bound_monotone():
    """Products closer to 60.1 allow larger degrees"""
    assert tame_degree_bound([2]).bound == 74
    assert tame_degree_bound([2]).bound < tame_degree_bound([2, 3]).bound < tame_degree_bound([2, 3, 5]).bound


def test_tame_bound_rejects_empty():
    with pytest.raises(ValueError):
        tame_degree_bound([])


def test_odlyzko_lower_bound():
    """Signature (1, 0) gives 60.1 e^-254"""
    with mpmath.workdps(60):
        assert mpmath.almosteq(odlyzko_lower_bound(1, 0), mpmath.mpf("60.1") * mpmath.exp(-254), 1e-50)
        assert odlyzko_lower_bound(0, 1) > 0
    with pytest.raises(ValueError):
        odlyzko_lower_bound(0, 0)


def test_discriminant_exponent_bound():
    """Tame primes contribute f (e - 1); wild ones add e v_q(e)"""
    assert discriminant_exponent_bound(3, [(2, 1)]) == 1
    assert discriminant_exponent_bound(3, [(3, 1)]) == 5
    assert discriminant_exponent_bound(5, [(2, 2), (1, 1)]) == 2
    assert is_tame(3, 2) and not is_tame(3, 6)
    with pytest.raises(ValueError):
        discriminant_exponent_bound(3, [(0, 1)])


# =============================================================================
# Threshold and small S
# =============================================================================


def test_simple_threshold():
    """m0 = max v_p(q - 1) + 1 over S_min"""
    assert simple_threshold(3, S(3, 7, 31, 229)) == 2
    assert simple_threshold(3, S(3, 2, 7, 19)) == 3
    with pytest.raises(EmptySMin):
        simple_threshold(3, S(3, 2, 5))


def test_small_s_trivial():
    """No prime is 1 mod p"""
    finding = check_small_S(3, S(3, 2, 5, 11))
    assert finding.conclusion is Conclusion.TRIVIAL_GROUP


def test_small_s_cyclic():
    """One prime in S_min"""
    assert check_small_S(3, S(3, 2, 7)).conclusion is Conclusion.FINITE_CYCLIC


def test_small_s_linked_pair():
    """7 is not a cube mod 13: finite of order 27"""
    finding = check_small_S(3, S(3, 7, 13))
    assert finding.conclusion is Conclusion.FINITE
    assert any("order 3^3" in n for n in finding.notes)


def test_small_s_unlinked_pair():
    """7 and 223 are mutual cubic residues"""
    finding = check_small_S(3, S(3, 7, 223))
    assert finding.conclusion is Conclusion.UNKNOWN
    assert not finding.preconditions_hold


def test_small_s_many_primes():
    assert check_small_S(3, S(3, 7, 13, 19)).conclusion is Conclusion.UNKNOWN


# =============================================================================
# Link-number rules
# =============================================================================


def test_all_lij_zero():
    """Unlinked pair: homs into GL_n^1 are trivial"""
    assert check_all_lij_zero(3, S(3, 7, 223)).conclusion is Conclusion.HOMS_TO_GLN1_TRIVIAL
    assert check_all_lij_zero(3, S(3, 7, 13)).conclusion is Conclusion.UNKNOWN


def test_all_lij_zero_rejects_one_mod_p2():
    with pytest.raises(BadCongruence):
        check_all_lij_zero(3, S(3, 7, 19))


@pytest.mark.parametrize("p, primes", [(3, (7, 31, 229)), (5, (11, 31, 1021))])
def test_labute_examples(p, primes):
    """Every condition holds for the two known triples"""
    finding = check_labute_triple(p, S(p, *primes))
    assert finding.all_conditions
    assert finding.conclusion is Conclusion.SL21_ONLY_INFINITE_OPTION
    assert len(finding.preconditions) == 6
    assert len(finding.criteria) == 9
    assert finding.assumptions


def test_labute_precondition_fails():
    """19 = 1 mod 9 blocks the rule"""
    finding = check_labute_triple(3, S(3, 7, 19, 31))
    assert finding.conclusion is Conclusion.UNKNOWN
    assert not finding.preconditions_hold
    assert finding.criteria == ()


def test_labute_criteria_fail_means_finite():
    """A triple with a vanishing link number is finite if powerful"""
    finding = check_labute_triple(3, S(3, 7, 13, 223))
    assert finding.preconditions_hold
    assert finding.conclusion is Conclusion.FINITE


def test_labute_wrong_cardinality():
    with pytest.raises(WrongCardinality):
        check_labute_triple(3, S(3, 7, 13))


# =============================================================================
# SL_2 conditions and Golod-Shafarevich
# =============================================================================


def test_sl2_requires_p_greater_3():
    with pytest.raises(RequiresPGreater3):
        check_sl2_conditions(3, S(3, 7))


def test_sl2_single_prime_clause_a():
    """p = 5, q = 7: tame, non-square, gcd(4, 6) = 2"""
    finding = check_sl2_conditions(5, S(5, 7))
    assert finding.conclusion is Conclusion.IMAGE_AT_MOST_2
    assert finding.detail("clause") == "a"
    assert finding.assumptions


def test_sl2_clause_d():
    """{7, 13} only satisfies gcd(p + 1, q + 1) = 2"""
    finding = check_sl2_conditions(5, S(5, 7, 13))
    assert finding.conclusion is Conclusion.IMAGE_AT_MOST_2
    assert finding.detail("clause") == "d"


def test_sl2_square_blocks():
    """11 = 1 mod 5 is a square"""
    finding = check_sl2_conditions(5, S(5, 11))
    assert finding.conclusion is Conclusion.UNKNOWN


def test_sl2_wild_prime_blocks():
    """3 divides 24"""
    assert check_sl2_conditions(5, S(5, 3)).conclusion is Conclusion.UNKNOWN


def test_golod_shafarevich():
    """Four primes 1 mod 3 force an infinite group"""
    assert golod_shafarevich_flag(3, S(3, 7, 13, 19, 31)).conclusion is Conclusion.INFINITE_BY_GS
    assert golod_shafarevich_flag(3, S(3, 7, 13, 19)).conclusion is Conclusion.UNKNOWN


def test_finding_guards_preconditions():
    """A finding cannot conclude with a failing precondition"""
    from backend.kochlab.types import Condition

    with pytest.raises(ValueError):
        Finding(RuleId.SMALL_S, Conclusion.FINITE, (Condition("x", False),))


# =============================================================================
# Aggregation and search
# =============================================================================


def test_classify_labute_example():
    """All rules run; errors become Unknown findings"""
    report = classify(3, [229, 31, 7])
    assert report.primes == (7, 31, 229)
    assert report.finding(RuleId.LABUTE_TRIPLE).all_conditions
    assert report.finding(RuleId.SIMPLE_THRESHOLD).detail("m0") == 2
    sl2 = report.finding(RuleId.SL2_CONDITIONS)
    assert sl2.conclusion is Conclusion.UNKNOWN
    assert sl2.notes and sl2.notes[0].startswith("not applicable")


def test_classify_root_choice_invariant():
    """Alternate primitive roots give an identical report"""
    primes = [11, 31, 1021]
    roots = dict(zip(primes, alternate_roots(primes)))
    assert classify(5, primes) == classify(5, primes, roots)


def test_classify_no_raw_link_numbers():
    """Reports never carry ell values"""
    data = classify(3, [7, 31, 229]).to_dict()
    for finding in data["findings"]:
        assert "ell" not in finding["details"]


def test_classify_empty_smin():
    """S with no prime 1 mod p is trivial; the threshold rule is skipped"""
    report = classify(3, [2, 5])
    assert report.finding(RuleId.SMALL_S).conclusion is Conclusion.TRIVIAL_GROUP
    assert report.finding(RuleId.SIMPLE_THRESHOLD).conclusion is Conclusion.UNKNOWN
    assert report.finding(RuleId.TAME_DEGREE_BOUND).detail("bound") is not None


def test_classify_invalid_input():
    with pytest.raises(InvalidPrimeSet):
        classify(3, [7, 8])


def test_labute_candidates():
    """Primes 1 mod 3, not 1 mod 9"""
    assert labute_candidates(3, 50) == [7, 13, 31, 43]


def test_search_small_qmax_empty():
    assert search_labute_triples(3, 10) == []


def test_search_parallel_matches_serial():
    """Parallel scan returns the same sorted list"""
    serial = search_labute_triples(3, 250)
    assert (7, 31, 229) in serial
    assert search_labute_triples(3, 250, parallel=True, workers=2) == serial
    assert serial == sorted(serial)
