"""
Unit tests for truncated p-adic arithmetic
"""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from backend.kochlab.errors import EvenPrime, MismatchedContext, NonUnit, NotCongruentOne
from backend.kochlab.padic import PadicInt, ValLevel, hensel_sqrt, inv, power, ring_op, valuation

PRIMES = st.sampled_from([3, 5, 7, 11])
INTS = st.integers(min_value=-10**30, max_value=10**30)


def test_of_reduces_into_range():
    """Negative and large integers are reduced mod p^K"""
    assert PadicInt.of(-1, 3, 2).residue == 8
    assert PadicInt.of(3 ** 5 + 4, 3, 2).residue == 4


def test_constructor_rejects_unreduced_residue():
    """The raw constructor keeps residues in [0, p^K)"""
    with pytest.raises(ValueError):
        PadicInt(3, 2, 9)
    with pytest.raises(ValueError):
        PadicInt(4, 2, 1)


def test_ring_op_matches_operators():
    """ring_op dispatches to the same arithmetic as the operators"""
    a, b = PadicInt.of(7, 5, 3), PadicInt.of(123, 5, 3)
    assert ring_op("add", a, b) == a + b
    assert ring_op("sub", a, b) == a - b
    assert ring_op("mul", a, b) == a * b
    with pytest.raises(ValueError):
        ring_op("div", a, b)


def test_mismatched_context():
    """Values with different (p, K) never combine"""
    with pytest.raises(MismatchedContext):
        PadicInt.of(1, 3, 4) + PadicInt.of(1, 5, 4)
    with pytest.raises(MismatchedContext):
        ring_op("mul", PadicInt.of(1, 3, 4), PadicInt.of(1, 3, 5))


def test_inverse_of_unit():
    """2 * 5 = 1 mod 9"""
    assert inv(PadicInt.of(2, 3, 2)).residue == 5


def test_inverse_of_non_unit_raises():
    """Multiples of p have no inverse"""
    with pytest.raises(NonUnit):
        inv(PadicInt.of(6, 3, 3))


def test_valuation_levels():
    """v_3(18) = 2; zero saturates at K"""
    assert valuation(PadicInt.of(18, 3, 5)) == ValLevel(2)
    assert valuation(PadicInt.of(5, 3, 5)) == ValLevel(0)
    zero = valuation(PadicInt.of(0, 3, 5))
    assert zero.saturated and zero.level == 5


def test_power_rejects_negative_exponent():
    """Negative exponents go through inv explicitly"""
    with pytest.raises(ValueError):
        power(PadicInt.of(2, 3, 2), -1)


def test_power_with_huge_exponent():
    """Fermat-Euler: units to the power p^(K-1)(p-1) are 1"""
    a = PadicInt.of(2, 5, 6)
    assert (a ** (5 ** 5 * 4)).residue == 1


def test_hensel_sqrt_small_case():
    """sqrt(7) mod 9 on the branch 1 mod 3 is 4"""
    r = hensel_sqrt(7, 3, 2)
    assert r.residue == 4


def test_hensel_sqrt_errors():
    """p = 2 and q != 1 mod p are rejected"""
    with pytest.raises(EvenPrime):
        hensel_sqrt(5, 2, 4)
    with pytest.raises(NotCongruentOne):
        hensel_sqrt(5, 3, 4)
    with pytest.raises(ValueError):
        hensel_sqrt(7, 9, 4)


@given(p=PRIMES, a=INTS, b=INTS, c=INTS)
def test_ring_axioms(p, a, b, c):
    """Distributivity and associativity hold mod p^K"""
    x, y, z = (PadicInt.of(v, p, 6) for v in (a, b, c))
    assert x * (y + z) == x * y + x * z
    assert (x * y) * z == x * (y * z)
    assert x - x == PadicInt.of(0, p, 6)


@given(p=PRIMES, a=INTS)
def test_unit_inverse_property(p, a):
    """a * inv(a) = 1 for every unit"""
    x = PadicInt.of(a, p, 8)
    if x.is_unit():
        assert (x * inv(x)).residue == 1


@settings(max_examples=50)
@given(p=PRIMES, k=st.integers(min_value=1, max_value=10**6), precision=st.integers(min_value=1, max_value=30))
def test_hensel_sqrt_property(p, k, precision):
    """r^2 = q and r = 1 mod p for q = 1 + k p"""
    q = 1 + k * p
    r = hensel_sqrt(q, p, precision)
    assert r.residue % p == 1
    assert (r * r).residue == q % p ** precision
