"""
Exact arithmetic in Z_p truncated at precision p^K.

A PadicInt is a residue modulo p^K together with its context (p, K).
Values are immutable; every operation returns a new value. Arithmetic is
plain big-integer arithmetic reduced mod p^K, no floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Literal

from sympy import isprime, multiplicity

from .errors import EvenPrime, MismatchedContext, NonUnit, NotCongruentOne

DEFAULT_PRECISION = 12

RingOp = Literal["add", "sub", "mul"]


@lru_cache(maxsize=4096)
def require_prime(p: int) -> int:
    """Return p if it is a prime integer, else raise ValueError."""
    if not isinstance(p, int) or isinstance(p, bool) or not isprime(p):
        raise ValueError(f"{p!r} is not a prime")
    return p


# =============================================================================
# Value types
# =============================================================================


@dataclass(frozen=True, order=True)
class ValLevel:
    """
    Finite-precision p-adic valuation.

    `saturated` means the value is 0 mod p^K, i.e. indistinguishable from
    infinity at this precision; then `level` equals K.
    """

    level: int
    saturated: bool = False

    def __post_init__(self) -> None:
        if self.level < 0:
            raise ValueError(f"valuation level must be >= 0, got {self.level}")

    def to_dict(self) -> dict:
        return {"level": self.level, "saturated": self.saturated}


@dataclass(frozen=True)
class PadicInt:
    """Residue of a p-adic integer modulo prime**precision."""

    prime: int
    precision: int
    residue: int

    def __post_init__(self) -> None:
        require_prime(self.prime)
        if self.precision < 1:
            raise ValueError(f"precision must be >= 1, got {self.precision}")
        if not 0 <= self.residue < self.modulus:
            raise ValueError(
                f"residue {self.residue} outside [0, {self.prime}^{self.precision})"
            )

    @classmethod
    def of(cls, value: int, prime: int, precision: int = DEFAULT_PRECISION) -> "PadicInt":
        """Reduce an arbitrary integer into Z/p^K."""
        return cls(prime, precision, value % (prime ** precision))

    @property
    def modulus(self) -> int:
        return self.prime ** self.precision

    @property
    def context(self) -> tuple:
        return (self.prime, self.precision)

    def _like(self, value: int) -> "PadicInt":
        return PadicInt(self.prime, self.precision, value % self.modulus)

    def _coerce(self, other) -> "PadicInt":
        if isinstance(other, PadicInt):
            if other.context != self.context:
                raise MismatchedContext(
                    f"cannot combine Z/{self.prime}^{self.precision} with "
                    f"Z/{other.prime}^{other.precision}"
                )
            return other
        if isinstance(other, int) and not isinstance(other, bool):
            return self._like(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self._like(self.residue + other.residue)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self._like(self.residue - other.residue)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self._like(other.residue - self.residue)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self._like(self.residue * other.residue)

    __rmul__ = __mul__

    def __neg__(self) -> "PadicInt":
        return self._like(-self.residue)

    def __pow__(self, exponent: int) -> "PadicInt":
        return power(self, exponent)

    def is_unit(self) -> bool:
        return self.residue % self.prime != 0

    def __int__(self) -> int:
        return self.residue

    def __str__(self) -> str:
        return f"{self.residue} (mod {self.prime}^{self.precision})"


# =============================================================================
# Operations
# =============================================================================


def ring_op(kind: RingOp, a: PadicInt, b: PadicInt) -> PadicInt:
    """Dispatch add/sub/mul on two values of the same context."""
    if a.context != b.context:
        raise MismatchedContext(f"contexts differ: {a.context} vs {b.context}")
    if kind == "add":
        return a + b
    if kind == "sub":
        return a - b
    if kind == "mul":
        return a * b
    raise ValueError(f"unknown ring operation: {kind!r}")


def inv(a: PadicInt) -> PadicInt:
    """Inverse of a unit of Z/p^K."""
    if not a.is_unit():
        raise NonUnit(f"{a.residue} is divisible by {a.prime}")
    return PadicInt(a.prime, a.precision, pow(a.residue, -1, a.modulus))


def valuation(a: PadicInt) -> ValLevel:
    """
    p-adic valuation of the residue, capped at K.

    Zero is reported as saturated at level K.
    """
    if a.residue == 0:
        return ValLevel(a.precision, saturated=True)
    return ValLevel(int(multiplicity(a.prime, a.residue)))


def power(a: PadicInt, exponent: int) -> PadicInt:
    """a**exponent mod p^K; the exponent may be arbitrarily large."""
    if exponent < 0:
        raise ValueError("exponent must be non-negative; invert first")
    return PadicInt(a.prime, a.precision, pow(a.residue, exponent, a.modulus))


def hensel_sqrt(q: int, p: int, precision: int = DEFAULT_PRECISION) -> PadicInt:
    """
    Square root of q in 1 + pZ_p, correct modulo p^precision.

    Newton iteration r <- r - (r^2 - q) / (2r) starting from r = 1, doubling
    the precision each step. Every correction is divisible by p, so the
    result stays on the branch r = 1 mod p.

    Raises:
        EvenPrime: p == 2.
        NotCongruentOne: q is not 1 mod p.
    """
    require_prime(p)
    if p == 2:
        raise EvenPrime("square roots are only lifted for odd p")
    if q <= 0:
        raise ValueError(f"q must be positive, got {q}")
    if q % p != 1:
        raise NotCongruentOne(f"{q} = {q % p} mod {p}, expected 1")
    if precision < 1:
        raise ValueError(f"precision must be >= 1, got {precision}")

    root, reached = 1, 1
    while reached < precision:
        reached = min(2 * reached, precision)
        modulus = p ** reached
        root = (root - (root * root - q) * pow(2 * root, -1, modulus)) % modulus
    return PadicInt(p, precision, root % (p ** precision))


__all__ = [
    "DEFAULT_PRECISION",
    "PadicInt",
    "ValLevel",
    "ring_op",
    "inv",
    "valuation",
    "power",
    "hensel_sqrt",
]
