"""
KochLab exception hierarchy.

Every error raised by the library derives from KochLabError and from the
builtin that best describes it, so callers may catch either.
"""


class KochLabError(Exception):
    """Base class for all library errors."""


# =============================================================================
# Arithmetic
# =============================================================================


class MismatchedContext(KochLabError, ValueError):
    """Operands live in different (prime, precision[, dimension]) contexts."""


class NonUnit(KochLabError, ArithmeticError):
    """Inversion of an element divisible by p."""


class NonInvertible(KochLabError, ArithmeticError):
    """Matrix whose determinant is not a unit."""


class NotCongruentOne(KochLabError, ValueError):
    """Input must be congruent to 1 modulo p."""


class EvenPrime(KochLabError, ValueError):
    """Operation needs an odd prime."""


class NotCoprime(KochLabError, ValueError):
    """Residue shares a factor with the modulus."""


# =============================================================================
# Group theory / checkers
# =============================================================================


class NotInSL21(KochLabError, ValueError):
    """Matrix is not in the first congruence subgroup of SL_2."""


class BadCongruence(KochLabError, ValueError):
    """Some prime is congruent to 1 modulo p^2 (or not 1 modulo p) where the rule forbids it."""


class EmptySMin(KochLabError, ValueError):
    """No prime of S is congruent to 1 modulo p."""


class WrongCardinality(KochLabError, ValueError):
    """Prime set has the wrong number of elements for the rule."""


class RequiresPGreater3(KochLabError, ValueError):
    """Rule is stated for p > 3 only."""


# =============================================================================
# Input validation
# =============================================================================


class InvalidPrimeSet(KochLabError, ValueError):
    """Prime set violates its invariants (composite, repeated, contains p)."""


class ConfigError(KochLabError, ValueError):
    """Configuration value out of range."""


__all__ = [
    "KochLabError",
    "MismatchedContext",
    "NonUnit",
    "NonInvertible",
    "NotCongruentOne",
    "EvenPrime",
    "NotCoprime",
    "NotInSL21",
    "BadCongruence",
    "EmptySMin",
    "WrongCardinality",
    "RequiresPGreater3",
    "InvalidPrimeSet",
    "ConfigError",
]
