"""
Matrices over Z_p at precision p^K.

PMatrix stores its entries as residues in [0, p^K) and hands out PadicInt
values on indexing. Group operations (product, inverse, power, commutator)
are exact mod p^K. The p-valuation omega(g) = min_ij v_p((g - 1)_ij) drives
the congruence-subgroup tests GL_n^i / SL_n^i.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Iterable, Literal, Sequence, Tuple, Union

from .errors import MismatchedContext, NonInvertible
from .padic import DEFAULT_PRECISION, PadicInt, ValLevel, require_prime, valuation

MatOp = Literal["mul", "inv", "pow", "det"]

Rows = Tuple[Tuple[int, ...], ...]


# OmegaLevel has exactly the shape of a valuation level.
OmegaLevel = ValLevel


@dataclass(frozen=True)
class PMatrix:
    """n x n matrix over Z/p^K."""

    prime: int
    precision: int
    rows: Rows

    def __post_init__(self) -> None:
        require_prime(self.prime)
        if self.precision < 1:
            raise ValueError(f"precision must be >= 1, got {self.precision}")
        n = len(self.rows)
        if n < 1 or any(len(row) != n for row in self.rows):
            raise ValueError("matrix must be square with dimension >= 1")
        m = self.modulus
        if any(not 0 <= x < m for row in self.rows for x in row):
            raise ValueError("entries must be reduced residues; use PMatrix.of")

    # -- construction -------------------------------------------------------

    @classmethod
    def of(
        cls,
        rows: Iterable[Iterable[Union[int, PadicInt]]],
        prime: int,
        precision: int = DEFAULT_PRECISION,
    ) -> "PMatrix":
        """Build from integer (or PadicInt) rows, reducing mod p^K."""
        m = prime ** precision
        reduced = []
        for row in rows:
            out = []
            for x in row:
                if isinstance(x, PadicInt):
                    if x.context != (prime, precision):
                        raise MismatchedContext(f"entry context {x.context} != {(prime, precision)}")
                    x = x.residue
                out.append(x % m)
            reduced.append(tuple(out))
        return cls(prime, precision, tuple(reduced))

    @classmethod
    def identity(cls, n: int, prime: int, precision: int = DEFAULT_PRECISION) -> "PMatrix":
        return cls.of([[int(i == j) for j in range(n)] for i in range(n)], prime, precision)

    @classmethod
    def diagonal(cls, values: Sequence[int], prime: int, precision: int = DEFAULT_PRECISION) -> "PMatrix":
        n = len(values)
        return cls.of(
            [[values[i] if i == j else 0 for j in range(n)] for i in range(n)], prime, precision
        )

    @classmethod
    def elementary(
        cls, n: int, i: int, j: int, scale: int, prime: int, precision: int = DEFAULT_PRECISION
    ) -> "PMatrix":
        """I + scale * E_ij (0-based indices)."""
        rows = [[int(r == c) for c in range(n)] for r in range(n)]
        rows[i][j] += scale
        return cls.of(rows, prime, precision)

    # -- basic accessors ----------------------------------------------------

    @property
    def n(self) -> int:
        return len(self.rows)

    @property
    def modulus(self) -> int:
        return self.prime ** self.precision

    @property
    def context(self) -> tuple:
        return (self.prime, self.precision, self.n)

    def __getitem__(self, index: Tuple[int, int]) -> PadicInt:
        i, j = index
        return PadicInt(self.prime, self.precision, self.rows[i][j])

    def _like(self, rows) -> "PMatrix":
        m = self.modulus
        return PMatrix(self.prime, self.precision, tuple(tuple(x % m for x in row) for row in rows))

    def _check(self, other: "PMatrix") -> None:
        if not isinstance(other, PMatrix) or other.context != self.context:
            raise MismatchedContext(
                f"matrix contexts differ: {self.context} vs {getattr(other, 'context', other)}"
            )

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other: "PMatrix") -> "PMatrix":
        self._check(other)
        return self._like(
            [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(self.rows, other.rows)]
        )

    def __sub__(self, other: "PMatrix") -> "PMatrix":
        self._check(other)
        return self._like(
            [[a - b for a, b in zip(ra, rb)] for ra, rb in zip(self.rows, other.rows)]
        )

    def __matmul__(self, other: "PMatrix") -> "PMatrix":
        self._check(other)
        cols = list(zip(*other.rows))
        return self._like(
            [[sum(a * b for a, b in zip(row, col)) for col in cols] for row in self.rows]
        )

    def scale(self, factor: int) -> "PMatrix":
        return self._like([[factor * x for x in row] for row in self.rows])

    def __pow__(self, exponent: int) -> "PMatrix":
        base = self
        if exponent < 0:
            base, exponent = self.inverse(), -exponent
        result = PMatrix.identity(self.n, self.prime, self.precision)
        while exponent:
            if exponent & 1:
                result = result @ base
            base = base @ base
            exponent >>= 1
        return result

    def det(self) -> PadicInt:
        """Determinant via Bareiss fraction-free elimination over Z, then reduced."""
        a = [list(row) for row in self.rows]
        n, sign, prev = self.n, 1, 1
        for k in range(n - 1):
            if a[k][k] == 0:
                swap = next((r for r in range(k + 1, n) if a[r][k] != 0), None)
                if swap is None:
                    return PadicInt(self.prime, self.precision, 0)
                a[k], a[swap] = a[swap], a[k]
                sign = -sign
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            prev = a[k][k]
        return PadicInt.of(sign * a[n - 1][n - 1], self.prime, self.precision)

    def is_invertible(self) -> bool:
        return self.det().is_unit()

    def inverse(self) -> "PMatrix":
        """
        Gauss-Jordan elimination with unit pivots over Z/p^K.

        A matrix over a local ring is invertible iff its determinant is a
        unit, and then every column has a unit pivot candidate.
        """
        p, m, n = self.prime, self.modulus, self.n
        aug = [list(row) + [int(i == j) for j in range(n)] for i, row in enumerate(self.rows)]
        for col in range(n):
            pivot = next((r for r in range(col, n) if aug[r][col] % p != 0), None)
            if pivot is None:
                raise NonInvertible("determinant is not a unit")
            aug[col], aug[pivot] = aug[pivot], aug[col]
            scale = pow(aug[col][col], -1, m)
            aug[col] = [x * scale % m for x in aug[col]]
            for r in range(n):
                if r != col and aug[r][col]:
                    factor = aug[r][col]
                    aug[r] = [(x - factor * y) % m for x, y in zip(aug[r], aug[col])]
        return self._like([row[n:] for row in aug])

    def is_identity(self) -> bool:
        return all(x == int(i == j) for i, row in enumerate(self.rows) for j, x in enumerate(row))

    def to_lists(self) -> list:
        return [list(row) for row in self.rows]

    def __str__(self) -> str:
        return "[" + ", ".join("[" + ", ".join(map(str, row)) + "]" for row in self.rows) + "]"


# =============================================================================
# Operations
# =============================================================================


def mat_op(kind: MatOp, *args) -> Union[PMatrix, PadicInt]:
    """
    Dispatch a matrix operation.

    mat_op("mul", g, h), mat_op("inv", g), mat_op("pow", g, e), mat_op("det", g)
    """
    if kind == "mul":
        g, h = args
        return g @ h
    if kind == "inv":
        (g,) = args
        return g.inverse()
    if kind == "pow":
        g, exponent = args
        if exponent < 0:
            raise ValueError("exponent must be non-negative")
        return g ** exponent
    if kind == "det":
        (g,) = args
        return g.det()
    raise ValueError(f"unknown matrix operation: {kind!r}")


def commutator(g: PMatrix, h: PMatrix) -> PMatrix:
    """g^-1 h^-1 g h."""
    g._check(h)
    return g.inverse() @ h.inverse() @ g @ h


def omega(g: PMatrix) -> OmegaLevel:
    """
    min over entries of v_p((g - 1)_ij), capped at K.

    Level 0 means g is not in GL_n^1; saturated means g = 1 mod p^K.
    """
    diff = g - PMatrix.identity(g.n, g.prime, g.precision)
    levels = [
        valuation(PadicInt(g.prime, g.precision, x)) for row in diff.rows for x in row if x
    ]
    if not levels:
        return OmegaLevel(g.precision, saturated=True)
    return min(levels)


def congruence_level_test(g: PMatrix, i: int, special: bool = False) -> bool:
    """Membership in GL_n^i = 1 + p^i M_n(Z_p), or SL_n^i when `special`."""
    if not 1 <= i <= g.precision:
        raise ValueError(f"level must be in [1, {g.precision}], got {i}")
    if omega(g).level < i:
        return False
    return not special or g.det().residue == 1


def torsion_order_bound_char_p(p: int, n: int, d: int) -> int:
    """p^n (p^(nd) - 1): bound on torsion orders in GL_n over a char-p local field of degree <= d."""
    require_prime(p)
    if n < 1 or d < 1:
        raise ValueError("n and d must be >= 1")
    return p ** n * (p ** (n * d) - 1)


def valuation_axioms_hold(g: PMatrix, h: PMatrix) -> Dict[str, bool]:
    """
    Evaluate the p-valuation axioms on a pair from GL_n^1 (p odd):

    - difference: omega(g h^-1) >= min(omega(g), omega(h))
    - commutator: omega([g, h]) >= omega(g) + omega(h)
    - power:      omega(g^p) == omega(g) + 1

    Sums saturate at K.
    """
    K, p = g.precision, g.prime
    wg, wh = omega(g).level, omega(h).level
    return {
        "difference": omega(g @ h.inverse()).level >= min(wg, wh),
        "commutator": omega(commutator(g, h)).level >= min(wg + wh, K),
        "power": omega(g ** p).level == min(wg + 1, K),
    }


__all__ = [
    "PMatrix",
    "OmegaLevel",
    "mat_op",
    "commutator",
    "omega",
    "congruence_level_test",
    "torsion_order_bound_char_p",
    "valuation_axioms_hold",
]
