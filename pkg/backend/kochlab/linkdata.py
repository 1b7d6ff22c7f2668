"""
Residue arithmetic for tame prime sets: primitive roots, discrete logs,
link numbers and p-th power residue tests.

For S = {q_1 < ... < q_d} and a primitive root g_j mod q_j, the link
exponent L_ij is defined by

    q_i = g_j^(-L_ij)  (mod q_j),   0 <= L_ij < q_j - 1,

and the link number ell_ij is L_ij mod p. ell_ij depends on the choice of
g_j only up to a nonzero scalar per column j, so everything downstream of
this module consumes only choice-invariant predicates.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import isqrt
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from sympy import is_primitive_root, isprime, multiplicity
from sympy import primitive_root as _smallest_primitive_root

from ..utils.logger import get_logger
from .errors import InvalidPrimeSet, NotCoprime

logger = get_logger(__name__)

BRUTE_FORCE_LIMIT = 10_000


# =============================================================================
# Prime sets
# =============================================================================


@dataclass(frozen=True)
class TamePrimeSet:
    """An odd prime p and a strictly increasing tuple of primes different from p."""

    p: int
    primes: Tuple[int, ...]

    def __post_init__(self) -> None:
        if not isinstance(self.p, int) or self.p == 2 or not isprime(self.p):
            raise InvalidPrimeSet(f"p must be an odd prime, got {self.p!r}")
        for q in self.primes:
            if not isinstance(q, int) or not isprime(q):
                raise InvalidPrimeSet(f"{q!r} is not a prime")
            if q == self.p:
                raise InvalidPrimeSet(f"S must not contain p = {self.p}")
        if any(a >= b for a, b in zip(self.primes, self.primes[1:])):
            raise InvalidPrimeSet(f"primes must be distinct and increasing: {self.primes}")

    @classmethod
    def of(cls, p: int, primes: Sequence[int]) -> "TamePrimeSet":
        """Sort the primes; duplicates are rejected rather than merged."""
        ordered = tuple(sorted(primes))
        if len(set(ordered)) != len(ordered):
            raise InvalidPrimeSet(f"repeated prime in {list(primes)}")
        return cls(p, ordered)

    def __len__(self) -> int:
        return len(self.primes)

    def __iter__(self) -> Iterator[int]:
        return iter(self.primes)


# =============================================================================
# Primitive roots and discrete logarithms
# =============================================================================


def primitive_roots(q: int) -> Iterator[int]:
    """Primitive roots mod q in increasing order (just 1 for q = 2)."""
    if q == 2:
        yield 1
        return
    for g in range(2, q):
        if is_primitive_root(g, q):
            yield g


@lru_cache(maxsize=None)
def primitive_root(q: int) -> int:
    """Smallest primitive root mod q; 1 for the trivial group mod 2."""
    return _smallest_primitive_root(q)


def alternate_roots(primes: Sequence[int], rank: int = 1) -> Tuple[int, ...]:
    """
    The rank-th smallest primitive root (0-based) of every prime.

    Primes with fewer roots (2, 3) keep their largest one.
    """
    chosen = []
    for q in primes:
        root = None
        for k, g in enumerate(primitive_roots(q)):
            root = g
            if k == rank:
                break
        chosen.append(root)
    return tuple(chosen)


def discrete_log(q: int, g: int, a: int) -> int:
    """
    e in [0, q - 1) with g^e = a (mod q).

    Brute force below BRUTE_FORCE_LIMIT, baby-step/giant-step above.

    Raises:
        NotCoprime: q divides a.
        ValueError: g does not generate a (g is not a primitive root).
    """
    a %= q
    if a == 0:
        raise NotCoprime(f"{q} divides the argument")
    order = q - 1
    if order == 1:
        return 0

    if q < BRUTE_FORCE_LIMIT:
        x = 1
        for e in range(order):
            if x == a:
                return e
            x = x * g % q
        raise ValueError(f"{a} is not a power of {g} mod {q}")

    m = isqrt(order) + 1
    baby: Dict[int, int] = {}
    x = 1
    for j in range(m):
        baby.setdefault(x, j)
        x = x * g % q
    giant = pow(g, -m, q)
    gamma = a
    for i in range(m):
        j = baby.get(gamma)
        if j is not None:
            return (i * m + j) % order
        gamma = gamma * giant % q
    raise ValueError(f"{a} is not a power of {g} mod {q}")


def is_pth_power(a: int, q: int, p: int) -> bool:
    """
    Whether a is a p-th power mod q.

    When q != 1 mod p the p-th power map is a bijection of (Z/q)^*.
    """
    if a % q == 0:
        raise NotCoprime(f"{q} divides {a}")
    if (q - 1) % p:
        return True
    return pow(a, (q - 1) // p, q) == 1


def p_valuation(n: int, p: int) -> int:
    """v_p(n) for n != 0."""
    if n == 0:
        raise ValueError("v_p(0) is infinite")
    return int(multiplicity(p, abs(n)))


def s_min(p: int, S: TamePrimeSet) -> TamePrimeSet:
    """Primes of S that are 1 mod p: the only ones that can ramify in a p-extension."""
    if p != S.p:
        raise ValueError(f"prime set was built for p = {S.p}, not {p}")
    return TamePrimeSet(S.p, tuple(q for q in S.primes if q % p == 1))


# =============================================================================
# Link table
# =============================================================================


@dataclass(frozen=True)
class LinkTable:
    """
    Link data of a prime set. Indices are 0-based; diagonals are None.

    `ell` values are basis dependent (they scale with the root choice per
    column); `c`, `f` and the congruence flags are not.
    """

    p: int
    primes: Tuple[int, ...]
    roots: Tuple[int, ...]
    L: Tuple[Tuple[Optional[int], ...], ...]
    ell: Tuple[Tuple[Optional[int], ...], ...]
    c: Tuple[Optional[int], ...]
    f: Tuple[int, ...]
    cong1_mod_p: Tuple[bool, ...]
    cong1_mod_p2: Tuple[bool, ...]

    @property
    def d(self) -> int:
        return len(self.primes)

    def to_dict(self) -> dict:
        return {
            "p": self.p,
            "primes": list(self.primes),
            "roots": list(self.roots),
            "L": [list(row) for row in self.L],
            "ell": [list(row) for row in self.ell],
            "c": list(self.c),
            "f": list(self.f),
            "cong1_mod_p": list(self.cong1_mod_p),
            "cong1_mod_p2": list(self.cong1_mod_p2),
        }

    @classmethod
    def from_dict(cls, data: dict) -> "LinkTable":
        return cls(
            p=data["p"],
            primes=tuple(data["primes"]),
            roots=tuple(data["roots"]),
            L=tuple(tuple(row) for row in data["L"]),
            ell=tuple(tuple(row) for row in data["ell"]),
            c=tuple(data["c"]),
            f=tuple(data["f"]),
            cong1_mod_p=tuple(data["cong1_mod_p"]),
            cong1_mod_p2=tuple(data["cong1_mod_p2"]),
        )

    def to_lines(self) -> List[str]:
        lines = [f"p = {self.p}, S = {list(self.primes)}, roots = {list(self.roots)}"]
        for i, q in enumerate(self.primes):
            c = "-" if self.c[i] is None else self.c[i]
            lines.append(
                f"q_{i + 1} = {q}: f = {self.f[i]}, c = {c}, "
                f"1 mod p: {self.cong1_mod_p[i]}, 1 mod p^2: {self.cong1_mod_p2[i]}"
            )
        for i in range(self.d):
            for j in range(self.d):
                if i != j:
                    lines.append(f"L_{i + 1}{j + 1} = {self.L[i][j]}, ell_{i + 1}{j + 1} = {self.ell[i][j]}")
        return lines


def link_table(S: TamePrimeSet, roots: Optional[Sequence[int]] = None) -> LinkTable:
    """
    Compute L_ij, ell_ij, c_i, f_i and congruence flags for S.

    Args:
        S: the prime set; p is taken from it.
        roots: primitive roots to use per prime (defaults to the smallest ones).
    """
    p, primes = S.p, S.primes
    if roots is None:
        roots = tuple(primitive_root(q) for q in primes)
    else:
        roots = tuple(roots)
        if len(roots) != len(primes):
            raise ValueError("need one root per prime")
        for g, q in zip(roots, primes):
            if g % q == 0 or not is_primitive_root(g, q):
                raise ValueError(f"{g} is not a primitive root mod {q}")

    d = len(primes)
    L: List[List[Optional[int]]] = [[None] * d for _ in range(d)]
    ell: List[List[Optional[int]]] = [[None] * d for _ in range(d)]
    for j, qj in enumerate(primes):
        for i, qi in enumerate(primes):
            if i == j:
                continue
            value = (-discrete_log(qj, roots[j], qi)) % (qj - 1)
            L[i][j] = value
            ell[i][j] = value % p

    cong1 = tuple(q % p == 1 for q in primes)
    cong2 = tuple(q % (p * p) == 1 for q in primes)
    table = LinkTable(
        p=p,
        primes=primes,
        roots=roots,
        L=tuple(tuple(row) for row in L),
        ell=tuple(tuple(row) for row in ell),
        c=tuple(((q - 1) // p) % p if ok else None for q, ok in zip(primes, cong1)),
        f=tuple(p_valuation(q - 1, p) for q in primes),
        cong1_mod_p=cong1,
        cong1_mod_p2=cong2,
    )
    logger.debug("Link table built", p=p, primes=list(primes), roots=list(roots))
    return table


__all__ = [
    "TamePrimeSet",
    "LinkTable",
    "BRUTE_FORCE_LIMIT",
    "primitive_root",
    "primitive_roots",
    "alternate_roots",
    "discrete_log",
    "is_pth_power",
    "p_valuation",
    "s_min",
    "link_table",
]
