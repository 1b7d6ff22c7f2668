"""Seeded random elements of congruence subgroups, for property checks and `linearize --seed`."""

from __future__ import annotations

import random
from typing import List, Optional, Sequence

from .koch import TraceZeroMat
from .padic import require_prime
from .pmatrix import PMatrix


def random_gl1(rng: random.Random, n: int, p: int, precision: int) -> PMatrix:
    """I + pX with X uniform over M_n(Z/p^(K-1))."""
    require_prime(p)
    modulus = p ** precision
    rows = [
        [((1 if i == j else 0) + p * rng.randrange(modulus)) % modulus for j in range(n)]
        for i in range(n)
    ]
    return PMatrix.of(rows, p, precision)


def random_sl21(rng: random.Random, p: int, precision: int) -> PMatrix:
    """[[a, b], [c, d]] with a = 1 mod p, p | b, p | c and d fixed by det = 1."""
    require_prime(p)
    modulus = p ** precision
    a = (1 + p * rng.randrange(modulus)) % modulus
    b = p * rng.randrange(modulus) % modulus
    c = p * rng.randrange(modulus) % modulus
    d = (1 + b * c) * pow(a, -1, modulus) % modulus
    return PMatrix.of([[a, b], [c, d]], p, precision)


def random_trace_zero(rng: random.Random, p: int) -> TraceZeroMat:
    return TraceZeroMat.of(p, rng.randrange(p), rng.randrange(p), rng.randrange(p))


def random_prime_subset(
    rng: random.Random, pool: Sequence[int], size: int, exclude: Optional[int] = None
) -> List[int]:
    candidates = [q for q in pool if q != exclude]
    return sorted(rng.sample(candidates, size))


__all__ = [
    "random_gl1",
    "random_sl21",
    "random_trace_zero",
    "random_prime_subset",
]
