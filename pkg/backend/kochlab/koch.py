"""
Koch presentations of G_{Q,S}(p) and matrix verification.

For S = {q_1, ..., q_d} with every q_i = 1 mod p the group is generated by
x_1..x_d (inertia) subject to

    r_i = x_i^(q_i - 1) [x_i^-1, y_i^-1],   [a, b] = a^-1 b^-1 a b,

where y_i (Frobenius) satisfies y_i = prod_{j != i} x_j^L_ij modulo the
Frattini subgroup. A matrix assignment x_i -> tau_i, y_i -> sigma_i is
checked by evaluating every relator mod p^K.

The second half of the module works in the Frattini quotient
SL_2^1 / SL_2^2 = M_2^0(F_p): trace-zero matrices, span rank, and the mod-p^3
linearisation c_i A_i + sum_j ell_ij [A_i, A_j] of the relators.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, List, Optional, Sequence, Tuple

from ..utils.logger import get_logger
from .errors import BadCongruence, EvenPrime, MismatchedContext, NonInvertible, NotInSL21
from .linkdata import LinkTable, TamePrimeSet, link_table
from .padic import DEFAULT_PRECISION, hensel_sqrt, inv, require_prime
from .pmatrix import OmegaLevel, PMatrix, commutator, congruence_level_test, omega

logger = get_logger(__name__)


# =============================================================================
# Presentations and assignments
# =============================================================================


@dataclass(frozen=True)
class KochPresentation:
    """Symbolic Koch presentation: one relator per prime of S."""

    p: int
    primes: Tuple[int, ...]
    L: Tuple[Tuple[Optional[int], ...], ...]

    def __post_init__(self) -> None:
        bad = [q for q in self.primes if q % self.p != 1]
        if bad:
            raise BadCongruence(f"primes {bad} are not 1 mod {self.p}")
        if len(self.L) != len(self.primes):
            raise ValueError("link matrix does not match the prime set")

    @property
    def d(self) -> int:
        return len(self.primes)

    def relator_exponent(self, i: int) -> int:
        return self.primes[i] - 1

    def describe_relator(self, i: int) -> str:
        k = i + 1
        return f"r_{k} = x_{k}^{self.relator_exponent(i)} [x_{k}^-1, y_{k}^-1]"

    def describe_congruence(self, i: int) -> str:
        k = i + 1
        factors = [f"x_{j + 1}^{self.L[i][j]}" for j in range(self.d) if j != i]
        return f"y_{k} = " + (" ".join(factors) if factors else "1") + " mod F^p[F,F]"

    def describe(self) -> List[str]:
        lines = []
        for i in range(self.d):
            lines.append(self.describe_relator(i))
            lines.append(self.describe_congruence(i))
        return lines


def koch_presentation(S: TamePrimeSet, link: Optional[LinkTable] = None) -> KochPresentation:
    """Presentation of G_{Q,S}(p); S must already be S_min."""
    if link is None:
        link = link_table(S)
    if link.primes != S.primes:
        raise ValueError("link table was computed for a different prime set")
    return KochPresentation(S.p, S.primes, link.L)


@dataclass(frozen=True)
class MatrixAssignment:
    """Images tau_i of x_i and sigma_i of y_i in GL_n(Z/p^K)."""

    tau: Tuple[PMatrix, ...]
    sigma: Tuple[PMatrix, ...]

    def __post_init__(self) -> None:
        if len(self.tau) != len(self.sigma):
            raise ValueError("tau and sigma must have equal length")
        mats = self.tau + self.sigma
        if mats:
            ctx = mats[0].context
            if any(m.context != ctx for m in mats):
                raise MismatchedContext("assignment mixes matrix contexts")
        for m in mats:
            if not m.is_invertible():
                raise NonInvertible(f"assignment contains a singular matrix {m}")

    @property
    def d(self) -> int:
        return len(self.tau)

    @property
    def context(self) -> Optional[tuple]:
        return self.tau[0].context if self.tau else None


def relator_eval(P: KochPresentation, A: MatrixAssignment, i: int) -> PMatrix:
    """tau_i^(q_i - 1) * [tau_i^-1, sigma_i^-1] = tau_i^q_i sigma_i tau_i^-1 sigma_i^-1."""
    if not 0 <= i < P.d:
        raise IndexError(f"relator index {i} out of range for d = {P.d}")
    tau, sigma = A.tau[i], A.sigma[i]
    return (tau ** P.relator_exponent(i)) @ commutator(tau.inverse(), sigma.inverse())


def tame_relation_holds(tau: PMatrix, sigma: PMatrix, q: int) -> bool:
    """sigma tau sigma^-1 == tau^q, the tame local relation."""
    return sigma @ tau @ sigma.inverse() == tau ** q


@dataclass(frozen=True)
class RelatorCheck:
    index: int
    prime: int
    passed: bool
    omega: OmegaLevel

    def to_dict(self) -> dict:
        return {
            "index": self.index + 1,
            "prime": self.prime,
            "passed": self.passed,
            "omega": self.omega.to_dict(),
        }


@dataclass(frozen=True)
class PresentationReport:
    """Per-relator pass/fail with the omega level of each residual."""

    p: int
    precision: int
    relators: Tuple[RelatorCheck, ...]

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.relators)

    def to_dict(self) -> dict:
        return {
            "p": self.p,
            "precision": self.precision,
            "passed": self.passed,
            "relators": [r.to_dict() for r in self.relators],
        }

    def to_lines(self) -> List[str]:
        lines = []
        for r in self.relators:
            if r.passed:
                lines.append(f"relator {r.index + 1} (q = {r.prime}): relator ≡ I at precision {self.p}^{self.precision}")
            else:
                lines.append(f"relator {r.index + 1} (q = {r.prime}): FAIL, residual omega = {r.omega.level}")
        return lines


def verify_presentation(P: KochPresentation, A: MatrixAssignment) -> PresentationReport:
    """Evaluate every relator; failures are reported, not raised."""
    if A.d != P.d:
        raise ValueError(f"assignment has {A.d} pairs, presentation has {P.d} relators")
    precision = A.tau[0].precision if A.d else DEFAULT_PRECISION
    checks = []
    for i in range(P.d):
        residual = relator_eval(P, A, i)
        level = omega(residual)
        checks.append(RelatorCheck(i, P.primes[i], residual.is_identity(), level))
        logger.debug("Relator evaluated", index=i + 1, prime=P.primes[i], omega=level.level)
    return PresentationReport(P.p, precision, tuple(checks))


def local_witness(p: int, q: int, precision: int = DEFAULT_PRECISION) -> MatrixAssignment:
    """
    tau = [[1, p], [0, 1]], sigma = diag(s, s^-1) with s = sqrt(q) in 1 + pZ_p.

    tau has infinite order and sigma lies in SL_2^1, yet sigma tau sigma^-1 = tau^q.
    """
    require_prime(p)
    if p == 2:
        raise EvenPrime("the local witness needs an odd prime")
    require_prime(q)
    s = hensel_sqrt(q, p, precision)
    tau = PMatrix.of([[1, p], [0, 1]], p, precision)
    sigma = PMatrix.diagonal([s.residue, inv(s).residue], p, precision)
    return MatrixAssignment((tau,), (sigma,))


def witness_presentation(p: int, q: int) -> KochPresentation:
    """The one-relator presentation <x, y | x^(q-1) [x^-1, y^-1]> of a local witness."""
    return KochPresentation(p, (q,), ((None,),))


# =============================================================================
# Frattini quotient M_2^0(F_p)
# =============================================================================


@dataclass(frozen=True)
class TraceZeroMat:
    """2 x 2 matrix ((a, b), (c, d)) over F_p with a + d = 0."""

    p: int
    a: int
    b: int
    c: int
    d: int

    def __post_init__(self) -> None:
        for name in ("a", "b", "c", "d"):
            if not 0 <= getattr(self, name) < self.p:
                raise ValueError(f"entry {name} must be reduced mod {self.p}")
        if (self.a + self.d) % self.p:
            raise ValueError("trace must vanish mod p")

    @classmethod
    def of(cls, p: int, a: int, b: int, c: int) -> "TraceZeroMat":
        """a (E11 - E22) + b E12 + c E21."""
        return cls(p, a % p, b % p, c % p, (-a) % p)

    @classmethod
    def zero(cls, p: int) -> "TraceZeroMat":
        return cls(p, 0, 0, 0, 0)

    @property
    def coordinates(self) -> Tuple[int, int, int]:
        return (self.a, self.b, self.c)

    @property
    def trace(self) -> int:
        return (self.a + self.d) % self.p

    def is_zero(self) -> bool:
        return self.coordinates == (0, 0, 0)

    def _rows(self):
        return ((self.a, self.b), (self.c, self.d))

    def __add__(self, other: "TraceZeroMat") -> "TraceZeroMat":
        return TraceZeroMat.of(self.p, self.a + other.a, self.b + other.b, self.c + other.c)

    def scale(self, k: int) -> "TraceZeroMat":
        return TraceZeroMat.of(self.p, k * self.a, k * self.b, k * self.c)

    def bracket(self, other: "TraceZeroMat") -> "TraceZeroMat":
        """XY - YX."""
        x, y = self._rows(), other._rows()
        xy = [[sum(x[i][k] * y[k][j] for k in range(2)) for j in range(2)] for i in range(2)]
        yx = [[sum(y[i][k] * x[k][j] for k in range(2)) for j in range(2)] for i in range(2)]
        return TraceZeroMat.of(self.p, xy[0][0] - yx[0][0], xy[0][1] - yx[0][1], xy[1][0] - yx[1][0])

    def lift(self, scale: int, precision: int) -> PMatrix:
        """I + scale * A with entry representatives in [0, p)."""
        return PMatrix.of(
            [[1 + scale * self.a, scale * self.b], [scale * self.c, 1 + scale * self.d]],
            self.p,
            precision,
        )

    def to_lists(self) -> list:
        return [[self.a, self.b], [self.c, self.d]]


def frattini_image(g: PMatrix) -> TraceZeroMat:
    """1 + pA in SL_2^1 maps to A mod p."""
    if g.n != 2 or g.precision < 2 or not congruence_level_test(g, 1, special=True):
        raise NotInSL21(f"{g} is not in SL_2^1(Z/{g.prime}^{g.precision})")
    p = g.prime
    (a, b), (c, d) = g.rows
    return TraceZeroMat(p, ((a - 1) // p) % p, (b // p) % p, (c // p) % p, ((d - 1) // p) % p)


def rank_mod_p(vectors: Iterable[Sequence[int]], p: int) -> int:
    """Rank over F_p by row reduction."""
    rows = [[x % p for x in v] for v in vectors]
    if not rows:
        return 0
    rank, ncols = 0, len(rows[0])
    for col in range(ncols):
        pivot = next((r for r in range(rank, len(rows)) if rows[r][col]), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        scale = pow(rows[rank][col], -1, p)
        rows[rank] = [x * scale % p for x in rows[rank]]
        for r in range(len(rows)):
            if r != rank and rows[r][col]:
                factor = rows[r][col]
                rows[r] = [(x - factor * y) % p for x, y in zip(rows[r], rows[rank])]
        rank += 1
    return rank


def span_rank(mats: Sequence[TraceZeroMat]) -> int:
    """Dimension of the span of `mats` inside the 3-dimensional M_2^0(F_p)."""
    if not mats:
        return 0
    return rank_mod_p([m.coordinates for m in mats], mats[0].p)


# =============================================================================
# Mod p^3 linearisation
# =============================================================================


def _require_unramified_link(S: TamePrimeSet) -> None:
    p = S.p
    bad = [q for q in S.primes if q % p != 1 or q % (p * p) == 1]
    if bad:
        raise BadCongruence(f"primes {bad} must be 1 mod {p} and not 1 mod {p * p}")


def linearized_residual(
    S: TamePrimeSet, link: LinkTable, A: Sequence[TraceZeroMat]
) -> List[TraceZeroMat]:
    """residual_i = c_i A_i + sum_{j != i} ell_ij [A_i, A_j] in M_2^0(F_p)."""
    _require_unramified_link(S)
    if len(A) != len(S):
        raise ValueError(f"need {len(S)} matrices, got {len(A)}")
    if link.primes != S.primes:
        raise ValueError("link table was computed for a different prime set")
    out = []
    for i in range(len(S)):
        acc = A[i].scale(link.c[i])
        for j in range(len(S)):
            if j != i:
                acc = acc + A[i].bracket(A[j]).scale(link.ell[i][j])
        out.append(acc)
    return out


def lift_assignment(
    S: TamePrimeSet, link: LinkTable, A: Sequence[TraceZeroMat], precision: int = 3
) -> MatrixAssignment:
    """tau_i = I + p lift(A_i), sigma_i = prod_{j != i} tau_j^L_ij (Frattini correction taken trivial)."""
    p = S.p
    tau = tuple(a.lift(p, precision) for a in A)
    sigma = []
    for i in range(len(S)):
        acc = PMatrix.identity(2, p, precision)
        for j in range(len(S)):
            if j != i:
                acc = acc @ (tau[j] ** link.L[i][j])
        sigma.append(acc)
    return MatrixAssignment(tau, tuple(sigma))


@dataclass(frozen=True)
class LinearizationCheck:
    """Direct relator evaluation versus I + p^2 lift(residual), per relator."""

    p: int
    primes: Tuple[int, ...]
    inputs: Tuple[TraceZeroMat, ...]
    residuals: Tuple[TraceZeroMat, ...]
    agree: Tuple[bool, ...]
    # dimension of span(A_1, ..., A_d) in M_2^0(F_p); 3 means the images generate
    span_rank: int

    @property
    def passed(self) -> bool:
        return all(self.agree)

    def to_dict(self) -> dict:
        return {
            "p": self.p,
            "primes": list(self.primes),
            "passed": self.passed,
            "span_rank": self.span_rank,
            "relators": [
                {
                    "index": i + 1,
                    "input": a.to_lists(),
                    "residual": r.to_lists(),
                    "agrees": ok,
                }
                for i, (a, r, ok) in enumerate(zip(self.inputs, self.residuals, self.agree))
            ],
        }

    def to_lines(self) -> List[str]:
        lines = [
            f"relator {i + 1}: A = {a.to_lists()}, residual = {r.to_lists()}, "
            f"{'matches' if ok else 'DIFFERS from'} direct evaluation mod {self.p}^3"
            for i, (a, r, ok) in enumerate(zip(self.inputs, self.residuals, self.agree))
        ]
        lines.append(f"inputs span a {self.span_rank}-dimensional subspace of M_2^0(F_{self.p})")
        return lines


def linearization_check(
    S: TamePrimeSet, A: Sequence[TraceZeroMat], link: Optional[LinkTable] = None
) -> LinearizationCheck:
    """Compare the symbolic residual with a brute-force matrix expansion at K = 3."""
    if link is None:
        link = link_table(S)
    residuals = linearized_residual(S, link, A)
    P = koch_presentation(S, link)
    assignment = lift_assignment(S, link, A, precision=3)
    p = S.p
    agree = tuple(
        relator_eval(P, assignment, i) == residuals[i].lift(p * p, 3) for i in range(len(S))
    )
    return LinearizationCheck(p, S.primes, tuple(A), tuple(residuals), agree, span_rank(A))


__all__ = [
    "KochPresentation",
    "MatrixAssignment",
    "RelatorCheck",
    "PresentationReport",
    "TraceZeroMat",
    "LinearizationCheck",
    "koch_presentation",
    "relator_eval",
    "tame_relation_holds",
    "verify_presentation",
    "local_witness",
    "witness_presentation",
    "frattini_image",
    "rank_mod_p",
    "span_rank",
    "linearized_residual",
    "lift_assignment",
    "linearization_check",
]
