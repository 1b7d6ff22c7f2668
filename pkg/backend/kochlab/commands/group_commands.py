"""
Group Commands

Matrix-level checks of Koch relators: the local witness and the mod p^3
linearisation.
"""

import argparse
import random

from ...utils.logger import get_logger
from ..config import KochConfig
from ..koch import MatrixAssignment, linearization_check, local_witness, verify_presentation, witness_presentation
from ..linkdata import TamePrimeSet
from ..pmatrix import PMatrix
from ..sampling import random_trace_zero
from .base import BaseCommand, CommandResult, prime_list, registry

logger = get_logger(__name__)


class VerifyWitnessCommand(BaseCommand):
    """Check tau^(q-1) [tau^-1, sigma^-1] = I for the explicit local witness."""

    name = "verify-witness"
    description = "Verify the one-relator local witness for (p, q) at precision p^K."

    def add_arguments(self, parser: argparse.ArgumentParser) -> None:
        parser.add_argument("-p", type=int, required=True, help="odd prime")
        parser.add_argument("-q", type=int, required=True, help="prime = 1 mod p")
        parser.add_argument("-K", dest="precision", type=int, help="precision exponent (default 12)")
        parser.add_argument(
            "--control",
            action="store_true",
            help="negative control: replace sigma by the identity (expected to fail)",
        )

    def execute(self, args: argparse.Namespace, config: KochConfig) -> CommandResult:
        witness = local_witness(args.p, args.q, config.precision)
        if args.control:
            identity = PMatrix.identity(2, args.p, config.precision)
            witness = MatrixAssignment(witness.tau, (identity,))
        report = verify_presentation(witness_presentation(args.p, args.q), witness)
        logger.info("verify-witness", p=args.p, q=args.q, control=args.control, passed=report.passed)
        return CommandResult(report, ok=report.passed)


class LinearizeCommand(BaseCommand):
    """Seeded comparison of the symbolic mod p^3 residual with direct evaluation."""

    name = "linearize"
    description = "Compare relators at K = 3 with c_i A_i + sum ell_ij [A_i, A_j] for random A_i."

    def add_arguments(self, parser: argparse.ArgumentParser) -> None:
        parser.add_argument("-p", type=int, required=True, help="odd prime")
        parser.add_argument("-S", dest="primes", type=prime_list, required=True, help="primes = 1 mod p, != 1 mod p^2")
        parser.add_argument("--seed", type=int, default=0, help="random seed for the A_i")

    def execute(self, args: argparse.Namespace, config: KochConfig) -> CommandResult:
        S = TamePrimeSet.of(args.p, args.primes)
        rng = random.Random(args.seed)
        A = [random_trace_zero(rng, S.p) for _ in S.primes]
        check = linearization_check(S, A)
        return CommandResult(check, ok=check.passed)


class GroupCommands:
    """Container for group commands."""

    @staticmethod
    def register_all():
        registry.register_command(VerifyWitnessCommand())
        registry.register_command(LinearizeCommand())
