"""
Arithmetic Commands

hensel-sqrt and link: the residue-level computations behind every checker.
"""

import argparse
from dataclasses import dataclass
from typing import Any, Dict, List

from ...utils.logger import get_logger
from ..config import KochConfig
from ..linkdata import TamePrimeSet, alternate_roots, link_table
from ..padic import hensel_sqrt
from .base import BaseCommand, CommandResult, int_list, prime_list, registry

logger = get_logger(__name__)


@dataclass(frozen=True)
class HenselRootReport:
    p: int
    q: int
    precision: int
    root: int

    def to_dict(self) -> Dict[str, Any]:
        return {"p": self.p, "q": self.q, "precision": self.precision, "root": self.root}

    def to_lines(self) -> List[str]:
        return [f"sqrt({self.q}) = {self.root} (mod {self.p}^{self.precision}), root = 1 mod {self.p}"]


class HenselSqrtCommand(BaseCommand):
    """Square root of q in 1 + pZ_p."""

    name = "hensel-sqrt"
    description = "Lift the square root of q = 1 mod p to precision p^K."

    def add_arguments(self, parser: argparse.ArgumentParser) -> None:
        parser.add_argument("-p", type=int, required=True, help="odd prime")
        parser.add_argument("-q", type=int, required=True, help="integer = 1 mod p")
        parser.add_argument("-K", dest="precision", type=int, help="precision exponent (default 12)")

    def execute(self, args: argparse.Namespace, config: KochConfig) -> CommandResult:
        root = hensel_sqrt(args.q, args.p, config.precision)
        logger.debug("hensel-sqrt", p=args.p, q=args.q, precision=config.precision)
        return CommandResult(HenselRootReport(args.p, args.q, config.precision, root.residue))


class LinkCommand(BaseCommand):
    """Link table of (p, S)."""

    name = "link"
    description = "Link exponents L_ij, link numbers ell_ij and congruence data of S."

    def add_arguments(self, parser: argparse.ArgumentParser) -> None:
        parser.add_argument("-p", type=int, required=True, help="odd prime")
        parser.add_argument("-S", dest="primes", type=prime_list, required=True, help="comma-separated primes")
        roots = parser.add_mutually_exclusive_group()
        roots.add_argument("--roots", type=int_list, help="primitive root per prime, in sorted prime order")
        roots.add_argument(
            "--alternate-roots",
            action="store_true",
            help="use the second-smallest primitive root of every prime",
        )

    def execute(self, args: argparse.Namespace, config: KochConfig) -> CommandResult:
        S = TamePrimeSet.of(args.p, args.primes)
        roots = args.roots
        if args.alternate_roots:
            roots = alternate_roots(S.primes)
        return CommandResult(link_table(S, roots))


class ArithmeticCommands:
    """Container for arithmetic commands."""

    @staticmethod
    def register_all():
        registry.register_command(HenselSqrtCommand())
        registry.register_command(LinkCommand())
