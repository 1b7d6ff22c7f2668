"""
Classification Commands

classify, tame-bound and search-triples.
"""

import argparse
from dataclasses import dataclass
from typing import Any, Dict, List, Tuple

from ...utils.logger import get_logger
from ..classify import classify, search_labute_triples, tame_degree_bound
from ..config import KochConfig
from ..linkdata import alternate_roots
from .base import BaseCommand, CommandResult, prime_list, registry

logger = get_logger(__name__)


@dataclass(frozen=True)
class TripleSearchReport:
    p: int
    qmax: int
    triples: Tuple[Tuple[int, int, int], ...]

    def to_dict(self) -> Dict[str, Any]:
        return {"p": self.p, "qmax": self.qmax, "triples": [list(t) for t in self.triples]}

    def to_lines(self) -> List[str]:
        if not self.triples:
            return [f"no triples for p = {self.p} up to {self.qmax}"]
        return [f"{{{a}, {b}, {c}}}" for a, b, c in self.triples]


class ClassifyCommand(BaseCommand):
    name = "classify"
    description = "Run every theorem-precondition checker on (p, S)."

    def add_arguments(self, parser: argparse.ArgumentParser) -> None:
        parser.add_argument("-p", type=int, required=True, help="odd prime")
        parser.add_argument("-S", dest="primes", type=prime_list, required=True, help="comma-separated primes")
        parser.add_argument(
            "--alternate-roots",
            action="store_true",
            help="compute link numbers with second-smallest primitive roots (report is unchanged)",
        )

    def execute(self, args: argparse.Namespace, config: KochConfig) -> CommandResult:
        roots = None
        if args.alternate_roots:
            primes = sorted(args.primes)
            roots = dict(zip(primes, alternate_roots(primes)))
        return CommandResult(classify(args.p, args.primes, roots))


class TameBoundCommand(BaseCommand):
    name = "tame-bound"
    description = "Degree bound for tame extensions of Q unramified outside S (prod S < 60.1)."

    def add_arguments(self, parser: argparse.ArgumentParser) -> None:
        parser.add_argument("-S", dest="primes", type=prime_list, required=True, help="comma-separated primes")

    def execute(self, args: argparse.Namespace, config: KochConfig) -> CommandResult:
        result = tame_degree_bound(args.primes)
        return CommandResult(result, ok=result.bounded)


class SearchTriplesCommand(BaseCommand):
    name = "search-triples"
    description = "Enumerate 3-sets of primes <= qmax satisfying every necessary condition for SL_2^1."

    def add_arguments(self, parser: argparse.ArgumentParser) -> None:
        parser.add_argument("-p", type=int, required=True, help="odd prime")
        parser.add_argument("--qmax", type=int, help="largest prime to consider (default 1000)")
        parser.add_argument("--parallel", action="store_true", help="scan with a process pool")
        parser.add_argument("--workers", type=int, help="process pool size")

    def execute(self, args: argparse.Namespace, config: KochConfig) -> CommandResult:
        triples = search_labute_triples(args.p, config.qmax, parallel=args.parallel, workers=config.workers)
        logger.info("search-triples", p=args.p, qmax=config.qmax, found=len(triples))
        return CommandResult(TripleSearchReport(args.p, config.qmax, tuple(triples)))


class ClassifyCommands:
    """Container for classification commands."""

    @staticmethod
    def register_all():
        registry.register_command(ClassifyCommand())
        registry.register_command(TameBoundCommand())
        registry.register_command(SearchTriplesCommand())
