"""
Base classes and registry for KochLab CLI subcommands.

Each subcommand declares its flags and returns a CommandResult; the CLI
owns parsing, serialization and exit codes.
"""

import argparse
from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Sequence, Union

from ...utils.logger import get_logger
from ..config import KochConfig
from ..serialize import Report

logger = get_logger(__name__)


@dataclass(frozen=True)
class CommandResult:
    """
    Attributes:
        report: object with to_dict/to_lines, or a plain dict
        ok: False when the queried condition does not hold (exit status 1)
    """
    report: Union[Report, Dict[str, Any]]
    ok: bool = True


def int_list(text: str) -> List[int]:
    """Parse "3,3,6"."""
    try:
        return [int(part) for part in text.replace(" ", "").split(",") if part]
    except ValueError:
        raise argparse.ArgumentTypeError(f"malformed integer list: {text!r}")


def prime_list(text: str) -> List[int]:
    """Parse "7,31,229" into distinct positive integers (primality is checked later)."""
    values = int_list(text)
    if any(v <= 0 for v in values):
        raise argparse.ArgumentTypeError(f"primes must be positive: {text!r}")
    if len(set(values)) != len(values):
        raise argparse.ArgumentTypeError(f"primes must be distinct: {text!r}")
    return values


class BaseCommand(ABC):
    """Base class for all subcommands."""

    name: str = ""
    description: str = ""

    @abstractmethod
    def add_arguments(self, parser: argparse.ArgumentParser) -> None:
        """Declare the subcommand's flags."""
        pass

    @abstractmethod
    def execute(self, args: argparse.Namespace, config: KochConfig) -> CommandResult:
        """Run the computation; raise KochLabError on invalid input."""
        pass


class CommandRegistry:
    """
    Central registry for all subcommands.

    Provides discovery, parser construction and execution.
    """

    _instance: Optional["CommandRegistry"] = None
    _commands: Dict[str, BaseCommand] = {}

    def __new__(cls) -> "CommandRegistry":
        if cls._instance is None:
            cls._instance = super().__new__(cls)
            cls._instance._commands = {}
        return cls._instance

    def register_command(self, command: BaseCommand) -> None:
        """Register a command instance."""
        self._commands[command.name] = command
        logger.debug("Registered command", command_name=command.name)

    def get_command(self, name: str) -> Optional[BaseCommand]:
        return self._commands.get(name)

    def list_commands(self) -> List[str]:
        return sorted(self._commands)

    def add_subparsers(
        self, parser: argparse.ArgumentParser, parents: Sequence[argparse.ArgumentParser] = ()
    ) -> None:
        """Attach one subparser per registered command; `parents` supply shared flags."""
        sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")
        for name in self.list_commands():
            command = self._commands[name]
            child = sub.add_parser(
                name, help=command.description, description=command.description, parents=list(parents)
            )
            command.add_arguments(child)

    def execute_command(self, name: str, args: argparse.Namespace, config: KochConfig) -> CommandResult:
        command = self._commands.get(name)
        if not command:
            raise ValueError(f"Unknown command: {name}")
        return command.execute(args, config)


# Global registry instance
registry = CommandRegistry()
