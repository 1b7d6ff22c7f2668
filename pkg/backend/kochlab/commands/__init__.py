"""
KochLab CLI Commands

Each module groups related subcommands and registers them with the shared
CommandRegistry.
"""

from .arithmetic_commands import ArithmeticCommands
from .base import BaseCommand, CommandRegistry, CommandResult, registry
from .classify_commands import ClassifyCommands
from .group_commands import GroupCommands


def register_all_commands() -> CommandRegistry:
    """Register every subcommand (idempotent)."""
    ArithmeticCommands.register_all()
    GroupCommands.register_all()
    ClassifyCommands.register_all()
    return registry


__all__ = [
    "BaseCommand",
    "CommandRegistry",
    "CommandResult",
    "registry",
    "register_all_commands",
]
