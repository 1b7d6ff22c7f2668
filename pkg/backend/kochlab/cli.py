#!/usr/bin/env python3
"""
KochLab CLI

Command-line interface for the link-number, presentation and classification
computations.

Exit status: 0 on success, 1 when the queried condition does not hold,
2 on invalid input.
"""

import argparse
import sys
from pathlib import Path
from typing import List, Optional

from ..utils.logger import configure_logging, get_logger
from .commands import register_all_commands
from .config import KochConfig
from .errors import KochLabError
from .serialize import FORMATS, serialize

logger = get_logger(__name__)

EXIT_OK = 0
EXIT_CONDITION_FAILED = 1
EXIT_INVALID_INPUT = 2


def build_parser() -> argparse.ArgumentParser:
    registry = register_all_commands()

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=FORMATS, help="output format (default text)")
    common.add_argument("--out", type=Path, help="write the report to this file instead of stdout")

    parser = argparse.ArgumentParser(
        prog="kochlab",
        description="Link numbers, Koch presentations and finiteness criteria for G_{Q,S}(p)",
    )
    registry.add_subparsers(parser, parents=[common])
    return parser


def _config_from(args: argparse.Namespace) -> KochConfig:
    return KochConfig.from_env().with_overrides(
        precision=getattr(args, "precision", None),
        qmax=getattr(args, "qmax", None),
        workers=getattr(args, "workers", None),
        output_format=args.format,
    )


def run(argv: Optional[List[str]] = None) -> int:
    """Parse argv, run one subcommand and emit its report. Returns the exit status."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors and 0 on --help
        return EXIT_INVALID_INPUT if exc.code else EXIT_OK

    try:
        config = _config_from(args)
        config.validate()
    except KochLabError as e:
        print(f"Configuration error: {e}", file=sys.stderr)
        return EXIT_INVALID_INPUT

    configure_logging(config.log_level)

    try:
        result = register_all_commands().execute_command(args.command, args, config)
    except (KochLabError, ValueError) as e:
        logger.debug("Command rejected input", command=args.command, error=str(e))
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INVALID_INPUT

    text = serialize(result.report, config.output_format)
    if args.out is not None:
        try:
            args.out.write_text(text + "\n", encoding="utf-8")
        except OSError as e:
            logger.debug("Cannot write report", path=str(args.out), error=str(e))
            print(f"error: cannot write {args.out}: {e.strerror or e}", file=sys.stderr)
            return EXIT_INVALID_INPUT
    else:
        print(text)
    return EXIT_OK if result.ok else EXIT_CONDITION_FAILED


def main() -> None:
    """Main entry point."""
    sys.exit(run())


if __name__ == "__main__":
    main()
