import argparse
import logging
import sys
from typing import List, Optional

from pydantic import ValidationError

from app.cli import deps
from app.cli.commands import COMMANDS
from app.core.exceptions import RankingError
from app.core.logging import setup_logging

logger = logging.getLogger(__name__)

DESCRIPTION = """\
Rate and rank objects from paired comparisons.

Reads match results in one of three CSV dialects (per round, aggregated, digraph) and
computes score, generalized row sum, least squares and positional power ratings.
Exit status: 0 on success, 2 on bad input or parameters, 3 when the comparison graph
does not admit the requested method (disconnected, regular bipartite, no convergence).
"""


def build_parser() -> argparse.ArgumentParser:
    # 1. Create the parser
    parser = argparse.ArgumentParser(
        prog="ranking",
        description=DESCRIPTION,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )

    # 2. Include subcommands
    parent = deps.input_arguments()
    subparsers = parser.add_subparsers(dest="command", metavar="COMMAND", required=True)
    for command in COMMANDS:
        command.register(subparsers, parent)
    return parser


def run_cli(argv: Optional[List[str]] = None) -> int:
    """Run one subcommand; the result goes to stdout, errors to stderr. Returns the exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else 2

    setup_logging({0: None, 1: "INFO"}.get(args.verbose, "DEBUG"))
    logger.debug("running %s", args.command)

    try:
        output = args.handler(args)
    except RankingError as e:
        print(f"error: {e.detail}", file=sys.stderr)
        return e.exit_code
    except ValidationError as e:
        print(f"error: {e.errors()[0]['msg']}", file=sys.stderr)
        return 2

    sys.stdout.write(output)
    return 0


def main() -> None:
    sys.exit(run_cli())


if __name__ == "__main__":
    main()
