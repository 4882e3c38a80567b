"""
Shared command-line dependencies: input arguments, input loading and output writing.
"""

import argparse
import logging
import sys
from pathlib import Path
from typing import Optional, Tuple

from app.core.exceptions import InputFormatError, RankingError
from app.dto.problem_dto import Digraph, RankingProblem
from app.enums.input_format import InputFormat
from app.services.digraph_service import DigraphService
from app.services.problem_service import ProblemService
from app.services.rating_service import RatingService
from app.utils.parsers import (
    detect_format, parse_aggregated_csv, parse_digraph_csv, parse_rounds_csv
)

logger = logging.getLogger(__name__)

STDIN = "-"


def input_arguments() -> argparse.ArgumentParser:
    """Parent parser with the options every subcommand shares."""
    parent = argparse.ArgumentParser(add_help=False)
    parent.add_argument("input", nargs="?", default=STDIN,
                        help="CSV input file ('-' or omitted reads standard input)")
    parent.add_argument("--format", choices=[fmt.value for fmt in InputFormat], default=None,
                        help="input dialect; detected from the header when omitted")
    parent.add_argument("--tie-tol", type=float, default=None,
                        help="ratings closer than this are tied in the ranking")
    parent.add_argument("-v", "--verbose", action="count", default=0,
                        help="log progress to stderr (-vv for debug output)")
    return parent


def read_input(path: str) -> str:
    name = "standard input" if path == STDIN else path
    try:
        data = sys.stdin.buffer.read() if path == STDIN else Path(path).read_bytes()
        return data.decode("utf-8-sig")
    except OSError as e:
        raise InputFormatError(f"cannot read {name}: {e.strerror}")
    except UnicodeDecodeError:
        raise InputFormatError(f"{name} is not UTF-8 text")


def _declared(args: argparse.Namespace) -> Optional[InputFormat]:
    return InputFormat(args.format) if args.format else None


def load_input(args: argparse.Namespace) -> Tuple[RankingProblem, Optional[Digraph]]:
    """
    Ranking problem of the input in any dialect, plus the digraph itself when the
    input was a digraph.
    """
    text = read_input(args.input)
    fmt = detect_format(text, _declared(args))
    logger.info("reading %s input from %s", fmt.value, args.input)

    digraph = None
    if fmt == InputFormat.ROUNDS:
        round_set = parse_rounds_csv(text)
        problem = ProblemService.aggregate(round_set.rounds, round_set.objects)
    elif fmt == InputFormat.AGGREGATED:
        problem = parse_aggregated_csv(text)
    else:
        digraph = parse_digraph_csv(text)
        problem = DigraphService.digraph_to_ranking_problem(
            digraph, two_matches=getattr(args, "two_matches", False)
        )

    violations = ProblemService.validate(problem)
    if violations:
        raise InputFormatError("; ".join(v.detail for v in violations))
    return problem, digraph


def load_problem(args: argparse.Namespace) -> RankingProblem:
    return load_input(args)[0]


def load_digraph(args: argparse.Namespace) -> Digraph:
    """The input digraph, or the dominance digraph of a ranking problem input."""
    problem, digraph = load_input(args)
    return digraph if digraph is not None else DigraphService.dominance_digraph(problem)


def rounds_argument(args: argparse.Namespace, problem: RankingProblem) -> int:
    """``--rounds`` when given, else the largest match count rounded up."""
    if args.rounds is not None:
        return args.rounds
    return RatingService.match_rounds(problem)


def write_file(path: str, text: str) -> None:
    try:
        Path(path).write_text(text, encoding="utf-8")
    except OSError as e:
        raise RankingError(f"cannot write {path}: {e.strerror}")
    logger.info("wrote %s", path)
