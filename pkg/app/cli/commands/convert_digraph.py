import argparse

from app.cli import deps
from app.utils.serializers import ProblemSerializer


def register(subparsers, parent: argparse.ArgumentParser) -> None:
    parser = subparsers.add_parser(
        "convert-digraph", parents=[parent],
        help="print the ranking problem of a digraph in the aggregated CSV dialect",
    )
    parser.add_argument("--two-matches", action="store_true",
                        help="count a pair of opposite edges as two matches instead of one")
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace) -> str:
    return ProblemSerializer.to_aggregated_csv(deps.load_problem(args))
