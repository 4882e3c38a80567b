import argparse

from app.cli import deps
from app.services.comparison_service import ComparisonService
from app.utils.serializers import ResultSerializer


def register(subparsers, parent: argparse.ArgumentParser) -> None:
    parser = subparsers.add_parser(
        "compare", parents=[parent],
        help="score, generalized row sum, least squares and positional power side by side",
    )
    parser.add_argument("--epsilon", type=float, default=None)
    parser.add_argument("--rounds", type=int, default=None)
    parser.add_argument("--table", action="store_true",
                        help="print a plain text table instead of JSON")
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace) -> str:
    problem, digraph = deps.load_input(args)
    document = ComparisonService.compare(problem, digraph=digraph, epsilon=args.epsilon,
                                         rounds=deps.rounds_argument(args, problem),
                                         tie_tol=args.tie_tol)
    if args.table:
        return ResultSerializer.compare_table(document)
    return ResultSerializer.to_json(document)
