import argparse

from app.cli import deps
from app.services.digraph_service import DigraphService
from app.services.ranking_service import RankingService
from app.utils.serializers import ResultSerializer


def register(subparsers, parent: argparse.ArgumentParser) -> None:
    parser = subparsers.add_parser(
        "positional-power", parents=[parent],
        help="positional power of digraph nodes (problems are read as dominance digraphs)",
    )
    parser.add_argument("--tol", type=float, default=None)
    parser.add_argument("--max-iter", type=int, default=None)
    parser.add_argument("--decay-base", type=float, default=None,
                        help="indirect wins count 1/a per step; a must exceed n-1 (default n)")
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace) -> str:
    digraph = deps.load_digraph(args)
    rating = DigraphService.positional_power(digraph, tol=args.tol, max_iter=args.max_iter,
                                             decay_base=args.decay_base)
    ranking = RankingService.ranking_from_ratings(rating, args.tie_tol)
    return ResultSerializer.to_json(ResultSerializer.result_document(rating, ranking))
