import argparse

from app.cli import deps
from app.core.config import settings
from app.services.graph_service import GraphService
from app.services.ranking_service import RankingService
from app.services.rating_service import RatingService
from app.utils.serializers import ResultSerializer


def register(subparsers, parent: argparse.ArgumentParser) -> None:
    parser = subparsers.add_parser(
        "grs", parents=[parent],
        help="generalized row sum ratings, directly or by the truncated series",
    )
    parser.add_argument("--epsilon", type=float, default=None,
                        help=f"weight of the indirect results (default {settings.DEFAULT_EPSILON:g})")
    parser.add_argument("--rounds", type=int, default=None,
                        help="number of rounds m (default: max m_ij rounded up)")
    parser.add_argument("--series", action="store_true",
                        help="sum the series instead of solving the linear system")
    parser.add_argument("--k-max", type=int, default=None,
                        help="last series term (with --series)")
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace) -> str:
    problem = deps.load_problem(args)
    diagnostics = GraphService.analyze(problem)
    rounds = deps.rounds_argument(args, problem)
    if args.series:
        epsilon = settings.DEFAULT_EPSILON if args.epsilon is None else args.epsilon
        rating = RatingService.grs_series(problem, epsilon, k_max=args.k_max, rounds=rounds,
                                          mu1=diagnostics.mu1_estimate)
    else:
        rating = RatingService.generalized_row_sum(problem, args.epsilon, rounds)

    ranking = RankingService.ranking_from_ratings(rating, args.tie_tol)
    summary = ResultSerializer.diagnostics_summary(
        diagnostics, GraphService.balanced_multigraph(problem)
    )
    return ResultSerializer.to_json(
        ResultSerializer.result_document(rating, ranking, diagnostics=summary)
    )
