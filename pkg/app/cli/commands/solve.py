import argparse

from app.cli import deps
from app.dto.rating_dto import RatingVector
from app.dto.problem_dto import RankingProblem
from app.services.graph_service import GraphService
from app.services.problem_service import ProblemService
from app.services.ranking_service import RankingService
from app.services.rating_service import RatingService
from app.utils.serializers import ResultSerializer

METHODS = ("score", "ls", "ls-reduced", "grs")


def register(subparsers, parent: argparse.ArgumentParser) -> None:
    parser = subparsers.add_parser(
        "solve", parents=[parent],
        help="rate the objects with one method and print the ratings and ranking",
    )
    parser.add_argument("--method", choices=METHODS, default="ls")
    parser.add_argument("--epsilon", type=float, default=None,
                        help="generalized row sum parameter (grs only)")
    parser.add_argument("--rounds", type=int, default=None,
                        help="number of rounds m for grs (default: max m_ij rounded up)")
    parser.set_defaults(handler=run)


def rate(problem: RankingProblem, args: argparse.Namespace) -> RatingVector:
    if args.method == "score":
        return ProblemService.scores(problem)
    if args.method == "ls-reduced":
        return RatingService.least_squares_reduced(problem)
    if args.method == "grs":
        rounds = deps.rounds_argument(args, problem)
        return RatingService.generalized_row_sum(problem, args.epsilon, rounds)
    return RatingService.least_squares_direct(problem)


def run(args: argparse.Namespace) -> str:
    problem = deps.load_problem(args)
    rating = rate(problem, args)
    ranking = RankingService.ranking_from_ratings(rating, args.tie_tol)
    diagnostics = ResultSerializer.diagnostics_summary(
        GraphService.analyze(problem), GraphService.balanced_multigraph(problem)
    )
    return ResultSerializer.to_json(
        ResultSerializer.result_document(rating, ranking, diagnostics=diagnostics)
    )
