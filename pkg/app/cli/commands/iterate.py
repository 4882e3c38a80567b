import argparse

from app.cli import deps
from app.core.exceptions import MaxIterationsExceeded
from app.services.graph_service import GraphService
from app.services.ranking_service import RankingService
from app.services.rating_service import RatingService
from app.utils.serializers import ResultSerializer, TraceSerializer


def register(subparsers, parent: argparse.ArgumentParser) -> None:
    parser = subparsers.add_parser(
        "iterate", parents=[parent],
        help="least squares ratings by iterating on the balanced comparison multigraph",
    )
    parser.add_argument("--tol", type=float, default=None,
                        help="stop once the sup-norm of an increment is below this")
    parser.add_argument("--max-iter", type=int, default=None)
    parser.add_argument("--trace", metavar="FILE", default=None,
                        help="write every iterate as CSV (step, one column per object, delta)")
    parser.add_argument("--fallback-direct", action="store_true",
                        help="use the direct solver on regular bipartite graphs instead of failing")
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace) -> str:
    problem = deps.load_problem(args)
    try:
        rating, trace = RatingService.least_squares_iterative(
            problem, tol=args.tol, max_iter=args.max_iter, tie_tol=args.tie_tol,
            fallback_direct=args.fallback_direct,
        )
    except MaxIterationsExceeded as e:
        if args.trace and e.partial is not None:
            deps.write_file(args.trace, TraceSerializer.to_csv(e.partial))
        raise

    trace_summary = None
    if trace is not None:
        if args.trace:
            deps.write_file(args.trace, TraceSerializer.to_csv(trace))
        trace_summary = ResultSerializer.trace_summary(trace, args.trace)

    ranking = RankingService.ranking_from_ratings(rating, args.tie_tol)
    diagnostics = ResultSerializer.diagnostics_summary(
        GraphService.analyze(problem), GraphService.balanced_multigraph(problem)
    )
    return ResultSerializer.to_json(
        ResultSerializer.result_document(rating, ranking, diagnostics=diagnostics,
                                         trace=trace_summary)
    )
