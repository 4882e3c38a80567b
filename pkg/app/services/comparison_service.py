"""
Comparison service for the rating engine.

Handles the side-by-side table of score, generalized row sum, least squares and
positional power ratings for one problem.
"""

import logging
from typing import Optional

from app.core.exceptions import RankingError
from app.dto.problem_dto import Digraph, RankingProblem
from app.dto.rating_dto import RatingVector
from app.dto.result_dto import CompareColumn, CompareDocument
from app.enums.rating_method import RatingMethod
from app.services.digraph_service import DigraphService
from app.services.graph_service import GraphService
from app.services.problem_service import ProblemService
from app.services.ranking_service import RankingService
from app.services.rating_service import RatingService
from app.utils.serializers import ResultSerializer

logger = logging.getLogger(__name__)


class ComparisonService:
    """Service for comparing rating methods on the same problem."""

    @staticmethod
    def _column(rating: RatingVector, tie_tol: Optional[float]) -> CompareColumn:
        return CompareColumn(
            method=rating.method.value,
            parameters=ResultSerializer.rounded_parameters(rating.parameters),
            ratings=ResultSerializer.rounded_map(rating.objects, rating.values),
            ranking=str(RankingService.ranking_from_ratings(rating, tie_tol)),
        )

    @staticmethod
    def compare(problem: RankingProblem, digraph: Optional[Digraph] = None,
                epsilon: Optional[float] = None, rounds: Optional[int] = None,
                tie_tol: Optional[float] = None) -> CompareDocument:
        """
        Build the comparison table.

        Positional power runs on ``digraph`` when given, else on the dominance digraph
        of the problem. A method that fails on this input gets a column with the error
        detail instead of ratings.
        """
        diagnostics = GraphService.analyze(problem)
        balanced = GraphService.balanced_multigraph(problem)
        graph = digraph if digraph is not None else DigraphService.dominance_digraph(problem)

        attempts = [
            (RatingMethod.SCORE, lambda: ProblemService.scores(problem)),
            (RatingMethod.GRS, lambda: RatingService.generalized_row_sum(problem, epsilon, rounds)),
            (RatingMethod.LEAST_SQUARES_DIRECT, lambda: RatingService.least_squares_direct(problem)),
            (RatingMethod.POSITIONAL_POWER, lambda: DigraphService.positional_power(graph)),
        ]
        columns = []
        for method, compute in attempts:
            try:
                columns.append(ComparisonService._column(compute(), tie_tol))
            except RankingError as e:
                logger.warning("%s skipped: %s", method.value, e.detail)
                columns.append(CompareColumn(method=method.value, error=e.detail))

        return CompareDocument(
            objects=problem.objects,
            columns=columns,
            diagnostics=ResultSerializer.diagnostics_summary(diagnostics, balanced),
        )
