"""
Problem service for the rating engine.

Handles aggregation of rounds into a ranking problem and the quantities every
rating method starts from: scores, the Laplacian and the least squares objective.
"""

import logging
from typing import List, Optional, Sequence, Union

import numpy as np

from app.core.exceptions import DimensionMismatch, EmptyProblem
from app.dto.problem_dto import RankingProblem, RoundMatrix, Violation, default_labels
from app.dto.rating_dto import RatingVector
from app.enums.rating_method import RatingMethod
from app.managers.validation_manager import ValidationManager

logger = logging.getLogger(__name__)

RatingLike = Union[RatingVector, np.ndarray, Sequence[float]]


def _values(q: RatingLike) -> np.ndarray:
    if isinstance(q, RatingVector):
        return np.asarray(q.values, dtype=float)
    return np.asarray(q, dtype=float).reshape(-1)


class ProblemService:
    """Service for ranking problem construction and base quantities."""

    @staticmethod
    def aggregate(rounds: Sequence[RoundMatrix],
                  objects: Optional[Sequence[str]] = None) -> RankingProblem:
        """
        Sum the additive matrices of all rounds into (A, M).
        a_ij collects r_ij - r_ji over the rounds where the pair was compared,
        m_ij counts those rounds.
        """
        if not rounds:
            if objects is None:
                raise EmptyProblem("no rounds to aggregate")
            n = len(objects)
        else:
            n = rounds[0].n
        labels = list(objects) if objects is not None else default_labels(n)
        if len(labels) != n:
            raise DimensionMismatch(f"{len(labels)} labels given for {n} objects")

        results = np.zeros((n, n))
        matches = np.zeros((n, n))
        for index, round_matrix in enumerate(rounds):
            if round_matrix.n != n:
                raise DimensionMismatch(
                    f"round {index + 1} has {round_matrix.n} objects, expected {n}"
                )
            ValidationManager.validate_round(round_matrix, index)
            for (i, j), r in round_matrix.entries.items():
                results[i, j] += r - round_matrix.entries[(j, i)]
                matches[i, j] += 1.0

        logger.debug("aggregated %d rounds over %d objects", len(rounds), n)
        return RankingProblem(objects=labels, results=results, matches=matches,
                              rounds=len(rounds))

    @staticmethod
    def scores(problem: RankingProblem) -> RatingVector:
        """Row sums s = Ae."""
        return RatingVector(
            objects=problem.objects,
            values=problem.results.sum(axis=1),
            method=RatingMethod.SCORE,
        )

    @staticmethod
    def laplacian(problem: RankingProblem) -> np.ndarray:
        """L = diag(d) - M with d_i the total number of comparisons of object i."""
        matches = np.array(problem.matches, dtype=float)
        np.fill_diagonal(matches, 0.0)
        return np.diag(matches.sum(axis=1)) - matches

    @staticmethod
    def objective_value(problem: RankingProblem, q: RatingLike) -> float:
        """
        Sum over ordered compared pairs of m_ij (h_ij - q_i + q_j)^2 with h_ij = 2 a_ij / m_ij.

        Its minimizers satisfy Lq = 2s, so the least squares rating q itself is optimal
        after scaling by two; the value is meant for relative comparisons.
        """
        values = _values(q)
        mask = problem.matches > 0
        np.fill_diagonal(mask, False)
        h = np.zeros_like(problem.results)
        h[mask] = 2.0 * problem.results[mask] / problem.matches[mask]
        gaps = values[:, np.newaxis] - values[np.newaxis, :]
        return float(np.sum(problem.matches[mask] * (h[mask] - gaps[mask]) ** 2))

    @staticmethod
    def validate(problem: RankingProblem) -> List[Violation]:
        return ValidationManager.validate_problem(problem)

    @staticmethod
    def is_consistent(problem: RankingProblem, tol: float = 1e-9) -> bool:
        """
        True when h_ij = y_i - y_j holds on every compared pair for some vector y,
        i.e. the objective reaches zero (componentwise, so any comparison graph works).
        """
        laplacian = ProblemService.laplacian(problem)
        rhs = 2.0 * problem.results.sum(axis=1)
        y = np.linalg.lstsq(laplacian, rhs, rcond=None)[0] if problem.n else rhs
        scale = max(1.0, float(np.sum(np.abs(problem.results))))
        return ProblemService.objective_value(problem, y) <= tol * scale

    @staticmethod
    def likelihood_matrix(problem: RankingProblem) -> np.ndarray:
        """(a_ij + m_ij) / (2 m_ij): estimated chance that i beats j; NaN where not compared."""
        likelihood = np.full(problem.results.shape, np.nan)
        mask = problem.matches > 0
        np.fill_diagonal(mask, False)
        likelihood[mask] = (problem.results[mask] + problem.matches[mask]) / (2.0 * problem.matches[mask])
        return likelihood
