"""
Rating service for the rating engine.

Handles the rating methods built on the Laplacian of the comparison multigraph:
least squares (direct, reduced and iterative) and the generalized row sum
(direct and series form).
"""

import logging
from typing import Optional, Tuple

import numpy as np
from scipy.linalg import cho_factor, cho_solve, solve

from app.core.config import settings
from app.core.exceptions import (
    EmptyProblem, EpsilonTooLarge, MaxIterationsExceeded, RegularBipartiteGraph
)
from app.dto.problem_dto import RankingProblem
from app.dto.rating_dto import IterationTrace, RatingVector
from app.enums.rating_method import RatingMethod
from app.managers.spectral_manager import SpectralManager
from app.managers.validation_manager import ATOL, ValidationManager
from app.services.graph_service import GraphService
from app.services.problem_service import ProblemService
from app.services.ranking_service import RankingService

logger = logging.getLogger(__name__)


def _require_objects(problem: RankingProblem) -> None:
    if problem.n == 0:
        raise EmptyProblem("ranking problem has no objects")


def _require_connected(problem: RankingProblem) -> None:
    ValidationManager.validate_connected(GraphService.components(problem))


def _check_residual(name: str, laplacian: np.ndarray, q: np.ndarray, s: np.ndarray) -> None:
    residual = float(np.max(np.abs(laplacian @ q - s))) if q.size else 0.0
    limit = settings.SOLVER_RESIDUAL_RTOL * max(1.0, float(np.max(np.abs(s))) if s.size else 0.0)
    if residual > limit:
        logger.warning("%s residual %.3g exceeds %.3g", name, residual, limit)


class RatingService:
    """Service for least squares and generalized row sum ratings."""

    @staticmethod
    def least_squares_direct(problem: RankingProblem) -> RatingVector:
        """
        Solve (L + J/n) q = s by a Cholesky factorization.
        The matrix is positive definite exactly when the comparison graph is connected,
        and the solution satisfies Lq = s with ratings summing to zero.
        """
        _require_objects(problem)
        _require_connected(problem)

        n = problem.n
        laplacian = ProblemService.laplacian(problem)
        s = ProblemService.scores(problem).values
        factor = cho_factor(laplacian + np.full((n, n), 1.0 / n))
        q = cho_solve(factor, s)
        q = q - q.mean()
        _check_residual("least squares", laplacian, q, s)

        return RatingVector(objects=problem.objects, values=q,
                            method=RatingMethod.LEAST_SQUARES_DIRECT)

    @staticmethod
    def least_squares_reduced(problem: RankingProblem) -> RatingVector:
        """
        Fix the last rating to zero, solve the leading block of L, then center.
        """
        _require_objects(problem)
        _require_connected(problem)

        laplacian = ProblemService.laplacian(problem)
        s = ProblemService.scores(problem).values
        q = np.zeros(problem.n)
        if problem.n > 1:
            q[:-1] = solve(laplacian[:-1, :-1], s[:-1], assume_a='pos')
        q = q - q.mean()
        _check_residual("reduced least squares", laplacian, q, s)

        return RatingVector(objects=problem.objects, values=q,
                            method=RatingMethod.LEAST_SQUARES_REDUCED)

    @staticmethod
    def least_squares_iterative(
        problem: RankingProblem,
        tol: Optional[float] = None,
        max_iter: Optional[int] = None,
        tie_tol: Optional[float] = None,
        fallback_direct: bool = False,
    ) -> Tuple[RatingVector, Optional[IterationTrace]]:
        """
        Least squares rating as the sum of score propagations on the balanced multigraph.

        q(0) = s / d and q(k) = q(k-1) + P^k s / d with P = C / d, where C carries the
        matches off the diagonal and d - d_i loops on it. Stops at the first increment
        whose sup-norm is below ``tol``.

        Raises:
            DisconnectedGraph: the limit is not unique.
            RegularBipartiteGraph: the sequence does not converge; with
                ``fallback_direct`` the direct solution is returned instead, without a trace.
            MaxIterationsExceeded: ``max_iter`` steps were not enough; ``partial`` holds
                the trace so far.
        """
        tol = settings.LS_TOLERANCE if tol is None else tol
        max_iter = settings.LS_MAX_ITER if max_iter is None else max_iter
        ValidationManager.validate_positive("tolerance", tol)
        ValidationManager.validate_non_negative("max_iter", max_iter)
        _require_objects(problem)
        _require_connected(problem)

        if GraphService.is_regular_bipartite(problem):
            if not fallback_direct:
                raise RegularBipartiteGraph()
            logger.warning("regular bipartite comparison graph, falling back to the direct solver")
            direct = RatingService.least_squares_direct(problem)
            return direct.model_copy(update={"parameters": {"fallback": 1}}), None

        s = ProblemService.scores(problem).values
        balanced = GraphService.balanced_multigraph(problem)
        max_degree = balanced.max_degree

        if max_degree <= 0:
            # A lone object: nothing to propagate
            iterates = np.zeros((1, problem.n))
            deltas = np.zeros(1)
            converged_at: Optional[int] = 0
        else:
            transition = balanced.transition_matrix()
            propagated = s.copy()
            q = propagated / max_degree
            iterate_list = [q]
            delta_list = [float(np.max(np.abs(q)))]
            converged_at = 0 if delta_list[0] < tol else None

            step = 0
            while converged_at is None and step < max_iter:
                step += 1
                propagated = transition @ propagated
                increment = propagated / max_degree
                q = q + increment
                iterate_list.append(q)
                delta_list.append(float(np.max(np.abs(increment))))
                if delta_list[-1] < tol:
                    converged_at = step
            iterates = np.array(iterate_list)
            deltas = np.array(delta_list)

        tie_tol = settings.TIE_TOLERANCE if tie_tol is None else tie_tol
        trace = IterationTrace(
            objects=problem.objects,
            iterates=iterates,
            step_deltas=deltas,
            max_degree=max_degree,
            tolerance=tol,
            converged_at=converged_at,
            ranking_stable_at=RankingService.ranking_stable_at(problem.objects, iterates, tie_tol),
        )

        if converged_at is None:
            raise MaxIterationsExceeded(
                f"least squares iteration did not reach tol={tol:g} in {max_iter} steps "
                f"(last increment {deltas[-1]:.3g})",
                partial=trace,
            )

        logger.info("least squares iteration converged after %d steps", converged_at)
        rating = RatingVector(
            objects=problem.objects,
            values=iterates[-1],
            method=RatingMethod.LEAST_SQUARES_ITERATIVE,
            parameters={"tol": tol, "max_iter": max_iter, "steps": converged_at},
        )
        return rating, trace

    @staticmethod
    def match_rounds(problem: RankingProblem) -> int:
        """The largest match count rounded up, or 0 without comparisons."""
        largest = float(problem.matches.max()) if problem.matches.size else 0.0
        return int(np.ceil(largest - ATOL)) if largest > 0 else 0

    @staticmethod
    def resolve_rounds(problem: RankingProblem, rounds: Optional[int] = None) -> int:
        """
        Number of rounds m: the explicit value, else the one recorded on the problem,
        else the largest match count rounded up.
        """
        if rounds is None:
            rounds = problem.rounds
        if rounds is None:
            rounds = RatingService.match_rounds(problem)
        ValidationManager.validate_non_negative("rounds", rounds)
        return int(rounds)

    @staticmethod
    def generalized_row_sum(problem: RankingProblem, epsilon: Optional[float] = None,
                            rounds: Optional[int] = None) -> RatingVector:
        """
        Solve (I + eps L) x = (1 + eps m n) s.
        Defined for every problem, connected or not; eps = 0 gives the scores.
        """
        epsilon = settings.DEFAULT_EPSILON if epsilon is None else epsilon
        ValidationManager.validate_non_negative("epsilon", epsilon)
        _require_objects(problem)

        n = problem.n
        m = RatingService.resolve_rounds(problem, rounds)
        s = ProblemService.scores(problem).values
        if epsilon == 0:
            x = s.copy()
        else:
            laplacian = ProblemService.laplacian(problem)
            x = solve(np.eye(n) + epsilon * laplacian, (1.0 + epsilon * m * n) * s, assume_a='pos')

        return RatingVector(
            objects=problem.objects,
            values=x,
            method=RatingMethod.GRS,
            parameters={"epsilon": epsilon, "rounds": m},
        )

    @staticmethod
    def grs_series(problem: RankingProblem, epsilon: float, k_max: Optional[int] = None,
                   rounds: Optional[int] = None, mu1: Optional[float] = None) -> RatingVector:
        """
        Truncated expansion sum_{k <= k_max} eps^k (-L)^k (1 + eps m n) s.

        Converges to the generalized row sum only for eps below 1 / mu1, so eps is refused
        from (1 - margin) / mu1 on. ``mu1`` is estimated when not given.
        """
        k_max = settings.GRS_SERIES_K_MAX if k_max is None else k_max
        ValidationManager.validate_positive("epsilon", epsilon)
        ValidationManager.validate_non_negative("k_max", k_max)
        _require_objects(problem)

        laplacian = ProblemService.laplacian(problem)
        if mu1 is None:
            mu1 = SpectralManager.largest_laplacian_eigenvalue(laplacian)
        if mu1 > 0:
            limit = (1.0 - settings.GRS_SAFETY_MARGIN) / mu1
            if epsilon >= limit:
                raise EpsilonTooLarge(epsilon, mu1, limit)

        m = RatingService.resolve_rounds(problem, rounds)
        term = (1.0 + epsilon * m * problem.n) * ProblemService.scores(problem).values
        total = term.copy()
        for _ in range(k_max):
            term = -epsilon * (laplacian @ term)
            total += term

        return RatingVector(
            objects=problem.objects,
            values=total,
            method=RatingMethod.GRS_SERIES,
            parameters={"epsilon": epsilon, "rounds": m, "k_max": k_max},
        )
