"""
Digraph service for the rating engine.

Handles the embedding of dominance digraphs into ranking problems, the reverse
direction, and the positional power rating of digraph nodes.
"""

import logging
from typing import Optional

import numpy as np

from app.core.config import settings
from app.core.exceptions import EmptyProblem, InvalidParameter, MaxIterationsExceeded
from app.dto.problem_dto import Digraph, RankingProblem
from app.dto.rating_dto import RatingVector
from app.enums.rating_method import RatingMethod
from app.managers.validation_manager import ATOL, ValidationManager

logger = logging.getLogger(__name__)


class DigraphService:
    """Service for digraph ingestion and positional power."""

    @staticmethod
    def digraph_to_ranking_problem(g: Digraph, two_matches: bool = False) -> RankingProblem:
        """
        A one-way edge is a win (a_ij = 1, m_ij = 1). A pair of opposite edges is one
        drawn match, or two matches won once each when ``two_matches`` is set.
        """
        t = g.adjacency()
        both = t + t.T
        matches = both if two_matches else (both > 0).astype(float)
        return RankingProblem(objects=g.nodes, results=t - t.T, matches=matches)

    @staticmethod
    def dominance_digraph(problem: RankingProblem) -> Digraph:
        """Edge i -> j when i leads j on aggregate; a level compared pair gets both edges."""
        a, m = problem.results, problem.matches
        edges = set()
        for i in range(problem.n):
            for j in range(problem.n):
                if i == j or m[i, j] <= 0:
                    continue
                if a[i, j] >= -ATOL:
                    edges.add((i, j))
        return Digraph(nodes=problem.objects, edges=frozenset(edges))

    @staticmethod
    def positional_power(g: Digraph, tol: Optional[float] = None, max_iter: Optional[int] = None,
                         decay_base: Optional[float] = None) -> RatingVector:
        """
        Fixed point of p = T e + T p / a, reached from p = 0.

        ``a`` defaults to the node count n; any a > n - 1 keeps the iteration a contraction
        because every row of T sums to at most n - 1.
        """
        tol = settings.POSITIONAL_POWER_TOL if tol is None else tol
        max_iter = settings.POSITIONAL_POWER_MAX_ITER if max_iter is None else max_iter
        ValidationManager.validate_positive("tolerance", tol)
        ValidationManager.validate_non_negative("max_iter", max_iter)

        n = g.n
        if n == 0:
            raise EmptyProblem("digraph has no nodes")
        base = float(n) if decay_base is None else float(decay_base)
        if not (base > 0 and base > n - 1):
            raise InvalidParameter(f"decay base must exceed {max(n - 1, 0)}, got {base:g}")

        t = g.adjacency()
        out_degrees = t.sum(axis=1)
        p = np.zeros(n)
        delta = float("inf")
        for step in range(1, max_iter + 1):
            updated = out_degrees + (t @ p) / base
            delta = float(np.max(np.abs(updated - p)))
            p = updated
            if delta < tol:
                logger.debug("positional power converged after %d steps", step)
                return RatingVector(
                    objects=g.nodes,
                    values=p,
                    method=RatingMethod.POSITIONAL_POWER,
                    parameters={"decay_base": base, "tol": tol, "steps": step},
                )

        raise MaxIterationsExceeded(
            f"positional power did not reach tol={tol:g} in {max_iter} steps "
            f"(last change {delta:.3g})",
            partial=RatingVector(objects=g.nodes, values=p, method=RatingMethod.POSITIONAL_POWER,
                                 parameters={"decay_base": base, "tol": tol, "steps": max_iter}),
        )
