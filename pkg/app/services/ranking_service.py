"""
Ranking service for the rating engine.

Handles turning rating vectors into weak orders with tie groups.
"""

from typing import List, Optional, Sequence

import numpy as np

from app.core.config import settings
from app.dto.rating_dto import Ranking, RatingVector
from app.managers.validation_manager import ValidationManager


class RankingService:
    """Service for ranking extraction."""

    @staticmethod
    def groups_from_values(objects: Sequence[str], values: np.ndarray,
                           tie_tol: float) -> List[List[str]]:
        """
        Sort descending and open a new group whenever the gap to the previous value
        exceeds ``tie_tol``. Members of a group keep the input order.
        """
        values = np.asarray(values, dtype=float)
        if values.size == 0:
            return []
        order = np.argsort(-values, kind="stable")
        groups: List[List[int]] = [[int(order[0])]]
        for previous, current in zip(order[:-1], order[1:]):
            if values[previous] - values[current] > tie_tol:
                groups.append([])
            groups[-1].append(int(current))
        return [[objects[i] for i in sorted(group)] for group in groups]

    @staticmethod
    def ranking_from_ratings(ratings: RatingVector, tie_tol: Optional[float] = None) -> Ranking:
        tie_tol = settings.TIE_TOLERANCE if tie_tol is None else tie_tol
        ValidationManager.validate_non_negative("tie tolerance", tie_tol)
        return Ranking(
            groups=RankingService.groups_from_values(ratings.objects, ratings.values, tie_tol),
            tie_tolerance=tie_tol,
        )

    @staticmethod
    def ranking_stable_at(objects: Sequence[str], iterates: np.ndarray,
                          tie_tol: Optional[float] = None) -> Optional[int]:
        """
        Least k such that every iterate from k on induces the ranking of the last iterate.
        None when there are no iterates.
        """
        tie_tol = settings.TIE_TOLERANCE if tie_tol is None else tie_tol
        if len(iterates) == 0:
            return None
        final = RankingService.groups_from_values(objects, iterates[-1], tie_tol)
        stable = len(iterates) - 1
        while stable > 0 and RankingService.groups_from_values(
                objects, iterates[stable - 1], tie_tol) == final:
            stable -= 1
        return stable
