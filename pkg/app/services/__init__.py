"""
Services package for the rating engine.

This package contains the rating logic: problem construction, graph analysis,
the rating methods and ranking extraction.
Services sit between the command line and the numerical managers.
"""

from .problem_service import ProblemService
from .graph_service import GraphService
from .ranking_service import RankingService
from .rating_service import RatingService
from .digraph_service import DigraphService
from .comparison_service import ComparisonService

__all__ = [
    "ProblemService",
    "GraphService",
    "RankingService",
    "RatingService",
    "DigraphService",
    "ComparisonService"
]
