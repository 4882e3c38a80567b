"""
Graph service for the rating engine.

Handles structural analysis of the comparison multigraph: components, two-coloring,
regularity, the spectral estimate and the balanced multigraph with loops.
"""

import logging
from collections import deque
from typing import List, Optional, Tuple

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import connected_components

from app.core.exceptions import EmptyProblem
from app.dto.graph_dto import BalancedMultigraph, GraphDiagnostics
from app.dto.problem_dto import RankingProblem
from app.managers.spectral_manager import SpectralManager
from app.services.problem_service import ProblemService

logger = logging.getLogger(__name__)


def _edges(problem: RankingProblem) -> np.ndarray:
    """Boolean adjacency: an edge wherever m_ij > 0, whatever its weight."""
    adjacency = problem.matches > 0
    np.fill_diagonal(adjacency, False)
    return adjacency


class GraphService:
    """Service for comparison multigraph structure."""

    @staticmethod
    def degrees(problem: RankingProblem) -> np.ndarray:
        matches = np.array(problem.matches, dtype=float)
        np.fill_diagonal(matches, 0.0)
        return matches.sum(axis=1)

    @staticmethod
    def component_labels(problem: RankingProblem) -> Tuple[int, np.ndarray]:
        """Component count and the component index of every object."""
        if problem.n == 0:
            return 0, np.zeros(0, dtype=int)
        return connected_components(csr_matrix(_edges(problem)), directed=False)

    @staticmethod
    def components(problem: RankingProblem) -> List[List[str]]:
        """
        Connected components as label lists, in input order.
        Components are ordered by their first object.
        """
        _, labels = GraphService.component_labels(problem)
        grouped: dict = {}
        for index, component in enumerate(labels):
            grouped.setdefault(int(component), []).append(problem.objects[index])
        return list(grouped.values())

    @staticmethod
    def two_coloring(problem: RankingProblem) -> Optional[np.ndarray]:
        """
        Breadth-first two-coloring of every component.
        Returns colors 0/1 per object, or None when an odd cycle exists.
        """
        adjacency = _edges(problem)
        n = problem.n
        color = np.full(n, -1, dtype=int)
        for start in range(n):
            if color[start] != -1:
                continue
            color[start] = 0
            queue = deque([start])
            while queue:
                node = queue.popleft()
                for neighbor in np.flatnonzero(adjacency[node]):
                    if color[neighbor] == -1:
                        color[neighbor] = 1 - color[node]
                        queue.append(neighbor)
                    elif color[neighbor] == color[node]:
                        return None
        return color

    @staticmethod
    def bipartition(problem: RankingProblem) -> Optional[Tuple[List[str], List[str]]]:
        color = GraphService.two_coloring(problem)
        if color is None:
            return None
        first = [label for label, c in zip(problem.objects, color) if c == 0]
        second = [label for label, c in zip(problem.objects, color) if c == 1]
        return first, second

    @staticmethod
    def is_regular(problem: RankingProblem) -> bool:
        degrees = GraphService.degrees(problem)
        return bool(degrees.size == 0 or np.allclose(degrees, degrees[0], rtol=0.0, atol=1e-9))

    @staticmethod
    def is_regular_bipartite(problem: RankingProblem) -> bool:
        """Regular with at least one comparison, and two-colorable."""
        degrees = GraphService.degrees(problem)
        if degrees.size == 0 or degrees.max() <= 0:
            return False
        return GraphService.is_regular(problem) and GraphService.two_coloring(problem) is not None

    @staticmethod
    def analyze(problem: RankingProblem) -> GraphDiagnostics:
        """Full structural report, including the largest Laplacian eigenvalue estimate."""
        if problem.n == 0:
            raise EmptyProblem("cannot analyze a problem without objects")

        degrees = GraphService.degrees(problem)
        max_degree = float(degrees.max())
        bipartition = GraphService.bipartition(problem)
        is_regular = GraphService.is_regular(problem)

        off_diagonal = ~np.eye(problem.n, dtype=bool)
        off = problem.matches[off_diagonal]
        is_round_robin = bool(np.all(off == 1.0))
        is_unweighted = bool(np.all((off == 0.0) | (off == 1.0)))

        is_regular_bipartite = is_regular and bipartition is not None and max_degree > 0
        if is_regular_bipartite:
            # Equality case of mu1 <= 2d
            mu1 = 2.0 * max_degree
        else:
            mu1 = SpectralManager.largest_laplacian_eigenvalue(ProblemService.laplacian(problem))
        logger.debug("max degree %g, mu1 estimate %.12g", max_degree, mu1)

        return GraphDiagnostics(
            objects=problem.objects,
            components=GraphService.components(problem),
            degrees=degrees,
            max_degree=max_degree,
            bipartition=bipartition,
            is_regular=is_regular,
            is_regular_bipartite=is_regular_bipartite,
            is_round_robin=is_round_robin,
            is_unweighted=is_unweighted,
            mu1_estimate=mu1,
        )

    @staticmethod
    def balanced_multigraph(problem: RankingProblem) -> BalancedMultigraph:
        """Add d - d_i loops to every object so that all degrees equal the maximal degree d."""
        if problem.n == 0:
            raise EmptyProblem("cannot balance a problem without objects")
        degrees = GraphService.degrees(problem)
        max_degree = float(degrees.max())
        matches = np.array(problem.matches, dtype=float)
        np.fill_diagonal(matches, 0.0)
        return BalancedMultigraph(
            objects=problem.objects,
            loops=max_degree - degrees,
            matches=matches,
            max_degree=max_degree,
        )
