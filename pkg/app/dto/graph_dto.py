from typing import List, Optional, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, field_validator

from app.core.config import settings


class GraphDiagnostics(BaseModel):
    """Structure of the comparison multigraph. Object groups are given by label."""

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    objects: List[str]
    components: List[List[str]]
    degrees: np.ndarray
    max_degree: float
    bipartition: Optional[Tuple[List[str], List[str]]] = None
    is_regular: bool
    is_regular_bipartite: bool
    is_round_robin: bool
    is_unweighted: bool
    mu1_estimate: float

    @field_validator('degrees', mode='before')
    @classmethod
    def validate_degrees(cls, v):
        degrees = np.array(v, dtype=float).reshape(-1)
        degrees.setflags(write=False)
        return degrees

    @property
    def is_connected(self) -> bool:
        return len(self.components) <= 1

    @property
    def is_bipartite(self) -> bool:
        return self.bipartition is not None

    @property
    def mu1_bound(self) -> float:
        """Upper bound 2d on the largest Laplacian eigenvalue."""
        return 2.0 * self.max_degree

    @property
    def mu1_at_bound(self) -> bool:
        """The spectral estimate reaches 2d within the regular bipartite tolerance."""
        slack = settings.REGULAR_BIPARTITE_RTOL * max(self.max_degree, 1.0)
        return self.max_degree > 0 and abs(self.mu1_estimate - self.mu1_bound) <= slack


class BalancedMultigraph(BaseModel):
    """The comparison multigraph with d - d_i loops on object i."""

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    objects: List[str]
    loops: np.ndarray
    matches: np.ndarray
    max_degree: float

    @field_validator('loops', 'matches', mode='before')
    @classmethod
    def validate_arrays(cls, v):
        array = np.array(v, dtype=float)
        array.setflags(write=False)
        return array

    def balanced_matrix(self) -> np.ndarray:
        """C: the matches matrix with the loop counts on the diagonal."""
        c = np.array(self.matches, dtype=float)
        np.fill_diagonal(c, self.loops)
        return c

    def transition_matrix(self) -> np.ndarray:
        """P = C / d, row-stochastic whenever d > 0."""
        if self.max_degree <= 0:
            raise ValueError('Graph without comparisons has no transition matrix')
        return self.balanced_matrix() / self.max_degree
