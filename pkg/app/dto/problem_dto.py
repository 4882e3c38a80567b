from typing import Dict, FrozenSet, List, Mapping, Optional, Sequence, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, field_validator, model_validator

from app.enums.violation_kind import ViolationKind


def default_labels(n: int) -> List[str]:
    return [f"X{i + 1}" for i in range(n)]


def _readonly_square(value) -> np.ndarray:
    matrix = np.array(value, dtype=float)
    if matrix.size == 0:
        matrix = matrix.reshape(0, 0)
    if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {matrix.shape}")
    matrix.setflags(write=False)
    return matrix


# Round DTOs
class RoundMatrix(BaseModel):
    """
    Outcomes of one round: ``entries[(i, j)] = r_ij`` for the compared pairs only.

    Both orientations of a compared pair are stored. Whether they add up to one is
    checked when rounds are aggregated.
    """

    model_config = ConfigDict(frozen=True)

    n: int
    entries: Dict[Tuple[int, int], float] = {}

    @field_validator('n')
    @classmethod
    def validate_n(cls, v):
        if v < 0:
            raise ValueError('Object count cannot be negative')
        return v

    @model_validator(mode='after')
    def validate_entries(self):
        for (i, j), r in self.entries.items():
            if not (0 <= i < self.n and 0 <= j < self.n):
                raise ValueError(f'Pair ({i}, {j}) is outside 0..{self.n - 1}')
            if i == j:
                raise ValueError(f'Diagonal entry ({i}, {i}) is not allowed')
            if not 0.0 <= r <= 1.0:
                raise ValueError(f'Result {r} for pair ({i}, {j}) is outside [0, 1]')
        return self

    @classmethod
    def from_outcomes(cls, n: int, outcomes: Mapping[Tuple[int, int], float]) -> "RoundMatrix":
        """Build a round from one orientation per pair; r_ji = 1 - r_ij is filled in."""
        entries: Dict[Tuple[int, int], float] = {}
        for (i, j), r in outcomes.items():
            entries[(i, j)] = float(r)
            entries[(j, i)] = 1.0 - float(r)
        return cls(n=n, entries=entries)


# Ranking problem DTOs
class RankingProblem(BaseModel):
    """
    Objects with the results matrix A (``results``) and the matches matrix M (``matches``).

    Matrices are stored dense and read-only. Shape is enforced here; the remaining
    invariants are reported by ``ProblemService.validate`` so that broken input can still
    be inspected.
    """

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    objects: List[str]
    results: np.ndarray
    matches: np.ndarray
    rounds: Optional[int] = None

    @field_validator('results', 'matches', mode='before')
    @classmethod
    def validate_matrix(cls, v):
        return _readonly_square(v)

    @field_validator('rounds')
    @classmethod
    def validate_rounds(cls, v):
        if v is not None and v < 0:
            raise ValueError('Round count cannot be negative')
        return v

    @model_validator(mode='after')
    def validate_dimensions(self):
        n = len(self.objects)
        if self.results.shape != (n, n) or self.matches.shape != (n, n):
            raise ValueError(
                f'{n} objects need {n}x{n} matrices, got results {self.results.shape} '
                f'and matches {self.matches.shape}'
            )
        if len(set(self.objects)) != n:
            raise ValueError('Object labels must be unique')
        return self

    @classmethod
    def from_matrices(cls, results, matches, objects: Optional[Sequence[str]] = None,
                      rounds: Optional[int] = None) -> "RankingProblem":
        results = _readonly_square(results)
        labels = list(objects) if objects is not None else default_labels(results.shape[0])
        return cls(objects=labels, results=results, matches=matches, rounds=rounds)

    @property
    def n(self) -> int:
        return len(self.objects)

    def permuted(self, order: Sequence[int]) -> "RankingProblem":
        """Reindex the objects: position k of the new problem is object ``order[k]``."""
        idx = np.asarray(order, dtype=int)
        return RankingProblem(
            objects=[self.objects[k] for k in idx],
            results=self.results[np.ix_(idx, idx)],
            matches=self.matches[np.ix_(idx, idx)],
            rounds=self.rounds,
        )


# Digraph DTOs
class Digraph(BaseModel):
    """Irreflexive digraph; ``(i, j)`` in ``edges`` means node i dominates node j."""

    model_config = ConfigDict(frozen=True)

    nodes: List[str]
    edges: FrozenSet[Tuple[int, int]] = frozenset()

    @model_validator(mode='after')
    def validate_edges(self):
        n = len(self.nodes)
        if len(set(self.nodes)) != n:
            raise ValueError('Node labels must be unique')
        for i, j in self.edges:
            if not (0 <= i < n and 0 <= j < n):
                raise ValueError(f'Edge ({i}, {j}) is outside 0..{n - 1}')
            if i == j:
                raise ValueError(f'Self-loop at node {self.nodes[i]} is not allowed')
        return self

    @property
    def n(self) -> int:
        return len(self.nodes)

    def adjacency(self) -> np.ndarray:
        """t_ij = 1 iff (i, j) is an edge."""
        t = np.zeros((self.n, self.n))
        for i, j in self.edges:
            t[i, j] = 1.0
        return t

    def permuted(self, order: Sequence[int]) -> "Digraph":
        position = {old: new for new, old in enumerate(order)}
        return Digraph(
            nodes=[self.nodes[k] for k in order],
            edges=frozenset((position[i], position[j]) for i, j in self.edges),
        )


class RoundSet(BaseModel):
    """Parsed per-round input: the object labels and one RoundMatrix per round."""

    model_config = ConfigDict(frozen=True)

    objects: List[str]
    rounds: List[RoundMatrix]


class Violation(BaseModel):
    """One broken RankingProblem invariant at pair (i, j) (0-based; i == j for diagonals)."""

    model_config = ConfigDict(frozen=True)

    kind: ViolationKind
    i: int
    j: int
    detail: str
