"""
Validation manager for the rating engine.

Handles invariant checks on ranking problems and rounds, and the preconditions
that solvers share (connectivity, parameter ranges).
"""

from typing import List, Sequence

import numpy as np

from app.core.exceptions import DisconnectedGraph, InconsistentRound, InvalidParameter
from app.dto.problem_dto import RankingProblem, RoundMatrix, Violation
from app.enums.violation_kind import ViolationKind

# Absolute slack for comparisons of aggregated real-valued entries
ATOL = 1e-9


class ValidationManager:
    """Manager for handling problem invariants and solver preconditions."""

    @staticmethod
    def validate_problem(problem: RankingProblem) -> List[Violation]:
        """
        Check every RankingProblem invariant.
        Returns one violation per offending pair (diagonal entries use i == j);
        an empty list means the problem is well formed.
        """
        a, m, labels = problem.results, problem.matches, problem.objects
        n = problem.n
        violations: List[Violation] = []

        def report(kind: ViolationKind, i: int, j: int, detail: str) -> None:
            violations.append(Violation(kind=kind, i=i, j=j, detail=detail))

        if not (np.all(np.isfinite(a)) and np.all(np.isfinite(m))):
            for i, j in zip(*np.nonzero(~(np.isfinite(a) & np.isfinite(m)))):
                report(ViolationKind.NON_FINITE, int(i), int(j),
                       f"non-finite entry at ({labels[i]}, {labels[j]})")
            return violations

        for i in range(n):
            if abs(a[i, i]) > ATOL:
                report(ViolationKind.RESULTS_DIAGONAL, i, i, f"a_ii = {a[i, i]:g} for {labels[i]}")
            if abs(m[i, i]) > ATOL:
                report(ViolationKind.MATCHES_DIAGONAL, i, i, f"m_ii = {m[i, i]:g} for {labels[i]}")

        for i in range(n):
            for j in range(i + 1, n):
                pair = f"({labels[i]}, {labels[j]})"
                if abs(a[i, j] + a[j, i]) > ATOL:
                    report(ViolationKind.RESULTS_SKEW_SYMMETRY, i, j,
                           f"a_ij = {a[i, j]:g} but a_ji = {a[j, i]:g} at {pair}")
                if abs(m[i, j] - m[j, i]) > ATOL:
                    report(ViolationKind.MATCHES_SYMMETRY, i, j,
                           f"m_ij = {m[i, j]:g} but m_ji = {m[j, i]:g} at {pair}")
                if m[i, j] < 0 or m[j, i] < 0:
                    report(ViolationKind.MATCHES_NEGATIVE, i, j, f"negative match count at {pair}")
                if abs(a[i, j]) > m[i, j] + ATOL or abs(a[j, i]) > m[j, i] + ATOL:
                    report(ViolationKind.RESULTS_EXCEED_MATCHES, i, j,
                           f"|a_ij| = {abs(a[i, j]):g} exceeds m_ij = {m[i, j]:g} at {pair}")
        return violations

    @staticmethod
    def validate_round(round_matrix: RoundMatrix, index: int) -> None:
        """
        Validate that both orientations of every compared pair are present and add up to one.
        Raises InconsistentRound otherwise.
        """
        entries = round_matrix.entries
        for (i, j), r in entries.items():
            if (j, i) not in entries:
                raise InconsistentRound(
                    f"round {index + 1}: r_{i + 1}{j + 1} is defined but r_{j + 1}{i + 1} is not"
                )
            if abs(r + entries[(j, i)] - 1.0) > ATOL:
                raise InconsistentRound(
                    f"round {index + 1}: r_{i + 1}{j + 1} + r_{j + 1}{i + 1} = "
                    f"{r + entries[(j, i)]:g}, expected 1"
                )

    @staticmethod
    def validate_connected(components: Sequence[Sequence[str]]) -> None:
        """Raises DisconnectedGraph when there is more than one component."""
        if len(components) > 1:
            raise DisconnectedGraph([list(c) for c in components])

    @staticmethod
    def validate_positive(name: str, value: float) -> None:
        if not value > 0:
            raise InvalidParameter(f"{name} must be positive, got {value}")

    @staticmethod
    def validate_non_negative(name: str, value: float) -> None:
        if not value >= 0:
            raise InvalidParameter(f"{name} cannot be negative, got {value}")
