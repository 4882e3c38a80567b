"""
Exceptions for the rating engine.

Every error carries a human readable ``detail`` and the process ``exit_code`` the
command-line surface reports for it: 2 for bad data or parameters, 3 for structural
problems of the comparison graph and solver failures.
"""

from typing import Any, List, Optional


class RankingError(Exception):
    """Base class for all rating engine errors."""

    exit_code: int = 2

    def __init__(self, detail: str):
        super().__init__(detail)
        self.detail = detail


# Data errors (exit 2)

class InputFormatError(RankingError):
    """Malformed CSV input. ``line`` is 1-based and counts the header."""

    def __init__(self, detail: str, line: Optional[int] = None):
        if line is not None:
            detail = f"line {line}: {detail}"
        super().__init__(detail)
        self.line = line


class ConflictingInputFormat(RankingError):
    pass


class EmptyProblem(RankingError):
    pass


class DimensionMismatch(RankingError):
    pass


class InconsistentRound(RankingError):
    pass


class InvalidParameter(RankingError):
    pass


class EpsilonTooLarge(RankingError):
    """The series form of the generalized row sum diverges for this epsilon."""

    def __init__(self, epsilon: float, mu1: float, limit: float):
        super().__init__(
            f"epsilon={epsilon:g} is not below {limit:g} (largest Laplacian eigenvalue "
            f"{mu1:g}); the series diverges, use the direct generalized row sum instead"
        )
        self.epsilon = epsilon
        self.mu1 = mu1
        self.limit = limit


# Structural errors (exit 3)

class StructuralError(RankingError):
    exit_code = 3


class DisconnectedGraph(StructuralError):
    """The comparison multigraph has more than one component."""

    def __init__(self, components: List[List[str]]):
        listed = "; ".join("{" + ", ".join(c) + "}" for c in components)
        super().__init__(
            f"comparison graph is disconnected ({len(components)} components: {listed}); "
            "the least squares rating is not unique"
        )
        self.components = components


class RegularBipartiteGraph(StructuralError):
    """The iteration is not guaranteed to converge on a regular bipartite graph."""

    def __init__(self):
        super().__init__(
            "comparison graph is regular bipartite; the iterative least squares solver "
            "does not converge here, use the direct solver (or --fallback-direct)"
        )


class MaxIterationsExceeded(StructuralError):
    """An iteration hit its step cap. ``partial`` holds what was computed so far."""

    def __init__(self, detail: str, partial: Any = None):
        super().__init__(detail)
        self.partial = partial
