import numpy as np
import pytest

from app.dto.problem_dto import Digraph, RankingProblem
from tests.factories import SEVEN_OBJECT_EDGES, problem_from_wins


@pytest.fixture
def example_problem() -> RankingProblem:
    """Seven objects, seven decisive matches; connected, not bipartite."""
    return problem_from_wins(7, SEVEN_OBJECT_EDGES)


@pytest.fixture
def example_digraph() -> Digraph:
    return Digraph(
        nodes=[f"X{k}" for k in range(1, 8)],
        edges=frozenset((w - 1, l - 1) for w, l in SEVEN_OBJECT_EDGES),
    )


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(12345)


@pytest.fixture
def write_csv(tmp_path):
    """Write CSV text to a temporary file and return its path as a string."""
    def write(text: str, name: str = "input.csv") -> str:
        path = tmp_path / name
        path.write_text(text, encoding="utf-8")
        return str(path)
    return write
