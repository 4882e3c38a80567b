import numpy as np
import pytest

from app.core.exceptions import EmptyProblem
from app.dto.problem_dto import RankingProblem
from app.managers.spectral_manager import SpectralManager
from app.services.graph_service import GraphService
from app.services.problem_service import ProblemService
from tests.factories import (
    EXAMPLE_DEGREES, EXAMPLE_LOOPS, complete_bipartite, eigenvalues_oracle,
    problem_from_matches, problem_from_wins, random_problem, two_components
)


def test_analyze_example(example_problem):
    diagnostics = GraphService.analyze(example_problem)
    assert diagnostics.components == [example_problem.objects]
    assert diagnostics.is_connected
    np.testing.assert_array_equal(diagnostics.degrees, EXAMPLE_DEGREES)
    assert diagnostics.max_degree == 3
    assert not diagnostics.is_regular
    # X5, X6, X7 form a triangle
    assert diagnostics.bipartition is None
    assert not diagnostics.is_regular_bipartite
    assert diagnostics.is_unweighted
    assert not diagnostics.is_round_robin
    assert 0 < diagnostics.mu1_estimate < diagnostics.mu1_bound


@pytest.mark.parametrize("t", [2, 3])
def test_complete_bipartite_reaches_the_bound(t):
    diagnostics = GraphService.analyze(complete_bipartite(t))
    assert diagnostics.is_regular
    assert diagnostics.is_regular_bipartite
    first, second = diagnostics.bipartition
    assert sorted(map(len, (first, second))) == [t, t]
    assert abs(diagnostics.mu1_estimate - 2 * t) <= 1e-6 * t
    assert diagnostics.mu1_at_bound


def cycle(n):
    return problem_from_wins(n, [(k, k % n + 1) for k in range(1, n + 1)])


@pytest.mark.parametrize("n", [20, 60, 100])
def test_long_even_cycle_reaches_the_bound(n):
    diagnostics = GraphService.analyze(cycle(n))
    assert diagnostics.is_regular_bipartite
    assert abs(diagnostics.mu1_estimate - 4.0) <= 1e-6 * 2
    assert diagnostics.mu1_at_bound


def test_power_iteration_on_an_even_cycle():
    laplacian = ProblemService.laplacian(cycle(60))
    estimate = SpectralManager.largest_laplacian_eigenvalue(laplacian)
    assert abs(estimate - 4.0) <= 1e-6 * 2


def test_odd_cycle_stays_below_the_bound():
    diagnostics = GraphService.analyze(cycle(61))
    assert not diagnostics.is_bipartite
    assert diagnostics.mu1_estimate < diagnostics.mu1_bound
    assert not diagnostics.mu1_at_bound


def test_two_disjoint_edges():
    diagnostics = GraphService.analyze(two_components())
    assert diagnostics.components == [["X1", "X2"], ["X3", "X4"]]
    assert not diagnostics.is_connected
    assert diagnostics.is_bipartite


def test_balanced_multigraph_example(example_problem):
    balanced = GraphService.balanced_multigraph(example_problem)
    np.testing.assert_array_equal(balanced.loops, EXAMPLE_LOOPS)
    np.testing.assert_allclose(balanced.balanced_matrix().sum(axis=1), 3.0)
    np.testing.assert_allclose(balanced.transition_matrix().sum(axis=1), 1.0)


def test_balanced_multigraph_star():
    star = problem_from_wins(4, [(1, 2), (1, 3), (1, 4)])
    balanced = GraphService.balanced_multigraph(star)
    np.testing.assert_array_equal(balanced.loops, [0, 2, 2, 2])
    assert balanced.max_degree == 3


def test_balanced_multigraph_regular_has_no_loops():
    ring = problem_from_wins(5, [(1, 2), (2, 3), (3, 4), (4, 5), (5, 1)])
    balanced = GraphService.balanced_multigraph(ring)
    assert not balanced.loops.any()


def test_round_robin_flag():
    matches = np.ones((3, 3)) - np.eye(3)
    diagnostics = GraphService.analyze(problem_from_matches(matches))
    assert diagnostics.is_round_robin
    assert diagnostics.is_regular


def test_weighted_edges_count_once_for_structure():
    matches = np.array([[0, 3, 0], [3, 0, 0.5], [0, 0.5, 0]])
    diagnostics = GraphService.analyze(problem_from_matches(matches))
    assert diagnostics.is_connected
    assert not diagnostics.is_unweighted
    np.testing.assert_allclose(diagnostics.degrees, [3, 3.5, 0.5])


def test_analyze_rejects_empty_problem():
    with pytest.raises(EmptyProblem):
        GraphService.analyze(RankingProblem.from_matrices(np.zeros((0, 0)), np.zeros((0, 0))))


def test_single_object():
    diagnostics = GraphService.analyze(problem_from_matches(np.zeros((1, 1))))
    assert diagnostics.is_connected
    assert diagnostics.mu1_estimate == 0.0
    assert not diagnostics.is_regular_bipartite


def test_connected_random_graphs_against_eigen_oracle(rng):
    for _ in range(50):
        problem = random_problem(rng, int(rng.integers(3, 9)))
        diagnostics = GraphService.analyze(problem)
        eigenvalues = eigenvalues_oracle(problem)
        assert diagnostics.is_connected
        assert eigenvalues[1] > 1e-9
        assert diagnostics.mu1_estimate > 0
        assert diagnostics.mu1_estimate == pytest.approx(eigenvalues[-1], rel=1e-4)
        assert diagnostics.mu1_estimate <= diagnostics.mu1_bound + 1e-9
        if not diagnostics.is_regular_bipartite:
            assert diagnostics.mu1_estimate < diagnostics.mu1_bound


def test_disconnected_random_graphs_against_eigen_oracle(rng):
    for _ in range(30):
        problem = random_problem(rng, int(rng.integers(3, 9)), density=0.2, connected=False)
        diagnostics = GraphService.analyze(problem)
        zero_eigenvalues = int(np.sum(np.abs(eigenvalues_oracle(problem)) < 1e-9))
        assert len(diagnostics.components) == zero_eigenvalues


def test_permutation_permutes_diagnostics(rng):
    problem = random_problem(rng, 7)
    order = rng.permutation(7)
    original = GraphService.analyze(problem)
    permuted = GraphService.analyze(problem.permuted(order))
    np.testing.assert_array_equal(permuted.degrees, original.degrees[order])
    assert permuted.max_degree == original.max_degree
    assert permuted.is_regular == original.is_regular
    assert permuted.is_bipartite == original.is_bipartite
    assert permuted.mu1_estimate == pytest.approx(original.mu1_estimate, rel=1e-4)
    assert sorted(map(sorted, permuted.components)) == sorted(map(sorted, original.components))
