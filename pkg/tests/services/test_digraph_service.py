import numpy as np
import pytest

from app.core.exceptions import EmptyProblem, InvalidParameter, MaxIterationsExceeded
from app.dto.problem_dto import Digraph
from app.enums.rating_method import RatingMethod
from app.services.digraph_service import DigraphService
from app.services.problem_service import ProblemService


def digraph(n, edges):
    return Digraph(nodes=[f"X{k + 1}" for k in range(n)], edges=frozenset(edges))


def random_digraph(rng, n, density=0.3):
    edges = {(i, j) for i in range(n) for j in range(n) if i != j and rng.random() < density}
    return digraph(n, edges)


def test_embedding_reproduces_example(example_digraph, example_problem):
    problem = DigraphService.digraph_to_ranking_problem(example_digraph)
    np.testing.assert_array_equal(problem.results, example_problem.results)
    np.testing.assert_array_equal(problem.matches, example_problem.matches)
    assert problem.objects == example_problem.objects


def test_opposite_edges_are_one_drawn_match():
    problem = DigraphService.digraph_to_ranking_problem(digraph(2, {(0, 1), (1, 0)}))
    assert problem.results[0, 1] == 0
    assert problem.matches[0, 1] == problem.matches[1, 0] == 1


def test_opposite_edges_as_two_matches():
    problem = DigraphService.digraph_to_ranking_problem(digraph(2, {(0, 1), (1, 0)}),
                                                        two_matches=True)
    assert problem.results[0, 1] == 0
    assert problem.matches[0, 1] == 2


def test_empty_digraph_embeds_to_zero():
    problem = DigraphService.digraph_to_ranking_problem(digraph(3, set()))
    assert not problem.results.any()
    assert not problem.matches.any()


def test_embedding_is_always_valid(rng):
    for _ in range(30):
        g = random_digraph(rng, int(rng.integers(1, 10)), density=0.5)
        assert ProblemService.validate(DigraphService.digraph_to_ranking_problem(g)) == []


def test_dominance_digraph_inverts_the_embedding(example_digraph, rng):
    problem = DigraphService.digraph_to_ranking_problem(example_digraph)
    assert DigraphService.dominance_digraph(problem) == example_digraph
    g = random_digraph(rng, 8, density=0.4)
    roundtrip = DigraphService.dominance_digraph(DigraphService.digraph_to_ranking_problem(g))
    assert roundtrip.edges == g.edges


def test_digraph_rejects_self_loops():
    with pytest.raises(ValueError):
        digraph(2, {(0, 0)})


def test_positional_power_empty_digraph():
    rating = DigraphService.positional_power(digraph(3, set()))
    assert rating.method == RatingMethod.POSITIONAL_POWER
    np.testing.assert_array_equal(rating.values, [0.0, 0.0, 0.0])


def test_positional_power_single_edge():
    rating = DigraphService.positional_power(digraph(2, {(0, 1)}))
    np.testing.assert_allclose(rating.values, [1.0, 0.0], atol=1e-10)


def test_positional_power_three_cycle():
    rating = DigraphService.positional_power(digraph(3, {(0, 1), (1, 2), (2, 0)}))
    np.testing.assert_allclose(rating.values, [1.5, 1.5, 1.5], atol=1e-10)


def test_positional_power_solves_the_fixed_point(example_digraph):
    rating = DigraphService.positional_power(example_digraph)
    t = example_digraph.adjacency()
    expected = np.linalg.solve(np.eye(7) - t / 7, t.sum(axis=1))
    np.testing.assert_allclose(rating.values, expected, atol=1e-9)


def test_positional_power_on_random_digraphs(rng):
    for _ in range(100):
        g = random_digraph(rng, int(rng.integers(1, 51)), density=float(rng.random()))
        rating = DigraphService.positional_power(g, tol=1e-10, max_iter=10_000)
        out_degrees = g.adjacency().sum(axis=1)
        assert np.all(rating.values >= out_degrees - 1e-12)
        assert rating.parameters["steps"] <= 10_000


def test_positional_power_commutes_with_relabeling(rng):
    g = random_digraph(rng, 9, density=0.4)
    order = [int(k) for k in rng.permutation(9)]
    original = DigraphService.positional_power(g)
    permuted = DigraphService.positional_power(g.permuted(order))
    np.testing.assert_allclose(permuted.values, original.values[order], atol=1e-9)


def test_positional_power_decay_base():
    g = digraph(3, {(0, 1), (1, 2), (2, 0)})
    rating = DigraphService.positional_power(g, decay_base=4.0)
    # p = 1 + p / 4 on every node
    np.testing.assert_allclose(rating.values, [4 / 3] * 3, atol=1e-10)
    with pytest.raises(InvalidParameter):
        DigraphService.positional_power(g, decay_base=2.0)


def test_positional_power_step_cap():
    g = digraph(3, {(0, 1), (1, 2), (2, 0)})
    with pytest.raises(MaxIterationsExceeded) as error:
        DigraphService.positional_power(g, max_iter=3)
    assert error.value.partial.values.shape == (3,)


def test_positional_power_needs_nodes():
    with pytest.raises(EmptyProblem):
        DigraphService.positional_power(Digraph(nodes=[]))
