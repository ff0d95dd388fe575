"""Centrality-to-game constructions against direct computations."""

import random
from fractions import Fraction

import pytest

from skillcent import (CapacityError, Graph, SemivalueSpec, ValidationError,
                       betweenness_csg, betweenness_direct, centrality_to_csg,
                       degree_csg, degree_direct, exact_semivalue,
                       trivial_centrality, wtc911)
from helpers import random_connected_graph, random_graph


def test_round_trip_star_degree_vector():
    game = centrality_to_csg(degree_direct(Graph.star(7)).values)
    for spec in (SemivalueSpec.shapley(), SemivalueSpec.banzhaf(), SemivalueSpec.trivial()):
        assert list(exact_semivalue(game, spec).values) == [6, 1, 1, 1, 1, 1, 1]


def test_round_trip_zero_vector():
    game = centrality_to_csg([0, 0, 0])
    assert all(game.value(mask) == 0 for mask in range(8))


def test_round_trip_random_rational_vectors():
    rng = random.Random(51)
    for _ in range(20):
        n = rng.randint(1, 8)
        c = [Fraction(rng.randint(0, 12), rng.randint(1, 5)) for _ in range(n)]
        game = centrality_to_csg(c)
        for spec in (SemivalueSpec.shapley(), SemivalueSpec.banzhaf()):
            assert list(exact_semivalue(game, spec).values) == c


def test_negative_centrality_rejected():
    with pytest.raises(ValidationError):
        centrality_to_csg([1, -Fraction(1, 2)])


# -- degree -----------------------------------------------------------

def test_degree_csg_star():
    assert list(trivial_centrality(degree_csg(Graph.star(7))).values) == [6, 1, 1, 1, 1, 1, 1]


def test_degree_csg_edgeless():
    game = degree_csg(Graph.empty(4))
    assert not game.tasks
    assert list(trivial_centrality(game).values) == [0, 0, 0, 0]


def test_degree_csg_triangle():
    assert list(trivial_centrality(degree_csg(Graph.complete(3))).values) == [2, 2, 2]


def test_degree_csg_matches_direct_random():
    rng = random.Random(52)
    for _ in range(40):
        graph = random_graph(rng, rng.randint(1, 30))
        assert trivial_centrality(degree_csg(graph)).values == degree_direct(graph).values


# -- betweenness -------------------------------------------------------

def test_betweenness_path3():
    graph = Graph.path(3)
    assert list(betweenness_direct(graph).values) == [0, 1, 0]
    assert list(trivial_centrality(betweenness_csg(graph)).values) == [0, 1, 0]


def test_betweenness_complete_graph_zero():
    graph = Graph.complete(4)
    assert all(v == 0 for v in betweenness_direct(graph).values)
    assert all(v == 0 for v in trivial_centrality(betweenness_csg(graph)).values)


def test_betweenness_four_cycle():
    graph = Graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    direct = betweenness_direct(graph)
    # each antipodal pair has two shortest paths, giving each vertex 1/2
    assert list(direct.values) == [Fraction(1, 2)] * 4
    assert trivial_centrality(betweenness_csg(graph)).values == direct.values


def test_betweenness_star_center():
    n = 7
    direct = betweenness_direct(Graph.star(n))
    assert direct[0] == Fraction((n - 1) * (n - 2), 2)
    assert all(direct[i] == 0 for i in range(1, n))


def test_betweenness_disconnected_pairs_skipped():
    graph = Graph(4, [(0, 1), (2, 3)])
    assert all(v == 0 for v in betweenness_direct(graph).values)
    assert all(v == 0 for v in trivial_centrality(betweenness_csg(graph)).values)


def test_betweenness_csg_matches_direct_random_connected():
    rng = random.Random(53)
    for _ in range(25):
        graph = random_connected_graph(rng, rng.randint(2, 12))
        got = trivial_centrality(betweenness_csg(graph))
        assert got.values == betweenness_direct(graph).values


def test_betweenness_path_cap():
    # two diamonds in series: 4 shortest paths between the end vertices
    graph = Graph(7, [(0, 1), (0, 2), (1, 3), (2, 3), (3, 4), (3, 5), (4, 6), (5, 6)])
    with pytest.raises(CapacityError):
        betweenness_csg(graph, path_cap=3)
    game = betweenness_csg(graph)  # default cap is fine
    assert trivial_centrality(game).values == betweenness_direct(graph).values


# -- trivial centrality -------------------------------------------------

def test_trivial_centrality_fixture_all_zero():
    game, _ = wtc911()
    assert all(v == 0 for v in trivial_centrality(game).values)


def test_trivial_centrality_dummy_weights():
    game = centrality_to_csg([Fraction(5, 2), 1, 0])
    assert list(trivial_centrality(game).values) == [Fraction(5, 2), 1, 0]
