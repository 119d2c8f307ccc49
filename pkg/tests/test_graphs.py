from __future__ import annotations

from random import Random

import networkx as nx
import pytest

from p3ramsey.graphs import (
    Graph,
    apply_permutation,
    complement,
    contains_c4,
    degree_sequence,
    edge,
    is_biconnected,
    is_connected,
    min_degree,
    remove_edges,
)

from conftest import complete_graph, cycle_graph, path_graph
from oracles import brute_has_c4, random_graph


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.order))
    h.add_edges_from(g.edges())
    return h


def test_edge_normalizes_and_rejects_loops():
    assert edge(3, 1) == (1, 3)
    assert edge(1, 3) == (1, 3)
    with pytest.raises(ValueError):
        edge(2, 2)


def test_constructor_validates():
    with pytest.raises(ValueError):
        Graph(33)
    with pytest.raises(ValueError):
        Graph(-1)
    with pytest.raises(ValueError):
        Graph(3, [(0, 3)])
    with pytest.raises(ValueError):
        Graph(3, [(1, 1)])
    g = Graph(4, [(2, 0), (0, 2), (1, 3)])  # duplicates and order collapse
    assert g.edges() == [(0, 2), (1, 3)]


def test_from_adj_rows_validates():
    g = Graph(4, [(0, 1), (1, 2), (2, 3)])
    assert Graph.from_adj_rows(list(g.adj)) == g
    with pytest.raises(ValueError):
        Graph.from_adj_rows([0b10, 0b00])  # asymmetric
    with pytest.raises(ValueError):
        Graph.from_adj_rows([0b01, 0b00])  # loop at 0
    with pytest.raises(ValueError):
        Graph.from_adj_rows([0b100, 0b000])  # stray bit


def test_edges_sorted_and_counts():
    g = Graph(5, [(3, 4), (0, 4), (1, 2), (0, 1)])
    assert g.edges() == [(0, 1), (0, 4), (1, 2), (3, 4)]
    assert g.edge_count == 4
    assert g.degree(0) == 2
    assert g.degree(3) == 1
    assert g.has_edge(4, 0) and not g.has_edge(2, 3)
    assert g.neighbors(4) == [0, 3]


def test_equality_and_hash():
    a = Graph(3, [(0, 1)])
    b = Graph(3, [(0, 1)])
    c = Graph(3, [(0, 2)])
    assert a == b and hash(a) == hash(b)
    assert a != c
    assert len({a, b, c}) == 2


def test_complement_small():
    k4 = complete_graph(4)
    assert complement(k4).edge_count == 0
    assert complement(complement(k4)) == k4
    c5 = cycle_graph(5)
    comp = complement(c5)
    assert degree_sequence(comp) == (2, 2, 2, 2, 2)


def test_complement_matches_networkx():
    rng = Random(11)
    for _ in range(30):
        g = random_graph(rng, rng.randint(0, 9))
        ours = to_nx(complement(g))
        theirs = nx.complement(to_nx(g))
        assert set(map(frozenset, ours.edges())) == set(map(frozenset, theirs.edges()))


def test_degree_sequence_sorted():
    g = Graph(5, [(0, 1), (0, 2), (0, 3), (3, 4)])
    assert degree_sequence(g) == (3, 2, 1, 1, 1)
    assert degree_sequence(Graph(0)) == ()
    assert min_degree(g) == 1
    assert min_degree(Graph(0)) == 0


def test_remove_edges():
    c4 = cycle_graph(4)
    g = remove_edges(c4, [(0, 1), (3, 2)])
    assert g.edges() == [(0, 3), (1, 2)]
    assert c4.edge_count == 4  # input untouched
    with pytest.raises(ValueError):
        remove_edges(c4, [(0, 2)])


def test_apply_permutation():
    p4 = path_graph(4)
    ident = apply_permutation(p4, (0, 1, 2, 3))
    assert ident == p4
    rev = apply_permutation(p4, (3, 2, 1, 0))
    assert rev.edges() == [(0, 1), (1, 2), (2, 3)]
    rotated = apply_permutation(cycle_graph(5), (1, 2, 3, 4, 0))
    assert degree_sequence(rotated) == (2, 2, 2, 2, 2)
    with pytest.raises(ValueError):
        apply_permutation(p4, (0, 1, 2, 2))


def test_connectivity():
    assert is_connected(Graph(0))
    assert is_connected(Graph(1))
    assert not is_connected(Graph(2))
    assert is_connected(path_graph(6))
    two_parts = Graph(6, [(0, 1), (1, 2), (3, 4), (4, 5)])
    assert not is_connected(two_parts)


def test_biconnectivity_fixed_cases(prism):
    assert is_biconnected(complete_graph(3))
    assert is_biconnected(cycle_graph(5))
    assert is_biconnected(prism)
    assert not is_biconnected(path_graph(4))
    assert not is_biconnected(Graph(2, [(0, 1)]))
    bowtie = Graph(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)])
    assert not is_biconnected(bowtie)  # cut vertex 2


def test_biconnectivity_matches_networkx():
    rng = Random(7)
    for _ in range(60):
        n = rng.randint(3, 10)
        g = random_graph(rng, n, rng.choice([0.2, 0.4, 0.6]))
        assert is_biconnected(g) == nx.is_biconnected(to_nx(g)), g


def test_contains_c4_fixed(petersen):
    assert contains_c4(cycle_graph(4))
    assert contains_c4(complete_graph(4))
    assert not contains_c4(cycle_graph(5))
    assert not contains_c4(petersen)  # girth 5
    assert contains_c4(Graph(5, [(0, 1), (0, 2), (0, 3), (4, 1), (4, 2)]))
    assert not contains_c4(path_graph(8))


def test_contains_c4_matches_bruteforce():
    rng = Random(13)
    for _ in range(80):
        g = random_graph(rng, rng.randint(4, 7), rng.choice([0.2, 0.35, 0.5]))
        assert contains_c4(g) == brute_has_c4(g), g
