import pytest
from hypothesis import given

from assoc_mersenne.bitstring import Family, hamming
from assoc_mersenne.cube_props import (
    is_isometric_subgraph,
    is_median_closed,
    is_median_graph,
    majority,
    median_count,
)
from assoc_mersenne.graph import build_graph, induced_graph
from assoc_mersenne.metrics import distance_matrix
from conftest import equal_length_words

M = Family.CIRCULAR_RUN_CONSTRAINED


@pytest.mark.parametrize("n,expected", [(3, True), (6, True), (8, True), (9, False), (11, False)])
def test_isometry(n, expected):
    report = is_isometric_subgraph(build_graph(M, n))
    assert report.isometric is expected
    assert (report.witness is None) == expected


def test_isometry_witness_is_genuine():
    g = build_graph(M, 9)
    report = is_isometric_subgraph(g)
    u, v = report.witness
    dist = distance_matrix(g)
    assert report.witness_hamming == hamming(u, v) == 2
    assert report.witness_distance == dist[g.index(u), g.index(v)] > 2


def test_isometry_known_pair_at_9():
    g = build_graph(M, 9)
    dist = distance_matrix(g)
    u, v = "111100000", "100100000"
    assert hamming(u, v) == 2
    assert dist[g.index(u), g.index(v)] > 2


def test_majority_examples():
    assert majority("1110000", "1000000", "0010000") == "1010000"
    assert majority("000", "011", "101") == "001"
    assert majority("0110", "0110", "0110") == "0110"


@given(equal_length_words(k=3))
def test_majority_symmetric_and_idempotent(t):
    a, b, c = t
    m = majority(a, b, c)
    assert m == majority(b, c, a) == majority(c, a, b) == majority(b, a, c)
    assert majority(a, a, c) == a
    # the majority lies on a shortest Hamming path between each pair
    assert hamming(a, m) + hamming(m, b) == hamming(a, b)


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_median_small(n):
    g = build_graph(M, n)
    assert is_median_closed(g).is_median_closed is True
    assert is_median_graph(g).is_median_graph is True


def test_median_fails_at_7():
    g = build_graph(M, 7)
    closed = is_median_closed(g)
    assert closed.is_median_closed is False
    assert closed.witness_majority not in g.vertices
    graph_report = is_median_graph(g)
    assert graph_report.is_median_graph is False
    a, b, c = graph_report.witness
    dist = distance_matrix(g)
    assert median_count(dist, g.index(a), g.index(b), g.index(c)) != 1
    assert majority("1110000", "1000000", "0010000") not in g.vertices


def test_majority_closure_marked_advisory_when_not_isometric():
    report = is_median_closed(build_graph(M, 9))
    assert report.advisory_only


def test_median_on_a_four_cycle_with_tail():
    g = induced_graph(Family.HYPERCUBE, 3, ["000", "001", "011", "010", "110"])
    assert is_median_graph(g).is_median_graph is True
    g = induced_graph(Family.HYPERCUBE, 3, ["000", "001", "010", "100"])
    assert is_median_graph(g).is_median_graph is True
