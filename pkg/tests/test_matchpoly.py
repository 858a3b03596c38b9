from __future__ import annotations

import pytest
from hypothesis import given, settings

from complement_energy.graph import (
    complement,
    complete_graph,
    cycle_graph,
    disjoint_union,
    empty_graph,
    path_graph,
    star_graph,
)
from complement_energy.matchpoly import (
    MatchingVector,
    disjoint_union_counts,
    edge_recursion_counts,
    hosoya_index,
    matching_counts,
    matching_polynomial,
    path_counts,
    vertex_recursion_counts,
)
from oracles import brute_matching_counts
from test_graph import graphs, trees


@pytest.mark.parametrize(
    "g, counts",
    [
        (empty_graph(0), (1,)),
        (path_graph(1), (1,)),
        (path_graph(4), (1, 3, 1)),
        (path_graph(6), (1, 5, 6, 1)),
        (star_graph(6), (1, 5, 0, 0)),
        (cycle_graph(5), (1, 5, 5)),
        (complete_graph(6), (1, 15, 45, 15)),
        # frozen from the brute-force oracle
        (complement(path_graph(8)), (1, 21, 120, 185, 36)),
        (complement(path_graph(10)), (1, 36, 406, 1645, 2010, 329)),
    ],
)
def test_frozen_counts(g, counts):
    assert matching_counts(g).counts == counts


@settings(max_examples=200, deadline=None)
@given(graphs(max_n=9))
def test_all_routes_agree_with_brute_force(g):
    expect = list(brute_matching_counts(g.n, g.edges))
    assert list(matching_counts(g).counts) == expect
    assert list(vertex_recursion_counts(g).counts) == expect
    if g.m <= 14:
        assert list(edge_recursion_counts(g).counts) == expect


@settings(max_examples=100, deadline=None)
@given(trees(max_n=14))
def test_tree_dp_matches_vertex_recursion(t):
    assert matching_counts(t) == vertex_recursion_counts(t)


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=6), graphs(max_n=6))
def test_union_is_convolution(a, b):
    assert disjoint_union_counts(matching_counts(a), matching_counts(b)) == matching_counts(disjoint_union(a, b))


def test_path_counts_closed_form():
    for n in range(0, 15):
        assert path_counts(n) == matching_counts(path_graph(n))


def test_polynomial_and_hosoya():
    v = matching_counts(path_graph(4))
    poly = matching_polynomial(v)
    assert poly.coeffs == (1, 0, -3, 0, 1)
    assert str(poly) == "x^4 - 3x^2 + 1"
    assert hosoya_index(v) == 5
    # Fibonacci: Z(P_n) = F_{n+1}
    fib = [1, 1]
    for _ in range(20):
        fib.append(fib[-1] + fib[-2])
    for n in range(1, 15):
        assert hosoya_index(matching_counts(path_graph(n))) == fib[n]


def test_vector_validation():
    with pytest.raises(ValueError):
        MatchingVector(4, (1, 3))
    with pytest.raises(ValueError):
        MatchingVector(4, (2, 3, 1))
    with pytest.raises(ValueError):
        MatchingVector(4, (1, -1, 0))
    v = MatchingVector.from_counts(5, [1, 4])
    assert v.counts == (1, 4, 0) and v[7] == 0 and v.max_k == 1
