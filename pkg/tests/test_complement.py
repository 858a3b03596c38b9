from __future__ import annotations

import pytest
from hypothesis import given, settings

from complement_energy.complement import NotRealizableError, double_factorial, lovasz_signed, lovasz_transform
from complement_energy.graph import complement, path_graph, star_graph
from complement_energy.matchpoly import MatchingVector, matching_counts, vertex_recursion_counts
from oracles import brute_matching_counts, complement_edges
from test_graph import graphs


def test_double_factorial_conventions():
    assert [double_factorial(s) for s in (-1, 0, 1, 2, 3, 5, 6, 7)] == [1, 1, 1, 2, 3, 15, 48, 105]
    with pytest.raises(ValueError):
        double_factorial(-3)


def test_star_complement_is_triangle_plus_isolated_vertex():
    assert lovasz_transform(matching_counts(star_graph(4))).counts == (1, 3, 0)


def test_p4_is_self_complementary():
    v = matching_counts(path_graph(4))
    assert lovasz_transform(v) == v


def test_empty_and_single_vertex():
    assert lovasz_transform(MatchingVector(0, (1,))).counts == (1,)
    assert lovasz_transform(MatchingVector(1, (1,))).counts == (1,)
    assert lovasz_transform(MatchingVector(2, (1, 0))).counts == (1, 1)


@settings(max_examples=200, deadline=None)
@given(graphs(max_n=9))
def test_transform_matches_brute_force_on_any_graph(g):
    got = lovasz_transform(matching_counts(g))
    assert list(got.counts) == brute_matching_counts(g.n, complement_edges(g.n, g.edges))


@settings(max_examples=200, deadline=None)
@given(graphs(max_n=12))
def test_involution(g):
    v = vertex_recursion_counts(g)
    assert lovasz_transform(lovasz_transform(v)) == v
    assert lovasz_transform(v) == vertex_recursion_counts(complement(g))


def test_unrealizable_vector_is_rejected():
    bad = MatchingVector(4, (1, 6, 0))
    assert lovasz_signed(4, bad.counts) == [1, 0, -3]
    with pytest.raises(NotRealizableError, match="r=2"):
        lovasz_transform(bad)
