from __future__ import annotations

import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from complement_energy.graph import (
    Graph,
    GraphError,
    canonical_code,
    complement,
    complete_graph,
    components,
    cycle_graph,
    decode_graph6,
    delete_vertices,
    disjoint_union,
    edge_independence_number,
    empty_graph,
    encode_graph6,
    format_edge_list,
    graph_from_edges,
    is_forest,
    is_tree,
    parse_edge_list,
    parse_graph_text,
    path_graph,
    pendant_count,
    relabel,
    rooted_level_sequence,
    star_graph,
    tree_centers,
    tree_from_level_sequence,
)
from oracles import brute_nu, isomorphic, prufer_tree


@st.composite
def graphs(draw, max_n=9):
    n = draw(st.integers(0, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return graph_from_edges(n, chosen)


@st.composite
def trees(draw, min_n=1, max_n=10):
    n = draw(st.integers(min_n, max_n))
    seq = draw(st.lists(st.integers(0, n - 1), min_size=max(n - 2, 0), max_size=max(n - 2, 0)))
    return graph_from_edges(n, prufer_tree(seq, n))


def test_edges_are_normalized_and_deduplicated():
    g = graph_from_edges(3, [(1, 0), (0, 1), (2, 1)])
    assert g.edges == frozenset({(0, 1), (1, 2)})
    assert g.adj == ((1,), (0, 2), (1,))


@pytest.mark.parametrize("bad", [[(0, 0)], [(0, 3)], [(-1, 1)]])
def test_bad_edges_are_rejected(bad):
    with pytest.raises(GraphError):
        graph_from_edges(3, bad)


def test_graph_constructor_rejects_unnormalized_pairs():
    with pytest.raises(GraphError):
        Graph(2, frozenset({(1, 0)}))


def test_basic_builders():
    assert path_graph(0).n == 0
    assert path_graph(4).m == 3
    assert star_graph(5).degree(0) == 4
    assert cycle_graph(5).m == 5
    assert complete_graph(6).m == 15
    assert complement(star_graph(4)) == graph_from_edges(4, [(1, 2), (1, 3), (2, 3)])


def test_disjoint_union_and_deletion():
    g = disjoint_union(path_graph(3), path_graph(2))
    assert g.n == 5 and g.edges == frozenset({(0, 1), (1, 2), (3, 4)})
    assert len(components(g)) == 2
    h = delete_vertices(path_graph(5), [2])
    assert h == graph_from_edges(4, [(0, 1), (2, 3)])


def test_tree_predicates():
    assert is_tree(path_graph(1))
    assert not is_tree(empty_graph(0))
    assert not is_tree(cycle_graph(4))
    assert is_forest(disjoint_union(path_graph(3), path_graph(3)))
    assert pendant_count(star_graph(6)) == 5
    assert pendant_count(path_graph(2)) == 2


@settings(max_examples=150, deadline=None)
@given(graphs(max_n=8))
def test_matching_number_matches_brute_force(g):
    assert edge_independence_number(g) == (brute_nu(g.n, g.edges) if g.n else 0)


@settings(max_examples=150, deadline=None)
@given(graphs(max_n=12))
def test_graph6_round_trip(g):
    assert decode_graph6(encode_graph6(g)) == g


@pytest.mark.parametrize(
    "g, text",
    [(empty_graph(0), "?"), (path_graph(1), "@"), (path_graph(4), "Ch"), (complete_graph(3), "Bw")],
)
def test_graph6_frozen_strings(g, text):
    assert encode_graph6(g) == text
    assert decode_graph6(text) == g


def test_graph6_header_is_accepted():
    assert decode_graph6(">>graph6<<Ch\n") == path_graph(4)


@pytest.mark.parametrize(
    "text, where",
    [("C", "byte"), ("Chh", "byte"), ("C\x7f", "byte"), ("B@", "padding")],
)
def test_graph6_errors_name_the_problem(text, where):
    with pytest.raises(GraphError, match=where):
        decode_graph6(text)


def test_graph6_order_limit():
    with pytest.raises(GraphError):
        encode_graph6(empty_graph(63))


def test_edge_list_round_trip_and_autodetect():
    g = star_graph(5)
    text = format_edge_list(g)
    assert parse_edge_list(text) == g
    assert parse_graph_text("# comment\n" + text) == g
    assert parse_graph_text(encode_graph6(g) + "\n") == g


def test_edge_list_errors_report_line():
    with pytest.raises(GraphError, match="line 3"):
        parse_edge_list("3\n0 1\n1 x\n")


@settings(max_examples=100, deadline=None)
@given(trees(max_n=10), st.randoms(use_true_random=False))
def test_canonical_code_is_relabeling_invariant(t, rnd):
    perm = list(range(t.n))
    rnd.shuffle(perm)
    assert canonical_code(relabel(t, perm)) == canonical_code(t)


@settings(max_examples=100, deadline=None)
@given(trees(max_n=10))
def test_level_sequence_rebuilds_isomorphic_tree(t):
    code = canonical_code(t)
    rebuilt = tree_from_level_sequence(code.levels())
    assert rebuilt.n == t.n and canonical_code(rebuilt) == code


def test_canonical_code_separates_nonisomorphic_trees_of_order_7():
    from oracles import labeled_trees

    by_code = {}
    for edges in labeled_trees(7):
        t = graph_from_edges(7, edges)
        by_code.setdefault(canonical_code(t), t)
    reps = list(by_code.values())
    assert len(reps) == 11
    for a, b in itertools.combinations(reps, 2):
        assert not isomorphic(7, a.edges, b.edges)


def test_centers_and_rooted_sequences():
    assert tree_centers(path_graph(5)) == [2]
    assert tree_centers(path_graph(4)) == [1, 2]
    assert rooted_level_sequence(star_graph(4), 0) == (0, 1, 1, 1)


def test_canonical_code_rejects_non_trees():
    with pytest.raises(GraphError):
        canonical_code(cycle_graph(4))
