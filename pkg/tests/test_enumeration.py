from __future__ import annotations

import pytest

from complement_energy.enumeration import (
    filter_trees,
    free_tree_levels,
    free_trees,
    nu_at_least,
    nu_equals,
    parse_predicate,
    perfect_matching,
)
from complement_energy.families import family
from complement_energy.graph import canonical_code, encode_graph6, graph_from_edges, is_tree
from oracles import ahu_canon, labeled_trees

COUNTS = [1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551, 1301]


@pytest.mark.parametrize("n", range(1, len(COUNTS) + 1))
def test_counts(n):
    trees = list(free_trees(n))
    assert len(trees) == COUNTS[n - 1]
    assert all(is_tree(t) and t.n == n for t in trees)
    assert len({canonical_code(t) for t in trees}) == len(trees)


@pytest.mark.parametrize("n", range(1, 8))
def test_matches_labeled_enumeration(n):
    labeled = {ahu_canon(n, e) for e in labeled_trees(n)}
    emitted = [ahu_canon(t.n, t.edges) for t in free_trees(n)]
    assert len(emitted) == len(set(emitted))
    assert set(emitted) == labeled


def test_order_is_deterministic():
    assert list(free_tree_levels(9)) == list(free_tree_levels(9))


@pytest.mark.parametrize("n", [0, 21])
def test_out_of_range(n):
    with pytest.raises(ValueError):
        list(free_trees(n))


def test_perfect_matching_population_at_6():
    pop = list(filter_trees(free_trees(6), perfect_matching()))
    codes = {canonical_code(t) for t in pop}
    assert len(pop) == 2
    assert codes == {canonical_code(family("path", 6)), canonical_code(family("t_n_p", 6, 3))}


def test_filters():
    assert sum(1 for _ in filter_trees(free_trees(8), nu_at_least(1))) == 23
    assert sum(1 for _ in filter_trees(free_trees(8), nu_equals(1))) == 1
    assert parse_predicate("nu_equals:2")(graph_from_edges(4, [(0, 1), (2, 3), (1, 2)]))
    for bad in ("nu_at_least", "bogus", "perfect_matching:2"):
        with pytest.raises(ValueError):
            parse_predicate(bad)


def test_graph6_lines_are_unique():
    lines = [encode_graph6(t) for t in free_trees(10)]
    assert len(lines) == len(set(lines)) == 106
