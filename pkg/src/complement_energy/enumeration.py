"""Non-isomorphic free trees via canonical level sequences.

This is the Wright-Richmond-Odlyzko-McKay successor scheme: start from the
level sequence of the path-like candidate, step through rooted trees in
decreasing lexicographic order, and skip candidates whose root is not the
canonical (centroid-normalized) one.
"""

from __future__ import annotations

from typing import Callable, Iterable, Iterator

from .graph import Graph, edge_independence_number, tree_from_level_sequence

MAX_ORDER = 20

TreePredicate = Callable[[Graph], bool]


def _next_rooted(levels: list[int], p: int | None = None) -> list[int] | None:
    if p is None:
        p = len(levels) - 1
        while levels[p] == 1:
            p -= 1
    if p == 0:
        return None
    q = p - 1
    while levels[q] != levels[p] - 1:
        q -= 1
    out = list(levels)
    for i in range(p, len(out)):
        out[i] = out[i - p + q]
    return out


def _split(levels: list[int]) -> tuple[list[int], list[int]]:
    # left: first subtree of the root (depths shifted up); rest: root + other subtrees
    cut = len(levels)
    seen_one = False
    for i, d in enumerate(levels):
        if d == 1:
            if seen_one:
                cut = i
                break
            seen_one = True
    left = [d - 1 for d in levels[1:cut]]
    rest = [0] + levels[cut:]
    return left, rest


def _next_free(levels: list[int]) -> list[int] | None:
    left, rest = _split(levels)
    lh, rh = max(left), max(rest)
    ok = rh >= lh
    if ok and rh == lh:
        if len(left) > len(rest) or (len(left) == len(rest) and left > rest):
            ok = False
    if ok:
        return levels
    p = len(left)
    nxt = _next_rooted(levels, p)
    if nxt is not None and levels[p] > 2:
        new_left, _ = _split(nxt)
        tail = list(range(1, max(new_left) + 2))
        nxt[-len(tail) :] = tail
    return nxt


def free_tree_levels(n: int) -> Iterator[tuple[int, ...]]:
    """Level sequences of every unlabeled tree on n vertices, each exactly once."""
    if not 1 <= n <= MAX_ORDER:
        raise ValueError(f"free tree enumeration supports 1 <= n <= {MAX_ORDER}, got {n}")
    if n <= 2:
        yield tuple(range(n))
        return
    levels: list[int] | None = list(range(n // 2 + 1)) + list(range(1, (n + 1) // 2))
    while levels is not None:
        levels = _next_free(levels)
        if levels is not None:
            yield tuple(levels)
            levels = _next_rooted(levels)


def free_trees(n: int) -> Iterator[Graph]:
    """All non-isomorphic trees of order n in a fixed deterministic order."""
    for levels in free_tree_levels(n):
        yield tree_from_level_sequence(levels)


def nu_at_least(p: int) -> TreePredicate:
    def pred(t: Graph) -> bool:
        return edge_independence_number(t) >= p

    pred.__name__ = f"nu_at_least({p})"
    return pred


def nu_equals(p: int) -> TreePredicate:
    def pred(t: Graph) -> bool:
        return edge_independence_number(t) == p

    pred.__name__ = f"nu_equals({p})"
    return pred


def perfect_matching() -> TreePredicate:
    def pred(t: Graph) -> bool:
        return t.n % 2 == 0 and edge_independence_number(t) == t.n // 2

    pred.__name__ = "perfect_matching"
    return pred


def parse_predicate(text: str) -> TreePredicate:
    """Parse 'nu_at_least:P', 'nu_equals:P' or 'perfect_matching'."""
    name, _, arg = text.partition(":")
    if name == "perfect_matching" and not arg:
        return perfect_matching()
    if name in ("nu_at_least", "nu_equals") and arg.lstrip("-").isdigit():
        return (nu_at_least if name == "nu_at_least" else nu_equals)(int(arg))
    raise ValueError(f"unknown tree filter {text!r}")


def filter_trees(stream: Iterable[Graph], predicate: TreePredicate) -> Iterator[Graph]:
    return (t for t in stream if predicate(t))
