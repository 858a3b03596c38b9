"""Simple undirected graphs on vertices 0..n-1, tree utilities and codecs."""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable


class GraphError(ValueError):
    """Invalid graph data (bad endpoint, loop, malformed encoding)."""


@dataclass(frozen=True)
class Graph:
    n: int
    edges: frozenset[tuple[int, int]] = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        if self.n < 0:
            raise GraphError(f"vertex count must be nonnegative, got {self.n}")
        for u, v in self.edges:
            if not (0 <= u < v < self.n):
                raise GraphError(f"edge ({u}, {v}) is not a normalized pair in range [0, {self.n})")

    @cached_property
    def adj(self) -> tuple[tuple[int, ...], ...]:
        nbrs: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            nbrs[u].append(v)
            nbrs[v].append(u)
        return tuple(tuple(sorted(a)) for a in nbrs)

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.sorted_edges()})"


def graph_from_edges(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph, normalizing each pair to (min, max) and dropping duplicates.

    Raises GraphError naming the offending pair for self-loops or endpoints
    outside [0, n).
    """
    norm = set()
    for pair in edges:
        u, v = (int(x) for x in pair)
        if u == v:
            raise GraphError(f"self-loop at pair ({u}, {v})")
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"pair ({u}, {v}) has an endpoint outside [0, {n})")
        norm.add((u, v) if u < v else (v, u))
    return Graph(n, frozenset(norm))


def empty_graph(n: int) -> Graph:
    return Graph(n)


def path_graph(n: int) -> Graph:
    """P_n on vertices 0..n-1; P_0 is the graph with no vertices."""
    return Graph(n, frozenset((i, i + 1) for i in range(n - 1)))


def star_graph(n: int) -> Graph:
    """K_{1,n-1} with hub 0."""
    return Graph(n, frozenset((0, i) for i in range(1, n)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError("a cycle needs at least 3 vertices")
    return graph_from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return Graph(n, frozenset(itertools.combinations(range(n), 2)))


def complement(g: Graph) -> Graph:
    all_pairs = itertools.combinations(range(g.n), 2)
    return Graph(g.n, frozenset(p for p in all_pairs if p not in g.edges))


def disjoint_union(*graphs: Graph) -> Graph:
    offset = 0
    edges = []
    for g in graphs:
        edges.extend((u + offset, v + offset) for u, v in g.edges)
        offset += g.n
    return Graph(offset, frozenset(edges))


def delete_vertices(g: Graph, removed: Iterable[int]) -> Graph:
    """Induced subgraph on the remaining vertices, relabeled in increasing order."""
    gone = set(removed)
    keep = [v for v in range(g.n) if v not in gone]
    index = {v: i for i, v in enumerate(keep)}
    edges = [(index[u], index[v]) for u, v in g.edges if u in index and v in index]
    return Graph(len(keep), frozenset(edges))


def relabel(g: Graph, perm: list[int] | tuple[int, ...]) -> Graph:
    """Image of g under the vertex map v -> perm[v]."""
    return graph_from_edges(g.n, [(perm[u], perm[v]) for u, v in g.edges])


def components(g: Graph) -> list[list[int]]:
    seen = [False] * g.n
    comps = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        comp = [s]
        queue = deque([s])
        while queue:
            x = queue.popleft()
            for y in g.adj[x]:
                if not seen[y]:
                    seen[y] = True
                    comp.append(y)
                    queue.append(y)
        comps.append(sorted(comp))
    return comps


def is_connected(g: Graph) -> bool:
    return g.n <= 1 or len(components(g)) == 1


def is_tree(g: Graph) -> bool:
    return g.n >= 1 and g.m == g.n - 1 and is_connected(g)


def is_forest(g: Graph) -> bool:
    return g.m == g.n - len(components(g))


def pendant_count(g: Graph) -> int:
    return sum(1 for v in range(g.n) if len(g.adj[v]) == 1)


def edge_independence_number(g: Graph) -> int:
    """Size of a maximum matching.

    Forests use repeated leaf matching (linear time). Other graphs fall back
    to exhaustive search, which is only meant for small oracle checks.
    """
    if is_forest(g):
        return _forest_matching_size(g)
    return _brute_force_matching_size(g)


def _forest_matching_size(g: Graph) -> int:
    deg = [len(a) for a in g.adj]
    alive = [True] * g.n
    leaves = deque(v for v in range(g.n) if deg[v] == 1)
    size = 0
    while leaves:
        leaf = leaves.popleft()
        if not alive[leaf] or deg[leaf] != 1:
            continue
        mate = next(w for w in g.adj[leaf] if alive[w])
        size += 1
        for x in (leaf, mate):
            alive[x] = False
            for w in g.adj[x]:
                if alive[w]:
                    deg[w] -= 1
                    if deg[w] == 1:
                        leaves.append(w)
    return size


def _brute_force_matching_size(g: Graph) -> int:
    edges = g.sorted_edges()
    best = 0

    def extend(start: int, used: int, size: int) -> None:
        nonlocal best
        best = max(best, size)
        if size + (g.n - bin(used).count("1")) // 2 <= best:
            return
        for i in range(start, len(edges)):
            u, v = edges[i]
            if not (used >> u) & 1 and not (used >> v) & 1:
                extend(i + 1, used | (1 << u) | (1 << v), size + 1)

    extend(0, 0, 0)
    return best


# -- canonical codes for unlabeled trees ------------------------------------


@dataclass(frozen=True, order=True)
class TreeCode:
    """Canonical level sequence of a tree rooted at its center."""

    code: bytes

    def hex(self) -> str:
        return self.code.hex()

    def levels(self) -> tuple[int, ...]:
        return tuple(self.code)


def tree_centers(t: Graph) -> list[int]:
    if t.n <= 2:
        return list(range(t.n))
    deg = [len(a) for a in t.adj]
    layer = [v for v in range(t.n) if deg[v] == 1]
    remaining = t.n
    while remaining > 2:
        remaining -= len(layer)
        nxt = []
        for leaf in layer:
            for w in t.adj[leaf]:
                deg[w] -= 1
                if deg[w] == 1:
                    nxt.append(w)
        layer = nxt
    return sorted(layer)


def rooted_level_sequence(t: Graph, root: int) -> tuple[int, ...]:
    """Canonical level sequence of t rooted at root (children in decreasing order)."""
    parent = [-1] * t.n
    order = [root]
    parent[root] = root
    for x in order:
        for y in t.adj[x]:
            if parent[y] == -1:
                parent[y] = x
                order.append(y)
    # subtree sequences with relative depths, built bottom-up
    seq: list[tuple[int, ...]] = [()] * t.n
    for x in reversed(order):
        kids = sorted((seq[y] for y in t.adj[x] if parent[y] == x and y != x), reverse=True)
        body: list[int] = [0]
        for k in kids:
            body.extend(d + 1 for d in k)
        seq[x] = tuple(body)
    return seq[root]


def canonical_code(t: Graph) -> TreeCode:
    if not is_tree(t):
        raise GraphError("canonical_code requires a tree")
    best = max(rooted_level_sequence(t, c) for c in tree_centers(t))
    return TreeCode(bytes(best))


def tree_from_level_sequence(levels: Iterable[int]) -> Graph:
    """Rebuild a rooted tree from a level sequence (root at depth 0)."""
    levels = list(levels)
    edges = []
    stack: list[int] = []
    for v, d in enumerate(levels):
        del stack[d:]
        if d > 0:
            edges.append((stack[-1], v))
        stack.append(v)
    return graph_from_edges(len(levels), edges)


# -- graph6 and edge-list codecs ----------------------------------------------

GRAPH6_HEADER = ">>graph6<<"


def encode_graph6(g: Graph) -> str:
    if g.n > 62:
        raise GraphError("graph6 encoding here supports n <= 62")
    bits = [1 if (i, j) in g.edges else 0 for j in range(1, g.n) for i in range(j)]
    bits.extend([0] * (-len(bits) % 6))
    out = [chr(63 + g.n)]
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k : k + 6]:
            val = (val << 1) | b
        out.append(chr(63 + val))
    return "".join(out)


def decode_graph6(text: str) -> Graph:
    """Parse one graph6 line; errors report the byte offset of the problem."""
    s = text.strip()
    if s.startswith(GRAPH6_HEADER):
        s = s[len(GRAPH6_HEADER) :]
    if not s:
        raise GraphError("empty graph6 string")
    for i, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise GraphError(f"graph6 byte {i}: character {ch!r} outside the printable range 63..126")
    n = ord(s[0]) - 63
    if n == 63:
        raise GraphError("graph6 byte 0: multi-byte size headers (n > 62) are not supported")
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    if len(s) - 1 != nbytes:
        raise GraphError(
            f"graph6 byte {min(len(s), 1 + nbytes)}: expected {nbytes} data bytes for n={n}, got {len(s) - 1}"
        )
    bits = []
    for ch in s[1:]:
        val = ord(ch) - 63
        bits.extend((val >> (5 - k)) & 1 for k in range(6))
    if any(bits[nbits:]):
        raise GraphError(f"graph6 byte {len(s) - 1}: nonzero padding bits")
    edges = []
    pos = 0
    for j in range(1, n):
        for i in range(j):
            if bits[pos]:
                edges.append((i, j))
            pos += 1
    return Graph(n, frozenset(edges))


def parse_edge_list(text: str) -> Graph:
    """Parse the edge-list format: first line "n", then one "u v" per line.

    Blank lines and lines starting with '#' are ignored.
    """
    lines = [(no, ln.strip()) for no, ln in enumerate(text.splitlines(), 1)]
    lines = [(no, ln) for no, ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise GraphError("edge list is empty (missing vertex-count header)")
    no, head = lines[0]
    try:
        n = int(head)
    except ValueError:
        raise GraphError(f"line {no}: expected vertex count, got {head!r}") from None
    pairs = []
    for no, ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise GraphError(f"line {no}: expected 'u v', got {ln!r}")
        try:
            pairs.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise GraphError(f"line {no}: non-integer vertex in {ln!r}") from None
    return graph_from_edges(n, pairs)


def format_edge_list(g: Graph) -> str:
    return "\n".join([str(g.n)] + [f"{u} {v}" for u, v in g.sorted_edges()]) + "\n"


def parse_graph_text(text: str) -> Graph:
    """Accept either a single graph6 line or the edge-list format."""
    body = text.strip()
    lines = [ln.strip() for ln in body.splitlines()]
    first = next((ln for ln in lines if ln and not ln.startswith("#")), "")
    if first.lstrip("-").isdigit():
        return parse_edge_list(text)
    return decode_graph6(body)
