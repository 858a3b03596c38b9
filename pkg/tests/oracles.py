"""Slow, obviously-correct reference implementations used only by tests."""

from __future__ import annotations

import heapq
import itertools

import numpy as np


def brute_matching_counts(n: int, edges) -> list[int]:
    """Count k-matchings by listing every set of pairwise disjoint edges."""
    edges = sorted(tuple(sorted(e)) for e in edges)
    counts = [0] * (n // 2 + 1)

    def grow(start: int, used: set[int], k: int) -> None:
        counts[k] += 1
        for i in range(start, len(edges)):
            a, b = edges[i]
            if a not in used and b not in used:
                used |= {a, b}
                grow(i + 1, used, k + 1)
                used -= {a, b}

    grow(0, set(), 0)
    return counts


def complement_edges(n: int, edges) -> list[tuple[int, int]]:
    have = {tuple(sorted(e)) for e in edges}
    return [(a, b) for a, b in itertools.combinations(range(n), 2) if (a, b) not in have]


def brute_nu(n: int, edges) -> int:
    counts = brute_matching_counts(n, edges)
    return max(k for k, c in enumerate(counts) if c)


def numpy_energy(n: int, counts) -> float:
    """Sum of |roots| of the matching polynomial via a companion-matrix solve."""
    coeffs = [0] * (n + 1)  # descending powers
    for k, c in enumerate(counts):
        coeffs[2 * k] = (-1) ** k * c
    return float(np.sum(np.abs(np.roots(coeffs))))


def isomorphic(n: int, e1, e2) -> bool:
    s1 = {tuple(sorted(e)) for e in e1}
    s2 = {tuple(sorted(e)) for e in e2}
    if len(s1) != len(s2):
        return False
    for perm in itertools.permutations(range(n)):
        if {tuple(sorted((perm[a], perm[b]))) for a, b in s1} == s2:
            return True
    return False


def prufer_tree(seq, n: int) -> list[tuple[int, int]]:
    if n == 1:
        return []
    if n == 2:
        return [(0, 1)]
    deg = [1] * n
    for x in seq:
        deg[x] += 1
    leaves = [i for i in range(n) if deg[i] == 1]
    heapq.heapify(leaves)
    edges = []
    for x in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, x))
        deg[x] -= 1
        if deg[x] == 1:
            heapq.heappush(leaves, x)
    edges.append((heapq.heappop(leaves), heapq.heappop(leaves)))
    return edges


def labeled_trees(n: int):
    """Every labeled tree on n vertices, n^(n-2) of them."""
    if n <= 2:
        yield prufer_tree((), n)
        return
    for seq in itertools.product(range(n), repeat=n - 2):
        yield prufer_tree(seq, n)


def ahu_canon(n: int, edges) -> str:
    """Parenthesis canonical form rooted at the center(s)."""
    if n == 1:
        return "()"
    adj = [[] for _ in range(n)]
    for a, b in edges:
        adj[a].append(b)
        adj[b].append(a)
    deg = [len(x) for x in adj]
    layer = [v for v in range(n) if deg[v] <= 1]
    left = n
    while left > 2:
        left -= len(layer)
        nxt = []
        for v in layer:
            for w in adj[v]:
                deg[w] -= 1
                if deg[w] == 1:
                    nxt.append(w)
        layer = nxt

    def enc(v: int, parent: int) -> str:
        return "(" + "".join(sorted(enc(w, v) for w in adj[v] if w != parent)) + ")"

    return min(enc(c, -1) for c in layer)

