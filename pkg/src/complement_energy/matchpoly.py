"""Matching counts m(G, k), matching polynomials and the Hosoya index.

All counts are Python ints, so nothing overflows on dense graphs.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Sequence

from .graph import Graph, components, is_forest


@dataclass(frozen=True)
class MatchingVector:
    """Counts m(G, 0..n//2) for an n-vertex graph, trailing zeros included."""

    n: int
    counts: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.counts) != self.n // 2 + 1:
            raise ValueError(f"matching vector for n={self.n} needs {self.n // 2 + 1} entries, got {len(self.counts)}")
        if self.counts[0] != 1:
            raise ValueError("m(G, 0) must be 1")
        if any(c < 0 for c in self.counts):
            raise ValueError("matching counts must be nonnegative")

    @classmethod
    def from_counts(cls, n: int, counts: Sequence[int]) -> MatchingVector:
        """Pad or trim (zeros only) to the canonical length n//2 + 1."""
        size = n // 2 + 1
        vals = list(counts)
        if any(vals[size:]):
            raise ValueError(f"nonzero count beyond index {n // 2} for n={n}")
        vals = vals[:size] + [0] * (size - len(vals))
        return cls(n, tuple(vals))

    @property
    def max_k(self) -> int:
        """Largest k with a nonzero count (the matching number)."""
        return max(k for k, c in enumerate(self.counts) if c)

    def __getitem__(self, k: int) -> int:
        return self.counts[k] if 0 <= k < len(self.counts) else 0


@dataclass(frozen=True)
class MatchingPolynomial:
    """mu(G, x) with coeffs[j] the coefficient of x**j."""

    n: int
    coeffs: tuple[int, ...]

    def __str__(self) -> str:
        terms = []
        for j in range(self.n, -1, -1):
            c = self.coeffs[j]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if j == 0:
                body = str(mag)
            else:
                xp = "x" if j == 1 else f"x^{j}"
                body = xp if mag == 1 else f"{mag}{xp}"
            terms.append((sign, body))
        if not terms:
            return "0"
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out


def _conv(a: Sequence[int], b: Sequence[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _add_into(acc: list[int], src: Sequence[int], shift: int = 0) -> None:
    need = len(src) + shift
    if len(acc) < need:
        acc.extend([0] * (need - len(acc)))
    for i, x in enumerate(src):
        acc[i + shift] += x


def _tree_counts(g: Graph, comp: list[int]) -> list[int]:
    """Rooted DP over one tree component: (root free, root matched) count lists."""
    root = comp[0]
    parent = {root: -1}
    order = [root]
    for x in order:
        for y in g.adj[x]:
            if y not in parent:
                parent[y] = x
                order.append(y)
    free: dict[int, list[int]] = {}
    matched: dict[int, list[int]] = {}
    for x in reversed(order):
        a = [1]
        b: list[int] = []
        for c in g.adj[x]:
            if parent.get(c) != x:
                continue
            total = list(free[c])
            _add_into(total, matched[c])
            nb = _conv(b, total) if b else []
            _add_into(nb, _conv(a, free[c]), shift=1)
            a = _conv(a, total)
            b = nb
        free[x], matched[x] = a, b
    out = list(free[root])
    _add_into(out, matched[root])
    return out


def _vertex_recursion_counts(g: Graph, comp: list[int]) -> list[int]:
    """m(G[S]) = m(G[S-u]) + sum_{v~u} x * m(G[S-u-v]), memoized on vertex bitmasks."""
    nbr_mask = [0] * g.n
    for u, v in g.edges:
        nbr_mask[u] |= 1 << v
        nbr_mask[v] |= 1 << u
    memo: dict[int, list[int]] = {0: [1]}

    def solve(mask: int) -> list[int]:
        hit = memo.get(mask)
        if hit is not None:
            return hit
        u = (mask & -mask).bit_length() - 1
        rest = mask & ~(1 << u)
        out = list(solve(rest))
        nb = nbr_mask[u] & rest
        while nb:
            low = nb & -nb
            _add_into(out, solve(rest & ~low), shift=1)
            nb ^= low
        memo[mask] = out
        return out

    mask = 0
    for v in comp:
        mask |= 1 << v
    return solve(mask)


def matching_counts(g: Graph) -> MatchingVector:
    """Exact m(G, k) for all k.

    Forests go through a rooted dynamic program per component; any other
    component uses the vertex-deletion recursion over induced subgraphs,
    which is exponential and meant for graphs up to roughly 20 vertices.
    Components are combined by convolution.
    """
    total = [1]
    forest = is_forest(g)
    for comp in components(g):
        if len(comp) == 1:
            continue
        part = _tree_counts(g, comp) if forest else _vertex_recursion_counts(g, comp)
        total = _conv(total, part)
    return MatchingVector.from_counts(g.n, total)


def vertex_recursion_counts(g: Graph) -> MatchingVector:
    """Vertex recursion mu(G) = x mu(G-u) - sum_v mu(G-u-v), for any graph."""
    total = [1]
    for comp in components(g):
        if len(comp) > 1:
            total = _conv(total, _vertex_recursion_counts(g, comp))
    return MatchingVector.from_counts(g.n, total)


def edge_recursion_counts(g: Graph) -> MatchingVector:
    """Edge recursion mu(G) = mu(G - e) - mu(G - u - v), memoized on edge sets."""
    memo: dict[frozenset[tuple[int, int]], list[int]] = {frozenset(): [1]}

    def solve(edges: frozenset[tuple[int, int]]) -> list[int]:
        hit = memo.get(edges)
        if hit is not None:
            return hit
        e = min(edges)
        u, v = e
        out = list(solve(edges - {e}))
        rest = frozenset(f for f in edges if u not in f and v not in f)
        _add_into(out, solve(rest), shift=1)
        memo[edges] = out
        return out

    return MatchingVector.from_counts(g.n, solve(frozenset(g.edges)))


def disjoint_union_counts(a: MatchingVector, b: MatchingVector) -> MatchingVector:
    return MatchingVector.from_counts(a.n + b.n, _conv(a.counts, b.counts))


def matching_polynomial(v: MatchingVector) -> MatchingPolynomial:
    coeffs = [0] * (v.n + 1)
    for k, c in enumerate(v.counts):
        coeffs[v.n - 2 * k] = -c if k % 2 else c
    return MatchingPolynomial(v.n, tuple(coeffs))


def hosoya_index(v: MatchingVector) -> int:
    return sum(v.counts)


def path_counts(n: int) -> MatchingVector:
    """m(P_n, k) = C(n - k, k); P_0 is the empty graph."""
    if n < 0:
        raise ValueError("path order must be nonnegative")
    return MatchingVector(n, tuple(comb(n - k, k) for k in range(n // 2 + 1)))

