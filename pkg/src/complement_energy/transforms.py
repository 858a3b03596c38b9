"""The six tree transformations F1..F6 and checks of their complement dominance.

Each transformation is explicit graph surgery producing a (before, after)
pair on the same number of vertices. Geometry:

F1  T0 with two pendant paths P_m, P_n at u  ->  T0 with one pendant path P_{m+n} at u
F2  spider with legs (m, s, n), s >= m >= 2  ->  spider with legs (m+s-1, 1, n)
F3  spider with legs (m, n, 1), m >= n >= 2  ->  spider with legs (m+1, n-1, 1)
F4  T1' + T2' joined by the edge uv  ->  u and v identified, plus a pendant vertex w there
F5  T0 with u joined to the centre c of a star K_{1,r}
        ->  T0 with r-1 leaves at u and a pendant path u-c-l
F6  T0 with u joined to c, where c carries s leaves and t pendant P_2's
        ->  T0 with s-1 leaves and t+1 pendant P_2's at u

Each pair satisfies an exact identity expressing
m(co-before, r) - m(co-after, r) as a signed sum of complement counts of
explicit forests; `check_difference_identity` evaluates both sides.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Mapping

import numpy as np

from .complement import lovasz_transform
from .energy import QuasiOrderResult, Relation, quasi_compare
from .graph import (
    Graph,
    canonical_code,
    decode_graph6,
    delete_vertices,
    disjoint_union,
    edge_independence_number,
    empty_graph,
    encode_graph6,
    graph_from_edges,
    is_tree,
    path_graph,
    pendant_count,
)
from .matchpoly import MatchingVector, matching_counts


class Kind(str, Enum):
    F1 = "F1"
    F2 = "F2"
    F3 = "F3"
    F4 = "F4"
    F5 = "F5"
    F6 = "F6"


class TransformError(ValueError):
    pass


_PARAMS = {
    Kind.F1: ("m", "n"),
    Kind.F2: ("m", "n", "s"),
    Kind.F3: ("m", "n"),
    Kind.F4: (),
    Kind.F5: ("r",),
    Kind.F6: ("s", "t"),
}


@dataclass(frozen=True, eq=False)
class TransformSpec:
    """Parameters of one transformation instance.

    `base` is T0 (F1, F5, F6) or T1' (F4) with marked vertex `u`;
    `other` is T2' (F4 only) with marked vertex `v`.
    """

    kind: Kind
    base: Graph | None = None
    u: int | None = None
    other: Graph | None = None
    v: int | None = None
    params: Mapping[str, int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        object.__setattr__(self, "kind", Kind(self.kind))
        object.__setattr__(self, "params", dict(self.params))

    def __getitem__(self, name: str) -> int:
        try:
            return self.params[name]
        except KeyError:
            raise TransformError(f"{self.kind.value} needs parameter {name!r}") from None

    def to_json(self) -> dict[str, Any]:
        out: dict[str, Any] = {"kind": self.kind.value, "params": dict(self.params)}
        if self.base is not None:
            out["base"] = encode_graph6(self.base)
            out["u"] = self.u
        if self.other is not None:
            out["other"] = encode_graph6(self.other)
            out["v"] = self.v
        return out

    @classmethod
    def from_json(cls, doc: Mapping[str, Any]) -> TransformSpec:
        base = decode_graph6(doc["base"]) if doc.get("base") is not None else None
        other = decode_graph6(doc["other"]) if doc.get("other") is not None else None
        return cls(Kind(doc["kind"]), base, doc.get("u"), other, doc.get("v"), doc.get("params", {}))


@dataclass(frozen=True, eq=False)
class TransformResult:
    before: Graph
    after: Graph
    spec: TransformSpec

    @property
    def kind(self) -> Kind:
        return self.spec.kind


@dataclass(frozen=True)
class IdentityReport:
    holds: bool
    lhs: tuple[int, ...]
    rhs: tuple[int, ...]
    first_failure: int | None = None

    @property
    def residuals(self) -> tuple[int, ...]:
        return tuple(a - b for a, b in zip(self.lhs, self.rhs))


# -- validation ----------------------------------------------------------------


def _require_tree(g: Graph | None, what: str, min_order: int) -> Graph:
    if g is None:
        raise TransformError(f"{what} is required")
    if not is_tree(g):
        raise TransformError(f"{what} must be a tree")
    if g.n < min_order:
        raise TransformError(f"{what} needs at least {min_order} vertices, got {g.n}")
    return g


def _require_vertex(g: Graph, x: int | None, what: str) -> int:
    if x is None or not 0 <= x < g.n:
        raise TransformError(f"marked vertex {what}={x} is not a vertex of a {g.n}-vertex tree")
    return x


def validate_spec(spec: TransformSpec) -> None:
    k = spec.kind
    for name in _PARAMS[k]:
        spec[name]
    if k is Kind.F1:
        t0 = _require_tree(spec.base, "T0", 2)
        _require_vertex(t0, spec.u, "u")
        if spec["m"] < 1 or spec["n"] < 1:
            raise TransformError("F1 requires m >= 1 and n >= 1")
    elif k is Kind.F2:
        m, n, s = spec["m"], spec["n"], spec["s"]
        if not (s >= m >= 2 and n >= 1):
            raise TransformError(f"F2 requires s >= m >= 2 and n >= 1, got m={m}, n={n}, s={s}")
    elif k is Kind.F3:
        m, n = spec["m"], spec["n"]
        if not m >= n >= 2:
            raise TransformError(f"F3 requires m >= n >= 2, got m={m}, n={n}")
    elif k is Kind.F4:
        t1 = _require_tree(spec.base, "T1'", 2)
        t2 = _require_tree(spec.other, "T2'", 2)
        _require_vertex(t1, spec.u, "u")
        _require_vertex(t2, spec.v, "v")
    elif k is Kind.F5:
        t0 = _require_tree(spec.base, "T0", 2)
        _require_vertex(t0, spec.u, "u")
        if spec["r"] < 2:
            raise TransformError(f"F5 requires r >= 2, got r={spec['r']}")
    elif k is Kind.F6:
        t0 = _require_tree(spec.base, "T0", 2)
        _require_vertex(t0, spec.u, "u")
        if spec["s"] < 1 or spec["t"] < 1:
            raise TransformError(f"F6 requires s >= 1 and t >= 1, got s={spec['s']}, t={spec['t']}")


def _require_extremal_pendants(t: Graph, name: str) -> None:
    nu = edge_independence_number(t)
    leaves = pendant_count(t)
    if leaves != t.n - nu:
        raise TransformError(
            f"{name} must have exactly n - p pendant vertices (n={t.n}, p={nu}), but has {leaves}"
        )


# -- constructions ---------------------------------------------------------------


def _spider(legs: list[int]) -> Graph:
    edges = []
    nxt = 1
    for length in legs:
        prev = 0
        for _ in range(length):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    return graph_from_edges(nxt, edges)


def _hang_path(edges: list[tuple[int, int]], at: int, first: int, length: int) -> int:
    """Append a path of `length` new vertices (labels first, first+1, ...) hanging from `at`."""
    prev = at
    for i in range(length):
        edges.append((prev, first + i))
        prev = first + i
    return first + length


def _build_f1(spec: TransformSpec) -> tuple[Graph, Graph]:
    t0, u, m, n = spec.base, spec.u, spec["m"], spec["n"]
    k = t0.n
    total = k + m + n
    before = list(t0.edges)
    nxt = _hang_path(before, u, k, m)
    _hang_path(before, u, nxt, n)
    after = list(t0.edges)
    _hang_path(after, u, k, m + n)
    return graph_from_edges(total, before), graph_from_edges(total, after)


def _build_f4(spec: TransformSpec) -> tuple[Graph, Graph]:
    t1, t2, u, v = spec.base, spec.other, spec.u, spec.v
    a, b = t1.n, t2.n
    before = list(t1.edges) + [(x + a, y + a) for x, y in t2.edges] + [(u, v + a)]
    # T8: T2' - v relabeled to a..a+b-2, v merged into u, pendant w = a+b-1
    index = {}
    for x in range(b):
        if x != v:
            index[x] = a + len(index)
    index[v] = u
    after = list(t1.edges) + [(index[x], index[y]) for x, y in t2.edges] + [(u, a + b - 1)]
    return graph_from_edges(a + b, before), graph_from_edges(a + b, after)


def _build_f5(spec: TransformSpec) -> tuple[Graph, Graph]:
    t0, u, r = spec.base, spec.u, spec["r"]
    k = t0.n
    c = k
    total = k + 1 + r
    before = list(t0.edges) + [(u, c)] + [(c, c + 1 + i) for i in range(r)]
    after = list(t0.edges) + [(u, c), (c, c + 1)] + [(u, c + 2 + i) for i in range(r - 1)]
    return graph_from_edges(total, before), graph_from_edges(total, after)


def _build_f6(spec: TransformSpec) -> tuple[Graph, Graph]:
    t0, u, s, t = spec.base, spec.u, spec["s"], spec["t"]
    k = t0.n
    c = k
    leaves = [c + 1 + i for i in range(s)]
    pairs = [(c + 1 + s + 2 * j, c + 2 + s + 2 * j) for j in range(t)]
    total = k + 1 + s + 2 * t
    before = list(t0.edges) + [(u, c)] + [(c, x) for x in leaves]
    before += [e for x, y in pairs for e in ((c, x), (x, y))]
    # c keeps one leaf and becomes a pendant P_2 at u; everything else moves to u
    after = list(t0.edges) + [(u, c), (c, leaves[0])] + [(u, x) for x in leaves[1:]]
    after += [e for x, y in pairs for e in ((u, x), (x, y))]
    return graph_from_edges(total, before), graph_from_edges(total, after)


def apply_transform(spec: TransformSpec) -> TransformResult:
    validate_spec(spec)
    k = spec.kind
    if k is Kind.F1:
        before, after = _build_f1(spec)
    elif k is Kind.F2:
        m, n, s = spec["m"], spec["n"], spec["s"]
        before, after = _spider([m, s, n]), _spider([m + s - 1, 1, n])
    elif k is Kind.F3:
        m, n = spec["m"], spec["n"]
        before, after = _spider([m, n, 1]), _spider([m + 1, n - 1, 1])
    elif k is Kind.F4:
        before, after = _build_f4(spec)
    elif k is Kind.F5:
        before, after = _build_f5(spec)
        _require_extremal_pendants(before, "the F5 input tree")
    else:
        before, after = _build_f6(spec)
        _require_extremal_pendants(before, "the F6 input tree")
    assert before.n == after.n and is_tree(before) and is_tree(after), "transformation broke tree structure"
    return TransformResult(before, after, spec)


# -- dominance and identities ------------------------------------------------------


def predicts_after_greater(kind: Kind) -> bool:
    """F1-F3 raise the complement in the quasi-order; F4-F6 lower it."""
    return kind in (Kind.F1, Kind.F2, Kind.F3)


def strictness_index(spec: TransformSpec) -> int:
    """First index where the complement counts are expected to differ."""
    if spec.kind is Kind.F2:
        return 3
    if spec.kind is Kind.F3:
        return spec["n"] + 1
    return 2


def complement_counts(g: Graph) -> MatchingVector:
    return lovasz_transform(matching_counts(g))


def check_dominance(res: TransformResult) -> QuasiOrderResult:
    """Quasi-order of the predicted-larger complement against the predicted-smaller one.

    The associated theorem predicts StrictlyGreater (Equal only when the
    pair is isomorphic).
    """
    before, after = complement_counts(res.before), complement_counts(res.after)
    if predicts_after_greater(res.kind):
        return quasi_compare(after, before)
    return quasi_compare(before, after)


def dominance_holds(res: TransformResult, qo: QuasiOrderResult | None = None) -> bool:
    qo = qo or check_dominance(res)
    if canonical_code(res.before) == canonical_code(res.after):
        return qo.relation is Relation.EQUAL
    return qo.relation is Relation.STRICTLY_GREATER and qo.witnesses[0] == strictness_index(res.spec)


def _pendant_neighbor(t0: Graph, u: int) -> int:
    for w in t0.adj[u]:
        if len(t0.adj[w]) == 1:
            return w
    raise TransformError(f"u={u} has no pendant neighbour in T0")


def _copies(g: Graph, count: int) -> list[Graph]:
    return [g] * count


def identity_terms(spec: TransformSpec) -> list[tuple[int, Graph, int]]:
    """(coefficient, forest F, shift d) with LHS(r) = sum coefficient * m(co-F, r - d)."""
    k = spec.kind
    if k is Kind.F1:
        t0, u, m, n = spec.base, spec.u, spec["m"], spec["n"]
        return [
            (-1, disjoint_union(delete_vertices(t0, [u, v]), path_graph(m - 1), path_graph(n - 1)), 2)
            for v in t0.adj[u]
        ]
    if k is Kind.F2:
        m, n, s = spec["m"], spec["n"], spec["s"]
        return [(-1, disjoint_union(path_graph(m - 2), path_graph(n - 1), path_graph(s - 2)), 3)]
    if k is Kind.F3:
        m, n = spec["m"], spec["n"]
        return [(-1, path_graph(m - n), n + 1)]
    if k is Kind.F4:
        t1, t2, u, v = spec.base, spec.other, spec.u, spec.v
        return [
            (1, disjoint_union(delete_vertices(t1, [u, ui]), delete_vertices(t2, [v, vj])), 2)
            for ui in t1.adj[u]
            for vj in t2.adj[v]
        ]
    t0, u = spec.base, spec.u
    vp = _pendant_neighbor(t0, u)
    others = [v for v in t0.adj[u] if v != vp]
    p1, p2 = path_graph(1), path_graph(2)
    if k is Kind.F5:
        r = spec["r"]
        return [(r - 1, disjoint_union(*_copies(p1, r - 1), delete_vertices(t0, [u, v])), 2) for v in others]
    s, t = spec["s"], spec["t"]
    terms = []
    for v in others:
        rest = delete_vertices(t0, [u, v])
        terms.append((s + t - 1, disjoint_union(*_copies(p1, s - 1), *_copies(p2, t), rest), 2))
        terms.append((t, disjoint_union(*_copies(p1, s - 1), *_copies(p2, t - 1), rest), 3))
    return terms


def check_difference_identity(res: TransformResult) -> IdentityReport:
    """Compare m(co-before, r) - m(co-after, r) with the forest expansion, exactly."""
    lhs_b = complement_counts(res.before)
    lhs_a = complement_counts(res.after)
    size = res.before.n // 2 + 1
    lhs = [lhs_b[r] - lhs_a[r] for r in range(size)]
    rhs = [0] * size
    for coef, forest, shift in identity_terms(res.spec):
        co = complement_counts(forest) if forest.n else MatchingVector(0, (1,))
        for r in range(shift, size):
            rhs[r] += coef * co[r - shift]
    bad = next((r for r in range(size) if lhs[r] != rhs[r]), None)
    return IdentityReport(bad is None, tuple(lhs), tuple(rhs), bad)


# -- F4 on an existing tree ---------------------------------------------------------


def f4_split(tree: Graph, a: int, b: int) -> TransformSpec:
    """F4 spec whose `before` is `tree` cut at edge ab (both sides need > 1 vertex)."""
    if (min(a, b), max(a, b)) not in tree.edges:
        raise TransformError(f"({a}, {b}) is not an edge")
    cut = Graph(tree.n, tree.edges - {(min(a, b), max(a, b))})
    side = {a}
    stack = [a]
    while stack:
        x = stack.pop()
        for y in cut.adj[x]:
            if y not in side:
                side.add(y)
                stack.append(y)
    left = sorted(side)
    right = [x for x in range(tree.n) if x not in side]
    if len(left) < 2 or len(right) < 2:
        raise TransformError("F4 needs both sides of the cut edge to have more than one vertex")
    t1 = delete_vertices(tree, right)
    t2 = delete_vertices(tree, left)
    return TransformSpec(Kind.F4, t1, left.index(a), t2, right.index(b))


# -- random instances ---------------------------------------------------------------


def random_tree(n: int, rng: np.random.Generator) -> Graph:
    """Uniform labeled tree via a random Pruefer sequence."""
    if n <= 2:
        return path_graph(n) if n else empty_graph(0)
    seq = [int(x) for x in rng.integers(0, n, size=n - 2)]
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    edges = []
    for x in seq:
        leaf = min(i for i in range(n) if degree[i] == 1)
        edges.append((leaf, x))
        degree[leaf] -= 1
        degree[x] -= 1
    a, b = [i for i in range(n) if degree[i] == 1]
    edges.append((a, b))
    return graph_from_edges(n, edges)


def _rand(rng: np.random.Generator, lo: int, hi: int) -> int:
    return int(rng.integers(lo, hi + 1))


def _random_extremal_base(rng: np.random.Generator, max_size: int) -> tuple[Graph, int]:
    """T0 in which every internal vertex has a leaf, plus a marked internal vertex u."""
    core = _rand(rng, 1, max(1, max_size // 2))
    skeleton = random_tree(core, rng)
    edges = list(skeleton.edges)
    nxt = core
    budget = max_size - 2 * core
    for x in range(core):
        extra = _rand(rng, 0, budget) if budget > 0 else 0
        budget -= extra
        for _ in range(1 + extra):
            edges.append((x, nxt))
            nxt += 1
    return graph_from_edges(nxt, edges), _rand(rng, 0, core - 1)


def random_spec(kind: Kind, rng: np.random.Generator, max_order: int = 18, max_base: int = 10) -> TransformSpec:
    kind = Kind(kind)
    if kind is Kind.F1:
        k = _rand(rng, 2, min(max_base, max_order - 2))
        m = _rand(rng, 1, max_order - k - 1)
        n = _rand(rng, 1, max_order - k - m)
        t0 = random_tree(k, rng)
        return TransformSpec(kind, t0, _rand(rng, 0, k - 1), params={"m": m, "n": n})
    if kind is Kind.F2:
        choices = [
            (m, n, s)
            for m in range(2, max_order)
            for s in range(m, max_order)
            for n in range(1, max_order)
            if m + n + s + 1 <= max_order
        ]
        m, n, s = choices[_rand(rng, 0, len(choices) - 1)]
        return TransformSpec(kind, params={"m": m, "n": n, "s": s})
    if kind is Kind.F3:
        choices = [(m, n) for n in range(2, max_order) for m in range(n, max_order) if m + n + 2 <= max_order]
        m, n = choices[_rand(rng, 0, len(choices) - 1)]
        return TransformSpec(kind, params={"m": m, "n": n})
    if kind is Kind.F4:
        a = _rand(rng, 2, min(max_base, max_order - 2))
        b = _rand(rng, 2, min(max_base, max_order - a))
        t1, t2 = random_tree(a, rng), random_tree(b, rng)
        return TransformSpec(kind, t1, _rand(rng, 0, a - 1), t2, _rand(rng, 0, b - 1))
    if kind is Kind.F5:
        t0, u = _random_extremal_base(rng, min(max_base, max_order - 3))
        r = _rand(rng, 2, max_order - t0.n - 1)
        return TransformSpec(kind, t0, u, params={"r": r})
    t0, u = _random_extremal_base(rng, min(max_base, max_order - 4))
    t = _rand(rng, 1, (max_order - t0.n - 2) // 2)
    s = _rand(rng, 1, max_order - t0.n - 1 - 2 * t)
    return TransformSpec(kind, t0, u, params={"s": s, "t": t})
