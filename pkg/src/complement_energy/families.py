"""Named extremal trees: paths, stars, T_{n,2}, T^1_{n,2} and T_n^p.

Labeling is fixed: the hub is vertex 0, its first leaves come next, and
attached path vertices follow in increasing order. The same spec always
yields the same graph6 string.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .graph import Graph, graph_from_edges, path_graph, star_graph


class Family(str, Enum):
    PATH = "path"
    STAR = "star"
    TN2 = "t_n_2"
    TN2_1 = "t_n_2_1"
    TNP = "t_n_p"


class FamilyError(ValueError):
    pass


@dataclass(frozen=True)
class FamilySpec:
    family: Family
    n: int
    p: int | None = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "family", Family(self.family))
        fam, n, p = self.family, self.n, self.p
        if fam in (Family.PATH, Family.STAR) and n < 1:
            raise FamilyError(f"{fam.value} needs n >= 1, got n={n}")
        if fam is Family.TN2 and n < 4:
            raise FamilyError(f"t_n_2 needs n >= 4, got n={n}")
        if fam is Family.TN2_1 and n < 6:
            raise FamilyError(f"t_n_2_1 needs n >= 6, got n={n}")
        if fam is Family.TNP:
            if p is None:
                raise FamilyError("t_n_p needs the parameter p")
            if p < 1:
                raise FamilyError(f"t_n_p needs p >= 1, got p={p}")
            if p > n // 2:
                raise FamilyError(f"t_n_p needs p <= floor(n/2) = {n // 2}, got p={p}")
        elif p is not None:
            raise FamilyError(f"{fam.value} takes no parameter p")


def _spider(legs: list[int]) -> Graph:
    """Hub 0 with pendant paths of the given lengths, labeled leg by leg."""
    edges = []
    nxt = 1
    for length in legs:
        prev = 0
        for _ in range(length):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    return graph_from_edges(nxt, edges)


def build_family(spec: FamilySpec) -> Graph:
    fam, n = spec.family, spec.n
    if fam is Family.PATH:
        return path_graph(n)
    if fam is Family.STAR:
        return star_graph(n)
    if fam is Family.TN2:
        # K_{1,3} with a path P_{n-3} grown from one leaf
        return _spider([1, 1, n - 3])
    if fam is Family.TN2_1:
        # K_{1,3} with P_2 and P_{n-4} grown from two different leaves
        return _spider([1, 2, n - 4])
    # star K_{1,n-p} with a pendant edge on p-1 of its leaves
    p = spec.p
    leaves = n - p
    edges = [(0, i) for i in range(1, leaves + 1)]
    edges += [(i, leaves + i) for i in range(1, p)]
    return graph_from_edges(n, edges)


def family(name: str, n: int, p: int | None = None) -> Graph:
    return build_family(FamilySpec(Family(name), n, p))
