"""Complement matching counts from a graph's own counts (Lovasz's identity).

    m(co-G, r) = sum_{i=0..r} (-1)^i C(n-2i, 2r-2i) (2r-2i-1)!! m(G, i)

The identity is symmetric in G and its complement, so the same map sends
complement counts back to the original ones.
"""

from __future__ import annotations

from functools import lru_cache
from math import comb

from .matchpoly import MatchingVector


class NotRealizableError(ValueError):
    """The transform produced a negative count, so the input was not a matching vector."""


@lru_cache(maxsize=None)
def double_factorial(s: int) -> int:
    """s!! for s >= -1, with (-1)!! = 0!! = 1."""
    if s < -1:
        raise ValueError(f"double factorial is defined here for s >= -1, got {s}")
    out = 1
    for f in range(s, 1, -2):
        out *= f
    return out


@lru_cache(maxsize=None)
def _weight_table(n: int) -> tuple[tuple[int, ...], ...]:
    # weights[r][i] = (-1)^i C(n-2i, 2r-2i) (2r-2i-1)!!
    half = n // 2
    return tuple(
        tuple((-1) ** i * comb(n - 2 * i, 2 * (r - i)) * double_factorial(2 * (r - i) - 1) for i in range(r + 1))
        for r in range(half + 1)
    )


def lovasz_signed(n: int, counts: tuple[int, ...] | list[int]) -> list[int]:
    """Apply the alternating sum without any sign check."""
    weights = _weight_table(n)
    return [sum(w * c for w, c in zip(row, counts)) for row in weights]


def lovasz_transform(v: MatchingVector) -> MatchingVector:
    out = lovasz_signed(v.n, v.counts)
    for r, val in enumerate(out):
        if val < 0:
            raise NotRealizableError(
                f"input is not a realizable matching vector: complement count at r={r} is {val}"
            )
    return MatchingVector(v.n, tuple(out))
