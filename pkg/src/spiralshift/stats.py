"""Size, pairwise distance, weight, and content of cylinder configurations."""

from __future__ import annotations

from typing import NamedTuple

from .cylinder import Config, MultiIndex, Slot, slot_index


def size(x: Config) -> int:
    """Total level of a configuration; rises by one under every operator."""
    return sum(x.levels)


def distance(lower: Slot, upper: Slot, d: int) -> int:
    """Floor of the height gap between two slots, the strictly lower one first."""
    gap = slot_index(upper, d) - slot_index(lower, d)
    if gap <= 0:
        raise ValueError("distance requires the first slot strictly below the second")
    return gap // d


def weight(x: Config) -> int:
    """Sum of floored height gaps over all pairs of points of x."""
    d = x.d
    idx = sorted(slot_index(s, d) for s in x.slots())
    return sum((b - a) // d for k, b in enumerate(idx) for a in idx[:k])


def weight_by_seats(x: Config) -> int:
    """Weight as a double sum over ordered seat pairs.

    Each ordered pair of distinct seats contributes the floored height
    difference when positive.  Agrees with `weight` on every configuration;
    the equality is pinned by the test suite.
    """
    d = x.d
    marks = [n * d + i for i, n in enumerate(x.levels, start=1)]
    return sum(
        max(0, (marks[j] - marks[i]) // d)
        for i in range(d)
        for j in range(d)
        if i != j
    )


class ContentExponents(NamedTuple):
    """The exponent pair (size, weight) read off a configuration or index."""

    t_exp: int
    q_exp: int


def content(x: Config) -> ContentExponents:
    return ContentExponents(size(x), weight(x))


def multiindex_content(a: MultiIndex) -> ContentExponents:
    """Content added by acting with a: rank j contributes (1, j - 1) per step."""
    return ContentExponents(
        sum(a.steps),
        sum((j - 1) * s for j, s in enumerate(a.steps, start=1)),
    )
