"""Hirsch index and the fixed point of the interpolated citation curve.

Sorting a scientist's papers by citations and joining the points
``(t, c_t)`` by straight lines gives a decreasing curve whose fixed point
plays the same role as the Kolkata index does for the complementary Lorenz
curve: its integer part is the h-index.
"""

from __future__ import annotations

import math
import operator
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import EmptyInput, NegativeValue, NoFixedPointInRange

__all__ = ["CitationProfile", "hirsch_index", "citation_curve_fixed_point", "h_index_from_fixed_point"]


@dataclass(frozen=True)
class CitationProfile:
    counts: tuple[int, ...]

    def __post_init__(self):
        counts = []
        for i, c in enumerate(self.counts):
            try:
                c = operator.index(c)
            except TypeError:
                raise ValueError(f"citation count at index {i} is not an integer: {c!r}") from None
            if c < 0:
                raise NegativeValue(i, c)
            counts.append(c)
        if not counts:
            raise EmptyInput("no papers given")
        object.__setattr__(self, "counts", tuple(counts))

    @property
    def m(self) -> int:
        return len(self.counts)

    @property
    def ranked(self) -> list[int]:
        """Citation counts in nonincreasing order."""
        return sorted(self.counts, reverse=True)


def _profile(obj) -> CitationProfile:
    return obj if isinstance(obj, CitationProfile) else CitationProfile(tuple(obj))


def hirsch_index(profile: CitationProfile | Sequence[int]) -> int:
    """Largest ``h`` such that the ``h``-th most cited paper has ``>= h`` citations."""
    h = 0
    for rank, c in enumerate(_profile(profile).ranked, start=1):
        if c < rank:
            break
        h = rank
    return h


def _fixed_point_exact(ranked: list[int]) -> Fraction:
    m = len(ranked)
    if ranked[0] < 1 or ranked[-1] > m:
        raise NoFixedPointInRange(
            f"interpolated citation curve has no fixed point on [1, {m}] "
            f"(top={ranked[0]}, bottom={ranked[-1]})"
        )
    if m == 1:
        return Fraction(1)
    for t in range(1, m):
        above = ranked[t - 1] - t      # f(t) - t >= 0 on the way in
        below = ranked[t] - (t + 1)    # f(t+1) - (t+1)
        if above >= 0 >= below:
            if above == 0:
                return Fraction(t)
            return t + Fraction(above, above - below)
    return Fraction(m)


def citation_curve_fixed_point(profile: CitationProfile | Sequence[int]) -> float:
    """Fixed point ``h~`` of the piecewise-linear citation curve on ``[1, m]``.

    Raises
    ------
    NoFixedPointInRange
        When the top paper has no citations or every paper has more than
        ``m`` citations, so the curve never meets the diagonal.
    """
    return float(_fixed_point_exact(_profile(profile).ranked))


def h_index_from_fixed_point(profile: CitationProfile | Sequence[int]) -> int:
    """h-index obtained through the citation-curve fixed point.

    Handles the two boundary cases (no citations at all, every paper cited
    at least ``m`` times) directly and otherwise truncates the fixed point.
    """
    ranked = _profile(profile).ranked
    m = len(ranked)
    if ranked[0] == 0:
        return 0
    if ranked[-1] >= m:
        return m
    return math.floor(_fixed_point_exact(ranked))
