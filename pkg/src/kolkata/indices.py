"""Inequality indices: Kolkata k, normalized k, Gini, Pietra, disparity.

Every index accepts either a :class:`GroupedDistribution`, an
:class:`AnalyticDistribution` or a :class:`LorenzCurve` wrapping one of
them. Grouped data are handled with exact finite formulas; analytic
families use their closed forms where one exists and otherwise fall back to
exact piecewise computation or bisection.
"""

from __future__ import annotations

import enum
import math
from dataclasses import asdict, dataclass
from functools import singledispatch

import numpy as np
from numpy.polynomial import polynomial as P
from scipy import integrate

from . import _numeric
from .distributions import (
    AnalyticDistribution,
    CircleArc,
    Exponential,
    GroupedDistribution,
    Pareto,
    PiecewiseLorenz,
    PowerLawLorenz,
    TwoGroup,
    Uniform,
)
from .errors import DomainError, OrderingViolation
from .lorenz import LorenzCurve, lorenz_curve, median_to_mean

__all__ = [
    "IndexReport",
    "Coincidence",
    "kolkata",
    "kolkata_discrete",
    "kolkata_analytic",
    "kolkata_bisection",
    "normalized_k",
    "gini",
    "gini_discrete",
    "gini_analytic",
    "gini_integral",
    "pietra",
    "pietra_discrete",
    "pietra_analytic",
    "pietra_arg",
    "pietra_mean_deviation",
    "disparity",
    "report",
    "coincidence_check",
]

# |N(g) + M(g) - 1| below this counts as hitting the fixed point at a kink
TIE_TOL = 1e-12
FIXED_POINT_TOL = 1e-12
ORDERING_SLACK = 1e-12
# perfect equality: every p maximizes p - L(p); report the midpoint so the
# Pietra split coincides with k = 1/2
EGALITARIAN_PIETRA_ARG = 0.5


@dataclass(frozen=True)
class IndexReport:
    """All indices of one distribution.

    ``mean`` is in income units for income-based sources and 1 for families
    defined directly by their Lorenz function.
    """

    k: float
    normalized_k: float
    gini: float
    pietra: float
    mean: float
    pietra_arg: float
    median_to_mean: float
    disparity_at_k: float

    def as_dict(self) -> dict[str, float]:
        return asdict(self)


class Coincidence(enum.Enum):
    C1_EGALITARIAN = "C1_Egalitarian"
    C2_TWO_GROUP = "C2_TwoGroup"
    NONE = "NoCoincidence"


def _source(obj):
    if isinstance(obj, LorenzCurve):
        return obj.source
    return obj


def _require(obj, cls):
    src = _source(obj)
    if not isinstance(src, cls):
        raise TypeError(f"expected {cls.__name__}, got {type(src).__name__}")
    return src


# ---------------------------------------------------------------------------
# Kolkata index


def kolkata_discrete(dist: GroupedDistribution) -> float:
    """Kolkata index of grouped data by a scan over the kinks.

    Starting from the first group that reaches half of the population, find
    the first group ``g*`` with ``N(g*) + M(g*) >= 1``. The fixed point of
    ``1 - L`` is either the kink ``N(g*)`` itself or lies on the segment
    leading to it, where ``L`` is linear and the equation is solved
    directly.
    """
    dist = _require(dist, GroupedDistribution)
    cum_pop, cum_inc = dist.cum_pop, dist.cum_inc
    g = int(np.searchsorted(cum_pop, 0.5, side="left"))
    while cum_pop[g] + cum_inc[g] < 1.0 - TIE_TOL:
        g += 1
    if abs(cum_pop[g] + cum_inc[g] - 1.0) <= TIE_TOL:
        return float(cum_pop[g])
    prev_pop = cum_pop[g - 1] if g else 0.0
    prev_inc = cum_inc[g - 1] if g else 0.0
    mu = dist.mean
    x = dist.values[g]
    # k + M(g-1) + (k - N(g-1)) * x / mu = 1
    return float((mu * (1.0 - prev_inc) + prev_pop * x) / (mu + x))


def kolkata_bisection(curve) -> float:
    """Fixed point of the complementary Lorenz function by bisection on [1/2, 1]."""
    curve = lorenz_curve(curve)
    return _numeric.bisect(lambda p: p + float(curve.values(p)) - 1.0, 0.5, 1.0, tol=FIXED_POINT_TOL)


@singledispatch
def _k_closed(dist):
    return None


@_k_closed.register
def _(dist: Uniform):
    a, b = dist.a, dist.b
    return (-(3 * a + b) + math.sqrt(5 * a * a + 6 * a * b + 5 * b * b)) / (2 * (b - a))


@_k_closed.register
def _(dist: TwoGroup):
    return dist.c


@_k_closed.register
def _(dist: CircleArc):
    return 1.0 / math.sqrt(2.0)


@_k_closed.register
def _(dist: PiecewiseLorenz):
    # p + L(p) - 1 is strictly increasing: exactly one piece holds the root
    for lo, hi, coeffs in dist.pieces:
        if hi < 0.5 or hi + P.polyval(hi, coeffs) < 1.0:
            continue
        poly = P.polyadd(coeffs, (-1.0, 1.0))
        if len(coeffs) <= 2:
            return float(-poly[0] / poly[1])
        roots = P.polyroots(poly)
        real = roots[np.abs(roots.imag) <= 1e-12].real
        inside = real[(real >= lo - 1e-12) & (real <= hi + 1e-12)]
        return float(inside[0]) if inside.size else None
    return None


def kolkata_analytic(dist: AnalyticDistribution) -> float:
    """Kolkata index of an analytic family; closed form or bisection."""
    dist = _require(dist, AnalyticDistribution)
    k = _k_closed(dist)
    if k is None:
        k = kolkata_bisection(LorenzCurve(dist))
    return float(k)


def kolkata(source) -> float:
    """Kolkata index ``k``: the solution of ``k + L(k) = 1``."""
    src = _source(source)
    if isinstance(src, GroupedDistribution):
        return kolkata_discrete(src)
    return kolkata_analytic(src)


def normalized_k(source) -> float:
    return 2.0 * kolkata(source) - 1.0


# ---------------------------------------------------------------------------
# Gini index

_GINI_CHUNK = 1 << 22


def gini_discrete(dist: GroupedDistribution) -> float:
    """Gini index as the mean absolute difference over all pairs of groups.

    ``sum_t sum_g n_t n_g |x_t - x_g| / (2 N M)``, evaluated in row blocks so
    memory stays bounded for large G.
    """
    dist = _require(dist, GroupedDistribution)
    x = dist.values
    n = dist.counts.astype(float)
    rows = max(1, _GINI_CHUNK // len(x))
    total = 0.0
    for start in range(0, len(x), rows):
        xs = x[start:start + rows]
        ns = n[start:start + rows]
        total += float(np.sum(ns[:, None] * n[None, :] * np.abs(xs[:, None] - x[None, :])))
    return total / (2.0 * dist.N * dist.M)


@singledispatch
def _gini_closed(dist):
    return None


@_gini_closed.register
def _(dist: Uniform):
    return (dist.b - dist.a) / (3 * (dist.a + dist.b))


@_gini_closed.register
def _(dist: Exponential):
    return 0.5


@_gini_closed.register
def _(dist: Pareto):
    return 1.0 / (2 * dist.alpha - 1)


@_gini_closed.register
def _(dist: PowerLawLorenz):
    return 1.0 - 2.0 / (dist.n + 1)


@_gini_closed.register
def _(dist: CircleArc):
    return math.pi / 2 - 1


@_gini_closed.register
def _(dist: PiecewiseLorenz):
    area = 0.0
    for lo, hi, coeffs in dist.pieces:
        anti = P.polyint(coeffs)
        area += P.polyval(hi, anti) - P.polyval(lo, anti)
    return 1.0 - 2.0 * area


@_gini_closed.register
def _(dist: TwoGroup):
    return 2 * dist.c - 1


def gini_analytic(dist: AnalyticDistribution) -> float:
    """Gini index of an analytic family in closed form.

    Families without a registered formula are integrated numerically.
    """
    dist = _require(dist, AnalyticDistribution)
    g = _gini_closed(dist)
    if g is None:
        g = gini_integral(dist)
    return float(g)


def gini_integral(source) -> float:
    """``1 - 2 * integral of L`` computed from the curve itself.

    Exact trapezoids between kinks for grouped data, adaptive quadrature
    for analytic curves. Independent of the pairwise-difference formula.
    """
    curve = lorenz_curve(source)
    if curve.is_grouped:
        kp, kl = curve.kink_p, curve.kink_l
        area = float(np.sum(np.diff(kp) * (kl[1:] + kl[:-1]) / 2))
    else:
        pts = [float(b) for b in curve.breakpoints] or None
        area, _ = integrate.quad(lambda p: float(curve.values(p)), 0.0, 1.0,
                                 points=pts, epsabs=1e-14, epsrel=1e-13, limit=200)
    return 1.0 - 2.0 * area


def gini(source) -> float:
    src = _source(source)
    if isinstance(src, GroupedDistribution):
        return gini_discrete(src)
    return gini_analytic(src)


# ---------------------------------------------------------------------------
# Pietra index


def _pietra_split(dist: GroupedDistribution) -> int:
    """Number of groups with income at or below the mean."""
    return int(np.searchsorted(dist.values, dist.mean, side="right"))


def pietra_discrete(dist: GroupedDistribution) -> float:
    """Pietra index of grouped data.

    The income that would have to move from above-mean to below-mean
    groups to equalize everyone: ``sum_{x_g <= mean} n_g (mean - x_g) / M``.
    """
    dist = _require(dist, GroupedDistribution)
    split = _pietra_split(dist)
    if split >= dist.G:
        return 0.0
    below = slice(0, split)
    gap = float(np.dot(dist.counts[below], dist.mean - dist.values[below]))
    return gap / dist.M


def pietra_mean_deviation(dist: GroupedDistribution) -> float:
    """Pietra index as ``E|x - mean| / (2 mean)``."""
    dist = _require(dist, GroupedDistribution)
    mad = float(np.dot(dist.counts, np.abs(dist.values - dist.mean))) / dist.N
    return mad / (2.0 * dist.mean)


@singledispatch
def _pietra_closed(dist):
    """Return ``(pietra, F(mean))`` for an analytic family, or None."""
    return None


@_pietra_closed.register
def _(dist: Uniform):
    return (dist.b - dist.a) / (4 * (dist.a + dist.b)), 0.5


@_pietra_closed.register
def _(dist: Exponential):
    return math.exp(-1.0), 1.0 - math.exp(-1.0)


@_pietra_closed.register
def _(dist: Pareto):
    a = dist.alpha
    ratio = (a - 1) / a
    return ratio ** (a - 1) / a, 1.0 - ratio**a


@_pietra_closed.register
def _(dist: PowerLawLorenz):
    n = dist.n
    if n == 1:
        return 0.0, EGALITARIAN_PIETRA_ARG
    arg = n ** (-1.0 / (n - 1))
    return arg - arg**n, arg


@_pietra_closed.register
def _(dist: CircleArc):
    return math.sqrt(2.0) - 1.0, 1.0 / math.sqrt(2.0)


@_pietra_closed.register
def _(dist: PiecewiseLorenz):
    candidates = [0.0]
    for lo, hi, coeffs in dist.pieces:
        candidates.append(hi)
        # interior stationary points of p - L(p), i.e. L'(p) = 1
        d = P.polysub(P.polyder(coeffs), [1.0])
        if np.any(np.abs(d) > 0) and len(d) > 1:
            for root in P.polyroots(d):
                if abs(root.imag) < 1e-12 and lo < root.real < hi:
                    candidates.append(float(root.real))
    cand = np.array(sorted(candidates))
    gaps = cand - dist.lorenz(cand)
    best = float(gaps.max())
    if best <= 1e-15:
        return 0.0, EGALITARIAN_PIETRA_ARG
    # a piece of slope 1 makes the maximizer an interval; F(mean) is its right end
    arg = float(cand[np.flatnonzero(gaps >= best - 1e-15)[-1]])
    return best, arg


@_pietra_closed.register
def _(dist: TwoGroup):
    return 2 * dist.c - 1, dist.c


def pietra_analytic(dist: AnalyticDistribution) -> float:
    """Pietra index ``max_p (p - L(p))`` of an analytic family."""
    return _pietra_pair(_require(dist, AnalyticDistribution))[0]


def _pietra_pair(dist: AnalyticDistribution):
    pair = _pietra_closed(dist)
    if pair is None:
        # maximizer of p - L(p) is where the slope of L crosses 1
        arg = _numeric.bisect(lambda p: float(dist.slope(np.array([p]))[0]) - 1.0, 0.0, 1.0)
        pair = (arg - float(dist.lorenz(np.array([arg]))[0]), arg)
    return float(pair[0]), float(pair[1])


def pietra(source) -> float:
    src = _source(source)
    if isinstance(src, GroupedDistribution):
        return pietra_discrete(src)
    return pietra_analytic(src)


def pietra_arg(source) -> float:
    """Population share ``F(mean)`` at which ``p - L(p)`` is maximal.

    ``F`` is right-continuous, so when a whole interval attains the maximum
    (a group earning exactly the mean) its right end is returned.
    """
    src = _source(source)
    if isinstance(src, GroupedDistribution):
        if src.G == 1:
            return EGALITARIAN_PIETRA_ARG
        split = _pietra_split(src)
        return float(src.cum_pop[split - 1]) if split else 0.0
    return _pietra_pair(src)[1]


# ---------------------------------------------------------------------------


def disparity(curve, p: float) -> float:
    """Across-group disparity ``(p - L(p)) / 2`` when splitting at ``p``."""
    curve = lorenz_curve(curve)
    p = float(p)
    if not 0.0 <= p <= 1.0:
        raise DomainError(f"p={p!r} outside [0, 1]")
    return 0.5 * (p - float(curve.values(p)))


def report(source) -> IndexReport:
    """Compute every index for one distribution.

    Raises
    ------
    OrderingViolation
        If normalized k <= Pietra <= Gini fails, which would indicate a bug.
    """
    src = _source(source)
    k = kolkata(src)
    nk = 2.0 * k - 1.0
    g = gini(src)
    if isinstance(src, GroupedDistribution):
        pt = pietra_discrete(src)
    else:
        pt = _pietra_pair(src)[0]
    if not (nk <= pt + ORDERING_SLACK and pt <= g + ORDERING_SLACK):
        raise OrderingViolation(f"normalized k={nk!r}, Pietra={pt!r}, Gini={g!r} out of order")
    return IndexReport(
        k=k,
        normalized_k=nk,
        gini=g,
        pietra=pt,
        mean=float(src.mean),
        pietra_arg=pietra_arg(src),
        median_to_mean=float(median_to_mean(src)),
        disparity_at_k=k - 0.5,
    )


def coincidence_check(dist: GroupedDistribution) -> Coincidence:
    """Classify when normalized k, Pietra and Gini all coincide.

    Only two grouped shapes qualify: everyone has the same income (C1), or
    two groups with ``n1 > n2`` and ``n1^2 x1 = n2^2 x2`` (C2).
    """
    dist = _require(dist, GroupedDistribution)
    if dist.G == 1:
        return Coincidence.C1_EGALITARIAN
    if dist.G == 2:
        (n1, n2), (x1, x2) = dist.counts.tolist(), dist.values.tolist()
        lhs, rhs = n1 * n1 * x1, n2 * n2 * x2
        if n1 > n2 and abs(lhs - rhs) <= 1e-9 * max(lhs, rhs):
            return Coincidence.C2_TWO_GROUP
    return Coincidence.NONE
