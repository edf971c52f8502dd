"""Exact evaluation of Lorenz and complementary Lorenz functions.

Grouped sources are stored as their kink list ``(N(g), M(g))`` and evaluated
by linear interpolation between kinks, which is exact for a discrete income
distribution. Analytic sources are evaluated in closed form.
"""

from __future__ import annotations

import numpy as np

from . import _numeric
from .distributions import AnalyticDistribution, GroupedDistribution
from .errors import CountTooSmall, DomainError

__all__ = [
    "LorenzCurve",
    "lorenz_curve",
    "eval_lorenz",
    "eval_complementary",
    "inverse_lorenz",
    "is_symmetric",
    "sample_curve",
    "median_to_mean",
]

_KINK_MERGE = 1e-12


class LorenzCurve:
    """Evaluable Lorenz curve of a grouped or analytic distribution.

    Parameters
    ----------
    source : GroupedDistribution or AnalyticDistribution

    Attributes
    ----------
    kink_p, kink_l : ndarray or None
        For grouped sources, the kink abscissae and ordinates including
        ``(0, 0)`` and ``(1, 1)``.
    """

    __slots__ = ("source", "kink_p", "kink_l")

    def __init__(self, source):
        if not isinstance(source, (GroupedDistribution, AnalyticDistribution)):
            raise TypeError(f"cannot build a Lorenz curve from {type(source).__name__}")
        self.source = source
        if isinstance(source, GroupedDistribution):
            kp = np.concatenate(([0.0], source.cum_pop))
            kl = np.concatenate(([0.0], source.cum_inc))
            kp.flags.writeable = False
            kl.flags.writeable = False
            self.kink_p, self.kink_l = kp, kl
        else:
            self.kink_p = self.kink_l = None

    @property
    def is_grouped(self) -> bool:
        return self.kink_p is not None

    @property
    def breakpoints(self) -> np.ndarray:
        """Interior points where the curve may have a kink."""
        if self.is_grouped:
            return np.asarray(self.kink_p[1:-1])
        return np.asarray(self.source.breakpoints, dtype=float)

    def values(self, p) -> np.ndarray:
        """Vectorized ``L(p)``; no domain checking."""
        p = np.asarray(p, dtype=float)
        if self.is_grouped:
            return np.interp(p, self.kink_p, self.kink_l)
        return np.clip(self.source.lorenz(p), 0.0, 1.0)

    def __call__(self, p):
        return self.values(p)

    def __repr__(self):
        return f"LorenzCurve({self.source!r})"


def lorenz_curve(source) -> LorenzCurve:
    """Return ``source`` if it already is a curve, else wrap it."""
    if isinstance(source, LorenzCurve):
        return source
    return LorenzCurve(source)


def _check_share(x, name="p"):
    x = float(x)
    if not 0.0 <= x <= 1.0:
        raise DomainError(f"{name}={x!r} outside [0, 1]")
    return x


def eval_lorenz(curve, p: float) -> float:
    """Income share of the poorest fraction ``p`` of the population."""
    curve = lorenz_curve(curve)
    p = _check_share(p)
    return float(curve.values(p))


def eval_complementary(curve, p: float) -> float:
    """Income share of the richest fraction ``1 - p``; ``1 - L(p)``."""
    return 1.0 - eval_lorenz(curve, p)


def inverse_lorenz(curve, s: float) -> float:
    """Smallest population share ``p`` with ``L(p) = s``."""
    curve = lorenz_curve(curve)
    s = _check_share(s, "s")
    if s == 0.0:
        return 0.0
    if curve.is_grouped:
        kp, kl = curve.kink_p, curve.kink_l
        j = int(np.searchsorted(kl, s, side="left"))
        lo_p, lo_l = kp[j - 1], kl[j - 1]
        return float(lo_p + (s - lo_l) * (kp[j] - lo_p) / (kl[j] - lo_l))

    closed = curve.source.inverse_lorenz(s)
    if closed is not None:
        return float(min(max(closed, 0.0), 1.0))
    return _numeric.bisect(lambda p: float(curve.values(p)) - s, 0.0, 1.0)


def is_symmetric(curve, tol: float = 1e-9) -> bool:
    """Check ``L(1 - L(p)) = 1 - p`` on a 1001-point grid."""
    curve = lorenz_curve(curve)
    p = np.linspace(0.0, 1.0, 1001)
    reflected = curve.values(1.0 - curve.values(p))
    return bool(np.all(np.abs(reflected - (1.0 - p)) <= tol))


def sample_curve(curve, count: int) -> list[tuple[float, float, float]]:
    """Sample ``(p, L(p), 1 - L(p))`` on a uniform grid of ``count`` points.

    For grouped sources every kink is included exactly, replacing any grid
    point within 1e-12 of it.
    """
    curve = lorenz_curve(curve)
    if count < 2:
        raise CountTooSmall(f"need at least 2 points, got {count}")
    grid = np.linspace(0.0, 1.0, int(count))
    if curve.is_grouped:
        kinks = curve.kink_p
        j = np.clip(np.searchsorted(kinks, grid), 1, len(kinks) - 1)
        gap = np.minimum(np.abs(grid - kinks[j - 1]), np.abs(kinks[j] - grid))
        grid = np.union1d(grid[gap > _KINK_MERGE], kinks)
    lor = curve.values(grid)
    return [(float(p), float(l), float(1.0 - l)) for p, l in zip(grid, lor)]


def median_to_mean(curve) -> float:
    """Median income as a fraction of the mean, ``F^{-1}(1/2) / mean``.

    Uses the left-continuous quantile, so for grouped data this is the
    income of the group containing the median person, divided by the mean.
    At a kink this picks the lower group rather than an undefined slope.
    """
    src = lorenz_curve(curve).source
    if isinstance(src, GroupedDistribution):
        return src.quantile(0.5) / src.mean
    return src.median_to_mean()
