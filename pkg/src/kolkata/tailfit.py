"""Power-law fit of the upper tail of a Lorenz curve.

Above the Kolkata threshold ``k`` the top income share is modelled as
``1 - L(n) ~ (1 - n) ** alpha`` and ``alpha`` is the slope of an ordinary
least-squares line through ``(log(1 - n), log(1 - L(n)))``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy import stats

from .distributions import from_raw_samples
from .errors import DegenerateWindow, InsufficientPoints
from .indices import kolkata
from .lorenz import lorenz_curve

__all__ = ["TailFit", "fit_tail", "fit_tail_empirical"]

ENDPOINT_GAP = 1e-3
GRID_POINTS = 200
MIN_POINTS = 3
MIN_SAMPLES = 10


@dataclass(frozen=True)
class TailFit:
    """Result of a log-log tail regression.

    ``degenerate`` is set for perfectly equal distributions, where the fit
    is the trivial identity ``alpha = 1``.
    """

    alpha: float
    k_threshold: float
    points_used: int
    r2: float
    stderr: float
    degenerate: bool = False

    @property
    def nu(self) -> float:
        """Exponent of the inverted law ``n = 1 - c (1 - w) ** nu``."""
        return 1.0 / self.alpha

    def as_dict(self) -> dict:
        return {
            "alpha": self.alpha,
            "k_threshold": self.k_threshold,
            "points_used": self.points_used,
            "r2": self.r2,
            "stderr": self.stderr,
            "nu": self.nu,
            "degenerate": self.degenerate,
        }


def _window_start(curve, window_start):
    if window_start is None:
        return kolkata(curve)
    start = float(window_start)
    if not 0.5 <= start < 1.0:
        raise DegenerateWindow(f"window start {start!r} outside [1/2, 1)")
    return start


def fit_tail(curve, window_start: float | None = None) -> TailFit:
    """Fit the tail exponent on ``[start, 1 - 1e-3]``.

    ``start`` defaults to the curve's Kolkata index. Analytic curves are
    sampled on 200 evenly spaced points; grouped curves use their kinks
    inside the window.

    Raises
    ------
    DegenerateWindow
        The window is empty or its start lies outside [1/2, 1).
    InsufficientPoints
        Fewer than three regression points fall inside the window.
    """
    curve = lorenz_curve(curve)
    start = _window_start(curve, window_start)
    stop = 1.0 - ENDPOINT_GAP
    if start >= stop:
        raise DegenerateWindow(f"window [{start}, {stop}] is empty")

    equal = kolkata(curve) == 0.5
    if curve.is_grouped and not equal:
        kp = curve.kink_p
        n = kp[(kp >= start) & (kp <= stop)]
    else:
        n = np.linspace(start, stop, GRID_POINTS)
    if n.size < MIN_POINTS:
        raise InsufficientPoints(f"{n.size} points in window [{start:.6g}, {stop:.6g}], need {MIN_POINTS}")

    x = np.log1p(-n)
    y = np.log(1.0 - curve.values(n))
    res = stats.linregress(x, y)
    r2 = float(res.rvalue) ** 2
    stderr = float(res.stderr)
    if not math.isfinite(stderr):
        stderr = 0.0
    return TailFit(
        alpha=float(res.slope),
        k_threshold=float(start),
        points_used=int(n.size),
        r2=r2,
        stderr=stderr,
        degenerate=bool(equal),
    )


def fit_tail_empirical(samples, window_start: float | None = None) -> TailFit:
    """Tail fit for raw observations (incomes, citations per paper, ...)."""
    samples = np.asarray(samples, dtype=float).ravel()
    if samples.size < MIN_SAMPLES:
        raise InsufficientPoints(f"need at least {MIN_SAMPLES} samples, got {samples.size}")
    return fit_tail(from_raw_samples(samples), window_start)
