"""Income distributions from which Lorenz curves are built.

Two kinds of source are supported:

* :class:`GroupedDistribution` -- a finite society split into income groups,
  each group holding ``count`` persons with identical income ``value``.
* :class:`AnalyticDistribution` subclasses -- parametric families with a
  closed-form Lorenz function (uniform, exponential, Pareto, ...).

Families that are defined directly through their Lorenz function
(power-law, circle arc, two-group, piecewise) carry no income scale; their
``mean`` is reported as 1, i.e. incomes are measured relative to the mean.
"""

from __future__ import annotations

import math
import operator
from dataclasses import dataclass, field
from typing import ClassVar, Mapping, Sequence

import numpy as np
from numpy.polynomial import polynomial as P
from scipy.special import xlogy

from .errors import (
    AllZeroIncome,
    EmptyInput,
    NegativeValue,
    NonPositiveCount,
    ParameterOutOfDomain,
)

__all__ = [
    "IncomeGroup",
    "GroupedDistribution",
    "AnalyticDistribution",
    "Uniform",
    "Exponential",
    "Pareto",
    "PowerLawLorenz",
    "CircleArc",
    "TwoGroup",
    "PiecewiseLorenz",
    "from_raw_samples",
    "from_groups",
    "make_analytic",
]

_CONT_TOL = 1e-12


@dataclass(frozen=True)
class IncomeGroup:
    count: int
    value: float

    def __post_init__(self):
        if isinstance(self.count, bool):
            raise NonPositiveCount(None, self.count)
        try:
            count = operator.index(self.count)
        except TypeError:
            raise NonPositiveCount(None, self.count) from None
        if count < 1:
            raise NonPositiveCount(None, count)
        value = float(self.value)
        if not math.isfinite(value):
            raise ParameterOutOfDomain("value", "finite", self.value)
        if value < 0:
            raise NegativeValue(None, self.value)
        object.__setattr__(self, "count", int(count))
        object.__setattr__(self, "value", value)


@dataclass(frozen=True)
class GroupedDistribution:
    """A discrete income distribution given as sorted income groups.

    Groups are canonicalized on construction: sorted by income and merged
    when incomes are exactly equal, so ``x_1 < x_2 < ... < x_G`` holds.

    Attributes
    ----------
    groups : tuple of IncomeGroup
    N : int
        Total population.
    M : float
        Total income.
    mean : float
        ``M / N``.
    counts, values : ndarray
        Group sizes and incomes, read-only.
    cum_pop, cum_inc : ndarray
        Cumulative population share ``N(g)`` and income share ``M(g)`` for
        ``g = 1..G``; both end at exactly 1.
    """

    groups: tuple[IncomeGroup, ...]
    N: int = field(init=False, compare=False)
    M: float = field(init=False, compare=False)
    mean: float = field(init=False, compare=False)
    counts: np.ndarray = field(init=False, compare=False, repr=False)
    values: np.ndarray = field(init=False, compare=False, repr=False)
    cum_pop: np.ndarray = field(init=False, compare=False, repr=False)
    cum_inc: np.ndarray = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        groups = [g if isinstance(g, IncomeGroup) else IncomeGroup(*g) for g in self.groups]
        if not groups:
            raise EmptyInput("no income groups given")
        merged: dict[float, int] = {}
        for g in groups:
            merged[g.value] = merged.get(g.value, 0) + g.count
        canon = tuple(IncomeGroup(merged[v], v) for v in sorted(merged))
        counts = np.array([g.count for g in canon], dtype=np.int64)
        values = np.array([g.value for g in canon], dtype=float)
        total_income = float(np.dot(counts, values))
        if not total_income > 0:
            raise AllZeroIncome()
        total_pop = int(counts.sum())
        cum_pop = np.cumsum(counts) / total_pop
        cum_inc = np.cumsum(counts * values) / total_income
        cum_pop[-1] = 1.0
        cum_inc[-1] = 1.0
        for arr in (counts, values, cum_pop, cum_inc):
            arr.flags.writeable = False

        setattr_ = object.__setattr__
        setattr_(self, "groups", canon)
        setattr_(self, "N", total_pop)
        setattr_(self, "M", total_income)
        setattr_(self, "mean", total_income / total_pop)
        setattr_(self, "counts", counts)
        setattr_(self, "values", values)
        setattr_(self, "cum_pop", cum_pop)
        setattr_(self, "cum_inc", cum_inc)

    @property
    def G(self) -> int:
        return len(self.groups)

    def is_egalitarian(self) -> bool:
        return self.G == 1

    def quantile(self, q: float) -> float:
        """Left inverse of the distribution function, ``inf{x : F(x) >= q}``."""
        if q <= 0:
            return float(self.values[0])
        idx = int(np.searchsorted(self.cum_pop, q, side="left"))
        return float(self.values[min(idx, self.G - 1)])

    def scaled(self, factor: float) -> GroupedDistribution:
        return GroupedDistribution(tuple(IncomeGroup(g.count, g.value * factor) for g in self.groups))

    def replicated(self, times: int) -> GroupedDistribution:
        return GroupedDistribution(tuple(IncomeGroup(g.count * times, g.value) for g in self.groups))


def from_groups(groups: Sequence[tuple[int, float]]) -> GroupedDistribution:
    """Build a distribution from ``(count, value)`` pairs in any order.

    Duplicate incomes are merged by summing their counts.

    Raises
    ------
    EmptyInput, NonPositiveCount, NegativeValue, AllZeroIncome
    """
    groups = list(groups)
    if not groups:
        raise EmptyInput("no income groups given")
    checked = []
    for i, (count, value) in enumerate(groups):
        if isinstance(count, bool):
            raise NonPositiveCount(i, count)
        try:
            count = operator.index(count)
        except TypeError:
            raise NonPositiveCount(i, count) from None
        if count < 1:
            raise NonPositiveCount(i, count)
        value = float(value)
        if not math.isfinite(value):
            raise ParameterOutOfDomain("value", "finite", value)
        if value < 0:
            raise NegativeValue(i, value)
        checked.append(IncomeGroup(count, value))
    return GroupedDistribution(tuple(checked))


def from_raw_samples(values: Sequence[float]) -> GroupedDistribution:
    """Group individual incomes into a :class:`GroupedDistribution`.

    >>> d = from_raw_samples([20, 20, 30, 50])
    >>> [(g.count, g.value) for g in d.groups]
    [(2, 20.0), (1, 30.0), (1, 50.0)]
    """
    arr = np.asarray(values, dtype=float).ravel()
    if arr.size == 0:
        raise EmptyInput("no samples given")
    bad = np.flatnonzero(~np.isfinite(arr))
    if bad.size:
        raise ParameterOutOfDomain("value", "finite", float(arr[bad[0]]))
    neg = np.flatnonzero(arr < 0)
    if neg.size:
        raise NegativeValue(int(neg[0]), float(arr[neg[0]]))
    uniq, counts = np.unique(arr, return_counts=True)
    return GroupedDistribution(tuple(IncomeGroup(int(c), float(v)) for c, v in zip(counts, uniq)))


# ---------------------------------------------------------------------------
# Analytic families


class AnalyticDistribution:
    """Base class for distributions with a closed-form Lorenz function.

    Subclasses implement ``lorenz`` and ``slope`` on arrays of population
    shares. ``slope`` is the left derivative of the Lorenz function, which
    equals ``F^{-1}(p) / mean``.
    """

    family: ClassVar[str] = ""

    def lorenz(self, p: np.ndarray) -> np.ndarray:
        raise NotImplementedError

    def slope(self, p: np.ndarray) -> np.ndarray:
        raise NotImplementedError

    @property
    def mean(self) -> float:
        return 1.0

    @property
    def breakpoints(self) -> tuple[float, ...]:
        """Interior points where the Lorenz function is not smooth."""
        return ()

    def inverse_lorenz(self, s: float) -> float | None:
        """Closed-form smallest ``p`` with ``L(p) = s``; ``None`` if unavailable."""
        return None

    @property
    def params(self) -> dict[str, float]:
        return {}

    def median_to_mean(self) -> float:
        return float(self.slope(np.array([0.5]))[0])


@dataclass(frozen=True)
class Uniform(AnalyticDistribution):
    a: float
    b: float
    family: ClassVar[str] = "uniform"

    def __post_init__(self):
        if not (math.isfinite(self.a) and self.a >= 0):
            raise ParameterOutOfDomain("a", "a>=0", self.a)
        if not (math.isfinite(self.b) and self.b > self.a):
            raise ParameterOutOfDomain("b", "b>a", self.b)

    @property
    def spread(self) -> float:
        # (b - a) / (a + b), the curvature of the quadratic Lorenz curve
        return (self.b - self.a) / (self.a + self.b)

    def lorenz(self, p):
        p = np.asarray(p, dtype=float)
        return p * (1.0 - self.spread * (1.0 - p))

    def slope(self, p):
        p = np.asarray(p, dtype=float)
        return (self.a + (self.b - self.a) * p) / self.mean

    @property
    def mean(self):
        return (self.a + self.b) / 2

    def inverse_lorenz(self, s):
        if s <= 0:
            return 0.0
        r = self.spread
        return 2 * s / ((1 - r) + math.sqrt((1 - r) ** 2 + 4 * r * s))

    @property
    def params(self):
        return {"a": self.a, "b": self.b}


@dataclass(frozen=True)
class Exponential(AnalyticDistribution):
    rate: float = 1.0
    family: ClassVar[str] = "exponential"

    def __post_init__(self):
        if not (math.isfinite(self.rate) and self.rate > 0):
            raise ParameterOutOfDomain("lambda", "lambda>0", self.rate)

    def lorenz(self, p):
        p = np.asarray(p, dtype=float)
        q = 1.0 - p
        return p + xlogy(q, q)

    def slope(self, p):
        p = np.asarray(p, dtype=float)
        with np.errstate(divide="ignore"):
            return -np.log1p(-p)

    @property
    def mean(self):
        return 1.0 / self.rate

    @property
    def params(self):
        return {"lambda": self.rate}


@dataclass(frozen=True)
class Pareto(AnalyticDistribution):
    m: float
    alpha: float
    family: ClassVar[str] = "pareto"

    def __post_init__(self):
        if not (math.isfinite(self.m) and self.m > 0):
            raise ParameterOutOfDomain("m", "m>0", self.m)
        if not (math.isfinite(self.alpha) and self.alpha > 1):
            raise ParameterOutOfDomain("alpha", "alpha>1", self.alpha)

    @property
    def tail_exponent(self) -> float:
        """Exponent of ``1 - L(p) = (1 - p) ** e``, namely ``1 - 1/alpha``."""
        return 1.0 - 1.0 / self.alpha

    def lorenz(self, p):
        p = np.asarray(p, dtype=float)
        return 1.0 - (1.0 - p) ** self.tail_exponent

    def slope(self, p):
        p = np.asarray(p, dtype=float)
        with np.errstate(divide="ignore"):
            return self.tail_exponent * (1.0 - p) ** (-1.0 / self.alpha)

    @property
    def mean(self):
        return self.alpha * self.m / (self.alpha - 1)

    def inverse_lorenz(self, s):
        return 1.0 - (1.0 - s) ** (1.0 / self.tail_exponent)

    @property
    def params(self):
        return {"m": self.m, "alpha": self.alpha}


@dataclass(frozen=True)
class PowerLawLorenz(AnalyticDistribution):
    """Lorenz function ``L(p) = p ** n``."""

    n: float
    family: ClassVar[str] = "powerlaw"

    def __post_init__(self):
        if not (math.isfinite(self.n) and self.n >= 1):
            raise ParameterOutOfDomain("n", "n>=1", self.n)

    def lorenz(self, p):
        return np.asarray(p, dtype=float) ** self.n

    def slope(self, p):
        return self.n * np.asarray(p, dtype=float) ** (self.n - 1)

    def inverse_lorenz(self, s):
        return s ** (1.0 / self.n)

    @property
    def params(self):
        return {"n": self.n}


@dataclass(frozen=True)
class CircleArc(AnalyticDistribution):
    """Lorenz curve on the unit circle centred at (0, 1): ``1 - sqrt(1 - p^2)``."""

    family: ClassVar[str] = "circle"

    def lorenz(self, p):
        p = np.asarray(p, dtype=float)
        return 1.0 - np.sqrt(1.0 - p * p)

    def slope(self, p):
        p = np.asarray(p, dtype=float)
        with np.errstate(divide="ignore"):
            return p / np.sqrt(1.0 - p * p)

    def inverse_lorenz(self, s):
        return math.sqrt(s * (2.0 - s))


@dataclass(frozen=True)
class PiecewiseLorenz(AnalyticDistribution):
    """Lorenz function given piece by piece as polynomials.

    Parameters
    ----------
    pieces : sequence of (lo, hi, coeffs)
        Contiguous intervals covering [0, 1]. ``coeffs`` are polynomial
        coefficients in increasing powers of ``p`` (so ``(c0, c1)`` is the
        line ``c0 + c1 * p``).

    The result must be a valid Lorenz function: continuous, ``L(0) = 0``,
    ``L(1) = 1``, nondecreasing and convex. Use :meth:`from_points` for the
    common piecewise-linear case.
    """

    pieces: tuple[tuple[float, float, tuple[float, ...]], ...]
    family: ClassVar[str] = "piecewise"

    def __post_init__(self):
        pieces = tuple(
            (float(lo), float(hi), tuple(float(c) for c in coeffs)) for lo, hi, coeffs in self.pieces
        )
        object.__setattr__(self, "pieces", pieces)
        if not pieces:
            raise ParameterOutOfDomain("pieces", "at least one piece")
        if pieces[0][0] != 0.0 or pieces[-1][1] != 1.0:
            raise ParameterOutOfDomain("pieces", "must cover [0, 1]")
        for i, (lo, hi, coeffs) in enumerate(pieces):
            if not lo < hi:
                raise ParameterOutOfDomain("pieces", "lo < hi in every piece", (lo, hi))
            if not coeffs:
                raise ParameterOutOfDomain("pieces", "non-empty coefficients")
            if i and pieces[i - 1][1] != lo:
                raise ParameterOutOfDomain("pieces", "contiguous intervals", (pieces[i - 1][1], lo))
        self._validate_shape()

    def _validate_shape(self):
        pieces = self.pieces
        if abs(P.polyval(0.0, pieces[0][2])) > _CONT_TOL:
            raise ParameterOutOfDomain("pieces", "L(0)=0")
        if abs(P.polyval(1.0, pieces[-1][2]) - 1.0) > _CONT_TOL:
            raise ParameterOutOfDomain("pieces", "L(1)=1")
        for (_, hi, c_left), (_, _, c_right) in zip(pieces, pieces[1:]):
            if abs(P.polyval(hi, c_left) - P.polyval(hi, c_right)) > _CONT_TOL:
                raise ParameterOutOfDomain("pieces", "continuous at breakpoints", hi)
            if P.polyval(hi, P.polyder(c_left)) > P.polyval(hi, P.polyder(c_right)) + _CONT_TOL:
                raise ParameterOutOfDomain("pieces", "convex (slopes nondecreasing)", hi)
        if P.polyval(0.0, P.polyder(pieces[0][2])) < -_CONT_TOL:
            raise ParameterOutOfDomain("pieces", "nondecreasing")
        for lo, hi, coeffs in pieces:
            grid = np.linspace(lo, hi, 101)
            if np.any(P.polyval(grid, P.polyder(coeffs, 2)) < -1e-9):
                raise ParameterOutOfDomain("pieces", "convex within pieces", (lo, hi))

    @classmethod
    def from_points(cls, points: Sequence[tuple[float, float]]) -> PiecewiseLorenz:
        """Piecewise-linear Lorenz curve through the given interior kinks.

        ``(0, 0)`` and ``(1, 1)`` are added automatically.
        """
        pts = [(0.0, 0.0)] + sorted((float(p), float(l)) for p, l in points) + [(1.0, 1.0)]
        pieces = []
        for (p0, l0), (p1, l1) in zip(pts, pts[1:]):
            if not p1 > p0:
                raise ParameterOutOfDomain("points", "distinct abscissae in (0, 1)", p1)
            slope = (l1 - l0) / (p1 - p0)
            pieces.append((p0, p1, (l0 - slope * p0, slope)))
        return cls(tuple(pieces))

    @property
    def breakpoints(self):
        return tuple(lo for lo, _, _ in self.pieces[1:])

    def _locate(self, p: np.ndarray) -> np.ndarray:
        # piece i covers (lo_i, hi_i]; p = 0 falls in piece 0
        his = np.array([hi for _, hi, _ in self.pieces])
        return np.minimum(np.searchsorted(his, p, side="left"), len(self.pieces) - 1)

    def lorenz(self, p):
        p = np.asarray(p, dtype=float)
        idx = self._locate(p)
        out = np.empty_like(p)
        for i, (_, _, coeffs) in enumerate(self.pieces):
            mask = idx == i
            out[mask] = P.polyval(p[mask], coeffs)
        return out

    def slope(self, p):
        p = np.asarray(p, dtype=float)
        idx = self._locate(p)
        out = np.empty_like(p)
        for i, (_, _, coeffs) in enumerate(self.pieces):
            mask = idx == i
            out[mask] = P.polyval(p[mask], P.polyder(coeffs))
        return out

    def inverse_lorenz(self, s):
        if s <= 0:
            return 0.0
        for lo, hi, coeffs in self.pieces:
            top = P.polyval(hi, coeffs)
            if s <= top:
                if len(coeffs) <= 2:
                    c0 = coeffs[0]
                    c1 = coeffs[1] if len(coeffs) == 2 else 0.0
                    if c1 > 0:
                        return min(max((s - c0) / c1, lo), hi)
                    continue
                return None
        return 1.0

    @property
    def params(self):
        return {"pieces": [list(piece[:2]) + [list(piece[2])] for piece in self.pieces]}


@dataclass(frozen=True)
class TwoGroup(PiecewiseLorenz):
    """Two-segment Lorenz curve with kink at ``(C, 1 - C)``.

    This is the only shape for which normalized k, Pietra and Gini coincide
    (all equal ``2C - 1``). ``C = 1/2`` is perfect equality.
    """

    c: float = 0.5
    pieces: tuple = field(init=False, default=(), repr=False)
    family: ClassVar[str] = "twogroup"

    def __post_init__(self):
        c = self.c
        if not (math.isfinite(c) and 0.5 <= c < 1):
            raise ParameterOutOfDomain("C", "1/2<=C<1", c)
        low = (1 - c) / c
        high = c / (1 - c)
        object.__setattr__(
            self,
            "pieces",
            ((0.0, c, (0.0, low)), (c, 1.0, ((1 - c) - high * c, high))),
        )
        PiecewiseLorenz.__post_init__(self)

    @property
    def params(self):
        return {"C": self.c}


_FAMILIES = {
    "uniform": (Uniform, {"a": "a", "b": "b"}),
    "exponential": (Exponential, {"lambda": "rate", "rate": "rate"}),
    "pareto": (Pareto, {"m": "m", "alpha": "alpha"}),
    "powerlaw": (PowerLawLorenz, {"n": "n"}),
    "circle": (CircleArc, {}),
    "twogroup": (TwoGroup, {"c": "c"}),
}

_ALIASES = {
    "power-law-lorenz": "powerlaw",
    "powerlawlorenz": "powerlaw",
    "power-law": "powerlaw",
    "circle-arc": "circle",
    "circlearc": "circle",
    "two-group": "twogroup",
    "exp": "exponential",
}


def make_analytic(family: str, params: Mapping[str, object] | None = None, **kwargs) -> AnalyticDistribution:
    """Construct an analytic distribution by family name.

    Parameters
    ----------
    family : str
        One of ``uniform`` (a, b), ``exponential`` (lambda), ``pareto``
        (m, alpha), ``powerlaw`` (n), ``circle``, ``twogroup`` (C) or
        ``piecewise`` (points: interior kinks of a piecewise-linear curve,
        or pieces).
    params : mapping, optional
        Parameter values; keyword arguments are merged in.

    Raises
    ------
    ParameterOutOfDomain
        Unknown family or parameter, missing parameter, or a value outside
        the family's domain.
    """
    merged = dict(params or {})
    merged.update(kwargs)
    key = family.strip().lower()
    key = _ALIASES.get(key, key)

    if key == "piecewise":
        if "points" in merged:
            return PiecewiseLorenz.from_points(merged["points"])
        if "pieces" in merged:
            return PiecewiseLorenz(tuple(merged["pieces"]))
        raise ParameterOutOfDomain("points", "required")

    if key not in _FAMILIES:
        known = ", ".join(sorted(list(_FAMILIES) + ["piecewise"]))
        raise ParameterOutOfDomain("family", f"one of {known}", family)
    cls, names = _FAMILIES[key]
    kw = {}
    for name, value in merged.items():
        attr = names.get(name.lower())
        if attr is None:
            raise ParameterOutOfDomain(name, f"not a parameter of {key}", value)
        try:
            kw[attr] = float(value)
        except (TypeError, ValueError):
            raise ParameterOutOfDomain(name, "a real number", value) from None
    required = set(names.values()) - set(kw)
    if key == "exponential":
        required.discard("rate")
    if required:
        raise ParameterOutOfDomain(sorted(required)[0], "required")
    return cls(**kw)
