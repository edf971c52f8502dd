import math

import numpy as np
import pytest

from kolkata import Exponential, Pareto, PowerLawLorenz, TwoGroup, Uniform, fit_tail, fit_tail_empirical, from_raw_samples, kolkata
from kolkata.errors import DegenerateWindow, InsufficientPoints


@pytest.mark.parametrize("alpha", [1.2, 1.5, 2.0, 3.0, math.log(5) / math.log(4)])
def test_pareto_tail_is_exact_power_law(alpha):
    fit = fit_tail(Pareto(1.0, alpha))
    assert fit.alpha == pytest.approx(1 - 1 / alpha, abs=1e-9)
    assert fit.nu == pytest.approx(1 / (1 - 1 / alpha), rel=1e-9)
    assert fit.r2 == pytest.approx(1.0, abs=1e-12)
    assert fit.points_used == 200
    assert fit.k_threshold == pytest.approx(kolkata(Pareto(1.0, alpha)))


def test_window_start_override():
    fit = fit_tail(Pareto(1.0, 2.0), window_start=0.9)
    assert fit.k_threshold == 0.9 and fit.alpha == pytest.approx(0.5, abs=1e-9)


@pytest.mark.parametrize("start", [0.2, 0.9995, 1.0, -1.0])
def test_bad_window(start):
    with pytest.raises(DegenerateWindow):
        fit_tail(Uniform(0, 1), window_start=start)


def test_non_power_law_tail_has_imperfect_fit():
    fit = fit_tail(Exponential(1.0))
    assert 0 < fit.r2 < 1
    assert 0 < fit.alpha < 1


def test_perfect_equality_is_flagged():
    for source in (PowerLawLorenz(1), TwoGroup(0.5), from_raw_samples([5.0] * 20)):
        fit = fit_tail(source)
        assert fit.degenerate
        assert fit.alpha == pytest.approx(1.0) and fit.r2 == pytest.approx(1.0)


def test_empirical_uses_kinks_inside_window():
    rng = np.random.default_rng(3)
    x = rng.pareto(3.0, 2000) + 1.0
    fit = fit_tail_empirical(x)
    d = from_raw_samples(x)
    k = kolkata(d)
    kinks = d.cum_pop[(d.cum_pop >= k) & (d.cum_pop <= 1 - 1e-3)]
    assert fit.points_used == kinks.size
    assert fit.alpha == pytest.approx(2 / 3, abs=0.08)


def test_empirical_needs_ten_samples():
    with pytest.raises(InsufficientPoints):
        fit_tail_empirical([1, 2, 3, 4, 5, 6, 7, 8, 9])


def test_too_few_kinks_in_window():
    with pytest.raises(InsufficientPoints):
        fit_tail_empirical([1] * 8 + [2, 100])


def test_empirical_band_probability():
    # claimed: alpha in [0.45, 0.55] for at least 99% of 10,000-draw samples
    hits = 0
    for seed in range(100):
        rng = np.random.default_rng(1000 + seed)
        alpha = fit_tail_empirical(rng.pareto(2.0, 10_000) + 1.0).alpha
        hits += 0.45 <= alpha <= 0.55
    assert hits >= 99, f"{hits} of 100 samples inside [0.45, 0.55]"


def test_five_samples_rejected():
    with pytest.raises(InsufficientPoints):
        fit_tail_empirical([1, 2, 3, 4, 5])


@pytest.mark.parametrize("alpha", np.linspace(1.11, 5.0, 9))
def test_pareto_recovery_across_range(alpha):
    assert fit_tail(Pareto(2.0, alpha)).alpha == pytest.approx(1 - 1 / alpha, abs=1e-6)


def test_empirical_fit_ignores_income_scale():
    x = np.random.default_rng(8).pareto(2.5, 3000) + 1.0
    assert fit_tail_empirical(x).alpha == pytest.approx(fit_tail_empirical(x * 37.5).alpha, abs=1e-12)


def test_shrinking_window_on_exact_power_law():
    base = fit_tail(Pareto(1.0, 2.0))
    for start in (0.7, 0.8, 0.95):
        fit = fit_tail(Pareto(1.0, 2.0), window_start=start)
        assert abs(fit.alpha - base.alpha) <= max(base.stderr, fit.stderr, 1e-12)
