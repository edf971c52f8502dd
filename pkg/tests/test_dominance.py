import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from conftest import random_pairs
from kolkata import (
    CircleArc,
    Exponential,
    IndexKind,
    Pareto,
    PiecewiseLorenz,
    PowerLawLorenz,
    Uniform,
    Verdict,
    compare,
    from_groups,
    from_raw_samples,
    gini,
    normalized_k,
    pietra,
    rank_by_index,
)
from kolkata.errors import EmptyInput

F_S = PiecewiseLorenz(((0.0, 0.75, (0.0, 0.0, 1.0)), (0.75, 1.0, (-0.75, 1.75))))
FLIP = {
    Verdict.A_DOMINATES_B: Verdict.B_DOMINATES_A,
    Verdict.B_DOMINATES_A: Verdict.A_DOMINATES_B,
    Verdict.EQUAL: Verdict.EQUAL,
    Verdict.CROSSING: Verdict.CROSSING,
}


def test_worked_example_crosses_once(f_a, f_b):
    res = compare(f_a, f_b)
    assert res.verdict is Verdict.CROSSING
    assert res.crossings == pytest.approx((17 / 24,), abs=1e-12)


def test_uniform_and_pareto_two_cross_at_golden_section():
    res = compare(Uniform(0, 1), Pareto(1, 2))
    assert res.verdict is Verdict.CROSSING
    assert len(res.crossings) == 1
    assert res.crossings[0] == pytest.approx((math.sqrt(5) - 1) / 2, abs=1e-10)


def test_f_s_dominates_uniform():
    assert compare(F_S, Uniform(0, 1)).verdict is Verdict.A_DOMINATES_B
    assert compare(Uniform(0, 1), F_S).verdict is Verdict.B_DOMINATES_A


def test_equal_and_scaled_distributions(f_a):
    assert compare(f_a, f_a.scaled(3.5)).verdict is Verdict.EQUAL
    assert compare(f_a, f_a.replicated(4)).verdict is Verdict.EQUAL
    assert compare(Uniform(0, 1), Uniform(0, 9)).verdict is Verdict.EQUAL


def test_power_law_family_is_ordered():
    assert compare(PowerLawLorenz(2), PowerLawLorenz(3)).verdict is Verdict.A_DOMINATES_B
    assert compare(from_raw_samples([1, 1]), Exponential(1.0)).verdict is Verdict.A_DOMINATES_B


def test_tangency_is_not_a_crossing():
    # both curves share the kink (1/2, 1/4) and one stays above elsewhere
    a = PiecewiseLorenz.from_points([(0.5, 0.25)])
    b = PiecewiseLorenz.from_points([(0.25, 0.1), (0.5, 0.25), (0.75, 0.5)])
    res = compare(a, b)
    assert res.verdict is Verdict.A_DOMINATES_B and res.crossings == ()


def test_grouped_against_analytic():
    # incomes 1 and 3: chords of p^2 through (1/2, 1/4), touching it only there
    d = from_groups([(1, 1), (1, 3)])
    res = compare(d, PowerLawLorenz(2))
    assert res.verdict is Verdict.A_DOMINATES_B and res.crossings == ()


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 2**32 - 1))
def test_antisymmetry(seed):
    rng = np.random.default_rng(seed)
    a, b = from_groups(random_pairs(rng)), from_groups(random_pairs(rng))
    ab, ba = compare(a, b), compare(b, a)
    assert ba.verdict is FLIP[ab.verdict]
    assert ab.crossings == ba.crossings


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 2**32 - 1))
def test_crossings_are_real_intersections(seed):
    rng = np.random.default_rng(seed)
    a, b = from_groups(random_pairs(rng)), from_groups(random_pairs(rng))
    from kolkata import lorenz_curve

    ca, cb = lorenz_curve(a), lorenz_curve(b)
    res = compare(a, b)
    for p in res.crossings:
        assert abs(float(ca(p) - cb(p))) <= 1e-12
    if res.verdict is Verdict.A_DOMINATES_B:
        grid = np.linspace(0, 1, 1001)
        assert np.all(ca(grid) >= cb(grid) - 1e-10)


@settings(max_examples=80, deadline=None)
@given(st.integers(0, 2**32 - 1), st.floats(0.05, 0.95))
def test_dominance_implies_index_agreement(seed, lam):
    # pulling every income toward the mean mixes L with the diagonal: L' = lam L + (1 - lam) p
    rng = np.random.default_rng(seed)
    pairs = random_pairs(rng, allow_zero=True)
    a = from_groups(pairs)
    if a.is_egalitarian():
        return
    b = from_groups([(n, lam * x + (1 - lam) * a.mean) for n, x in pairs])
    res = compare(b, a)
    assert res.verdict is Verdict.A_DOMINATES_B
    assert gini(b) <= gini(a) + 1e-12
    assert pietra(b) <= pietra(a) + 1e-12
    assert normalized_k(b) <= normalized_k(a) + 1e-12


def test_equality_dominates_everything(f_a):
    assert compare(from_raw_samples([1, 1]), f_a).verdict is Verdict.A_DOMINATES_B
    assert compare(f_a, f_a).verdict is Verdict.EQUAL


@pytest.mark.parametrize("index", ["K", "Gini", "Pietra"])
def test_rank_worked_examples_agree(f_a, f_b, index):
    ranked = rank_by_index([f_b, f_a], index, labels=["F_B", "F_A"])
    assert [r.label for r in ranked] == ["F_A", "F_B"] and [r.rank for r in ranked] == [1, 2]


def test_rank_single():
    (only,) = rank_by_index([Exponential(1.0)], "Gini")
    assert only.rank == 1 and only.value == pytest.approx(0.5)


def test_rank_by_k_ties_then_gini_splits():
    ranked = rank_by_index([Uniform(0, 1), F_S], IndexKind.K, labels=["uniform", "F_S"])
    assert [r.rank for r in ranked] == [1, 1]
    ranked = rank_by_index([Uniform(0, 1), F_S], "Gini", labels=["uniform", "F_S"])
    assert [r.label for r in ranked] == ["F_S", "uniform"]
    assert [r.rank for r in ranked] == [1, 2]


def test_rank_competition_numbering(f_a, f_b):
    ranked = rank_by_index([f_b, f_a, f_a.scaled(2), CircleArc()], "Pietra")
    assert [r.label for r in ranked] == [1, 2, 0, 3]
    assert [r.rank for r in ranked] == [1, 1, 3, 4]


def test_rank_empty():
    with pytest.raises(EmptyInput):
        rank_by_index([], "Gini")
