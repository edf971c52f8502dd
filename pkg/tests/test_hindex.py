import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from kolkata import CitationProfile, citation_curve_fixed_point, h_index_from_fixed_point, hirsch_index
from kolkata.errors import EmptyInput, NegativeValue, NoFixedPointInRange


@pytest.mark.parametrize(
    "counts, h, fixed",
    [
        ([10, 8, 5, 4, 3], 4, 4.0),
        ([3, 3, 3], 3, 3.0),
        ([5, 1], 1, 1.8),
        ([1], 1, 1.0),
        ([4, 0, 0, 0, 0], 1, 1.6),
        ([25, 8, 5, 3, 3], 3, 11 / 3),
    ],
)
def test_examples(counts, h, fixed):
    assert hirsch_index(counts) == h
    assert citation_curve_fixed_point(counts) == pytest.approx(fixed, abs=1e-12)
    assert h_index_from_fixed_point(counts) == h


def test_order_does_not_matter():
    assert citation_curve_fixed_point([3, 10, 4, 8, 5]) == citation_curve_fixed_point([10, 8, 5, 4, 3])


@pytest.mark.parametrize("counts", [[0, 0, 0], [5, 5], [2]])
def test_no_fixed_point(counts):
    with pytest.raises(NoFixedPointInRange):
        citation_curve_fixed_point(counts)


def test_boundary_cases_of_procedure():
    assert h_index_from_fixed_point([0, 0, 0]) == 0
    assert h_index_from_fixed_point([9, 9, 9]) == 3
    assert hirsch_index([9, 9, 9]) == 3


def test_profile_validation():
    with pytest.raises(EmptyInput):
        CitationProfile(())
    with pytest.raises(NegativeValue):
        CitationProfile((3, -1))
    with pytest.raises(ValueError):
        CitationProfile((1.5,))
    assert CitationProfile((np.int64(3), 2)).m == 2


@given(st.lists(st.integers(0, 60), min_size=1, max_size=40))
def test_fixed_point_lies_on_curve(counts):
    ranked = sorted(counts, reverse=True)
    m = len(ranked)
    if ranked[0] < 1 or ranked[-1] > m:
        return
    t = citation_curve_fixed_point(counts)
    curve = np.interp(t, np.arange(1, m + 1), ranked)
    assert curve == pytest.approx(t, abs=1e-9)
    assert math.floor(t + 1e-12) == hirsch_index(counts)


@given(st.lists(st.integers(0, 200), min_size=1, max_size=100))
def test_hirsch_matches_fixed_point_procedure(counts):
    assert hirsch_index(counts) == h_index_from_fixed_point(counts)


@given(st.lists(st.integers(0, 200), min_size=1, max_size=100))
def test_hirsch_ignores_order(counts):
    assert hirsch_index(counts) == hirsch_index(sorted(counts)) == hirsch_index(counts[::-1])


@given(st.lists(st.integers(0, 200), min_size=2, max_size=100))
def test_fixed_point_below_m_when_last_paper_is_short(counts):
    ranked = sorted(counts, reverse=True)
    m = len(ranked)
    if ranked[0] >= 1 and ranked[-1] <= m - 1:
        assert 1 <= citation_curve_fixed_point(counts) < m


def test_fixed_point_can_exceed_m_minus_one():
    # (1, 2) -> (2, 0) meets the diagonal at 4/3, past m - 1 = 1
    assert citation_curve_fixed_point([2, 0]) == pytest.approx(4 / 3)


@given(st.lists(st.integers(0, 200), min_size=1, max_size=100))
def test_floor_of_fixed_point_brackets_definition(counts):
    ranked = sorted(counts, reverse=True)
    m = len(ranked)
    if ranked[0] < 1 or ranked[-1] > m:
        return
    h = math.floor(citation_curve_fixed_point(counts))
    assert ranked[h - 1] >= h
    if h < m:
        assert ranked[h] < h + 1
