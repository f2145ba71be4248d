"""Tests for the counting layer: recurrences, Jacobsthal numbers, brute-force
companions, extremal coloring searches and zero-set size extremes."""

from __future__ import annotations

import pytest

from treecolor.coloring import zero_intervals
from treecolor.enumeration import (
    ACCEPTABLE,
    JACOBSTHAL,
    RIGID_SHIFTED,
    brute_acceptable,
    brute_rigid,
    conjectured_m,
    count_acceptable,
    count_flexible,
    count_rigid,
    jacobsthal,
    max_coloring_search,
    pair_coloring_counts,
    recurrence,
    zero_set_extremes,
)
from treecolor.errors import BoundExceeded, OutOfRange, TooSmall
from treecolor.maps import is_prime


# ---------- recurrences ----------


def test_jacobsthal_sequence():
    assert [jacobsthal(n) for n in range(9)] == [0, 1, 1, 3, 5, 11, 21, 43, 85]


def test_jacobsthal_matches_recurrence():
    for n in range(15):
        assert recurrence(JACOBSTHAL, n) == jacobsthal(n)


def test_recurrence_guard():
    with pytest.raises(TooSmall):
        recurrence(JACOBSTHAL, -1)
    with pytest.raises(TooSmall):
        count_rigid(0)


def test_acceptable_counts():
    # first values of the class count and its split into rigid + flexible
    assert [count_acceptable(n) for n in range(1, 7)] == [1, 3, 10, 30, 91, 273]
    assert [count_rigid(n) for n in range(1, 7)] == [1, 2, 5, 10, 21, 42]
    for n in range(1, 10):
        assert count_acceptable(n) == count_rigid(n) + count_flexible(n)


def test_counts_match_brute_force():
    for n in range(1, 8):
        assert count_acceptable(n) == brute_acceptable(n)
        assert count_rigid(n) == brute_rigid(n)


def test_rigid_is_jacobsthal_partial_sum():
    total = 0
    for n in range(1, 13):
        total += jacobsthal(n)
        assert count_rigid(n) == total


def test_recurrence_spec_shapes():
    assert ACCEPTABLE.k == 1  # affine term present
    assert RIGID_SHIFTED.a == 1 and RIGID_SHIFTED.b == 2


# ---------- extremal searches ----------


def test_pair_coloring_counts_only_prime_pairs():
    for p, count in pair_coloring_counts(3):
        assert is_prime(p)
        assert count >= 0


def test_max_coloring_search_small():
    assert [c for c, _ in max_coloring_search(5).entries] == [1]
    assert [c for c, _ in max_coloring_search(6).entries] == [4, 1]
    assert [c for c, _ in max_coloring_search(7).entries] == [5, 4, 1]


def test_max_coloring_search_witnesses():
    rep = max_coloring_search(6)
    count, witness = rep.entries[0]
    hits = sum(
        1 for p, c in pair_coloring_counts(4) if c == count and p == witness
    )
    assert hits == 1


def test_max_coloring_search_bound():
    with pytest.raises(BoundExceeded):
        max_coloring_search(9)  # default bound is 8
    with pytest.raises(BoundExceeded):
        max_coloring_search(1)


# ---------- conjectured extreme counts ----------


def test_conjectured_m_values():
    assert conjectured_m(1, 5) == 1
    assert conjectured_m(1, 6) == 4
    assert conjectured_m(1, 7) == 5
    assert conjectured_m(1, 8) == 12
    assert conjectured_m(3, 8) == conjectured_m(1, 7)
    assert conjectured_m(4, 9) == jacobsthal(5) - 2


def test_conjectured_m_guards():
    with pytest.raises(OutOfRange):
        conjectured_m(1, 4)
    with pytest.raises(OutOfRange):
        conjectured_m(2, 6)
    with pytest.raises(OutOfRange):
        conjectured_m(5, 9)


# ---------- zero-set extremes ----------


def test_zero_set_extremes_small():
    hi, lo, hi_w, lo_w = zero_set_extremes(4)
    assert hi == len(zero_intervals(hi_w))
    assert lo == len(zero_intervals(lo_w))
    assert (hi, lo) == (4, 2)  # max is floor(16/4)


def test_zero_set_extremes_bound():
    with pytest.raises(BoundExceeded):
        zero_set_extremes(13)
