# tests/test_enumeration.py
from collections import Counter
from math import factorial

import pytest

from config import get_settings
from src.bijections import is_leftmost_valid, is_properly_labeled
from src.core import CallanSequence, LabeledForest, Point, SizeLimitError, first_coordinate
from src.counting import count_naf, omega_series, poly_bernoulli
from src.enumeration import (
    brute_force_f_inverse,
    complete_tree_counts,
    count_complete_naf_by_eta,
    count_no_common_rise_by_eta,
    enumerate_callan,
    enumerate_complete_naf,
    enumerate_gamma_free,
    enumerate_gamma_free_with_statistics,
    enumerate_increasing_forests,
    enumerate_no_common_rise,
    enumerate_point_forests,
    tau_counts,
)
from src.gamma import is_complete_naf, is_gamma_free


# -------------------------
# Γ-free matrices
# -------------------------
@pytest.mark.parametrize(
    "n,k,count", [(2, 2, 14), (3, 3, 230), (2, 4, 146), (4, 4, 6902), (0, 3, 1), (3, 0, 1)]
)
def test_gamma_free_counts(n, k, count):
    assert sum(1 for _ in enumerate_gamma_free(n, k)) == count


def test_first_row_is_every_vector():
    for k in range(6):
        assert sum(1 for _ in enumerate_gamma_free(1, k)) == 2 ** k


@pytest.mark.parametrize("n,k", [(n, k) for n in range(4) for k in range(4)] + [(4, 4), (2, 4)])
def test_naive_and_pruned_agree(n, k):
    assert list(enumerate_gamma_free(n, k, pruned=False)) == list(enumerate_gamma_free(n, k, pruned=True))


def test_stream_is_sorted_valid_and_duplicate_free():
    matrices = list(enumerate_gamma_free(3, 4))
    assert matrices == sorted(matrices, key=lambda m: m.sort_key())
    assert len(set(matrices)) == len(matrices)
    assert all(is_gamma_free(m) for m in matrices)


def test_ones_bound():
    for n in range(1, 5):
        for k in range(1, 5):
            assert max(len(m.ones) for m in enumerate_gamma_free(n, k)) <= n + k - 1


def test_matrices_without_empty_lines_are_counted_by_count_naf():
    for n in range(5):
        for k in range(5):
            enumerated = sum(1 for m in enumerate_gamma_free(n, k) if m.empty_rows == 0 and m.empty_columns == 0)
            assert enumerated == count_naf(n, k)


def test_statistics_cover_all_matrices():
    stats = enumerate_gamma_free_with_statistics(2, 2)
    assert sum(stats.values()) == 14
    assert stats[(0, 2, 2)] == 1  # the zero matrix


@pytest.mark.slow
def test_pruned_five_by_five():
    assert sum(1 for _ in enumerate_gamma_free(5, 5)) == 329462


def test_size_guards(monkeypatch):
    with pytest.raises(SizeLimitError):
        list(enumerate_gamma_free(5, 5, pruned=False))
    with pytest.raises(SizeLimitError):
        list(enumerate_gamma_free(6, 5))
    monkeypatch.setattr(get_settings(), "PRUNED_MAX_CELLS", 4)
    with pytest.raises(SizeLimitError):
        list(enumerate_gamma_free(3, 2))


# -------------------------
# Callan sequences
# -------------------------
def test_callan_small_cases():
    assert list(enumerate_callan(0, 0)) == [CallanSequence((), 0, 0)]
    assert len(list(enumerate_callan(1, 1))) == 2
    assert len(list(enumerate_callan(2, 2))) == 14
    assert sum(1 for _ in enumerate_callan(4, 4)) == 6902


def test_callan_counts_match_poly_bernoulli():
    for n in range(5):
        for k in range(5):
            sequences = list(enumerate_callan(n, k))
            assert len(sequences) == poly_bernoulli(n, k)
            assert len(set(sequences)) == len(sequences)


def test_callan_guard(monkeypatch):
    monkeypatch.setattr(get_settings(), "FAMILY_MAX_SIZE", 2)
    with pytest.raises(SizeLimitError):
        list(enumerate_callan(3, 1))


# -------------------------
# Forests
# -------------------------
def test_increasing_forest_counts():
    assert len(list(enumerate_increasing_forests([1]))) == 1
    assert set(enumerate_increasing_forests([1, 2])) == {
        LabeledForest.from_parents({1: None, 2: None}),
        LabeledForest.from_parents({1: None, 2: 1}),
    }
    for n in range(6):
        forests = list(enumerate_increasing_forests(range(1, n + 1)))
        assert len(forests) == factorial(n)
        assert len(set(forests)) == factorial(n)
        assert all(f.is_increasing() for f in forests)


def test_increasing_forest_guard():
    with pytest.raises(SizeLimitError):
        list(enumerate_increasing_forests(range(get_settings().FOREST_MAX_LABELS + 1)))


def test_point_forests():
    for kind in ("leftmost-valid", "properly-labeled"):
        assert len(list(enumerate_point_forests((1,), kind))) == 1
        assert len(list(enumerate_point_forests((3, 1, 2), kind))) == 4
    assert all(is_leftmost_valid(f) for f in enumerate_point_forests((2, 3, 1), "leftmost-valid"))
    assert all(is_properly_labeled(f) for f in enumerate_point_forests((2, 3, 1), "properly-labeled"))


def test_point_forest_kind_is_checked():
    with pytest.raises(ValueError):
        enumerate_point_forests((1, 2), "binary")


def test_point_forest_counts_sum_to_omega():
    from itertools import permutations

    omega = omega_series(4).counts()
    for n in range(1, 5):
        for kind in ("leftmost-valid", "properly-labeled"):
            total = sum(
                sum(1 for _ in enumerate_point_forests(eta, kind)) for eta in permutations(range(1, n + 1))
            )
            assert total == omega[n]


def test_brute_force_f_inverse_finds_the_unique_preimage():
    root, low, high = Point(1, 2), Point(3, 1), Point(2, 3)
    chain = LabeledForest.from_parents({root: None, high: root, low: high}, key=first_coordinate)
    branched = LabeledForest.from_parents({root: None, low: root, high: root}, key=first_coordinate)
    assert brute_force_f_inverse(chain) == (branched,)


# -------------------------
# Complete non-ambiguous forests and permutation pairs
# -------------------------
def test_complete_naf_small_cases():
    assert [str(m) for m in enumerate_complete_naf(1)] == ["1"]
    assert sorted(str(m) for m in enumerate_complete_naf(2)) == ["01\n10", "01\n11", "10\n01"]
    assert all(is_complete_naf(m) for m in enumerate_complete_naf(3))


def test_tau_equals_omega():
    assert tau_counts(4) == omega_series(4).counts() == [1, 1, 3, 19, 211]


def test_no_common_rise_counts():
    assert len(list(enumerate_no_common_rise(1))) == 1
    assert len(list(enumerate_no_common_rise(2))) == 3
    assert [sum(1 for _ in enumerate_no_common_rise(n)) for n in range(5)] == omega_series(4).counts()


@pytest.mark.slow
def test_no_common_rise_count_for_five():
    assert sum(1 for _ in enumerate_no_common_rise(5)) == omega_series(5).counts()[5] == 3651


def test_counts_by_eta_agree():
    for n in range(1, 4):
        assert count_complete_naf_by_eta(n) == count_no_common_rise_by_eta(n)
    assert count_no_common_rise_by_eta(2) == Counter({(1, 2): 1, (2, 1): 2})


def test_complete_tree_counts():
    assert complete_tree_counts(3) == [1, 1, 4, 33]


@pytest.mark.slow
def test_complete_tree_counts_up_to_four():
    assert complete_tree_counts(4) == [1, 1, 4, 33, 456]


def test_family_guard():
    with pytest.raises(SizeLimitError):
        list(enumerate_no_common_rise(get_settings().FAMILY_MAX_SIZE + 1))
    with pytest.raises(SizeLimitError):
        list(enumerate_complete_naf(get_settings().FAMILY_MAX_SIZE + 1))
