# tests/test_bijection_pi.py
import pytest
from hypothesis import given
import hypothesis.strategies as st

from src.bijections import pi, pi_inverse, pre_order
from src.core import ForestClassError, InvalidObjectError, LabeledForest

THIRTEEN_PERMUTATION = (3, 9, 13, 12, 10, 7, 4, 11, 6, 1, 5, 2, 8)


def test_pi_inverse_builds_the_expected_forest():
    f = pi_inverse(THIRTEEN_PERMUTATION)
    assert f.roots == (3, 1)
    assert f.children(3) == (9, 7, 4)
    assert f.children(9) == (13, 12, 10)
    assert f.children(4) == (11, 6)
    assert f.children(1) == (5, 2)
    assert f.children(2) == (8,)
    assert f.is_increasing()


def test_pi_reproduces_the_permutation():
    assert pi(pi_inverse(THIRTEEN_PERMUTATION)) == THIRTEEN_PERMUTATION


def test_pre_order_visits_larger_children_first():
    t = LabeledForest.from_parents({1: None, 2: 1, 3: 1, 4: 2})
    assert pre_order(t) == (1, 3, 2, 4)


def test_pre_order_needs_a_tree():
    with pytest.raises(InvalidObjectError):
        pre_order(LabeledForest.from_parents({1: None, 2: None}))


def test_pi_rejects_non_increasing_forest():
    with pytest.raises(ForestClassError):
        pi(LabeledForest.from_parents({2: None, 1: 2}))


def test_pi_inverse_rejects_repeats():
    with pytest.raises(InvalidObjectError):
        pi_inverse((1, 2, 1))


def test_empty_sequence():
    f = pi_inverse(())
    assert len(f) == 0
    assert pi(f) == ()


def test_pi_inverse_with_key():
    f = pi_inverse(["b", "c", "a"], key=lambda s: ord(s))
    assert f.roots == ("b", "a")
    assert f.children("b") == ("c",)


@given(st.integers(0, 8).flatmap(lambda n: st.permutations(list(range(1, n + 1)))))
def test_pi_round_trip_on_random_permutations(perm):
    f = pi_inverse(perm)
    assert f.is_increasing()
    assert pi(f) == tuple(perm)


@given(st.integers(1, 8).flatmap(lambda n: st.permutations(list(range(1, n + 1)))))
def test_rises_are_exactly_leftmost_children(perm):
    f = pi_inverse(perm)
    for a, b in zip(perm, perm[1:]):
        assert (a < b) == (f.leftmost_child(a) == b)


def test_leftmost_children_in_the_thirteen_permutation():
    f = pi_inverse(THIRTEEN_PERMUTATION)
    assert f.leftmost_child(3) == 9
    assert f.leftmost_child(9) == 13
    assert f.leftmost_child(13) is None
    assert f.leftmost_child(1) == 5
