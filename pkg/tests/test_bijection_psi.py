# tests/test_bijection_psi.py
import pytest
from hypothesis import assume, given
import hypothesis.strategies as st

from src.bijections import (
    f_convert,
    f_inverse,
    has_common_rise,
    is_leftmost_valid,
    is_properly_labeled,
    matrix_to_pair,
    pair_to_matrix,
    point_forest_of,
    psi,
    psi_inverse,
)
from src.core import (
    CommonRiseError,
    ForestClassError,
    LabeledForest,
    NotCompleteForestError,
    PermPair,
    Point,
    first_coordinate,
    parse_matrix,
    render_matrix,
)
from src.enumeration import enumerate_complete_naf, enumerate_point_forests
from src.gamma import is_complete_naf

ROOT, LOW, HIGH = Point(1, 2), Point(3, 1), Point(2, 3)


def tree(parent_of):
    return LabeledForest.from_parents(parent_of, key=first_coordinate)


# leftmost-valid: the leftmost child (3,1) is lower than the root, (2,3) is a bad tree
BRANCHED = tree({ROOT: None, LOW: ROOT, HIGH: ROOT})
CHAIN = tree({ROOT: None, HIGH: ROOT, LOW: HIGH})


def test_forest_classes_of_examples():
    assert is_leftmost_valid(BRANCHED)
    assert not is_properly_labeled(BRANCHED)
    assert is_properly_labeled(CHAIN)
    assert not is_leftmost_valid(CHAIN)


def test_f_convert_merges_bad_tree():
    assert f_convert(BRANCHED) == CHAIN


def test_f_inverse_splits_it_back():
    assert f_inverse(CHAIN) == BRANCHED


def test_f_convert_keeps_good_trees():
    t = tree({Point(1, 3): None, Point(2, 1): Point(1, 3), Point(3, 2): Point(1, 3)})
    assert f_convert(t) == t


def test_f_convert_and_inverse_check_their_input():
    with pytest.raises(ForestClassError):
        f_convert(CHAIN)
    with pytest.raises(ForestClassError):
        f_inverse(BRANCHED)


def test_has_common_rise():
    assert has_common_rise(PermPair((1, 2), (1, 2)))
    assert not has_common_rise(PermPair((1, 2), (2, 1)))
    assert not has_common_rise(PermPair((2, 1), (2, 1)))


@pytest.mark.parametrize(
    "text,alpha,beta",
    [
        ("10\n01", (2, 1), (2, 1)),
        ("01\n10", (2, 1), (1, 2)),
        ("01\n11", (1, 2), (2, 1)),
        ("1", (1,), (1,)),
    ],
)
def test_matrix_to_pair_examples(text, alpha, beta):
    m = parse_matrix(text)
    p = matrix_to_pair(m)
    assert (p.alpha, p.beta) == (alpha, beta)
    assert pair_to_matrix(p) == m


def test_matrix_to_pair_needs_complete_forest():
    with pytest.raises(NotCompleteForestError):
        matrix_to_pair(parse_matrix("11\n01"))


def test_pair_to_matrix_rejects_common_rise():
    with pytest.raises(CommonRiseError):
        pair_to_matrix(PermPair((1, 2), (1, 2)))


def test_point_forest_is_properly_labeled():
    for m in enumerate_complete_naf(3):
        f = point_forest_of(m)
        assert is_properly_labeled(f)
        assert f.is_increasing()


@pytest.mark.parametrize("eta", [(3, 1, 2), (2, 3, 1), (1, 2, 3), (2, 1, 4, 3)])
def test_psi_maps_classes_onto_each_other(eta):
    leftmost = list(enumerate_point_forests(eta, "leftmost-valid"))
    proper = set(enumerate_point_forests(eta, "properly-labeled"))
    assert {psi(f) for f in leftmost} == proper
    for f in leftmost:
        assert psi_inverse(psi(f)) == f


@given(st.integers(1, 5).flatmap(
    lambda n: st.tuples(st.permutations(list(range(1, n + 1))), st.permutations(list(range(1, n + 1))))
))
def test_pair_round_trip_on_random_pairs(perms):
    p = PermPair(*perms)
    assume(not has_common_rise(p))
    m = pair_to_matrix(p)
    assert is_complete_naf(m)
    assert matrix_to_pair(m) == p
    assert render_matrix(m).count("\n") == p.n - 1
