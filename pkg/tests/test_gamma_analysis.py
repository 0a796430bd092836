# tests/test_gamma_analysis.py
import pytest

from src.core import NotGammaFreeError, parse_matrix
from src.gamma import (
    RowKind,
    build_edge_graph,
    build_increasing_forest,
    classify_rows,
    find_gamma_witness,
    is_complete_by_children,
    is_complete_naf,
    is_gamma_free,
    leading_ones,
    non_ambiguous_forest,
    project_rows,
    require_gamma_free,
    top_ones,
)
from src.enumeration import enumerate_gamma_free


def test_gamma_witness_is_reported():
    m = parse_matrix("11\n10")
    assert find_gamma_witness(m) == ((2, 2), (2, 1), (1, 2))
    assert not is_gamma_free(m)
    with pytest.raises(NotGammaFreeError):
        require_gamma_free(m)


@pytest.mark.parametrize("text", ["11\n01", "10\n11", "01\n11", "111\n001\n001", "1"])
def test_gamma_free_examples(text):
    m = parse_matrix(text)
    assert find_gamma_witness(m) is None
    assert is_gamma_free(m)


def test_fast_check_agrees_with_witness_search():
    from itertools import product
    from src.core import BinaryMatrix

    cells = [(r, c) for r in range(1, 4) for c in range(1, 3)]
    for bits in product([0, 1], repeat=len(cells)):
        m = BinaryMatrix(3, 2, frozenset(cell for cell, b in zip(cells, bits) if b))
        assert is_gamma_free(m) == (find_gamma_witness(m) is None)


def test_top_and_leading_ones():
    m = parse_matrix("11\n01")
    assert top_ones(m) == frozenset({(2, 2), (2, 1)})
    assert leading_ones(m) == frozenset({(2, 2), (1, 1)})


def test_classify_rows():
    kinds = classify_rows(parse_matrix("11\n01\n00"))
    assert kinds.kinds == {3: RowKind.TOP, 2: RowKind.SPECIAL, 1: RowKind.ALL_ZERO}
    assert kinds.special_rows == (2,)
    assert kinds.top_rows == (3,)


def test_edge_graph_marks_longest_edge_from_special_row():
    m = parse_matrix("11\n01")
    g = build_edge_graph(m)
    assert [str(e) for e in g.edges] == ["(1,1) -> (2,1) [special]"]
    h, pairs = project_rows(g, m)
    assert h.paths() == [(1, 2)]
    assert [(sorted(p.rows), sorted(p.cols)) for p in pairs] == [([1, 2], [1, 2])]


def test_regular_edge_becomes_forest_edge():
    m = parse_matrix("01\n11")
    g = build_edge_graph(m)
    assert g.special_edges == ()
    _, pairs = project_rows(g, m)
    forest = build_increasing_forest(g, pairs)
    low, high = sorted(pairs, key=lambda p: p.lowest_row)
    assert forest.edges == frozenset({(low, high)})


def test_edge_graph_needs_gamma_free():
    with pytest.raises(NotGammaFreeError):
        build_edge_graph(parse_matrix("11\n10"))


def test_non_ambiguous_forest_children():
    m = parse_matrix("01\n11")
    f = non_ambiguous_forest(m)
    assert f.roots == ((1, 1),)
    assert set(f.children((1, 1))) == {(2, 1), (1, 2)}
    assert is_complete_naf(m)
    assert is_complete_by_children(m)


def test_complete_predicates_agree():
    for n in range(1, 4):
        for m in enumerate_gamma_free(n, n):
            if m.empty_rows or m.empty_columns:
                continue
            assert is_complete_naf(m) == is_complete_by_children(m), render(m)


def render(m):
    return str(m)


def test_incomplete_matrix():
    m = parse_matrix("11\n01")
    assert not is_complete_naf(m)
    assert not is_complete_by_children(m)


# -------------------------
# Worked 3x4 matrices
# -------------------------
MATRIX_A = "0110\n1100\n0101"
MATRIX_B = "0100\n0110\n1011"


def test_matrix_a_contains_gamma():
    m = parse_matrix(MATRIX_A)
    assert find_gamma_witness(m) == ((3, 3), (3, 2), (1, 3))
    with pytest.raises(NotGammaFreeError):
        build_edge_graph(m)


def test_matrix_b_graphs():
    m = parse_matrix(MATRIX_B)
    assert is_gamma_free(m)
    assert top_ones(m) == frozenset({(1, 4), (3, 3), (2, 2), (1, 1)})

    g = build_edge_graph(m)
    assert [str(e) for e in g.edges] == ["(1,2) -> (2,2) [regular]", "(2,3) -> (3,3) [regular]"]
    assert g.out_edge((1, 2)).end == (2, 2)
    assert g.out_edge((3, 3)) is None
    assert g.edges_from_row(2) == (g.out_edge((2, 3)),)

    h, pairs = project_rows(g, m)
    assert h.paths() == [(1,), (2,), (3,)]
    assert len(build_increasing_forest(g, pairs).edges) == 2
    assert not is_complete_naf(m)


# -------------------------
# Graph invariants over every small Γ-free matrix
# -------------------------
def small_gamma_free():
    for n in range(1, 5):
        for k in range(1, 5):
            yield from enumerate_gamma_free(n, k)


def test_edge_graph_in_and_out_degrees():
    for m in small_gamma_free():
        g = build_edge_graph(m)
        tops = top_ones(m)
        for v in m.ones:
            assert g.indegree(v) <= 1
            if g.indegree(v):
                # only the rightmost 1 of its row
                assert v[1] == min(m.row(v[0]))
            assert (g.out_edge(v) is None) == (v in tops)


def test_edge_lengths_from_a_row_are_distinct():
    for m in small_gamma_free():
        g = build_edge_graph(m)
        for r in range(1, m.n + 1):
            lengths = [e.length for e in g.edges_from_row(r)]
            assert len(lengths) == len(set(lengths))


def test_ones_split_into_forest_edges_path_edges_and_top_ones():
    for m in small_gamma_free():
        g = build_edge_graph(m)
        h, pairs = project_rows(g, m)
        forest = build_increasing_forest(g, pairs)
        assert len(forest.edges) + len(h.edges) + len(top_ones(m)) == len(m.ones)
        assert len(h.paths()) == len(classify_rows(m).top_rows)


def test_complete_forests_have_one_leaf_per_row_and_column():
    for n in range(1, 5):
        for m in enumerate_gamma_free(n, n):
            if m.empty_rows or m.empty_columns or not is_complete_naf(m):
                continue
            f = non_ambiguous_forest(m)
            leaves = [v for v in f.vertices if not f.children(v)]
            assert sorted(r for r, _ in leaves) == list(range(1, n + 1))
            assert sorted(c for _, c in leaves) == list(range(1, n + 1))
            tops = top_ones(m)
            assert sorted(r for r, _ in tops) == list(range(1, n + 1))
            assert sorted(c for _, c in tops) == list(range(1, n + 1))
