# src/bijections/psi.py
"""
Complete non-ambiguous forests <-> permutation pairs with no common rise.

A complete non-ambiguous forest with leaves P_η gives, through φ's forest F_M, a properly
labeled forest on P_η. A permutation of P_η with no common rise gives, through π⁻¹, a
leftmost-valid forest on P_η. ψ converts leftmost-valid trees into properly labeled ones
by merging, and ψ⁻¹ undoes it.
"""
import logging
from typing import List

from src.core import (
    BinaryMatrix,
    CallanPair,
    CommonRiseError,
    ForestClassError,
    InvalidObjectError,
    LabeledForest,
    NotCompleteForestError,
    PermPair,
    Point,
    first_coordinate,
    min_row_key,
)
from src.gamma import is_complete_naf, is_gamma_free, top_ones

from .forest_classes import is_leftmost_valid, is_properly_labeled
from .phi import increasing_forest_of, reconstruct_matrix
from .pi import pi, pi_inverse, pre_order

logger = logging.getLogger(__name__)


def has_common_rise(p: PermPair) -> bool:
    return any(
        a1 < a2 and b1 < b2
        for a1, a2, b1, b2 in zip(p.alpha, p.alpha[1:], p.beta, p.beta[1:])
    )


def _has_vertex_below(tree: LabeledForest, r: Point) -> bool:
    return any(p.b < r.b for p in tree.vertices)


def _attach(tree: LabeledForest, subtrees: List[LabeledForest]) -> LabeledForest:
    """Join the roots of `subtrees` as new children of the root of `tree`."""
    base = LabeledForest.union([tree, *subtrees], key=first_coordinate)
    return LabeledForest(base.vertices, base.edges | {(tree.root, t.root) for t in subtrees}, first_coordinate)


# ---------------------------------------------------------------------- #
# f: leftmost-valid tree -> properly labeled tree
# ---------------------------------------------------------------------- #
def _convert(t: LabeledForest) -> LabeledForest:
    r = t.root
    kids = t.children(r)
    if not kids:
        return t

    sequence = [_convert(t.subtree(v)) for v in kids]
    while True:
        bad = next((i for i, tree in enumerate(sequence) if not _has_vertex_below(tree, r)), None)
        if bad is None:
            break
        # the first tree always holds the leftmost child of r, which is lower than r
        assert bad != 0, "leftmost bad tree found at the first position"
        merged = _attach(sequence[bad], sequence[:bad])
        sequence = [merged, *sequence[bad + 1:]]
    return LabeledForest.join(r, sequence, key=first_coordinate)


def f_convert(t: LabeledForest) -> LabeledForest:
    if not t.is_tree():
        raise InvalidObjectError("f_convert works on a single tree")
    if not is_leftmost_valid(t):
        raise ForestClassError("f_convert needs a leftmost-valid tree")
    return _convert(t)


# ---------------------------------------------------------------------- #
# f⁻¹: properly labeled tree -> leftmost-valid tree
# ---------------------------------------------------------------------- #
def _unconvert(t: LabeledForest) -> LabeledForest:
    r = t.root
    if len(t) == 1:
        return t

    def good(w: Point) -> bool:
        return any(p.b < r.b for p in t.subtree_vertices(w))

    # first vertex below r (in the second coordinate) in pre-order
    v = next(p for p in pre_order(t)[1:] if p.b < r.b)
    pieces = [t.subtree(v)]
    while True:
        parent = t.parent(v)
        siblings = [w for w in t.children(parent) if w != v]
        if parent == r:
            pieces.extend(t.subtree(w) for w in siblings)
            break
        good_siblings = [w for w in siblings if good(w)]
        pieces.extend(t.subtree(w) for w in good_siblings)
        removed = set(t.subtree_vertices(v))
        for w in good_siblings:
            removed |= t.subtree_vertices(w)
        pieces.append(t.restrict(t.subtree_vertices(parent) - removed))
        v = parent
    return LabeledForest.join(r, [_unconvert(piece) for piece in pieces], key=first_coordinate)


def f_inverse(t: LabeledForest) -> LabeledForest:
    if not t.is_tree():
        raise InvalidObjectError("f_inverse works on a single tree")
    if not is_properly_labeled(t):
        raise ForestClassError("f_inverse needs a properly labeled tree")
    return _unconvert(t)


# ---------------------------------------------------------------------- #
# ψ and ψ⁻¹: componentwise
# ---------------------------------------------------------------------- #
def psi(f: LabeledForest) -> LabeledForest:
    if not is_leftmost_valid(f):
        raise ForestClassError("psi needs a leftmost-valid forest")
    return LabeledForest.union([_convert(c) for c in f.components()], key=first_coordinate)


def psi_inverse(f: LabeledForest) -> LabeledForest:
    if not is_properly_labeled(f):
        raise ForestClassError("psi_inverse needs a properly labeled forest")
    return LabeledForest.union([_unconvert(c) for c in f.components()], key=first_coordinate)


# ---------------------------------------------------------------------- #
# Matrices <-> permutation pairs
# ---------------------------------------------------------------------- #
def point_forest_of(m: BinaryMatrix) -> LabeledForest:
    """
    F_M relabeled onto P_η, for a Γ-free square matrix whose top-1's are P_η.

    Every row is then a top row with a single top-1, so each pair is ({i}, {η_i}).
    """
    if m.n != m.k or not is_gamma_free(m):
        raise InvalidObjectError("point_forest_of needs a square Γ-free matrix")
    tops = top_ones(m)
    if sorted(r for r, _ in tops) != list(range(1, m.n + 1)) or len(tops) != m.n:
        raise InvalidObjectError("Top-1's of the matrix do not form a permutation point set")

    def to_point(pair: CallanPair) -> Point:
        (row,), (col,) = pair.rows, pair.cols
        return Point(row, col)

    return increasing_forest_of(m).relabel(to_point, key=first_coordinate)


def matrix_to_pair(m: BinaryMatrix) -> PermPair:
    if not is_complete_naf(m):
        raise NotCompleteForestError("Matrix is not the characteristic matrix of a complete non-ambiguous forest")
    properly_labeled = point_forest_of(m)
    leftmost_valid = psi_inverse(properly_labeled)
    return PermPair.from_points(pi(leftmost_valid))


def pair_to_matrix(p: PermPair) -> BinaryMatrix:
    if has_common_rise(p):
        raise CommonRiseError(f"Pair {p.alpha} / {p.beta} has a common rise")
    leftmost_valid = pi_inverse(p.points().points, key=first_coordinate)
    properly_labeled = psi(leftmost_valid)
    forest = properly_labeled.relabel(lambda q: CallanPair.of([q.a], [q.b]), key=min_row_key)
    matrix, _ = reconstruct_matrix(forest, p.n, p.n)
    logger.debug("Pair %s / %s -> matrix with %d ones", p.alpha, p.beta, len(matrix.ones))
    return matrix
