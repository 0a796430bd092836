# src/bijections/phi.py
"""
φ: Γ-free n×k matrices -> (n,k)-Callan sequences, and its reconstruction inverse.

The forward map reads G_M, H_M and F_M off the matrix and lists the pairs of F_M with π.
The inverse rebuilds the forest with π⁻¹ and fills the rows of every pair, children
before parents, in four steps:

  (a) top-1's of the pair go into its highest row;
  (b) for each child pair, a 1 goes below the rightmost 1 of the child's lowest row,
      in the highest row of this pair lying under that child row;
  (c) the rest of the highest row stays 0;
  (d) every lower row of the pair gets a 1 below the rightmost 1 of the row above it
      within the pair.
"""
import logging
from dataclasses import dataclass
from typing import Dict, List, Literal, Tuple

from src.core import BinaryMatrix, CallanPair, CallanSequence, InvalidObjectError, LabeledForest, min_row_key
from src.gamma import build_edge_graph, build_increasing_forest, project_rows

from .pi import pi, pi_inverse

logger = logging.getLogger(__name__)

VertexOrder = Literal["postorder", "topological"]


@dataclass(frozen=True)
class Placement:
    row: int
    col: int
    step: Literal["a", "b", "d"]


def increasing_forest_of(m: BinaryMatrix) -> LabeledForest:
    """F_M on the (R, C) pairs of m, ordered by smallest row."""
    g = build_edge_graph(m)
    _, pairs = project_rows(g, m)
    return build_increasing_forest(g, pairs)


def phi(m: BinaryMatrix) -> CallanSequence:
    forest = increasing_forest_of(m)
    return CallanSequence(pi(forest), m.n, m.k)


def _processing_order(forest: LabeledForest, order: VertexOrder) -> List[CallanPair]:
    if order == "topological":
        # children have larger smallest rows than their parents
        return sorted(forest.vertices, key=min_row_key, reverse=True)

    result: List[CallanPair] = []

    def visit(v: CallanPair) -> None:
        for child in forest.children(v):
            visit(child)
        result.append(v)

    for root in forest.roots:
        visit(root)
    return result


def reconstruct_matrix(
    forest: LabeledForest, n: int, k: int, order: VertexOrder = "postorder"
) -> Tuple[BinaryMatrix, List[Placement]]:
    """Fill an n×k matrix from an increasing forest of Callan pairs; also return the placements."""
    rows: Dict[int, set] = {}
    placements: List[Placement] = []

    def place(r: int, c: int, step: str) -> None:
        rows.setdefault(r, set()).add(c)
        placements.append(Placement(r, c, step))

    def rightmost(r: int) -> int:
        return min(rows[r])

    for pair in _processing_order(forest, order):
        ordered = sorted(pair.rows, reverse=True)
        for c in sorted(pair.cols):
            place(ordered[0], c, "a")
        for child in forest.children(pair):
            child_low = child.lowest_row
            below = max(r for r in pair.rows if r < child_low)
            place(below, rightmost(child_low), "b")
        for upper, lower in zip(ordered, ordered[1:]):
            place(lower, rightmost(upper), "d")

    ones = frozenset((r, c) for r, cols in rows.items() for c in cols)
    return BinaryMatrix(n, k, ones), placements


def phi_inverse_trace(
    s: CallanSequence, n: int, k: int, order: VertexOrder = "postorder"
) -> Tuple[BinaryMatrix, List[Placement]]:
    if (s.n, s.k) != (n, k):
        # re-validate against the requested bounds before any cell is written
        s = CallanSequence(s.pairs, n, k)
    forest = pi_inverse(s.pairs, key=min_row_key)
    return reconstruct_matrix(forest, n, k, order)


def phi_inverse(s: CallanSequence, n: int, k: int, order: VertexOrder = "postorder") -> BinaryMatrix:
    matrix, _ = phi_inverse_trace(s, n, k, order)
    return matrix


def callan_sequence(pairs, n: int, k: int) -> CallanSequence:
    """Build and validate a Callan sequence from ((S, T), ...) iterables."""
    try:
        return CallanSequence(tuple(CallanPair.of(rows, cols) for rows, cols in pairs), n, k)
    except TypeError as e:
        raise InvalidObjectError(f"Malformed pair list: {e}") from e
