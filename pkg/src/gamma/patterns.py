# src/gamma/patterns.py
from dataclasses import dataclass
from enum import Enum
from typing import Dict, FrozenSet, Optional, Tuple

from src.core import BinaryMatrix, LabeledForest, NotGammaFreeError, Position

GammaWitness = Tuple[Position, Position, Position]


def find_gamma_witness(m: BinaryMatrix) -> Optional[GammaWitness]:
    """
    Return (upper-left, upper-right, lower-left) 1's forming a Γ, or None if m is Γ-free.

    "Left" is the larger column index (columns count from the right). The witness is the
    lexicographic minimum over (row of the upper pair, left column, right column, lower row).
    """
    for r in sorted({r for r, _ in m.ones}):
        cols = m.row(r)
        if len(cols) < 2:
            continue
        right = cols[0]
        for left in cols[1:]:
            below = [rr for rr in m.column(left) if rr < r]
            if below:
                return (r, left), (r, right), (min(below), left)
    return None


def is_gamma_free(m: BinaryMatrix) -> bool:
    # only the rightmost 1 of a row may have a 1 below it
    lowest_in_col: Dict[int, int] = {}
    rightmost_in_row: Dict[int, int] = {}
    for r, c in m.ones:
        lowest_in_col[c] = min(r, lowest_in_col.get(c, r))
        rightmost_in_row[r] = min(c, rightmost_in_row.get(r, c))
    return all(c == rightmost_in_row[r] or lowest_in_col[c] == r for r, c in m.ones)


def require_gamma_free(m: BinaryMatrix) -> None:
    witness = find_gamma_witness(m)
    if witness is not None:
        raise NotGammaFreeError(f"Matrix contains a Γ at {witness}")


def top_ones(m: BinaryMatrix) -> FrozenSet[Position]:
    """The highest 1 of every non-all-0 column."""
    return frozenset((r, c) for c, r in m.column_tops.items())


def leading_ones(m: BinaryMatrix) -> FrozenSet[Position]:
    """
    The leftmost 1 of every non-all-0 row.

    Columns are indexed from the right, so the leftmost 1 has the LARGEST column index.
    """
    lead: Dict[int, int] = {}
    for r, c in m.ones:
        if c > lead.get(r, 0):
            lead[r] = c
    return frozenset(lead.items())


def has_empty_lines(m: BinaryMatrix) -> bool:
    return m.empty_rows > 0 or m.empty_columns > 0


def is_complete_naf(m: BinaryMatrix) -> bool:
    """Characteristic matrix of a complete non-ambiguous forest: square, no empty lines, Γ-free, tops = leads."""
    if m.n != m.k or has_empty_lines(m):
        return False
    if not is_gamma_free(m):
        return False
    return top_ones(m) == leading_ones(m)


class RowKind(str, Enum):
    ALL_ZERO = "all-zero"
    TOP = "top"
    SPECIAL = "special"


@dataclass(frozen=True)
class RowClass:
    kinds: Dict[int, RowKind]

    def rows_of(self, kind: RowKind) -> Tuple[int, ...]:
        return tuple(sorted(r for r, k in self.kinds.items() if k is kind))

    @property
    def top_rows(self) -> Tuple[int, ...]:
        return self.rows_of(RowKind.TOP)

    @property
    def special_rows(self) -> Tuple[int, ...]:
        return self.rows_of(RowKind.SPECIAL)


def classify_rows(m: BinaryMatrix) -> RowClass:
    tops = {r for r, _ in top_ones(m)}
    nonzero = {r for r, _ in m.ones}
    kinds = {}
    for r in range(1, m.n + 1):
        if r in tops:
            kinds[r] = RowKind.TOP
        elif r in nonzero:
            kinds[r] = RowKind.SPECIAL
        else:
            kinds[r] = RowKind.ALL_ZERO
    return RowClass(kinds)


# ---------------------------------------------------------------------- #
# The binary forest structure of a non-ambiguous forest
# ---------------------------------------------------------------------- #
def non_ambiguous_forest(m: BinaryMatrix) -> LabeledForest:
    """
    Binary forest on the 1-positions of a Γ-free matrix.

    The children of a 1 are the lowest 1 above it in its column and the nearest 1 to its
    left in its row. Γ-freeness is exactly what makes every 1 have at most one parent.
    """
    require_gamma_free(m)
    parent_of: Dict[Position, Optional[Position]] = {v: None for v in m.ones}
    for r, c in m.ones:
        above = [rr for rr in m.column(c) if rr > r]
        if above:
            parent_of[(min(above), c)] = (r, c)
        left = [cc for cc in m.row(r) if cc > c]
        if left:
            parent_of[(r, min(left))] = (r, c)
    return LabeledForest.from_parents(parent_of)


def is_complete_by_children(m: BinaryMatrix) -> bool:
    """Non-ambiguous forest (no empty lines) whose vertices all have 0 or 2 children."""
    if has_empty_lines(m) or not is_gamma_free(m):
        return False
    forest = non_ambiguous_forest(m)
    return all(len(forest.children(v)) in (0, 2) for v in forest.vertices)
