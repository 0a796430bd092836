# src/enumeration/matrices.py
"""
Exhaustive generators for Γ-free matrices and complete non-ambiguous forests.

Both modes yield matrices in lexicographic order of their text rendering: cells are
visited in visual raster order (top row first, left to right) and 0 is tried before 1.
"""
import logging
from collections import Counter
from typing import Dict, Iterator, List, Tuple

from config import get_settings
from src.core import BinaryMatrix, SizeLimitError
from src.gamma import is_complete_naf, is_gamma_free, non_ambiguous_forest, top_ones

logger = logging.getLogger(__name__)


def _check_cells(n: int, k: int, limit: int, mode: str) -> None:
    if n < 0 or k < 0:
        raise ValueError(f"Matrix dimensions must be non-negative, got {n}x{k}")
    if n * k > limit:
        raise SizeLimitError(f"{mode} enumeration of {n}x{k} matrices exceeds {limit} cells")


def _cells(n: int, k: int) -> List[Tuple[int, int]]:
    """(row, col) positions in visual raster order."""
    return [(r, c) for r in range(n, 0, -1) for c in range(k, 0, -1)]


def _naive(n: int, k: int) -> Iterator[BinaryMatrix]:
    cells = _cells(n, k)
    total = len(cells)
    for mask in range(1 << total):
        ones = frozenset(cells[i] for i in range(total) if mask >> (total - 1 - i) & 1)
        m = BinaryMatrix(n, k, ones)
        if is_gamma_free(m):
            yield m


def _backtrack(n: int, k: int, nonempty_rows: bool = False) -> Iterator[BinaryMatrix]:
    """
    Cell-by-cell search that never extends a partial matrix containing a Γ.

    A column is blocked once one of its 1's gets a 1 to its right; no 1 may be placed
    below a blocked column's 1. Rows are filled top-down, so "below" is always the future
    and a blocked flag per column is all the state needed.
    """
    cells = _cells(n, k)
    blocked: Dict[int, bool] = {c: False for c in range(1, k + 1)}
    ones: List[Tuple[int, int]] = []
    last_in_row: Dict[int, int] = {}

    def extend(i: int) -> Iterator[BinaryMatrix]:
        if i == len(cells):
            yield BinaryMatrix(n, k, frozenset(ones))
            return
        r, c = cells[i]
        row_done = c == 1

        # 0 first
        if not (row_done and nonempty_rows and r not in last_in_row):
            yield from extend(i + 1)

        if blocked[c]:
            return
        previous = last_in_row.get(r)
        if previous is not None:
            blocked[previous] = True
        last_in_row[r] = c
        ones.append((r, c))
        yield from extend(i + 1)
        ones.pop()
        if previous is not None:
            blocked[previous] = False
            last_in_row[r] = previous
        else:
            del last_in_row[r]

    yield from extend(0)


def enumerate_gamma_free(n: int, k: int, pruned: bool = True) -> Iterator[BinaryMatrix]:
    """Each Γ-free n×k matrix exactly once, in lexicographic text order."""
    settings = get_settings()
    if pruned:
        _check_cells(n, k, settings.PRUNED_MAX_CELLS, "Pruned")
        return _backtrack(n, k)
    _check_cells(n, k, settings.NAIVE_MAX_CELLS, "Naive")
    return _naive(n, k)


def enumerate_gamma_free_with_statistics(n: int, k: int, pruned: bool = True) -> Counter:
    """Counter of (r_t, r_e, c_e) over all Γ-free n×k matrices."""
    stats = Counter(m.statistics() for m in enumerate_gamma_free(n, k, pruned))
    logger.debug("Statistics of %dx%d Γ-free matrices: %d classes", n, k, len(stats))
    return stats


# ---------------------------------------------------------------------- #
# Complete non-ambiguous forests
# ---------------------------------------------------------------------- #
def enumerate_complete_naf(n: int) -> Iterator[BinaryMatrix]:
    """n×n characteristic matrices of complete non-ambiguous forests with n leaves."""
    limit = get_settings().FAMILY_MAX_SIZE
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    if n > limit:
        raise SizeLimitError(f"Complete non-ambiguous forests are enumerated up to n={limit}, got {n}")
    return (m for m in _backtrack(n, n, nonempty_rows=True) if is_complete_naf(m))


def eta_of(m: BinaryMatrix) -> Tuple[int, ...]:
    """η with P_η the top-1 set of a complete non-ambiguous forest: η_i is the column of row i's top-1."""
    return tuple(c for _, c in sorted(top_ones(m)))


def count_complete_naf_by_eta(n: int) -> Counter:
    return Counter(eta_of(m) for m in enumerate_complete_naf(n))


def tau_counts(max_n: int) -> List[int]:
    """τ(0), ..., τ(max_n): complete non-ambiguous forests by number of leaves."""
    return [sum(1 for _ in enumerate_complete_naf(n)) for n in range(max_n + 1)]


def is_single_tree(m: BinaryMatrix) -> bool:
    return non_ambiguous_forest(m).is_tree()


def complete_tree_counts(max_n: int) -> List[int]:
    """b_0, ..., b_max_n: complete non-ambiguous trees with n internal vertices (n+1 leaves)."""
    counts = []
    for n in range(max_n + 1):
        counts.append(sum(1 for m in enumerate_complete_naf(n + 1) if is_single_tree(m)))
        logger.info("Complete non-ambiguous trees with %d internal vertices: %d", n, counts[-1])
    return counts
