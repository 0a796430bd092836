# src/core/callan.py
from dataclasses import dataclass
from typing import FrozenSet, Iterable, Tuple

from .errors import InvalidObjectError


@dataclass(frozen=True)
class CallanPair:
    """
    One pair (S, T) of a Callan sequence.

    In the matrix bijection S is a set of row indices and T a set of column indices,
    so the same type also carries the (R, C) pairs read off a Γ-free matrix.
    """

    rows: FrozenSet[int]
    cols: FrozenSet[int]

    def __post_init__(self):
        object.__setattr__(self, "rows", frozenset(self.rows))
        object.__setattr__(self, "cols", frozenset(self.cols))

    @classmethod
    def of(cls, rows: Iterable[int], cols: Iterable[int]) -> "CallanPair":
        return cls(frozenset(rows), frozenset(cols))

    @property
    def lowest_row(self) -> int:
        return min(self.rows)

    @property
    def highest_row(self) -> int:
        return max(self.rows)

    def sort_key(self) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
        return tuple(sorted(self.rows)), tuple(sorted(self.cols))

    def __repr__(self) -> str:
        return f"({sorted(self.rows)},{sorted(self.cols)})"


def min_row_key(pair: CallanPair) -> int:
    """The order ≺ on pairs: compare the smallest row index."""
    return min(pair.rows)


@dataclass(frozen=True)
class CallanSequence:
    """Ordered pairs of nonempty, pairwise disjoint S ⊆ {1..n} and T ⊆ {1..k}."""

    pairs: Tuple[CallanPair, ...]
    n: int
    k: int

    def __post_init__(self):
        object.__setattr__(self, "pairs", tuple(self.pairs))
        validate_callan(self.pairs, self.n, self.k)

    def __len__(self) -> int:
        return len(self.pairs)

    def __iter__(self):
        return iter(self.pairs)

    def sort_key(self) -> Tuple:
        return tuple(p.sort_key() for p in self.pairs)

    def covered_rows(self) -> FrozenSet[int]:
        return frozenset().union(*(p.rows for p in self.pairs))

    def covered_cols(self) -> FrozenSet[int]:
        return frozenset().union(*(p.cols for p in self.pairs))


def validate_callan(pairs: Tuple[CallanPair, ...], n: int, k: int) -> None:
    if n < 0 or k < 0:
        raise InvalidObjectError(f"Bounds must be non-negative, got n={n}, k={k}")
    seen_rows: set = set()
    seen_cols: set = set()
    for i, pair in enumerate(pairs, start=1):
        if not pair.rows or not pair.cols:
            raise InvalidObjectError(f"Pair {i} has an empty member set")
        if not all(1 <= r <= n for r in pair.rows):
            raise InvalidObjectError(f"Pair {i}: S-set {sorted(pair.rows)} not inside 1..{n}")
        if not all(1 <= c <= k for c in pair.cols):
            raise InvalidObjectError(f"Pair {i}: T-set {sorted(pair.cols)} not inside 1..{k}")
        if seen_rows & pair.rows:
            raise InvalidObjectError(f"Pair {i}: S-set overlaps an earlier S-set")
        if seen_cols & pair.cols:
            raise InvalidObjectError(f"Pair {i}: T-set overlaps an earlier T-set")
        seen_rows |= pair.rows
        seen_cols |= pair.cols


def is_partition_sequence(s: CallanSequence) -> bool:
    """S-sets partition {1..n} and T-sets partition {1..k}."""
    return s.covered_rows() == frozenset(range(1, s.n + 1)) and s.covered_cols() == frozenset(range(1, s.k + 1))
