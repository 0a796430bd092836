# src/core/matrix.py
from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, FrozenSet, Iterable, Optional, Tuple

from .errors import InvalidObjectError

Position = Tuple[int, int]


@dataclass(frozen=True)
class BinaryMatrix:
    """
    n×k 0-1 matrix.

    Rows are indexed from the bottom (row 1 is the lowest row) and columns from the
    right (column 1 is the rightmost column). A position is a pair (row, column).
    Translation to the visual top-left layout happens only in parse_matrix / render_matrix.
    """

    n: int
    k: int
    ones: FrozenSet[Position] = field(default_factory=frozenset)

    def __post_init__(self):
        if self.n < 0 or self.k < 0:
            raise InvalidObjectError(f"Matrix dimensions must be non-negative, got {self.n}x{self.k}")
        object.__setattr__(self, "ones", frozenset(self.ones))
        for r, c in self.ones:
            if not (1 <= r <= self.n and 1 <= c <= self.k):
                raise InvalidObjectError(f"Position ({r},{c}) outside a {self.n}x{self.k} matrix")

    @classmethod
    def zeros(cls, n: int, k: int) -> "BinaryMatrix":
        return cls(n, k, frozenset())

    @classmethod
    def from_positions(cls, n: int, k: int, positions: Iterable[Position]) -> "BinaryMatrix":
        return cls(n, k, frozenset(positions))

    def is_one(self, r: int, c: int) -> bool:
        return (r, c) in self.ones

    def row(self, r: int) -> Tuple[int, ...]:
        """Column indices of the 1's in row r, ascending (i.e. right to left)."""
        return tuple(sorted(c for rr, c in self.ones if rr == r))

    def column(self, c: int) -> Tuple[int, ...]:
        """Row indices of the 1's in column c, ascending (i.e. bottom to top)."""
        return tuple(sorted(r for r, cc in self.ones if cc == c))

    @cached_property
    def column_tops(self) -> Dict[int, int]:
        """Column -> row of its highest 1, for every non-all-0 column."""
        tops: Dict[int, int] = {}
        for r, c in self.ones:
            if r > tops.get(c, 0):
                tops[c] = r
        return tops

    # ------------------------------------------------------------------ #
    # Statistics used by the bivariate generating function
    # ------------------------------------------------------------------ #
    @property
    def rows_count(self) -> int:
        return self.n

    @property
    def columns_count(self) -> int:
        return self.k

    @property
    def empty_rows(self) -> int:
        return self.n - len({r for r, _ in self.ones})

    @property
    def empty_columns(self) -> int:
        return self.k - len({c for _, c in self.ones})

    @property
    def top_rows(self) -> int:
        return len(set(self.column_tops.values()))

    def statistics(self) -> Tuple[int, int, int]:
        """(r_t, r_e, c_e) of the matrix."""
        return self.top_rows, self.empty_rows, self.empty_columns

    def sort_key(self) -> str:
        return render_matrix(self)

    def __str__(self) -> str:
        return render_matrix(self)


def render_matrix(m: BinaryMatrix) -> str:
    """Visual text: first line is row n, first character of a line is column k."""
    lines = []
    for r in range(m.n, 0, -1):
        lines.append("".join("1" if (r, c) in m.ones else "0" for c in range(m.k, 0, -1)))
    return "\n".join(lines)


def parse_matrix(text: str, n: Optional[int] = None, k: Optional[int] = None) -> BinaryMatrix:
    """
    Parse newline-separated rows of '0'/'1' characters, top row first.

    Surrounding blank lines are ignored. When n / k are given they must match the text;
    a 0-column matrix has no visible text, so its row count must be declared.
    """
    lines = [line.strip() for line in text.strip().splitlines()]

    if not lines:
        rows = n or 0
        if k not in (None, 0) and rows > 0:
            raise InvalidObjectError(f"Empty text cannot describe a {rows}x{k} matrix")
        return BinaryMatrix.zeros(rows, 0 if rows else (k or 0))

    width = len(lines[0])
    for i, line in enumerate(lines, start=1):
        if len(line) != width:
            raise InvalidObjectError(f"Ragged matrix text: line {i} has {len(line)} cells, expected {width}")
        illegal = set(line) - {"0", "1"}
        if illegal:
            raise InvalidObjectError(f"Illegal characters on line {i}: {''.join(sorted(illegal))!r}")

    height = len(lines)
    if n is not None and n != height:
        raise InvalidObjectError(f"Declared {n} rows but text has {height}")
    if k is not None and k != width:
        raise InvalidObjectError(f"Declared {k} columns but text has {width}")

    ones = set()
    for i, line in enumerate(lines):
        r = height - i
        for j, ch in enumerate(line):
            if ch == "1":
                ones.add((r, width - j))
    return BinaryMatrix(height, width, frozenset(ones))
