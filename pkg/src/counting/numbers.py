# src/counting/numbers.py
from math import factorial
from typing import List


class StirlingTable:
    """
    Memoized triangle of Stirling numbers of the second kind.

    Rows are appended on demand with S(n, m) = m·S(n-1, m) + S(n-1, m-1);
    once built, reads are plain list lookups.
    """

    def __init__(self):
        self.rows: List[List[int]] = [[1]]

    def _grow(self, n: int) -> None:
        while len(self.rows) <= n:
            prev = self.rows[-1]
            size = len(prev)
            row = [0] * (size + 1)
            for m in range(1, size + 1):
                row[m] = m * (prev[m] if m < size else 0) + prev[m - 1]
            self.rows.append(row)

    def __call__(self, n: int, m: int) -> int:
        if n < 0 or m < 0:
            raise ValueError(f"Stirling numbers need non-negative arguments, got ({n}, {m})")
        if m > n:
            return 0
        self._grow(n)
        return self.rows[n][m]


_stirling = StirlingTable()


def stirling2(n: int, m: int) -> int:
    return _stirling(n, m)


def _ordered_blocks(n: int, m: int) -> int:
    """m!·S(n+1, m+1): sequences of m disjoint nonempty subsets of {1..n}."""
    return factorial(m) * stirling2(n + 1, m + 1)


def callan_count_by_length(n: int, k: int, m: int) -> int:
    """Number of (n,k)-Callan sequences with exactly m pairs."""
    if m > min(n, k):
        return 0
    return _ordered_blocks(n, m) * _ordered_blocks(k, m)


def poly_bernoulli(n: int, k: int) -> int:
    """B_n^(-k) = Σ_m m!·S(n+1,m+1)·m!·S(k+1,m+1)."""
    if n < 0 or k < 0:
        raise ValueError(f"poly_bernoulli needs n, k >= 0, got ({n}, {k})")
    return sum(callan_count_by_length(n, k, m) for m in range(min(n, k) + 1))


def count_naf(n: int, k: int) -> int:
    """Non-ambiguous forests with an n×k characteristic matrix: Σ_m (m!)²·S(n,m)·S(k,m)."""
    if n < 0 or k < 0:
        raise ValueError(f"count_naf needs n, k >= 0, got ({n}, {k})")
    return sum(factorial(m) ** 2 * stirling2(n, m) * stirling2(k, m) for m in range(min(n, k) + 1))
