# src/enumeration/permutations.py
from collections import Counter
from itertools import permutations, product
from typing import Iterator

from config import get_settings
from src.bijections import has_common_rise
from src.core import PermPair, SizeLimitError


def enumerate_no_common_rise(n: int) -> Iterator[PermPair]:
    """Pairs (α, β) ∈ S_n × S_n with no common rise, lexicographic in (α, β)."""
    limit = get_settings().FAMILY_MAX_SIZE
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    if n > limit:
        raise SizeLimitError(f"Permutation pairs are enumerated up to n={limit}, got {n}")
    perms = list(permutations(range(1, n + 1)))
    for alpha, beta in product(perms, perms):
        pair = PermPair(alpha, beta)
        if not has_common_rise(pair):
            yield pair


def count_no_common_rise_by_eta(n: int) -> Counter:
    return Counter(p.eta() for p in enumerate_no_common_rise(n))
