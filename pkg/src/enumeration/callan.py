# src/enumeration/callan.py
import logging
from itertools import permutations, product
from typing import Iterator, List, Tuple

from config import get_settings
from src.core import CallanPair, CallanSequence, SizeLimitError

logger = logging.getLogger(__name__)

Blocks = Tuple[Tuple[int, ...], ...]


def _set_partitions(n: int) -> Iterator[List[List[int]]]:
    """Set partitions of {1..n} as restricted growth strings."""
    if n == 0:
        yield []
        return
    blocks: List[List[int]] = []

    def place(x: int) -> Iterator[List[List[int]]]:
        if x > n:
            yield [list(b) for b in blocks]
            return
        for block in blocks:
            block.append(x)
            yield from place(x + 1)
            block.pop()
        blocks.append([x])
        yield from place(x + 1)
        blocks.pop()

    yield from place(1)


def ordered_subset_sequences(n: int) -> Iterator[Blocks]:
    """
    Sequences of disjoint nonempty subsets of {1..n}.

    A partition of {1..n+1} marks the block holding the dummy element n+1 as the
    uncovered remainder; the other blocks are then ordered in every way.
    """
    for partition in _set_partitions(n + 1):
        kept = [tuple(b) for b in partition if n + 1 not in b]
        for ordering in permutations(kept):
            yield tuple(ordering)


def enumerate_callan(n: int, k: int) -> Iterator[CallanSequence]:
    """Each (n,k)-Callan sequence exactly once, sorted by its canonical key."""
    limit = get_settings().FAMILY_MAX_SIZE
    if n < 0 or k < 0:
        raise ValueError(f"n and k must be non-negative, got ({n}, {k})")
    if n > limit or k > limit:
        raise SizeLimitError(f"Callan sequences are enumerated up to n, k <= {limit}, got ({n}, {k})")

    by_length_s: dict = {}
    for seq in ordered_subset_sequences(n):
        by_length_s.setdefault(len(seq), []).append(seq)
    by_length_t: dict = {}
    for seq in ordered_subset_sequences(k):
        by_length_t.setdefault(len(seq), []).append(seq)

    found = []
    for m, s_seqs in by_length_s.items():
        for s_seq, t_seq in product(s_seqs, by_length_t.get(m, [])):
            pairs = tuple(CallanPair.of(s, t) for s, t in zip(s_seq, t_seq))
            found.append(CallanSequence(pairs, n, k))
    found.sort(key=CallanSequence.sort_key)
    logger.debug("Enumerated %d (%d,%d)-Callan sequences", len(found), n, k)
    return iter(found)
