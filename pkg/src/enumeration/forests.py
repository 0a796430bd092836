# src/enumeration/forests.py
import logging
from itertools import product
from typing import Hashable, Iterable, Iterator, Literal, Optional, Sequence, Tuple

from config import get_settings
from src.bijections import f_convert, is_leftmost_valid, is_properly_labeled
from src.core import LabeledForest, SizeLimitError, eta_points, first_coordinate
from src.core.forest import KeyFn

logger = logging.getLogger(__name__)

ForestKind = Literal["properly-labeled", "leftmost-valid"]

_PREDICATES = {
    "properly-labeled": is_properly_labeled,
    "leftmost-valid": is_leftmost_valid,
}


def enumerate_increasing_forests(labels: Iterable[Hashable], key: Optional[KeyFn] = None) -> Iterator[LabeledForest]:
    """
    Every increasing forest on `labels` under `key`, |labels|! of them.

    The i-th smallest label picks its parent among the smaller labels, or none.
    """
    ordered = sorted(labels, key=key)
    limit = get_settings().FOREST_MAX_LABELS
    if len(ordered) > limit:
        raise SizeLimitError(f"Increasing forests are enumerated up to {limit} labels, got {len(ordered)}")

    choices = [[None, *ordered[:i]] for i in range(len(ordered))]
    for parents in product(*choices):
        yield LabeledForest.from_parents(dict(zip(ordered, parents)), key)


def enumerate_point_forests(eta: Sequence[int], kind: ForestKind) -> Iterator[LabeledForest]:
    """Increasing forests on (P_η, <₁) of the requested class."""
    limit = get_settings().FAMILY_MAX_SIZE
    if len(eta) > limit:
        raise SizeLimitError(f"Point forests are enumerated up to n={limit}, got {len(eta)}")
    try:
        accepts = _PREDICATES[kind]
    except KeyError:
        raise ValueError(f"Unknown forest kind {kind!r}; expected one of {sorted(_PREDICATES)}") from None
    points = eta_points(eta)
    return (f for f in enumerate_increasing_forests(points, key=first_coordinate) if accepts(f))


def brute_force_f_inverse(t: LabeledForest) -> Tuple[LabeledForest, ...]:
    """All leftmost-valid trees on t's vertex set that f_convert maps to t."""
    preimages = []
    for candidate in enumerate_increasing_forests(t.vertices, key=first_coordinate):
        if candidate.is_tree() and is_leftmost_valid(candidate) and f_convert(candidate) == t:
            preimages.append(candidate)
    if len(preimages) != 1:
        logger.warning("Tree %s has %d preimages under f", t.render(), len(preimages))
    return tuple(preimages)
