# src/bijections/pi.py
"""Increasing forests <-> permutations of the vertex set, via pre-order transversal."""
from typing import Dict, Hashable, List, Optional, Sequence, Tuple

from src.core import ForestClassError, InvalidObjectError, LabeledForest
from src.core.forest import KeyFn


def pre_order(t: LabeledForest) -> Tuple[Hashable, ...]:
    """Root first, then the pre-orders of the children's subtrees in decreasing order."""
    if not t.is_tree():
        raise InvalidObjectError(f"pre_order needs a single tree, got {len(t.roots)} components")
    order = []
    stack = [t.root]
    while stack:
        v = stack.pop()
        order.append(v)
        stack.extend(reversed(t.children(v)))
    return tuple(order)


def pi(f: LabeledForest) -> Tuple[Hashable, ...]:
    """Concatenate the pre-orders of the components, roots in decreasing order."""
    if not f.is_increasing():
        raise ForestClassError("pi is only defined on increasing forests")
    return tuple(v for component in f.components() for v in pre_order(component))


def pi_inverse(s: Sequence[Hashable], key: Optional[KeyFn] = None) -> LabeledForest:
    """
    The unique increasing forest F with pi(F) = s.

    Single scan with a stack holding the path from the current root to the last vertex.
    Along that path labels increase, and the parent of the next label x is the deepest
    path vertex smaller than x (or none, when x starts a new component).
    """
    if len(set(s)) != len(s):
        raise InvalidObjectError("pi_inverse needs a sequence without repeated labels")

    def rank(v):
        return key(v) if key is not None else v

    parent_of: Dict[Hashable, Optional[Hashable]] = {}
    path: List[Hashable] = []
    for x in s:
        while path and rank(path[-1]) > rank(x):
            path.pop()
        parent_of[x] = path[-1] if path else None
        path.append(x)
    return LabeledForest.from_parents(parent_of, key)
