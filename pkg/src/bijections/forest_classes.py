# src/bijections/forest_classes.py
"""Predicates for the two classes of forests on point sets."""
from src.core import LabeledForest


def is_properly_labeled(f: LabeledForest) -> bool:
    """
    Parent (a, b) of (c, d) needs a < c and some (x, y) in the subtree of (c, d) with y < b.
    """
    for parent, child in f.edges:
        if not parent.a < child.a:
            return False
        if not any(p.b < parent.b for p in f.subtree_vertices(child)):
            return False
    return True


def is_leftmost_valid(f: LabeledForest) -> bool:
    """Increasing in the first coordinate, and every leftmost child is lower in the second."""
    if not all(parent.a < child.a for parent, child in f.edges):
        return False
    for u in f.vertices:
        kids = f.children(u)
        if kids and not max(kids, key=lambda p: p.a).b < u.b:
            return False
    return True
