# src/core/forest.py
from dataclasses import dataclass, field
from functools import cached_property
from typing import Any, Callable, Dict, FrozenSet, Hashable, Iterable, List, Mapping, Optional, Tuple

from .errors import InvalidObjectError

Label = Hashable
KeyFn = Callable[[Any], Any]


@dataclass(frozen=True)
class LabeledForest:
    """
    Unordered rooted forest over arbitrary labels.

    The forest is the pair (vertex set, edge set) with edges directed parent -> child,
    so two forests with the same roots and edges compare equal whatever order they were
    built in. `key` is the total order used for the canonical listing: children of a
    vertex, and the component roots, are enumerated in decreasing key order.
    """

    vertices: FrozenSet[Label]
    edges: FrozenSet[Tuple[Label, Label]] = field(default_factory=frozenset)
    key: Optional[KeyFn] = field(default=None, compare=False, hash=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "vertices", frozenset(self.vertices))
        object.__setattr__(self, "edges", frozenset(self.edges))
        parents: Dict[Label, Label] = {}
        for p, c in self.edges:
            if p not in self.vertices or c not in self.vertices:
                raise InvalidObjectError(f"Edge {p!r} -> {c!r} uses a vertex outside the forest")
            if c in parents:
                raise InvalidObjectError(f"Vertex {c!r} has two parents")
            parents[c] = p

    # ------------------------------------------------------------------ #
    # Construction
    # ------------------------------------------------------------------ #
    @classmethod
    def from_parents(cls, parent_of: Mapping[Label, Optional[Label]], key: Optional[KeyFn] = None) -> "LabeledForest":
        edges = frozenset((p, c) for c, p in parent_of.items() if p is not None)
        return canonicalize_forest(cls(frozenset(parent_of), edges, key))

    @classmethod
    def single(cls, label: Label, key: Optional[KeyFn] = None) -> "LabeledForest":
        return cls(frozenset([label]), frozenset(), key)

    @classmethod
    def union(cls, forests: Iterable["LabeledForest"], key: Optional[KeyFn] = None) -> "LabeledForest":
        vertices: set = set()
        edges: set = set()
        for f in forests:
            if vertices & f.vertices:
                raise InvalidObjectError("Forests in a union must be vertex-disjoint")
            vertices |= f.vertices
            edges |= f.edges
            key = key or f.key
        return cls(frozenset(vertices), frozenset(edges), key)

    @classmethod
    def join(cls, root: Label, subtrees: Iterable["LabeledForest"], key: Optional[KeyFn] = None) -> "LabeledForest":
        """Tree with `root` as new root, joined to the roots of the given trees."""
        subtrees = list(subtrees)
        base = cls.union(subtrees, key)
        if root in base.vertices:
            raise InvalidObjectError(f"Root {root!r} already occurs in the joined trees")
        new_edges = {(root, t.root) for t in subtrees}
        return cls(base.vertices | {root}, base.edges | new_edges, key or base.key)

    # ------------------------------------------------------------------ #
    # Canonical listing
    # ------------------------------------------------------------------ #
    def sort_key(self, v: Label) -> Any:
        return self.key(v) if self.key is not None else v

    def _descending(self, labels: Iterable[Label]) -> Tuple[Label, ...]:
        return tuple(sorted(labels, key=self.sort_key, reverse=True))

    @cached_property
    def _parent(self) -> Dict[Label, Label]:
        return {c: p for p, c in self.edges}

    @cached_property
    def _children(self) -> Dict[Label, Tuple[Label, ...]]:
        grouped: Dict[Label, List[Label]] = {v: [] for v in self.vertices}
        for p, c in self.edges:
            grouped[p].append(c)
        return {v: self._descending(cs) for v, cs in grouped.items()}

    @cached_property
    def roots(self) -> Tuple[Label, ...]:
        return self._descending(v for v in self.vertices if v not in self._parent)

    @property
    def root(self) -> Label:
        if len(self.roots) != 1:
            raise InvalidObjectError(f"Expected a single tree, found {len(self.roots)} components")
        return self.roots[0]

    def children(self, v: Label) -> Tuple[Label, ...]:
        return self._children[v]

    def parent(self, v: Label) -> Optional[Label]:
        return self._parent.get(v)

    def leftmost_child(self, v: Label) -> Optional[Label]:
        kids = self._children[v]
        return kids[0] if kids else None

    def is_tree(self) -> bool:
        return len(self.roots) == 1

    def __len__(self) -> int:
        return len(self.vertices)

    # ------------------------------------------------------------------ #
    # Subtrees and components
    # ------------------------------------------------------------------ #
    def subtree_vertices(self, v: Label) -> FrozenSet[Label]:
        found = set()
        stack = [v]
        while stack:
            u = stack.pop()
            found.add(u)
            stack.extend(self._children[u])
        return frozenset(found)

    def restrict(self, vertices: Iterable[Label]) -> "LabeledForest":
        """Induced sub-forest on the given vertices."""
        keep = frozenset(vertices)
        return LabeledForest(keep, frozenset((p, c) for p, c in self.edges if p in keep and c in keep), self.key)

    def subtree(self, v: Label) -> "LabeledForest":
        """F[v]: the subtree spanned by v and its descendants."""
        return self.restrict(self.subtree_vertices(v))

    def components(self) -> Tuple["LabeledForest", ...]:
        return tuple(self.subtree(r) for r in self.roots)

    def relabel(self, mapping: Callable[[Label], Label], key: Optional[KeyFn] = None) -> "LabeledForest":
        return LabeledForest(
            frozenset(mapping(v) for v in self.vertices),
            frozenset((mapping(p), mapping(c)) for p, c in self.edges),
            key,
        )

    def is_increasing(self) -> bool:
        return all(self.sort_key(p) < self.sort_key(c) for p, c in self.edges)

    def to_records(self) -> List[Dict[str, Any]]:
        """Nested {"label", "children"} dicts for the roots, in canonical order."""

        def node(v: Label) -> Dict[str, Any]:
            return {"label": v, "children": [node(c) for c in self._children[v]]}

        return [node(r) for r in self.roots]

    def render(self) -> str:
        def show(v: Label) -> str:
            kids = self._children[v]
            return repr(v) if not kids else f"{v!r}[{' '.join(show(c) for c in kids)}]"

        return " ".join(show(r) for r in self.roots)


def canonicalize_forest(f: LabeledForest) -> LabeledForest:
    """
    Return the canonical form of f (children and roots listed in decreasing key order).

    Raises InvalidObjectError if the parent map contains a cycle.
    """
    parent = {c: p for p, c in f.edges}
    settled: set = set()
    for start in f.vertices:
        path = []
        on_path = set()
        v = start
        while v is not None and v not in settled:
            if v in on_path:
                raise InvalidObjectError(f"Cycle detected through vertex {v!r}")
            on_path.add(v)
            path.append(v)
            v = parent.get(v)
        settled.update(path)
    return LabeledForest(f.vertices, f.edges, f.key)
