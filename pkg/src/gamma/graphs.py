# src/gamma/graphs.py
"""
The auxiliary graphs read off a Γ-free matrix:

  EdgeGraph      G_M: an upward column edge from every non-top 1 to the next 1 above it
  RowPathGraph   H_M: special edges projected onto row indices (disjoint directed paths)
  forest         F_M: regular edges projected onto the (R, C) pairs of H_M's paths
"""
import logging
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, List, Optional, Tuple

from src.core import BinaryMatrix, CallanPair, LabeledForest, Position, min_row_key

from .patterns import require_gamma_free, top_ones

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ColumnEdge:
    start: Position
    end: Position
    special: bool = False

    @property
    def length(self) -> int:
        return self.end[0] - self.start[0]

    def __str__(self) -> str:
        kind = "special" if self.special else "regular"
        return f"({self.start[0]},{self.start[1]}) -> ({self.end[0]},{self.end[1]}) [{kind}]"


@dataclass(frozen=True)
class EdgeGraph:
    vertices: FrozenSet[Position]
    edges: Tuple[ColumnEdge, ...]

    def out_edge(self, v: Position) -> Optional[ColumnEdge]:
        return self._by_start.get(v)

    @property
    def _by_start(self) -> Dict[Position, ColumnEdge]:
        return {e.start: e for e in self.edges}

    def edges_from_row(self, r: int) -> Tuple[ColumnEdge, ...]:
        return tuple(e for e in self.edges if e.start[0] == r)

    def indegree(self, v: Position) -> int:
        return sum(1 for e in self.edges if e.end == v)

    @property
    def special_edges(self) -> Tuple[ColumnEdge, ...]:
        return tuple(e for e in self.edges if e.special)

    @property
    def regular_edges(self) -> Tuple[ColumnEdge, ...]:
        return tuple(e for e in self.edges if not e.special)

    def render(self) -> str:
        return "\n".join(str(e) for e in self.edges)


@dataclass(frozen=True)
class RowPathGraph:
    vertices: FrozenSet[int]
    edges: FrozenSet[Tuple[int, int]] = field(default_factory=frozenset)

    def paths(self) -> List[Tuple[int, ...]]:
        """Path components, each listed bottom-up, ordered by their lowest row."""
        nxt = dict(self.edges)
        has_pred = {t for _, t in self.edges}
        result = []
        for start in sorted(v for v in self.vertices if v not in has_pred):
            path = [start]
            while path[-1] in nxt:
                path.append(nxt[path[-1]])
            result.append(tuple(path))
        return result


def build_edge_graph(m: BinaryMatrix) -> EdgeGraph:
    require_gamma_free(m)

    edges: List[ColumnEdge] = []
    for c in sorted({c for _, c in m.ones}):
        rows = m.column(c)
        edges.extend(ColumnEdge((lo, c), (hi, c)) for lo, hi in zip(rows, rows[1:]))

    top_rows = {r for r, _ in top_ones(m)}
    longest: Dict[int, ColumnEdge] = {}
    for e in edges:
        s = e.start[0]
        if s in top_rows:
            continue
        # lengths from one row are pairwise distinct in a Γ-free matrix
        if s not in longest or e.length > longest[s].length:
            longest[s] = e
    special = set(longest.values())

    flagged = tuple(
        sorted((ColumnEdge(e.start, e.end, e in special) for e in edges), key=lambda e: (e.start, e.end))
    )
    logger.debug("Edge graph: %d edges, %d special", len(flagged), len(special))
    return EdgeGraph(frozenset(m.ones), flagged)


def project_rows(g: EdgeGraph, m: BinaryMatrix) -> Tuple[RowPathGraph, List[CallanPair]]:
    """
    Project the special edges onto rows and read one (R, C) pair per path.

    C is the set of columns of the top-1's in the path's highest row.
    """
    h = RowPathGraph(
        frozenset(r for r, _ in m.ones),
        frozenset((e.start[0], e.end[0]) for e in g.special_edges),
    )
    tops_by_row: Dict[int, List[int]] = {}
    for r, c in top_ones(m):
        tops_by_row.setdefault(r, []).append(c)

    pairs = [CallanPair.of(path, tops_by_row[max(path)]) for path in h.paths()]
    return h, pairs


def build_increasing_forest(g: EdgeGraph, pairs: List[CallanPair]) -> LabeledForest:
    """F_M: one forest edge per regular edge, increasing for the order "min R"."""
    owner = {r: pair for pair in pairs for r in pair.rows}
    parent_of: Dict[CallanPair, Optional[CallanPair]] = {p: None for p in pairs}
    for e in g.regular_edges:
        parent_of[owner[e.end[0]]] = owner[e.start[0]]
    return LabeledForest.from_parents(parent_of, key=min_row_key)
