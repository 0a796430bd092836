# src/core/permpair.py
from dataclasses import dataclass
from typing import FrozenSet, Iterable, NamedTuple, Sequence, Tuple

from .errors import InvalidObjectError


class Point(NamedTuple):
    """A point (a, b) of P_η; in matrix terms the position (row, column)."""

    a: int
    b: int

    def __repr__(self) -> str:
        return f"({self.a},{self.b})"


def first_coordinate(p: Point) -> int:
    """The order <₁ used to build forests on point sets."""
    return p.a


def eta_points(eta: Sequence[int]) -> FrozenSet[Point]:
    """P_η = {(1, η_1), ..., (n, η_n)}."""
    _check_permutation(eta, "eta")
    return frozenset(Point(i, v) for i, v in enumerate(eta, start=1))


def _check_permutation(values: Sequence[int], name: str) -> None:
    if sorted(values) != list(range(1, len(values) + 1)):
        raise InvalidObjectError(f"{name} is not a permutation of 1..{len(values)}: {list(values)}")


@dataclass(frozen=True)
class PointSequence:
    """Ordered distinct points whose coordinates are both permutations."""

    points: Tuple[Point, ...]

    def __post_init__(self):
        pts = tuple(Point(*p) for p in self.points)
        object.__setattr__(self, "points", pts)
        _check_permutation([p.a for p in pts], "first coordinates")
        _check_permutation([p.b for p in pts], "second coordinates")

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def point_set(self) -> FrozenSet[Point]:
        return frozenset(self.points)

    def to_pair(self) -> "PermPair":
        return PermPair(tuple(p.a for p in self.points), tuple(p.b for p in self.points))


@dataclass(frozen=True)
class PermPair:
    """(α, β) ∈ S_n × S_n, identified with the sequence (a_1,b_1), ..., (a_n,b_n)."""

    alpha: Tuple[int, ...]
    beta: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "alpha", tuple(self.alpha))
        object.__setattr__(self, "beta", tuple(self.beta))
        if len(self.alpha) != len(self.beta):
            raise InvalidObjectError(f"alpha and beta differ in length: {len(self.alpha)} vs {len(self.beta)}")
        _check_permutation(self.alpha, "alpha")
        _check_permutation(self.beta, "beta")

    @classmethod
    def from_points(cls, points: Iterable[Tuple[int, int]]) -> "PermPair":
        return PointSequence(tuple(points)).to_pair()

    @property
    def n(self) -> int:
        return len(self.alpha)

    def points(self) -> PointSequence:
        return PointSequence(tuple(Point(a, b) for a, b in zip(self.alpha, self.beta)))

    def point_set(self) -> FrozenSet[Point]:
        return frozenset(self.points().points)

    def eta(self) -> Tuple[int, ...]:
        """The permutation η whose P_η is the point set of this pair."""
        return tuple(b for _, b in sorted(zip(self.alpha, self.beta)))
