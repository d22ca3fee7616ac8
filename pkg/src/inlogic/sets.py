"""Interval neutrosophic sets and relations over finite universes."""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import reduce
from typing import Any, Callable, Iterable, Mapping

from .connectives import conj, disj
from .interval import (
    ONE,
    ZERO,
    NeutroTriple,
    UnitInterval,
    iv_max,
    iv_min,
    triple_from_json,
    triple_to_json,
)

__all__ = [
    "Universe",
    "InsSet",
    "InsRelation",
    "UniverseMismatchError",
    "triple_leq",
    "ins_is_empty",
    "ins_contains",
    "ins_equal",
    "ins_complement",
    "ins_intersect",
    "ins_union",
    "ins_truth_favorite",
    "ins_false_favorite",
    "rel_compose",
    "set_compose",
    "set_to_json",
    "set_from_json",
    "relation_to_json",
    "relation_from_json",
    "bottom_set",
    "top_set",
]


class UniverseMismatchError(ValueError):
    """Raised when an operation combines values over different universes."""


@dataclass(frozen=True)
class Universe:
    """An ordered, non-empty collection of distinct point labels."""

    points: tuple[str, ...]
    name: str = "X"

    def __post_init__(self) -> None:
        points = tuple(str(p) for p in self.points)
        if not points:
            raise ValueError("a universe needs at least one point")
        if len(set(points)) != len(points):
            raise ValueError(f"duplicate point labels in universe {self.name!r}")
        object.__setattr__(self, "points", points)

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def __contains__(self, point: object) -> bool:
        return point in self.points


def _same(a: Universe, b: Universe, what: str = "universe") -> None:
    if a.points != b.points:
        raise UniverseMismatchError(f"{what} mismatch: {list(a.points)} vs {list(b.points)}")


@dataclass(frozen=True, eq=False)
class InsSet:
    """A total map from the points of a universe to triples.

    Supports ``&`` (intersection), ``|`` (union), ``~`` (complement) and
    ``<=`` (containment).
    """

    universe: Universe
    values: tuple[NeutroTriple, ...]

    def __post_init__(self) -> None:
        values = tuple(self.values)
        if len(values) != len(self.universe):
            raise ValueError(
                f"expected {len(self.universe)} triples for universe {self.universe.name!r}, got {len(values)}"
            )
        if not all(isinstance(v, NeutroTriple) for v in values):
            raise TypeError("InsSet values must be NeutroTriple instances")
        object.__setattr__(self, "values", values)

    @classmethod
    def from_mapping(cls, universe: Universe, values: Mapping[str, NeutroTriple]) -> "InsSet":
        extra = set(values) - set(universe.points)
        if extra:
            raise ValueError(f"points {sorted(extra)} are not in universe {universe.name!r}")
        missing = [p for p in universe.points if p not in values]
        if missing:
            raise ValueError(f"no triple given for points {missing}")
        return cls(universe, tuple(values[p] for p in universe.points))

    @classmethod
    def constant(cls, universe: Universe, value: NeutroTriple) -> "InsSet":
        return cls(universe, (value,) * len(universe))

    def __getitem__(self, point: str) -> NeutroTriple:
        try:
            return self.values[self.universe.points.index(point)]
        except ValueError:
            raise KeyError(point) from None

    def items(self):
        return zip(self.universe.points, self.values)

    def map(self, fn: Callable[[NeutroTriple], NeutroTriple]) -> "InsSet":
        return InsSet(self.universe, tuple(fn(v) for v in self.values))

    def zip_with(self, other: "InsSet", fn: Callable[[NeutroTriple, NeutroTriple], NeutroTriple]) -> "InsSet":
        _same(self.universe, other.universe)
        return InsSet(self.universe, tuple(fn(a, b) for a, b in zip(self.values, other.values)))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, InsSet):
            return NotImplemented
        return self.universe.points == other.universe.points and self.values == other.values

    def __hash__(self) -> int:
        return hash((self.universe.points, self.values))

    def __and__(self, other: "InsSet") -> "InsSet":
        return ins_intersect(self, other)

    def __or__(self, other: "InsSet") -> "InsSet":
        return ins_union(self, other)

    def __invert__(self) -> "InsSet":
        return ins_complement(self)

    def __le__(self, other: "InsSet") -> bool:
        return ins_contains(self, other)

    def __ge__(self, other: "InsSet") -> bool:
        return ins_contains(other, self)


@dataclass(frozen=True, eq=False)
class InsRelation:
    """A total map from ``source x target`` point pairs to triples.

    ``values`` is row-major: ``values[i][j]`` is the triple at
    ``(source.points[i], target.points[j])``.
    """

    source: Universe
    target: Universe
    values: tuple[tuple[NeutroTriple, ...], ...]

    def __post_init__(self) -> None:
        rows = tuple(tuple(row) for row in self.values)
        if len(rows) != len(self.source) or any(len(r) != len(self.target) for r in rows):
            raise ValueError(
                f"relation must be {len(self.source)}x{len(self.target)} "
                f"over {self.source.name!r} x {self.target.name!r}"
            )
        object.__setattr__(self, "values", rows)

    @classmethod
    def from_mapping(
        cls, source: Universe, target: Universe, values: Mapping[tuple[str, str], NeutroTriple]
    ) -> "InsRelation":
        try:
            rows = tuple(tuple(values[(x, y)] for y in target.points) for x in source.points)
        except KeyError as exc:
            raise ValueError(f"relation is missing the pair {exc.args[0]!r}") from None
        return cls(source, target, rows)

    def __getitem__(self, pair: tuple[str, str]) -> NeutroTriple:
        x, y = pair
        try:
            return self.values[self.source.points.index(x)][self.target.points.index(y)]
        except ValueError:
            raise KeyError(pair) from None

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, InsRelation):
            return NotImplemented
        return (
            self.source.points == other.source.points
            and self.target.points == other.target.points
            and self.values == other.values
        )

    def __hash__(self) -> int:
        return hash((self.source.points, self.target.points, self.values))

    def __matmul__(self, other: "InsRelation") -> "InsRelation":
        return rel_compose(self, other)


def triple_leq(a: NeutroTriple, b: NeutroTriple) -> bool:
    """T and I endpointwise below, F endpointwise above."""
    return a <= b


def ins_is_empty(a: InsSet) -> bool:
    """True when every point carries ``T = [0,0], I = [1,1], F = [0,0]``.

    This is a distinguished pattern; it is not the bottom element ``<0,0,1>``.
    """
    pattern = NeutroTriple(0.0, 1.0, 0.0)
    return all(v == pattern for v in a.values)


def ins_contains(a: InsSet, b: InsSet) -> bool:
    """``a`` is contained in ``b``."""
    _same(a.universe, b.universe)
    return all(x <= y for x, y in zip(a.values, b.values))


def ins_equal(a: InsSet, b: InsSet) -> bool:
    return ins_contains(a, b) and ins_contains(b, a)


def _complement(v: NeutroTriple) -> NeutroTriple:
    return NeutroTriple(v.f, UnitInterval(1.0 - v.i.hi, 1.0 - v.i.lo), v.t)


def ins_complement(a: InsSet) -> InsSet:
    return a.map(_complement)


def ins_intersect(a: InsSet, b: InsSet) -> InsSet:
    return a.zip_with(b, conj)


def ins_union(a: InsSet, b: InsSet) -> InsSet:
    return a.zip_with(b, disj)


def _capped_sum(x: UnitInterval, y: UnitInterval) -> UnitInterval:
    return UnitInterval(min(x.lo + y.lo, 1.0), min(x.hi + y.hi, 1.0))


_NO_I = UnitInterval(0.0, 0.0)


def ins_truth_favorite(a: InsSet) -> InsSet:
    """Fold indeterminacy into truth and clear it."""
    return a.map(lambda v: NeutroTriple(_capped_sum(v.t, v.i), _NO_I, v.f))


def ins_false_favorite(a: InsSet) -> InsSet:
    """Fold indeterminacy into falsity and clear it."""
    return a.map(lambda v: NeutroTriple(v.t, _NO_I, _capped_sum(v.f, v.i)))


def _sup_min(pairs: Iterable[tuple[NeutroTriple, NeutroTriple]]) -> NeutroTriple:
    # sup-min on T and I, inf-max on F
    terms = [
        (iv_min(a.t, b.t), iv_min(a.i, b.i), iv_max(a.f, b.f)) for a, b in pairs
    ]
    return NeutroTriple(
        reduce(iv_max, (t for t, _, _ in terms)),
        reduce(iv_max, (i for _, i, _ in terms)),
        reduce(iv_min, (f for _, _, f in terms)),
    )


def rel_compose(r: InsRelation, s: InsRelation) -> InsRelation:
    """Sup-min composition of ``r: X x Y`` with ``s: Y x Z``."""
    _same(r.target, s.source, "relation chaining")
    n_mid = len(r.target)
    rows = tuple(
        tuple(_sup_min((r.values[x][y], s.values[y][z]) for y in range(n_mid)) for z in range(len(s.target)))
        for x in range(len(r.source))
    )
    return InsRelation(r.source, s.target, rows)


def set_compose(a: InsSet, s: InsRelation) -> InsSet:
    """Image of the set ``a`` on ``X`` through ``s: X x Z``."""
    _same(a.universe, s.source)
    values = tuple(
        _sup_min((a.values[x], s.values[x][z]) for x in range(len(a.universe)))
        for z in range(len(s.target))
    )
    return InsSet(s.target, values)


# -- JSON ---------------------------------------------------------------------


def set_to_json(a: InsSet) -> dict[str, Any]:
    return {
        "universe": list(a.universe.points),
        "values": {p: triple_to_json(v) for p, v in a.items()},
    }


def _universe_from_json(raw: Any, name: str) -> Universe:
    if isinstance(raw, dict):
        return Universe(tuple(raw["points"]), raw.get("name", name))
    if isinstance(raw, list):
        return Universe(tuple(raw), name)
    raise ValueError(f"universe must be a list of labels, got {raw!r}")


def set_from_json(obj: Any) -> InsSet:
    """Build an :class:`InsSet` from a dict or JSON string."""
    if isinstance(obj, str):
        obj = json.loads(obj)
    universe = _universe_from_json(obj["universe"], obj.get("name", "X"))
    values = {str(p): triple_from_json(v) for p, v in obj["values"].items()}
    return InsSet.from_mapping(universe, values)


def relation_to_json(r: InsRelation) -> dict[str, Any]:
    return {
        "from": list(r.source.points),
        "to": list(r.target.points),
        "values": {
            x: {y: triple_to_json(r.values[i][j]) for j, y in enumerate(r.target.points)}
            for i, x in enumerate(r.source.points)
        },
    }


def relation_from_json(obj: Any) -> InsRelation:
    if isinstance(obj, str):
        obj = json.loads(obj)
    source = _universe_from_json(obj["from"], "X")
    target = _universe_from_json(obj["to"], "Y")
    values = {}
    for x, row in obj["values"].items():
        for y, v in row.items():
            values[(str(x), str(y))] = triple_from_json(v)
    extra = {k for k in values if k[0] not in source or k[1] not in target}
    if extra:
        raise ValueError(f"pairs {sorted(extra)} fall outside the relation's universes")
    return InsRelation.from_mapping(source, target, values)


# constant sets used by the boundary-condition checks
def bottom_set(universe: Universe) -> InsSet:
    return InsSet.constant(universe, ZERO)


def top_set(universe: Universe) -> InsSet:
    return InsSet.constant(universe, ONE)
