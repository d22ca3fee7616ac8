"""Closed real intervals and truth/indeterminacy/falsity triples.

Endpoints are plain doubles with no outward rounding. Every operation is a
pure function on frozen values.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Iterable, Union

__all__ = [
    "Interval",
    "UnitInterval",
    "NeutroTriple",
    "ZERO",
    "ONE",
    "iv_add",
    "iv_sub",
    "iv_neg",
    "iv_min",
    "iv_max",
    "iv_clamp01",
    "iv_midpoint",
    "iv_approx_eq",
    "unit",
    "triple_approx_eq",
    "triple_from_json",
    "triple_to_json",
]

IntervalLike = Union["Interval", float, int, Iterable[float]]


@dataclass(frozen=True, slots=True, eq=False)
class Interval:
    """Closed interval ``[lo, hi]`` with ``lo <= hi``.

    Equality is endpoint equality, so an :class:`Interval` and a
    :class:`UnitInterval` with the same endpoints compare equal.
    """

    lo: float
    hi: float

    def __post_init__(self) -> None:
        if not self.lo <= self.hi:
            raise ValueError(f"interval lower bound {self.lo!r} exceeds upper bound {self.hi!r}")

    @classmethod
    def point(cls, x: float) -> "Interval":
        return cls(x, x)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Interval):
            return NotImplemented
        return self.lo == other.lo and self.hi == other.hi

    def __hash__(self) -> int:
        return hash((self.lo, self.hi))

    @property
    def width(self) -> float:
        return self.hi - self.lo

    @property
    def is_degenerate(self) -> bool:
        return self.lo == self.hi

    def __le__(self, other: "Interval") -> bool:
        # endpointwise order, not set inclusion
        return self.lo <= other.lo and self.hi <= other.hi

    def __ge__(self, other: "Interval") -> bool:
        return self.lo >= other.lo and self.hi >= other.hi

    def __iter__(self):
        yield self.lo
        yield self.hi

    def __repr__(self) -> str:
        return f"[{self.lo!r}, {self.hi!r}]"


@dataclass(frozen=True, slots=True, repr=False, eq=False)
class UnitInterval(Interval):
    """An interval contained in ``[0, 1]``."""

    def __post_init__(self) -> None:
        if not 0.0 <= self.lo <= self.hi <= 1.0:
            raise ValueError(f"[{self.lo!r}, {self.hi!r}] is not a subinterval of [0, 1]")


def unit(value: IntervalLike) -> UnitInterval:
    """Coerce a scalar, pair or interval into a :class:`UnitInterval`."""
    if isinstance(value, UnitInterval):
        return value
    if isinstance(value, Interval):
        return UnitInterval(value.lo, value.hi)
    if isinstance(value, (int, float)):
        return UnitInterval(float(value), float(value))
    lo, hi = value
    return UnitInterval(float(lo), float(hi))


def iv_add(a: Interval, b: Interval) -> Interval:
    return Interval(a.lo + b.lo, a.hi + b.hi)


def iv_sub(a: Interval, b: Interval) -> Interval:
    return Interval(a.lo - b.hi, a.hi - b.lo)


def iv_neg(a: Interval) -> Interval:
    return Interval(-a.hi, -a.lo)


def iv_min(a: Interval, b: Interval) -> Interval:
    return Interval(min(a.lo, b.lo), min(a.hi, b.hi))


def iv_max(a: Interval, b: Interval) -> Interval:
    return Interval(max(a.lo, b.lo), max(a.hi, b.hi))


def _clip01(x: float) -> float:
    return max(0.0, min(1.0, x))


def iv_clamp01(a: Interval) -> UnitInterval:
    return UnitInterval(_clip01(a.lo), _clip01(a.hi))


def iv_midpoint(a: Interval) -> float:
    return (a.lo + a.hi) / 2


def iv_approx_eq(a: Interval, b: Interval, eps: float = 1e-9) -> bool:
    if eps < 0:
        raise ValueError("eps must be non-negative")
    return abs(a.lo - b.lo) <= eps and abs(a.hi - b.hi) <= eps


@dataclass(frozen=True, slots=True)
class NeutroTriple:
    """A truth, indeterminacy and falsity degree, each a subinterval of [0, 1].

    Components may be given as scalars, pairs or intervals; they are stored
    as :class:`UnitInterval`.

    >>> NeutroTriple(0.5, 0.4, 0.7).t
    [0.5, 0.5]
    """

    t: UnitInterval
    i: UnitInterval
    f: UnitInterval

    def __post_init__(self) -> None:
        for name in ("t", "i", "f"):
            value = getattr(self, name)
            if type(value) is not UnitInterval:
                object.__setattr__(self, name, unit(value))

    def __iter__(self):
        yield self.t
        yield self.i
        yield self.f

    def __le__(self, other: "NeutroTriple") -> bool:
        return self.t <= other.t and self.i <= other.i and self.f >= other.f

    def __ge__(self, other: "NeutroTriple") -> bool:
        return other <= self

    def __str__(self) -> str:
        return " ".join(
            f"{name}=[{_fmt(iv.lo)},{_fmt(iv.hi)}]" for name, iv in zip("tif", self)
        )


def _fmt(x: float) -> str:
    return format(x, ".12g")


ZERO = NeutroTriple(0.0, 0.0, 1.0)
ONE = NeutroTriple(1.0, 1.0, 0.0)


def triple_approx_eq(a: NeutroTriple, b: NeutroTriple, eps: float = 1e-9) -> bool:
    return (
        iv_approx_eq(a.t, b.t, eps)
        and iv_approx_eq(a.i, b.i, eps)
        and iv_approx_eq(a.f, b.f, eps)
    )


def triple_to_json(v: NeutroTriple) -> dict[str, list[float]]:
    return {"t": [v.t.lo, v.t.hi], "i": [v.i.lo, v.i.hi], "f": [v.f.lo, v.f.hi]}


def triple_from_json(obj: Any) -> NeutroTriple:
    """Parse ``{"t": [lo, hi], "i": [lo, hi], "f": [lo, hi]}``.

    Scalars are accepted for degenerate components. Anything outside the
    unit interval raises :class:`ValueError`.
    """
    if not isinstance(obj, dict):
        raise ValueError(f"expected an object with keys t, i, f, got {obj!r}")
    missing = {"t", "i", "f"} - obj.keys()
    if missing:
        raise ValueError(f"triple is missing components {sorted(missing)}")
    parts = []
    for key in ("t", "i", "f"):
        raw = obj[key]
        if isinstance(raw, (int, float)) and not isinstance(raw, bool):
            parts.append(unit(float(raw)))
        elif isinstance(raw, (list, tuple)) and len(raw) == 2:
            parts.append(unit((float(raw[0]), float(raw[1]))))
        else:
            raise ValueError(f"component {key!r} must be a number or [lo, hi], got {raw!r}")
    return NeutroTriple(*parts)
