"""Truth functions of the five connectives on :class:`NeutroTriple` values.

Negation, conjunction and disjunction have one interval form. For the
implication rows ``min(1, 1 - a + b)`` (truth, indeterminacy) and
``max(0, b - a)`` (falsity) two interval readings are provided.

``RESIDUAL`` (default)
    With ``L(a, b) = min(1, 1 - a + b)`` applied to endpoints::

        t(p -> q) = [min(L(p.lo, q.lo), L(p.hi, q.hi)), L(p.hi, q.hi)]

    and likewise for indeterminacy. Falsity uses the mirrored form
    ``[D(p.lo, q.lo), max(D(p.lo, q.lo), D(p.hi, q.hi))]`` with
    ``D(a, b) = max(0, b - a)``. This is the residuum of the endpointwise
    Lukasiewicz conjunction on intervals, so ``p -> q`` is designated
    exactly when ``p <= q``, and it reduces to the scalar rows on degenerate
    intervals. Biimplication is ``(p -> q) & (q -> p)``, which is the
    scalar biimplication row on degenerate intervals.

``MOORE``
    The rows are composed from :func:`iv_add` / :func:`iv_sub` and then
    clamped. ``1 - t + t`` widens under this arithmetic, so ``p -> p`` is
    not designated once ``t`` has positive width.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .interval import (
    ONE,
    ZERO,
    Interval,
    NeutroTriple,
    UnitInterval,
    iv_add,
    iv_clamp01,
    iv_max,
    iv_min,
    iv_sub,
)

__all__ = [
    "Connectives",
    "RESIDUAL",
    "MOORE",
    "get_connectives",
    "TOP",
    "BOTTOM",
    "neg",
    "conj",
    "disj",
]

TOP = ONE
BOTTOM = ZERO

_ONE = Interval(1.0, 1.0)
_ZERO = Interval(0.0, 0.0)


def neg(p: NeutroTriple) -> NeutroTriple:
    return NeutroTriple(p.f, UnitInterval(1.0 - p.i.hi, 1.0 - p.i.lo), p.t)


def conj(p: NeutroTriple, q: NeutroTriple) -> NeutroTriple:
    return NeutroTriple(
        UnitInterval(min(p.t.lo, q.t.lo), min(p.t.hi, q.t.hi)),
        UnitInterval(min(p.i.lo, q.i.lo), min(p.i.hi, q.i.hi)),
        UnitInterval(max(p.f.lo, q.f.lo), max(p.f.hi, q.f.hi)),
    )


def disj(p: NeutroTriple, q: NeutroTriple) -> NeutroTriple:
    return NeutroTriple(
        UnitInterval(max(p.t.lo, q.t.lo), max(p.t.hi, q.t.hi)),
        UnitInterval(max(p.i.lo, q.i.lo), max(p.i.hi, q.i.hi)),
        UnitInterval(min(p.f.lo, q.f.lo), min(p.f.hi, q.f.hi)),
    )


def _up(a: UnitInterval, b: UnitInterval) -> UnitInterval:
    lo = min(1.0, 1.0 - a.lo + b.lo)
    hi = min(1.0, 1.0 - a.hi + b.hi)
    # rounding can leave 1 - a + b a hair outside [0, 1]
    hi = max(0.0, hi)
    return UnitInterval(max(0.0, min(lo, hi)), hi)


def _down(a: UnitInterval, b: UnitInterval) -> UnitInterval:
    lo = min(1.0, max(0.0, b.lo - a.lo))
    hi = min(1.0, max(0.0, b.hi - a.hi))
    return UnitInterval(lo, max(lo, hi))


def implies_residual(p: NeutroTriple, q: NeutroTriple) -> NeutroTriple:
    return NeutroTriple(_up(p.t, q.t), _up(p.i, q.i), _down(p.f, q.f))


def iff_residual(p: NeutroTriple, q: NeutroTriple) -> NeutroTriple:
    return conj(implies_residual(p, q), implies_residual(q, p))


def _moore_up(a: Interval, b: Interval) -> Interval:
    return iv_add(iv_sub(_ONE, a), b)


def implies_moore(p: NeutroTriple, q: NeutroTriple) -> NeutroTriple:
    return NeutroTriple(
        iv_clamp01(iv_min(_ONE, _moore_up(p.t, q.t))),
        iv_clamp01(iv_min(_ONE, _moore_up(p.i, q.i))),
        iv_clamp01(iv_max(_ZERO, iv_sub(q.f, p.f))),
    )


def iff_moore(p: NeutroTriple, q: NeutroTriple) -> NeutroTriple:
    return NeutroTriple(
        iv_clamp01(iv_min(_moore_up(p.t, q.t), _moore_up(q.t, p.t))),
        iv_clamp01(iv_min(_moore_up(p.i, q.i), _moore_up(q.i, p.i))),
        iv_clamp01(iv_max(iv_sub(p.f, q.f), iv_sub(q.f, p.f))),
    )


Binary = Callable[[NeutroTriple, NeutroTriple], NeutroTriple]


@dataclass(frozen=True)
class Connectives:
    """A bundle of truth functions used by the evaluators."""

    name: str
    neg: Callable[[NeutroTriple], NeutroTriple]
    conj: Binary
    disj: Binary
    implies: Binary
    iff: Binary


RESIDUAL = Connectives("residual", neg, conj, disj, implies_residual, iff_residual)
MOORE = Connectives("moore", neg, conj, disj, implies_moore, iff_moore)


def get_connectives(name: "str | Connectives") -> Connectives:
    if isinstance(name, Connectives):
        return name
    try:
        return {"residual": RESIDUAL, "moore": MOORE}[name]
    except KeyError:
        raise ValueError(f"unknown arithmetic {name!r}; expected 'residual' or 'moore'") from None
