"""Sampling support for the semantic checkers.

Validity over a continuum of truth values cannot be decided by enumeration,
so every checker combines two deterministic sources of interpretations:

* the *corner grid* - every slot takes one of the 216 triples whose interval
  endpoints lie in ``{0, 0.5, 1}``; when the full product is larger than the
  cap, a golden-ratio stride through it selects ``cap`` members;
* *random samples* - sample ``k`` is drawn from ``random.Random(f"{seed}:{k}")``
  so any single sample can be replayed from ``(seed, k)`` alone (first-order
  checks add the domain size to the key).

Corners run first, then random samples in index order, and the first failure
is reported. Reports are therefore a function of ``(seed, n_samples)``.
"""

from __future__ import annotations

import json
import math
import random
from dataclasses import dataclass, field
from itertools import product
from typing import Any, Callable, Iterator, Sequence

from .interval import NeutroTriple, UnitInterval, triple_to_json

__all__ = [
    "HOLDS",
    "REFUTED",
    "WITNESS_FOUND",
    "NO_WITNESS",
    "CORNER_VALUES",
    "CORNER_INTERVALS",
    "CORNER_TRIPLES",
    "Counterexample",
    "CheckReport",
    "corner_assignments",
    "sample_rng",
    "random_interval",
    "random_triple",
]

HOLDS = "holds-in-all-samples"
REFUTED = "counterexample-found"
WITNESS_FOUND = "witness-found"
NO_WITNESS = "no-witness-found"

CORNER_VALUES = (0.0, 0.5, 1.0)
CORNER_INTERVALS: tuple[UnitInterval, ...] = tuple(
    UnitInterval(lo, hi) for lo in CORNER_VALUES for hi in CORNER_VALUES if lo <= hi
)
CORNER_TRIPLES: tuple[NeutroTriple, ...] = tuple(
    NeutroTriple(t, i, f) for t, i, f in product(CORNER_INTERVALS, repeat=3)
)

_GOLDEN = (math.sqrt(5) - 1) / 2


def _stride(total: int) -> int:
    step = int(total * _GOLDEN) | 1
    while math.gcd(step, total) != 1:
        step += 2
    return step


def corner_assignments(radices: Sequence[int], cap: int) -> Iterator[tuple[int, ...]]:
    """Yield digit tuples over the mixed-radix space ``radices``.

    The whole space is enumerated in order when it has at most ``cap``
    points; otherwise ``cap`` distinct points are visited along a stride
    coprime to the space size.
    """
    total = math.prod(radices)
    if total <= cap:
        indices: Iterator[int] = iter(range(total))
    else:
        step = _stride(total)
        indices = ((j * step) % total for j in range(cap))
    for idx in indices:
        digits = []
        for r in radices:
            idx, d = divmod(idx, r)
            digits.append(d)
        yield tuple(digits)


def sample_rng(seed: int, index: int, tag: object = None) -> random.Random:
    key = f"{seed}:{index}" if tag is None else f"{seed}:{tag}:{index}"
    return random.Random(key)


def random_interval(rng: random.Random) -> UnitInterval:
    a, b = rng.random(), rng.random()
    return UnitInterval(a, b) if a <= b else UnitInterval(b, a)


def random_triple(rng: random.Random) -> NeutroTriple:
    """Independent T, I, F intervals; no constraint links the components."""
    return NeutroTriple(random_interval(rng), random_interval(rng), random_interval(rng))


def _to_json(obj: Any) -> Any:
    if hasattr(obj, "to_json"):
        return obj.to_json()
    if isinstance(obj, NeutroTriple):
        return triple_to_json(obj)
    if isinstance(obj, dict):
        return {str(k): _to_json(v) for k, v in obj.items()}
    return obj


@dataclass(frozen=True)
class Counterexample:
    """An interpretation together with the values that failed (or, for a
    satisfiability search, succeeded)."""

    interpretation: Any
    values: dict[str, NeutroTriple]
    source: str
    index: int
    domain_size: int | None = None

    def to_json(self) -> dict[str, Any]:
        out = {
            "source": self.source,
            "index": self.index,
            "interpretation": _to_json(self.interpretation),
            "values": {k: triple_to_json(v) for k, v in self.values.items()},
        }
        if self.domain_size is not None:
            out["domain_size"] = self.domain_size
        return out


@dataclass(frozen=True)
class CheckReport:
    """Outcome of a sampled semantic check.

    A ``holds-in-all-samples`` verdict is evidence, not a proof.
    """

    check: str
    subject: str
    verdict: str
    samples_tried: int
    seed: int
    counterexample: Counterexample | None = None
    witness: Counterexample | None = None
    method: str = "corner-grid+random"
    details: dict[str, Any] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        """True for ``holds-in-all-samples`` and ``witness-found``."""
        return self.verdict in (HOLDS, WITNESS_FOUND)

    def to_dict(self) -> dict[str, Any]:
        return {
            "check": self.check,
            "subject": self.subject,
            "verdict": self.verdict,
            "samples_tried": self.samples_tried,
            "seed": self.seed,
            "method": self.method,
            "counterexample": self.counterexample.to_json() if self.counterexample else None,
            "witness": self.witness.to_json() if self.witness else None,
            "details": _to_json(self.details),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2)

    def render_text(self) -> str:
        lines = [f"{self.check}: {self.subject}", f"verdict: {self.verdict} ({self.samples_tried} interpretations, seed {self.seed})"]
        found = self.counterexample or self.witness
        if found is not None:
            label = "counterexample" if self.counterexample else "witness"
            where = f"{found.source} #{found.index}"
            if found.domain_size is not None:
                where += f", domain size {found.domain_size}"
            lines.append(f"{label} ({where}):")
            interp = found.interpretation
            if isinstance(interp, dict):
                for name, v in interp.items():
                    lines.append(f"  {name}: {v}")
            else:
                lines.append(f"  {json.dumps(_to_json(interp), sort_keys=True)}")
            for name, v in found.values.items():
                lines.append(f"  => {name}: {v}")
        return "\n".join(lines)


def first_failure(
    candidates: Iterator[tuple[str, int, Any]],
    test: Callable[[Any], dict[str, NeutroTriple] | None],
) -> tuple[int, tuple[str, int, Any, dict[str, NeutroTriple]] | None]:
    """Run ``test`` over ``candidates`` until it returns values (a failure).

    Returns the number of candidates tried and the first failure, if any.
    """
    tried = 0
    for source, index, interp in candidates:
        tried += 1
        values = test(interp)
        if values is not None:
            return tried, (source, index, interp, values)
    return tried, None
