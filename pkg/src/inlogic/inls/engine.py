"""The inference pipeline: neutrosophication, clipping, aggregation, type
reduction, synthesization and centroid deneutrosophication.

Every stage is a plain function so that each can be tested against its own
oracle; :func:`run` chains them and keeps the intermediate results.
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass, field, replace
from typing import Sequence, Union

import numpy as np

from ..interval import NeutroTriple, UnitInterval
from .grid import SampledINS, UniverseGrid

__all__ = [
    "SynthesisWeights",
    "DEFAULT_WEIGHTS",
    "FiringStrength",
    "Rule",
    "Crisp",
    "SetValued",
    "InlsSystem",
    "InlsTrace",
    "NoActivatedOutputError",
    "neutrosophify",
    "infer_rule",
    "aggregate",
    "type_reduce",
    "synthesize",
    "deneutrosophify_centroid",
    "trace",
    "run",
]

FiringStrength = NeutroTriple


class NoActivatedOutputError(ArithmeticError):
    """The synthesized output set has zero area, so no centroid exists."""


@dataclass(frozen=True)
class SynthesisWeights:
    """Weights of ``a*T' + b*(1-F') + c*I'/2 + d*(1-I'/2)``."""

    a: float = 0.4
    b: float = 0.3
    c: float = 0.15
    d: float = 0.15

    def __post_init__(self):
        ws = (self.a, self.b, self.c, self.d)
        if any(not (0.0 <= w <= 1.0) for w in ws):
            raise ValueError(f"synthesis weights must lie in [0, 1], got {ws}")
        if abs(sum(ws) - 1.0) > 1e-12:
            raise ValueError(f"synthesis weights must sum to 1, got {sum(ws)!r}")

    @classmethod
    def parse(cls, text: str) -> "SynthesisWeights":
        """From ``"a,b,c,d"``."""
        parts = [p for p in text.replace(" ", "").split(",") if p]
        if len(parts) != 4:
            raise ValueError(f"expected four comma-separated weights, got {text!r}")
        return cls(*(float(p) for p in parts))

    def as_tuple(self) -> tuple[float, float, float, float]:
        return (self.a, self.b, self.c, self.d)


DEFAULT_WEIGHTS = SynthesisWeights()


@dataclass(frozen=True)
class Rule:
    """IF x_1 is A_1 and ... and x_n is A_n THEN y is B."""

    antecedents: tuple[SampledINS, ...]
    consequent: SampledINS
    label: str = ""

    def __post_init__(self):
        object.__setattr__(self, "antecedents", tuple(self.antecedents))
        if not self.antecedents:
            raise ValueError("a rule needs at least one antecedent")


@dataclass(frozen=True)
class Crisp:
    value: float


@dataclass(frozen=True)
class SetValued:
    ins: SampledINS


InlsInput = Union[Crisp, SetValued, float, int, SampledINS]


@dataclass(frozen=True)
class InlsSystem:
    input_grids: tuple[UniverseGrid, ...]
    output_grid: UniverseGrid
    rules: tuple[Rule, ...]
    weights: SynthesisWeights = DEFAULT_WEIGHTS
    fired: tuple[int, ...] | None = None

    def __post_init__(self):
        object.__setattr__(self, "input_grids", tuple(self.input_grids))
        object.__setattr__(self, "rules", tuple(self.rules))
        if not self.input_grids:
            raise ValueError("a system needs at least one input universe")
        if not self.rules:
            raise ValueError("a system needs at least one rule")
        n = len(self.input_grids)
        for k, rule in enumerate(self.rules):
            if len(rule.antecedents) != n:
                raise ValueError(f"rule {k}: {len(rule.antecedents)} antecedents for {n} inputs")
            for grid, ant in zip(self.input_grids, rule.antecedents):
                if ant.grid != grid:
                    raise ValueError(f"rule {k}: antecedent is not sampled on input grid {grid.name!r}")
            if rule.consequent.grid != self.output_grid:
                raise ValueError(f"rule {k}: consequent is not sampled on the output grid")
        if self.fired is not None:
            fired = tuple(int(k) for k in self.fired)
            if not fired:
                raise ValueError("the fired-rule subset is empty")
            for k in fired:
                if not 0 <= k < len(self.rules):
                    raise ValueError(f"fired rule index {k} out of range")
            object.__setattr__(self, "fired", fired)

    @property
    def n_inputs(self) -> int:
        return len(self.input_grids)

    @property
    def fired_indices(self) -> tuple[int, ...]:
        return self.fired if self.fired is not None else tuple(range(len(self.rules)))


def _coerce_inputs(system: InlsSystem, inputs) -> tuple[Union[Crisp, SetValued], ...]:
    if isinstance(inputs, (Crisp, SetValued, SampledINS)) or np.isscalar(inputs):
        inputs = [inputs]
    out = []
    for x in inputs:
        if isinstance(x, (Crisp, SetValued)):
            out.append(x)
        elif isinstance(x, SampledINS):
            out.append(SetValued(x))
        else:
            out.append(Crisp(float(x)))
    if len(out) != system.n_inputs:
        raise ValueError(f"expected {system.n_inputs} inputs, got {len(out)}")
    for grid, x in zip(system.input_grids, out):
        if isinstance(x, SetValued) and x.ins.grid != grid:
            raise ValueError(f"set-valued input is not sampled on grid {grid.name!r}")
        if isinstance(x, Crisp):
            grid.snap_index(x.value)  # range check
    return tuple(out)


def _fold_antecedent(grid: UniverseGrid, x: Union[Crisp, SetValued], a: SampledINS) -> tuple[float, ...]:
    """Six endpoint degrees of one antecedent against one input."""
    if isinstance(x, Crisp):
        j = grid.snap_index(x.value)
        return tuple(float(arr[j]) for arr in a.arrays())
    s = x.ins
    return (
        float(np.max(np.minimum(s.t_lo, a.t_lo))),
        float(np.max(np.minimum(s.t_hi, a.t_hi))),
        float(np.max(np.minimum(s.i_lo, a.i_lo))),
        float(np.max(np.minimum(s.i_hi, a.i_hi))),
        float(np.min(np.maximum(s.f_lo, a.f_lo))),
        float(np.min(np.maximum(s.f_hi, a.f_hi))),
    )


def neutrosophify(system: InlsSystem, inputs, rule_index: int) -> FiringStrength:
    """Firing strength of one rule.

    Crisp inputs read the antecedent at the nearest grid point. Set-valued
    inputs take the sup of min (T, I) or inf of max (F) over the grid. The
    per-antecedent results are then combined with min (T, I) and max (F);
    because min and max separate over a product, this equals the joint fold
    over ``X_1 x ... x X_n``.
    """
    xs = _coerce_inputs(system, inputs)
    rule = system.rules[rule_index]
    parts = [_fold_antecedent(g, x, a) for g, x, a in zip(system.input_grids, xs, rule.antecedents)]
    t_lo, t_hi, i_lo, i_hi = (min(p[k] for p in parts) for k in range(4))
    f_lo, f_hi = (max(p[k] for p in parts) for k in (4, 5))
    return NeutroTriple(UnitInterval(t_lo, t_hi), UnitInterval(i_lo, i_hi), UnitInterval(f_lo, f_hi))


def infer_rule(g: FiringStrength, consequent: SampledINS) -> SampledINS:
    """Clip the consequent: min with ``g`` for T and I, max for F."""
    b = consequent
    return SampledINS(
        b.grid,
        np.minimum(g.t.lo, b.t_lo),
        np.minimum(g.t.hi, b.t_hi),
        np.minimum(g.i.lo, b.i_lo),
        np.minimum(g.i.hi, b.i_hi),
        np.maximum(g.f.lo, b.f_lo),
        np.maximum(g.f.hi, b.f_hi),
    )


def aggregate(outputs: Sequence[SampledINS]) -> SampledINS:
    """Pointwise max of T and I, min of F, over the fired rules."""
    outputs = list(outputs)
    if not outputs:
        raise ValueError("nothing to aggregate")
    grid = outputs[0].grid
    if any(o.grid != grid for o in outputs):
        raise ValueError("aggregated sets must share one grid")
    stack = [np.vstack([o.arrays()[k] for o in outputs]) for k in range(6)]
    return SampledINS(
        grid,
        stack[0].max(axis=0),
        stack[1].max(axis=0),
        stack[2].max(axis=0),
        stack[3].max(axis=0),
        stack[4].min(axis=0),
        stack[5].min(axis=0),
    )


def type_reduce(b: SampledINS) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Midpoint of each interval: ``(T', I', F')``."""
    return (b.t_lo + b.t_hi) / 2, (b.i_lo + b.i_hi) / 2, (b.f_lo + b.f_hi) / 2


def synthesize(tp, ip, fp, w: SynthesisWeights = DEFAULT_WEIGHTS) -> np.ndarray:
    """Collapse a type-1 neutrosophic set to a fuzzy membership curve."""
    tp, ip, fp = (np.asarray(v, dtype=float) for v in (tp, ip, fp))
    for name, v in (("T'", tp), ("I'", ip), ("F'", fp)):
        if ((v < 0) | (v > 1)).any():
            raise ValueError(f"{name} values must lie in [0, 1]")
    out = w.a * tp + w.b * (1.0 - fp) + w.c * (ip / 2) + w.d * (1.0 - ip / 2)
    return np.clip(out, 0.0, 1.0)


def deneutrosophify_centroid(fuzzy, grid: UniverseGrid) -> float:
    """Centre of gravity of ``fuzzy`` over ``grid`` by the composite trapezoidal rule."""
    mu = np.asarray(fuzzy, dtype=float)
    if mu.shape != (grid.n_points,):
        raise ValueError(f"expected {grid.n_points} membership values, got shape {mu.shape}")
    y = grid.points
    area = float(np.trapezoid(mu, y))
    if not area > 0.0:
        raise NoActivatedOutputError("no activated output: the synthesized set has zero area")
    c = float(np.trapezoid(mu * y, y)) / area
    return min(max(c, grid.lo), grid.hi)


@dataclass(frozen=True)
class InlsTrace:
    """Every intermediate result of one :func:`run`."""

    fired: tuple[int, ...]
    firing: tuple[FiringStrength, ...]
    clipped: tuple[SampledINS, ...]
    aggregated: SampledINS
    reduced: tuple[np.ndarray, np.ndarray, np.ndarray]
    synthesized: np.ndarray
    output: float = math.nan
    weights: SynthesisWeights = field(default=DEFAULT_WEIGHTS)

    def columns(self) -> dict[str, np.ndarray]:
        grid = self.aggregated.grid
        cols: dict[str, np.ndarray] = {"y": grid.points}
        names = ("t_lo", "t_hi", "i_lo", "i_hi", "f_lo", "f_hi")
        for k, out in zip(self.fired, self.clipped):
            for name, arr in zip(names, out.arrays()):
                cols[f"rule{k}_{name}"] = arr
        for name, arr in zip(names, self.aggregated.arrays()):
            cols[f"agg_{name}"] = arr
        for name, arr in zip(("t_red", "i_red", "f_red"), self.reduced):
            cols[name] = arr
        cols["membership"] = self.synthesized
        return cols

    def to_csv(self) -> str:
        cols = self.columns()
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(cols)
        for row in zip(*cols.values()):
            writer.writerow(f"{v:.12g}" for v in row)
        return buf.getvalue()

    def summary(self) -> dict:
        return {
            "output": self.output,
            "weights": list(self.weights.as_tuple()),
            "firing": {
                str(k): {"t": [g.t.lo, g.t.hi], "i": [g.i.lo, g.i.hi], "f": [g.f.lo, g.f.hi]}
                for k, g in zip(self.fired, self.firing)
            },
        }


def _silent(b: SampledINS) -> bool:
    return not b.t_hi.any() and bool((b.f_lo == 1.0).all())


def trace(system: InlsSystem, inputs) -> InlsTrace:
    """Run steps 1-4.1 and return the trace with ``output`` left as NaN."""
    xs = _coerce_inputs(system, inputs)
    fired = system.fired_indices
    firing = tuple(neutrosophify(system, xs, k) for k in fired)
    clipped = tuple(infer_rule(g, system.rules[k].consequent) for g, k in zip(firing, fired))
    agg = aggregate(clipped)
    reduced = type_reduce(agg)
    mu = synthesize(*reduced, system.weights)
    return InlsTrace(fired, firing, clipped, agg, reduced, mu, weights=system.weights)


def run(system: InlsSystem, inputs) -> tuple[float, InlsTrace]:
    """Crisp output of ``system`` for ``inputs`` (one per input universe)."""
    tr = trace(system, inputs)
    if _silent(tr.aggregated):
        raise NoActivatedOutputError("no rule fired above zero: aggregated T is 0 and F is 1 everywhere")
    out = deneutrosophify_centroid(tr.synthesized, system.output_grid)
    return out, replace(tr, output=out)
