"""JSON system files.

A system file looks like::

    {
      "inputs": [{"name": "x", "lo": 0, "hi": 10, "n_points": 201,
                  "terms": {"low": {"t": {"trapezoid": [0, 0, 2, 5]}}}}],
      "output": {"name": "y", "lo": 0, "hi": 10,
                 "terms": {"small": {"t": {"trapezoid": [0, 2, 2, 4], "height": [0.8, 1]}}}},
      "rules": [{"if": ["low"], "then": "small"}],
      "weights": [0.4, 0.3, 0.15, 0.15],
      "fired": [0]
    }

A membership spec has ``t``, ``i`` and ``f`` components. Each component is
one of

* ``{"trapezoid": [a, b, c, d], "height": [lo, hi]}`` (height defaults to 1),
* ``{"const": [lo, hi]}`` or a bare number or pair,
* ``{"lo": [...], "hi": [...]}`` with one value per grid point,
* ``{"complement": C}`` where ``C`` is ``"t"``, ``"i"`` or another component;
  the result is ``[1 - C.hi, 1 - C.lo]``.

``i`` defaults to ``0`` and ``f`` to ``{"complement": "t"}``. In a rule, an
antecedent or consequent is either a term name of its universe or an inline
membership spec.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any, Mapping

import numpy as np

from ..interval import unit
from .engine import InlsSystem, Rule, SynthesisWeights
from .grid import DEFAULT_POINTS, SampledINS, UniverseGrid, mf_trapezoid

__all__ = ["ConfigError", "load_system", "system_from_dict", "membership_from_spec", "load_json"]


class ConfigError(ValueError):
    """An invalid system or input file; ``where`` names the offending entry."""

    def __init__(self, message: str, where: str = ""):
        self.where = where
        super().__init__(f"{where}: {message}" if where else message)


def load_json(path: "str | Path") -> Any:
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise ConfigError(f"cannot read {path}: {exc.strerror}") from exc
    except json.JSONDecodeError as exc:
        raise ConfigError(f"{path} is not valid JSON: {exc}") from exc


def _component(grid: UniverseGrid, spec: Any, done: Mapping[str, tuple], where: str) -> tuple[np.ndarray, np.ndarray]:
    n = grid.n_points
    if isinstance(spec, str):
        if spec not in done:
            raise ConfigError(f"component {spec!r} is not defined before it is referenced", where)
        return done[spec]
    if isinstance(spec, (int, float, list, tuple)):
        spec = {"const": spec}
    if not isinstance(spec, dict):
        raise ConfigError(f"unrecognised membership component {spec!r}", where)
    if "trapezoid" in spec:
        return mf_trapezoid(grid, spec["trapezoid"], spec.get("height", 1.0))
    if "const" in spec:
        iv = unit(spec["const"])
        return np.full(n, iv.lo), np.full(n, iv.hi)
    if "lo" in spec or "hi" in spec:
        lo = np.asarray(spec.get("lo", spec.get("hi")), dtype=float)
        hi = np.asarray(spec.get("hi", spec.get("lo")), dtype=float)
        if lo.shape != (n,) or hi.shape != (n,):
            raise ConfigError(f"explicit curves need {n} values for grid {grid.name!r}", where)
        return lo, hi
    if "complement" in spec:
        lo, hi = _component(grid, spec["complement"], done, where + ".complement")
        return 1.0 - hi, 1.0 - lo
    raise ConfigError(f"membership component needs one of trapezoid, const, lo/hi, complement; got keys {sorted(spec)}", where)


def membership_from_spec(grid: UniverseGrid, spec: Any, where: str = "membership") -> SampledINS:
    """A :class:`SampledINS` on ``grid`` from a membership spec."""
    if not isinstance(spec, dict):
        raise ConfigError("a membership spec must be an object with t, i, f components", where)
    unknown = set(spec) - {"t", "i", "f"}
    if unknown:
        raise ConfigError(f"unknown keys {sorted(unknown)}", where)
    if "t" not in spec:
        raise ConfigError("missing truth component 't'", where)
    done: dict[str, tuple] = {}
    try:
        done["t"] = _component(grid, spec["t"], done, where + ".t")
        done["i"] = _component(grid, spec.get("i", 0.0), done, where + ".i")
        done["f"] = _component(grid, spec.get("f", {"complement": "t"}), done, where + ".f")
        return SampledINS.from_curves(grid, done["t"], done["i"], done["f"])
    except ConfigError:
        raise
    except (ValueError, TypeError) as exc:
        raise ConfigError(str(exc), where) from exc


def _grid(spec: Any, where: str, n_points: int | None) -> UniverseGrid:
    if not isinstance(spec, dict):
        raise ConfigError("a universe must be an object with lo and hi", where)
    try:
        n = n_points if n_points is not None else spec.get("n_points", DEFAULT_POINTS)
        return UniverseGrid(float(spec["lo"]), float(spec["hi"]), n, str(spec.get("name", where)))
    except KeyError as exc:
        raise ConfigError(f"missing {exc.args[0]!r}", where) from None
    except (ValueError, TypeError) as exc:
        raise ConfigError(str(exc), where) from exc


def _terms(grid: UniverseGrid, spec: Mapping, where: str) -> dict[str, SampledINS]:
    terms = spec.get("terms", {})
    if not isinstance(terms, dict):
        raise ConfigError("'terms' must map names to membership specs", where)
    return {name: membership_from_spec(grid, t, f"{where}.terms.{name}") for name, t in terms.items()}


def _resolve(grid: UniverseGrid, terms: Mapping[str, SampledINS], ref: Any, where: str) -> SampledINS:
    if isinstance(ref, str):
        if ref not in terms:
            raise ConfigError(f"unknown term {ref!r} for universe {grid.name!r}", where)
        return terms[ref]
    return membership_from_spec(grid, ref, where)


def system_from_dict(
    cfg: Mapping[str, Any],
    n_points: int | None = None,
    weights: SynthesisWeights | None = None,
) -> InlsSystem:
    """Build a system; ``n_points`` and ``weights`` override the file."""
    if not isinstance(cfg, dict):
        raise ConfigError("a system file must be a JSON object")
    inputs = cfg.get("inputs")
    if not isinstance(inputs, list) or not inputs:
        raise ConfigError("'inputs' must be a non-empty list of universes")
    if "output" not in cfg:
        raise ConfigError("missing 'output' universe")
    grids = [_grid(u, f"inputs[{k}]", n_points) for k, u in enumerate(inputs)]
    in_terms = [_terms(g, u, f"inputs[{k}]") for k, (g, u) in enumerate(zip(grids, inputs))]
    out_grid = _grid(cfg["output"], "output", n_points)
    out_terms = _terms(out_grid, cfg["output"], "output")

    rules_spec = cfg.get("rules")
    if not isinstance(rules_spec, list) or not rules_spec:
        raise ConfigError("'rules' must be a non-empty list")
    rules = []
    for k, r in enumerate(rules_spec):
        where = f"rules[{k}]"
        if not isinstance(r, dict) or "if" not in r or "then" not in r:
            raise ConfigError("a rule needs 'if' and 'then'", where)
        ifs = r["if"] if isinstance(r["if"], list) else [r["if"]]
        if len(ifs) != len(grids):
            raise ConfigError(f"{len(ifs)} antecedents for {len(grids)} inputs", where)
        ants = [_resolve(g, t, a, f"{where}.if[{j}]") for j, (g, t, a) in enumerate(zip(grids, in_terms, ifs))]
        cons = _resolve(out_grid, out_terms, r["then"], f"{where}.then")
        rules.append(Rule(tuple(ants), cons, str(r.get("label", ""))))

    if weights is None:
        w = cfg.get("weights")
        try:
            weights = SynthesisWeights() if w is None else SynthesisWeights(*w)
        except (TypeError, ValueError) as exc:
            raise ConfigError(str(exc), "weights") from exc
    try:
        return InlsSystem(tuple(grids), out_grid, tuple(rules), weights, cfg.get("fired"))
    except (TypeError, ValueError) as exc:
        raise ConfigError(str(exc)) from exc


def load_system(path: "str | Path", n_points: int | None = None, weights: SynthesisWeights | None = None) -> InlsSystem:
    return system_from_dict(load_json(path), n_points=n_points, weights=weights)
