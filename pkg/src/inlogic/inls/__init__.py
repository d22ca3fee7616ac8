"""Interval neutrosophic rule systems on gridded universes."""

from .config import ConfigError, load_system, membership_from_spec, system_from_dict
from .engine import (
    DEFAULT_WEIGHTS,
    Crisp,
    FiringStrength,
    InlsSystem,
    InlsTrace,
    NoActivatedOutputError,
    Rule,
    SetValued,
    SynthesisWeights,
    aggregate,
    deneutrosophify_centroid,
    infer_rule,
    neutrosophify,
    run,
    synthesize,
    trace,
    type_reduce,
)
from .grid import DEFAULT_POINTS, SampledINS, UniverseGrid, mf_trapezoid, spike_input, trapezoid_shape

__all__ = [
    "ConfigError",
    "load_system",
    "membership_from_spec",
    "system_from_dict",
    "DEFAULT_WEIGHTS",
    "Crisp",
    "FiringStrength",
    "InlsSystem",
    "InlsTrace",
    "NoActivatedOutputError",
    "Rule",
    "SetValued",
    "SynthesisWeights",
    "aggregate",
    "deneutrosophify_centroid",
    "infer_rule",
    "neutrosophify",
    "run",
    "synthesize",
    "trace",
    "type_reduce",
    "DEFAULT_POINTS",
    "SampledINS",
    "UniverseGrid",
    "mf_trapezoid",
    "spike_input",
    "trapezoid_shape",
    "InlsRegressor",
]


def __getattr__(name):
    # scikit-learn is only imported when the estimator is asked for
    if name == "InlsRegressor":
        from .estimator import InlsRegressor

        return InlsRegressor
    raise AttributeError(f"module {__name__!r} has no attribute {name!r}")
