"""scikit-learn wrapper around a rule system.

The rule base and weights come from the configuration; nothing is learned.
``fit`` compiles and checks the system against the shape of ``X`` so the
regressor can sit in a pipeline or be scored with ``score``.
"""

from __future__ import annotations

from typing import Any

import numpy as np
from sklearn.base import BaseEstimator, RegressorMixin
from sklearn.utils.validation import check_array, check_is_fitted

from .config import load_system, system_from_dict
from .engine import InlsSystem, NoActivatedOutputError, SynthesisWeights, run

__all__ = ["InlsRegressor"]


class InlsRegressor(RegressorMixin, BaseEstimator):
    """Crisp-input predictions from an interval neutrosophic rule system.

    Parameters
    ----------
    system : dict, path or InlsSystem
        System file contents, a path to one, or a built system.
    n_points : int, optional
        Grid resolution override for every universe.
    weights : sequence of four floats, optional
        Synthesis weights override ``(a, b, c, d)``.
    on_empty : {"raise", "nan"}
        What to do with a row for which no rule fires.
    """

    def __init__(self, system: Any = None, n_points: int | None = None, weights=None, on_empty: str = "raise"):
        self.system = system
        self.n_points = n_points
        self.weights = weights
        self.on_empty = on_empty

    def _build(self) -> InlsSystem:
        w = None if self.weights is None else SynthesisWeights(*self.weights)
        if isinstance(self.system, InlsSystem):
            if self.n_points is not None:
                raise ValueError("n_points can only override a system given as a file or dict")
            if w is None:
                return self.system
            return InlsSystem(self.system.input_grids, self.system.output_grid, self.system.rules, w, self.system.fired)
        if isinstance(self.system, dict):
            return system_from_dict(self.system, n_points=self.n_points, weights=w)
        if self.system is None:
            raise ValueError("no system given")
        return load_system(self.system, n_points=self.n_points, weights=w)

    def fit(self, X, y=None):
        if self.on_empty not in ("raise", "nan"):
            raise ValueError(f"on_empty must be 'raise' or 'nan', got {self.on_empty!r}")
        X = check_array(X)
        system = self._build()
        if X.shape[1] != system.n_inputs:
            raise ValueError(f"X has {X.shape[1]} features but the system has {system.n_inputs} inputs")
        self.system_ = system
        self.n_features_in_ = X.shape[1]
        return self

    def predict(self, X) -> np.ndarray:
        check_is_fitted(self, "system_")
        X = check_array(X)
        if X.shape[1] != self.n_features_in_:
            raise ValueError(f"X has {X.shape[1]} features, expected {self.n_features_in_}")
        out = np.empty(X.shape[0])
        for r, row in enumerate(X):
            try:
                out[r], _ = run(self.system_, row.tolist())
            except NoActivatedOutputError:
                if self.on_empty == "raise":
                    raise
                out[r] = np.nan
        return out
