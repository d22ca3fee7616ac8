"""Uniform grids and interval neutrosophic sets sampled on them."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from ..interval import NeutroTriple, UnitInterval, unit

__all__ = [
    "DEFAULT_POINTS",
    "UniverseGrid",
    "SampledINS",
    "mf_trapezoid",
    "trapezoid_shape",
    "spike_input",
]

DEFAULT_POINTS = 201

_COMPONENTS = ("t_lo", "t_hi", "i_lo", "i_hi", "f_lo", "f_hi")


@dataclass(frozen=True)
class UniverseGrid:
    """``n_points`` evenly spaced points from ``lo`` to ``hi`` inclusive."""

    lo: float
    hi: float
    n_points: int = DEFAULT_POINTS
    name: str = "x"
    points: np.ndarray = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        lo, hi = float(self.lo), float(self.hi)
        if not (np.isfinite(lo) and np.isfinite(hi)) or not lo < hi:
            raise ValueError(f"grid {self.name!r}: need finite lo < hi, got [{self.lo}, {self.hi}]")
        if int(self.n_points) != self.n_points or self.n_points < 2:
            raise ValueError(f"grid {self.name!r}: n_points must be an integer >= 2")
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "hi", hi)
        object.__setattr__(self, "n_points", int(self.n_points))
        pts = np.linspace(lo, hi, self.n_points)
        pts.flags.writeable = False
        object.__setattr__(self, "points", pts)

    @property
    def spacing(self) -> float:
        return (self.hi - self.lo) / (self.n_points - 1)

    def with_points(self, n_points: int) -> "UniverseGrid":
        return UniverseGrid(self.lo, self.hi, n_points, self.name)

    def snap_index(self, value: float) -> int:
        """Index of the grid point nearest ``value``; ties go to the lower point."""
        v = float(value)
        slack = 1e-12 * (self.hi - self.lo)
        if not np.isfinite(v) or v < self.lo - slack or v > self.hi + slack:
            raise ValueError(f"value {value} lies outside grid {self.name!r} [{self.lo}, {self.hi}]")
        j = int(np.floor((v - self.lo) / self.spacing))
        j = min(max(j, 0), self.n_points - 1)
        # compare against the stored points so rounding in the division cannot flip a tie
        if j + 1 < self.n_points and abs(self.points[j + 1] - v) < abs(v - self.points[j]):
            j += 1
        elif j > 0 and abs(v - self.points[j - 1]) <= abs(self.points[j] - v):
            j -= 1
        return j

    def snap(self, value: float) -> float:
        return float(self.points[self.snap_index(value)])


def _frozen(a, n: int, label: str) -> np.ndarray:
    arr = np.array(a, dtype=float)
    if arr.ndim == 0:
        arr = np.full(n, float(arr))
    if arr.shape != (n,):
        raise ValueError(f"{label}: expected {n} values, got shape {arr.shape}")
    arr.flags.writeable = False
    return arr


@dataclass(frozen=True, eq=False)
class SampledINS:
    """An interval neutrosophic set given by six curves on a grid.

    ``t_lo[j] <= t_hi[j]`` (and likewise for I and F) at every grid point,
    with all values in ``[0, 1]``. Arrays are stored read-only.
    """

    grid: UniverseGrid
    t_lo: np.ndarray
    t_hi: np.ndarray
    i_lo: np.ndarray
    i_hi: np.ndarray
    f_lo: np.ndarray
    f_hi: np.ndarray

    def __post_init__(self):
        n = self.grid.n_points
        for name in _COMPONENTS:
            object.__setattr__(self, name, _frozen(getattr(self, name), n, name))
        for c in "tif":
            lo, hi = getattr(self, f"{c}_lo"), getattr(self, f"{c}_hi")
            if np.isnan(lo).any() or np.isnan(hi).any():
                raise ValueError(f"{c}: NaN membership value")
            if (lo < 0).any() or (hi > 1).any():
                raise ValueError(f"{c}: membership values must lie in [0, 1]")
            bad = np.flatnonzero(lo > hi)
            if bad.size:
                j = int(bad[0])
                raise ValueError(f"{c}: lower curve above upper curve at point {j} ({lo[j]} > {hi[j]})")

    @classmethod
    def constant(cls, grid: UniverseGrid, value: NeutroTriple) -> "SampledINS":
        return cls(grid, value.t.lo, value.t.hi, value.i.lo, value.i.hi, value.f.lo, value.f.hi)

    @classmethod
    def from_curves(cls, grid: UniverseGrid, t, i=(0.0, 0.0), f=None) -> "SampledINS":
        """Build from ``(lo, hi)`` curve pairs; ``f`` defaults to ``1 - t``."""
        t_lo, t_hi = t
        i_lo, i_hi = i
        if f is None:
            f_lo, f_hi = 1.0 - np.asarray(t_hi, dtype=float), 1.0 - np.asarray(t_lo, dtype=float)
        else:
            f_lo, f_hi = f
        return cls(grid, t_lo, t_hi, i_lo, i_hi, f_lo, f_hi)

    def arrays(self) -> tuple[np.ndarray, ...]:
        return tuple(getattr(self, name) for name in _COMPONENTS)

    def at(self, j: int) -> NeutroTriple:
        return NeutroTriple(
            UnitInterval(float(self.t_lo[j]), float(self.t_hi[j])),
            UnitInterval(float(self.i_lo[j]), float(self.i_hi[j])),
            UnitInterval(float(self.f_lo[j]), float(self.f_hi[j])),
        )

    def __len__(self) -> int:
        return self.grid.n_points

    def __eq__(self, other):
        if not isinstance(other, SampledINS):
            return NotImplemented
        return self.grid == other.grid and all(
            np.array_equal(a, b) for a, b in zip(self.arrays(), other.arrays())
        )

    __hash__ = None


def trapezoid_shape(points: np.ndarray, a: float, b: float, c: float, d: float) -> np.ndarray:
    """Unit-height trapezoid: 0 outside ``[a, d]``, 1 on ``[b, c]``, linear between.

    A vertical edge (``a == b`` or ``c == d``) takes the value 1 at the knot.
    """
    x = np.asarray(points, dtype=float)
    y = np.zeros_like(x)
    if b > a:
        rising = (x > a) & (x < b)
        y[rising] = (x[rising] - a) / (b - a)
    if d > c:
        falling = (x > c) & (x < d)
        y[falling] = (d - x[falling]) / (d - c)
    y[(x >= b) & (x <= c)] = 1.0
    return y


def mf_trapezoid(
    grid: UniverseGrid,
    support: Sequence[float],
    height: "UnitInterval | Sequence[float] | float" = (1.0, 1.0),
) -> tuple[np.ndarray, np.ndarray]:
    """Interval-valued trapezoid on ``grid``.

    Returns the lower and upper curves: the unit trapezoid with knots
    ``support = (a, b, c, d)`` scaled by ``height.lo`` and ``height.hi``.
    """
    if len(support) != 4:
        raise ValueError("a trapezoid needs four knots (a, b, c, d)")
    a, b, c, d = (float(k) for k in support)
    if not a <= b <= c <= d:
        raise ValueError(f"trapezoid knots must satisfy a <= b <= c <= d, got {tuple(support)}")
    if a < grid.lo or d > grid.hi:
        raise ValueError(f"trapezoid support [{a}, {d}] leaves grid {grid.name!r} [{grid.lo}, {grid.hi}]")
    h = unit(height)
    shape = trapezoid_shape(grid.points, a, b, c, d)
    return h.lo * shape, h.hi * shape


def spike_input(grid: UniverseGrid, j: int) -> SampledINS:
    """Set-valued stand-in for the crisp input ``grid.points[j]``.

    T and I are 1 at point ``j`` and 0 elsewhere; F is the reverse.
    """
    if not 0 <= j < grid.n_points:
        raise IndexError(f"grid index {j} out of range")
    one = np.zeros(grid.n_points)
    one[j] = 1.0
    return SampledINS(grid, one, one, one, one, 1.0 - one, 1.0 - one)
