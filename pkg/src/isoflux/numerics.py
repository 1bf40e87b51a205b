"""Radial grids, cumulative quadrature and finite-difference stencils.

The cumulative integral I(rho) = int_0^rho f(r) dr is evaluated with
composite 16-point Gauss-Legendre panels between consecutive grid points.
The leading panel (0, rho_1] uses a geometrically graded sub-mesh (ratio
0.5, 40 levels) so integrands with an integrable endpoint singularity of
the r * log^2 r kind are resolved to the stated tolerance; the grading is
sized for leading powers >= 0, which is all the pipeline needs.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

__all__ = [
    "RadialGrid",
    "CumulativeNorm",
    "gauss_panel",
    "cumulative_integral",
    "first_derivative_fd",
    "second_derivative_fd",
]

GL_ORDER = 16
_GL_NODES, _GL_WEIGHTS = np.polynomial.legendre.leggauss(GL_ORDER)
_GL_PAIRS = tuple(zip(_GL_NODES.tolist(), _GL_WEIGHTS.tolist()))

GRADING_RATIO = 0.5
GRADING_LEVELS = 40
NEGATIVE_SAMPLE_TOLERANCE = -1e-14


def _frozen_array(values) -> np.ndarray:
    arr = np.array(values, dtype=float)
    arr.flags.writeable = False
    return arr


@dataclass(frozen=True)
class RadialGrid:
    """Strictly increasing, strictly positive abscissas (at least two)."""

    points: np.ndarray

    def __post_init__(self):
        arr = _frozen_array(self.points)
        if arr.ndim != 1 or arr.size < 2:
            raise ValueError("RadialGrid needs a 1-d array of at least 2 points")
        if not np.all(np.isfinite(arr)):
            raise ValueError("RadialGrid points must be finite")
        if arr[0] <= 0.0:
            raise ValueError("RadialGrid points must be positive")
        if not np.all(np.diff(arr) > 0.0):
            raise ValueError("RadialGrid points must be strictly increasing")
        object.__setattr__(self, "points", arr)

    @classmethod
    def log_spaced(cls, rho_min: float, rho_max: float, n: int) -> "RadialGrid":
        return cls(np.logspace(math.log10(rho_min), math.log10(rho_max), n))

    @classmethod
    def linear(cls, rho_min: float, rho_max: float, n: int) -> "RadialGrid":
        return cls(np.linspace(rho_min, rho_max, n))

    def __len__(self) -> int:
        return int(self.points.size)

    @property
    def rho_min(self) -> float:
        return float(self.points[0])

    @property
    def rho_max(self) -> float:
        return float(self.points[-1])

    @property
    def min_spacing(self) -> float:
        return float(np.min(np.diff(self.points)))


@dataclass(frozen=True)
class CumulativeNorm:
    """Tabulated I(rho_i) = int_0^{rho_i} f, aligned with its grid."""

    grid: RadialGrid
    values: np.ndarray

    def __post_init__(self):
        arr = _frozen_array(self.values)
        if arr.shape != self.grid.points.shape:
            raise ValueError("CumulativeNorm values must align with the grid")
        if not np.all(np.isfinite(arr)):
            raise ValueError("CumulativeNorm values must be finite")
        if arr[0] < 0.0 or np.any(np.diff(arr) < 0.0):
            raise ValueError("CumulativeNorm values must be nonnegative and nondecreasing")
        object.__setattr__(self, "values", arr)


def gauss_panel(f: Callable[[float], float], a: float, b: float) -> float:
    """Fixed-order Gauss-Legendre quadrature of f over [a, b]."""
    if b <= a:
        if b == a:
            return 0.0
        raise ValueError(f"gauss_panel: inverted interval [{a!r}, {b!r}]")
    half = 0.5 * (b - a)
    mid = 0.5 * (a + b)
    return half * math.fsum(w * f(mid + half * t) for t, w in _GL_PAIRS)


def cumulative_integral(
    f: Callable[[float], float],
    grid: RadialGrid,
    small_rho_exponent_hint: float,
) -> CumulativeNorm:
    """Cumulative integral of a nonnegative integrand from 0 along the grid.

    ``small_rho_exponent_hint`` is the leading power p of f near 0 (log
    factors ignored); it must describe an integrable endpoint (p > -1).
    Samples below ``NEGATIVE_SAMPLE_TOLERANCE`` are rejected, small negative
    noise is clamped to zero, so the result is exactly nondecreasing.
    """
    if not math.isfinite(small_rho_exponent_hint) or small_rho_exponent_hint <= -1.0:
        raise ValueError(
            "cumulative_integral: integrand hint must describe an integrable "
            f"endpoint (power > -1), got {small_rho_exponent_hint!r}"
        )

    def sample(r: float) -> float:
        v = f(r)
        if not math.isfinite(v):
            raise ValueError(f"cumulative_integral: non-finite sample f({r!r}) = {v!r}")
        if v < NEGATIVE_SAMPLE_TOLERANCE:
            raise ValueError(f"cumulative_integral: negative sample f({r!r}) = {v!r}")
        return v if v > 0.0 else 0.0

    pts = grid.points
    first = float(pts[0])
    edges = [0.0]
    edges.extend(first * GRADING_RATIO ** j for j in range(GRADING_LEVELS, 0, -1))
    edges.append(first)
    running = math.fsum(gauss_panel(sample, a, b) for a, b in zip(edges[:-1], edges[1:]))

    values = np.empty(pts.size)
    values[0] = running
    for i in range(1, pts.size):
        running += gauss_panel(sample, float(pts[i - 1]), float(pts[i]))
        values[i] = running
    return CumulativeNorm(grid=grid, values=values)


def _check_stencil(rho: float, h: float, reach: float, name: str) -> None:
    if not (math.isfinite(rho) and math.isfinite(h)) or h <= 0.0:
        raise ValueError(f"{name}: need finite rho and step h > 0")
    if rho - reach <= 0.0:
        raise ValueError(f"{name}: stencil [{rho - reach!r}, ...] leaves (0, inf)")


def first_derivative_fd(f: Callable[[float], float], rho: float, h: float) -> float:
    """Central first difference (f(rho+h) - f(rho-h)) / 2h, O(h^2)."""
    _check_stencil(rho, h, h, "first_derivative_fd")
    return (f(rho + h) - f(rho - h)) / (2.0 * h)


def second_derivative_fd(f: Callable[[float], float], rho: float, h: float) -> float:
    """Central second difference (f(rho+h) - 2 f(rho) + f(rho-h)) / h^2, O(h^2)."""
    _check_stencil(rho, h, h, "second_derivative_fd")
    return (f(rho + h) - 2.0 * f(rho) + f(rho - h)) / (h * h)
