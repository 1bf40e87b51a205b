"""Steady thermal-neutron diffusion around an infinite line source.

For rho > 0 the scalar flux obeys the radial equation

    rho^2 phi'' + rho phi' - rho^2 k^2 phi = 0,

whose general solution is phi = a1 I0(k rho) + a2 K0(k rho) with k the
inverse diffusion length. The physically decaying solution is the K0 branch,
normalized by the pillbox balance: the net diffusive current through a small
cylinder around the source must equal the emission rate S0 per unit length,
which fixes phi = S0 / (2 pi D) K0(k rho).

Units are a single consistent set carried as documentation (lengths,
1/length for cross sections); no runtime unit system is attached.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .bessel import bessel_i0, bessel_i1, bessel_k0, bessel_k1

__all__ = [
    "Medium",
    "LineSource",
    "Superposition",
    "flux_general",
    "flux_general_prime",
    "flux_physical",
    "pillbox_flow",
]


def _require_radius(rho: float, name: str) -> None:
    if not isinstance(rho, (int, float)) or not math.isfinite(rho) or rho <= 0.0:
        raise ValueError(f"{name}: radius must be finite and > 0, got {rho!r}")


@dataclass(frozen=True)
class Medium:
    """Diffusing material: scattering mean free path, scatterer atomic
    number and macroscopic absorption cross section."""

    lambda_s: float
    atomic_number: float
    sigma_a: float

    def __post_init__(self):
        for name in ("lambda_s", "atomic_number", "sigma_a"):
            v = getattr(self, name)
            if not isinstance(v, (int, float)) or not math.isfinite(v):
                raise ValueError(f"Medium.{name} must be finite, got {v!r}")
        if self.lambda_s <= 0.0:
            raise ValueError("Medium.lambda_s must be > 0")
        if self.sigma_a <= 0.0:
            raise ValueError("Medium.sigma_a must be > 0")
        if self.atomic_number < 1.0:
            raise ValueError("Medium.atomic_number must be >= 1")

    @property
    def diffusion_constant(self) -> float:
        """D = lambda_s / (3 (1 - 2/(3A))); tends to lambda_s/3 for heavy A."""
        return self.lambda_s / (3.0 * (1.0 - 2.0 / (3.0 * self.atomic_number)))

    @property
    def inverse_diffusion_length(self) -> float:
        """k = sqrt(sigma_a / D)."""
        return math.sqrt(self.sigma_a / self.diffusion_constant)


@dataclass(frozen=True)
class LineSource:
    """Emission strength s0: neutrons per unit length per unit time."""

    s0: float

    def __post_init__(self):
        if not isinstance(self.s0, (int, float)) or not math.isfinite(self.s0) or self.s0 <= 0.0:
            raise ValueError(f"LineSource.s0 must be finite and > 0, got {self.s0!r}")


@dataclass(frozen=True)
class Superposition:
    """Coefficients of a1 I0 + a2 K0.

    Both coefficients are kept nonnegative (not both zero) so the combined
    solution has no zeros on (0, inf); the factorization layer relies on
    that nodelessness.
    """

    a1: float
    a2: float

    def __post_init__(self):
        for name in ("a1", "a2"):
            v = getattr(self, name)
            if not isinstance(v, (int, float)) or not math.isfinite(v) or v < 0.0:
                raise ValueError(f"Superposition.{name} must be finite and >= 0, got {v!r}")
        if self.a1 == 0.0 and self.a2 == 0.0:
            raise ValueError("Superposition coefficients must not both be zero")


def flux_general(rho: float, k: float, c: Superposition) -> float:
    """General radial solution a1 I0(k rho) + a2 K0(k rho)."""
    _require_radius(rho, "flux_general")
    if not math.isfinite(k) or k <= 0.0:
        raise ValueError(f"flux_general: k must be finite and > 0, got {k!r}")
    x = k * rho
    return c.a1 * bessel_i0(x) + c.a2 * bessel_k0(x)


def flux_general_prime(rho: float, k: float, c: Superposition) -> float:
    """d/drho of flux_general, via I0' = I1 and K0' = -K1."""
    _require_radius(rho, "flux_general_prime")
    if not math.isfinite(k) or k <= 0.0:
        raise ValueError(f"flux_general_prime: k must be finite and > 0, got {k!r}")
    x = k * rho
    return k * (c.a1 * bessel_i1(x) - c.a2 * bessel_k1(x))


def flux_physical(rho: float, medium: Medium, source: LineSource) -> float:
    """Decaying line-source flux S0 / (2 pi D) * K0(k rho)."""
    _require_radius(rho, "flux_physical")
    d = medium.diffusion_constant
    return source.s0 / (2.0 * math.pi * d) * bessel_k0(medium.inverse_diffusion_length * rho)


def pillbox_flow(rho: float, medium: Medium, source: LineSource) -> float:
    """Net outward diffusive current through a unit-height cylinder of
    radius rho: 2 pi rho D (-dphi/drho) = S0 * (k rho) K1(k rho).

    Tends to the full source strength S0 as rho -> 0 (no absorption is left
    inside the shrinking pillbox) and decreases monotonically with rho.
    """
    _require_radius(rho, "pillbox_flow")
    x = medium.inverse_diffusion_length * rho
    return source.s0 * x * bessel_k1(x)
