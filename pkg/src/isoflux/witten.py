"""Factorization layer: self-adjoint form, superpotential, partner potential.

Substituting phi = rho^{-1/2} psi removes the first-derivative term of the
radial diffusion equation and leaves a zero-energy Schrodinger form

    psi'' = V_B(rho) psi,      V_B(rho) = k^2 - 1/(4 rho^2).

A nodeless psi defines the superpotential W = -psi'/psi, which satisfies the
Riccati relation V_B = W^2 - W' and factorizes the problem through the
first-order operators A1 = d/drho + W and A2 = d/drho - W (A1 annihilates
psi, and -A2 A1 reproduces -d^2/drho^2 + V_B). Flipping the sign of the
derivative term yields the partner potential V_F = W^2 + W' = 2 W^2 - V_B.

W is singular at the origin like -1/(2 rho); the line source sits there, so
every operation simply requires rho > 0. W' is always produced from the
Riccati closed form W^2 - V_B, never by numerical differentiation --
finite differences are reserved for the verification layer.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .diffusion import Superposition, flux_general, flux_general_prime

__all__ = ["potential_bosonic", "SchrodingerProfile"]


def _require_radius(rho: float, name: str) -> None:
    if not isinstance(rho, (int, float)) or not math.isfinite(rho) or rho <= 0.0:
        raise ValueError(f"{name}: radius must be finite and > 0, got {rho!r}")


def potential_bosonic(rho: float, k: float) -> float:
    """V_B(rho) = k^2 - 1/(4 rho^2)."""
    _require_radius(rho, "potential_bosonic")
    return k * k - 0.25 / (rho * rho)


@dataclass(frozen=True)
class SchrodingerProfile:
    """Zero-energy profile psi = sqrt(rho) (a1 I0(k rho) + a2 K0(k rho)).

    The Superposition invariant (a1, a2 >= 0, not both zero) keeps psi
    strictly positive on (0, inf), so the logarithmic derivative and
    everything built on it stay finite.
    """

    k: float
    coefficients: Superposition

    def __post_init__(self):
        if not isinstance(self.k, (int, float)) or not math.isfinite(self.k) or self.k <= 0.0:
            raise ValueError(f"SchrodingerProfile.k must be finite and > 0, got {self.k!r}")

    def psi(self, rho: float) -> float:
        _require_radius(rho, "psi")
        return math.sqrt(rho) * flux_general(rho, self.k, self.coefficients)

    def psi_prime(self, rho: float) -> float:
        """d psi/drho = phi/(2 sqrt(rho)) + sqrt(rho) phi'."""
        _require_radius(rho, "psi_prime")
        root = math.sqrt(rho)
        phi = flux_general(rho, self.k, self.coefficients)
        dphi = flux_general_prime(rho, self.k, self.coefficients)
        return 0.5 * phi / root + root * dphi

    def superpotential(self, rho: float) -> float:
        """W = -psi'/psi."""
        _require_radius(rho, "superpotential")
        return -self.psi_prime(rho) / self.psi(rho)

    def superpotential_prime(self, rho: float) -> float:
        """W' from the Riccati closed form W^2 - V_B."""
        w = self.superpotential(rho)
        return w * w - potential_bosonic(rho, self.k)

    def potential_fermionic(self, rho: float) -> float:
        """Partner potential V_F = W^2 + W' = 2 W^2 - V_B."""
        w = self.superpotential(rho)
        return 2.0 * w * w - potential_bosonic(rho, self.k)

    def apply_a1(self, f: float, f_prime: float, rho: float) -> float:
        """(d/drho + W) acting on a function with value f, derivative f'."""
        return f_prime + self.superpotential(rho) * f

    def apply_a2(self, f: float, f_prime: float, rho: float) -> float:
        """(d/drho - W) acting on a function with value f, derivative f'."""
        return f_prime - self.superpotential(rho) * f
