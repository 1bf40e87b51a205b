"""One-parameter family of potentials strictly isospectral to V_B.

Deforming the superpotential with the general Riccati solution (a double
Darboux step: factorize, then refactorize the shared partner) produces,
for each lam > 0,

    V_lam(rho) = V_B(rho) - 4 psi psi' / (N + lam) + 2 psi^4 / (N + lam)^2

with N(rho) = int_0^rho psi^2(r) dr. Equivalently V_lam = V_B minus twice
the second log-derivative of (N + lam); the subtracted-terms form above is
the computational definition, the log form is kept as a cross-check. All
members share the partner V_F = W_gen^2 + W_gen' where

    W_gen = W + psi^2 / (N + lam) = -d/drho ln psi_lam,

and the damped zero mode

    psi_lam = sqrt(lam (lam + 1)) psi / (N + lam)

solves psi_lam'' = V_lam psi_lam, decaying at large rho even when the seed
psi grows (N grows like psi^2 integrated). lam = inf is a first-class
sentinel: every quantity then reduces exactly to its undeformed
counterpart, not to a large-lam approximation.

Two caveats inherited from the construction are deliberately left open:
the sqrt(lam (lam + 1)) prefactor is a normalization constant only when the
seed is normalizable (a growing seed, a1 > 0, is not), and the bracket
k^2 - 2 (ln(N + lam))'' turns negative inside the potential well, so it is
reported as a signed square rather than forced through a square root.
"""

from __future__ import annotations

import bisect
import math
from dataclasses import dataclass, replace

import numpy as np

from .numerics import CumulativeNorm, RadialGrid, cumulative_integral, gauss_panel
from .witten import SchrodingerProfile, potential_bosonic

__all__ = ["INFINITE_LAMBDA", "CoverageError", "DarbouxFamily", "well_position"]

INFINITE_LAMBDA = math.inf

DEFAULT_NORM_RHO_MIN = 0.01
DEFAULT_NORM_RHO_MAX = 40.0
DEFAULT_NORM_POINTS = 2000


class CoverageError(ValueError):
    """Requested radius lies outside the tabulated norm range."""


@dataclass(frozen=True)
class DarbouxFamily:
    """A member of the strictly isospectral family (one lam, shared norm).

    The cumulative norm is lam-independent: build it once for a profile and
    reuse it across family members via :meth:`with_parameter`.
    """

    profile: SchrodingerProfile
    norm: CumulativeNorm
    lam: float

    def __post_init__(self):
        if math.isnan(self.lam) or self.lam <= 0.0:
            raise ValueError(
                f"DarbouxFamily.lam must be > 0 (math.inf recovers the seed), got {self.lam!r}"
            )

    @classmethod
    def build(
        cls,
        profile: SchrodingerProfile,
        lam: float,
        rho_min: float = DEFAULT_NORM_RHO_MIN,
        rho_max: float = DEFAULT_NORM_RHO_MAX,
        points: int = DEFAULT_NORM_POINTS,
    ) -> "DarbouxFamily":
        """Construct a member, tabulating the norm on a log-spaced working grid."""
        grid = RadialGrid.log_spaced(rho_min, rho_max, points)
        # psi^2 ~ rho * log^2(rho) near the origin for any admissible seed
        norm = cumulative_integral(lambda r: profile.psi(r) ** 2, grid, 1.0)
        return cls(profile=profile, norm=norm, lam=lam)

    def with_parameter(self, lam: float) -> "DarbouxFamily":
        """Same profile and norm table, different family parameter."""
        return replace(self, lam=lam)

    @property
    def is_seed(self) -> bool:
        return math.isinf(self.lam)

    def cumulative_norm_at(self, rho: float) -> float:
        """N(rho), from the tabulated left neighbor plus one quadrature panel."""
        if not isinstance(rho, (int, float)) or not math.isfinite(rho) or rho <= 0.0:
            raise ValueError(f"cumulative_norm_at: radius must be finite and > 0, got {rho!r}")
        pts = self.norm.grid.points
        if rho < pts[0] or rho > pts[-1]:
            raise CoverageError(
                f"rho={rho!r} outside the tabulated norm range "
                f"[{pts[0]!r}, {pts[-1]!r}]"
            )
        j = bisect.bisect_right(pts, rho) - 1
        if j == len(pts) - 1:
            return float(self.norm.values[j])
        base = float(self.norm.values[j])
        left = float(pts[j])
        if rho == left:
            return base
        return base + gauss_panel(lambda r: self.profile.psi(r) ** 2, left, rho)

    def _denominator(self, rho: float) -> float:
        return self.cumulative_norm_at(rho) + self.lam

    def potential_iso(self, rho: float) -> float:
        """V_lam(rho); exactly V_B when lam is the infinite sentinel."""
        vb = potential_bosonic(rho, self.profile.k)
        if self.is_seed:
            return vb
        den = self._denominator(rho)
        p = self.profile.psi(rho)
        dp = self.profile.psi_prime(rho)
        return vb - 4.0 * p * dp / den + 2.0 * p ** 4 / (den * den)

    def psi_iso(self, rho: float) -> float:
        """Damped zero mode sqrt(lam (lam+1)) psi / (N + lam); psi at lam = inf."""
        if self.is_seed:
            return self.profile.psi(rho)
        return math.sqrt(self.lam * (self.lam + 1.0)) * self.profile.psi(rho) / self._denominator(rho)

    def w_gen(self, rho: float) -> float:
        """Deformed superpotential W + psi^2/(N + lam) = -(ln psi_iso)'."""
        w = self.profile.superpotential(rho)
        if self.is_seed:
            return w
        return w + self.profile.psi(rho) ** 2 / self._denominator(rho)

    def w_gen_prime(self, rho: float) -> float:
        """Closed-form derivative W' + 2 psi psi'/(N+lam) - psi^4/(N+lam)^2."""
        wp = self.profile.superpotential_prime(rho)
        if self.is_seed:
            return wp
        den = self._denominator(rho)
        p = self.profile.psi(rho)
        dp = self.profile.psi_prime(rho)
        return wp + 2.0 * p * dp / den - p ** 4 / (den * den)

    def k_eff_squared(self, rho: float) -> float:
        """Signed square of the deformed inverse diffusion length.

        Equals k^2 - 2 (ln(N + lam))'' = V_lam + 1/(4 rho^2); negative inside
        the well, where no real diffusion length exists, hence no root is
        taken here.
        """
        if self.is_seed:
            potential_bosonic(rho, self.profile.k)  # same rho validation as the finite branch
            return self.profile.k ** 2
        return self.potential_iso(rho) + 0.25 / (rho * rho)

    def flux_iso(self, rho: float) -> float:
        """Deformed flux psi_iso / sqrt(rho); the seed flux at lam = inf."""
        if not isinstance(rho, (int, float)) or not math.isfinite(rho) or rho <= 0.0:
            raise ValueError(f"flux_iso: radius must be finite and > 0, got {rho!r}")
        return self.psi_iso(rho) / math.sqrt(rho)


def well_position(rhos: np.ndarray, values: np.ndarray) -> float:
    """Abscissa of the interior local minimum of a sampled potential.

    The deformation digs a single well at moderate rho; the centrifugal-like
    -1/(4 rho^2) spike makes the *global* minimum sit at the left edge, so
    the well is identified as an interior sample strictly below both
    neighbors. Raises ValueError unless exactly one such point exists.
    """
    rhos = np.asarray(rhos, dtype=float)
    values = np.asarray(values, dtype=float)
    if rhos.shape != values.shape or rhos.size < 3:
        raise ValueError("well_position needs matching arrays of at least 3 samples")
    inner = (values[1:-1] < values[:-2]) & (values[1:-1] < values[2:])
    idx = np.flatnonzero(inner) + 1
    if idx.size != 1:
        raise ValueError(f"expected exactly one interior local minimum, found {idx.size}")
    return float(rhos[idx[0]])
