"""Independent high-precision oracles used by the tests.

These deliberately avoid the code paths of the package kernels: the I family
comes from the ascending power series summed in mpmath arbitrary precision;
the K family from the integral representation

    K_nu(x) = int_0^inf exp(-x cosh t) cosh(nu t) dt

evaluated with tanh-sinh quadrature after factoring exp(-x) out via
cosh t - 1 = 2 sinh^2(t/2) (keeps the integrand O(1), so the quadrature
tolerance acts relatively). Breakpoints sit at fixed decay depths of the
exponential so the same panel set resolves x from 1e-6 to 600.
"""

from __future__ import annotations

import math

import mpmath as mp

_DECAY_DEPTHS = (0.25, 1.0, 4.0, 16.0, 64.0, 256.0, 800.0)


def oracle_i(nu: int, x: float, dps: int = 25) -> float:
    """Power series sum_m (x/2)^(2m+nu) / (m! (m+nu)!) at high precision."""
    with mp.workdps(dps):
        xm = mp.mpf(x)
        half = xm / 2
        term = half ** nu / mp.factorial(nu)
        total = term
        m = 0
        tiny = mp.mpf(10) ** (-(dps + 5))
        while True:
            m += 1
            term *= half * half / (m * (m + nu))
            total += term
            if abs(term) < tiny * abs(total):
                return float(total)


def oracle_k(nu: int, x: float, dps: int = 20) -> float:
    """Integral representation via tanh-sinh quadrature; returns a float."""
    with mp.workdps(dps):
        xm = mp.mpf(x)
        if nu == 0:
            f = lambda t: mp.exp(-2 * xm * mp.sinh(t / 2) ** 2)
        else:
            f = lambda t: mp.exp(-2 * xm * mp.sinh(t / 2) ** 2) * mp.cosh(t)
        pts = [mp.mpf(0)] + [mp.acosh(1 + mp.mpf(c) / xm) for c in _DECAY_DEPTHS]
        return float(mp.exp(-xm) * mp.quad(f, pts))


def rel_err(value: float, reference: float) -> float:
    if reference == 0.0:
        return abs(value)
    return abs((value - reference) / reference)


def observed_order(residual_coarse: float, residual_fine: float) -> float:
    """Convergence order implied by residuals at steps h and h/2."""
    return math.log2(residual_coarse / residual_fine)
