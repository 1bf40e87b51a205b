import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from isoflux.bessel import bessel_k0
from isoflux.numerics import (
    CumulativeNorm,
    RadialGrid,
    cumulative_integral,
    first_derivative_fd,
    gauss_panel,
    second_derivative_fd,
)


# ------------------------------------------------------------- RadialGrid

def test_grid_constructors():
    g = RadialGrid.log_spaced(0.01, 10.0, 50)
    assert len(g) == 50 and g.rho_min == pytest.approx(0.01) and g.rho_max == pytest.approx(10.0)
    g = RadialGrid.linear(1.0, 2.0, 11)
    assert g.min_spacing == pytest.approx(0.1)


@pytest.mark.parametrize(
    "points",
    [
        [1.0],                  # too short
        [0.0, 1.0],             # not positive
        [-1.0, 1.0],
        [1.0, 1.0],             # not strictly increasing
        [2.0, 1.0],
        [1.0, math.nan],
        [1.0, math.inf],
    ],
)
def test_grid_rejects_bad_points(points):
    with pytest.raises(ValueError):
        RadialGrid(np.array(points))


def test_grid_points_are_read_only():
    g = RadialGrid.linear(1.0, 2.0, 3)
    with pytest.raises(ValueError):
        g.points[0] = 5.0


def test_cumulative_norm_invariants():
    g = RadialGrid.linear(1.0, 2.0, 3)
    with pytest.raises(ValueError):
        CumulativeNorm(grid=g, values=np.array([0.0, 2.0, 1.0]))  # decreasing
    with pytest.raises(ValueError):
        CumulativeNorm(grid=g, values=np.array([-1.0, 0.0, 1.0]))  # negative start
    with pytest.raises(ValueError):
        CumulativeNorm(grid=g, values=np.array([0.0, 1.0]))  # misaligned


# ----------------------------------------------------- cumulative_integral

def test_linear_integrand_exact():
    grid = RadialGrid.linear(0.1, 1.0, 10)
    norm = cumulative_integral(lambda r: 2.0 * r, grid, 1.0)
    assert norm.values[-1] == pytest.approx(1.0, abs=1e-14)
    assert np.allclose(norm.values, grid.points**2, atol=1e-14)


def test_zero_integrand_all_zeros():
    grid = RadialGrid.log_spaced(0.01, 5.0, 20)
    norm = cumulative_integral(lambda r: 0.0, grid, 0.0)
    assert np.all(norm.values == 0.0)


def test_k0_squared_closed_form():
    # int_0^inf x K0(x)^2 dx = 1/2; the tail beyond rho=40 is ~1e-35
    grid = RadialGrid.log_spaced(0.01, 40.0, 400)
    norm = cumulative_integral(lambda r: r * bessel_k0(r) ** 2, grid, 1.0)
    assert abs(norm.values[-1] - 0.5) <= 1e-8


def test_first_value_covers_leading_panel():
    grid = RadialGrid.linear(0.5, 1.0, 3)
    norm = cumulative_integral(lambda r: 3.0 * r * r, grid, 2.0)
    assert norm.values[0] == pytest.approx(0.125, rel=1e-13)


def test_refinement_stability():
    f = lambda r: r * bessel_k0(r) ** 2
    coarse = cumulative_integral(f, RadialGrid.log_spaced(0.01, 40.0, 200), 1.0)
    fine = cumulative_integral(f, RadialGrid.log_spaced(0.01, 40.0, 400), 1.0)
    assert abs(fine.values[-1] - coarse.values[-1]) <= 1e-9 * coarse.values[-1]


@given(
    c0=st.floats(min_value=0.0, max_value=5.0),
    c1=st.floats(min_value=0.0, max_value=5.0),
    c2=st.floats(min_value=0.0, max_value=5.0),
)
@settings(max_examples=40, deadline=None)
def test_polynomial_cumulative_matches_antiderivative(c0, c1, c2):
    grid = RadialGrid.linear(0.25, 2.0, 7)
    norm = cumulative_integral(lambda r: c0 + c1 * r + c2 * r * r, grid, 0.0)
    exact = c0 * grid.points + 0.5 * c1 * grid.points**2 + c2 * grid.points**3 / 3.0
    scale = 1.0 + exact[-1]
    assert np.all(np.abs(norm.values - exact) <= 1e-12 * scale)
    assert np.all(np.diff(norm.values) >= 0.0)


def test_rejects_negative_samples():
    grid = RadialGrid.linear(0.5, 1.0, 3)
    with pytest.raises(ValueError, match="negative sample"):
        cumulative_integral(lambda r: -1e-3, grid, 0.0)
    # tiny negative noise is clamped, not fatal
    norm = cumulative_integral(lambda r: -5e-15, grid, 0.0)
    assert np.all(norm.values == 0.0)


def test_rejects_nonfinite_samples():
    grid = RadialGrid.linear(0.5, 1.0, 3)
    with pytest.raises(ValueError, match="non-finite"):
        cumulative_integral(lambda r: math.inf, grid, 0.0)


def test_rejects_nonintegrable_hint():
    grid = RadialGrid.linear(0.5, 1.0, 3)
    with pytest.raises(ValueError, match="hint"):
        cumulative_integral(lambda r: r, grid, -1.0)


def test_gauss_panel_degenerate_and_inverted():
    assert gauss_panel(lambda r: 1.0, 2.0, 2.0) == 0.0
    with pytest.raises(ValueError):
        gauss_panel(lambda r: 1.0, 2.0, 1.0)


# ------------------------------------------------------ finite differences

def test_second_derivative_quadratic():
    assert second_derivative_fd(lambda r: r * r, 3.7, 1e-3) == pytest.approx(2.0, abs=1e-6)


def test_second_derivative_cubic():
    assert second_derivative_fd(lambda r: r**3, 2.0, 1e-3) == pytest.approx(12.0, abs=1e-5)


def test_second_derivative_convergence_ratio():
    f = math.sin
    rho = 1.3
    e1 = abs(second_derivative_fd(f, rho, 2e-2) + math.sin(rho))
    e2 = abs(second_derivative_fd(f, rho, 1e-2) + math.sin(rho))
    assert e1 / e2 == pytest.approx(4.0, rel=0.05)


def test_first_derivative_convergence_ratio():
    f = math.exp
    rho = 0.7
    e1 = abs(first_derivative_fd(f, rho, 2e-2) - math.exp(rho))
    e2 = abs(first_derivative_fd(f, rho, 1e-2) - math.exp(rho))
    assert e1 / e2 == pytest.approx(4.0, rel=0.05)


@pytest.mark.parametrize("fd", [first_derivative_fd, second_derivative_fd])
def test_fd_rejects_stencil_leaving_domain(fd):
    with pytest.raises(ValueError):
        fd(lambda r: r, 0.5, 0.5)
    with pytest.raises(ValueError):
        fd(lambda r: r, 1.0, 0.0)
