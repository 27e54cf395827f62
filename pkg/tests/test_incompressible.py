import numpy as np
import pytest

from centralweno.errors import ZeroMeanViolation
from centralweno.experiments import shear_layer_vorticity_averages, taylor_green_vorticity_averages
from centralweno.grid import CellField, Grid2D
from centralweno.incompressible import (
    VelocityField,
    _midpoint_average,
    apply_laplacian,
    discrete_divergence,
    interface_velocities,
    point_values_2d,
    recover_velocities,
    solve_stream_function,
    vorticity_rhs,
    vorticity_velocities,
)

TWO_PI = 2 * np.pi


def square(n):
    return Grid2D.square(0.0, TWO_PI, n)


def test_zero_vorticity_gives_zero_stream_function():
    g = square(16)
    assert np.all(solve_stream_function(np.zeros((16, 16)), g) == 0.0)


def test_poisson_round_trip():
    g = square(32)
    X, Y = g.mesh()
    psi = np.sin(X) * np.sin(Y)
    got = solve_stream_function(-apply_laplacian(psi, g.dx, g.dy), g)
    np.testing.assert_allclose(got, psi, atol=1e-10)


def test_poisson_residual_random(rng):
    g = Grid2D(0.0, 1.0, 24, 0.0, 2.0, 40)
    w = rng.normal(size=(24, 40))
    w -= w.mean()
    psi = solve_stream_function(w, g)
    res = np.max(np.abs(apply_laplacian(psi, g.dx, g.dy) + w))
    assert res <= 1e-10 * np.max(np.abs(w))
    assert abs(psi.mean()) <= 1e-12


def test_poisson_removes_small_mean(rng):
    g = square(16)
    w = rng.normal(size=(16, 16))
    w += 1e-3 - w.mean()
    psi = solve_stream_function(w, g)
    res = apply_laplacian(psi, g.dx, g.dy) + (w - w.mean())
    assert np.max(np.abs(res)) <= 1e-10 * np.max(np.abs(w))


def test_poisson_flags_unremovable_mean(rng):
    # a large offset leaves a rounding residue in the mean after subtraction
    g = square(8)
    w = 1e8 + 1e3 * rng.normal(size=(8, 8))
    with pytest.raises(ZeroMeanViolation):
        solve_stream_function(w, g, mean_tol=1e-300)


def test_velocities_constant_psi():
    g = square(16)
    vel = recover_velocities(np.full((16, 16), 3.0), g)
    assert np.all(vel.u == 0.0) and np.all(vel.v == 0.0)


def test_velocities_linear_psi():
    # psi = y is not periodic, so check the stencil on an interior window directly
    g = Grid2D(0.0, 1.0, 12, 0.0, 1.0, 12)
    X, Y = g.mesh()
    vel = recover_velocities(Y, g)
    inner = (slice(2, -2), slice(2, -2))
    np.testing.assert_allclose(vel.u[inner], 1.0, rtol=1e-12)
    np.testing.assert_allclose(vel.v[inner], 0.0, atol=1e-12)


def test_velocities_fourth_order():
    errs = []
    for n in (32, 64, 128):
        g = square(n)
        X, Y = g.mesh()
        vel = recover_velocities(np.sin(X) * np.sin(Y), g)
        errs.append(np.max(np.abs(vel.u - np.sin(X) * np.cos(Y))))
    assert np.log2(errs[0] / errs[2]) / 2 >= 3.8


def test_gauge_invariance(rng):
    g = square(16)
    psi = rng.normal(size=(16, 16))
    a = recover_velocities(psi, g)
    b = recover_velocities(psi + 7.25, g)
    np.testing.assert_allclose(a.u, b.u, atol=1e-12)
    np.testing.assert_allclose(a.v, b.v, atol=1e-12)


def test_discrete_incompressibility(rng):
    g = Grid2D(0.0, TWO_PI, 32, 0.0, 3.0, 24)
    w = rng.normal(size=(32, 24))
    vel = recover_velocities(solve_stream_function(w - w.mean(), g), g)
    assert np.max(np.abs(discrete_divergence(vel, g))) <= 1e-12 * max(1.0, np.max(np.abs(vel.u)))


def test_midpoint_average_constant():
    f = np.full((6, 5), 2.0)
    out = _midpoint_average(f, 0)
    assert out.shape == (7, 5)
    assert np.all(out == 2.0)


@pytest.mark.parametrize("k", [1, 2, 3])
def test_midpoint_average_exact_on_cubics(k):
    # periodic roll needs an interior window; edges 2..n-2 use only real cells
    x = np.arange(12.0)
    out = _midpoint_average(x**k, 0)
    edges = np.arange(13) - 0.5
    np.testing.assert_allclose(out[2:-2], edges[2:-2] ** k, rtol=1e-13)


def test_midpoint_average_linear_shift():
    dx = 0.25
    x = dx * np.arange(10)
    out = _midpoint_average(x, 0)
    # edge i + 1 sits at x_i + dx/2
    np.testing.assert_allclose(out[3:-2], x[2:-2] + dx / 2, rtol=1e-14)


def test_interface_velocity_shapes():
    g = Grid2D(0.0, 1.0, 8, 0.0, 1.0, 6)
    vel = interface_velocities(VelocityField(np.ones((8, 6)), np.ones((8, 6))))
    assert vel.u_half.shape == (9, 6) and vel.v_half.shape == (8, 7)
    np.testing.assert_array_equal(vel.u_half[0], vel.u_half[-1])
    assert g.nx == 8


def test_point_values_constant():
    g = square(8)
    f = CellField.from_interior(g, np.full((8, 8), 0.3))
    assert np.all(point_values_2d(f) == 0.3)


def test_point_values_approach_linear_weight_formula():
    # with linear weights the point value is the average minus (d2x + d2y) / 24
    def gap(n):
        g = square(n)
        f = CellField.from_interior(g, taylor_green_vorticity_averages(g))
        v = f.interior
        d2 = sum(np.roll(v, 1, a) - 2 * v + np.roll(v, -1, a) for a in (0, 1))
        return np.max(np.abs(point_values_2d(f) - (v - d2 / 24.0)))

    a, b = gap(64), gap(128)
    assert a < 2e-3 and a / b > 3.5


def test_point_values_converge():
    errs = []
    for n in (64, 128, 256):
        g = square(n)
        e = np.arange(n + 1) * g.dx
        avg = -np.outer(np.diff(np.sin(e)), -np.diff(np.cos(e))) / g.dx**2
        X, Y = g.mesh()
        errs.append(np.max(np.abs(point_values_2d(CellField.from_interior(g, avg)) + np.cos(X) * np.sin(Y))))
    assert errs[1] < errs[0] and np.log2(errs[1] / errs[2]) >= 2.5


def test_rhs_of_zero_vorticity():
    g = square(16)
    assert np.all(vorticity_rhs(CellField.from_interior(g, np.zeros((16, 16))), 0.1) == 0.0)


@pytest.mark.parametrize("nu", [0.0, 0.01])
def test_rhs_conserves_mean(nu):
    g = square(32)
    f = CellField.from_interior(g, shear_layer_vorticity_averages(g))
    r = vorticity_rhs(f, nu)
    assert abs(r.sum()) <= 1e-12 * np.abs(r).sum()


def test_taylor_green_rhs_approaches_viscous_decay():
    # the Taylor-Green vortex is a steady Euler flow, so only the viscous term survives
    def gap(n):
        g = square(n)
        f = CellField.from_interior(g, taylor_green_vorticity_averages(g))
        return np.max(np.abs(vorticity_rhs(f, 0.05)[g.interior] + 0.1 * f.interior))

    errs = [gap(n) for n in (32, 64, 128)]
    assert errs[0] > errs[1] > errs[2]
    assert errs[2] < 0.03


def test_rhs_rejects_negative_viscosity():
    g = square(8)
    with pytest.raises(ValueError):
        vorticity_rhs(CellField.from_interior(g, np.zeros((8, 8))), -1.0)


def test_taylor_green_velocities():
    g = square(64)
    vel = vorticity_velocities(CellField.from_interior(g, taylor_green_vorticity_averages(g)))
    X, Y = g.mesh()
    assert np.max(np.abs(vel.u + np.cos(X) * np.sin(Y))) < 1e-3
