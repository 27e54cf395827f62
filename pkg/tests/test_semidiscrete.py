import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

import centralweno.semidiscrete as sd
from centralweno.cweno import interface_values_1d
from centralweno.errors import NonFiniteState
from centralweno.experiments import buckley_leverett
from centralweno.grid import CellField, Grid1D, Grid2D
from centralweno.models import (
    BuckleyLeverettParams,
    advection_model,
    bl_flux_derivative,
    buckley_leverett_model,
    burgers_model,
    euler_wavespeed,
)
from centralweno.semidiscrete import (
    Convexity,
    FluxModel,
    interface_speeds,
    local_speed,
    make_rhs,
    numerical_flux,
    rhs_1d,
    rhs_2d,
)

from conftest import sine_field

finite = st.floats(-100, 100, allow_nan=False)


def zero_flux_model():
    return FluxModel("zero", 1, lambda u: 0.0 * u, lambda u: np.ones(np.shape(u)[1:]))


# --- local speed and flux -----------------------------------------------------


def test_local_speed_examples():
    burgers = burgers_model().max_wavespeed_x
    assert local_speed(np.array([[1.0]]), np.array([[-0.5]]), burgers)[0] == 1.0
    adv = advection_model().max_wavespeed_x
    assert local_speed(np.array([[3.0]]), np.array([[-7.0]]), adv)[0] == 1.0
    state = np.array([[1.0], [0.0], [2.5]])
    a = local_speed(state, state, euler_wavespeed)
    assert a[0] == pytest.approx(np.sqrt(1.4), rel=1e-14)


def test_sampled_speed_sees_interior_peak():
    # |f'| of Buckley-Leverett peaks inside (0, 1); endpoints alone give zero
    ws = lambda u: np.abs(bl_flux_derivative(u[0]))  # noqa: E731
    lo, hi = np.array([[0.0]]), np.array([[1.0]])
    assert local_speed(lo, hi, ws)[0] == 0.0
    assert local_speed(lo, hi, ws, Convexity.SAMPLE_INTERVAL)[0] == pytest.approx(2.0)


@pytest.mark.slow
@pytest.mark.parametrize("gravity", [False, True])
def test_sample_count_is_converged_on_run_states(gravity, monkeypatch):
    r = buckley_leverett(100, t_end=0.1, gravity=gravity)
    st_ = interface_values_1d(r.field)
    ws = lambda u: np.abs(bl_flux_derivative(u[0], gravity))  # noqa: E731
    a33 = local_speed(st_.minus, st_.plus, ws, Convexity.SAMPLE_INTERVAL)
    monkeypatch.setattr(sd, "SPEED_SAMPLES", 1025)
    a1025 = local_speed(st_.minus, st_.plus, ws, Convexity.SAMPLE_INTERVAL)
    assert np.all(a1025 >= a33)
    assert np.max((a1025 - a33) / np.maximum(a1025, 1e-300)) < 1e-3


def test_numerical_flux_examples():
    f = lambda u: u  # noqa: E731
    assert numerical_flux(0.3, 0.3, 5.0, lambda u: u * u) == pytest.approx(0.09)
    assert numerical_flux(0.2, -1.7, 1.0, f) == pytest.approx(0.2)
    assert numerical_flux(0.0, 1.0, 1.0, lambda u: 0.0 * u) == -0.5


@given(finite, finite, st.floats(0.1, 10))
def test_upwind_reduction(um, up, c):
    H = numerical_flux(um, up, c, lambda u: c * u)
    assert H == pytest.approx(c * um, rel=1e-12, abs=1e-10)


# --- 1D right-hand side --------------------------------------------------------


@pytest.mark.parametrize("model", [advection_model(), burgers_model(), buckley_leverett_model()])
def test_constant_field_is_stationary(model):
    g = Grid1D(0.0, 1.0, 16)
    f = CellField.from_interior(g, np.full(16, 0.4))
    assert np.all(rhs_1d(f, model) == 0.0)


@settings(max_examples=100)
@given(arrays(float, 24, elements=st.floats(-2, 2)))
def test_periodic_conservation_burgers(v):
    g = Grid1D(0.0, 1.0, 24)
    r = rhs_1d(CellField.from_interior(g, v), burgers_model())
    total = np.sum(r) * g.dx
    scale = np.sum(np.abs(r)) * g.dx + np.max(np.abs(v)) ** 2
    assert abs(total) <= 1e-13 * scale + 1e-300


@settings(max_examples=50)
@given(arrays(float, 24, elements=st.floats(0, 1)))
def test_periodic_conservation_linear_dissipation(v):
    # the dissipation stencil telescopes for Q linear in (u, u_x)
    model = FluxModel("heat", 1, lambda u: u, lambda u: np.ones(np.shape(u)[1:]),
                      dissipation=lambda u, s: 0.05 * s, dissipation_slope=lambda u: 0.05 + 0 * u)
    g = Grid1D(0.0, 1.0, 24)
    r = rhs_1d(CellField.from_interior(g, v), model)
    assert abs(np.sum(r)) * g.dx <= 1e-13 * (np.sum(np.abs(r)) * g.dx + np.max(np.abs(v))) + 1e-300


def test_rhs_ghosts_are_zero():
    f = sine_field(16)
    r = rhs_1d(f, advection_model())
    g = f.grid.ghost
    assert np.all(r[:, :g] == 0) and np.all(r[:, -g:] == 0)


def test_dissipation_of_zero_flux_operator(rng):
    g = Grid1D(0.0, 1.0, 32)
    model = zero_flux_model()
    for _ in range(50):
        f = CellField.from_interior(g, rng.normal(size=32))
        r = rhs_1d(f, model)[0, g.interior]
        assert np.dot(f.interior[0], r) < 0


def _averaged_operator_error(n):
    f = sine_field(n)
    r = rhs_1d(f, advection_model())[0, f.grid.interior]
    e = f.grid.interfaces
    return np.max(np.abs(r + np.diff(np.sin(e)) / f.grid.dx))


def test_rhs_truncation_third_order():
    ns = [320, 640, 1280]
    errs = [_averaged_operator_error(n) for n in ns]
    assert np.log2(errs[0] / errs[1]) >= 2.7 and np.log2(errs[1] / errs[2]) >= 2.7


def test_rhs_against_point_derivative_is_second_order():
    # -cos(x_j) differs from the averaged operator by dx^2/24 cos(x_j)
    def err(n):
        f = sine_field(n)
        r = rhs_1d(f, advection_model())[0, f.grid.interior]
        return np.max(np.abs(r + np.cos(f.grid.centers)))

    e = [err(n) for n in (1280, 2560)]
    assert np.log2(e[0] / e[1]) == pytest.approx(2.0, abs=0.1)


def test_nan_reports_cell():
    g = Grid1D(0.0, 1.0, 10)
    v = np.zeros(10)
    v[6] = np.nan
    with pytest.raises(NonFiniteState) as info:
        rhs_1d(CellField.from_interior(g, v), burgers_model())
    assert info.value.cell == (0, 6)


def test_make_rhs_matches_direct_call():
    f = sine_field(20)
    fn = make_rhs(f.grid, burgers_model())
    np.testing.assert_array_equal(fn(f.values.copy()), rhs_1d(f.copy(), burgers_model()))


def test_interface_speeds_1d():
    f = sine_field(20)
    (a,) = interface_speeds(f, burgers_model())
    assert 0.9 < a <= 1.0 + 1e-9


def test_buckley_leverett_dissipation_in_rhs():
    g = Grid1D(0.0, 1.0, 40)
    u = 0.5 + 0.2 * np.sin(2 * np.pi * g.centers)
    f = CellField.from_interior(g, u)
    with_q = rhs_1d(f, buckley_leverett_model(BuckleyLeverettParams(0.01)))
    without = rhs_1d(f, buckley_leverett_model(BuckleyLeverettParams(0.0)))
    assert np.max(np.abs(with_q - without)) > 1e-3


# --- 2D right-hand side --------------------------------------------------------


def _x_advection_2d():
    return FluxModel(
        "x-advection",
        1,
        flux_x=lambda u: u,
        max_wavespeed_x=lambda u: np.ones_like(u),
        flux_y=lambda u: 0.0 * u,
        max_wavespeed_y=lambda u: np.zeros_like(u),
    )


def test_2d_reduces_to_1d():
    n = 32
    row = sine_field(n)
    g = Grid2D.square(0.0, 2 * np.pi, n)
    f = CellField.from_interior(g, np.tile(row.interior[0][:, None], (1, 6 + n - 6)))
    r2 = rhs_2d(f, _x_advection_2d())[g.interior]
    r1 = rhs_1d(row, advection_model())[0, row.grid.interior]
    for k in range(n):
        np.testing.assert_array_equal(r2[:, k], r1)


def test_2d_constant_is_stationary():
    g = Grid2D.square(0.0, 1.0, 8)
    f = CellField.from_interior(g, np.full((8, 8), 1.25))
    assert np.all(rhs_2d(f, _x_advection_2d()) == 0.0)


def test_2d_conservation(rng):
    g = Grid2D.square(0.0, 1.0, 16)
    f = CellField.from_interior(g, rng.normal(size=(16, 16)))
    model = FluxModel("burgers2d", 1, lambda u: 0.5 * u * u, np.abs, lambda u: 0.5 * u * u, np.abs, viscosity=0.1)
    r = rhs_2d(f, model)
    assert abs(r.sum()) <= 1e-13 * np.abs(r).sum()
    speeds = interface_speeds(f, model)
    assert len(speeds) == 2 and all(s > 0 for s in speeds)
