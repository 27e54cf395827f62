"""Three-stage SSP Runge-Kutta integration with CFL step control."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Optional, Sequence

import numpy as np

from .cweno import CwenoParams
from .errors import NonFiniteState, NumericalError
from .grid import CellField, Grid1D
from .semidiscrete import FluxModel, interface_speeds

MAX_STEPS = 10**8

# u1 = u + dt L(u); u2 = 3/4 u + 1/4 (u1 + dt L(u1)); u3 = 1/3 u + 2/3 (u2 + dt L(u2))
SSP_RK3_STAGES = ((1.0, 0.0), (0.75, 0.25), (1.0 / 3.0, 2.0 / 3.0))


@dataclass
class TimeController:
    cfl_hyperbolic: float = 0.45
    parabolic_safety: float = 0.4
    t_current: float = 0.0
    t_end: float = 0.0

    def __post_init__(self):
        if not 0.0 < self.cfl_hyperbolic <= 1.0:
            raise ValueError("cfl_hyperbolic must lie in (0, 1]")
        if not self.parabolic_safety > 0.0:
            raise ValueError("parabolic_safety must be positive")

    @property
    def remaining(self) -> float:
        return self.t_end - self.t_current


def stable_dt(
    speeds: Sequence[float],
    spacings: Sequence[float],
    ctrl: TimeController,
    diffusivity: float = 0.0,
) -> float:
    """Largest admissible step, clipped to the remaining time.

    Hyperbolic part: ``cfl / sum(a_i / h_i)``.  Parabolic part:
    ``safety * h^2 / (2 * D * dim)`` with ``h`` the smallest spacing.
    """
    rate = sum(a / h for a, h in zip(speeds, spacings))
    if not math.isfinite(rate) or not math.isfinite(diffusivity):
        raise NonFiniteState("non-finite wavespeed or diffusivity in step-size control")
    dt = ctrl.remaining
    if rate > 0.0:
        dt = min(dt, ctrl.cfl_hyperbolic / rate)
    if diffusivity > 0.0:
        h = min(spacings)
        dt = min(dt, ctrl.parabolic_safety * h * h / (2.0 * diffusivity * len(spacings)))
    return dt


def compute_dt(field: CellField, model: FluxModel, ctrl: TimeController, params: CwenoParams = CwenoParams()) -> float:
    speeds = interface_speeds(field, model, params)
    grid = field.grid
    spacings = (grid.dx,) if isinstance(grid, Grid1D) else (grid.dx, grid.dy)
    diff = model.viscosity
    if model.dissipation_slope is not None:
        diff = max(diff, float(np.max(model.dissipation_slope(field.interior))))
    return stable_dt(speeds, spacings, ctrl, diff)


def ssp_rk3_step(state: np.ndarray, rhs_fn: Callable[[np.ndarray], np.ndarray], dt: float) -> np.ndarray:
    u = state
    stage = state
    for keep, mix in SSP_RK3_STAGES:
        update = stage + dt * rhs_fn(stage.copy())
        stage = update if mix == 0.0 else keep * u + mix * update
    return stage


def integrate_to(
    state: np.ndarray,
    rhs_fn: Callable[[np.ndarray], np.ndarray],
    dt_fn: Callable[[np.ndarray, TimeController], float],
    ctrl: TimeController,
    callback: Optional[Callable[[float, np.ndarray], None]] = None,
    max_steps: int = MAX_STEPS,
) -> np.ndarray:
    """Advance ``state`` from ``ctrl.t_current`` to ``ctrl.t_end``.

    ``dt_fn`` proposes a step from the current state; the last step is
    trimmed to land on ``t_end``.  ``callback(t, state)`` runs after every
    accepted step.  ``ctrl.t_current`` is updated in place.
    """
    if ctrl.t_end < ctrl.t_current:
        raise ValueError("t_end precedes the current time")
    steps = 0
    while ctrl.t_current < ctrl.t_end:
        if steps >= max_steps:
            raise NumericalError(f"step limit {max_steps} reached at t={ctrl.t_current}")
        dt = min(dt_fn(state, ctrl), ctrl.remaining)
        if not (dt > 0.0 and math.isfinite(dt)):
            raise NumericalError(f"invalid time step {dt!r} at t={ctrl.t_current}")
        state = ssp_rk3_step(state, rhs_fn, dt)
        steps += 1
        if dt >= ctrl.remaining:
            ctrl.t_current = ctrl.t_end
        else:
            ctrl.t_current += dt
        if callback is not None:
            callback(ctrl.t_current, state)
    return state
