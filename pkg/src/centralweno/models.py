"""Flux models for the bundled experiments."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import NonPhysicalState
from .semidiscrete import Convexity, FluxModel

GAMMA = 1.4


def advection_model(speed: float = 1.0) -> FluxModel:
    return FluxModel(
        name="advection",
        n_components=1,
        flux_x=lambda u: speed * u,
        max_wavespeed_x=lambda u: np.full(np.shape(u)[1:], abs(speed)),
    )


def burgers_model() -> FluxModel:
    return FluxModel(
        name="burgers",
        n_components=1,
        flux_x=lambda u: 0.5 * u * u,
        max_wavespeed_x=lambda u: np.abs(u[0]),
    )


# --- Euler ------------------------------------------------------------------


@dataclass(frozen=True)
class EulerState:
    rho: np.ndarray
    m: np.ndarray
    E: np.ndarray
    gamma: float = GAMMA

    @classmethod
    def from_conserved(cls, u: np.ndarray, gamma: float = GAMMA) -> "EulerState":
        return cls(u[0], u[1], u[2], gamma)

    @classmethod
    def from_primitive(cls, rho, vel, p, gamma: float = GAMMA) -> "EulerState":
        rho = np.asarray(rho, dtype=float)
        vel = np.asarray(vel, dtype=float)
        p = np.asarray(p, dtype=float)
        return cls(rho, rho * vel, p / (gamma - 1.0) + 0.5 * rho * vel * vel, gamma)

    @property
    def velocity(self):
        return self.m / self.rho

    @property
    def pressure(self):
        return (self.gamma - 1.0) * (self.E - 0.5 * self.m * self.m / self.rho)

    @property
    def sound_speed(self):
        return np.sqrt(self.gamma * self.pressure / self.rho)

    def conserved(self) -> np.ndarray:
        return np.stack(np.broadcast_arrays(self.rho, self.m, self.E)).astype(float)


def _physical(u: np.ndarray, gamma: float):
    rho = u[0]
    if np.any(rho <= 0):
        cell = tuple(int(i) for i in np.argwhere(np.atleast_1d(rho) <= 0)[0])
        raise NonPhysicalState(f"non-positive density at state index {cell}", cell)
    vel = u[1] / rho
    p = (gamma - 1.0) * (u[2] - 0.5 * rho * vel * vel)
    if np.any(p <= 0):
        cell = tuple(int(i) for i in np.argwhere(np.atleast_1d(p) <= 0)[0])
        raise NonPhysicalState(f"non-positive pressure at state index {cell}", cell)
    return rho, vel, p


def euler_flux(u: np.ndarray, gamma: float = GAMMA) -> np.ndarray:
    rho, vel, p = _physical(u, gamma)
    return np.stack([u[1], u[1] * vel + p, vel * (u[2] + p)])


def euler_wavespeed(u: np.ndarray, gamma: float = GAMMA) -> np.ndarray:
    rho, vel, p = _physical(u, gamma)
    return np.abs(vel) + np.sqrt(gamma * p / rho)


def euler_model(gamma: float = GAMMA) -> FluxModel:
    return FluxModel(
        name="euler",
        n_components=3,
        flux_x=lambda u: euler_flux(u, gamma),
        max_wavespeed_x=lambda u: euler_wavespeed(u, gamma),
    )


# --- Buckley-Leverett -------------------------------------------------------


@dataclass(frozen=True)
class BuckleyLeverettParams:
    epsilon_diff: float = 0.01
    gravity: bool = False

    def __post_init__(self):
        if self.epsilon_diff < 0:
            raise ValueError("epsilon_diff must be non-negative")


def bl_flux(u, gravity: bool = False):
    d = u * u + (1.0 - u) ** 2
    f = u * u / d
    if gravity:
        f = f * (1.0 - 5.0 * (1.0 - u) ** 2)
    return f


def bl_flux_derivative(u, gravity: bool = False):
    d = u * u + (1.0 - u) ** 2
    df = 2.0 * u * (1.0 - u) / (d * d)
    if not gravity:
        return df
    g = 1.0 - 5.0 * (1.0 - u) ** 2
    return df * g + (u * u / d) * 10.0 * (1.0 - u)


def buckley_leverett_model(params: BuckleyLeverettParams = BuckleyLeverettParams()) -> FluxModel:
    eps, grav = params.epsilon_diff, params.gravity

    def slope_coeff(u):
        return eps * 4.0 * u * (1.0 - u)

    return FluxModel(
        name="buckley-leverett-gravity" if grav else "buckley-leverett",
        n_components=1,
        flux_x=lambda u: bl_flux(u, grav),
        max_wavespeed_x=lambda u: np.abs(bl_flux_derivative(u[0], grav)),
        convexity=Convexity.SAMPLE_INTERVAL,
        dissipation=(lambda u, s: slope_coeff(u) * s) if eps > 0 else None,
        dissipation_slope=slope_coeff if eps > 0 else None,
    )


# --- vorticity transport ----------------------------------------------------


def vorticity_model(u_half: np.ndarray, v_half: np.ndarray, viscosity: float = 0.0) -> FluxModel:
    """Vorticity transport with frozen interface velocities.

    ``u_half`` has the shape of the x-interface arrays ``(nx + 1, ny)`` and
    ``v_half`` that of the y-interface arrays ``(nx, ny + 1)``; the flux is
    the velocity times the interface vorticity and the local speed is the
    velocity magnitude.
    """
    u_half = np.asarray(u_half, dtype=float)
    v_half = np.asarray(v_half, dtype=float)
    return FluxModel(
        name="vorticity",
        n_components=1,
        flux_x=lambda w: u_half * w,
        max_wavespeed_x=lambda w: np.abs(u_half) * np.ones_like(w),
        flux_y=lambda w: v_half * w,
        max_wavespeed_y=lambda w: np.abs(v_half) * np.ones_like(w),
        viscosity=viscosity,
    )
