"""Vorticity / stream-function machinery for periodic 2D incompressible flow."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from .cweno import CwenoParams, point_values_2d
from .errors import ZeroMeanViolation
from .grid import BoundaryKind, CellField, Grid2D, apply_boundary
from .models import vorticity_model
from .semidiscrete import check_finite, rhs_2d

__all__ = [
    "VelocityField",
    "point_values_2d",
    "laplacian_symbol",
    "apply_laplacian",
    "solve_stream_function",
    "recover_velocities",
    "interface_velocities",
    "central_derivative",
    "discrete_divergence",
    "vorticity_rhs",
    "vorticity_velocities",
]


@dataclass
class VelocityField:
    u: np.ndarray
    v: np.ndarray
    u_half: Optional[np.ndarray] = None  # x-edges, shape (nx + 1, ny)
    v_half: Optional[np.ndarray] = None  # y-edges, shape (nx, ny + 1)


def _d2_periodic(f: np.ndarray, axis: int, h: float) -> np.ndarray:
    r = lambda k: np.roll(f, -k, axis=axis)  # noqa: E731  r(k)[i] = f[i + k]
    return (-r(2) + 16.0 * r(1) - 30.0 * f + 16.0 * r(-1) - r(-2)) / (12.0 * h * h)


def apply_laplacian(f: np.ndarray, dx: float, dy: float) -> np.ndarray:
    """Periodic fourth-order cross-stencil Laplacian of an ``(nx, ny)`` array."""
    return _d2_periodic(f, 0, dx) + _d2_periodic(f, 1, dy)


def laplacian_symbol(nx: int, ny: int, dx: float, dy: float) -> np.ndarray:
    tx = 2.0 * np.pi * np.fft.fftfreq(nx)
    ty = 2.0 * np.pi * np.fft.fftfreq(ny)
    sx = (-30.0 + 32.0 * np.cos(tx) - 2.0 * np.cos(2.0 * tx)) / (12.0 * dx * dx)
    sy = (-30.0 + 32.0 * np.cos(ty) - 2.0 * np.cos(2.0 * ty)) / (12.0 * dy * dy)
    return sx[:, None] + sy[None, :]


def solve_stream_function(omega: np.ndarray, grid: Grid2D, mean_tol: float = 1e-10) -> np.ndarray:
    """Zero-mean ``psi`` with ``L_h psi = -omega`` on the periodic grid.

    The mean of ``omega`` is removed first (the periodic problem is only
    solvable for zero-mean data).
    """
    omega = np.asarray(omega, dtype=float)
    w = omega - omega.mean()
    scale = max(1.0, float(np.max(np.abs(omega)))) if omega.size else 1.0
    if not abs(w.mean()) <= mean_tol * scale:
        raise ZeroMeanViolation(f"vorticity mean {w.mean():.3e} after compatibility correction")
    sym = laplacian_symbol(grid.nx, grid.ny, grid.dx, grid.dy)
    sym[0, 0] = 1.0
    psi_hat = -np.fft.fft2(w) / sym
    psi_hat[0, 0] = 0.0
    return np.real(np.fft.ifft2(psi_hat))


def central_derivative(f: np.ndarray, axis: int, h: float) -> np.ndarray:
    """Periodic fourth-order central first derivative."""
    r = lambda k: np.roll(f, -k, axis=axis)  # noqa: E731
    return (-r(2) + 8.0 * r(1) - 8.0 * r(-1) + r(-2)) / (12.0 * h)


def recover_velocities(psi: np.ndarray, grid: Grid2D) -> VelocityField:
    return VelocityField(
        u=central_derivative(psi, 1, grid.dy),
        v=-central_derivative(psi, 0, grid.dx),
    )


def _midpoint_average(f: np.ndarray, axis: int) -> np.ndarray:
    """Values at the left edge of every cell plus the closing right edge.

    Edge ``i`` sits between cells ``i-1`` and ``i``:
    ``(-f[i+1] + 9 f[i] + 9 f[i-1] - f[i-2]) / 16``.
    """
    r = lambda k: np.roll(f, -k, axis=axis)  # noqa: E731
    left = (-r(1) + 9.0 * f + 9.0 * r(-1) - r(-2)) / 16.0
    first = np.take(left, [0], axis=axis)
    return np.concatenate([left, first], axis=axis)


def interface_velocities(vel: VelocityField) -> VelocityField:
    return VelocityField(vel.u, vel.v, _midpoint_average(vel.u, 0), _midpoint_average(vel.v, 1))


def discrete_divergence(vel: VelocityField, grid: Grid2D) -> np.ndarray:
    return central_derivative(vel.u, 0, grid.dx) + central_derivative(vel.v, 1, grid.dy)


def vorticity_velocities(field: CellField, params: CwenoParams = CwenoParams()) -> VelocityField:
    """Point values -> stream function -> centre and edge velocities."""
    pts = point_values_2d(field, params)
    psi = solve_stream_function(pts, field.grid)
    return interface_velocities(recover_velocities(psi, field.grid))


def vorticity_rhs(field: CellField, nu: float = 0.0, params: CwenoParams = CwenoParams()) -> np.ndarray:
    """Semi-discrete vorticity transport with optional linear viscosity."""
    if nu < 0:
        raise ValueError("viscosity must be non-negative")
    if field.boundary is not BoundaryKind.PERIODIC:
        raise ValueError("vorticity transport is implemented for periodic domains only")
    check_finite(field.values, field.grid.interior)
    apply_boundary(field)
    vel = vorticity_velocities(field, params)
    model = vorticity_model(vel.u_half, vel.v_half, viscosity=nu)
    return rhs_2d(field, model, params)
