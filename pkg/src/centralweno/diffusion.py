"""Fourth-order central approximations of dissipation terms."""

from __future__ import annotations

from typing import Callable, NamedTuple

import numpy as np


class DerivativeQuad(NamedTuple):
    """Slopes at ``j+2, j+1, j-1, j-2`` from the five-point stencil about ``j``."""

    d_pp2: np.ndarray
    d_pp1: np.ndarray
    d_mm1: np.ndarray
    d_mm2: np.ndarray


# rows act on (u[j+2], u[j+1], u[j], u[j-1], u[j-2]), scaled by 1/(12 dx)
SLOPE_ROWS = np.array(
    [
        [25.0, -48.0, 36.0, -16.0, 3.0],
        [3.0, 10.0, -18.0, 6.0, -1.0],
        [1.0, -6.0, 18.0, -10.0, -3.0],
        [-3.0, 16.0, -36.0, 48.0, -25.0],
    ]
)


def one_sided_derivatives(um2, um1, u0, up1, up2, dx: float) -> DerivativeQuad:
    # rows sum to zero, so differencing against u0 first keeps constants exact
    window = (up2 - u0, up1 - u0, 0.0, um1 - u0, um2 - u0)
    rows = [sum(c * u for c, u in zip(row, window)) / (12.0 * dx) for row in SLOPE_ROWS]
    return DerivativeQuad(*rows)


def diffusion_term_1d(points: np.ndarray, Q: Callable, dx: float) -> np.ndarray:
    """Fourth-order approximation of ``d/dx Q(u, u_x)`` at interior cells.

    ``points`` are reconstructed point values along the last axis, padded by
    two cells on each side; the result has two fewer entries per side.
    """
    um2 = points[..., :-4]
    um1 = points[..., 1:-3]
    u0 = points[..., 2:-2]
    up1 = points[..., 3:-1]
    up2 = points[..., 4:]
    d = one_sided_derivatives(um2, um1, u0, up1, up2, dx)
    return (
        -Q(up2, d.d_pp2) + 8.0 * Q(up1, d.d_pp1) - 8.0 * Q(um1, d.d_mm1) + Q(um2, d.d_mm2)
    ) / (12.0 * dx)


def _second_derivative_4th(v: np.ndarray, axis: int, h: float, ghost: int) -> np.ndarray:
    v = np.moveaxis(v, axis, -1)
    n = v.shape[-1] - 2 * ghost
    c = slice(ghost, ghost + n)

    def s(k):
        return v[..., ghost + k : ghost + k + n]

    out = (-s(2) + 16.0 * s(1) - 30.0 * v[..., c] + 16.0 * s(-1) - s(-2)) / (12.0 * h * h)
    return np.moveaxis(out, -1, axis)


def laplacian_4th_2d(points: np.ndarray, dx: float, dy: float, ghost: int) -> np.ndarray:
    """Fourth-order five-point-per-axis Laplacian of ghost-filled point values.

    Returns the interior block of shape ``(nx, ny)``.
    """
    g = ghost
    dxx = _second_derivative_4th(points[:, g:-g], 0, dx, g)
    dyy = _second_derivative_4th(points[g:-g, :], 1, dy, g)
    return dxx + dyy
