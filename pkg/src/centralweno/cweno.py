"""Third-order central WENO reconstruction.

Each cell carries one parabola ``P_j(x) = A + B (x - x_j) + C/2 (x - x_j)^2``
built as a convex combination of a left linear, a right linear and a centred
parabolic candidate.  The same polynomial supplies both interface values of
the cell and its centre point value, which keeps the reconstruction
conservative.

All functions broadcast over numpy arrays, so the "scalar" entry points are
also the vectorised kernels.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .grid import CellField, Grid1D, Grid2D, fill_ghosts


@dataclass(frozen=True)
class CwenoParams:
    epsilon: float = 1e-6
    p_exponent: float = 2.0
    c_left: float = 0.25
    c_right: float = 0.25

    def __post_init__(self):
        if not self.epsilon > 0:
            raise ValueError("epsilon must be positive")
        if self.p_exponent < 0:
            raise ValueError("p_exponent must be non-negative")
        if self.c_left < 0 or self.c_right < 0 or self.c_left + self.c_right >= 1:
            raise ValueError("need c_left, c_right >= 0 and c_left + c_right < 1")

    @property
    def c_center(self) -> float:
        return 1.0 - self.c_left - self.c_right


class ParabolaCoeffs(NamedTuple):
    A: np.ndarray
    B: np.ndarray
    C: np.ndarray

    def at(self, offset):
        """Evaluate at ``x - x_j = offset``."""
        return self.A + self.B * offset + 0.5 * self.C * offset * offset


class InterfaceStates(NamedTuple):
    """Reconstructed values at the ``n + 1`` edges of the interior cells.

    ``minus[..., i]`` comes from the cell left of edge ``i`` and ``plus[..., i]``
    from the cell right of it; ``center`` holds ``P_j(x_j)`` for interior cells.
    """

    minus: np.ndarray
    plus: np.ndarray
    center: np.ndarray


def smoothness_indicators(um1, u0, up1):
    d2 = up1 - 2.0 * u0 + um1
    is_l = (u0 - um1) ** 2
    is_r = (up1 - u0) ** 2
    is_c = (13.0 / 3.0) * d2 * d2 + 0.25 * (up1 - um1) ** 2
    return is_l, is_r, is_c


def cweno_weights(is_l, is_r, is_c, params: CwenoParams = CwenoParams()):
    eps, p = params.epsilon, params.p_exponent
    a_l = params.c_left / np.power(eps + is_l, p)
    a_r = params.c_right / np.power(eps + is_r, p)
    a_c = params.c_center / np.power(eps + is_c, p)
    total = a_l + a_r + a_c
    return a_l / total, a_r / total, a_c / total


def reconstruct_cell(um1, u0, up1, dx: float, params: CwenoParams = CwenoParams(), transverse=None):
    """Parabola coefficients of the CWENO polynomial in the middle cell.

    ``transverse`` is the second difference across the sweep direction (2D
    dimension-by-dimension recipe); it only enters the centred candidate's
    constant term.
    """
    dm = u0 - um1
    dp = up1 - u0
    d2 = dp - dm
    w_l, w_r, w_c = cweno_weights(*smoothness_indicators(um1, u0, up1), params)

    c_l, c_r, c_c = params.c_left, params.c_right, params.c_center
    curv = d2 if transverse is None else d2 + transverse
    a_c = u0 - curv / (24.0 * c_c)
    b_c = (0.5 * (dp + dm) - c_l * dm - c_r * dp) / c_c
    c_c2 = d2 / c_c

    # written as a correction to u0 so constant data stay exact
    A = u0 + w_c * (a_c - u0)
    B = (w_l * dm + w_r * dp + w_c * b_c) / dx
    C = w_c * c_c2 / (dx * dx)
    return ParabolaCoeffs(A, B, C)


def _sweep(v: np.ndarray, ghost: int, dx: float, params: CwenoParams, transverse=None, pad: int = 0):
    """Reconstruct along the last axis of ``v`` (ghost-padded).

    Returns interface states for the interior edges and centre values for the
    interior cells widened by ``pad`` on each side (``pad <= ghost - 1``).
    """
    if transverse is not None:
        transverse = transverse[..., 1:-1]
    coeffs = reconstruct_cell(v[..., :-2], v[..., 1:-1], v[..., 2:], dx, params, transverse)
    n = v.shape[-1] - 2 * ghost
    g = ghost
    # coefficient index c-1 belongs to padded cell c
    right_edge = coeffs.at(0.5 * dx)
    left_edge = coeffs.at(-0.5 * dx)
    minus = right_edge[..., g - 2 : g - 1 + n]
    plus = left_edge[..., g - 1 : g + n]
    center = coeffs.A[..., g - 1 - pad : g - 1 + n + pad]
    return InterfaceStates(minus, plus, center)


def interface_values_1d(field: CellField, params: CwenoParams = CwenoParams(), pad: int = 0) -> InterfaceStates:
    """Componentwise interface and centre values of a ghost-filled 1D field."""
    grid = field.grid
    if not isinstance(grid, Grid1D):
        raise TypeError("interface_values_1d needs a 1D field")
    return _sweep(field.values, grid.ghost, grid.dx, params, pad=pad)


def _second_difference(v: np.ndarray, axis: int) -> np.ndarray:
    v = np.moveaxis(v, axis, -1)
    out = np.zeros_like(v)
    out[..., 1:-1] = v[..., 2:] - 2.0 * v[..., 1:-1] + v[..., :-2]
    return np.moveaxis(out, -1, axis)


def interface_values_2d(field: CellField, axis: int, params: CwenoParams = CwenoParams()) -> InterfaceStates:
    """Dimension-by-dimension interface values for a scalar 2D field.

    ``axis=0`` sweeps in x and returns arrays of shape ``(nx + 1, ny)``;
    ``axis=1`` sweeps in y with shape ``(nx, ny + 1)``.  The centred candidate
    carries the second difference across the sweep; weights use the
    along-sweep indicators only.
    """
    grid = field.grid
    if not isinstance(grid, Grid2D):
        raise TypeError("interface_values_2d needs a 2D field")
    if axis not in (0, 1):
        raise ValueError("axis must be 0 (x) or 1 (y)")
    g = grid.ghost
    v = field.values
    trans = _second_difference(v, 1 - axis)
    if axis == 0:
        rows = (slice(None), slice(g, g + grid.ny))
        states = _sweep(v[rows].T, g, grid.dx, params, trans[rows].T)
        return InterfaceStates(*(a.T for a in states))
    cols = (slice(g, g + grid.nx), slice(None))
    return _sweep(v[cols], g, grid.dy, params, trans[cols])


def point_values_2d(field: CellField, params: CwenoParams = CwenoParams(), ghosts: bool = False) -> np.ndarray:
    """Third-order point values at cell centres from 2D cell averages.

    Uses the x-sweep polynomial at ``x_j``: both linear candidates give the
    average itself and the centred one subtracts the x and y curvature terms.
    With ``ghosts=True`` the result is returned ghost-padded and filled with
    the field's boundary kind.
    """
    grid = field.grid
    g = grid.ghost
    v = field.values
    inner = v[g:-g, g:-g]
    d2x = v[g + 1 : g + 1 + grid.nx, g:-g] - 2.0 * inner + v[g - 1 : g - 1 + grid.nx, g:-g]
    d2y = v[g:-g, g + 1 : g + 1 + grid.ny] - 2.0 * inner + v[g:-g, g - 1 : g - 1 + grid.ny]
    um1 = v[g - 1 : g - 1 + grid.nx, g:-g]
    up1 = v[g + 1 : g + 1 + grid.nx, g:-g]
    _, _, w_c = cweno_weights(*smoothness_indicators(um1, inner, up1), params)
    pts = inner - w_c * (d2x + d2y) / (24.0 * params.c_center)
    if not ghosts:
        return pts
    out = grid.zeros()
    out[grid.interior] = pts
    fill_ghosts(out, g, field.boundary, axis=0)
    fill_ghosts(out, g, field.boundary, axis=1)
    return out
