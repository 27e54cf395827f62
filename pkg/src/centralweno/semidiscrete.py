"""Central numerical flux and semi-discrete right-hand sides.

State arrays for 1D problems carry a leading component axis,
``(components, cells)``; 2D problems are scalar.  Flux and wavespeed
callables act elementwise on whatever interface array they are handed, which
lets spatially varying coefficients (the vorticity transport velocities) be
baked into a model as arrays of interface shape.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

from .cweno import CwenoParams, InterfaceStates, _sweep, interface_values_2d, point_values_2d
from .diffusion import diffusion_term_1d, laplacian_4th_2d
from .errors import NonFiniteState
from .grid import BoundaryKind, CellField, Grid1D, Grid2D, apply_boundary

SPEED_SAMPLES = 33


class Convexity(enum.Enum):
    ENDPOINT_SUFFICIENT = "endpoint"
    SAMPLE_INTERVAL = "sample"


@dataclass(frozen=True)
class FluxModel:
    name: str
    n_components: int
    flux_x: Callable
    max_wavespeed_x: Callable
    flux_y: Optional[Callable] = None
    max_wavespeed_y: Optional[Callable] = None
    convexity: Convexity = Convexity.ENDPOINT_SUFFICIENT
    # Q(u, u_x) and dQ/du_x, scalar 1D problems only
    dissipation: Optional[Callable] = None
    dissipation_slope: Optional[Callable] = None
    # coefficient of a linear 2D Laplacian
    viscosity: float = 0.0


def local_speed(u_minus, u_plus, wavespeed: Callable, convexity: Convexity = Convexity.ENDPOINT_SUFFICIENT):
    """Upper bound on the local propagation speed at each interface.

    ``SAMPLE_INTERVAL`` maximises the wavespeed over equally spaced states
    between the two one-sided values, endpoints included; it is meant for
    scalar fluxes whose derivative is not monotone.
    """
    if convexity is Convexity.ENDPOINT_SUFFICIENT:
        return np.maximum(wavespeed(u_minus), wavespeed(u_plus))
    lo = np.minimum(u_minus, u_plus)[..., None]
    hi = np.maximum(u_minus, u_plus)[..., None]
    s = np.linspace(0.0, 1.0, SPEED_SAMPLES)
    return np.max(wavespeed(lo + (hi - lo) * s), axis=-1)


def numerical_flux(u_minus, u_plus, a, flux: Callable):
    return 0.5 * (flux(u_plus) + flux(u_minus)) - 0.5 * a * (u_plus - u_minus)


def check_finite(values: np.ndarray, interior) -> None:
    block = values[interior]
    bad = ~np.isfinite(block)
    if bad.any():
        cell = tuple(int(i) for i in np.argwhere(bad)[0])
        raise NonFiniteState(f"non-finite state at interior cell {cell}", cell)


def _interior_index(field: CellField):
    grid = field.grid
    if isinstance(grid, Grid1D):
        return (slice(None), grid.interior)
    return grid.interior


def rhs_1d(field: CellField, model: FluxModel, params: CwenoParams = CwenoParams()) -> np.ndarray:
    """``d/dt`` of the cell averages, same shape as ``field.values``.

    Ghost entries of the result are zero.  The field's ghosts are refreshed
    in place from its boundary kind.
    """
    grid = field.grid
    idx = _interior_index(field)
    check_finite(field.values, idx)
    apply_boundary(field)
    pad = 2 if model.dissipation is not None else 0
    st = _sweep(field.values, grid.ghost, grid.dx, params, pad=pad)
    a = local_speed(st.minus, st.plus, model.max_wavespeed_x, model.convexity)
    H = numerical_flux(st.minus, st.plus, a, model.flux_x)
    out = np.zeros_like(field.values)
    du = -(H[..., 1:] - H[..., :-1]) / grid.dx
    if model.dissipation is not None:
        du = du + diffusion_term_1d(st.center, model.dissipation, grid.dx)
    out[idx] = du
    return out


def rhs_2d(field: CellField, model: FluxModel, params: CwenoParams = CwenoParams()) -> np.ndarray:
    grid = field.grid
    if not isinstance(grid, Grid2D):
        raise TypeError("rhs_2d needs a 2D field")
    check_finite(field.values, grid.interior)
    apply_boundary(field)
    sx = interface_values_2d(field, 0, params)
    sy = interface_values_2d(field, 1, params)
    ax = local_speed(sx.minus, sx.plus, model.max_wavespeed_x, model.convexity)
    ay = local_speed(sy.minus, sy.plus, model.max_wavespeed_y, model.convexity)
    hx = numerical_flux(sx.minus, sx.plus, ax, model.flux_x)
    hy = numerical_flux(sy.minus, sy.plus, ay, model.flux_y)
    du = -(hx[1:, :] - hx[:-1, :]) / grid.dx - (hy[:, 1:] - hy[:, :-1]) / grid.dy
    if model.viscosity:
        pts = point_values_2d(field, params, ghosts=True)
        du = du + model.viscosity * laplacian_4th_2d(pts, grid.dx, grid.dy, grid.ghost)
    out = np.zeros_like(field.values)
    out[grid.interior] = du
    return out


def interface_speeds(field: CellField, model: FluxModel, params: CwenoParams = CwenoParams()) -> tuple[float, ...]:
    """Largest local speed over all interfaces, per axis."""
    apply_boundary(field)
    if isinstance(field.grid, Grid1D):
        st = _sweep(field.values, field.grid.ghost, field.grid.dx, params)
        return (float(np.max(local_speed(st.minus, st.plus, model.max_wavespeed_x, model.convexity))),)
    out = []
    for axis, ws in ((0, model.max_wavespeed_x), (1, model.max_wavespeed_y)):
        st: InterfaceStates = interface_values_2d(field, axis, params)
        out.append(float(np.max(local_speed(st.minus, st.plus, ws, model.convexity))))
    return tuple(out)


def make_rhs(grid, model: FluxModel, params: CwenoParams = CwenoParams(), boundary=None) -> Callable:
    """Wrap :func:`rhs_1d` / :func:`rhs_2d` as a function of the raw value array."""
    kind = BoundaryKind.PERIODIC if boundary is None else boundary
    fn = rhs_1d if isinstance(grid, Grid1D) else rhs_2d

    def rhs(values: np.ndarray) -> np.ndarray:
        return fn(CellField(grid, values, kind), model, params)

    return rhs
