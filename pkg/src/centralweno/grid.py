"""Uniform cell-centred grids, ghost-padded cell fields and norms."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field as dc_field
from typing import Callable, NamedTuple, Union

import numpy as np

GHOST = 3


class BoundaryKind(enum.Enum):
    PERIODIC = "periodic"
    OUTFLOW = "outflow"  # zero-order copy of the nearest interior cell


@dataclass(frozen=True)
class Grid1D:
    """Uniform 1D grid; cell ``j`` spans ``[x_min + j dx, x_min + (j+1) dx]``."""

    x_min: float
    x_max: float
    n_cells: int
    ghost: int = GHOST

    def __post_init__(self):
        if self.n_cells < 1:
            raise ValueError("n_cells must be positive")
        if not self.x_max > self.x_min:
            raise ValueError("x_max must exceed x_min")
        if self.ghost < 2:
            raise ValueError("ghost width must be at least 2")

    @property
    def dx(self) -> float:
        return (self.x_max - self.x_min) / self.n_cells

    @property
    def length(self) -> float:
        return self.x_max - self.x_min

    @property
    def interior(self) -> slice:
        return slice(self.ghost, self.ghost + self.n_cells)

    @property
    def centers(self) -> np.ndarray:
        return self.x_min + (np.arange(self.n_cells) + 0.5) * self.dx

    @property
    def interfaces(self) -> np.ndarray:
        """The ``n_cells + 1`` cell edges, left to right."""
        return self.x_min + np.arange(self.n_cells + 1) * self.dx

    def zeros(self, components: int = 1) -> np.ndarray:
        return np.zeros((components, self.n_cells + 2 * self.ghost))


@dataclass(frozen=True)
class Grid2D:
    x_min: float
    x_max: float
    nx: int
    y_min: float
    y_max: float
    ny: int
    ghost: int = GHOST

    def __post_init__(self):
        if self.nx < 1 or self.ny < 1:
            raise ValueError("cell counts must be positive")
        if not (self.x_max > self.x_min and self.y_max > self.y_min):
            raise ValueError("empty domain")
        if self.ghost < 2:
            raise ValueError("ghost width must be at least 2")

    @classmethod
    def square(cls, lo: float, hi: float, n: int, ghost: int = GHOST) -> "Grid2D":
        return cls(lo, hi, n, lo, hi, n, ghost)

    @property
    def dx(self) -> float:
        return (self.x_max - self.x_min) / self.nx

    @property
    def dy(self) -> float:
        return (self.y_max - self.y_min) / self.ny

    @property
    def area(self) -> float:
        return (self.x_max - self.x_min) * (self.y_max - self.y_min)

    @property
    def interior(self) -> tuple[slice, slice]:
        g = self.ghost
        return slice(g, g + self.nx), slice(g, g + self.ny)

    @property
    def x_centers(self) -> np.ndarray:
        return self.x_min + (np.arange(self.nx) + 0.5) * self.dx

    @property
    def y_centers(self) -> np.ndarray:
        return self.y_min + (np.arange(self.ny) + 0.5) * self.dy

    def mesh(self) -> tuple[np.ndarray, np.ndarray]:
        """Cell-centre coordinates, ``indexing='ij'`` (x varies along axis 0)."""
        return np.meshgrid(self.x_centers, self.y_centers, indexing="ij")

    def zeros(self) -> np.ndarray:
        return np.zeros((self.nx + 2 * self.ghost, self.ny + 2 * self.ghost))


Grid = Union[Grid1D, Grid2D]


@dataclass
class CellField:
    """Cell averages plus ghost layers.

    1D values have shape ``(components, n_cells + 2*ghost)``; 2D fields are
    scalar with shape ``(nx + 2*ghost, ny + 2*ghost)``.
    """

    grid: Grid
    values: np.ndarray
    boundary: BoundaryKind = BoundaryKind.PERIODIC
    extra: dict = dc_field(default_factory=dict)

    @classmethod
    def from_interior(cls, grid: Grid, interior, boundary=BoundaryKind.PERIODIC):
        interior = np.asarray(interior, dtype=float)
        if isinstance(grid, Grid1D):
            if interior.ndim == 1:
                interior = interior[None, :]
            values = grid.zeros(interior.shape[0])
            values[:, grid.interior] = interior
        else:
            values = grid.zeros()
            values[grid.interior] = interior
        out = cls(grid, values, boundary)
        apply_boundary(out)
        return out

    @property
    def components(self) -> int:
        return self.values.shape[0] if isinstance(self.grid, Grid1D) else 1

    @property
    def interior(self) -> np.ndarray:
        if isinstance(self.grid, Grid1D):
            return self.values[:, self.grid.interior]
        return self.values[self.grid.interior]

    def copy(self) -> "CellField":
        return CellField(self.grid, self.values.copy(), self.boundary, dict(self.extra))


def fill_ghosts(values: np.ndarray, ghost: int, kind: BoundaryKind, axis: int = -1) -> np.ndarray:
    """Fill ``ghost`` layers on both ends of ``axis`` in place."""
    v = np.moveaxis(values, axis, -1)
    n = v.shape[-1] - 2 * ghost
    g = ghost
    if kind is BoundaryKind.PERIODIC:
        if n < g:
            raise ValueError("periodic fill needs at least `ghost` interior cells")
        v[..., :g] = v[..., n : n + g]
        v[..., n + g :] = v[..., g : 2 * g]
    elif kind is BoundaryKind.OUTFLOW:
        v[..., :g] = v[..., g : g + 1]
        v[..., n + g :] = v[..., n + g - 1 : n + g]
    else:
        raise ValueError(f"unknown boundary kind {kind!r}")
    return values


def apply_boundary(field: CellField, kind: BoundaryKind | None = None) -> CellField:
    """Fill the ghost cells of ``field`` in place and return it."""
    kind = field.boundary if kind is None else kind
    g = field.grid.ghost
    if isinstance(field.grid, Grid1D):
        fill_ghosts(field.values, g, kind, axis=-1)
    else:
        fill_ghosts(field.values, g, kind, axis=0)
        fill_ghosts(field.values, g, kind, axis=1)
    return field


class ErrorNorms(NamedTuple):
    l1: float
    l2: float
    linf: float


def error_norms(approx, exact: Union[Callable, np.ndarray], grid: Grid) -> ErrorNorms:
    """Cell-measure weighted L1/L2 and max norms of point-value errors.

    ``exact`` is either an array of point values or a callable evaluated at
    the cell centres (``exact(x)`` in 1D, ``exact(X, Y)`` in 2D).
    """
    approx = np.asarray(approx, dtype=float)
    if isinstance(grid, Grid1D):
        ref = exact(grid.centers) if callable(exact) else exact
        measure = grid.dx
    else:
        ref = exact(*grid.mesh()) if callable(exact) else exact
        measure = grid.dx * grid.dy
    err = np.abs(approx - np.asarray(ref, dtype=float)).ravel()
    if err.size == 0:
        return ErrorNorms(0.0, 0.0, 0.0)
    linf = float(np.max(err))
    # scale by the max so tiny errors do not underflow when squared
    l2 = linf * float(np.sqrt(measure * np.sum((err / linf) ** 2))) if linf > 0 else 0.0
    return ErrorNorms(float(measure * np.sum(err)), l2, linf)


def total_variation(field: Union[CellField, np.ndarray], periodic: bool | None = None) -> float:
    """Sum of absolute jumps between neighbouring interior cell averages."""
    if isinstance(field, CellField):
        u = field.interior
        if periodic is None:
            periodic = field.boundary is BoundaryKind.PERIODIC
    else:
        u = np.asarray(field, dtype=float)
        periodic = bool(periodic)
    u = np.atleast_2d(u)
    if u.shape[0] != 1:
        raise ValueError("total variation is defined for scalar 1D fields")
    u = u[0]
    tv = np.sum(np.abs(np.diff(u)))
    if periodic and u.size > 1:
        tv += abs(u[0] - u[-1])
    return float(tv)
