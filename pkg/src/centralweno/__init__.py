"""Third-order semi-discrete central scheme with CWENO reconstruction."""

from .cweno import CwenoParams, interface_values_1d, interface_values_2d, point_values_2d
from .grid import BoundaryKind, CellField, Grid1D, Grid2D, apply_boundary, error_norms, total_variation
from .semidiscrete import Convexity, FluxModel, local_speed, numerical_flux, rhs_1d, rhs_2d
from .timestep import TimeController, compute_dt, integrate_to, ssp_rk3_step

__version__ = "0.1.0"

__all__ = [
    "BoundaryKind",
    "CellField",
    "Convexity",
    "CwenoParams",
    "FluxModel",
    "Grid1D",
    "Grid2D",
    "TimeController",
    "apply_boundary",
    "compute_dt",
    "error_norms",
    "integrate_to",
    "interface_values_1d",
    "interface_values_2d",
    "local_speed",
    "numerical_flux",
    "point_values_2d",
    "rhs_1d",
    "rhs_2d",
    "ssp_rk3_step",
    "total_variation",
]
