"""Experiment drivers: initial data, runs, convergence tables and CSV output."""

from __future__ import annotations

import enum
import logging
import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, Iterable, NamedTuple, Optional, Sequence

import numpy as np

from . import exact
from .cweno import CwenoParams, interface_values_1d, point_values_2d
from .errors import ConfigError, MismatchedResolutions
from .grid import (
    BoundaryKind,
    CellField,
    ErrorNorms,
    Grid1D,
    Grid2D,
    apply_boundary,
    error_norms,
    total_variation,
)
from .incompressible import discrete_divergence, vorticity_rhs, vorticity_velocities
from .models import (
    BuckleyLeverettParams,
    EulerState,
    advection_model,
    buckley_leverett_model,
    burgers_model,
    euler_model,
)
from .semidiscrete import FluxModel, make_rhs
from .timestep import TimeController, compute_dt, integrate_to, stable_dt

log = logging.getLogger(__name__)

TWO_PI = 2.0 * math.pi
SOD_T_END = 0.1644
BL_JUMP = 1.0 - 1.0 / math.sqrt(2.0)
SHEAR_WIDTH = math.pi / 15.0
SHEAR_PERTURBATION = 0.05


class Experiment(enum.Enum):
    ADVECTION_ACCURACY = "advection-accuracy"
    BURGERS_ACCURACY = "burgers-accuracy"
    BURGERS_SHOCK = "burgers-shock"
    SOD = "sod"
    BUCKLEY_LEVERETT = "buckley-leverett"
    BUCKLEY_LEVERETT_GRAVITY = "buckley-leverett-gravity"
    TAYLOR_GREEN = "taylor-green"
    DOUBLE_SHEAR_LAYER = "double-shear-layer"

    @classmethod
    def parse(cls, name: str) -> "Experiment":
        key = name.strip().lower().replace("_", "-")
        for e in cls:
            if e.value == key or e.name.lower().replace("_", "-") == key:
                return e
        raise ConfigError(f"unknown experiment {name!r}; choose from {', '.join(e.value for e in cls)}")


ACCURACY_EXPERIMENTS = {Experiment.ADVECTION_ACCURACY, Experiment.BURGERS_ACCURACY, Experiment.TAYLOR_GREEN}

DEFAULTS = {
    Experiment.ADVECTION_ACCURACY: dict(resolutions=(40, 80, 160, 320, 640, 1280), t_end=1.0),
    Experiment.BURGERS_ACCURACY: dict(resolutions=(40, 80, 160, 320, 640, 1280), t_end=0.5),
    Experiment.BURGERS_SHOCK: dict(resolutions=(40, 80), t_end=2.0),
    Experiment.SOD: dict(resolutions=(200, 400), t_end=SOD_T_END, p_exponent=0.6),
    Experiment.BUCKLEY_LEVERETT: dict(resolutions=(100, 800), t_end=0.2),
    Experiment.BUCKLEY_LEVERETT_GRAVITY: dict(resolutions=(100, 800), t_end=0.2),
    Experiment.TAYLOR_GREEN: dict(resolutions=(32, 64, 128), t_end=2.0, nu=0.05),
    Experiment.DOUBLE_SHEAR_LAYER: dict(resolutions=(64,), t_end=10.0, nu=0.0),
}

SHEAR_OUTPUT_TIMES = (4.0, 6.0, 10.0)


@dataclass
class ExperimentConfig:
    experiment: Experiment
    resolutions: tuple[int, ...]
    t_end: float
    cweno: CwenoParams = field(default_factory=CwenoParams)
    cfl: float = 0.45
    nu: float = 0.0
    output_dir: Path = Path("out")

    def __post_init__(self):
        if not self.resolutions:
            raise ConfigError("resolutions must be non-empty")
        if any(int(n) < 8 for n in self.resolutions):
            raise ConfigError("every resolution must be at least 8")
        self.resolutions = tuple(int(n) for n in self.resolutions)
        if not self.t_end > 0:
            raise ConfigError("t_end must be positive")
        if not 0 < self.cfl <= 1:
            raise ConfigError("cfl must lie in (0, 1]")
        if self.nu < 0:
            raise ConfigError("nu must be non-negative")
        self.output_dir = Path(self.output_dir)

    @classmethod
    def default(cls, experiment: Experiment | str, **overrides) -> "ExperimentConfig":
        exp = Experiment.parse(experiment) if isinstance(experiment, str) else experiment
        d = dict(DEFAULTS[exp])
        p = d.pop("p_exponent", None)
        d.update({k: v for k, v in overrides.items() if v is not None})
        if "cweno" not in d and p is not None:
            d["cweno"] = CwenoParams(p_exponent=p)
        return cls(experiment=exp, **d)


CONFIG_KEYS = {"experiment", "n", "resolutions", "t_end", "cfl", "p_exponent", "epsilon", "nu", "out", "output_dir"}


def parse_config_text(text: str) -> dict[str, str]:
    """Flat ``key = value`` lines; ``#`` starts a comment."""
    out = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"line {lineno}: expected key = value")
        key, value = (s.strip() for s in line.split("=", 1))
        key = key.lower().replace("-", "_")
        if key not in CONFIG_KEYS:
            raise ConfigError(f"line {lineno}: unknown key {key!r}")
        out[key] = value
    return out


def build_config(values: dict[str, str]) -> ExperimentConfig:
    """Turn raw string settings (file + overrides) into a validated config."""
    if "experiment" not in values:
        raise ConfigError("no experiment given")
    exp = Experiment.parse(values["experiment"])
    try:
        over = {}
        res = values.get("resolutions", values.get("n"))
        if res is not None:
            over["resolutions"] = tuple(int(s) for s in str(res).replace(" ", "").split(",") if s)
        for key in ("t_end", "cfl", "nu"):
            if key in values:
                over[key] = float(values[key])
        out = values.get("output_dir", values.get("out"))
        if out is not None:
            over["output_dir"] = Path(out)
        base = ExperimentConfig.default(exp).cweno
        p = float(values["p_exponent"]) if "p_exponent" in values else base.p_exponent
        eps = float(values["epsilon"]) if "epsilon" in values else base.epsilon
        over["cweno"] = CwenoParams(epsilon=eps, p_exponent=p)
    except ValueError as exc:
        raise ConfigError(str(exc)) from exc
    return ExperimentConfig.default(exp, **over)


# --- initial data -----------------------------------------------------------


def sine_averages(edges: np.ndarray) -> np.ndarray:
    return (np.cos(edges[:-1]) - np.cos(edges[1:])) / np.diff(edges)


def step_averages(edges: np.ndarray, x_jump: float, left: float, right: float) -> np.ndarray:
    """Exact averages of ``left`` for ``x < x_jump`` and ``right`` beyond."""
    lo, hi = edges[:-1], edges[1:]
    frac_left = np.clip((x_jump - lo) / (hi - lo), 0.0, 1.0)
    return frac_left * left + (1.0 - frac_left) * right


def taylor_green_vorticity_averages(grid: Grid2D) -> np.ndarray:
    ex = grid.x_min + np.arange(grid.nx + 1) * grid.dx
    ey = grid.y_min + np.arange(grid.ny + 1) * grid.dy
    return 2.0 * np.outer(np.diff(np.sin(ex)) / grid.dx, np.diff(np.sin(ey)) / grid.dy)


def shear_layer_u(y):
    y = np.asarray(y, dtype=float)
    return np.where(y <= math.pi, np.tanh((y - math.pi / 2) / SHEAR_WIDTH), np.tanh((1.5 * math.pi - y) / SHEAR_WIDTH))


def shear_layer_vorticity_averages(grid: Grid2D) -> np.ndarray:
    """Exact averages of ``v_x - u_y`` for the double shear layer data."""
    ex = grid.x_min + np.arange(grid.nx + 1) * grid.dx
    ey = grid.y_min + np.arange(grid.ny + 1) * grid.dy
    vx = SHEAR_PERTURBATION * np.diff(np.sin(ex)) / grid.dx
    uy = np.diff(shear_layer_u(ey)) / grid.dy
    return vx[:, None] - uy[None, :]


# --- generic drivers --------------------------------------------------------


@dataclass
class RunResult:
    n: int
    field: CellField
    steps: int
    norms: Optional[ErrorNorms] = None
    diagnostics: dict = field(default_factory=dict)
    snapshots: dict = field(default_factory=dict)


def solve_1d(
    grid: Grid1D,
    model: FluxModel,
    initial: np.ndarray,
    t_end: float,
    boundary: BoundaryKind = BoundaryKind.PERIODIC,
    params: CwenoParams = CwenoParams(),
    cfl: float = 0.45,
    callback: Optional[Callable[[float, np.ndarray], None]] = None,
) -> tuple[CellField, int]:
    f0 = CellField.from_interior(grid, initial, boundary)
    rhs = make_rhs(grid, model, params, boundary)
    ctrl = TimeController(cfl_hyperbolic=cfl, t_end=t_end)
    steps = [0]

    def dt_fn(values, c):
        return compute_dt(CellField(grid, values, boundary), model, c, params)

    def cb(t, values):
        steps[0] += 1
        if callback is not None:
            callback(t, values)

    values = integrate_to(f0.values, rhs, dt_fn, ctrl, cb)
    return apply_boundary(CellField(grid, values, boundary)), steps[0]


def vorticity_dt(field: CellField, ctrl: TimeController, nu: float, params: CwenoParams = CwenoParams()) -> float:
    vel = vorticity_velocities(apply_boundary(field), params)
    speeds = (float(np.max(np.abs(vel.u_half))), float(np.max(np.abs(vel.v_half))))
    return stable_dt(speeds, (field.grid.dx, field.grid.dy), ctrl, nu)


def solve_vorticity(
    grid: Grid2D,
    omega_avg: np.ndarray,
    nu: float,
    t_end: float,
    params: CwenoParams = CwenoParams(),
    cfl: float = 0.45,
    callback: Optional[Callable[[float, np.ndarray], None]] = None,
    t_start: float = 0.0,
) -> tuple[CellField, int]:
    f0 = CellField.from_interior(grid, omega_avg)
    ctrl = TimeController(cfl_hyperbolic=cfl, t_current=t_start, t_end=t_end)
    steps = [0]

    def rhs(values):
        return vorticity_rhs(CellField(grid, values), nu, params)

    def dt_fn(values, c):
        return vorticity_dt(CellField(grid, values), c, nu, params)

    def cb(t, values):
        steps[0] += 1
        if callback is not None:
            callback(t, values)

    values = integrate_to(f0.values, rhs, dt_fn, ctrl, cb)
    return apply_boundary(CellField(grid, values)), steps[0]


def point_values_1d(field: CellField, params: CwenoParams = CwenoParams()) -> np.ndarray:
    return interface_values_1d(apply_boundary(field), params).center


# --- individual experiments -------------------------------------------------


def advection_accuracy(n: int, t_end: float = 1.0, params: CwenoParams = CwenoParams(), cfl: float = 0.45) -> RunResult:
    grid = Grid1D(0.0, TWO_PI, n)
    f, steps = solve_1d(grid, advection_model(), sine_averages(grid.interfaces), t_end, params=params, cfl=cfl)
    pts = point_values_1d(f, params)[0]
    return RunResult(n, f, steps, error_norms(pts, lambda x: exact.advection_sine(x, t_end), grid))


def burgers_accuracy(n: int, t_end: float = 0.5, params: CwenoParams = CwenoParams(), cfl: float = 0.45) -> RunResult:
    grid = Grid1D(0.0, TWO_PI, n)
    u0 = 0.5 + sine_averages(grid.interfaces)
    f, steps = solve_1d(grid, burgers_model(), u0, t_end, params=params, cfl=cfl)
    pts = point_values_1d(f, params)[0]
    return RunResult(n, f, steps, error_norms(pts, lambda x: exact.burgers_sine(x, t_end), grid))


class _Extrema:
    """Running min/max and total-variation monitor for scalar 1D runs."""

    def __init__(self, grid: Grid1D, periodic: bool):
        self.grid, self.periodic = grid, periodic
        self.lo, self.hi, self.tv_max = math.inf, -math.inf, 0.0

    def __call__(self, t, values):
        u = values[:, self.grid.interior]
        self.lo = min(self.lo, float(u.min()))
        self.hi = max(self.hi, float(u.max()))
        self.tv_max = max(self.tv_max, total_variation(u, self.periodic))


def burgers_shock(n: int, t_end: float = 2.0, params: CwenoParams = CwenoParams(), cfl: float = 0.45) -> RunResult:
    grid = Grid1D(0.0, TWO_PI, n)
    u0 = 0.5 + sine_averages(grid.interfaces)
    mon = _Extrema(grid, periodic=True)
    f, steps = solve_1d(grid, burgers_model(), u0, t_end, params=params, cfl=cfl, callback=mon)
    diag = dict(
        initial_min=float(u0.min()),
        initial_max=float(u0.max()),
        initial_tv=total_variation(u0, True),
        min=mon.lo,
        max=mon.hi,
        max_tv=mon.tv_max,
    )
    return RunResult(n, f, steps, diagnostics=diag)


def sod_initial(grid: Grid1D) -> np.ndarray:
    left = EulerState.from_primitive(*exact.SOD_LEFT).conserved()
    right = EulerState.from_primitive(*exact.SOD_RIGHT).conserved()
    return np.stack([step_averages(grid.interfaces, 0.0, left[k], right[k]) for k in range(3)])


def level_crossing(x: np.ndarray, y: np.ndarray, level: float, from_left: bool = True) -> float:
    """First position where ``y`` crosses ``level``, linearly interpolated.

    Scans from the left (or right) end; ``nan`` when there is no crossing.
    """
    if not from_left:
        return -level_crossing(-x[::-1], y[::-1], level, True)
    s = np.sign(y - level)
    idx = np.nonzero(s[1:] != s[:-1])[0]
    if idx.size == 0:
        return math.nan
    i = idx[0]
    if y[i + 1] == y[i]:
        return float(x[i])
    return float(x[i] + (level - y[i]) * (x[i + 1] - x[i]) / (y[i + 1] - y[i]))


def sod_fronts(x: np.ndarray, rho: np.ndarray, gamma: float = 1.4) -> dict[str, float]:
    """Shock and rarefaction-edge locations read off a density profile.

    The shock is the midpoint-density crossing scanned from the right; the
    rarefaction head/tail are the 10%/90% crossings of the expansion's
    density drop scanned from the left.
    """
    p_star, u_star = exact.star_state(exact.SOD_LEFT, exact.SOD_RIGHT, gamma)
    rho_l, rho_r = exact.SOD_LEFT.rho, exact.SOD_RIGHT.rho
    rho_star_l = rho_l * (p_star / exact.SOD_LEFT.p) ** (1.0 / gamma)
    ratio = p_star / exact.SOD_RIGHT.p
    g1 = (gamma - 1.0) / (gamma + 1.0)
    rho_star_r = rho_r * (ratio + g1) / (g1 * ratio + 1.0)
    drop = rho_l - rho_star_l
    return {
        "shock": level_crossing(x, rho, 0.5 * (rho_star_r + rho_r), from_left=False),
        "rarefaction_head": level_crossing(x, rho, rho_l - 0.1 * drop),
        "rarefaction_tail": level_crossing(x, rho, rho_star_l + 0.1 * drop),
    }


def sod(n: int, t_end: float = SOD_T_END, params: CwenoParams = CwenoParams(p_exponent=0.6), cfl: float = 0.45) -> RunResult:
    grid = Grid1D(-0.5, 0.5, n)
    mins = {"rho": math.inf, "p": math.inf}

    def monitor(t, values):
        s = EulerState.from_conserved(values[:, grid.interior])
        mins["rho"] = min(mins["rho"], float(s.rho.min()))
        mins["p"] = min(mins["p"], float(s.pressure.min()))

    f, steps = solve_1d(grid, euler_model(), sod_initial(grid), t_end, BoundaryKind.OUTFLOW, params, cfl, monitor)
    s = EulerState.from_conserved(f.interior)
    rho_ex, _, _ = exact.sod_reference(grid.centers, t_end)
    l1 = error_norms(s.rho, rho_ex, grid)
    fronts = sod_fronts(grid.centers, s.rho)
    ref_fronts = sod_fronts(grid.centers, rho_ex)
    offsets = {k: abs(fronts[k] - ref_fronts[k]) for k in fronts}
    diag = dict(min_rho=mins["rho"], min_p=mins["p"], fronts=fronts, reference_fronts=ref_fronts, front_offsets=offsets)
    return RunResult(n, f, steps, l1, diagnostics=diag)


def buckley_leverett(
    n: int,
    t_end: float = 0.2,
    gravity: bool = False,
    params: CwenoParams = CwenoParams(),
    cfl: float = 0.45,
    domain: tuple[float, float] = (0.0, 1.0),
) -> RunResult:
    """Riemann problem ``u = 0`` left of ``1 - 1/sqrt(2)``, ``u = 1`` right of it."""
    lo, hi = domain
    grid = Grid1D(lo, hi, n)
    u0 = step_averages(grid.interfaces, BL_JUMP, 0.0, 1.0)
    mon = _Extrema(grid, periodic=False)
    model = buckley_leverett_model(BuckleyLeverettParams(0.01, gravity))
    f, steps = solve_1d(grid, model, u0, t_end, BoundaryKind.OUTFLOW, params, cfl, mon)
    return RunResult(n, f, steps, diagnostics=dict(min=mon.lo, max=mon.hi))


def taylor_green(n: int, t_end: float = 2.0, nu: float = 0.05, params: CwenoParams = CwenoParams(), cfl: float = 0.45) -> RunResult:
    grid = Grid2D.square(0.0, TWO_PI, n)
    f, steps = solve_vorticity(grid, taylor_green_vorticity_averages(grid), nu, t_end, params, cfl)
    pts = point_values_2d(f, params)
    norms = error_norms(pts, lambda X, Y: exact.taylor_green_vorticity(X, Y, t_end, nu), grid)
    return RunResult(n, f, steps, norms)


def double_shear_layer(
    n: int,
    t_end: float = 10.0,
    nu: float = 0.0,
    params: CwenoParams = CwenoParams(),
    cfl: float = 0.45,
    output_times: Iterable[float] = SHEAR_OUTPUT_TIMES,
) -> RunResult:
    """Shear-layer roll-up; tracks mean vorticity and discrete divergence."""
    grid = Grid2D.square(0.0, TWO_PI, n)
    w0 = shear_layer_vorticity_averages(grid)
    total0 = float(np.sum(w0))
    scale = float(np.sum(np.abs(w0)))
    times = sorted({t for t in output_times if 0 < t < t_end} | {t_end})
    diag = dict(max_mean_drift=0.0, max_divergence=0.0, output_times=times)
    snapshots = {}

    def drift(values):
        return abs(float(np.sum(values[grid.interior])) - total0) / scale

    def monitor(t, values):
        diag["max_mean_drift"] = max(diag["max_mean_drift"], drift(values))

    field, t0, steps = CellField.from_interior(grid, w0), 0.0, 0
    for t_out in times:
        field, k = solve_vorticity(grid, field.interior, nu, t_out, params, cfl, monitor, t_start=t0)
        steps += k
        t0 = t_out
        vel = vorticity_velocities(field, params)
        div = float(np.max(np.abs(discrete_divergence(vel, grid))))
        diag["max_divergence"] = max(diag["max_divergence"], div)
        snapshots[t_out] = field.interior.copy()
        log.info("shear layer N=%d t=%g divergence=%.2e drift=%.2e", n, t_out, div, drift(field.values))
    return RunResult(n, field, steps, diagnostics=diag, snapshots=snapshots)


def restrict_averages(fine: np.ndarray, factor: int) -> np.ndarray:
    """Average groups of ``factor`` fine cells onto the coarse grid."""
    fine = np.asarray(fine, dtype=float)
    if fine.shape[-1] % factor:
        raise MismatchedResolutions(f"{fine.shape[-1]} cells do not split into groups of {factor}")
    return fine.reshape(*fine.shape[:-1], -1, factor).mean(axis=-1)


def self_distance(coarse: RunResult, reference: RunResult) -> float:
    """L1 distance between a coarse run and a finer run restricted to its grid."""
    n, m = coarse.field.grid.n_cells, reference.field.grid.n_cells
    if m % n:
        raise MismatchedResolutions(f"reference N={m} is not a multiple of N={n}")
    ref = restrict_averages(reference.field.interior, m // n)
    return float(np.sum(np.abs(coarse.field.interior - ref)) * coarse.field.grid.dx)


# --- tables -----------------------------------------------------------------


class ConvergenceRow(NamedTuple):
    n: int
    l1: float
    l1_rate: Optional[float]
    linf: float
    linf_rate: Optional[float]
    l2: Optional[float] = None
    l2_rate: Optional[float] = None


def _rate(prev: float, cur: float, ratio: float) -> float:
    return math.log(prev / cur) / math.log(ratio)


def convergence_table(errors: Sequence[tuple]) -> list[ConvergenceRow]:
    """Rows ``(N, L1, Linf[, L2])`` -> rows with successive observed orders."""
    rows: list[ConvergenceRow] = []
    for i, e in enumerate(errors):
        n, l1, linf = int(e[0]), float(e[1]), float(e[2])
        l2 = float(e[3]) if len(e) > 3 else None
        if i == 0:
            rows.append(ConvergenceRow(n, l1, None, linf, None, l2, None))
            continue
        prev = rows[-1]
        if n != 2 * prev.n:
            raise MismatchedResolutions(f"resolution {n} does not double {prev.n}")
        rows.append(
            ConvergenceRow(
                n,
                l1,
                _rate(prev.l1, l1, 2.0),
                linf,
                _rate(prev.linf, linf, 2.0),
                l2,
                _rate(prev.l2, l2, 2.0) if l2 is not None else None,
            )
        )
    return rows


def endpoint_rates(rows: Sequence[ConvergenceRow]) -> dict[str, float]:
    """Order measured between the coarsest and finest rows only."""
    if len(rows) < 2:
        return {}
    a, b = rows[0], rows[-1]
    ratio = b.n / a.n
    out = {"L1": _rate(a.l1, b.l1, ratio), "Linf": _rate(a.linf, b.linf, ratio)}
    if a.l2 is not None and b.l2 is not None:
        out["L2"] = _rate(a.l2, b.l2, ratio)
    return out


# --- output -----------------------------------------------------------------


def _fmt(v) -> str:
    return "" if v is None else format(v, ".17g")


def write_csv(path: Path, header: Sequence[str], columns: Sequence[np.ndarray]) -> Path:
    path.parent.mkdir(parents=True, exist_ok=True)
    cols = [np.asarray(c, dtype=float).ravel() for c in columns]
    with open(path, "w", newline="\n") as fh:
        fh.write(",".join(header) + "\n")
        for row in zip(*cols):
            fh.write(",".join(format(v, ".17g") for v in row) + "\n")
    return path


def write_table(path: Path, rows: Sequence[ConvergenceRow]) -> Path:
    path.parent.mkdir(parents=True, exist_ok=True)
    with_l2 = any(r.l2 is not None for r in rows)
    header = ["N", "L1", "L1rate", "Linf", "Linfrate"] + (["L2", "L2rate"] if with_l2 else [])
    with open(path, "w", newline="\n") as fh:
        fh.write(",".join(header) + "\n")
        for r in rows:
            vals = [str(r.n), _fmt(r.l1), _fmt(r.l1_rate), _fmt(r.linf), _fmt(r.linf_rate)]
            if with_l2:
                vals += [_fmt(r.l2), _fmt(r.l2_rate)]
            fh.write(",".join(vals) + "\n")
    return path


def write_solution_1d(path: Path, field: CellField, euler: bool = False) -> Path:
    x = field.grid.centers
    if euler:
        s = EulerState.from_conserved(field.interior)
        return write_csv(path, ["x", "rho", "m", "E", "u", "p"], [x, s.rho, s.m, s.E, s.velocity, s.pressure])
    return write_csv(path, ["x", "u"], [x, field.interior[0]])


def write_solution_2d(path: Path, grid: Grid2D, omega: np.ndarray) -> Path:
    X, Y = grid.mesh()
    return write_csv(path, ["x", "y", "omega"], [X, Y, omega])


def run_experiment(config: ExperimentConfig) -> list[Path]:
    """Run every resolution of ``config`` and write CSV files; return their paths."""
    exp, out = config.experiment, config.output_dir
    params, cfl = config.cweno, config.cfl
    written: list[Path] = []
    errors = []
    stem = exp.value
    for n in config.resolutions:
        log.info("%s: N=%d", stem, n)
        if exp is Experiment.ADVECTION_ACCURACY:
            r = advection_accuracy(n, config.t_end, params, cfl)
        elif exp is Experiment.BURGERS_ACCURACY:
            r = burgers_accuracy(n, config.t_end, params, cfl)
        elif exp is Experiment.BURGERS_SHOCK:
            r = burgers_shock(n, config.t_end, params, cfl)
        elif exp is Experiment.SOD:
            r = sod(n, config.t_end, params, cfl)
        elif exp in (Experiment.BUCKLEY_LEVERETT, Experiment.BUCKLEY_LEVERETT_GRAVITY):
            r = buckley_leverett(n, config.t_end, exp is Experiment.BUCKLEY_LEVERETT_GRAVITY, params, cfl)
        elif exp is Experiment.TAYLOR_GREEN:
            r = taylor_green(n, config.t_end, config.nu, params, cfl)
        else:
            r = double_shear_layer(n, config.t_end, config.nu, params, cfl)

        if isinstance(r.field.grid, Grid1D):
            written.append(write_solution_1d(out / f"{stem}_N{n}.csv", r.field, euler=exp is Experiment.SOD))
        elif r.snapshots:
            for t, omega in r.snapshots.items():
                written.append(write_solution_2d(out / f"{stem}_N{n}_t{t:g}.csv", r.field.grid, omega))
        else:
            written.append(write_solution_2d(out / f"{stem}_N{n}.csv", r.field.grid, r.field.interior))
        if r.norms is not None and exp in ACCURACY_EXPERIMENTS:
            e = r.norms
            errors.append((n, e.l1, e.linf, e.l2) if exp is Experiment.TAYLOR_GREEN else (n, e.l1, e.linf))
    if errors:
        rows = convergence_table(errors)
        written.append(write_table(out / f"{stem}_table.csv", rows))
        rates = endpoint_rates(rows)
        if rates:
            path = out / f"{stem}_endpoint_rates.csv"
            with open(path, "w", newline="\n") as fh:
                fh.write("norm,rate\n")
                fh.writelines(f"{k},{_fmt(v)}\n" for k, v in rates.items())
            written.append(path)
    return written
