"""Reference solutions used as validation oracles."""

from __future__ import annotations

import math
from typing import NamedTuple

import numpy as np

from .errors import OutOfSmoothRegime

BURGERS_BREAK_TIME = 1.0


def advection_sine(x, t):
    return np.sin(np.asarray(x) - t)


def burgers_sine(x, t: float, tol: float = 1e-14, max_iter: int = 100):
    """Pre-shock solution of ``u_t + (u^2/2)_x = 0`` with ``u(x, 0) = 0.5 + sin x``.

    Solves ``u = 0.5 + sin(x - u t)`` pointwise by safeguarded Newton
    iteration; the root is bracketed in ``[-0.5, 1.5]`` and unique for
    ``t < 1``.
    """
    if t >= BURGERS_BREAK_TIME:
        raise OutOfSmoothRegime(f"Burgers data breaks at t=1; requested t={t}")
    x = np.asarray(x, dtype=float)
    lo = np.full_like(x, -0.5)
    hi = np.full_like(x, 1.5)
    u = 0.5 + np.sin(x)
    for _ in range(max_iter):
        F = u - 0.5 - np.sin(x - u * t)
        lo = np.where(F < 0, u, lo)
        hi = np.where(F > 0, u, hi)
        step = F / (1.0 + t * np.cos(x - u * t))
        nxt = u - step
        outside = (nxt < lo) | (nxt > hi)
        nxt = np.where(outside, 0.5 * (lo + hi), nxt)
        done = np.max(np.abs(nxt - u)) <= tol
        u = nxt
        if done:
            break
    return u


def taylor_green_vorticity(x, y, t: float, nu: float):
    return 2.0 * np.cos(x) * np.cos(y) * math.exp(-2.0 * nu * t)


def taylor_green_velocity(x, y, t: float, nu: float):
    decay = math.exp(-2.0 * nu * t)
    return -np.cos(x) * np.sin(y) * decay, np.sin(x) * np.cos(y) * decay


# --- exact Riemann solver for the Euler equations ---------------------------


class Primitive(NamedTuple):
    rho: float
    u: float
    p: float


SOD_LEFT = Primitive(1.0, 0.0, 1.0)
SOD_RIGHT = Primitive(0.125, 0.0, 0.1)


def _pressure_function(p: float, s: Primitive, gamma: float) -> tuple[float, float]:
    c = math.sqrt(gamma * s.p / s.rho)
    if p > s.p:
        a = 2.0 / ((gamma + 1.0) * s.rho)
        b = (gamma - 1.0) / (gamma + 1.0) * s.p
        q = math.sqrt(a / (p + b))
        return (p - s.p) * q, q * (1.0 - 0.5 * (p - s.p) / (p + b))
    r = p / s.p
    e = (gamma - 1.0) / (2.0 * gamma)
    return 2.0 * c / (gamma - 1.0) * (r**e - 1.0), r ** (-(gamma + 1.0) / (2.0 * gamma)) / (s.rho * c)


def star_state(left: Primitive, right: Primitive, gamma: float = 1.4, tol: float = 1e-12) -> tuple[float, float]:
    """Pressure and velocity between the two nonlinear waves."""
    cl = math.sqrt(gamma * left.p / left.rho)
    cr = math.sqrt(gamma * right.p / right.rho)
    du = right.u - left.u
    if 2.0 * (cl + cr) / (gamma - 1.0) <= du:
        raise ValueError("initial data generate vacuum")
    # two-rarefaction guess
    e = (gamma - 1.0) / (2.0 * gamma)
    p = ((cl + cr - 0.5 * (gamma - 1.0) * du) / (cl / left.p**e + cr / right.p**e)) ** (1.0 / e)
    p = max(p, tol)
    for _ in range(100):
        fl, dl = _pressure_function(p, left, gamma)
        fr, dr = _pressure_function(p, right, gamma)
        p_new = max(p - (fl + fr + du) / (dl + dr), tol)
        if abs(p_new - p) <= tol * 0.5 * (p_new + p):
            p = p_new
            break
        p = p_new
    fl, _ = _pressure_function(p, left, gamma)
    fr, _ = _pressure_function(p, right, gamma)
    return p, 0.5 * (left.u + right.u) + 0.5 * (fr - fl)


def _sample(xi: float, left: Primitive, right: Primitive, p_star: float, u_star: float, gamma: float) -> Primitive:
    g1 = (gamma - 1.0) / (gamma + 1.0)
    if xi <= u_star:
        s, sign = left, 1.0
    else:
        s, sign = right, -1.0
    c = math.sqrt(gamma * s.p / s.rho)
    # mirror the right side onto the left-side formulas
    xs, us = sign * xi, sign * s.u
    ust = sign * u_star
    if p_star > s.p:
        shock = us - c * math.sqrt((gamma + 1.0) / (2.0 * gamma) * p_star / s.p + (gamma - 1.0) / (2.0 * gamma))
        if xs <= shock:
            return s
        ratio = p_star / s.p
        return Primitive(s.rho * (ratio + g1) / (g1 * ratio + 1.0), u_star, p_star)
    head = us - c
    c_star = c * (p_star / s.p) ** ((gamma - 1.0) / (2.0 * gamma))
    tail = ust - c_star
    if xs <= head:
        return s
    if xs >= tail:
        return Primitive(s.rho * (p_star / s.p) ** (1.0 / gamma), u_star, p_star)
    cf = 2.0 / (gamma + 1.0) * (c + 0.5 * (gamma - 1.0) * (us - xs))
    uf = 2.0 / (gamma + 1.0) * (c + 0.5 * (gamma - 1.0) * us + xs)
    return Primitive(s.rho * (cf / c) ** (2.0 / (gamma - 1.0)), sign * uf, s.p * (cf / c) ** (2.0 * gamma / (gamma - 1.0)))


def riemann_exact(x, t: float, left: Primitive = SOD_LEFT, right: Primitive = SOD_RIGHT, x0: float = 0.0, gamma: float = 1.4):
    """Exact similarity solution ``(rho, u, p)`` sampled at ``x``."""
    if t <= 0:
        raise ValueError("t must be positive")
    p_star, u_star = star_state(left, right, gamma)
    xs = np.atleast_1d(np.asarray(x, dtype=float))
    out = np.array([_sample((xi - x0) / t, left, right, p_star, u_star, gamma) for xi in xs])
    return out[:, 0], out[:, 1], out[:, 2]


def sod_reference(x, t: float, gamma: float = 1.4):
    return riemann_exact(x, t, SOD_LEFT, SOD_RIGHT, 0.0, gamma)


def sod_wave_positions(t: float, gamma: float = 1.4) -> dict[str, float]:
    """Locations of the rarefaction head/tail, contact and shock at time ``t``."""
    left, right = SOD_LEFT, SOD_RIGHT
    p_star, u_star = star_state(left, right, gamma)
    cl = math.sqrt(gamma * left.p / left.rho)
    c_star = cl * (p_star / left.p) ** ((gamma - 1.0) / (2.0 * gamma))
    cr = math.sqrt(gamma * right.p / right.rho)
    shock = right.u + cr * math.sqrt((gamma + 1.0) / (2.0 * gamma) * p_star / right.p + (gamma - 1.0) / (2.0 * gamma))
    return {
        "rarefaction_head": (left.u - cl) * t,
        "rarefaction_tail": (u_star - c_star) * t,
        "contact": u_star * t,
        "shock": shock * t,
    }
