"""Transmission through the delta comb: closed forms, sweeps and resonances.

The general route evaluates the exact M11 polynomial at (alpha, beta) and uses
T_N = |2c|^(2N) / |M11|^2.  For N = 1, 2, 4 there are explicit trigonometric
expressions in u = hbar^2 k / (m strength) and kL; those are coded separately
so the two routes can check each other.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .multinomial import eval_polynomial, m11_polynomial
from .scatter import (
    DomainError,
    PhysicalParams,
    alpha_beta,
    energy_param_c,
    phase_param_K,
    transmission_matrix_power,
)

INV_PHI = (math.sqrt(5) - 1) / 2


@dataclass(frozen=True)
class SweepRecord:
    k: float
    t: float
    r: float


@dataclass(frozen=True)
class ResonanceRecord:
    k_star: float
    t_peak: float
    bracket: tuple[float, float]


def _check_k(k):
    if np.any(~np.isfinite(k)) or np.any(np.asarray(k) <= 0):
        raise DomainError("wavenumber must be positive and finite")


def omega(N: int, c: complex, K: complex) -> complex:
    """K^N * M11(N); a polynomial in (c, K) with no negative powers of K."""
    alpha, beta = alpha_beta(c, K)
    return eval_polynomial(m11_polynomial(N), alpha, beta) * K**N


def transmission_closed(N: int, k: float, p: PhysicalParams) -> float:
    c = energy_param_c(k, p)
    K = phase_param_K(k, p.spacing)
    return (abs(2 * c) ** N / abs(omega(N, c, K))) ** 2


def transmission_single(k, p: PhysicalParams):
    _check_k(k)
    k = np.asarray(k, dtype=float)
    x = p.mass * p.strength / (p.hbar**2 * k)
    return 1.0 / (1.0 + x**2)


def transmission_double(k, p: PhysicalParams):
    _check_k(k)
    k = np.asarray(k, dtype=float)
    u = p.reduced_wavenumber(k)
    phase = 2 * k * p.spacing
    return u**4 / ((1 - u**2 - np.cos(phase)) ** 2 + (2 * u + np.sin(phase)) ** 2)


def omega4_re_im(k, p: PhysicalParams):
    """Real and imaginary parts of omega for four deltas, in terms of u and kL."""
    _check_k(k)
    k = np.asarray(k, dtype=float)
    u = p.reduced_wavenumber(k)
    x = k * p.spacing
    w = 1 - u**2
    re = (
        1 - 6 * u**2 + u**4
        + (3 + 2 * u**2) * np.cos(4 * x)
        + 2 * u * np.sin(6 * x)
        - 3 * (w * np.cos(2 * x) + 2 * u * np.sin(2 * x))
        - w * np.cos(6 * x)
    )
    im = (
        -4 * u * w
        + (3 + 2 * u**2) * np.sin(4 * x)
        - 3 * w * np.sin(2 * x)
        + 6 * u * np.cos(2 * x)
        - w * np.sin(6 * x)
        - 2 * u * np.cos(6 * x)
    )
    return re, im


def transmission_quad(k, p: PhysicalParams):
    re, im = omega4_re_im(k, p)
    u = p.reduced_wavenumber(np.asarray(k, dtype=float))
    return u**8 / (re**2 + im**2)


def sweep(N: int, k_lo: float, k_hi: float, steps: int, p: PhysicalParams) -> list[SweepRecord]:
    """T_N and R_N on a uniform grid including both endpoints.

    T_N comes from the closed form, R_N from |M21|^2 / |M11|^2 of the matrix
    power, so ``t + r`` is a genuine unitarity check rather than an identity.
    """
    if not (0 < k_lo < k_hi) or not math.isfinite(k_hi):
        raise ValueError(f"need 0 < k_lo < k_hi, got ({k_lo}, {k_hi})")
    if int(steps) != steps or steps < 2:
        raise ValueError(f"steps must be an integer >= 2, got {steps}")
    out = []
    for k in np.linspace(k_lo, k_hi, int(steps)):
        k = float(k)
        _, r = transmission_matrix_power(N, k, p)
        out.append(SweepRecord(k, transmission_closed(N, k, p), r))
    return out


def golden_section_max(f, a: float, b: float, tol: float) -> tuple[float, float]:
    """Shrink [a, b] around a maximum of a unimodal ``f`` until b - a < tol."""
    c = b - INV_PHI * (b - a)
    d = a + INV_PHI * (b - a)
    fc, fd = f(c), f(d)
    while b - a >= tol:
        if fc >= fd:
            b, d, fd = d, c, fc
            c = b - INV_PHI * (b - a)
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + INV_PHI * (b - a)
            fd = f(d)
        if c >= d:
            # interval has collapsed to adjacent floats
            break
    return a, b


def find_resonances(
    N: int,
    k_lo: float,
    k_hi: float,
    p: PhysicalParams,
    grid: int = 2000,
    tol: float = 1e-8,
) -> list[ResonanceRecord]:
    """Interior local maxima of T_N on a grid, each refined by golden section.

    Returns an empty list when T_N is monotone over the grid.
    """
    if grid < 10:
        raise ValueError(f"grid must be >= 10, got {grid}")
    if tol <= 0:
        raise ValueError(f"tol must be positive, got {tol}")
    recs = sweep(N, k_lo, k_hi, grid, p)
    ks = [r.k for r in recs]
    ts = [r.t for r in recs]

    def f(k):
        return transmission_closed(N, k, p)

    found = []
    for i in range(1, len(ks) - 1):
        if not (ts[i - 1] < ts[i] >= ts[i + 1]):
            continue
        a, b = golden_section_max(f, ks[i - 1], ks[i + 1], tol)
        k_star = 0.5 * (a + b)
        t_star = f(k_star)
        if t_star < ts[i]:
            k_star, t_star = ks[i], ts[i]
        found.append(ResonanceRecord(k_star, t_star, (ks[i - 1], ks[i + 1])))
    found.sort(key=lambda r: r.k_star)
    return found
