"""Single-delta transfer matrix and its N-fold composition.

A comb of N deltas of strength ``strength`` sits at x = L, 2L, ..., NL.  In
the rescaled amplitudes (A_n K^n, B_n K^-n) every barrier has the same
transfer matrix

    T = [[(2c - 1) / K, -K],
         [1 / K,        (2c + 1) K]]

with c = i k hbar^2 / (2 m strength) and K = exp(i k L), so the whole comb
is described by T^N / (2c)^N.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass


class DomainError(ValueError):
    """Physical input outside the range where the formalism is defined."""


class DegenerateMatrixError(ArithmeticError):
    """Transfer matrix whose (1,1) entry vanishes; transmission undefined."""


def _check_finite(*values: complex) -> None:
    for v in values:
        if not cmath.isfinite(v):
            raise DomainError(f"non-finite value {v!r}")


@dataclass(frozen=True)
class PhysicalParams:
    """Scattering configuration: hbar, mass, delta strength, spacing and count.

    ``strength > 0`` is a barrier, ``strength < 0`` a well.
    """

    hbar: float
    mass: float
    strength: float
    spacing: float = 1.0
    count: int = 1

    def __post_init__(self):
        _check_finite(self.hbar, self.mass, self.strength, self.spacing)
        if self.hbar <= 0:
            raise DomainError(f"hbar must be positive, got {self.hbar}")
        if self.mass <= 0:
            raise DomainError(f"mass must be positive, got {self.mass}")
        if self.strength == 0:
            raise DomainError("strength must be nonzero")
        if self.spacing <= 0:
            raise DomainError(f"spacing must be positive, got {self.spacing}")
        if int(self.count) != self.count or self.count < 1:
            raise DomainError(f"count must be a positive integer, got {self.count}")

    @classmethod
    def natural(cls, count: int = 1, spacing: float = 1.0) -> "PhysicalParams":
        """hbar = m = 1, strength = 1/2, so that hbar^2 / (2 m strength) = 1."""
        return cls(hbar=1.0, mass=1.0, strength=0.5, spacing=spacing, count=count)

    def reduced_wavenumber(self, k: float) -> float:
        """u = hbar^2 k / (m strength), i.e. |2c| with the sign of the strength."""
        return self.hbar**2 * k / (self.mass * self.strength)


def energy_param_c(k: float, p: PhysicalParams) -> complex:
    if not math.isfinite(k) or k <= 0:
        raise DomainError(f"wavenumber must be positive, got {k}")
    return 1j * k * p.hbar**2 / (2.0 * p.mass * p.strength)


def phase_param_K(k: float, L: float) -> complex:
    if not math.isfinite(k) or k <= 0:
        raise DomainError(f"wavenumber must be positive, got {k}")
    if not math.isfinite(L) or L <= 0:
        raise DomainError(f"spacing must be positive, got {L}")
    return cmath.exp(1j * k * L)


def alpha_beta(c: complex, K: complex) -> tuple[complex, complex]:
    """Diagonal entries of T: alpha = (2c - 1)/K, beta = (2c + 1) K."""
    _check_finite(c, K)
    return (2 * c - 1) / K, (2 * c + 1) * K


@dataclass(frozen=True)
class TransferMatrix:
    m11: complex
    m12: complex
    m21: complex
    m22: complex

    @classmethod
    def identity(cls) -> "TransferMatrix":
        return cls(1 + 0j, 0j, 0j, 1 + 0j)

    def __matmul__(self, other: "TransferMatrix") -> "TransferMatrix":
        a, b, c, d = self.m11, self.m12, self.m21, self.m22
        e, f, g, h = other.m11, other.m12, other.m21, other.m22
        return TransferMatrix(a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h)

    def scaled(self, factor: complex) -> "TransferMatrix":
        return TransferMatrix(self.m11 * factor, self.m12 * factor,
                              self.m21 * factor, self.m22 * factor)

    def det(self) -> complex:
        return self.m11 * self.m22 - self.m12 * self.m21

    def trace(self) -> complex:
        return self.m11 + self.m22

    def as_rows(self) -> list[list[complex]]:
        return [[self.m11, self.m12], [self.m21, self.m22]]


def transfer_matrix(c: complex, K: complex) -> TransferMatrix:
    alpha, beta = alpha_beta(c, K)
    return TransferMatrix(alpha, -K, 1 / K, beta)


def matrix_power(T: TransferMatrix, N: int) -> TransferMatrix:
    """T^N by N - 1 left-to-right products.

    Deliberately linear (no repeated squaring): this is the reference route
    the closed-form polynomial is checked against.
    """
    if int(N) != N or N < 1:
        raise DomainError(f"power must be a positive integer, got {N}")
    result = T
    for _ in range(N - 1):
        result = result @ T
    return result


def scattering_from_matrix(M: TransferMatrix, c: complex, N: int) -> tuple[float, float]:
    """Transmission and reflection probabilities from M = T^N.

    T_N = |2c|^(2N) / |M11|^2 and R_N = |M21|^2 / |M11|^2.
    """
    m11_sq = abs(M.m11) ** 2
    if abs(M.m11) < 1e-300 or m11_sq == 0.0:
        raise DegenerateMatrixError("|M11| vanishes")
    t = abs(2 * c) ** (2 * N) / m11_sq
    r = abs(M.m21) ** 2 / m11_sq
    return t, r


def transmission_matrix_power(N: int, k: float, p: PhysicalParams) -> tuple[float, float]:
    """(T_N, R_N) straight from the N-th power of the single-delta matrix."""
    c = energy_param_c(k, p)
    K = phase_param_K(k, p.spacing)
    return scattering_from_matrix(matrix_power(transfer_matrix(c, K), N), c, N)
