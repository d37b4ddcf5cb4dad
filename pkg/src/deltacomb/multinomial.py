"""Exact bivariate integer polynomials for the (1,1) entry of T^N.

Writing alpha, beta for the diagonal of the single-delta matrix, the (1,1)
entry of T^N is

    M11(N) = sum_{n=0}^{N//2} (-1)^n P(n+1, N-2n)

where the homogeneous block P(m, g) = sum_k C(m, g, k) alpha^(g-k) beta^k has
coefficients C(m, g, k) = binom(m-1+g-k, m-1) * binom(m-2+k, m-2).
For m = 2 these are the descending runs 1; 2,1; 3,2,1; ... and for m = 3 the
triangle 1; 3,2; 6,6,3; 10,12,9,4; ...
"""
from __future__ import annotations

import cmath
import math
from collections.abc import Iterable, Iterator, Mapping
from functools import lru_cache
from itertools import groupby
from types import MappingProxyType

Monomial = tuple[int, int]


class BivariatePolynomial:
    """Polynomial in (alpha, beta) with arbitrary-precision integer coefficients.

    Stored as a map ``(i, j) -> coeff`` for the monomial alpha^i beta^j; zero
    coefficients are never kept.  Iteration order is canonical: descending
    total degree, then descending alpha degree.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Monomial, int] | Iterable[tuple[Monomial, int]] = ()):
        acc: dict[Monomial, int] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for (i, j), coeff in items:
            if i < 0 or j < 0:
                raise ValueError(f"negative exponent in {(i, j)}")
            if int(coeff) != coeff:
                raise TypeError(f"coefficient {coeff!r} is not an integer")
            key = (int(i), int(j))
            acc[key] = acc.get(key, 0) + int(coeff)
        ordered = sorted(((k, v) for k, v in acc.items() if v), key=_canonical_key)
        self._terms = MappingProxyType(dict(ordered))

    @classmethod
    def constant(cls, value: int) -> "BivariatePolynomial":
        return cls({(0, 0): value})

    @classmethod
    def alpha(cls) -> "BivariatePolynomial":
        return cls({(1, 0): 1})

    @classmethod
    def beta(cls) -> "BivariatePolynomial":
        return cls({(0, 1): 1})

    @property
    def terms(self) -> Mapping[Monomial, int]:
        return self._terms

    def __iter__(self) -> Iterator[tuple[Monomial, int]]:
        return iter(self._terms.items())

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = BivariatePolynomial.constant(other)
        if not isinstance(other, BivariatePolynomial):
            return NotImplemented
        return dict(self._terms) == dict(other._terms)

    def __hash__(self) -> int:
        return hash(tuple(self._terms.items()))

    def __repr__(self) -> str:
        return f"BivariatePolynomial({dict(self._terms)!r})"

    def __str__(self) -> str:
        return self.format()

    def _coerce(self, other) -> "BivariatePolynomial":
        if isinstance(other, BivariatePolynomial):
            return other
        if isinstance(other, int):
            return BivariatePolynomial.constant(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return BivariatePolynomial(list(self) + list(other))

    __radd__ = __add__

    def __neg__(self) -> "BivariatePolynomial":
        return BivariatePolynomial({k: -v for k, v in self})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict[Monomial, int] = {}
        for (i, j), a in self:
            for (p, q), b in other:
                key = (i + p, j + q)
                out[key] = out.get(key, 0) + a * b
        return BivariatePolynomial(out)

    __rmul__ = __mul__

    def degree(self) -> int:
        return max((i + j for i, j in self._terms), default=0)

    def groups(self) -> list[tuple[int, "BivariatePolynomial"]]:
        """Homogeneous components as ``(total_degree, part)``, highest first."""
        return [
            (deg, BivariatePolynomial(list(items)))
            for deg, items in groupby(self, key=lambda t: t[0][0] + t[0][1])
        ]

    def format(self, symbols: tuple[str, str] = ("a", "b")) -> str:
        """ASCII rendering grouped by total degree, e.g. ``a^3 - (2a + b)``.

        Multi-term homogeneous components are parenthesised when their
        coefficients share a sign, matching the way the closed form is laid
        out as alternating blocks.
        """
        if not self._terms:
            return "0"
        pieces = []
        for deg, part in self.groups():
            coeffs = [v for _, v in part]
            if len(coeffs) == 1:
                sign, body = _sign(coeffs[0]), _monomial(*next(iter(part.terms)), abs(coeffs[0]), symbols)
            elif all(v > 0 for v in coeffs) or all(v < 0 for v in coeffs):
                sign = _sign(coeffs[0])
                body = "(" + " + ".join(_monomial(i, j, abs(v), symbols) for (i, j), v in part) + ")"
            else:
                sign = "+"
                body = "(" + _plain(part, symbols) + ")"
            if not pieces:
                pieces.append(body if sign == "+" else "-" + body)
            else:
                pieces.append(f"{sign} {body}")
        return " ".join(pieces)


def _canonical_key(item: tuple[Monomial, int]) -> tuple[int, int]:
    (i, j), _ = item
    return (-(i + j), -i)


def _sign(v: int) -> str:
    return "-" if v < 0 else "+"


def _monomial(i: int, j: int, coeff: int, symbols: tuple[str, str]) -> str:
    a, b = symbols
    var = ""
    if i:
        var += a if i == 1 else f"{a}^{i}"
    if j:
        var += b if j == 1 else f"{b}^{j}"
    if not var:
        return str(coeff)
    return var if coeff == 1 else f"{coeff}{var}"


def _plain(p: BivariatePolynomial, symbols: tuple[str, str]) -> str:
    out = []
    for (i, j), v in p:
        mono = _monomial(i, j, abs(v), symbols)
        if not out:
            out.append(mono if v > 0 else "-" + mono)
        else:
            out.append(f"{_sign(v)} {mono}")
    return " ".join(out)


def coeff(m: int, g: int, k: int) -> int:
    """C(m, g, k) = binom(m-1+g-k, m-1) * binom(m-2+k, m-2).

    For m = 1 the second factor is taken as [k == 0], so that the first
    block of M11 is the single monomial alpha^g.
    """
    if m < 1 or g < 0:
        raise ValueError(f"need m >= 1 and g >= 0, got m={m}, g={g}")
    if not 0 <= k <= g:
        raise IndexError(f"k={k} outside 0..{g}")
    if m == 1:
        return 1 if k == 0 else 0
    return math.comb(m - 1 + g - k, m - 1) * math.comb(m - 2 + k, m - 2)


def triangle_rows(m: int, rows: int) -> list[list[int]]:
    """First ``rows`` rows (g = 0, 1, ...) of the order-m coefficient triangle."""
    if m < 2:
        raise ValueError(f"triangles are defined for m >= 2, got {m}")
    if rows < 1:
        raise ValueError(f"rows must be positive, got {rows}")
    return [[coeff(m, g, k) for k in range(g + 1)] for g in range(rows)]


def submultinomial(m: int, g: int) -> BivariatePolynomial:
    """Homogeneous block sum_k C(m, g, k) alpha^(g-k) beta^k."""
    return BivariatePolynomial({(g - k, k): coeff(m, g, k) for k in range(g + 1)})


@lru_cache(maxsize=None)
def m11_polynomial(N: int) -> BivariatePolynomial:
    """Closed form of the (1,1) entry of T^N as alternating triangle blocks."""
    if N < 1:
        raise ValueError(f"N must be positive, got {N}")
    total = BivariatePolynomial()
    for n in range(N // 2 + 1):
        block = submultinomial(n + 1, N - 2 * n)
        total = total + (block if n % 2 == 0 else -block)
    return total


def _gaussian_dyadic(z: complex) -> tuple[int, int, int]:
    """(re, im, e) with z == (re + i im) / 2**e exactly."""
    if not cmath.isfinite(z):
        raise ValueError(f"non-finite evaluation point {z!r}")
    (rn, rd), (in_, id_) = z.real.as_integer_ratio(), z.imag.as_integer_ratio()
    e = max(rd.bit_length(), id_.bit_length()) - 1
    return rn << (e - rd.bit_length() + 1), in_ << (e - id_.bit_length() + 1), e


def eval_polynomial(p: BivariatePolynomial, alpha: complex, beta: complex) -> complex:
    """Value of ``p`` at (alpha, beta), correctly rounded from exact arithmetic.

    The expanded form of M11 alternates large same-magnitude blocks, so naive
    floating-point summation loses every significant digit by N ~ 20 when
    |alpha| ~ 1.  Both inputs are dyadic rationals, so the sum is carried out
    over Gaussian integers and rounded once at the end.
    """
    if not p:
        return 0j
    ar, ai, ea = _gaussian_dyadic(complex(alpha))
    br, bi, eb = _gaussian_dyadic(complex(beta))
    # common power-of-two denominator 2**e for both variables
    e = max(ea, eb)
    ar, ai = ar << (e - ea), ai << (e - ea)
    br, bi = br << (e - eb), bi << (e - eb)

    top = p.degree()
    max_i = max(i for i, _ in p.terms)
    max_j = max(j for _, j in p.terms)
    apow = [(1, 0)]
    for _ in range(max_i):
        x, y = apow[-1]
        apow.append((x * ar - y * ai, x * ai + y * ar))
    bpow = [(1, 0)]
    for _ in range(max_j):
        x, y = bpow[-1]
        bpow.append((x * br - y * bi, x * bi + y * br))

    sr = si = 0
    for (i, j), c in p:
        x, y = apow[i]
        u, v = bpow[j]
        shift = e * (top - i - j)
        sr += (c * (x * u - y * v)) << shift
        si += (c * (x * v + y * u)) << shift
    scale = 1 << (e * top)
    return complex(sr / scale, si / scale)


def eval_polynomial_float(p: BivariatePolynomial, alpha: complex, beta: complex) -> complex:
    """Plain double-precision sum in canonical order.

    Kept for comparison; loses accuracy badly for large N (see
    :func:`eval_polynomial`).
    """
    return sum((complex(c) * alpha**i * beta**j for (i, j), c in p), 0j)
