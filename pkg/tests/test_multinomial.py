import math
import time

import pytest
from hypothesis import given
from hypothesis import strategies as st

from deltacomb.multinomial import (
    BivariatePolynomial,
    coeff,
    eval_polynomial,
    eval_polynomial_float,
    m11_polynomial,
    submultinomial,
    triangle_rows,
)
from deltacomb.oracle import recurrence_polynomials

from .tables import TABLE_ROWS, parse_row

P = BivariatePolynomial
small_ints = st.integers(-50, 50)
polys = st.dictionaries(st.tuples(st.integers(0, 4), st.integers(0, 4)), small_ints,
                        max_size=6).map(P)


def test_parser_sanity():
    assert parse_row("a^3 - (2a + b)") == {(3, 0): 1, (1, 0): -2, (0, 1): -1}


@pytest.mark.parametrize("m, g, expected", [
    (2, 3, [4, 3, 2, 1]),
    (3, 3, [10, 12, 9, 4]),
    (3, 0, [1]),
])
def test_coeff_rows(m, g, expected):
    assert [coeff(m, g, k) for k in range(g + 1)] == expected


def test_coeff_m1_convention():
    assert [coeff(1, 5, k) for k in range(6)] == [1, 0, 0, 0, 0, 0]


@pytest.mark.parametrize("k", [-1, 4])
def test_coeff_bounds(k):
    with pytest.raises(IndexError):
        coeff(2, 3, k)


@given(st.integers(2, 12), st.integers(0, 25), st.data())
def test_coeff_matches_factorial_formula(m, g, data):
    k = data.draw(st.integers(0, g))
    f = math.factorial
    expected = (f(m - 1 + g - k) // (f(m - 1) * f(g - k))) * (f(m - 2 + k) // (f(m - 2) * f(k)))
    assert coeff(m, g, k) == expected


def test_coeff_is_big_int():
    # far past 64 bits
    assert coeff(40, 80, 40) > 2**64
    assert coeff(40, 80, 40) == math.comb(79, 39) * math.comb(78, 38)


def test_triangle_rows():
    assert triangle_rows(2, 3) == [[1], [2, 1], [3, 2, 1]]
    assert triangle_rows(3, 4) == [[1], [3, 2], [6, 6, 3], [10, 12, 9, 4]]
    assert triangle_rows(4, 1) == [[1]]


@pytest.mark.parametrize("R", [1, 2, 7, 20])
def test_triangle_two_is_descending_runs(R):
    flat = [x for row in triangle_rows(2, R) for x in row]
    runs = [x for top in range(1, R + 1) for x in range(top, 0, -1)]
    assert flat == runs
    assert len(flat) == R * (R + 1) // 2


def test_triangle_four_first_rows():
    # derived from the binomial product only, cross-checked through the recurrence below
    assert triangle_rows(4, 3) == [[1], [4, 3], [10, 12, 6]]


def test_submultinomial():
    assert submultinomial(2, 3) == P({(3, 0): 4, (2, 1): 3, (1, 2): 2, (0, 3): 1})
    assert submultinomial(1, 7) == P({(7, 0): 1})
    assert submultinomial(3, 3) == P({(3, 0): 10, (2, 1): 12, (1, 2): 9, (0, 3): 4})
    assert all(v > 0 for _, v in submultinomial(5, 6))
    assert len(submultinomial(5, 6)) == 7


@pytest.mark.parametrize("N", sorted(TABLE_ROWS))
def test_m11_matches_tables(N):
    assert dict(m11_polynomial(N).terms) == parse_row(TABLE_ROWS[N])
    assert m11_polynomial(N).format() == TABLE_ROWS[N]


def test_m11_tables_fast():
    m11_polynomial.cache_clear()
    t0 = time.perf_counter()
    for N in range(1, 8):
        m11_polynomial(N)
    assert time.perf_counter() - t0 < 1.0


def test_recurrence_exact():
    ps = recurrence_polynomials(31)
    for N in range(1, 32):
        assert m11_polynomial(N) == ps[N]


@pytest.mark.parametrize("N", range(1, 31))
def test_m11_structure(N):
    poly = m11_polynomial(N)
    for (i, j), v in poly:
        d = N - (i + j)
        assert d >= 0 and d % 2 == 0
        assert (v > 0) == ((d // 2) % 2 == 0)
    # each homogeneous block is a row of the matching triangle
    for deg, part in poly.groups():
        n = (N - deg) // 2
        coeffs = [abs(v) for _, v in part]
        expected = [1] if n == 0 else triangle_rows(n + 1, deg + 1)[deg]
        assert coeffs == expected


def test_format_variants():
    assert P().format() == "0"
    assert P.constant(-3).format() == "-3"
    assert P({(1, 0): 1, (0, 1): -1}).format() == "(a - b)"
    assert P({(2, 0): -2, (1, 1): -1}).format() == "-(2a^2 + ab)"
    assert P({(1, 1): 1}).format(("x", "y")) == "xy"


def test_zero_coefficients_dropped():
    p = P({(1, 0): 2, (0, 1): 0}) - P({(1, 0): 2})
    assert len(p) == 0 and not p


@given(polys, polys, polys)
def test_ring_laws(p, q, r):
    assert p + q == q + p
    assert p * q == q * p
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    assert p - p == P()


@given(polys, st.complex_numbers(max_magnitude=3), st.complex_numbers(max_magnitude=3))
def test_eval_is_homomorphism(p, a, b):
    q = p * p + 1
    lhs = eval_polynomial(q, a, b)
    v = eval_polynomial(p, a, b)
    assert abs(lhs - (v * v + 1)) <= 1e-9 * (1 + abs(v) ** 2)


def test_eval_examples():
    assert eval_polynomial(P({(2, 0): 1, (0, 0): -1}), -1 + 2j, 1 + 2j) == -4 - 4j
    assert eval_polynomial(P.constant(1), 0.3 - 7j, 12.5j) == 1
    assert eval_polynomial(P(), 1j, 1j) == 0


def test_eval_is_correctly_rounded():
    # b^2 + a - 2^60 at (2^60, 1): the float sum absorbs the 1 before cancelling
    p = P({(0, 2): 1, (1, 0): 1, (0, 0): -(2**60)})
    assert eval_polynomial(p, 2.0**60, 1.0) == 1
    assert eval_polynomial_float(p, 2.0**60, 1.0) == 0


def test_eval_rejects_nonfinite():
    with pytest.raises(ValueError):
        eval_polynomial(P.alpha(), complex("nan"), 1j)


@given(st.integers(1, 12), st.complex_numbers(max_magnitude=2), st.complex_numbers(max_magnitude=2))
def test_exact_and_float_eval_agree_small_n(N, a, b):
    p = m11_polynomial(N)
    exact = eval_polynomial(p, a, b)
    scale = sum(abs(v) for _, v in p) * max(1.0, abs(a), abs(b)) ** N
    assert abs(exact - eval_polynomial_float(p, a, b)) <= 1e-13 * scale
