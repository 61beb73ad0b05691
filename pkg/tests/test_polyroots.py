from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from morse_carnot.polyroots import (
    derivative,
    horner,
    poly_divmod,
    poly_gcd,
    poly_mul,
    real_roots,
    squarefree_decomposition,
)


def test_basic_arithmetic():
    assert horner([1, -3, 2], 5) == 12
    assert poly_mul([1, 1], [1, -1]) == [1, 0, -1]
    assert derivative([1, 0, 0, 5]) == [3, 0, 0]
    q, r = poly_divmod([1, 0, -1], [1, 1])
    assert q == [1, -1] and r == [0]


def test_gcd_monic():
    g = poly_gcd(poly_mul([1, -1], [1, 2]), poly_mul([2, -2], [1, 5]))
    assert g == [1, -1]


def test_squarefree_decomposition():
    # (x-1)^2 (x+2)
    parts = dict((m, f) for f, m in squarefree_decomposition(poly_mul(poly_mul([1, -1], [1, -1]), [1, 2])))
    assert parts[2] == [1, -1]
    assert parts[1] == [1, 2]


def test_stationarity_polynomial_roots():
    coeffs = (-2, 9, 15, -67, 63, -18, 0, 0, 0)
    roots = real_roots(coeffs)
    assert [m for _, m in roots] == [1, 3, 1, 2, 1]
    values = [x for x, _ in roots]
    expected = [-3.0, 0.0, (11 - 73 ** 0.5) / 4, 1.0, (11 + 73 ** 0.5) / 4]
    for got, want in zip(values, expected):
        assert got == pytest.approx(want, rel=1e-14, abs=1e-15)


def test_no_real_roots():
    assert real_roots([1, 0, 1]) == []
    assert real_roots([5]) == []


@settings(max_examples=15)
@given(st.lists(st.integers(-6, 6), min_size=1, max_size=4, unique=True),
       st.lists(st.integers(1, 3), min_size=4, max_size=4))
def test_recovers_integer_roots(rs, mults):
    coeffs = [1]
    for x, m in zip(rs, mults):
        for _ in range(m):
            coeffs = poly_mul(coeffs, [1, -x])
    found = real_roots(coeffs)
    assert [(round(x), m) for x, m in found] == sorted(zip(rs, mults[:len(rs)]))
    assert all(x == float(round(x)) for x, _ in found)


def test_fraction_inputs():
    roots = real_roots([Fraction(1), Fraction(-1, 2)])
    assert roots == [(0.5, 1)]
