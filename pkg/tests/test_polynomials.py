import math
from fractions import Fraction

import numpy as np
import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from steklov_trees.polynomials import (
    X,
    CharPoly,
    charpoly_B,
    charpoly_exact,
    charpoly_H,
    charpoly_path,
    count_real_roots,
    smallest_real_root,
)
from steklov_trees.quotients import b_root, path_laplacian_eigenvalue, path_matrix_charpolys

xs = sympy.Symbol("x")


def sympy_coeffs(M):
    p = sympy.Matrix(M).charpoly(xs)
    return tuple(int(c) for c in reversed(p.all_coeffs()))


small_ints = st.integers(-4, 4)


@given(st.integers(1, 5).flatmap(lambda k: st.lists(st.lists(small_ints, min_size=k, max_size=k), min_size=k, max_size=k)))
@settings(max_examples=60, deadline=None)
def test_berkowitz_vs_sympy(M):
    assert charpoly_exact(M).coeffs == sympy_coeffs(M)


@pytest.mark.parametrize("n", range(1, 13))
def test_recurrences_vs_determinants(n):
    P, B, H = path_matrix_charpolys(n)
    assert P == charpoly_path(n)
    assert B == charpoly_B(n)
    assert H == charpoly_H(n)


def test_base_cases():
    assert charpoly_path(1) == X
    assert charpoly_B(0) == CharPoly.const(1)
    assert charpoly_B(1) == X - 1
    assert charpoly_H(1) == X - 2


@pytest.mark.parametrize("n", range(1, 21))
def test_closed_form_roots(n):
    P, B = charpoly_path(n), charpoly_B(n)
    for k in range(1, n + 1):
        x = path_laplacian_eigenvalue(n, k)
        assert abs(P(x)) <= 1e-6 * max(1.0, P.max_abs_coeff())
    for i in range(1, n + 1):
        x = b_root(n, i)
        assert abs(B(x)) <= 1e-6 * max(1.0, B.max_abs_coeff())
    L = np.diag([1.0] + [2.0] * (n - 1) + [1.0]) - np.eye(n + 1, k=1) - np.eye(n + 1, k=-1)
    assert np.allclose(sorted(b_root(n, i) for i in range(1, n + 1)), np.linalg.eigvalsh(L[1:, 1:]), atol=1e-12)
    assert np.allclose([path_laplacian_eigenvalue(n, k) for k in range(1, n + 1)], np.linalg.eigvalsh(L[:n, :n] + np.diag([0.0] * (n - 1) + [-1.0])), atol=1e-12)


def test_arithmetic():
    p = (X - 1) * (X - 2)
    assert p.coeffs == (2, -3, 1)
    assert (p - p).is_zero()
    assert (X ** 3).degree == 3
    assert p.exact_div(X - 1) == X - 2
    with pytest.raises(ArithmeticError):
        p.exact_div(X - 3)
    assert str(p) == "x^2-3x+2"
    assert CharPoly.from_json(p.to_json()) == p
    assert p(Fraction(1, 2)) == Fraction(3, 4)
    assert 3 - X == -(X - 3)


def test_sturm_root_isolation():
    p = (X - 1) * (X - 3) * (X * X - 2)
    assert count_real_roots(p, Fraction(-10), Fraction(10)) == 4
    assert smallest_real_root(p) == pytest.approx(-math.sqrt(2), abs=1e-15)
    assert smallest_real_root(p, above=0) == pytest.approx(1.0, abs=1e-15)
    assert count_real_roots(X * X + 1, Fraction(-5), Fraction(5)) == 0
    with pytest.raises(ValueError):
        smallest_real_root(X * X + 1)
