import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from steklov_trees.graph import build_crab, build_path, build_spider
from steklov_trees.polynomials import smallest_real_root
from steklov_trees.quotients import (
    charpoly_identity_checks,
    crab_cubic,
    crab_lambda2,
    eigenvalue_product_inequality_check,
    lifted_path_eigenfunctions,
    quotient_matrix_crab,
    quotient_matrix_spider,
    random_pd_psd,
    spider_lambda2,
)
from steklov_trees.spectra import laplacian_matrix, laplacian_spectrum


@given(st.integers(1, 4), st.integers(1, 4), st.integers(1, 4))
@settings(max_examples=40, deadline=None)
def test_crab_partition_is_equitable(b1, b2, r):
    Q = quotient_matrix_crab(b1, b2, r)
    L = laplacian_matrix(build_crab(b1, b2, r))
    P = Q.characteristic_matrix(L.shape[0])
    assert np.allclose(L @ P, P @ Q.to_numpy())
    assert np.allclose(P.sum(axis=1), 1)


@given(st.integers(2, 5), st.integers(1, 5))
@settings(max_examples=30, deadline=None)
def test_spider_partition_is_equitable(b, r):
    Q = quotient_matrix_spider(b, r)
    L = laplacian_matrix(build_spider([(b, r)]))
    P = Q.characteristic_matrix(L.shape[0])
    assert np.allclose(L @ P, P @ Q.to_numpy())


def test_quotient_eigenvalues_are_graph_eigenvalues():
    Q = quotient_matrix_crab(2, 3, 2)
    full = laplacian_spectrum(build_crab(2, 3, 2)).values
    for mu in Q.eigenvalues():
        assert np.min(np.abs(full - mu)) < 1e-10
    assert np.allclose(np.sort(np.linalg.eigvals(Q.to_numpy()).real), Q.eigenvalues())


@pytest.mark.parametrize("b", range(2, 9))
@pytest.mark.parametrize("r", range(1, 7))
def test_lambda2_crab_and_spider(b, r):
    assert crab_lambda2(1, b - 1, r) == pytest.approx(laplacian_spectrum(build_crab(1, b - 1, r)).kth(2), abs=1e-12)
    assert spider_lambda2(b, r) == pytest.approx(laplacian_spectrum(build_spider([(b, r)])).kth(2), abs=1e-12)


def test_cubic_root_is_crab_lambda2():
    for b in range(2, 12):
        assert smallest_real_root(crab_cubic(b)) == pytest.approx(crab_lambda2(1, b - 1, 1), abs=1e-12)


@given(st.integers(1, 4), st.integers(1, 4), st.integers(1, 4))
@settings(max_examples=40, deadline=None)
def test_lifted_eigenfunctions(b1, b2, r):
    if b1 + b2 < 3:
        return
    L = laplacian_matrix(build_crab(b1, b2, r))
    pairs = lifted_path_eigenfunctions(b1, b2, r)
    assert len(pairs) == r * (b1 + b2 - 2)
    for lam, f in pairs:
        assert np.max(np.abs(L @ f - lam * f)) < 1e-10
        assert np.linalg.norm(f) > 0.5


def test_identities_small_range():
    rep = charpoly_identity_checks(r_max=3, b_max=5, n_max=8)
    assert rep.ok, rep.violations[:3]
    assert rep.checked > 50


def test_product_inequality_small():
    rep = eigenvalue_product_inequality_check(500, seed=1)
    assert rep.ok
    assert rep.min_slack > -1e-9


def test_random_pd_psd():
    P, S = random_pd_psd(np.random.default_rng(0), 5)
    assert np.linalg.eigvalsh(P).min() >= 0.1 - 1e-9
    assert np.linalg.eigvalsh(S).min() >= -1e-9


def test_argument_checks():
    with pytest.raises(ValueError):
        quotient_matrix_crab(0, 1, 1)
    with pytest.raises(ValueError):
        spider_lambda2(1, 2)
    with pytest.raises(ValueError):
        eigenvalue_product_inequality_check(0)
