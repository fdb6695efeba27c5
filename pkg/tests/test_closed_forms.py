from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from helpers import steklov_residual
from steklov_trees.closed_forms import (
    closed_steklov,
    crab_steklov,
    es_eigenfunctions,
    es_sigma_pm,
    es_sigma_pm_exact,
    es_steklov,
    spider_eigenfunctions,
    spider_steklov,
)
from steklov_trees.graph import FamilySpec, build_crab, build_extra_special, build_spider
from steklov_trees.spectra import steklov_spectrum


def numeric(tree):
    return steklov_spectrum(tree).values


@given(st.integers(0, 5), st.integers(0, 5), st.integers(1, 6), st.integers(1, 6))
@settings(max_examples=80, deadline=None)
def test_spider_spectrum(p1, p2, a, b):
    l1, l2 = max(a, b), min(a, b)
    if p1 + p2 < 2:
        return
    closed = spider_steklov(p1, p2, l1, l2)
    tree = build_spider([(p1, l1), (p2, l2)])
    assert closed.order == len(numeric(tree))
    assert np.allclose(closed.values(), numeric(tree), atol=1e-10)


def test_spider_reference():
    vals = spider_steklov(1, 2, 3, 1).values()
    assert vals[1] == pytest.approx(3 / 7)
    mixed = [e for e in spider_steklov(2, 3, 2, 1).entries if e.label == "mixed"][0]
    assert mixed.value == Fraction(5, 8)


def test_half_bound_spiders():
    for n in range(7, 13):
        for m in range(3, n // 2 + 1):
            assert spider_steklov(m - 1, n - 2 * m + 1, 2, 1).values()[1] == pytest.approx(0.5)


@given(st.integers(1, 5), st.integers(1, 5), st.integers(1, 5))
@settings(max_examples=60, deadline=None)
def test_crab_spectrum(b1, b2, r):
    closed = crab_steklov(b1, b2, r)
    assert np.allclose(closed.values(), numeric(build_crab(b1, b2, r)), atol=1e-10)


def test_crab_reference():
    assert np.allclose(crab_steklov(1, 2, 1).values(), [0, 0.6, 1])
    for n in range(5, 13):
        assert crab_steklov(1, n - 3, 1).values()[1] == pytest.approx((n - 2) / (2 * n - 5))


@pytest.mark.parametrize("b", range(3, 9))
@pytest.mark.parametrize("p", range(1, 5))
def test_es_spectrum(b, p):
    closed = es_steklov(b, p)
    assert np.allclose(closed.values(), numeric(build_extra_special(b, p)), atol=1e-10)
    lo, hi = es_sigma_pm(b, p)
    assert lo < hi
    assert es_sigma_pm_exact(b, p)[0].d == b * b - 2 * b + 9


def test_es_is_sigma2_when_short_legs_dominate():
    lo, _ = es_sigma_pm(3, 2)
    assert numeric(build_extra_special(3, 2))[1] == pytest.approx(lo)


@given(st.integers(0, 5), st.integers(0, 5), st.integers(1, 5), st.integers(1, 5))
@settings(max_examples=60, deadline=None)
def test_spider_eigenfunctions(p1, p2, a, b):
    l1, l2 = max(a, b), min(a, b)
    if p1 + p2 < 2:
        return
    tree = build_spider([(p1, l1), (p2, l2)])
    efs = spider_eigenfunctions(p1, p2, l1, l2)
    assert len(efs) == p1 + p2
    for ef in efs:
        assert steklov_residual(tree, ef) <= 1e-9


@pytest.mark.parametrize("b", range(3, 8))
@pytest.mark.parametrize("p", range(1, 5))
def test_es_eigenfunctions(b, p):
    tree = build_extra_special(b, p)
    efs = es_eigenfunctions(b, p)
    assert len(efs) == b
    for ef in efs:
        assert steklov_residual(tree, ef) <= 1e-9


def test_es_eigenfunctions_linearly_independent():
    tree = build_extra_special(5, 2)
    from steklov_trees.graph import leaves

    B = np.array([ef.values[list(leaves(tree).members)] for ef in es_eigenfunctions(5, 2)])
    assert np.linalg.matrix_rank(B) == 5


@pytest.mark.parametrize("text", ["path:5", "path:6", "star:6", "spider:2x3,1x1", "spider:3x2", "crab:2,3,2", "es:4,2"])
def test_closed_steklov_dispatch(text):
    fam = FamilySpec.parse(text)
    assert np.allclose(closed_steklov(fam).values(), numeric(fam.build()), atol=1e-10)


def test_closed_steklov_unknown():
    assert closed_steklov(FamilySpec.parse("path:2")) is None
    assert closed_steklov(FamilySpec.parse("spider:1x3,1x2,1x1")) is None


def test_argument_checks():
    with pytest.raises(ValueError):
        spider_steklov(1, 0, 2, 1)
    with pytest.raises(ValueError):
        spider_steklov(1, 1, 1, 2)
    with pytest.raises(ValueError):
        es_steklov(2, 1)
