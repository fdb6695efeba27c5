import math
from fractions import Fraction

import pytest

from steklov_trees.bounds import es_lambda2, theorem_bound
from steklov_trees.closed_forms import es_sigma_pm
from steklov_trees.enumeration import TreeClassQuery
from steklov_trees.graph import canonical_code, leaves, matching_number
from steklov_trees.spectra import laplacian_spectrum, steklov_spectrum


def nm(n, m):
    return TreeClassQuery.by_vertices_matching(n, m)


def bm(b, m):
    return TreeClassQuery.by_leaves_matching(b, m)


def test_nm_cases():
    t = theorem_bound(nm(6, 1), "steklov")
    assert (t.theorem, t.bound, t.claim, str(t.extremal[0])) == ("slope", 1.0, "unique", "star:6")
    t = theorem_bound(nm(8, 2), "steklov")
    assert t.exact == Fraction(6, 11)
    assert str(t.extremal[0]) == "crab:1,5,1"
    t = theorem_bound(nm(8, 3), "laplacian")
    assert t.theorem == "ranch"
    assert t.bound == pytest.approx(4 * math.sin(math.pi / 10) ** 2)
    assert str(t.extremal[0]) == "spider:2x2,3x1"


def test_bm_table():
    assert theorem_bound(bm(2, 4), "laplacian").bound == pytest.approx(4 * math.sin(math.pi / 16) ** 2)
    assert theorem_bound(bm(2, 4), "steklov").exact == Fraction(2, 7)
    assert theorem_bound(bm(4, 2), "steklov").exact == Fraction(4, 7)
    t = theorem_bound(bm(3, 4), "steklov")  # m = 3*1 + 1
    assert (t.case, t.exact, str(t.extremal[0])) == ("m=br+1", Fraction(3, 8), "crab:1,2,2")
    t = theorem_bound(bm(3, 5), "steklov")  # m = 3*1 + 2
    assert (t.case, t.exact, t.claim, t.extremal) == ("m=br+2", Fraction(2, 7), "inequality", ())
    assert t.conjecture_value == pytest.approx(es_sigma_pm(3, 2)[0])
    t = theorem_bound(bm(3, 5), "laplacian")
    assert t.conjecture_value == pytest.approx(es_lambda2(3, 2))


@pytest.mark.parametrize("b,m", [(3, 3), (4, 3), (4, 4), (5, 3), (5, 5), (3, 6), (4, 7)])
def test_br_plus_s_spiders_attain(b, m):
    for op, spec in (("steklov", steklov_spectrum), ("laplacian", laplacian_spectrum)):
        t = theorem_bound(bm(b, m), op)
        assert t.case == "m=br+s" and t.claim == "attains"
        for fam in t.extremal:
            tree = fam.build()
            assert len(leaves(tree)) == b and matching_number(tree) == m
            assert spec(tree).kth(2) == pytest.approx(t.bound, abs=1e-9)


@pytest.mark.parametrize("b", range(3, 6))
@pytest.mark.parametrize("m", range(2, 6))
def test_named_extremals_are_in_class_and_attain(b, m):
    for op, spec in (("steklov", steklov_spectrum), ("laplacian", laplacian_spectrum)):
        t = theorem_bound(bm(b, m), op)
        for fam in t.extremal:
            tree = fam.build()
            assert (len(leaves(tree)), matching_number(tree)) == (b, m)
            assert spec(tree).kth(2) == pytest.approx(t.bound, abs=1e-9)


def test_two_attaining_spiders_when_s_equals_b():
    t = theorem_bound(bm(3, 3), "steklov")
    assert len({canonical_code(f.build()) for f in t.extremal}) == 2


def test_rejects_unknown_operator():
    with pytest.raises(ValueError):
        theorem_bound(nm(5, 2), "heat")
