import itertools
from collections import defaultdict

import networkx as nx
import pytest

from conftest import to_nx
from steklov_trees.enumeration import (
    ClassBoundError,
    TreeClassQuery,
    count_free_trees,
    enumerate_free_trees,
    random_subtree,
    random_tree,
    trees_in_class,
)
from steklov_trees.graph import TreeGraph, build_crab, canonical_code, leaves, matching_number

# number of free trees on n vertices, n = 1..16
KNOWN_COUNTS = [1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551, 1301, 3159, 7741, 19320]


def _dedup_nx(graphs):
    """Isomorphism classes by VF2, bucketed by degree sequence."""
    buckets = defaultdict(list)
    for g in graphs:
        key = tuple(sorted(d for _, d in g.degree()))
        if not any(nx.is_isomorphic(g, h) for h in buckets[key]):
            buckets[key].append(g)
    return [g for bucket in buckets.values() for g in bucket]


def _pruefer_classes(n):
    if n <= 2:
        return 1
    graphs = (nx.from_prufer_sequence(list(seq)) for seq in itertools.product(range(n), repeat=n - 2))
    return len(_dedup_nx(graphs))


def _leaf_extension_classes(n_max):
    reps = [nx.path_graph(1)]
    counts = [1]
    for n in range(2, n_max + 1):
        grown = []
        for g in reps:
            for v in list(g.nodes):
                h = g.copy()
                h.add_edge(v, n - 1)
                grown.append(h)
        reps = _dedup_nx(grown)
        counts.append(len(reps))
    return counts


@pytest.mark.parametrize("n", range(1, 17))
def test_known_counts(n):
    assert count_free_trees(n) == KNOWN_COUNTS[n - 1]


@pytest.mark.parametrize("n", range(1, 8))
def test_counts_vs_pruefer_oracle(n):
    assert count_free_trees(n) == _pruefer_classes(n)


def test_counts_vs_leaf_extension_oracle():
    assert _leaf_extension_classes(10) == [count_free_trees(n) for n in range(1, 11)]


@pytest.mark.parametrize("n", range(1, 12))
def test_enumeration_distinct_and_sorted(n):
    codes = [canonical_code(t) for t in enumerate_free_trees(n)]
    assert codes == sorted(set(codes))
    assert all(t.n == n for t in enumerate_free_trees(n))


def test_enumeration_pairwise_non_isomorphic():
    graphs = [to_nx(t) for t in enumerate_free_trees(8)]
    assert len(_dedup_nx(graphs)) == len(graphs)


def test_order_range():
    with pytest.raises(ValueError):
        list(enumerate_free_trees(0))
    with pytest.raises(ValueError):
        count_free_trees(21)


def test_enumeration_deterministic():
    assert [t.edges for t in enumerate_free_trees(9)] == [t.edges for t in enumerate_free_trees(9)]


def test_query_parse_and_errors():
    q = TreeClassQuery.parse("b=3,m=2")
    assert (q.mode, q.size, q.m) == ("bm", 3, 2)
    assert str(TreeClassQuery.parse(" n = 7 , m = 3 ")) == "n=7,m=3"
    for bad in ("n=3", "k=3,m=1", "n=4,m=3", "b=1,m=1", "n=4,m=0"):
        with pytest.raises(ValueError):
            TreeClassQuery.parse(bad)


def test_star_is_only_matching_one_tree():
    (t,) = trees_in_class(TreeClassQuery.by_vertices_matching(4, 1))
    assert sorted(t.degrees()) == [1, 1, 1, 3]


def test_two_leaf_class_is_paths():
    for m in range(1, 6):
        got = list(trees_in_class(TreeClassQuery.by_leaves_matching(2, m)))
        assert sorted(t.n for t in got) == [2 * m, 2 * m + 1]
        assert all(max(t.degrees()) <= 2 for t in got)


def test_class_contains_crabs():
    codes = {canonical_code(t) for t in trees_in_class(TreeClassQuery.parse("b=3,m=2"))}
    assert canonical_code(build_crab(1, 2, 1)) in codes
    assert canonical_code(build_crab(2, 1, 1)) == canonical_code(build_crab(1, 2, 1))


@pytest.mark.parametrize("b", range(2, 6))
@pytest.mark.parametrize("m", range(1, 6))
def test_leaf_class_order_bound(b, m):
    """Every member has n <= 2m + b - 1 and the margin order is empty."""
    q = TreeClassQuery.by_leaves_matching(b, m)
    members = list(trees_in_class(q))
    assert members
    for t in members:
        assert len(leaves(t)) == b and matching_number(t) == m
        assert 2 * m <= t.n <= 2 * m + b - 1


def test_class_bound_error_is_runtime_error():
    assert issubclass(ClassBoundError, RuntimeError)


def test_random_tree_is_seeded():
    assert random_tree(12, 5) == random_tree(12, 5)
    assert random_tree(1, 0).n == 1
    assert random_tree(2, 0).edges == ((0, 1),)


def test_random_subtree_is_connected_subtree():
    t = random_tree(14, 3)
    for s in range(30):
        sub = random_subtree(t, s)
        assert 2 <= sub.n <= t.n
        assert isinstance(sub, TreeGraph)
    with pytest.raises(ValueError):
        random_subtree(t, 0, steps=13)
