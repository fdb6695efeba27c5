import networkx as nx
import pytest
from hypothesis import strategies as st

from steklov_trees.enumeration import random_tree
from steklov_trees.graph import TreeGraph


def to_nx(tree: TreeGraph) -> nx.Graph:
    g = nx.Graph()
    g.add_nodes_from(range(tree.n))
    g.add_edges_from(tree.edges)
    return g


@st.composite
def trees(draw, min_n=2, max_n=12):
    n = draw(st.integers(min_n, max_n))
    seed = draw(st.integers(0, 2**31 - 1))
    return random_tree(n, seed)


@pytest.fixture
def nx_of():
    return to_nx
