"""Free-tree enumeration and the vertex/leaf/matching tree classes.

Free trees are generated as center-rooted canonical level sequences (the
Wright-Richmond-Odlyzko-McKay successor scheme on top of Beyer-Hedetniemi),
so every isomorphism class is produced exactly once without a dedup pass.
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Optional

from .graph import TreeGraph, canonical_code, leaves, matching_number, tree_from_code

MAX_ORDER = 20


@dataclass(frozen=True)
class TreeClassQuery:
    """``mode`` is ``"nm"`` (n vertices, matching m) or ``"bm"`` (b leaves, matching m)."""

    mode: str
    size: int
    m: int

    def __post_init__(self) -> None:
        if self.mode == "nm":
            if self.size < 2 or not 1 <= self.m <= self.size / 2:
                raise ValueError(f"class T(n, m) needs n >= 2 and 1 <= m <= n/2, got n={self.size}, m={self.m}")
        elif self.mode == "bm":
            if self.size < 2 or self.m < 1:
                raise ValueError(f"class T~(b, m) needs b >= 2 and m >= 1, got b={self.size}, m={self.m}")
        else:
            raise ValueError(f"unknown class mode {self.mode!r}")

    @classmethod
    def by_vertices_matching(cls, n: int, m: int) -> "TreeClassQuery":
        return cls("nm", n, m)

    @classmethod
    def by_leaves_matching(cls, b: int, m: int) -> "TreeClassQuery":
        return cls("bm", b, m)

    @classmethod
    def parse(cls, text: str) -> "TreeClassQuery":
        """Parse ``n=K,m=J`` or ``b=K,m=J``."""
        match = re.fullmatch(r"\s*([nb])\s*=\s*(\d+)\s*,\s*m\s*=\s*(\d+)\s*", text)
        if not match:
            raise ValueError(f"malformed class {text!r}; expected n=K,m=J or b=K,m=J")
        key, size, m = match.groups()
        return cls("nm" if key == "n" else "bm", int(size), int(m))

    def orders(self) -> range:
        """Vertex counts that can hold members of the class."""
        if self.mode == "nm":
            return range(self.size, self.size + 1)
        return range(2 * self.m, 2 * self.m + self.size)

    def __str__(self) -> str:
        return f"{'n' if self.mode == 'nm' else 'b'}={self.size},m={self.m}"


class ClassBoundError(RuntimeError):
    """A tree turned up beyond the vertex bound assumed for T~(b, m)."""


# ---------------------------------------------------------------------------
# level-sequence generation


def _next_rooted(seq: list[int], p: Optional[int] = None) -> Optional[list[int]]:
    """Beyer-Hedetniemi successor of a canonical rooted level sequence."""
    if p is None:
        p = len(seq) - 1
        while seq[p] == 1:
            p -= 1
    if p == 0:
        return None
    q = p - 1
    while seq[q] != seq[p] - 1:
        q -= 1
    out = list(seq)
    for i in range(p, len(out)):
        out[i] = out[i - p + q]
    return out


def _split(seq: list[int]) -> tuple[list[int], list[int]]:
    """First subtree of the root (depths shifted by one) and the tree without it."""
    m = next((i for i in range(2, len(seq)) if seq[i] == 1), len(seq))
    return [d - 1 for d in seq[1:m]], [0] + seq[m:]


def _next_free(seq: list[int]) -> Optional[list[int]]:
    """Smallest successor (inclusive) that is the center-rooted canonical form of a free tree."""
    left, rest = _split(seq)
    hl, hr = max(left), max(rest)
    valid = hr >= hl
    if valid and hr == hl:
        if len(left) > len(rest) or (len(left) == len(rest) and left > rest):
            valid = False
    if valid:
        return seq
    p = len(left)
    nxt = _next_rooted(seq, p)
    if nxt is not None and seq[p] > 2:
        new_left, _ = _split(nxt)
        suffix = list(range(1, max(new_left) + 2))
        nxt[len(nxt) - len(suffix):] = suffix
    return nxt


def _level_sequences(n: int) -> Iterator[list[int]]:
    seq: Optional[list[int]] = list(range(n // 2 + 1)) + list(range(1, (n + 1) // 2))
    while seq is not None:
        seq = _next_free(seq)
        if seq is not None:
            yield seq
            seq = _next_rooted(seq)


def _from_levels(seq: list[int]) -> TreeGraph:
    parents = [-1] * len(seq)
    last_at: dict[int, int] = {}
    for i, d in enumerate(seq):
        if d:
            parents[i] = last_at[d - 1]
        last_at[d] = i
    return TreeGraph.from_parents(parents)


@lru_cache(maxsize=24)
def _free_tree_codes(n: int) -> tuple[bytes, ...]:
    if n == 1:
        return (b"()",)
    if n == 2:
        return (b"(())",)
    return tuple(sorted(canonical_code(_from_levels(s)) for s in _level_sequences(n)))


def enumerate_free_trees(n: int) -> Iterator[TreeGraph]:
    """One tree per isomorphism class of order ``n``, in canonical vertex order,
    sorted by canonical code."""
    if not 1 <= n <= MAX_ORDER:
        raise ValueError(f"order must be in 1..{MAX_ORDER}, got {n}")
    for code in _free_tree_codes(n):
        yield tree_from_code(code)


def count_free_trees(n: int) -> int:
    if not 1 <= n <= MAX_ORDER:
        raise ValueError(f"order must be in 1..{MAX_ORDER}, got {n}")
    return len(_free_tree_codes(n))


def trees_in_class(query: TreeClassQuery) -> Iterator[TreeGraph]:
    """All trees of the class.  For T~(b, m) the order range is 2m..2m+b-1 and
    order 2m+b is scanned to confirm it is empty."""
    for n in query.orders():
        for t in enumerate_free_trees(n):
            if _in_class(t, query):
                yield t
    if query.mode == "bm":
        edge = 2 * query.m + query.size
        if edge <= MAX_ORDER:
            for t in enumerate_free_trees(edge):
                if _in_class(t, query):
                    raise ClassBoundError(f"class {query} has a member with {edge} vertices: {canonical_code(t)!r}")


def _in_class(t: TreeGraph, query: TreeClassQuery) -> bool:
    if query.mode == "nm":
        return matching_number(t) == query.m
    return t.n >= 2 and len(leaves(t)) == query.size and matching_number(t) == query.m


# ---------------------------------------------------------------------------
# random trees


def random_tree(n: int, seed: int) -> TreeGraph:
    """Uniform random labelled tree via a random Pruefer sequence."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if n <= 2:
        return TreeGraph(n, ((0, 1),) if n == 2 else ())
    rng = random.Random(seed)
    code = [rng.randrange(n) for _ in range(n - 2)]
    degree = [1] * n
    for x in code:
        degree[x] += 1
    edges = []
    for x in code:
        leaf = min(v for v in range(n) if degree[v] == 1)
        edges.append((leaf, x))
        degree[leaf] -= 1
        degree[x] -= 1
    u, v = (w for w in range(n) if degree[w] == 1)
    edges.append((u, v))
    return TreeGraph(n, tuple(edges))


def random_subtree(tree: TreeGraph, seed: int, steps: Optional[int] = None) -> TreeGraph:
    """Connected subtree with at least two vertices, obtained by deleting
    ``steps`` random leaves one at a time (random count when ``steps`` is None)."""
    if tree.n < 2:
        raise ValueError("tree must have at least two vertices")
    rng = random.Random(seed)
    if steps is None:
        steps = rng.randrange(tree.n - 1)
    if not 0 <= steps <= tree.n - 2:
        raise ValueError(f"can prune between 0 and {tree.n - 2} leaves, got {steps}")
    alive = set(range(tree.n))
    deg = tree.degrees()
    for _ in range(steps):
        x = rng.choice(sorted(v for v in alive if deg[v] == 1))
        alive.discard(x)
        for w in tree.adjacency[x]:
            if w in alive:
                deg[w] -= 1
    return tree.induced(alive)
