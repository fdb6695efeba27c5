"""Trees, named tree families, and combinatorial primitives.

Vertex layout of the family constructors is fixed so that spectra and the
explicit eigenfunctions in :mod:`steklov_trees.closed_forms` can address
vertices directly:

* spider: center is vertex 0; legs follow part-major, leg-minor order, and
  each leg lists its vertices by increasing distance from the center.  Leg
  ``g`` (0-based, counted over all parts) at distance ``j`` is
  :func:`spider_vertex`.
* crab ``CG(b1, b2; r)``: centers ``u0 = 0`` and ``v0 = 1``; then the ``b1``
  legs hanging at ``u0``, then the ``b2`` legs at ``v0``, each leg by
  increasing distance (:func:`crab_vertex`).
* path: vertex ``i`` is adjacent to ``i + 1``.
* star: center 0, leaves ``1..n-1``.
"""

from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence


@dataclass(frozen=True)
class TreeGraph:
    """Undirected tree on vertices ``0..n-1``.

    Two instances compare equal iff they are the same *labelled* tree; use
    :func:`is_isomorphic` for the unlabelled question.
    """

    n: int
    edges: tuple[tuple[int, int], ...]
    adjacency: tuple[tuple[int, ...], ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"a tree needs at least one vertex, got n={self.n}")
        norm = []
        for u, v in self.edges:
            u, v = int(u), int(v)
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={self.n}")
            norm.append((min(u, v), max(u, v)))
        norm.sort()
        if len(set(norm)) != len(norm):
            raise ValueError("duplicate edge")
        if len(norm) != self.n - 1:
            raise ValueError(f"a tree on {self.n} vertices has {self.n - 1} edges, got {len(norm)}")
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in norm:
            adj[u].append(v)
            adj[v].append(u)
        object.__setattr__(self, "edges", tuple(norm))
        object.__setattr__(self, "adjacency", tuple(tuple(sorted(a)) for a in adj))
        if len(_bfs_order(self.adjacency, 0)) != self.n:
            raise ValueError("edge set is not connected")

    @classmethod
    def from_parents(cls, parents: Sequence[int]) -> "TreeGraph":
        """Build from a parent array; the root carries parent ``-1``."""
        return cls(len(parents), tuple((p, i) for i, p in enumerate(parents) if p >= 0))

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def degrees(self) -> list[int]:
        return [len(a) for a in self.adjacency]

    def relabel(self, perm: Sequence[int]) -> "TreeGraph":
        """Return the tree with vertex ``v`` renamed ``perm[v]``."""
        return TreeGraph(self.n, tuple((perm[u], perm[v]) for u, v in self.edges))

    def induced(self, vertices: Iterable[int]) -> "TreeGraph":
        """Induced subgraph on ``vertices`` (must be connected), relabelled in sorted order."""
        keep = sorted(set(vertices))
        index = {v: i for i, v in enumerate(keep)}
        sub = tuple((index[u], index[v]) for u, v in self.edges if u in index and v in index)
        return TreeGraph(len(keep), sub)

    # edge-list text format: first line n, then one "u v" pair per line
    def to_edge_list(self) -> str:
        lines = [str(self.n)] + [f"{u} {v}" for u, v in self.edges]
        return "\n".join(lines) + "\n"

    @classmethod
    def from_edge_list(cls, text: str) -> "TreeGraph":
        rows = [ln.split() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
        if not rows or len(rows[0]) != 1:
            raise ValueError("edge list must start with a line holding the vertex count")
        n = int(rows[0][0])
        edges = []
        for row in rows[1:]:
            if len(row) != 2:
                raise ValueError(f"malformed edge line: {' '.join(row)!r}")
            edges.append((int(row[0]), int(row[1])))
        return cls(n, tuple(edges))


@dataclass(frozen=True)
class BoundarySet:
    """Sorted set of boundary vertices; everything else is interior."""

    members: tuple[int, ...]

    def __post_init__(self) -> None:
        members = tuple(sorted(set(int(v) for v in self.members)))
        if any(v < 0 for v in members):
            raise ValueError("boundary vertices must be non-negative")
        object.__setattr__(self, "members", members)

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[int]:
        return iter(self.members)

    def __contains__(self, v: object) -> bool:
        return v in self.members

    def interior(self, n: int) -> tuple[int, ...]:
        b = set(self.members)
        return tuple(v for v in range(n) if v not in b)

    def check(self, tree: TreeGraph) -> None:
        if not self.members:
            raise ValueError("the Steklov problem needs a nonempty boundary")
        if self.members[-1] >= tree.n:
            raise ValueError(f"boundary vertex {self.members[-1]} not in tree of order {tree.n}")


def _bfs_order(adjacency: Sequence[Sequence[int]], root: int) -> list[int]:
    seen = [False] * len(adjacency)
    seen[root] = True
    order = [root]
    queue = deque([root])
    while queue:
        u = queue.popleft()
        for w in adjacency[u]:
            if not seen[w]:
                seen[w] = True
                order.append(w)
                queue.append(w)
    return order


def _distances(tree: TreeGraph, root: int) -> list[int]:
    dist = [-1] * tree.n
    dist[root] = 0
    queue = deque([root])
    while queue:
        u = queue.popleft()
        for w in tree.adjacency[u]:
            if dist[w] < 0:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


# ---------------------------------------------------------------------------
# family constructors


def build_path(n: int) -> TreeGraph:
    if n < 1:
        raise ValueError("path needs n >= 1")
    return TreeGraph(n, tuple((i, i + 1) for i in range(n - 1)))


def build_star(n: int) -> TreeGraph:
    if n < 2:
        raise ValueError("star needs n >= 2")
    return TreeGraph(n, tuple((0, i) for i in range(1, n)))


def _check_spider_parts(parts: Sequence[tuple[int, int]]) -> list[tuple[int, int]]:
    parts = [(int(p), int(l)) for p, l in parts]
    if not parts:
        raise ValueError("spider needs at least one part")
    for p, l in parts:
        if p < 0 or l < 1:
            raise ValueError(f"spider part ({p}, {l}) needs p >= 0 and length >= 1")
    lengths = [l for _, l in parts]
    if any(a < b for a, b in zip(lengths, lengths[1:])):
        raise ValueError(f"spider leg lengths must be non-increasing, got {lengths}")
    if sum(p for p, _ in parts) < 2:
        raise ValueError("spider needs at least two legs in total")
    return parts


def build_spider(parts: Sequence[tuple[int, int]]) -> TreeGraph:
    """Spider with ``p`` legs of length ``l`` for each ``(p, l)`` in ``parts``."""
    parts = _check_spider_parts(parts)
    edges = []
    nxt = 1
    for p, length in parts:
        for _ in range(p):
            prev = 0
            for _ in range(length):
                edges.append((prev, nxt))
                prev = nxt
                nxt += 1
    return TreeGraph(nxt, tuple(edges))


def spider_vertex(parts: Sequence[tuple[int, int]], leg: int, dist: int) -> int:
    """Index of the vertex at distance ``dist`` on global leg ``leg`` (``dist=0`` is the center)."""
    if dist == 0:
        return 0
    offset = 1
    g = leg
    for p, length in parts:
        if g < p:
            if not 1 <= dist <= length:
                raise IndexError(f"distance {dist} outside leg of length {length}")
            return offset + g * length + dist - 1
        g -= p
        offset += p * length
    raise IndexError(f"spider has no leg {leg}")


def build_crab(b1: int, b2: int, r: int) -> TreeGraph:
    if min(b1, b2, r) < 1:
        raise ValueError("crab needs b1, b2, r >= 1")
    edges = [(0, 1)]
    for center, count, start in ((0, b1, 2), (1, b2, 2 + b1 * r)):
        for k in range(count):
            prev = center
            for j in range(r):
                v = start + k * r + j
                edges.append((prev, v))
                prev = v
    return TreeGraph((b1 + b2) * r + 2, tuple(edges))


def crab_vertex(b1: int, r: int, side: str, leg: int, dist: int) -> int:
    """Vertex ``u_{leg,dist}`` (side ``"u"``) or ``v_{leg,dist}`` (side ``"v"``); legs 0-based."""
    if side not in ("u", "v"):
        raise ValueError(side)
    if dist == 0:
        return 0 if side == "u" else 1
    start = 2 if side == "u" else 2 + b1 * r
    return start + leg * r + dist - 1


def extra_special_parts(b: int, p: int) -> list[tuple[int, int]]:
    if b < 3 or p < 1:
        raise ValueError("extra special graph needs b >= 3 and p >= 1")
    return [(1, p + 2), (1, p + 1), (b - 2, p)]


def build_extra_special(b: int, p: int) -> TreeGraph:
    return build_spider(extra_special_parts(b, p))


# ---------------------------------------------------------------------------
# FamilySpec and its text form


_FAMILY_RE = re.compile(r"^\s*(path|star|spider|crab|es)\s*:\s*(.+?)\s*$")


@dataclass(frozen=True)
class FamilySpec:
    """Named family instance.

    ``params`` is ``(n,)`` for path/star, ``(b1, b2, r)`` for crab, ``(b, p)``
    for es and a tuple of ``(p_i, l_i)`` pairs for spider.
    """

    kind: str
    params: tuple

    def __post_init__(self) -> None:
        if self.kind not in ("path", "star", "spider", "crab", "es"):
            raise ValueError(f"unknown family {self.kind!r}")
        params = tuple(tuple(x) if isinstance(x, (list, tuple)) else x for x in self.params)
        object.__setattr__(self, "params", params)
        self.build()  # validates

    @classmethod
    def path(cls, n: int) -> "FamilySpec":
        return cls("path", (n,))

    @classmethod
    def star(cls, n: int) -> "FamilySpec":
        return cls("star", (n,))

    @classmethod
    def spider(cls, parts: Sequence[tuple[int, int]]) -> "FamilySpec":
        return cls("spider", tuple((int(p), int(l)) for p, l in parts))

    @classmethod
    def crab(cls, b1: int, b2: int, r: int) -> "FamilySpec":
        return cls("crab", (b1, b2, r))

    @classmethod
    def es(cls, b: int, p: int) -> "FamilySpec":
        return cls("es", (b, p))

    @classmethod
    def parse(cls, text: str) -> "FamilySpec":
        m = _FAMILY_RE.match(text)
        if not m:
            raise ValueError(f"malformed family {text!r}; expected e.g. path:5, spider:2x3,1x1, crab:1,2,1, es:3,1")
        kind, body = m.groups()
        try:
            if kind == "spider":
                parts = []
                for item in body.split(","):
                    p, l = item.lower().split("x")
                    parts.append((int(p), int(l)))
                return cls.spider(parts)
            nums = tuple(int(x) for x in body.split(","))
        except ValueError as exc:
            raise ValueError(f"malformed family {text!r}: {exc}") from None
        arity = {"path": 1, "star": 1, "crab": 3, "es": 2}[kind]
        if len(nums) != arity:
            raise ValueError(f"family {kind} takes {arity} integer(s), got {text!r}")
        return cls(kind, nums)

    def __str__(self) -> str:
        if self.kind == "spider":
            return "spider:" + ",".join(f"{p}x{l}" for p, l in self.params)
        return f"{self.kind}:" + ",".join(str(x) for x in self.params)

    def build(self) -> TreeGraph:
        if self.kind == "path":
            return build_path(*self.params)
        if self.kind == "star":
            return build_star(*self.params)
        if self.kind == "spider":
            return build_spider(self.params)
        if self.kind == "crab":
            return build_crab(*self.params)
        return build_extra_special(*self.params)


# ---------------------------------------------------------------------------
# combinatorial primitives


def leaves(tree: TreeGraph) -> BoundarySet:
    return BoundarySet(tuple(v for v in range(tree.n) if tree.degree(v) == 1))


def diameter(tree: TreeGraph) -> int:
    d0 = _distances(tree, 0)
    far = max(range(tree.n), key=d0.__getitem__)
    return max(_distances(tree, far))


def matching_number(tree: TreeGraph) -> int:
    """Maximum matching size by leaf stripping.

    A leaf is always matched to its support vertex in some maximum matching,
    so repeatedly matching a leaf with its neighbour and deleting both is
    optimal on forests.
    """
    deg = tree.degrees()
    alive = [True] * tree.n
    queue = deque(v for v in range(tree.n) if deg[v] <= 1)
    size = 0
    while queue:
        x = queue.popleft()
        if not alive[x]:
            continue
        alive[x] = False
        support = next((y for y in tree.adjacency[x] if alive[y]), None)
        if support is None:
            continue
        alive[support] = False
        size += 1
        for w in tree.adjacency[support]:
            if alive[w]:
                deg[w] -= 1
                if deg[w] <= 1:
                    queue.append(w)
    return size


def centers(tree: TreeGraph) -> list[int]:
    """The one or two central vertices, found by peeling leaves."""
    if tree.n <= 2:
        return list(range(tree.n))
    deg = tree.degrees()
    layer = [v for v in range(tree.n) if deg[v] == 1]
    remaining = tree.n
    while remaining > 2:
        remaining -= len(layer)
        nxt = []
        for x in layer:
            for w in tree.adjacency[x]:
                deg[w] -= 1
                if deg[w] == 1:
                    nxt.append(w)
        layer = nxt
    return sorted(layer)


def rooted_code(tree: TreeGraph, root: int) -> bytes:
    """AHU encoding of ``tree`` rooted at ``root``: ``(`` children sorted ``)``."""
    order = _bfs_order(tree.adjacency, root)
    parent = [-1] * tree.n
    for u in order:
        for w in tree.adjacency[u]:
            if w != parent[u]:
                parent[w] = u
    kids: list[list[bytes]] = [[] for _ in range(tree.n)]
    code = b""
    for u in reversed(order):
        code = b"(" + b"".join(sorted(kids[u])) + b")"
        if parent[u] >= 0:
            kids[parent[u]].append(code)
    return code


def canonical_code(tree: TreeGraph) -> bytes:
    """Center-rooted AHU code; equal for two trees iff they are isomorphic."""
    return min(rooted_code(tree, c) for c in centers(tree))


def tree_from_code(code: bytes) -> TreeGraph:
    """Rebuild the rooted tree encoded by ``code``; vertices numbered in preorder."""
    parents: list[int] = []
    stack: list[int] = []
    for ch in code:
        if ch == ord("("):
            parents.append(stack[-1] if stack else -1)
            stack.append(len(parents) - 1)
        elif ch == ord(")"):
            stack.pop()
        else:
            raise ValueError(f"bad byte {ch!r} in tree code")
    if stack or not parents:
        raise ValueError("unbalanced tree code")
    return TreeGraph.from_parents(parents)


def canonical_form(tree: TreeGraph) -> TreeGraph:
    """Isomorphic copy in canonical vertex order (preorder of the canonical rooted tree)."""
    return tree_from_code(canonical_code(tree))


def is_isomorphic(t1: TreeGraph, t2: TreeGraph) -> bool:
    return t1.n == t2.n and canonical_code(t1) == canonical_code(t2)
