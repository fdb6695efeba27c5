"""Laplacian and Dirichlet-to-Neumann operators on trees and their spectra.

The DtN matrix is the Schur complement of the Laplacian onto the boundary,

    Lambda = L_BB - L_BI L_II^{-1} L_IB,

which is the same as harmonically extending boundary data and reading off
the normal derivative sum_{y ~ x} (g(x) - g(y)) at each boundary vertex
(edges between two boundary vertices included).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .graph import BoundarySet, TreeGraph, leaves

#: absolute tolerance for eigenvalue comparisons at desk scale
EIG_TOL = 1e-9
#: gap threshold used only when reporting multiplicities
GROUPING_TOL = 1e-7


class EigenSolverError(RuntimeError):
    """The dense symmetric eigensolver failed to converge."""


@dataclass(frozen=True)
class Spectrum:
    """Ascending eigenvalues; ``vectors[:, i]`` pairs with ``values[i]`` when present."""

    values: np.ndarray
    tol: float = GROUPING_TOL
    vectors: Optional[np.ndarray] = None

    def __post_init__(self) -> None:
        vals = np.asarray(self.values, dtype=float)
        if vals.ndim != 1:
            raise ValueError("spectrum values must be one-dimensional")
        if np.any(np.diff(vals) < 0):
            raise ValueError("spectrum values must be ascending")
        object.__setattr__(self, "values", vals)

    def __len__(self) -> int:
        return len(self.values)

    def kth(self, k: int) -> float:
        """The ``k``-th smallest eigenvalue, 1-based like sigma_k and lambda_k."""
        if not 1 <= k <= len(self.values):
            raise IndexError(f"spectrum of order {len(self.values)} has no eigenvalue #{k}")
        return float(self.values[k - 1])

    def multiplicities(self) -> list[tuple[float, int]]:
        groups: list[tuple[float, int]] = []
        for v in self.values:
            if groups and v - groups[-1][0] <= self.tol:
                groups[-1] = (groups[-1][0], groups[-1][1] + 1)
            else:
                groups.append((float(v), 1))
        return groups

    def to_dict(self) -> dict:
        return {"values": [float(v) for v in self.values], "tol": self.tol}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_json(cls, text: str) -> "Spectrum":
        data = json.loads(text)
        return cls(np.asarray(data["values"], dtype=float), float(data["tol"]))


def laplacian_matrix(tree: TreeGraph) -> np.ndarray:
    L = np.zeros((tree.n, tree.n))
    for u, v in tree.edges:
        L[u, v] = L[v, u] = -1.0
        L[u, u] += 1.0
        L[v, v] += 1.0
    return L


def _blocks(tree: TreeGraph, boundary: Optional[BoundarySet]):
    boundary = leaves(tree) if boundary is None else boundary
    boundary.check(tree)
    b = np.array(boundary.members, dtype=int)
    i = np.array(boundary.interior(tree.n), dtype=int)
    return laplacian_matrix(tree), b, i


def harmonic_extension(tree: TreeGraph, boundary: Optional[BoundarySet], f) -> np.ndarray:
    """Extend boundary data ``f`` to the unique function harmonic at every interior vertex."""
    L, b, i = _blocks(tree, boundary)
    f = np.asarray(f, dtype=float)
    if f.shape != (len(b),):
        raise ValueError(f"boundary function has {f.shape} entries, boundary has {len(b)}")
    g = np.zeros(tree.n)
    g[b] = f
    if len(i):
        g[i] = np.linalg.solve(L[np.ix_(i, i)], -L[np.ix_(i, b)] @ f)
    return g


def dtn_matrix(tree: TreeGraph, boundary: Optional[BoundarySet] = None) -> np.ndarray:
    """Dirichlet-to-Neumann matrix, rows and columns in sorted boundary order."""
    L, b, i = _blocks(tree, boundary)
    lbb = L[np.ix_(b, b)]
    if not len(i):
        return lbb
    # L_II is nonsingular on a connected graph with nonempty boundary
    lam = lbb - L[np.ix_(b, i)] @ np.linalg.solve(L[np.ix_(i, i)], L[np.ix_(i, b)])
    return 0.5 * (lam + lam.T)


def eigenvalues_sym(M: np.ndarray, vectors: bool = False, tol: float = GROUPING_TOL) -> Spectrum:
    M = np.asarray(M, dtype=float)
    if M.size == 0:
        return Spectrum(np.zeros(0), tol, np.zeros((0, 0)) if vectors else None)
    try:
        if vectors:
            w, v = np.linalg.eigh(M)
            return Spectrum(w, tol, v)
        return Spectrum(np.linalg.eigvalsh(M), tol)
    except np.linalg.LinAlgError as exc:
        raise EigenSolverError(str(exc)) from exc


def steklov_spectrum(tree: TreeGraph, boundary: Optional[BoundarySet] = None, vectors: bool = False) -> Spectrum:
    return eigenvalues_sym(dtn_matrix(tree, boundary), vectors)


def laplacian_spectrum(tree: TreeGraph, vectors: bool = False) -> Spectrum:
    return eigenvalues_sym(laplacian_matrix(tree), vectors)


def eigen_residual(M: np.ndarray, mu: float, v) -> float:
    """Sup-norm of ``M v - mu v``."""
    M = np.asarray(M, dtype=float)
    v = np.asarray(v, dtype=float)
    if M.shape != (len(v), len(v)):
        raise ValueError(f"matrix {M.shape} does not act on a vector of length {len(v)}")
    return float(np.max(np.abs(M @ v - mu * v))) if len(v) else 0.0


def residual_bound(M: np.ndarray) -> float:
    """Residual allowed for an eigenpair of ``M``: ``1e-9 * max(1, ||M||_inf)``."""
    M = np.asarray(M, dtype=float)
    norm = float(np.max(np.sum(np.abs(M), axis=1))) if M.size else 0.0
    return EIG_TOL * max(1.0, norm)


def write_dense(M: np.ndarray) -> str:
    """Plain-text dense export: the order, then one whitespace-separated row per line."""
    M = np.asarray(M, dtype=float)
    rows = [" ".join(repr(float(x)) for x in row) for row in M]
    return "\n".join([str(M.shape[0])] + rows) + "\n"


def read_dense(text: str) -> np.ndarray:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    k = int(lines[0])
    M = np.array([[float(x) for x in ln.split()] for ln in lines[1 : k + 1]], dtype=float).reshape(k, k)
    return M
