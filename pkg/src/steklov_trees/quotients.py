"""Equitable partitions, quotient matrices and the algebraic connectivity of
crab and spider trees, plus the exact polynomial identities behind them.

Part order for the crab ``CG(b1, b2; r)`` is ``V_u0, V_u1..V_ur, V_v0,
V_v1..V_vr`` where ``V_ui`` collects the vertices at distance ``i`` from
``u0`` on the ``b1`` legs at ``u0``.  The spider ``Sp(b; r)`` uses ``V_0,
V_1..V_r`` the same way.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .graph import TreeGraph, build_crab, build_spider, crab_vertex, spider_vertex
from .polynomials import X, CharPoly, charpoly_B, charpoly_exact, charpoly_H, charpoly_path


def path_laplacian_eigenvalue(n: int, k: int) -> float:
    """lambda_k(P_n) = 4 sin^2((k-1) pi / (2n)), 1-based ``k``."""
    return 4 * math.sin((k - 1) * math.pi / (2 * n)) ** 2


def b_root(n: int, i: int) -> float:
    """i-th root of Phi(B_n): 4 sin^2((2i-1) pi / (4n+2))."""
    return 4 * math.sin((2 * i - 1) * math.pi / (4 * n + 2)) ** 2


def _b_block(r: int) -> list[list[int]]:
    """L(P_{r+1}) with the row and column of one end removed."""
    B = [[0] * r for _ in range(r)]
    for i in range(r):
        B[i][i] = 2 if i < r - 1 else 1
        if i + 1 < r:
            B[i][i + 1] = B[i + 1][i] = -1
    return B


@dataclass(frozen=True)
class QuotientMatrix:
    entries: tuple[tuple[Fraction, ...], ...]
    part_sizes: tuple[int, ...]
    parts: tuple[tuple[int, ...], ...] = field(compare=False, default=())

    @property
    def order(self) -> int:
        return len(self.entries)

    def to_numpy(self) -> np.ndarray:
        return np.array([[float(a) for a in row] for row in self.entries])

    def charpoly(self) -> CharPoly:
        return charpoly_exact(self.entries)

    def symmetrized(self) -> np.ndarray:
        """``D^{1/2} Q D^{-1/2}`` with ``D`` the part sizes; symmetric since ``D Q = P^T L P``."""
        s = np.sqrt(np.array(self.part_sizes, dtype=float))
        S = s[:, None] * self.to_numpy() / s[None, :]
        return 0.5 * (S + S.T)

    def eigenvalues(self) -> np.ndarray:
        return np.linalg.eigvalsh(self.symmetrized())

    def characteristic_matrix(self, n: int) -> np.ndarray:
        """The 0/1 matrix whose columns are the part indicators."""
        P = np.zeros((n, self.order))
        for k, part in enumerate(self.parts):
            P[list(part), k] = 1.0
        return P


def _frac_matrix(rows) -> tuple[tuple[Fraction, ...], ...]:
    return tuple(tuple(Fraction(a) for a in row) for row in rows)


def quotient_matrix_crab(b1: int, b2: int, r: int) -> QuotientMatrix:
    if min(b1, b2, r) < 1:
        raise ValueError("crab needs b1, b2, r >= 1")
    k = r + 1
    Q = [[0] * (2 * k) for _ in range(2 * k)]
    B = _b_block(r)
    for off, b, other in ((0, b1, k), (k, b2, 0)):
        Q[off][off] = b + 1
        Q[off][off + 1] = -b
        Q[off][other] = -1
        Q[off + 1][off] = -1
        for i in range(r):
            for j in range(r):
                Q[off + 1 + i][off + 1 + j] = B[i][j]
    parts = [(0,)] + [tuple(crab_vertex(b1, r, "u", g, i) for g in range(b1)) for i in range(1, r + 1)]
    parts += [(1,)] + [tuple(crab_vertex(b1, r, "v", g, i) for g in range(b2)) for i in range(1, r + 1)]
    sizes = (1,) + (b1,) * r + (1,) + (b2,) * r
    return QuotientMatrix(_frac_matrix(Q), sizes, tuple(parts))


def quotient_matrix_spider(b: int, r: int) -> QuotientMatrix:
    if b < 1 or r < 1:
        raise ValueError("spider quotient needs b, r >= 1")
    Q = [[0] * (r + 1) for _ in range(r + 1)]
    Q[0][0] = b
    Q[0][1] = -b
    Q[1][0] = -1
    B = _b_block(r)
    for i in range(r):
        for j in range(r):
            Q[1 + i][1 + j] = B[i][j]
    spider = [(b, r)]
    parts = [(0,)] + [tuple(spider_vertex(spider, g, i) for g in range(b)) for i in range(1, r + 1)]
    return QuotientMatrix(_frac_matrix(Q), (1,) + (b,) * r, tuple(parts))


def crab_lambda2(b1: int, b2: int, r: int) -> float:
    """Algebraic connectivity of CG(b1, b2; r), read off the quotient matrix."""
    return float(quotient_matrix_crab(b1, b2, r).eigenvalues()[1])


def spider_lambda2(b: int, r: int) -> float:
    if b < 2 or r < 1:
        raise ValueError("needs b >= 2 and r >= 1")
    return 4 * math.sin(math.pi / (4 * r + 2)) ** 2


def crab_cubic(b: int) -> CharPoly:
    """x^3 - (b+4) x^2 + (3b+4) x - b - 2, whose smallest root is lambda_2(CG(1, b-1; 1))."""
    return CharPoly((-b - 2, 3 * b + 4, -(b + 4), 1))


def lifted_path_eigenfunctions(b1: int, b2: int, r: int) -> list[tuple[float, np.ndarray]]:
    """Laplacian eigenfunctions of CG(b1, b2; r) supported on two legs at a common center.

    For each even-index eigenvalue of P_{2r+1} the path eigenvector vanishes at
    its midpoint; placing it on leg ``g``, the center and leg ``g+1`` and
    extending by zero gives an eigenfunction orthogonal to every part
    indicator.  Returns ``r * (b1 + b2 - 2)`` pairs.
    """
    if b1 + b2 < 2 or min(b1, b2, r) < 1:
        raise ValueError("needs b1, b2, r >= 1")
    n = (b1 + b2) * r + 2
    size = 2 * r + 1
    out = []
    for i in range(1, r + 1):
        k = 2 * i
        lam = path_laplacian_eigenvalue(size, k)
        # eigenvector of L(P_size) for lambda_k: cos((k-1) pi (2j-1) / (2 size)), j = 1..size
        vec = [math.cos((k - 1) * math.pi * (2 * j - 1) / (2 * size)) for j in range(1, size + 1)]
        for side, count in (("u", b1), ("v", b2)):
            for g in range(count - 1):
                f = np.zeros(n)
                for d in range(1, r + 1):
                    f[crab_vertex(b1, r, side, g, d)] = vec[r - d]
                    f[crab_vertex(b1, r, side, g + 1, d)] = vec[r + d]
                out.append((lam, f))
    return out


# ---------------------------------------------------------------------------
# exact identity checks


def q_expansion(b1: int, b2: int, r: int) -> CharPoly:
    """Three-term expansion of Phi(Q_{b1,b2;r}) in Phi(B_r), Phi(B_{r-1})."""
    Br, Br1 = charpoly_B(r), charpoly_B(r - 1)
    s, p = b1 + b2, b1 * b2
    return (X * X - (s + 2) * X + (p + s)) * Br * Br - ((s * X) - (2 * p + s)) * Br * Br1 + p * Br1 * Br1


@dataclass
class IdentityReport:
    checked: int = 0
    violations: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def check(self, name: str, lhs: CharPoly, rhs: CharPoly) -> None:
        self.checked += 1
        if lhs != rhs:
            self.violations.append(f"{name}: {lhs} != {rhs}")


def path_matrix_charpolys(n: int) -> tuple[CharPoly, CharPoly, CharPoly]:
    """Phi(P_n), Phi(B_n), Phi(H_n) from exact determinants of the explicit matrices."""

    def lap(m):
        L = [[0] * m for _ in range(m)]
        for i in range(m - 1):
            L[i][i + 1] = L[i + 1][i] = -1
            L[i][i] += 1
            L[i + 1][i + 1] += 1
        return L

    P = charpoly_exact(lap(n)) if n else CharPoly(())
    Bm = [row[1:] for row in lap(n + 1)[1:]]
    Hm = [row[1:-1] for row in lap(n + 2)[1:-1]]
    return P, charpoly_exact(Bm), charpoly_exact(Hm)


def charpoly_identity_checks(r_max: int = 8, b_max: int = 10, n_max: int = 20) -> IdentityReport:
    """Check every path-family recurrence and quotient identity coefficientwise."""
    rep = IdentityReport()
    for n in range(1, n_max + 1):
        P, B, H = charpoly_path, charpoly_B, charpoly_H
        rep.check(f"P recurrence n={n}", P(n + 1), (X - 2) * P(n) - P(n - 1))
        rep.check(f"x B_n n={n}", X * B(n), P(n + 1) + P(n))
        rep.check(f"x H_n n={n}", X * H(n), P(n + 1))
        rep.check(f"B_n + B_(n-1) n={n}", B(n) + B(n - 1), P(n))
        for m in range(2, n_max + 1):
            rep.check(
                f"four-term m={m} n={n}",
                P(m) * P(n) - P(m - 1) * P(n + 1),
                P(m - 1) * P(n - 1) - P(m - 2) * P(n),
            )
    for r in range(1, r_max + 1):
        for b in range(2, b_max + 1):
            for b1 in range(1, b):
                b2 = b - b1
                rep.check(f"Q expansion ({b1},{b2};{r})", quotient_matrix_crab(b1, b2, r).charpoly(), q_expansion(b1, b2, r))
                if b1 <= b2 - 1:
                    rep.check(
                        f"Q shift ({b1},{b2};{r})",
                        q_expansion(b1 + 1, b2 - 1, r) - q_expansion(b1, b2, r),
                        (b2 - b1 - 1) * (charpoly_B(r - 1) + charpoly_B(r)) ** 2,
                    )
                    rep.check(f"Q shift via P_r ({b1},{b2};{r})", (charpoly_B(r - 1) + charpoly_B(r)) ** 2, charpoly_path(r) ** 2)
            rep.check(
                f"Q(1,b-1) - Q(1,1) b={b} r={r}",
                q_expansion(1, b - 1, r) - q_expansion(1, 1, r),
                (b - 2) * ((1 - X) * charpoly_B(r) + charpoly_path(r)) * charpoly_path(r),
            )
        rep.check(f"Q(1,1;r) = L(P_2r+2) r={r}", quotient_matrix_crab(1, 1, r).charpoly(), charpoly_path(2 * r + 2))
    for b in range(2, b_max + 1):
        rep.check(f"cubic b={b}", quotient_matrix_crab(1, b - 1, 1).charpoly(), X * crab_cubic(b))
        for b1 in range(1, b):
            b2 = b - b1
            quartic = CharPoly((-(b1 + b2 + 2), b1 * b2 + 2 * b1 + 2 * b2 + 5, -(b1 + b2 + 4), 1))
            rep.check(f"r=1 quotient ({b1},{b2})", quotient_matrix_crab(b1, b2, 1).charpoly(), X * quartic)
    return rep


# ---------------------------------------------------------------------------
# mu_k(P S) >= mu_1(P) mu_k(S)


@dataclass
class ProductInequalityReport:
    trials: int
    min_slack: float
    violations: list[tuple[int, int, float]]

    @property
    def ok(self) -> bool:
        return not self.violations


def random_pd_psd(rng: np.random.Generator, order: int) -> tuple[np.ndarray, np.ndarray]:
    """Random positive-definite ``P`` (eigenvalues in [0.1, 10]) and PSD ``S`` of random rank."""
    q, _ = np.linalg.qr(rng.standard_normal((order, order)))
    P = q @ np.diag(rng.uniform(0.1, 10.0, order)) @ q.T
    P = 0.5 * (P + P.T)
    g = rng.standard_normal((order, int(rng.integers(0, order + 1))))
    return P, g @ g.T


def eigenvalue_product_inequality_check(trials: int, seed: int = 0, max_order: int = 8, tol: float = 1e-9) -> ProductInequalityReport:
    if trials < 1:
        raise ValueError("trials must be >= 1")
    rng = np.random.default_rng(seed)
    slack_min = math.inf
    bad = []
    for t in range(trials):
        order = int(rng.integers(1, max_order + 1))
        P, S = random_pd_psd(rng, order)
        # PS is similar to sqrt(P) S sqrt(P), so its spectrum is real
        mu_ps = np.sort(np.linalg.eigvals(P @ S).real)
        mu_p1 = np.linalg.eigvalsh(P)[0]
        mu_s = np.linalg.eigvalsh(S)
        slack = mu_ps - mu_p1 * mu_s
        slack_min = min(slack_min, float(slack.min()))
        for k in np.nonzero(slack < -tol)[0]:
            bad.append((t, int(k) + 1, float(slack[k])))
    return ProductInequalityReport(trials, slack_min, bad)
