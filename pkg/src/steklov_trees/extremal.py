"""Exhaustive checks of the extremal bounds over enumerated tree classes, and
numeric exploration of the extra-special conjectures.

The path P_2 is left out of every scanned class: with both vertices on the
boundary its DtN matrix equals its Laplacian and sigma_2 = lambda_2 = 2,
above the m = 1 value of 1 claimed for all stars.  Scans therefore start at
three vertices.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Iterator, Optional

import numpy as np

from .bounds import TheoremBound, es_lambda2, theorem_bound
from .closed_forms import es_sigma_pm
from .enumeration import ClassBoundError, TreeClassQuery, enumerate_free_trees
from .graph import FamilySpec, TreeGraph, build_extra_special, canonical_code, leaves, matching_number
from .spectra import laplacian_spectrum, steklov_spectrum

DEFAULT_TOL = 1e-8
MIN_ORDER = 3


class TreeRecord:
    """An enumerated tree with its invariants; spectra are computed on first use."""

    __slots__ = ("tree", "code", "n_leaves", "matching", "_sigma", "_lam")

    def __init__(self, tree: TreeGraph) -> None:
        self.tree = tree
        self.code = canonical_code(tree)
        self.n_leaves = len(leaves(tree))
        self.matching = matching_number(tree)
        self._sigma: Optional[np.ndarray] = None
        self._lam: Optional[np.ndarray] = None

    @property
    def sigma(self) -> np.ndarray:
        if self._sigma is None:
            self._sigma = steklov_spectrum(self.tree).values
        return self._sigma

    @property
    def lam(self) -> np.ndarray:
        if self._lam is None:
            self._lam = laplacian_spectrum(self.tree).values
        return self._lam

    def spectrum(self, operator: str) -> np.ndarray:
        return self.sigma if operator == "steklov" else self.lam


@lru_cache(maxsize=None)
def records(n: int) -> tuple[TreeRecord, ...]:
    return tuple(TreeRecord(t) for t in enumerate_free_trees(n))


def _member(rec: TreeRecord, query: TreeClassQuery) -> bool:
    if rec.matching != query.m:
        return False
    return query.mode == "nm" or rec.n_leaves == query.size


def class_records(query: TreeClassQuery, min_order: int = MIN_ORDER) -> list[TreeRecord]:
    out = [rec for n in query.orders() if n >= min_order for rec in records(n) if _member(rec, query)]
    if query.mode == "bm":
        edge = 2 * query.m + query.size
        bad = [rec.code for rec in records(edge) if _member(rec, query)]
        if bad:
            raise ClassBoundError(f"class {query} has a member with {edge} vertices: {bad[0]!r}")
    return out


# ---------------------------------------------------------------------------
# max + argmax that merges associatively across shards


@dataclass(frozen=True)
class ClassMax:
    """Running maximum with every candidate within ``tol`` of it."""

    tol: float
    value: float = -np.inf
    candidates: tuple[tuple[float, bytes], ...] = ()
    count: int = 0

    @classmethod
    def of(cls, items: Iterable[tuple[float, bytes]], tol: float) -> "ClassMax":
        items = list(items)
        if not items:
            return cls(tol)
        top = max(v for v, _ in items)
        keep = tuple(sorted((v, c) for v, c in items if v >= top - tol))
        return cls(tol, top, keep, len(items))

    def merge(self, other: "ClassMax") -> "ClassMax":
        merged = ClassMax.of(self.candidates + other.candidates, self.tol)
        return ClassMax(self.tol, merged.value, merged.candidates, self.count + other.count)

    @property
    def argmax(self) -> list[bytes]:
        return sorted({c for _, c in self.candidates})


def scan(recs: Iterable[TreeRecord], operator: str, k: int, tol: float) -> ClassMax:
    return ClassMax.of(((float(r.spectrum(operator)[k - 1]), r.code) for r in recs), tol)


# ---------------------------------------------------------------------------
# reports


@dataclass
class VerificationReport:
    theorem: str
    case: str
    query: str
    bound: float
    observed_max: float
    argmax: list[str]
    expected: list[str]
    claim: str
    tol: float
    n_trees: int
    bound_ok: bool
    identity_ok: Optional[bool]
    uniqueness_ok: Optional[bool]
    conjecture_value: Optional[float] = None
    notes: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.bound_ok and self.identity_ok is not False and self.uniqueness_ok is not False

    def to_dict(self) -> dict:
        d = dict(self.__dict__)
        d["passed"] = self.passed
        return d


def _codes(families: Iterable[FamilySpec]) -> list[bytes]:
    return sorted({canonical_code(f.build()) for f in families})


def verify_class(query: TreeClassQuery, operator: str, tol: float = DEFAULT_TOL) -> VerificationReport:
    tb: TheoremBound = theorem_bound(query, operator)
    recs = class_records(query)
    cm = scan(recs, operator, 2, tol)
    expected = _codes(tb.extremal)
    bound_ok = bool(recs) and cm.value <= tb.bound + tol
    attained = abs(cm.value - tb.bound) <= tol
    identity_ok = uniqueness_ok = None
    if tb.claim == "unique":
        identity_ok = attained and cm.argmax == expected
        uniqueness_ok = len(cm.argmax) == 1
    elif tb.claim == "attains":
        identity_ok = attained and set(expected) <= set(cm.argmax)
    notes = []
    if not recs:
        notes.append("empty class")
    return VerificationReport(
        theorem=tb.theorem,
        case=tb.case,
        query=str(query),
        bound=tb.bound,
        observed_max=cm.value,
        argmax=[c.decode() for c in cm.argmax],
        expected=[c.decode() for c in expected],
        claim=tb.claim,
        tol=tol,
        n_trees=len(recs),
        bound_ok=bound_ok,
        identity_ok=identity_ok,
        uniqueness_ok=uniqueness_ok,
        conjecture_value=tb.conjecture_value,
        notes=notes,
    )


def _nm_queries(n_max: int, n_min: int) -> Iterator[TreeClassQuery]:
    for n in range(max(n_min, MIN_ORDER), n_max + 1):
        for m in range(1, n // 2 + 1):
            yield TreeClassQuery.by_vertices_matching(n, m)


def _bm_queries(b_max: int, m_max: int, b_min: int = 2) -> Iterator[TreeClassQuery]:
    for b in range(b_min, b_max + 1):
        for m in range(1, m_max + 1):
            yield TreeClassQuery.by_leaves_matching(b, m)


def _check_range(name: str, value: int, lo: int, hi: int) -> None:
    if not lo <= value <= hi:
        raise ValueError(f"{name} must be in {lo}..{hi}, got {value}")


def verify_sigma_nm(n_max: int, tol: float = DEFAULT_TOL, n_min: int = MIN_ORDER) -> list[VerificationReport]:
    _check_range("n_max", n_max, 4, 14)
    return [verify_class(q, "steklov", tol) for q in _nm_queries(n_max, n_min)]


def verify_lambda_nm(n_max: int, tol: float = DEFAULT_TOL, n_min: int = MIN_ORDER) -> list[VerificationReport]:
    _check_range("n_max", n_max, 4, 14)
    return [verify_class(q, "laplacian", tol) for q in _nm_queries(n_max, n_min)]


def verify_sigma_bm(b_max: int, m_max: int, tol: float = DEFAULT_TOL) -> list[VerificationReport]:
    _check_range("b_max", b_max, 2, 6)
    _check_range("m_max", m_max, 1, 6)
    return [verify_class(q, "steklov", tol) for q in _bm_queries(b_max, m_max)]


def verify_lambda_bm(b_max: int, m_max: int, tol: float = DEFAULT_TOL) -> list[VerificationReport]:
    _check_range("b_max", b_max, 2, 6)
    _check_range("m_max", m_max, 1, 6)
    return [verify_class(q, "laplacian", tol) for q in _bm_queries(b_max, m_max)]


def higher_sigma_max(rec: TreeRecord) -> float:
    """max over 3 <= k <= b of sigma_k (``-inf`` when the tree has fewer than three leaves)."""
    return float(rec.sigma[2:].max()) if rec.n_leaves >= 3 else -np.inf


def verify_sigma_k(b_max: int, m_max: int, tol: float = DEFAULT_TOL) -> list[VerificationReport]:
    """sigma_k <= 1 for 3 <= k <= b over T~(b, m), attained by Sp(1, b-1; 2m-1, 1)."""
    _check_range("b_max", b_max, 3, 6)
    _check_range("m_max", m_max, 1, 6)
    out = []
    for q in _bm_queries(b_max, m_max, b_min=3):
        recs = class_records(q)
        cm = ClassMax.of(((higher_sigma_max(r), r.code) for r in recs), tol)
        fam = FamilySpec.spider([(1, 2 * q.m - 1), (q.size - 1, 1)])
        code = canonical_code(fam.build())
        witness = next((r for r in recs if r.code == code), None)
        attained = witness is not None and bool(np.all(np.abs(witness.sigma[2:] - 1.0) <= tol))
        out.append(
            VerificationReport(
                theorem="older",
                case="3<=k<=b",
                query=str(q),
                bound=1.0,
                observed_max=cm.value,
                argmax=[c.decode() for c in cm.argmax],
                expected=[code.decode()],
                claim="attains",
                tol=tol,
                n_trees=len(recs),
                bound_ok=bool(recs) and cm.value <= 1.0 + tol,
                identity_ok=attained,
                uniqueness_ok=None,
            )
        )
    return out


def higher_sigma_by_order(n_max: int) -> tuple[float, int]:
    """Largest sigma_k, 3 <= k <= b, over all trees with at most ``n_max`` vertices, and how many trees were scanned."""
    top, count = -np.inf, 0
    for n in range(4, n_max + 1):
        for rec in records(n):
            if rec.n_leaves >= 3:
                top = max(top, higher_sigma_max(rec))
                count += 1
    return top, count


VERIFIERS = {"slope": ("nm", "steklov"), "ranch": ("nm", "laplacian"), "fell": ("bm", "steklov"), "unit": ("bm", "laplacian")}


def verify(theorem: str, *, max_n: int = 10, max_b: int = 4, max_m: int = 4, tol: float = DEFAULT_TOL) -> list[VerificationReport]:
    if theorem == "older":
        return verify_sigma_k(max_b, max_m, tol)
    if theorem not in VERIFIERS:
        raise ValueError(f"unknown theorem {theorem!r}")
    mode, operator = VERIFIERS[theorem]
    if mode == "nm":
        return verify_sigma_nm(max_n, tol) if operator == "steklov" else verify_lambda_nm(max_n, tol)
    return verify_sigma_bm(max_b, max_m, tol) if operator == "steklov" else verify_lambda_bm(max_b, max_m, tol)


def reports_to_json(reports: list[VerificationReport]) -> str:
    return json.dumps([r.to_dict() for r in reports], indent=2, sort_keys=True) + "\n"


# ---------------------------------------------------------------------------
# conjectures


@dataclass
class ConjectureReport:
    b: int
    r: int
    operator: str
    class_max: float
    argmax: list[str]
    es_code: str
    es_value: float
    conjectured_value: float
    proven_bound: float
    gap: float
    agrees: bool
    n_trees: int
    notes: list[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        return dict(self.__dict__)


def explore_conjecture(b: int, r: int, operator: str, tol: float = DEFAULT_TOL) -> ConjectureReport:
    """Scan T~(b, br+2) and compare its maximum with the extra special graph ES(b; 2r)."""
    if b < 3 or r < 1:
        raise ValueError("needs b >= 3 and r >= 1")
    if operator not in ("steklov", "laplacian"):
        raise ValueError(f"operator must be steklov or laplacian, got {operator!r}")
    q = TreeClassQuery.by_leaves_matching(b, b * r + 2)
    recs = class_records(q)
    cm = scan(recs, operator, 2, tol)
    es = build_extra_special(b, 2 * r)
    es_rec = TreeRecord(es)
    es_value = float(es_rec.spectrum(operator)[1])
    notes = []
    if operator == "steklov":
        conjectured = es_sigma_pm(b, 2 * r)[0]
    else:
        conjectured = es_lambda2(b, 2 * r)
        notes.append("no closed form is given for the Laplacian value; compared against numeric lambda_2(ES(b; 2r))")
    if es_rec.n_leaves != b or es_rec.matching != q.m:
        notes.append("ES(b; 2r) is not in the scanned class")
    gap = abs(cm.value - conjectured)
    return ConjectureReport(
        b=b,
        r=r,
        operator=operator,
        class_max=cm.value,
        argmax=[c.decode() for c in cm.argmax],
        es_code=es_rec.code.decode(),
        es_value=es_value,
        conjectured_value=conjectured,
        proven_bound=theorem_bound(q, operator).bound,
        gap=gap,
        agrees=gap <= tol and cm.argmax == [es_rec.code],
        n_trees=len(recs),
        notes=notes,
    )
