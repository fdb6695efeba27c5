"""Closed-form Steklov spectra and explicit eigenfunctions of spider, crab and
extra special trees (leaves as boundary).

Eigenfunctions are returned as full vertex functions in the vertex layout of
:mod:`steklov_trees.graph`.  Each is harmonic at interior vertices and linear
along every leg, so ``L xi`` vanishes off the boundary and equals
``sigma * xi`` on it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

import numpy as np

from .graph import FamilySpec, build_extra_special, build_spider, extra_special_parts, spider_vertex


@dataclass(frozen=True)
class Surd:
    """The number ``(a + sign * sqrt(d)) / c`` with rational ``a, c`` and integer ``d >= 0``."""

    a: Fraction
    sign: int
    d: int
    c: Fraction

    def __float__(self) -> float:
        return (float(self.a) + self.sign * math.sqrt(self.d)) / float(self.c)

    def __str__(self) -> str:
        op = "+" if self.sign > 0 else "-"
        return f"({self.a} {op} sqrt({self.d}))/{self.c}"


Exact = Union[Fraction, Surd]


@dataclass(frozen=True)
class SpectrumEntry:
    value: Exact
    multiplicity: int
    label: str


@dataclass(frozen=True)
class ClosedSpectrum:
    entries: tuple[SpectrumEntry, ...]

    @property
    def order(self) -> int:
        return sum(e.multiplicity for e in self.entries)

    def values(self) -> np.ndarray:
        """All eigenvalues with multiplicity, ascending, as floats."""
        out = [float(e.value) for e in self.entries for _ in range(e.multiplicity)]
        return np.sort(np.array(out, dtype=float))

    def to_dict(self) -> dict:
        return {
            "entries": [
                {"value": float(e.value), "exact": str(e.value), "multiplicity": e.multiplicity, "label": e.label}
                for e in self.entries
            ]
        }


@dataclass(frozen=True)
class Eigenfunction:
    label: str
    sigma: float
    values: np.ndarray


def _add(entries: list, value, mult: int, label: str) -> None:
    if mult > 0:
        entries.append(SpectrumEntry(value, mult, label))


# ---------------------------------------------------------------------------
# two-length spider Sp(p1, p2; l1, l2)


def _check_spider(p1: int, p2: int, l1: int, l2: int) -> None:
    if p1 < 0 or p2 < 0 or p1 + p2 < 2:
        raise ValueError("spider needs p1, p2 >= 0 and p1 + p2 >= 2")
    if not l1 >= l2 >= 1:
        raise ValueError("spider needs l1 >= l2 >= 1")


def spider_steklov(p1: int, p2: int, l1: int, l2: int) -> ClosedSpectrum:
    _check_spider(p1, p2, l1, l2)
    entries: list[SpectrumEntry] = []
    _add(entries, Fraction(0), 1, "constant")
    _add(entries, Fraction(1, l1), p1 - 1, "long-leg pairs")
    if p1 >= 1 and p2 >= 1:
        _add(entries, Fraction(p1 + p2, l2 * p1 + l1 * p2), 1, "mixed")
    _add(entries, Fraction(1, l2), p2 - 1, "short-leg pairs")
    return ClosedSpectrum(tuple(entries))


def spider_eigenfunctions(p1: int, p2: int, l1: int, l2: int) -> list[Eigenfunction]:
    """The eigenfunctions xi_1..xi_{p1+p2}; families absent for small p1, p2 are skipped."""
    _check_spider(p1, p2, l1, l2)
    parts = [(p1, l1), (p2, l2)]
    n = build_spider(parts).n

    def u(i: int, j: int) -> int:  # i-th long leg, 1-based
        return spider_vertex(parts, i - 1, j)

    def v(i: int, j: int) -> int:  # i-th short leg, 1-based
        return spider_vertex(parts, p1 + i - 1, j)

    out = [Eigenfunction("xi_1", 0.0, np.ones(n))]
    for m in range(2, p1 + 1):
        xi = np.zeros(n)
        for j in range(1, l1 + 1):
            xi[u(m - 1, j)] = 1 - (l1 - j) / l1
            xi[u(m, j)] = -(1 - (l1 - j) / l1)
        out.append(Eigenfunction(f"xi_{m}", 1 / l1, xi))
    if p1 >= 1 and p2 >= 1:
        den = l2 * p1 + l1 * p2
        xi = np.zeros(n)
        for i in range(1, p1 + 1):
            for j in range(1, l1 + 1):
                xi[u(i, j)] = p2 * (1 - (l1 - j) * (p1 + p2) / den)
        for i in range(1, p2 + 1):
            for j in range(1, l2 + 1):
                xi[v(i, j)] = -p1 * (1 - (l2 - j) * (p1 + p2) / den)
        xi[0] = (l2 - l1) * p1 * p2 / den
        out.append(Eigenfunction(f"xi_{p1 + 1}", (p1 + p2) / den, xi))
    for m in range(p1 + 2, p1 + p2 + 1):
        xi = np.zeros(n)
        for j in range(1, l2 + 1):
            xi[v(m - p1 - 1, j)] = 1 - (l2 - j) / l2
            xi[v(m - p1, j)] = -(1 - (l2 - j) / l2)
        out.append(Eigenfunction(f"xi_{m}", 1 / l2, xi))
    return out


# ---------------------------------------------------------------------------
# extra special ES(b; p) = Sp(1, 1, b-2; p+2, p+1, p)


def _es_den(b: int, p: int) -> int:
    return b * p * p + 3 * b * p - 3 * p + 2 * b - 4


def _es_check(b: int, p: int) -> None:
    if b < 3 or p < 1:
        raise ValueError("extra special graph needs b >= 3 and p >= 1")


def es_sigma_pm_exact(b: int, p: int) -> tuple[Surd, Surd]:
    _es_check(b, p)
    a = Fraction(2 * b * p + 3 * b - 3)
    c = Fraction(2 * _es_den(b, p))
    d = b * b - 2 * b + 9
    return Surd(a, -1, d, c), Surd(a, 1, d, c)


def es_sigma_pm(b: int, p: int) -> tuple[float, float]:
    lo, hi = es_sigma_pm_exact(b, p)
    return float(lo), float(hi)


def es_steklov(b: int, p: int) -> ClosedSpectrum:
    lo, hi = es_sigma_pm_exact(b, p)
    entries: list[SpectrumEntry] = []
    _add(entries, Fraction(0), 1, "constant")
    _add(entries, lo, 1, "sigma_ES^-")
    _add(entries, hi, 1, "sigma_ES^+")
    _add(entries, Fraction(1, p), b - 3, "short-leg pairs")
    return ClosedSpectrum(tuple(entries))


def es_eigenfunctions(b: int, p: int) -> list[Eigenfunction]:
    _es_check(b, p)
    parts = extra_special_parts(b, p)
    n = build_extra_special(b, p).n
    den = _es_den(b, p)

    def vx(i: int, j: int) -> int:  # leg i is 1-based, as in v_{i,j}
        return spider_vertex(parts, i - 1, j)

    out = [Eigenfunction("xi_1", 0.0, np.ones(n))]
    for m, sigma in zip((2, 3), es_sigma_pm(b, p)):
        f1 = 1 - 2 * b - b * p + den * sigma
        f2 = 1 + b + b * p - den * sigma  # forced by harmonicity at the center: f1 + f2 = 2 - b
        xi = np.zeros(n)
        for j in range(1, p + 3):
            xi[vx(1, j)] = f1 * (1 - (p + 2 - j) * sigma)
        for j in range(1, p + 2):
            xi[vx(2, j)] = f2 * (1 - (p + 1 - j) * sigma)
        for i in range(3, b + 1):
            for j in range(1, p + 1):
                xi[vx(i, j)] = 1 - (p - j) * sigma
        xi[0] = 1 - p * sigma
        out.append(Eigenfunction(f"xi_{m}", sigma, xi))
    for m in range(4, b + 1):
        xi = np.zeros(n)
        for j in range(1, p + 1):
            xi[vx(m - 1, j)] = 1 - (p - j) / p
            xi[vx(m, j)] = -(1 - (p - j) / p)
        out.append(Eigenfunction(f"xi_{m}", 1 / p, xi))
    return out


# ---------------------------------------------------------------------------
# crab CG(b1, b2; r)


def crab_steklov(b1: int, b2: int, r: int) -> ClosedSpectrum:
    if min(b1, b2, r) < 1:
        raise ValueError("crab needs b1, b2, r >= 1")
    entries: list[SpectrumEntry] = []
    _add(entries, Fraction(0), 1, "constant")
    _add(entries, Fraction(b1 + b2, b1 * b2 + r * (b1 + b2)), 1, "bridge")
    _add(entries, Fraction(1, r), b1 + b2 - 2, "leg pairs")
    return ClosedSpectrum(tuple(entries))


def closed_steklov(family: FamilySpec) -> Optional[ClosedSpectrum]:
    """Closed-form Steklov spectrum of a family instance, when one is known."""
    if family.kind == "crab":
        return crab_steklov(*family.params)
    if family.kind == "es":
        return es_steklov(*family.params)
    if family.kind == "star":
        (n,) = family.params
        return spider_steklov(n - 1, 0, 1, 1)
    if family.kind == "path":
        (n,) = family.params
        if n == 2:
            return None  # both vertices are boundary; not a spider
        if n % 2:
            return spider_steklov(2, 0, (n - 1) // 2, 1)
        return crab_steklov(1, 1, (n - 2) // 2)
    parts = [(p, l) for p, l in family.params if p > 0]
    if len(parts) == 1:
        return spider_steklov(parts[0][0], 0, parts[0][1], 1)
    if len(parts) == 2:
        (p1, l1), (p2, l2) = parts
        return spider_steklov(p1, p2, l1, l2)
    return None
