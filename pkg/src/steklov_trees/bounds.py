"""Piecewise upper bounds on sigma_2 / lambda_2 over tree classes and their extremal trees.

``claim`` is ``"unique"`` when the named trees are the only ones attaining
the bound, ``"attains"`` when they attain it without being claimed unique,
and ``"inequality"`` when only the bound itself is proven.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .closed_forms import es_sigma_pm
from .enumeration import TreeClassQuery
from .graph import FamilySpec, build_extra_special
from .polynomials import smallest_real_root
from .quotients import crab_cubic, crab_lambda2
from .spectra import laplacian_spectrum

THEOREMS = {("nm", "steklov"): "slope", ("bm", "steklov"): "fell", ("nm", "laplacian"): "ranch", ("bm", "laplacian"): "unit"}


@dataclass(frozen=True)
class TheoremBound:
    theorem: str
    case: str
    bound: float
    exact: Optional[Fraction]
    extremal: tuple[FamilySpec, ...]
    claim: str
    conjecture_value: Optional[float] = None

    @property
    def label(self) -> str:
        return f"{self.theorem}:{self.case}"

    def to_dict(self) -> dict:
        return {
            "label": self.label,
            "bound": self.bound,
            "exact": None if self.exact is None else str(self.exact),
            "extremal": [str(f) for f in self.extremal],
            "claim": self.claim,
            "conjecture_value": self.conjecture_value,
        }


def _frac(q: Fraction) -> tuple[float, Fraction]:
    return float(q), q


def _two_length_spider(b: int, r: int, s: int) -> tuple[FamilySpec, ...]:
    """Spiders with s-1 legs of length 2r+2 and b-s+1 legs of length 2r+1 (plus Sp(b; 2r+2) when s = b)."""
    out = [FamilySpec.spider([(s - 1, 2 * r + 2), (b - s + 1, 2 * r + 1)])]
    if s == b:
        out.append(FamilySpec.spider([(b, 2 * r + 2)]))
    return tuple(out)


def es_lambda2(b: int, p: int) -> float:
    return laplacian_spectrum(build_extra_special(b, p)).kth(2)


def theorem_bound(query: TreeClassQuery, operator: str) -> TheoremBound:
    if operator not in ("steklov", "laplacian"):
        raise ValueError(f"operator must be steklov or laplacian, got {operator!r}")
    theorem = THEOREMS[(query.mode, operator)]
    m = query.m
    if query.mode == "nm":
        n = query.size
        if m == 1:
            return TheoremBound(theorem, "m=1", 1.0, Fraction(1), (FamilySpec.star(n),), "unique")
        if m == 2:
            crab = (FamilySpec.crab(1, n - 3, 1),)
            if operator == "steklov":
                return TheoremBound(theorem, "m=2", *_frac(Fraction(n - 2, 2 * n - 5)), crab, "unique")
            # the extremal crab CG(1, n-3; 1) has b = n-2 leaves
            return TheoremBound(theorem, "m=2", smallest_real_root(crab_cubic(n - 2)), None, crab, "unique")
        spider = (FamilySpec.spider([(m - 1, 2), (n - 2 * m + 1, 1)]),)
        if operator == "steklov":
            return TheoremBound(theorem, "m>=3", 0.5, Fraction(1, 2), spider, "unique")
        return TheoremBound(theorem, "m>=3", 4 * math.sin(math.pi / 10) ** 2, None, spider, "unique")

    b = query.size
    if m == 1:
        return TheoremBound(theorem, "m=1", 1.0, Fraction(1), (FamilySpec.star(b + 1),), "unique")
    if m == 2:
        crab = (FamilySpec.crab(1, b - 1, 1),)
        if operator == "steklov":
            return TheoremBound(theorem, "m=2", *_frac(Fraction(b, 2 * b - 1)), crab, "unique")
        return TheoremBound(theorem, "m=2", smallest_real_root(crab_cubic(b)), None, crab, "unique")
    if b == 2:
        path = (FamilySpec.path(2 * m),)
        if operator == "steklov":
            return TheoremBound(theorem, "b=2", *_frac(Fraction(2, 2 * m - 1)), path, "unique")
        return TheoremBound(theorem, "b=2", 4 * math.sin(math.pi / (4 * m)) ** 2, None, path, "unique")
    r, s = divmod(m, b)
    if s == 0:
        r, s = r - 1, b
    if s >= 3:
        spiders = _two_length_spider(b, r, s)
        if operator == "steklov":
            return TheoremBound(theorem, "m=br+s", *_frac(Fraction(1, 2 * r + 2)), spiders, "attains")
        return TheoremBound(theorem, "m=br+s", 4 * math.sin(math.pi / (8 * r + 10)) ** 2, None, spiders, "attains")
    if s == 1:
        crab = (FamilySpec.crab(1, b - 1, 2 * r),)
        if operator == "steklov":
            return TheoremBound(theorem, "m=br+1", *_frac(Fraction(b, 2 * r * b + b - 1)), crab, "unique")
        return TheoremBound(theorem, "m=br+1", crab_lambda2(1, b - 1, 2 * r), None, crab, "unique")
    # m = b r + 2, r >= 1: only the bound is proven; the extra special graph is conjectured extremal
    if operator == "steklov":
        return TheoremBound(theorem, "m=br+2", *_frac(Fraction(2, 4 * r + 3)), (), "inequality", es_sigma_pm(b, 2 * r)[0])
    return TheoremBound(theorem, "m=br+2", 4 * math.sin(math.pi / (8 * r + 8)) ** 2, None, (), "inequality", es_lambda2(b, 2 * r))
