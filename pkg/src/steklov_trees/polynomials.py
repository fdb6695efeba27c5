"""Exact integer polynomials, characteristic polynomials and real-root isolation."""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence, Union

Number = Union[int, Fraction]


@dataclass(frozen=True)
class CharPoly:
    """Polynomial in ``x`` with exact integer coefficients, lowest degree first."""

    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        c = []
        for a in self.coeffs:
            if isinstance(a, Fraction):
                if a.denominator != 1:
                    raise ValueError(f"non-integer coefficient {a}")
                a = a.numerator
            c.append(int(a))
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    @classmethod
    def x(cls) -> "CharPoly":
        return cls((0, 1))

    @classmethod
    def const(cls, c: int) -> "CharPoly":
        return cls((c,))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1  # zero polynomial has degree -1

    def is_zero(self) -> bool:
        return not self.coeffs

    def _lift(self, other) -> "CharPoly":
        return other if isinstance(other, CharPoly) else CharPoly((other,))

    def __add__(self, other) -> "CharPoly":
        o = self._lift(other).coeffs
        n = max(len(self.coeffs), len(o))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = o + (0,) * (n - len(o))
        return CharPoly(tuple(x + y for x, y in zip(a, b)))

    __radd__ = __add__

    def __neg__(self) -> "CharPoly":
        return CharPoly(tuple(-a for a in self.coeffs))

    def __sub__(self, other) -> "CharPoly":
        return self + (-self._lift(other))

    def __rsub__(self, other) -> "CharPoly":
        return self._lift(other) - self

    def __mul__(self, other) -> "CharPoly":
        o = self._lift(other).coeffs
        if not self.coeffs or not o:
            return CharPoly(())
        out = [0] * (len(self.coeffs) + len(o) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(o):
                    out[i + j] += a * b
        return CharPoly(tuple(out))

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "CharPoly":
        out = CharPoly((1,))
        for _ in range(k):
            out = out * self
        return out

    def __call__(self, value):
        acc = 0 * value
        for a in reversed(self.coeffs):
            acc = acc * value + a
        return acc

    def divmod(self, other: "CharPoly") -> tuple["CharPoly", "CharPoly"]:
        """Division in Z[x]; raises if a quotient coefficient is not an integer."""
        q, r = _divmod_q(list(map(Fraction, self.coeffs)), list(map(Fraction, other.coeffs)))
        return CharPoly(tuple(q)), CharPoly(tuple(r))

    def exact_div(self, other: "CharPoly") -> "CharPoly":
        q, r = self.divmod(other)
        if not r.is_zero():
            raise ArithmeticError("polynomial division leaves a remainder")
        return q

    def max_abs_coeff(self) -> int:
        return max((abs(a) for a in self.coeffs), default=0)

    def to_json(self) -> str:
        return json.dumps(list(self.coeffs))

    @classmethod
    def from_json(cls, text: str) -> "CharPoly":
        return cls(tuple(int(a) for a in json.loads(text)))

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            a = self.coeffs[k]
            if a == 0:
                continue
            mono = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
            coef = str(abs(a)) if (abs(a) != 1 or k == 0) else ""
            terms.append(("-" if a < 0 else "+") + coef + mono)
        s = "".join(terms)
        return s[1:] if s.startswith("+") else s


X = CharPoly.x()


# ---------------------------------------------------------------------------
# path-family recurrences


@lru_cache(maxsize=None)
def charpoly_path(n: int) -> CharPoly:
    """Characteristic polynomial of L(P_n); P_0 is seeded with the zero polynomial."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if n == 0:
        return CharPoly(())
    if n == 1:
        return X
    return (X - 2) * charpoly_path(n - 1) - charpoly_path(n - 2)


@lru_cache(maxsize=None)
def charpoly_B(n: int) -> CharPoly:
    """L(P_{n+1}) with one end deleted."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if n == 0:
        return CharPoly((1,))
    if n == 1:
        return X - 1
    return (X - 2) * charpoly_B(n - 1) - charpoly_B(n - 2)


@lru_cache(maxsize=None)
def charpoly_H(n: int) -> CharPoly:
    """L(P_{n+2}) with both ends deleted."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if n == 0:
        return CharPoly((1,))
    if n == 1:
        return X - 2
    return (X - 2) * charpoly_H(n - 1) - charpoly_H(n - 2)


# ---------------------------------------------------------------------------
# exact determinant route


def charpoly_exact(M: Sequence[Sequence[Number]]) -> CharPoly:
    """det(xI - M) by the division-free Berkowitz algorithm over the rationals."""
    A = [[Fraction(a) for a in row] for row in M]
    n = len(A)
    if any(len(row) != n for row in A):
        raise ValueError("matrix must be square")
    if n == 0:
        return CharPoly((1,))
    poly = [Fraction(1), -A[0][0]]  # descending coefficients
    for k in range(1, n):
        row = A[k][:k]
        col = [A[i][k] for i in range(k)]
        toeplitz = [Fraction(1), -A[k][k]]
        v = col
        for _ in range(k):
            toeplitz.append(-sum(r * x for r, x in zip(row, v)))
            v = [sum(A[i][j] * v[j] for j in range(k)) for i in range(k)]
        poly = [
            sum(toeplitz[i - j] * poly[j] for j in range(len(poly)) if 0 <= i - j < len(toeplitz))
            for i in range(k + 2)
        ]
    return CharPoly(tuple(reversed(poly)))


# ---------------------------------------------------------------------------
# real-root isolation on exact polynomials


def _trim(p: list[Fraction]) -> list[Fraction]:
    while p and p[-1] == 0:
        p.pop()
    return p


def _divmod_q(a: list[Fraction], b: list[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
    a, b = _trim(list(a)), _trim(list(b))
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 1)
    while len(a) >= len(b) and a:
        shift = len(a) - len(b)
        c = a[-1] / b[-1]
        q[shift] = c
        for i, bi in enumerate(b):
            a[i + shift] -= c * bi
        a = _trim(a)
    return q, a


def _eval_q(p: Sequence[Fraction], x: Fraction) -> Fraction:
    acc = Fraction(0)
    for a in reversed(p):
        acc = acc * x + a
    return acc


def _sturm_chain(p: CharPoly) -> list[list[Fraction]]:
    f = [Fraction(a) for a in p.coeffs]
    df = [Fraction(k * a) for k, a in enumerate(p.coeffs)][1:]
    chain = [f, _trim(df)]
    while chain[-1]:
        _, r = _divmod_q(chain[-2], chain[-1])
        chain.append([-c for c in r])
    return chain[:-1]


def _sign_changes(chain: list[list[Fraction]], x: Fraction) -> int:
    signs = [s for s in (_eval_q(p, x) for p in chain) if s != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if (a > 0) != (b > 0))


def count_real_roots(p: CharPoly, lo: Fraction, hi: Fraction) -> int:
    """Number of distinct real roots in the half-open interval ``(lo, hi]``."""
    chain = _sturm_chain(p)
    return _sign_changes(chain, Fraction(lo)) - _sign_changes(chain, Fraction(hi))


def smallest_real_root(p: CharPoly, above: Number | None = None, width: Fraction = Fraction(1, 10**18)) -> float:
    """Smallest real root of ``p`` (optionally the smallest one strictly above ``above``).

    The root is bracketed with Sturm sequences and bisected in exact
    arithmetic down to ``width``.
    """
    if p.degree < 1:
        raise ValueError("constant polynomial has no roots")
    lead = abs(Fraction(p.coeffs[-1]))
    cauchy = 1 + max(abs(Fraction(a)) / lead for a in p.coeffs[:-1])
    lo = -cauchy if above is None else Fraction(above)
    hi = cauchy
    chain = _sturm_chain(p)
    base = _sign_changes(chain, lo)
    if base - _sign_changes(chain, hi) == 0:
        raise ValueError("no real root in range")
    while hi - lo > width:
        mid = (lo + hi) / 2
        if base - _sign_changes(chain, mid) >= 1:
            hi = mid
        else:
            lo = mid
    return float((lo + hi) / 2)
