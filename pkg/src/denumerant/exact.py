"""Exact scalars, dense rational polynomials and combinatorial primitives.

Rationals are :class:`fractions.Fraction`, which is always gcd-reduced with a
positive denominator, so equality between values is structural.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence, Union

Rational = Fraction
RationalLike = Union[int, Fraction]

_RATIONAL_RE = re.compile(r"^-?[0-9]+(/[0-9]+)?$")


def as_rational(x: RationalLike) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"expected int or Fraction, got {type(x).__name__}")


def rational_str(x: RationalLike) -> str:
    """Serialize as ``"p/q"``, or ``"p"`` when the denominator is 1."""
    return str(as_rational(x))


def parse_rational(text: str) -> Fraction:
    """Inverse of :func:`rational_str`; rejects whitespace and decimals."""
    if not _RATIONAL_RE.match(text):
        raise ValueError(f"not a rational literal: {text!r}")
    value = Fraction(text)
    return value


def binomial(n: int, k: int) -> int:
    """Ordinary binomial coefficient, zero when ``k`` is outside ``0..n``."""
    if k < 0 or n < 0 or k > n:
        return 0
    return math.comb(n, k)


def falling(m: int, k: int) -> int:
    """Falling factorial m (m-1) ... (m-k+1)."""
    out = 1
    for j in range(k):
        out *= m - j
    return out


def binomial_generalized(alpha: RationalLike, l: int) -> Fraction:
    """Coefficient of sigma**l in (1 - sigma)**(-alpha).

    Uses the product form prod_{j<l} (alpha + j) / l!, so a negative integer
    ``alpha = -k`` gives (-1)**l * C(k, l) with no limiting process.
    """
    if l < 0:
        raise ValueError("l must be nonnegative")
    alpha = as_rational(alpha)
    num = Fraction(1)
    for j in range(l):
        num *= alpha + j
    return num / math.factorial(l)


def stirling2(m: int, n: int) -> int:
    """Stirling number of the second kind via the alternating sum for Delta^n 0^m."""
    if m < 0 or n < 0:
        raise ValueError("arguments must be nonnegative")
    total = sum((-1) ** (n - k) * math.comb(n, k) * k**m for k in range(n + 1))
    q, r = divmod(total, math.factorial(n))
    assert r == 0
    return q


@lru_cache(maxsize=None)
def _stirling2_rows(m: int) -> tuple[tuple[int, ...], ...]:
    rows = [(1,)]
    for i in range(1, m + 1):
        prev = rows[-1]
        row = [0] * (i + 1)
        for j in range(1, i + 1):
            left = prev[j] if j < len(prev) else 0
            row[j] = j * left + prev[j - 1]
        rows.append(tuple(row))
    return tuple(rows)


def stirling2_recurrence(m: int, n: int) -> int:
    """Same numbers from the triangle S(m,n) = n S(m-1,n) + S(m-1,n-1)."""
    if m < 0 or n < 0:
        raise ValueError("arguments must be nonnegative")
    if n > m:
        return 0
    return _stirling2_rows(m)[m][n]


class Polynomial:
    """Dense univariate polynomial with rational coefficients.

    ``coeffs[k]`` multiplies ``x**k``; trailing zeros are stripped so the zero
    polynomial has an empty coefficient tuple.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[RationalLike] = ()):
        cs = [as_rational(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(cs)

    @classmethod
    def x(cls) -> Polynomial:
        return cls((0, 1))

    @classmethod
    def constant(cls, c: RationalLike) -> Polynomial:
        return cls((c,))

    @classmethod
    def monomial(cls, k: int, c: RationalLike = 1) -> Polynomial:
        return cls([0] * k + [c])

    @property
    def degree(self) -> float:
        """Degree, or ``-math.inf`` for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else -math.inf

    def __len__(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, k: int) -> Fraction:
        if k < 0:
            raise IndexError("negative power")
        return self.coeffs[k] if k < len(self.coeffs) else Fraction(0)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"Polynomial([{', '.join(rational_str(c) for c in self.coeffs)}])"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mono = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
            if mono and c == 1:
                terms.append(mono)
            elif mono and c == -1:
                terms.append(f"-{mono}")
            elif mono:
                terms.append(f"{c}*{mono}")
            else:
                terms.append(str(c))
        return " + ".join(terms).replace("+ -", "- ")

    def _coerce(self, other) -> Polynomial:
        if isinstance(other, Polynomial):
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial.constant(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        n = max(len(self.coeffs), len(other.coeffs))
        return Polynomial(self[k] + other[k] for k in range(n))

    __radd__ = __add__

    def __neg__(self) -> Polynomial:
        return Polynomial(-c for c in self.coeffs)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return Polynomial()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Polynomial(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> Polynomial:
        if e < 0:
            raise ValueError("negative exponent")
        result = Polynomial.constant(1)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __divmod__(self, other: Polynomial) -> tuple[Polynomial, Polynomial]:
        if not other.coeffs:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dv = other.coeffs
        lead = dv[-1]
        if len(rem) < len(dv):
            return Polynomial(), Polynomial(rem)
        quot = [Fraction(0)] * (len(rem) - len(dv) + 1)
        for i in range(len(quot) - 1, -1, -1):
            c = rem[i + len(dv) - 1] / lead
            quot[i] = c
            if c:
                for j, d in enumerate(dv):
                    rem[i + j] -= c * d
        return Polynomial(quot), Polynomial(rem[: len(dv) - 1])

    def __floordiv__(self, other: Polynomial) -> Polynomial:
        return divmod(self, other)[0]

    def __mod__(self, other: Polynomial) -> Polynomial:
        return divmod(self, other)[1]

    def __call__(self, x):
        """Horner evaluation; ``x`` may be any ring element that mixes with Fraction."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> Polynomial:
        return Polynomial(k * c for k, c in enumerate(self.coeffs) if k)

    def compose(self, inner: Polynomial) -> Polynomial:
        acc = Polynomial()
        for c in reversed(self.coeffs):
            acc = acc * inner + c
        return acc

    def shift(self, offset: RationalLike) -> Polynomial:
        """The polynomial x -> p(x + offset)."""
        return self.compose(Polynomial((offset, 1)))

    def scale(self, factor: RationalLike) -> Polynomial:
        return Polynomial(c * as_rational(factor) for c in self.coeffs)

    def monic(self) -> Polynomial:
        if not self.coeffs:
            raise ZeroDivisionError("zero polynomial has no leading coefficient")
        return self.scale(1 / self.coeffs[-1])


def poly_shift_negate(p: Polynomial, offset: RationalLike) -> Polynomial:
    """Expand q(x) = p(-x - offset)."""
    return p.compose(Polynomial((-as_rational(offset), -1)))


def poly_gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    while b:
        a, b = b, a % b
    return a.monic() if a else a


def lcm_all(values: Sequence[int]) -> int:
    out = 1
    for v in values:
        out = out * v // math.gcd(out, v)
    return out
