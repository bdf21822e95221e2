"""Finite-difference operator calculus.

Polynomials in the forward difference Delta act on the sequence j -> j**m at
j = 0 (the classical ``Delta^k 0^m``), or on polynomial sequences.  Each
closed difference formula here has a series-based twin used for checking.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Sequence

from .errors import PoleError
from .exact import Polynomial, as_rational, binomial, stirling2, RationalLike
from .series import LaurentSeries


def delta_power_zero(n: int, m: int) -> int:
    """Delta^n 0^m = sum_k (-1)^(n-k) C(n,k) k^m."""
    if n < 0 or m < 0:
        raise ValueError("arguments must be nonnegative")
    return sum((-1) ** (n - k) * math.comb(n, k) * k**m for k in range(n + 1))


class DeltaPoly:
    """sum_k coeffs[k] Delta^k as an abstract operator."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence[RationalLike]):
        cs = [as_rational(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def from_series(cls, s: LaurentSeries, degree: int) -> DeltaPoly:
        """Truncate a power series in Delta at ``degree``."""
        return cls([s.coefficient(k) for k in range(degree + 1)])

    def __repr__(self) -> str:
        return f"DeltaPoly({[str(c) for c in self.coeffs]})"

    def __eq__(self, other) -> bool:
        return isinstance(other, DeltaPoly) and self.coeffs == other.coeffs

    def __add__(self, other: DeltaPoly) -> DeltaPoly:
        n = max(len(self.coeffs), len(other.coeffs))
        get = lambda cs, k: cs[k] if k < len(cs) else Fraction(0)
        return DeltaPoly([get(self.coeffs, k) + get(other.coeffs, k) for k in range(n)])

    def scale(self, c: RationalLike) -> DeltaPoly:
        return DeltaPoly([a * as_rational(c) for a in self.coeffs])

    def __mul__(self, other: DeltaPoly) -> DeltaPoly:
        return DeltaPoly((Polynomial(self.coeffs) * Polynomial(other.coeffs)).coeffs)

    def derivative(self) -> DeltaPoly:
        """phi'(Delta)."""
        return DeltaPoly(Polynomial(self.coeffs).derivative().coeffs)

    def apply_zero_power(self, m: int) -> Fraction:
        """phi(Delta) 0^m."""
        return sum((c * delta_power_zero(k, m) for k, c in enumerate(self.coeffs) if k <= m), Fraction(0))

    def apply_sequence(self, values: Sequence) -> object:
        """phi(Delta) g at 0, given g(0), g(1), ... as ring elements."""
        acc = 0
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            if k >= len(values):
                raise ValueError("sequence prefix too short")
            acc = acc + forward_difference(values, k) * c
        return acc


def forward_difference(values: Sequence, k: int) -> object:
    """Delta^k g(0) = sum_i (-1)^(k-i) C(k,i) g(i)."""
    acc = 0
    for i in range(k + 1):
        acc = acc + values[i] * ((-1) ** (k - i) * math.comb(k, i))
    return acc


ONE_PLUS_DELTA = DeltaPoly([1, 1])


def euler_h(n: int, lam: RationalLike) -> Fraction:
    """Euler rational function H_n(lambda) from -(1 - Delta/(lambda-1))^{-1} 0^n.

    Normalized by (1-lambda)/(lambda-e^x) = sum H_n(lambda) x^n/n!, so
    H_0 = -1 and H_1 = -1/(lambda-1).
    """
    lam = as_rational(lam)
    if lam == 1:
        raise PoleError("H_n has a pole at lambda = 1")
    w = 1 / (lam - 1)
    return -sum((w**k * delta_power_zero(k, n) for k in range(n + 1)), Fraction(0))


def euler_h_series(n: int, lam: RationalLike) -> Fraction:
    """Reference value of H_n(lambda) from the Taylor series of (1-lambda)/(lambda - e^x)."""
    lam = as_rational(lam)
    if lam == 1:
        raise PoleError("H_n has a pole at lambda = 1")
    ex = LaurentSeries.exp_linear(Fraction(1), n)
    denom = LaurentSeries([lam], 0, n) - ex
    gen = denom.inverse().scale(1 - lam)
    return gen.coefficient(n) * math.factorial(n)


def vandiver_h(n: int, x: RationalLike) -> Fraction:
    """V_n(x) with (x d/dx)^n (x/(1-x)) = x/(1-x) V_n(x), via the Scherk-Herschel expansion."""
    x = as_rational(x)
    if x in (0, 1):
        raise PoleError("x must avoid 0 and 1")
    if n == 0:
        return Fraction(1)
    # d^k/dx^k x/(1-x) = k!/(1-x)^(k+1) for k >= 1
    total = sum((s * x**k * math.factorial(k) / (1 - x) ** (k + 1)
                 for k, s in enumerate(scherk_herschel_coeffs(n)) if k), Fraction(0))
    return total * (1 - x) / x


def _todd_symbol(c: Fraction, degree: int) -> LaurentSeries:
    """d/(1 - c e^{-d}) as a power series in d through d**degree."""
    e = LaurentSeries.exp_linear(Fraction(-1), degree)
    denom = LaurentSeries([1], 0, degree) - e.scale(c)
    return denom.inverse().shift(1).truncate(degree)


def todd_apply(c: RationalLike, f: Polynomial) -> Polynomial:
    """Todd(c, d/dh) f(h), expanding d/(1 - c e^{-d}) in powers of d."""
    c = as_rational(c)
    if c == 1:
        raise PoleError("Todd operator requires c != 1")
    if not f:
        return Polynomial()
    deg = int(f.degree)
    symbol = _todd_symbol(c, deg)
    out = Polynomial()
    deriv = f
    for k in range(deg + 1):
        coef = symbol.coefficient(k)
        if coef:
            out = out + deriv.scale(coef)
        deriv = deriv.derivative()
    return out


def todd_difference_operator(c: RationalLike, degree: int) -> DeltaPoly:
    """Truncated expansion of log(1+Delta) / (c(1+Delta) - 1)."""
    c = as_rational(c)
    if c == 1:
        raise PoleError("Todd operator requires c != 1")
    log1p = LaurentSeries([0] + [Fraction((-1) ** (k + 1), k) for k in range(1, degree + 1)], 0, degree)
    denom = LaurentSeries([c - 1, c], 0, degree)
    return DeltaPoly.from_series(log1p * denom.inverse(), degree)


def todd_apply_difference(c: RationalLike, f: Polynomial) -> Polynomial:
    """The same operator in difference form: phi(Delta_j) f(h - j) at j = 0."""
    if not f:
        if as_rational(c) == 1:
            raise PoleError("Todd operator requires c != 1")
        return Polynomial()
    deg = int(f.degree)
    op = todd_difference_operator(c, deg)
    samples = [f.shift(-j) for j in range(deg + 1)]
    result = op.apply_sequence(samples)
    return result if isinstance(result, Polynomial) else Polynomial.constant(result)


def inv_expm1_derivative(n: int) -> Polynomial:
    """d^n/ds^n 1/(e^s - 1) as a polynomial in u = 1/(e^s - 1)."""
    sign = (-1) ** n
    return Polynomial([0] + [sign * math.factorial(k - 1) * stirling2(n + 1, k) for k in range(1, n + 2)])


def inv_expm1_derivative_chain(n: int) -> Polynomial:
    """Reference: differentiate u n times using u' = -u - u^2."""
    p = Polynomial.x()
    du = Polynomial((0, -1, -1))
    for _ in range(n):
        p = p.derivative() * du
    return p


def scherk_herschel_coeffs(n: int) -> list[Fraction]:
    """Coefficients of (x d/dx)^n = sum_k c_k x^k d^k/dx^k; c_k = Delta^k 0^n / k!."""
    return [Fraction(delta_power_zero(k, n), math.factorial(k)) for k in range(n + 1)]


def delta_of_kronecker(k: int, direction: str, l: int, lprime: int) -> int:
    """k-th forward or backward difference in l of the Kronecker delta delta_l^{l'}."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    if direction == "forward":
        j = lprime - l
        return (-1) ** ((j - k) % 2) * binomial(k, j)
    if direction == "backward":
        j = l - lprime
        return (-1) ** (j % 2) * binomial(k, j)
    raise ValueError("direction must be 'forward' or 'backward'")


def central_delta_of_kronecker(k: int, l: int, lprime: int) -> int:
    """Central difference delta^k = E^{-k/2} Delta^k of delta_l^{l'}, even k only.

    Odd orders would need half-integer sample points.
    """
    if k % 2:
        raise ValueError("central differences are provided for even k only")
    return delta_of_kronecker(k, "forward", l - k // 2, lprime)
