"""Truncated Laurent series over an exact coefficient field.

A field object supplies ``zero``, ``one`` and ``__call__`` (embedding of ints
and Fractions); elements must support ``+ - * /`` with each other and
multiplication by a Fraction.  :data:`QQ` is the rational field; the cyclotomic
fields of :mod:`denumerant.cyclotomic` follow the same protocol.

A series stores its known window explicitly.  Asking for a coefficient above
the window raises :class:`TruncationError` instead of returning zero.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .errors import FieldMismatchError, SeriesDomainError, TruncationError


class RationalField:
    zero = Fraction(0)
    one = Fraction(1)

    def __call__(self, x) -> Fraction:
        return Fraction(x)

    def __repr__(self) -> str:
        return "QQ"

    def __reduce__(self):
        return "QQ"


QQ = RationalField()


class LaurentSeries:
    """sum_{k=lead}^{lead+order} coeffs[k-lead] t**k + O(t**(lead+order+1)).

    The constructor strips leading zero coefficients (shifting ``lead`` up and
    shrinking ``order``); a series with no nonzero known coefficient is the
    zero series, and only its upper bound ``top`` is meaningful.
    """

    __slots__ = ("field", "lead", "coeffs", "top")

    def __init__(self, coeffs: Iterable, lead: int = 0, order: int | None = None, field=QQ):
        cs = [field(c) if isinstance(c, (int, Fraction)) else c for c in coeffs]
        if order is None:
            order = len(cs) - 1
        if order < -1:
            raise ValueError("order must be >= -1")
        if len(cs) > order + 1:
            cs = cs[: order + 1]
        cs.extend(field.zero for _ in range(order + 1 - len(cs)))
        top = lead + order
        skip = 0
        while skip < len(cs) and cs[skip] == 0:
            skip += 1
        self.field = field
        self.top = top
        self.lead = lead + skip
        self.coeffs = tuple(cs[skip:])

    @classmethod
    def monomial(cls, k: int, order: int, c=1, field=QQ) -> LaurentSeries:
        """c t**k known to relative order ``order``."""
        return cls([c], lead=k, order=order, field=field)

    @classmethod
    def exp_linear(cls, c, top: int, field=QQ) -> LaurentSeries:
        """exp(c t) with coefficients through t**top; ``c`` is a field element."""
        out = [field.one]
        for k in range(1, top + 1):
            out.append(out[-1] * c * Fraction(1, k))
        return cls(out, lead=0, order=top, field=field)

    @property
    def order(self) -> int:
        return self.top - self.lead

    def is_zero(self) -> bool:
        return not self.coeffs

    def __repr__(self) -> str:
        return f"LaurentSeries(lead={self.lead}, coeffs={list(self.coeffs)!r}, top={self.top})"

    def coefficient(self, k: int):
        if k > self.top:
            raise TruncationError(f"coefficient of t^{k} requested but series is known only through t^{self.top}")
        if k < self.lead:
            return self.field.zero
        return self.coeffs[k - self.lead]

    def __getitem__(self, k: int):
        return self.coefficient(k)

    def _check(self, other: LaurentSeries) -> None:
        if not isinstance(other, LaurentSeries):
            raise TypeError("expected a LaurentSeries")
        if other.field != self.field:
            raise FieldMismatchError(f"series over {self.field!r} and {other.field!r}")

    def truncate(self, top: int) -> LaurentSeries:
        top = min(top, self.top)
        if self.is_zero():
            return LaurentSeries([], lead=top + 1, order=-1, field=self.field)
        return LaurentSeries(self.coeffs[: max(top - self.lead + 1, 0)], lead=self.lead,
                             order=top - self.lead, field=self.field)

    def __add__(self, other):
        if not isinstance(other, LaurentSeries):
            other = LaurentSeries([other], 0, max(self.top, 0), field=self.field)
        self._check(other)
        top = min(self.top, other.top)
        start = min(self.lead, other.lead, top + 1)
        cs = [self.coefficient_or_zero(k) + other.coefficient_or_zero(k) for k in range(start, top + 1)]
        return LaurentSeries(cs, lead=start, order=top - start, field=self.field)

    __radd__ = __add__

    def coefficient_or_zero(self, k: int):
        if k < self.lead or k > self.top:
            return self.field.zero
        return self.coeffs[k - self.lead]

    def __neg__(self) -> LaurentSeries:
        return LaurentSeries([-c for c in self.coeffs], lead=self.lead, order=self.order, field=self.field)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> LaurentSeries:
        return LaurentSeries([a * c for a in self.coeffs], lead=self.lead, order=self.order, field=self.field)

    def shift(self, k: int) -> LaurentSeries:
        """Multiply by t**k."""
        return LaurentSeries(self.coeffs, lead=self.lead + k, order=self.order, field=self.field)

    def __mul__(self, other):
        if not isinstance(other, LaurentSeries):
            return self.scale(other)
        self._check(other)
        if self.is_zero() or other.is_zero():
            # the known window of a product with a zero factor
            low_a = self.lead if not self.is_zero() else self.top + 1
            low_b = other.lead if not other.is_zero() else other.top + 1
            top = min(self.top + low_b, other.top + low_a)
            return LaurentSeries([], lead=top + 1, order=-1, field=self.field)
        order = min(self.order, other.order)
        zero = self.field.zero
        out = [zero] * (order + 1)
        nz_b = [(j, y) for j, y in enumerate(other.coeffs[: order + 1]) if y != 0]
        for i, x in enumerate(self.coeffs[: order + 1]):
            if x == 0:
                continue
            for j, y in nz_b:
                if i + j > order:
                    break
                out[i + j] = out[i + j] + x * y
        return LaurentSeries(out, lead=self.lead + other.lead, order=order, field=self.field)

    def __rmul__(self, other):
        return self.scale(other)

    def inverse(self) -> LaurentSeries:
        if self.is_zero():
            raise SeriesDomainError("series is not invertible (zero up to truncation)")
        a = self.coeffs
        inv0 = self.field.one / a[0]
        out = [inv0]
        nz = [(i, a[i]) for i in range(1, len(a)) if a[i] != 0]
        for k in range(1, self.order + 1):
            acc = self.field.zero
            for i, x in nz:
                if i > k:
                    break
                acc = acc + x * out[k - i]
            out.append(-acc * inv0)
        return LaurentSeries(out, lead=-self.lead, order=self.order, field=self.field)

    def __truediv__(self, other):
        if isinstance(other, LaurentSeries):
            return self * other.inverse()
        return self.scale(self.field.one / other)

    def __pow__(self, e: int) -> LaurentSeries:
        if e < 0:
            return self.inverse() ** (-e)
        result = LaurentSeries([self.field.one], 0, self.order, field=self.field)
        for _ in range(e):
            result = result * self
        return result

    def exp(self) -> LaurentSeries:
        """exp of a series with zero constant term; exact Taylor composition."""
        if not self.is_zero() and self.lead < 1:
            raise SeriesDomainError("exp requires a series with lead >= 1")
        top = self.top
        if top < 0:
            raise SeriesDomainError("exp needs the series known through t^0")
        g = [self.coefficient_or_zero(k) for k in range(top + 1)]
        f = [self.field.one]
        for n in range(1, top + 1):
            acc = self.field.zero
            for k in range(1, n + 1):
                if g[k] != 0:
                    acc = acc + g[k] * f[n - k] * k
            f.append(acc * Fraction(1, n))
        return LaurentSeries(f, lead=0, order=top, field=self.field)

    def log(self) -> LaurentSeries:
        """log of a series with lead 0 and constant term 1."""
        if self.is_zero() or self.lead != 0 or self.coeffs[0] != self.field.one:
            raise SeriesDomainError("log requires lead 0 and constant term 1")
        f = self.coeffs
        top = self.top
        g = [self.field.zero]
        for n in range(1, top + 1):
            acc = f[n] * n
            for k in range(1, n):
                if g[k] != 0:
                    acc = acc - g[k] * f[n - k] * k
            g.append(acc * Fraction(1, n))
        return LaurentSeries(g, lead=0, order=top, field=self.field)

    def __eq__(self, other) -> bool:
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        if self.field != other.field:
            return False
        top = min(self.top, other.top)
        start = min(self.lead, other.lead)
        return all(self.coefficient_or_zero(k) == other.coefficient_or_zero(k) for k in range(start, top + 1))

    __hash__ = None


def series_arith(a: LaurentSeries, b: LaurentSeries, op: str) -> LaurentSeries:
    if op == "add":
        return a + b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown op {op!r}")


def series_inv(a: LaurentSeries) -> LaurentSeries:
    return a.inverse()


def series_exp(a: LaurentSeries) -> LaurentSeries:
    return a.exp()


def series_log(a: LaurentSeries) -> LaurentSeries:
    return a.log()


def coefficient(a: LaurentSeries, k: int):
    return a.coefficient(k)


def one_minus_power(d: int, top: int, field=QQ) -> LaurentSeries:
    """1 - sigma**d, known exactly through sigma**top."""
    cs: list = [field.one] + [field.zero] * top
    if d <= top:
        cs[d] = -field.one
    return LaurentSeries(cs, lead=0, order=top, field=field)


def from_coefficients(values: Sequence, lead: int = 0, field=QQ) -> LaurentSeries:
    return LaurentSeries(values, lead=lead, field=field)
