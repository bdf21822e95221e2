"""Exact arithmetic in the cyclotomic field Q(zeta_q).

Elements are coefficient vectors of length phi(q) reduced modulo the q-th
cyclotomic polynomial.  Any power zeta**m, primitive or not, is a valid
element.  Galois automorphisms act by exponent substitution zeta -> zeta**p.
"""

from __future__ import annotations

import json
import math
from fractions import Fraction
from functools import lru_cache
from typing import Iterable

from .errors import ConsistencyError, FieldMismatchError
from .exact import Polynomial, as_rational, parse_rational, rational_str


@lru_cache(maxsize=None)
def cyclotomic_poly(q: int) -> Polynomial:
    """Phi_q by exact division of x**q - 1 by Phi_d for the proper divisors d."""
    if q < 1:
        raise ValueError("q must be >= 1")
    num = Polynomial.monomial(q) - 1
    for d in range(1, q):
        if q % d == 0:
            quot, rem = divmod(num, cyclotomic_poly(d))
            if rem:
                raise ConsistencyError(f"Phi_{d} does not divide x^{q}-1")
            num = quot
    return num


def totient(q: int) -> int:
    return sum(1 for p in range(1, q + 1) if math.gcd(p, q) == 1)


class CycloField:
    """Q(zeta_q).  Instances are interned per conductor; use :func:`cyclo_field`."""

    def __init__(self, q: int):
        if q < 1:
            raise ValueError("conductor must be >= 1")
        self.q = q
        self.phi_poly = cyclotomic_poly(q)
        self.degree = len(self.phi_poly) - 1
        d = self.degree
        # reduced vectors of x**k for k = 0 .. max(q, 2d) - 1
        phi = self.phi_poly.coeffs
        powers = []
        vec = [Fraction(0)] * d
        vec[0] = Fraction(1)
        for _ in range(max(q, 2 * d)):
            powers.append(tuple(vec))
            carry = vec[-1]
            vec = [Fraction(0)] + vec[:-1]
            if carry:
                for j in range(d):
                    vec[j] -= carry * phi[j]
        self._powers = powers
        self.zero = CycloElem(self, (Fraction(0),) * d)
        self.one = CycloElem(self, powers[0])
        self.units = tuple(p for p in range(1, q + 1) if math.gcd(p, q) == 1)

    def __call__(self, x) -> CycloElem:
        if isinstance(x, CycloElem):
            if x.field is not self:
                raise FieldMismatchError(f"element of Q(zeta_{x.field.q}) used in Q(zeta_{self.q})")
            return x
        x = as_rational(x)
        return CycloElem(self, (x,) + (Fraction(0),) * (self.degree - 1))

    def __repr__(self) -> str:
        return f"CycloField({self.q})"

    def __reduce__(self):
        return (cyclo_field, (self.q,))

    @property
    def gen(self) -> CycloElem:
        return self.root_power(1)

    def root_power(self, m: int) -> CycloElem:
        return CycloElem(self, self._powers[m % self.q])

    def element(self, coeffs: Iterable) -> CycloElem:
        """Reduce an arbitrary coefficient vector sum c_j zeta**j into the field."""
        d = self.degree
        out = [Fraction(0)] * d
        for j, c in enumerate(coeffs):
            c = as_rational(c)
            if not c:
                continue
            if j < len(self._powers):
                vec = self._powers[j]
            else:
                vec = self._powers[j % self.q]
            for i in range(d):
                if vec[i]:
                    out[i] += c * vec[i]
        return CycloElem(self, tuple(out))


@lru_cache(maxsize=None)
def cyclo_field(q: int) -> CycloField:
    return CycloField(q)


class CycloElem:
    """sum_j coeffs[j] zeta**j with len(coeffs) == phi(q)."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: CycloField, coeffs: tuple):
        self.field = field
        self.coeffs = coeffs

    def __repr__(self) -> str:
        return f"CycloElem(q={self.field.q}, [{', '.join(rational_str(c) for c in self.coeffs)}])"

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self!r} is not rational")
        return self.coeffs[0]

    def _lift(self, other) -> CycloElem | None:
        if isinstance(other, CycloElem):
            if other.field is not self.field:
                raise FieldMismatchError(f"Q(zeta_{self.field.q}) vs Q(zeta_{other.field.q})")
            return other
        if isinstance(other, (int, Fraction)):
            return self.field(other)
        return None

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.coeffs[0] == other
        if isinstance(other, CycloElem):
            return self.field.q == other.field.q and self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self) -> int:
        if self.is_rational():
            return hash(self.coeffs[0])
        return hash((self.field.q, self.coeffs))

    def __bool__(self) -> bool:
        return any(self.coeffs)

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return CycloElem(self.field, tuple(a + b for a, b in zip(self.coeffs, o.coeffs)))

    __radd__ = __add__

    def __neg__(self) -> CycloElem:
        return CycloElem(self.field, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return CycloElem(self.field, tuple(a - b for a, b in zip(self.coeffs, o.coeffs)))

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return CycloElem(self.field, tuple(a * other for a in self.coeffs))
        o = self._lift(other)
        if o is None:
            return NotImplemented
        d = self.field.degree
        a, b = self.coeffs, o.coeffs
        if self.is_rational():
            return o * a[0]
        if o.is_rational():
            return self * b[0]
        prod = [Fraction(0)] * (2 * d - 1)
        for i, x in enumerate(a):
            if not x:
                continue
            for j, y in enumerate(b):
                if y:
                    prod[i + j] += x * y
        out = list(prod[:d])
        powers = self.field._powers
        for k in range(d, 2 * d - 1):
            c = prod[k]
            if c:
                vec = powers[k]
                for i in range(d):
                    if vec[i]:
                        out[i] += c * vec[i]
        return CycloElem(self.field, tuple(out))

    __rmul__ = __mul__

    def inverse(self) -> CycloElem:
        return cyclo_inv(self)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division by zero in cyclotomic field")
            return self * (1 / as_rational(other))
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self * cyclo_inv(o)

    def __rtruediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o * cyclo_inv(self)

    def __pow__(self, e: int) -> CycloElem:
        if e < 0:
            return cyclo_inv(self) ** (-e)
        result = self.field.one
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def to_polynomial(self) -> Polynomial:
        return Polynomial(self.coeffs)

    def conjugate(self, p: int) -> CycloElem:
        """The automorphism sigma_p: zeta -> zeta**p (p coprime to q)."""
        q = self.field.q
        if math.gcd(p, q) != 1:
            raise ValueError(f"{p} is not a unit mod {q}")
        return self.field.element(_spread(self.coeffs, p, q))

    def to_json(self) -> str:
        return json.dumps({"q": self.field.q, "coeffs": [rational_str(c) for c in self.coeffs]})

    @staticmethod
    def from_json(text: str) -> CycloElem:
        data = json.loads(text)
        field = cyclo_field(int(data["q"]))
        coeffs = tuple(parse_rational(c) for c in data["coeffs"])
        if len(coeffs) != field.degree:
            raise ValueError("coefficient vector length must equal phi(q)")
        return CycloElem(field, coeffs)


def _spread(coeffs, p: int, q: int) -> list:
    out = [Fraction(0)] * q
    for j, c in enumerate(coeffs):
        if c:
            out[(j * p) % q] += c
    return out


def root_power(field: CycloField, m: int) -> CycloElem:
    return field.root_power(m)


def cyclo_inv(a: CycloElem) -> CycloElem:
    """Inverse via the extended Euclidean algorithm against Phi_q."""
    if not a:
        raise ZeroDivisionError("division by zero in cyclotomic field")
    field = a.field
    if a.is_rational():
        return field(1 / a.coeffs[0])
    # invariant: s * a == r  (mod Phi_q)
    r0, r1 = field.phi_poly, a.to_polynomial()
    s0, s1 = Polynomial(), Polynomial.constant(1)
    while r1.degree > 0:
        quot, rem = divmod(r0, r1)
        r0, r1 = r1, rem
        s0, s1 = s1, s0 - quot * s1
    if not r1:
        raise ConsistencyError("element shares a factor with the cyclotomic polynomial")
    inv = s1.scale(1 / r1.coeffs[0])
    result = field.element(inv.coeffs)
    return result


def galois_sum(a: CycloElem) -> Fraction:
    """sum over p coprime to q of sigma_p(a); must land in Q."""
    field = a.field
    q = field.q
    if a.is_rational():
        return a.coeffs[0] * len(field.units)
    acc = [Fraction(0)] * q
    for p in field.units:
        for j, c in enumerate(a.coeffs):
            if c:
                acc[(j * p) % q] += c
    total = field.element(acc)
    if not total.is_rational():
        raise ConsistencyError(f"Galois sum is not rational: {total!r}")
    return total.coeffs[0]
