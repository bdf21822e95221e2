"""Ground-truth denumerant tables and the discrete smoothing identities."""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import ConsistencyError
from .exact import binomial
from .series import LaurentSeries, one_minus_power


@dataclass(frozen=True)
class Components:
    """The multiset of positive integers d_i, order preserved."""

    d: tuple[int, ...]

    def __init__(self, d: Iterable[int]):
        d = tuple(int(x) for x in d)
        if not d:
            raise ValueError("at least one component is required")
        if any(x < 1 for x in d):
            raise ValueError("components must be positive integers")
        object.__setattr__(self, "d", d)

    def __iter__(self):
        return iter(self.d)

    def __len__(self) -> int:
        return len(self.d)

    @property
    def total(self) -> int:
        return sum(self.d)

    def divisors(self) -> list[int]:
        """Every q >= 1 dividing at least one component, ascending."""
        return sorted({q for x in self.d for q in range(1, x + 1) if x % q == 0})

    def split(self, q: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
        """(components divisible by q, the rest), each in input order."""
        return (tuple(x for x in self.d if x % q == 0), tuple(x for x in self.d if x % q))

    def extended(self, extra: Iterable[int]) -> Components:
        return Components(self.d + tuple(extra))


def _components(c) -> Components:
    return c if isinstance(c, Components) else Components(c)


@dataclass(frozen=True)
class DenumerantTable:
    components: Components
    values: tuple[int, ...]

    def __getitem__(self, l: int) -> int:
        return self.values[l]

    def __len__(self) -> int:
        return len(self.values)

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n", quoting=csv.QUOTE_MINIMAL)
        writer.writerow(["l", "value"])
        for l, v in enumerate(self.values):
            writer.writerow([l, v])
        return buf.getvalue()

    def to_json(self) -> str:
        return json.dumps([str(v) for v in self.values])

    @classmethod
    def from_json(cls, components, text: str) -> DenumerantTable:
        return cls(_components(components), tuple(int(v) for v in json.loads(text)))


def herschel_indicator(l: int, q: int) -> int:
    """Denumerant of l with the single component q."""
    return 1 if l % q == 0 else 0


def denumerant_bruteforce(L: int, c) -> DenumerantTable:
    """One-component-at-a-time convolution, O(len(d) * L)."""
    c = _components(c)
    if L < 0:
        raise ValueError("L must be nonnegative")
    values = [1] + [0] * L
    for d in c:
        # convolving with the indicator of multiples of d
        for l in range(d, L + 1):
            values[l] += values[l - d]
    return DenumerantTable(c, tuple(values))


def denumerant_series(L: int, c) -> DenumerantTable:
    """Coefficients of prod 1/(1 - sigma^d_i), expanded as a rational Laurent series."""
    c = _components(c)
    if L < 0:
        raise ValueError("L must be nonnegative")
    gen = LaurentSeries([1], 0, L)
    for d in c:
        gen = gen * one_minus_power(d, L).inverse()
    values = []
    for l in range(L + 1):
        v = gen.coefficient(l)
        if v.denominator != 1 or v < 0:
            raise ConsistencyError(f"generating-function coefficient {v} at l={l} is not a count")
        values.append(int(v))
    return DenumerantTable(c, tuple(values))


def unit_denumerant(l: int, d: int) -> int:
    """Denumerant of l with d components all equal to 1."""
    return math.comb(d - 1 + l, l)


def add_ones_smoothing(c, k: int, L: int) -> DenumerantTable:
    """Table for c with k extra unit components, via one binomial convolution."""
    c = _components(c)
    if k < 1:
        raise ValueError("k must be a positive integer")
    base = denumerant_bruteforce(L, c).values
    weights = [math.comb(k - 1 + j, j) for j in range(L + 1)]
    values = tuple(sum(weights[l - lp] * base[lp] for lp in range(l + 1)) for l in range(L + 1))
    return DenumerantTable(c.extended([1] * k), values)


def cesaro_sum(r: int, g: Sequence, n: int) -> Fraction:
    """S_n^(r) = sum_{nu<=n} C(r+n-nu, r) g_nu."""
    if r < 0 or n < 0:
        raise ValueError("r and n must be nonnegative")
    if len(g) <= n:
        raise ValueError(f"need at least {n + 1} sequence terms, got {len(g)}")
    return sum((binomial(r + n - nu, r) * Fraction(g[nu]) for nu in range(n + 1)), Fraction(0))


def table_convolution(a: Sequence[int], b: Sequence[int]) -> tuple[int, ...]:
    """Cauchy product of two tables, truncated to the shorter length."""
    n = min(len(a), len(b))
    return tuple(sum(a[l - lp] * b[lp] for lp in range(l + 1)) for l in range(n))
