"""Sylvester waves of the denumerant and their assembly into a quasipolynomial.

For a period q the components split into those divisible by q (the alphas,
``frequency = len(alphas)``) and the rest (the betas).  With rho a primitive
q-th root of unity and lbar = l + sum(d)/2,

    W_q(l) = 1/prod(alphas) * sum_rho rho^l / prod_j (1 - rho^-beta_j)
             * sum_k (-1)^k Theta_k lbar^(alpha-1-k) / (alpha-1-k)!

where sum_r (-1)^r Theta_r t^r = exp(-kappa_1 t + kappa_2 t^2/2 - ...) is the
normalized product of the ``(alpha t/2)/sinh(alpha t/2)`` factors and the
``(1 - u)/(e^{beta t/2} - u e^{-beta t/2})`` factors (u = rho^-beta).

All root-of-unity arithmetic happens in Q(zeta_q) with rho = zeta; the sum
over primitive roots is the Galois sum, which makes every coefficient of
every residue polynomial an exact rational.

Two places where the code departs from the usual closed forms:

* The cubic homogeneous product is Theta_3 = (k1^3 + 3 k1 k2 + 2 k3)/6; Theta
  is always produced by series exponentiation, never from a table.
* :func:`xi` is normalized so that the kappa table holds verbatim.  The
  printed closed form equals ``(-1)**n * 2**(1-n) * xi(n)``; see
  :func:`xi_printed`.  For q = 2 only the odd-index Xi vanish.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from .cyclotomic import CycloElem, CycloField, cyclo_field, galois_sum
from .errors import ConsistencyError, WavePeriodError
from .exact import Polynomial, lcm_all, parse_rational, rational_str, stirling2
from .partitions import Components, _components
from .series import LaurentSeries

GUARD_TERMS = 4


@dataclass(frozen=True)
class WaveContext:
    q: int
    alphas: tuple[int, ...]
    betas: tuple[int, ...]
    field: CycloField = dc_field(repr=False, compare=False)

    @property
    def frequency(self) -> int:
        return len(self.alphas)


def split_components(c, q: int) -> WaveContext:
    c = _components(c)
    if q < 1:
        raise ValueError("q must be a positive integer")
    alphas, betas = c.split(q)
    if not alphas:
        raise WavePeriodError(f"q={q} is not a wave period for these components")
    return WaveContext(q, alphas, betas, cyclo_field(q))


def _check_betas(ctx: WaveContext) -> None:
    for b in ctx.betas:
        if b % ctx.q == 0:
            raise WavePeriodError(f"beta={b} is divisible by q={ctx.q}; invalid split")


def xi(n: int, ctx: WaveContext, rho_exponent: int = 1) -> CycloElem:
    """Xi_n in Q(zeta_q), rho = zeta**rho_exponent.

    Normalized by log prod_j Omega_j = sum_n (-1)^n Xi_n t^n / (n 2^n (n-1)!),
    which gives Xi_1 = sum beta (1+u)/(1-u) and, for n >= 2,
    Xi_n = 2^n sum beta^n sum_k k! S(n-1,k) u^k/(1-u)^(k+1), with u = rho^-beta.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if ctx.q < 2:
        raise ValueError("Xi is defined for q >= 2")
    if math.gcd(rho_exponent, ctx.q) != 1:
        raise ValueError("rho_exponent must be coprime to q")
    _check_betas(ctx)
    F = ctx.field
    total = F.zero
    for b in ctx.betas:
        u = F.root_power(-b * rho_exponent)
        w = 1 / (1 - u)
        if n == 1:
            total = total + (1 + u) * w * b
            continue
        ratio = u * w
        inner = F.zero
        power = ratio
        for k in range(1, n):
            inner = inner + power * (math.factorial(k) * stirling2(n - 1, k))
            power = power * ratio
        total = total + inner * w * (2**n * b**n)
    return total


def xi_printed(n: int, ctx: WaveContext, rho_exponent: int = 1) -> CycloElem:
    """Xi_n in the printed closed-form normalization: 2(-1)^n sum beta^n [1/(1-u(1+Delta))] 0^(n-1)."""
    return xi(n, ctx, rho_exponent) * Fraction((-1) ** n, 2 ** (n - 1))


@lru_cache(maxsize=None)
def _alpha_log_series(alphas: tuple[int, ...], top: int) -> LaurentSeries:
    """log prod_i (a_i t/2) / sinh(a_i t/2) through t**top."""
    acc = LaurentSeries([0], 0, top)
    for a in alphas:
        # sinh(x)/x = sum x^(2k)/(2k+1)!, x = a t / 2
        cs = [Fraction(0)] * (top + 1)
        for k in range(0, top // 2 + 1):
            cs[2 * k] = Fraction(a, 2) ** (2 * k) / math.factorial(2 * k + 1)
        acc = acc - LaurentSeries(cs, 0, top).log()
    return acc


def tau_bar(two_n: int, alphas: Sequence[int]) -> Fraction:
    """tau-bar_{2n} from log prod (a t/2)/sinh(a t/2) = -tb_2 t^2/2 + tb_4 t^4/4 - ..."""
    if two_n < 2 or two_n % 2:
        raise ValueError("two_n must be a positive even integer")
    n = two_n // 2
    c = _alpha_log_series(tuple(alphas), two_n).coefficient(two_n)
    return (-1) ** n * two_n * c


def kappa(n: int, ctx: WaveContext, rho_exponent: int = 1) -> CycloElem:
    """kappa_n = Xi_n/(2^n (n-1)!) + [n = 2m] (-1)^m tau-bar_{2m}."""
    if n < 1:
        raise ValueError("n must be >= 1")
    F = ctx.field
    if ctx.q == 1 or not ctx.betas:
        out = F.zero
    else:
        out = xi(n, ctx, rho_exponent) * Fraction(1, 2**n * math.factorial(n - 1))
    if n % 2 == 0:
        m = n // 2
        out = out + F((-1) ** m * tau_bar(n, ctx.alphas))
    return out


def theta_sequence(kappas: Sequence[CycloElem], count: int, field=None) -> list[CycloElem]:
    """Theta_0 .. Theta_{count-1} from exp(sum_n (-1)^n kappa_n t^n / n) = sum (-1)^r Theta_r t^r."""
    if count < 1:
        raise ValueError("count must be >= 1")
    if count > len(kappas) + 1:
        raise ValueError("need kappa_1 .. kappa_{count-1}")
    if field is None:
        if not kappas:
            raise ValueError("field is required when no kappas are given")
        field = kappas[0].field
    top = count - 1
    cs = [field.zero] + [kappas[n - 1] * Fraction((-1) ** n, n) for n in range(1, top + 1)]
    gen = LaurentSeries(cs, 0, top, field=field).exp()
    return [gen.coefficient(r) * (-1) ** r for r in range(count)]


@dataclass(frozen=True)
class Wave:
    """residue_polys[r] is the wave on l = r (mod q), as a polynomial in lbar = l + shift."""

    q: int
    residue_polys: tuple[Polynomial, ...]
    shift: Fraction

    def evaluate(self, l: int) -> Fraction:
        return self.residue_polys[l % self.q](Fraction(l) + self.shift)

    def as_l_polys(self) -> tuple[Polynomial, ...]:
        """Residue polynomials re-expressed in the integer variable l."""
        return tuple(p.shift(self.shift) for p in self.residue_polys)

    def to_dict(self) -> dict:
        return {"q": self.q, "residues": [[rational_str(c) for c in p.coeffs] for p in self.residue_polys]}


def _prefactor(ctx: WaveContext) -> CycloElem:
    F = ctx.field
    denom = F.one
    for b in ctx.betas:
        denom = denom * (1 - F.root_power(-b))
    return (1 / denom) * Fraction(1, math.prod(ctx.alphas))


def _galois_residues(ctx: WaveContext, lbar_coeffs: Sequence[CycloElem]) -> tuple[Polynomial, ...]:
    F = ctx.field
    polys = []
    for r in range(ctx.q):
        zr = F.root_power(r)
        polys.append(Polynomial(galois_sum(zr * c) for c in lbar_coeffs))
    return tuple(polys)


def wave(q: int, c) -> Wave:
    """W_q through the Xi / kappa / Theta pipeline."""
    c = _components(c)
    ctx = split_components(c, q)
    alpha = ctx.frequency
    F = ctx.field
    pref = _prefactor(ctx)
    kappas = [kappa(n, ctx) for n in range(1, alpha)]
    thetas = theta_sequence(kappas, alpha, F)
    lbar_coeffs = [F.zero] * alpha
    for k, theta in enumerate(thetas):
        m = alpha - 1 - k
        lbar_coeffs[m] = pref * theta * Fraction((-1) ** k, math.factorial(m))
    return Wave(q, _galois_residues(ctx, lbar_coeffs), Fraction(c.total, 2))


def _wave_generating_series(ctx: WaveContext, guard: int) -> LaurentSeries:
    """prod_i 1/(e^{a t/2} - e^{-a t/2}) prod_j 1/(e^{b t/2} - zeta^-b e^{-b t/2}) over Q(zeta_q)."""
    F = ctx.field
    rel = ctx.frequency - 1 + guard
    gen = LaurentSeries([F.one], 0, rel, field=F)
    for a in ctx.alphas:
        half = F(Fraction(a, 2))
        fac = LaurentSeries.exp_linear(half, rel + 1, F) - LaurentSeries.exp_linear(-half, rel + 1, F)
        gen = gen * fac.inverse()
    for b in ctx.betas:
        half = F(Fraction(b, 2))
        u = F.root_power(-b)
        fac = LaurentSeries.exp_linear(half, rel, F) - LaurentSeries.exp_linear(-half, rel, F).scale(u)
        gen = gen * fac.inverse()
    return gen


def wave_series_oracle(q: int, c, r: int, guard: int = GUARD_TERMS) -> Polynomial:
    """Residue r of W_q as co_{-1} of e^{lbar t} times the generating series, Galois-summed."""
    c = _components(c)
    ctx = split_components(c, q)
    F = ctx.field
    gen = _wave_generating_series(ctx, guard)
    zr = F.root_power(r)
    coeffs = []
    for n in range(ctx.frequency):
        coeffs.append(galois_sum(zr * gen.coefficient(-1 - n) * Fraction(1, math.factorial(n))))
    return Polynomial(coeffs)


@dataclass(frozen=True)
class QuasiPolynomial:
    components: Components
    waves: tuple[Wave, ...]

    @property
    def shift(self) -> Fraction:
        return Fraction(self.components.total, 2)

    @property
    def period(self) -> int:
        return lcm_all([w.q for w in self.waves])

    def wave(self, q: int) -> Wave:
        for w in self.waves:
            if w.q == q:
                return w
        raise WavePeriodError(f"q={q} is not a wave period for these components")

    def evaluate(self, l: int) -> Fraction:
        return sum((w.evaluate(l) for w in self.waves), Fraction(0))

    def count(self, l: int) -> int:
        """The denumerant at l >= 0; checks integrality."""
        v = self.evaluate(l)
        if v.denominator != 1 or (l >= 0 and v < 0):
            raise ConsistencyError(f"quasipolynomial value {v} at l={l} is not a count")
        return int(v)

    def to_dict(self) -> dict:
        return {
            "components": list(self.components.d),
            "shift": rational_str(self.shift),
            "waves": [w.to_dict() for w in self.waves],
        }

    def to_json(self, **kwargs) -> str:
        return json.dumps(self.to_dict(), **kwargs)

    @classmethod
    def from_dict(cls, data: dict) -> QuasiPolynomial:
        comps = Components(data["components"])
        shift = parse_rational(data["shift"])
        if shift != Fraction(comps.total, 2):
            raise ValueError("shift does not match the components")
        waves = tuple(
            Wave(int(w["q"]), tuple(Polynomial(parse_rational(x) for x in res) for res in w["residues"]), shift)
            for w in data["waves"]
        )
        for w in waves:
            if len(w.residue_polys) != w.q:
                raise ValueError(f"wave q={w.q} must list {w.q} residues")
        return cls(comps, waves)

    @classmethod
    def from_json(cls, text: str) -> QuasiPolynomial:
        return cls.from_dict(json.loads(text))


def quasipolynomial(c) -> QuasiPolynomial:
    """All waves W_q, q running over every divisor of every component."""
    c = _components(c)
    return QuasiPolynomial(c, tuple(wave(q, c) for q in c.divisors()))


@dataclass(frozen=True)
class DedekindSumSpec:
    l: int
    betas: tuple[int, ...]
    q: int

    def __post_init__(self):
        object.__setattr__(self, "betas", tuple(int(b) for b in self.betas))
        if self.q < 2:
            raise ValueError("q must be >= 2")
        if any(b < 1 for b in self.betas):
            raise ValueError("betas must be positive integers")
        for b in self.betas:
            if math.gcd(b, self.q) != 1:
                raise ValueError(f"gcd({b}, {self.q}) != 1")


def fourier_dedekind(spec: DedekindSumSpec) -> Fraction:
    """s_l(beta; q) = 1/q sum_{m=1}^{q-1} zeta^(m l) / prod_j (1 - zeta^(m beta_j))."""
    F = cyclo_field(spec.q)
    total = F.zero
    for m in range(1, spec.q):
        denom = F.one
        for b in spec.betas:
            denom = denom * (1 - F.root_power(m * b))
        total = total + F.root_power(m * spec.l) / denom
    total = total * Fraction(1, spec.q)
    if not total.is_rational():
        raise ConsistencyError(f"Fourier-Dedekind sum is not rational: {total!r}")
    return total.rational()


def coprime_residue_wave(q: int, c) -> Wave:
    """W_q for a q dividing exactly one component d, from the simple-pole residues.

    W_q(l) = (1/d) sum_rho rho^-l / prod_j (1 - rho^beta_j), rho over primitive q-th roots.
    """
    c = _components(c)
    ctx = split_components(c, q)
    if ctx.frequency != 1:
        raise ValueError("residue formula needs q to divide exactly one component")
    (d,) = ctx.alphas
    F = ctx.field
    denom = F.one
    for b in ctx.betas:
        denom = denom * (1 - F.root_power(b))
    base = (1 / denom) * Fraction(1, d)
    polys = tuple(Polynomial([galois_sum(F.root_power(-r) * base)]) for r in range(q))
    return Wave(q, polys, Fraction(c.total, 2))


@dataclass(frozen=True)
class ReciprocityReport:
    components: tuple[int, ...]
    per_residue: dict
    sign: int | None
    consistent: bool
    expected: int
    violations: tuple[int, ...] = ()

    @property
    def matches_expected(self) -> bool:
        return self.consistent and self.sign == self.expected


def reciprocity_check(qp: QuasiPolynomial, l_range: Iterable[int]) -> ReciprocityReport:
    """Measure the sign eps in D(-l - sum d) = eps D(l), per residue class mod the period."""
    s = qp.components.total
    period = qp.period
    per_residue: dict[int, int | None] = {}
    violations = []
    for l in l_range:
        a = qp.evaluate(l)
        b = qp.evaluate(-l - s)
        r = l % period
        if a == 0 and b == 0:
            per_residue.setdefault(r, None)
            continue
        if a == 0 or b == 0 or abs(b) != abs(a):
            violations.append(l)
            continue
        eps = 1 if b == a else -1
        prev = per_residue.get(r)
        if prev is not None and prev != eps:
            violations.append(l)
        per_residue[r] = eps
    signs = {e for e in per_residue.values() if e is not None}
    consistent = not violations and len(signs) <= 1
    sign = signs.pop() if consistent and signs else None
    return ReciprocityReport(
        components=qp.components.d,
        per_residue=dict(sorted(per_residue.items())),
        sign=sign,
        consistent=consistent,
        expected=(-1) ** (len(qp.components) - 1),
        violations=tuple(violations),
    )
