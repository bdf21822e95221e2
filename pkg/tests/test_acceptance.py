"""Acceptance criteria, one test each; the summary prints a PASS/FAIL line per criterion."""

import math
import random
import time
from fractions import Fraction

import pytest

from denumerant.exact import Polynomial, binomial_generalized, falling, stirling2
from denumerant.findiff import (
    delta_of_kronecker,
    euler_h,
    euler_h_series,
    inv_expm1_derivative,
    inv_expm1_derivative_chain,
    todd_apply,
    todd_apply_difference,
)
from denumerant.partitions import add_ones_smoothing, denumerant_bruteforce, denumerant_series
from denumerant.verify import random_component_sets
from denumerant.waves import (
    DedekindSumSpec,
    fourier_dedekind,
    quasipolynomial,
    reciprocity_check,
    wave_series_oracle,
)

CORPUS_SEED = 20240601
CORPUS = random_component_sets(CORPUS_SEED, 30)
criterion = pytest.mark.criterion


def test_corpus_shape():
    assert len(CORPUS) >= 30
    assert all(1 <= len(c) <= 4 and max(c) <= 10 for c in CORPUS)
    assert any(len(set(c)) < len(c) for c in CORPUS)
    assert any(len(c) > 1 and math.gcd(*c) > 1 for c in CORPUS)


@criterion("1. 46262 by brute force, series and quasipolynomial in < 10 s")
def test_criterion_1_reference_value():
    start = time.perf_counter()
    c = [1, 2, 3, 4, 5]
    bf = denumerant_bruteforce(100, c)[100]
    se = denumerant_series(100, c)[100]
    qp = quasipolynomial(c).evaluate(100)
    elapsed = time.perf_counter() - start
    print(f"criterion 1: bruteforce={bf} series={se} quasipolynomial={qp} in {elapsed:.2f}s")
    assert bf == se == qp == 46262
    assert elapsed < 10


@criterion("2. brute force = series = sum of waves, 30 seeded sets, l <= 200, < 2 min")
def test_criterion_2_cross_path():
    start = time.perf_counter()
    for c in CORPUS:
        bf = denumerant_bruteforce(200, c).values
        se = denumerant_series(200, c).values
        qp = quasipolynomial(c)
        assert bf == se, c
        assert all(qp.evaluate(l) == bf[l] for l in range(201)), c
    elapsed = time.perf_counter() - start
    print(f"criterion 2: {len(CORPUS)} sets in {elapsed:.2f}s")
    assert elapsed < 120


@criterion("3. wave pipeline = Laurent oracle for every (q, residue) of the corpus")
def test_criterion_3_wave_oracle():
    cells = 0
    for c in CORPUS:
        for w in quasipolynomial(c).waves:
            for r in range(w.q):
                assert wave_series_oracle(w.q, c, r) == w.residue_polys[r], (c, w.q, r)
                cells += 1
    print(f"criterion 3: {cells} cells")


@criterion("4. coprime waves = Fourier-Dedekind sums, l <= 3 max(d)")
def test_criterion_4_dedekind():
    for c in ([2, 3, 5], [1, 4, 7], [1, 3, 5]):
        qp = quasipolynomial(c)
        for i, d in enumerate(c):
            if d == 1:
                continue
            others = tuple(c[:i] + c[i + 1:])
            for l in range(3 * max(c) + 1):
                lhs = sum((qp.wave(q).evaluate(l) for q in range(2, d + 1) if d % q == 0), Fraction(0))
                assert lhs == fourier_dedekind(DedekindSumSpec(-l % d, others, d)), (c, d, l)


@criterion("5. finite-difference identity suite (a)-(e)")
def test_criterion_5_findiff():
    lambdas = [Fraction(-1), Fraction(2), Fraction(3), Fraction(1, 2), Fraction(5, 3)]
    for lam in lambdas:
        for n in range(13):
            assert euler_h(n, lam) == euler_h_series(n, lam)
    for n in range(13):
        assert inv_expm1_derivative(n) == inv_expm1_derivative_chain(n)
    for c in (Fraction(2), Fraction(-1), Fraction(1, 2), Fraction(3, 5)):
        for m in range(9):
            f = Polynomial.monomial(m)
            assert todd_apply(c, f) == todd_apply_difference(c, f)
    for n in range(11):
        for m in range(21):
            assert sum(stirling2(n, k) * falling(m, k) for k in range(n + 1)) == m**n
    for k in range(11):
        for j in range(-3, k + 4):
            limit = binomial_generalized(-k, j) if j >= 0 else 0
            assert delta_of_kronecker(k, "backward", j, 0) == limit


@criterion("6. smoothing by ones = brute force; Cauchy product of binomials, l <= 30")
def test_criterion_6_cesaro():
    rng = random.Random(CORPUS_SEED)
    for _ in range(10):
        d = [rng.randint(1, 10) for _ in range(rng.randint(1, 4))]
        k = rng.randint(1, 4)
        assert add_ones_smoothing(d, k, 150).values == denumerant_bruteforce(150, d + [1] * k).values
    pairs = [(Fraction(1, 2), Fraction(1, 3)), (Fraction(-3), Fraction(5)), (Fraction(-7, 4), Fraction(2, 9)),
             (Fraction(3), Fraction(-1, 2)), (Fraction(0), Fraction(-2))]
    for a, b in pairs:
        for l in range(31):
            conv = sum(binomial_generalized(a, v) * binomial_generalized(b, l - v) for v in range(l + 1))
            assert conv == binomial_generalized(a + b, l)


@criterion("7. reciprocity sign consistent and equal to (-1)^(|d|-1), l <= 50")
def test_criterion_7_reciprocity():
    signs = []
    for c in CORPUS:
        rep = reciprocity_check(quasipolynomial(c), range(51))
        assert rep.consistent, (c, rep.violations)
        assert rep.sign == rep.expected == (-1) ** (len(c) - 1), c
        signs.append(rep.sign)
    print(f"criterion 7: {signs.count(1)} sets with eps=+1, {signs.count(-1)} with eps=-1")
