import json
import math
import random
from fractions import Fraction

import pytest

from denumerant.cyclotomic import (
    CycloElem,
    cyclo_field,
    cyclo_inv,
    cyclotomic_poly,
    galois_sum,
    root_power,
    totient,
)
from denumerant.exact import Polynomial


def mobius(n):
    """Reference Moebius function by trial division."""
    result, m, p = 1, n, 2
    while p * p <= m:
        if m % p == 0:
            m //= p
            if m % p == 0:
                return 0
            result = -result
        p += 1
    if m > 1:
        result = -result
    return result


def random_elem(F, rng):
    return F.element([Fraction(rng.randint(-6, 6), rng.randint(1, 4)) for _ in range(F.degree)])


@pytest.mark.parametrize("q,coeffs", [(1, [-1, 1]), (4, [1, 0, 1]), (6, [1, -1, 1]), (3, [1, 1, 1]), (12, [1, 0, -1, 0, 1])])
def test_cyclotomic_poly_examples(q, coeffs):
    assert cyclotomic_poly(q) == Polynomial(coeffs)


def test_divisor_product_is_x_q_minus_1():
    for q in range(1, 61):
        prod = Polynomial.constant(1)
        for d in range(1, q + 1):
            if q % d == 0:
                prod = prod * cyclotomic_poly(d)
        assert prod == Polynomial.monomial(q) - 1
        phi = cyclotomic_poly(q)
        assert phi.coeffs[-1] == 1
        assert phi.degree == totient(q)
        assert all(c.denominator == 1 for c in phi.coeffs)


def test_root_power_examples():
    F4, F3, F5 = cyclo_field(4), cyclo_field(3), cyclo_field(5)
    assert root_power(F4, 1).coeffs == (0, 1)
    assert root_power(F3, 2).coeffs == (-1, -1)
    assert root_power(F5, 5) == 1
    assert root_power(F5, -1) == root_power(F5, 4)


def test_inverse_examples():
    F3 = cyclo_field(3)
    z = F3.gen
    inv = cyclo_inv(1 - z)
    assert inv == (2 + z) * Fraction(1, 3)
    assert (1 - z) * (2 + z) == 3
    assert cyclo_inv(cyclo_field(7)(2)) == Fraction(1, 2)
    F2 = cyclo_field(2)
    assert 1 - F2.gen == 2
    assert cyclo_inv(1 - F2.gen) == Fraction(1, 2)
    with pytest.raises(ZeroDivisionError, match="division by zero in cyclotomic field"):
        cyclo_inv(F3.zero)


def test_inverse_random():
    rng = random.Random(2024)
    for q in range(1, 25):
        F = cyclo_field(q)
        for _ in range(8):
            a = random_elem(F, rng)
            if not a:
                continue
            assert a * cyclo_inv(a) == 1
            assert a / a == 1


def test_galois_sum_examples():
    assert galois_sum(cyclo_field(3).gen) == -1
    assert galois_sum(cyclo_field(4).gen) == 0
    assert galois_sum(cyclo_field(5).one) == 4


def test_galois_sum_of_generator_is_mobius():
    for q in range(1, 31):
        assert galois_sum(cyclo_field(q).gen) == mobius(q)


def test_automorphisms_are_ring_homomorphisms():
    rng = random.Random(7)
    for q in (5, 7, 8, 9, 12, 15):
        F = cyclo_field(q)
        for _ in range(5):
            a, b = random_elem(F, rng), random_elem(F, rng)
            assert galois_sum(a + b) == galois_sum(a) + galois_sum(b)
            for p in F.units:
                assert (a * b).conjugate(p) == a.conjugate(p) * b.conjugate(p)
                assert (a + b).conjugate(p) == a.conjugate(p) + b.conjugate(p)
                assert F.gen.conjugate(p) == F.root_power(p)


def test_rationality_flag():
    F = cyclo_field(6)
    assert F(Fraction(3, 2)).is_rational()
    assert not F.gen.is_rational()
    # zeta + zeta^-1 = 1 for q = 6
    assert (F.gen + F.root_power(-1)) == 1


def test_numeric_embedding_agrees():
    # diagnostics only: compare with complex floating values
    import cmath

    q = 9
    F = cyclo_field(q)
    w = cmath.exp(2j * math.pi / q)
    a = (1 + 2 * F.gen) / (3 - F.root_power(4))
    val = sum(float(c) * w**j for j, c in enumerate(a.coeffs))
    assert abs(val - (1 + 2 * w) / (3 - w**4)) < 1e-12


def test_json_round_trip():
    F = cyclo_field(5)
    a = (F.gen - Fraction(1, 3)) / 7
    text = a.to_json()
    data = json.loads(text)
    assert data["q"] == 5
    assert data["coeffs"] == [str(c) for c in a.coeffs]
    assert CycloElem.from_json(text) == a


def test_non_primitive_powers_are_valid():
    F = cyclo_field(6)
    z3 = F.root_power(2)  # primitive cube root embedded in Q(zeta_6)
    assert z3**3 == 1
    assert 1 + z3 + z3 * z3 == 0
