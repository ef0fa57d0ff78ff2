import random
from fractions import Fraction

import pytest

from twistkit.cyclo import (
    Cyclotomic,
    CyclotomicError,
    OrderBoundError,
    cyclotomic_polynomial,
    euler_phi,
    field_of_values,
    rational,
    zeta,
)


def test_euler_phi_small():
    assert [euler_phi(n) for n in range(1, 13)] == [1, 1, 2, 2, 4, 2, 6, 4, 6, 4, 10, 4]


def test_cyclotomic_polynomials():
    # low -> high coefficient vectors
    assert [int(c) for c in cyclotomic_polynomial(1)] == [-1, 1]
    assert [int(c) for c in cyclotomic_polynomial(2)] == [1, 1]
    assert [int(c) for c in cyclotomic_polynomial(3)] == [1, 1, 1]
    assert [int(c) for c in cyclotomic_polynomial(4)] == [1, 0, 1]
    assert [int(c) for c in cyclotomic_polynomial(6)] == [1, -1, 1]
    assert [int(c) for c in cyclotomic_polynomial(8)] == [1, 0, 0, 0, 1]
    assert [int(c) for c in cyclotomic_polynomial(12)] == [1, 0, -1, 0, 1]


def test_zeta4_squares_to_minus_one():
    assert zeta(4) * zeta(4) == rational(-1)


def test_zeta3_plus_its_square():
    assert zeta(3) + zeta(3, 2) == rational(-1)


def test_zeta8_product():
    # (1 + z8)(1 + z8^3) = z8 + z8^3 after reducing z8^4 = -1
    lhs = (rational(1) + zeta(8)) * (rational(1) + zeta(8, 3))
    assert lhs == zeta(8) + zeta(8, 3)


def test_rational_arithmetic_embeds():
    a = rational(Fraction(3, 4))
    b = rational(Fraction(-1, 2))
    assert (a + b).as_rational() == Fraction(1, 4)
    assert (a * b).as_rational() == Fraction(-3, 8)
    assert (a / b).as_rational() == Fraction(-3, 2)


def test_division_by_zero_raises():
    with pytest.raises(CyclotomicError):
        zeta(5) / rational(0)


def test_order_bound_enforced():
    with pytest.raises(OrderBoundError):
        zeta(20_001)


def test_conjugation():
    assert zeta(3).conjugate() == zeta(3, 2)
    assert rational(-1).conjugate() == rational(-1)
    real = zeta(8) + zeta(8, 7)
    assert real.conjugate() == real
    assert real.is_real()


def test_mixed_order_equality():
    # zeta_6^3 = -1, zeta_4^2 = -1: same value, different declared orders
    assert zeta(6, 3) == rational(-1)
    assert zeta(4, 2) == zeta(6, 3)
    assert zeta(6, 2) == zeta(3)


def test_harmonize_round_trip():
    for n, m in [(3, 12), (4, 8), (1, 7), (6, 12)]:
        v = zeta(n) + rational(Fraction(1, 3))
        up = v.raise_order(m)
        assert up.try_lower_order(n) == v


def _random_value(rng, order):
    coeffs = [Fraction(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(euler_phi(order))]
    return Cyclotomic(order, coeffs)


def test_field_axioms_random():
    rng = random.Random(7)
    for _ in range(60):
        n = rng.choice([1, 2, 3, 4, 5, 6, 8, 12])
        a = _random_value(rng, n)
        b = _random_value(rng, rng.choice([1, 2, 3, 4, 6, n]))
        assert (a + b) - b == a
        if not b.is_zero():
            assert (a * b) / b == a
        assert a.conjugate().conjugate() == a
        assert (a * b).conjugate() == a.conjugate() * b.conjugate()
        norm = a * a.conjugate()
        assert norm.conjugate() == norm


def test_powers():
    assert zeta(5) ** 5 == rational(1)
    assert zeta(8) ** -1 == zeta(8, 7)
    assert (zeta(3) + 1) ** 2 == zeta(3) * zeta(3) + 2 * zeta(3) + 1


def test_serialization_round_trip():
    v = zeta(12, 5) * Fraction(7, 3) - Fraction(1, 2)
    d = v.to_dict()
    assert d["n"] == 12
    assert all(0 <= exp < euler_phi(12) for _, _, exp in d["terms"])
    assert Cyclotomic.from_dict(d) == v


def test_galois_action():
    v = zeta(5)
    assert v.galois(2) == zeta(5, 2)
    with pytest.raises(CyclotomicError):
        zeta(6).galois(2)


def test_field_of_values_rational():
    fv = field_of_values([rational(1), rational(-1), rational(0)])
    assert fv.in_gaussian_field
    # every Galois exponent fixes rational values
    assert len(fv.stabilizer) == euler_phi(fv.order)


def test_field_of_values_gaussian():
    fv = field_of_values([zeta(4)])
    assert fv.in_gaussian_field
    fv2 = field_of_values([zeta(3)])
    assert not fv2.in_gaussian_field
    fv3 = field_of_values([zeta(3), zeta(4)])
    assert not fv3.in_gaussian_field
    # -1 + 2i written at order 12 still recognized as Gaussian
    v = (rational(-1) + 2 * zeta(4)).raise_order(12)
    assert field_of_values([v]).in_gaussian_field


def test_try_lower_order_failure():
    assert zeta(12).try_lower_order(4) is None
    assert zeta(12, 3).try_lower_order(4) == zeta(4)
