from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from halab.fields import (QQ, CyclotomicField, Cyc, cyclotomic_polynomial,
                          parse_field, field_to_json, to_complex, embed_root,
                          DivisionByZero)


rationals = st.fractions(min_value=-50, max_value=50, max_denominator=20)


class TestRationals:
    def test_constants(self):
        assert QQ.one == Fraction(1)
        assert QQ.zero == Fraction(0)
        assert QQ.from_int(-7) == Fraction(-7)

    def test_parse_format_round_trip(self):
        for text in ["0", "5", "-3/7", "22/7"]:
            assert QQ.format(QQ.parse(text)) == text

    @given(rationals, rationals)
    def test_field_ops(self, a, b):
        assert a + b == b + a
        assert a * b == b * a
        if b:
            assert (a / b) * b == a


class TestCyclotomic:
    def test_singleton(self):
        assert CyclotomicField(4) is CyclotomicField(4)

    def test_primitive_root_relations(self):
        F = CyclotomicField(4)
        i = F.zeta(1)
        assert i * i == -F.one
        assert i * i * i * i == F.one
        F3 = CyclotomicField(3)
        w = F3.zeta(1)
        assert w * w + w + F3.one == F3.zero

    def test_inverse(self):
        F = CyclotomicField(5)
        x = F.zeta(1) + F.one
        assert x * x.inverse() == F.one
        with pytest.raises(DivisionByZero):
            F.zero.inverse()

    def test_zeta_powers_wrap(self):
        F = CyclotomicField(6)
        assert F.zeta(6) == F.one
        assert F.zeta(7) == F.zeta(1)

    def test_parse_format_round_trip(self):
        F = CyclotomicField(4)
        for text in ["1", "z", "-1*z", "1/2 + 3*z"]:
            assert F.parse(F.format(F.parse(text))) == F.parse(text)

    def test_to_complex(self):
        F = CyclotomicField(8)
        z = to_complex(F.zeta(1))
        assert abs(z ** 8 - 1) < 1e-12
        assert abs(z ** 4 + 1) < 1e-12

    def test_embed_root(self):
        F = CyclotomicField(12)
        # the cube root of unity inside the 12th cyclotomic field
        w = embed_root(12, 4)
        assert w * w * w == F.one
        assert w != F.one

    @given(st.integers(0, 11), st.integers(0, 11))
    def test_zeta_multiplicativity(self, a, b):
        F = CyclotomicField(12)
        assert F.zeta(a) * F.zeta(b) == F.zeta(a + b)


def test_cyclotomic_polynomial_degrees():
    # degree = Euler phi
    expected = {1: 1, 2: 1, 3: 2, 4: 2, 5: 4, 6: 2, 8: 4, 12: 4}
    for n, phi in expected.items():
        assert len(cyclotomic_polynomial(n)) - 1 == phi


def test_cyclotomic_polynomial_values():
    assert cyclotomic_polynomial(4) == [Fraction(1), Fraction(0), Fraction(1)]
    assert cyclotomic_polynomial(6) == [Fraction(1), Fraction(-1), Fraction(1)]


def test_field_descriptor_round_trip():
    assert parse_field(field_to_json(QQ)) is QQ
    F = CyclotomicField(5)
    assert parse_field(field_to_json(F)) is F


def test_random_is_seeded():
    import random
    a = [CyclotomicField(3).random(random.Random(5)) for _ in range(4)]
    b = [CyclotomicField(3).random(random.Random(5)) for _ in range(4)]
    assert a == b
