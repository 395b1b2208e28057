import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from halab.fields import QQ, CyclotomicField
from halab.torus import (QTElement, qt_monomial, qt_one, qt_mul, decompose,
                         recompose, L_operator, chi_product, omega_matrix,
                         random_qt, fiber_matrices, best_fiber_variant,
                         torus_coaction_check, torus_galois_matrix,
                         ParameterMismatch, NotInA, SizeLimit)


class TestRelations:
    def test_defining_relation(self):
        for n in (2, 3, 4):
            U = qt_monomial(n, 1, 1, 0)
            V = qt_monomial(n, 1, 0, 1)
            # UV = q VU, with UV the normal-order generator
            assert qt_mul(U, V).support == {(1, 1): U.field.one}
            assert qt_mul(U, V) == qt_mul(V, U).scale(U.q)

    def test_uv_squared(self):
        U = qt_monomial(3, 1, 1, 0)
        V = qt_monomial(3, 1, 0, 1)
        UV = qt_mul(U, V)
        qinv = qt_one(3, 1).field.zeta(-1)
        assert qt_mul(UV, UV).support == {(2, 2): qinv}

    def test_exponents_accumulate(self):
        # Laurent exponents are not truncated; only the phase is periodic
        n = 3
        U = qt_monomial(n, 1, 1, 0)
        x = U
        for _ in range(n - 1):
            x = qt_mul(x, U)
        assert x.support == {(3, 0): U.field.one}

    def test_parameter_mismatch(self):
        with pytest.raises(ParameterMismatch):
            qt_mul(qt_monomial(2, 1, 1, 0), qt_monomial(3, 1, 1, 0))

    @given(st.integers(0, 3), st.integers(0, 3), st.integers(0, 3),
           st.integers(0, 3))
    @settings(max_examples=40)
    def test_monomial_product_rule(self, a, b, c, d):
        n = 4
        f = qt_monomial(n, 1, a, b)
        g = qt_monomial(n, 1, c, d)
        h = qt_mul(f, g)
        key = (a + c, b + d)
        assert list(h.support) == [key]
        # phase is q^{-bc}
        assert h.support[key] == f.field.zeta(-b * c)


class TestDecomposition:
    def test_round_trip(self):
        rng = random.Random(11)
        for n in (2, 3, 4):
            for _ in range(20):
                f = random_qt(n, 1, rng)
                assert recompose(decompose(f)) == f

    def test_chi_oracle(self):
        rng = random.Random(13)
        for n in (2, 3, 4):
            for _ in range(50):
                f = random_qt(n, 1, rng)
                g = random_qt(n, 1, rng)
                lhs = recompose(chi_product(decompose(f), decompose(g)))
                assert lhs == qt_mul(f, g)

    def test_components_live_in_base(self):
        f = random_qt(3, 1, random.Random(3))
        for comp in decompose(f).components:
            for (a, b) in comp.support:
                assert b % 3 == 0

    def test_l_operator_rejects_outsiders(self):
        with pytest.raises(NotInA):
            L_operator(qt_monomial(3, 1, 0, 1))

    def test_l_operator_twists(self):
        # L(U^a) multiplies by q^{-a}
        n = 3
        a = qt_monomial(n, 1, 2, 0)
        out = L_operator(a)
        F = a.field
        assert out.support == {(2, 0): F.zeta(-2 % n)}


class TestOmega:
    def test_displayed_matrices(self):
        assert omega_matrix(3, 0) == [[0, None, None],
                                      [None, None, 1],
                                      [None, 2, None]]
        assert omega_matrix(3, 1) == [[None, 0, None],
                                      [1, None, None],
                                      [None, None, 2]]
        assert omega_matrix(3, 2) == [[None, None, 0],
                                      [None, 1, None],
                                      [2, None, None]]

    def test_rule(self):
        for n in (2, 4):
            for k in range(n):
                M = omega_matrix(n, k)
                for i in range(n):
                    for j in range(n):
                        if (i + j) % n == k:
                            assert M[i][j] == i
                        else:
                            assert M[i][j] is None


class TestFibers:
    def test_some_variant_is_exact(self):
        for (n, m) in ((1, 2), (1, 3), (2, 3)):
            rep = fiber_matrices(n, m, 0.3, 0.7)
            name, worst = best_fiber_variant(rep)
            assert worst < 1e-10, (n, m)
            assert name.startswith("uniform")

    def test_printed_shift_discrepancy_reported(self):
        # the as-printed V fails V^m = e^{2 pi i y} unless m divides n
        rep = fiber_matrices(1, 3, 0.0, 0.0)
        assert rep["variants"]["printed-sub"]["V_power"] > 0.5
        assert rep["variants"]["uniform-sub"]["V_power"] < 1e-10


def test_coaction_battery():
    for n in (2, 3):
        out = torus_coaction_check(n, 4)
        assert out["action_multiplicative"]
        assert out["invariance_exact"]
        assert out["coassociative"]


class TestGaloisDeterminant:
    def test_frozen_units(self):
        g = torus_galois_matrix(1)
        assert g["det"] == {0: Fraction(1)} and g["unit"]
        g = torus_galois_matrix(2)
        assert g["det"] == {1: Fraction(-4)} and g["unit"]
        g = torus_galois_matrix(3)
        F = CyclotomicField(3)
        assert g["det"] == {3: F.from_int(81) + F.from_int(162) * F.zeta(1)}
        assert g["unit"]
        g = torus_galois_matrix(4)
        assert g["unit"]

    def test_size_limit(self):
        with pytest.raises(SizeLimit):
            torus_galois_matrix(5)
