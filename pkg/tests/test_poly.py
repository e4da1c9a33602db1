"""Tests for the exact q-polynomial arithmetic."""

import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

from qmult.poly import ONE, Q, ZERO, QPolynomial

coeff_lists = st.lists(st.integers(min_value=-100, max_value=100), max_size=9)
polys = coeff_lists.map(QPolynomial)


class TestCanonicalForm:
    def test_trailing_zeros_trimmed(self):
        assert QPolynomial([1, 2, 0, 0]).coeffs == (1, 2)

    def test_zero_is_empty_tuple(self):
        assert QPolynomial([0, 0, 0]).coeffs == ()
        assert QPolynomial([0, 0, 0]) == ZERO
        assert not ZERO

    def test_degree(self):
        assert ZERO.degree == -1
        assert ONE.degree == 0
        assert Q.degree == 1
        assert (Q ** 5).degree == 5

    @given(coeff_lists)
    def test_normalization_idempotent(self, cs):
        p = QPolynomial(cs)
        assert QPolynomial(p.coeffs).coeffs == p.coeffs
        assert p.coeffs == () or p.coeffs[-1] != 0


class TestArithmetic:
    def test_add(self):
        assert Q + Q == QPolynomial([0, 2])
        assert (Q ** 2 - Q) + Q == Q ** 2
        assert ZERO + (Q + 1) == Q + 1

    def test_sub_cancels_leading_terms(self):
        assert Q ** 3 - Q ** 3 == ZERO
        assert (Q ** 3 + Q) - Q ** 3 == Q

    def test_mul(self):
        assert Q * (Q + 1) ** 2 == QPolynomial([0, 1, 2, 1])
        assert ZERO * (Q + 1) == ZERO
        assert 2 * Q ** 2 == QPolynomial([0, 0, 2])

    def test_pow(self):
        assert (Q - 1) ** 0 == ONE
        assert (Q - 1) ** 2 == QPolynomial([1, -2, 1])
        with pytest.raises(ValueError):
            Q ** -1

    def test_int_coercion(self):
        assert 1 + Q == Q + 1
        assert 1 - Q == QPolynomial([1, -1])
        with pytest.raises(TypeError):
            Q + 1.5

    def test_shift(self):
        assert (Q + 1).shift(2) == Q ** 3 + Q ** 2
        assert ZERO.shift(3) == ZERO
        with pytest.raises(ValueError):
            Q.shift(-1)

    def test_eval_at_one(self):
        assert ZERO.eval_at_one() == 0
        assert (Q * (Q + 1) ** 2).eval_at_one() == 4
        assert ((Q - 1) ** 3).eval_at_one() == 0

    @given(polys, polys, polys)
    def test_ring_axioms(self, a, b, c):
        assert a + b == b + a
        assert (a + b) + c == a + (b + c)
        assert a * b == b * a
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c

    @given(polys, polys)
    def test_eval_at_one_is_a_homomorphism(self, a, b):
        assert (a + b).eval_at_one() == a.eval_at_one() + b.eval_at_one()
        assert (a * b).eval_at_one() == a.eval_at_one() * b.eval_at_one()

    @given(polys)
    def test_additive_inverse(self, a):
        assert a - a == ZERO
        assert -(-a) == a

    @given(polys, st.integers(min_value=0, max_value=6))
    def test_pow_is_repeated_mul(self, a, e):
        expected = ONE
        for _ in range(e):
            expected = expected * a
        assert a ** e == expected


class TestFormats:
    def test_text_descending(self):
        assert str(Q ** 3 - Q ** 2) == "q^3 - q^2"
        assert str(Q * (Q + 1) ** 2) == "q^3 + 2q^2 + q"
        assert str(ZERO) == "0"
        assert str(ONE) == "1"
        assert str(Q) == "q"
        assert str(QPolynomial([1, -1])) == "-q + 1"

    def test_latex_descending(self):
        assert (Q ** 3 - Q ** 2).latex() == "q^{3}-q^{2}"
        assert (Q + 1).latex() == "q+1"
        assert ZERO.latex() == "0"
        assert QPolynomial.monomial(2, -1).latex() == "-q^{2}"
        assert (Q ** 4 + 3 * Q ** 3 + 3 * Q ** 2 + Q).latex() == "q^{4}+3q^{3}+3q^{2}+q"

    def test_json_round_trip(self):
        p = Q ** 4 - 2 * Q ** 2 + 3
        data = json.loads(json.dumps(p.to_json_dict()))
        assert QPolynomial.from_json_dict(data) == p
        assert p.to_json_dict() == {"coeffs": [3, 0, -2, 0, 1]}
        assert ZERO.to_json_dict() == {"coeffs": []}

    def test_monomial(self):
        assert QPolynomial.monomial(0) == ONE
        assert QPolynomial.monomial(3) == Q ** 3
        assert QPolynomial.monomial(2, -4) == QPolynomial([0, 0, -4])
        with pytest.raises(ValueError):
            QPolynomial.monomial(-1)
