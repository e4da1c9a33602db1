"""Tests for the four q-multiplicity routes and their agreement."""

import math
import random

import pytest

from qmult.altset import alt_set_cardinality, alt_set_closed, fibonacci
from qmult.intervals import IndexSet, interval_partition
from qmult.multiplicity import (
    m_classical,
    m_q_altset,
    m_q_brute,
    m_q_closed_general,
    m_q_closed_positive_root,
    m_q_closed_two_intervals,
    m_q_closed_zero,
    m_q_rank_reduction,
)
from qmult.partition import kostant_q
from qmult.poly import ONE, Q, QPolynomial
from qmult.roots import (
    RootVector,
    embed,
    highest_root,
    positive_root,
    rho_coords,
    to_root_basis,
    zero_root,
)
from qmult.weyl import CapExceededError


def _all_index_sets(rank):
    for mask in range(1, 1 << rank):
        yield IndexSet(rank, (k + 1 for k in range(rank) if mask >> k & 1))


class TestBrute:
    def test_mu_zero_rank3(self):
        res = m_q_brute(highest_root(3), zero_root(3))
        assert res.value == Q + Q ** 2 + Q ** 3
        assert res.method == "brute"
        assert res.terms_evaluated == math.factorial(4)

    def test_interval_mu_rank4(self):
        res = m_q_brute(highest_root(4), positive_root(2, 3, 4))
        assert res.value == Q ** 2
        assert res.terms_evaluated == 120

    def test_mu_equals_lam(self):
        assert m_q_brute(highest_root(3), highest_root(3)).value == ONE

    def test_arbitrary_mu_can_vanish(self):
        # mu outside the weight grid of interest still computes exactly
        res = m_q_brute(highest_root(3), RootVector(3, (2, 0, 0)))
        assert res.value.eval_at_one() >= 0

    def test_rank_mismatch_and_cap(self):
        with pytest.raises(ValueError):
            m_q_brute(highest_root(3), zero_root(4))
        with pytest.raises(CapExceededError):
            m_q_brute(highest_root(12), zero_root(12))


class TestAltsetSum:
    def test_full_interval(self):
        res = m_q_altset(IndexSet(5, range(1, 6)))
        assert res.value == ONE
        assert res.method == "altset"
        assert res.terms_evaluated == 1

    def test_two_endpoints_rank5(self):
        res = m_q_altset(IndexSet(5, [1, 5]))
        assert res.value == Q ** 3 - Q ** 2
        assert res.terms_evaluated == 5 == alt_set_cardinality(IndexSet(5, [1, 5]))

    def test_center_rank5(self):
        res = m_q_altset(IndexSet(5, [3]))
        assert res.value == Q ** 4
        assert res.terms_evaluated == 4

    def test_large_rank_stays_cheap(self):
        res = m_q_altset(IndexSet(20, [1, 20]))
        assert res.value == Q ** 18 - Q ** 17
        assert res.terms_evaluated == fibonacci(20) == 6765

    def test_empty_rejected(self):
        with pytest.raises(ValueError):
            m_q_altset(IndexSet(4, []))

    def test_terms_match_the_weyl_sum_over_the_alternation_set(self):
        # the run-length shortcut equals the honest sigma-by-sigma sum
        for r, members in ((4, [2]), (5, [1, 5]), (5, [2, 4]), (6, [2, 5]), (6, [3])):
            index_set = IndexSet(r, members)
            rho = rho_coords(r)
            shifted = embed(highest_root(r)) + rho
            mu = index_set.to_root_vector()
            total = QPolynomial()
            for w in alt_set_closed(index_set).elements:
                xi = to_root_basis(w.apply(shifted) - rho) - mu
                total = total + w.sign() * kostant_q(xi)
            assert total == m_q_altset(index_set).value


class TestClosedForms:
    def test_zero_weight(self):
        assert m_q_closed_zero(1) == Q
        assert m_q_closed_zero(4) == Q + Q ** 2 + Q ** 3 + Q ** 4
        with pytest.raises(ValueError):
            m_q_closed_zero(0)

    def test_zero_weight_matches_brute(self):
        for r in range(1, 6):
            assert m_q_brute(highest_root(r), zero_root(r)).value == m_q_closed_zero(r)

    def test_interval_weight(self):
        assert m_q_closed_positive_root(5, 1, 5) == ONE
        assert m_q_closed_positive_root(4, 2, 3) == Q ** 2
        assert m_q_closed_positive_root(6, 2, 2) == Q ** 5
        with pytest.raises(ValueError):
            m_q_closed_positive_root(4, 3, 2)

    def test_interval_weight_matches_brute(self):
        for r in range(1, 6):
            theta = highest_root(r)
            for i in range(1, r + 1):
                for j in range(i, r + 1):
                    assert m_q_brute(theta, positive_root(i, j, r)).value == \
                        m_q_closed_positive_root(r, i, j)

    def test_two_interval_weight(self):
        assert m_q_closed_two_intervals(3, 1, 1) == Q - 1
        assert m_q_closed_two_intervals(5, 2, 2) == Q ** 2 - Q
        assert m_q_closed_two_intervals(7, 2, 4) == Q ** 4 - Q ** 3
        with pytest.raises(ValueError):
            m_q_closed_two_intervals(3, 2, 1)  # i beyond rank - 2
        with pytest.raises(ValueError):
            m_q_closed_two_intervals(4, 1, 3)  # j beyond rank - i - 1

    def test_two_interval_weight_matches_brute_rank7(self):
        index_set = IndexSet(7, [1, 2, 7])  # i = 2, j = 4
        res = m_q_brute(highest_root(7), index_set.to_root_vector())
        assert res.value == m_q_closed_two_intervals(7, 2, 4) == Q ** 4 - Q ** 3

    def test_general_closed_form(self):
        assert m_q_closed_general(IndexSet(5, [2, 4])) == Q ** 3 - Q ** 2
        assert m_q_closed_general(IndexSet(6, [2, 3, 4])) == Q ** 3
        assert m_q_closed_general(IndexSet(6, [2, 4, 6])) == (Q - 1) ** 2 * Q
        assert m_q_closed_general(IndexSet(4, range(1, 5))) == ONE

    def test_general_closed_form_matches_brute(self):
        assert m_q_brute(highest_root(5), positive_root(2, 2, 5) +
                         positive_root(4, 4, 5)).value == Q ** 3 - Q ** 2
        got = m_q_brute(highest_root(6), IndexSet(6, [2, 4, 6]).to_root_vector())
        assert got.value == (Q - 1) ** 2 * Q


class TestRankReduction:
    def test_center_rank5(self):
        assert m_q_rank_reduction(IndexSet(5, [3])) == Q ** 4

    def test_three_runs_rank7(self):
        value = m_q_rank_reduction(IndexSet(7, [1, 4, 7]))
        assert value == (Q ** 2 - Q) ** 2 == QPolynomial([0, 0, 1, -2, 1])
        assert m_q_brute(highest_root(7), IndexSet(7, [1, 4, 7]).to_root_vector()).value \
            == value

    def test_full_interval_is_empty_product(self):
        assert m_q_rank_reduction(IndexSet(4, range(1, 5))) == ONE
        assert m_q_rank_reduction(IndexSet(1, [1])) == ONE

    def test_factors_recomputed_by_lower_rank_brute(self):
        for r, members in ((5, [3]), (6, [1, 4]), (6, [2, 6]), (7, [1, 4, 7]),
                           (6, [2, 4, 6]), (4, [1, 2, 3, 4])):
            index_set = IndexSet(r, members)
            assert m_q_rank_reduction(index_set, factors_by_brute=True) == \
                m_q_rank_reduction(index_set)


class TestClassical:
    def test_examples(self):
        assert m_classical(IndexSet(4, range(1, 5))) == 1
        assert m_classical(IndexSet(6, [2, 3, 4])) == 1
        assert m_classical(IndexSet(5, [2, 4])) == 0

    def test_nonzero_exactly_for_single_runs(self):
        for r in range(1, 13):
            for index_set in _all_index_sets(r):
                expected = 1 if interval_partition(index_set).n == 1 else 0
                assert m_classical(index_set) == expected

    def test_matches_brute_at_q_one(self):
        for r in range(1, 6):
            theta = highest_root(r)
            for index_set in _all_index_sets(r):
                brute = m_q_brute(theta, index_set.to_root_vector())
                assert brute.value.eval_at_one() == m_classical(index_set)


class TestFourWayAgreement:
    def test_all_index_sets_up_to_rank5(self):
        for r in range(1, 6):
            theta = highest_root(r)
            for index_set in _all_index_sets(r):
                closed = m_q_closed_general(index_set)
                assert m_q_brute(theta, index_set.to_root_vector()).value == closed
                assert m_q_altset(index_set).value == closed
                assert m_q_rank_reduction(index_set) == closed

    def test_random_index_sets_up_to_rank30(self):
        rng = random.Random(2024)
        for r in range(8, 31):
            for _ in range(3):
                while True:
                    members = [k for k in range(1, r + 1) if rng.random() < 0.4]
                    if members and alt_set_cardinality(IndexSet(r, members)) <= 30000:
                        break
                index_set = IndexSet(r, members)
                closed = m_q_closed_general(index_set)
                res = m_q_altset(index_set)
                assert res.value == closed
                assert res.terms_evaluated == alt_set_cardinality(index_set)
                assert m_q_rank_reduction(index_set) == closed
