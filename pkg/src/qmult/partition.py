"""Kostant's partition function for A_rank and its q-analog.

The q-analog of the partition function sends a vector xi (over the
simple-root basis) to the polynomial sum_i c_i q^i where c_i counts the
multisets of exactly i positive roots with sum xi.  Setting q = 1 gives the
plain partition count.  By convention the value is 1 at xi = 0 and 0
whenever any coefficient of xi is negative.

Two independent evaluators are provided.  ``kostant_q`` runs a memoized
recursion over the positive roots in lexicographic (i, j) order, branching
on how many copies of the current root are used.  ``kostant_q_oracle``
enumerates the contributing multisets one root at a time with no shared
state, and exists purely to cross-check the recursion on small inputs.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Sequence

from .intervals import IndexSet, interval_partition
from .poly import ONE, ZERO, Q, QPolynomial
from .roots import RootVector, positive_root
from .weyl import CapExceededError

# The oracle enumerates every multiset explicitly, so it refuses inputs whose
# absolute coefficients sum beyond this.
DEFAULT_ORACLE_CAP = 20


def _root_supports(rank: int) -> tuple[tuple[int, int], ...]:
    """Inclusive 0-based support (start, end) of each positive root, in
    lexicographic order: alpha_{i,j} covers positions i-1 .. j-1."""
    return tuple((i, j) for i in range(rank) for j in range(i, rank))


class PartitionTable:
    """A per-rank memo table for the q-analog partition function.

    Intermediate results are memoized on (remaining vector, root index), so
    repeated queries at the same rank share work.  The memo only grows; a
    table is safe to reuse across any number of queries, and independent
    tables always agree because every entry is a pure function of its key.
    """

    def __init__(self, rank: int):
        if rank < 1:
            raise ValueError("rank must be at least 1")
        self.rank = rank
        self._supports = _root_supports(rank)
        self._memo: dict[tuple[tuple[int, ...], int], QPolynomial] = {}

    def kostant_q(self, xi: RootVector) -> QPolynomial:
        """The q-analog partition function of xi."""
        if xi.rank != self.rank:
            raise ValueError("rank mismatch")
        return self.kostant_q_coeffs(xi.coeffs)

    def kostant(self, xi: RootVector) -> int:
        """The plain partition count, i.e. the q-analog at q = 1."""
        return self.kostant_q(xi).eval_at_one()

    def kostant_q_coeffs(self, coeffs: Sequence[int]) -> QPolynomial:
        """Tuple-based entry point used by the hot loops of the Weyl sums."""
        cs = tuple(coeffs)
        if len(cs) != self.rank:
            raise ValueError(f"expected {self.rank} coefficients, got {len(cs)}")
        if any(c < 0 for c in cs):
            return ZERO
        return self._solve(cs, 0)

    def _solve(self, rem: tuple[int, ...], idx: int) -> QPolynomial:
        # rem is componentwise nonnegative here.
        rank = self.rank
        p = 0
        while p < rank and rem[p] == 0:
            p += 1
        if p == rank:
            return ONE
        supports = self._supports
        n = len(supports)
        # Roots starting before p are unusable (their first slot is already
        # zero); if none starts exactly at p, slot p can never be cleared.
        while idx < n and supports[idx][0] < p:
            idx += 1
        if idx == n or supports[idx][0] > p:
            return ZERO
        key = (rem, idx)
        got = self._memo.get(key)
        if got is not None:
            return got
        a, b = supports[idx]
        total = self._solve(rem, idx + 1)
        cur = list(rem)
        copies = 0
        while all(cur[t] > 0 for t in range(a, b + 1)):
            for t in range(a, b + 1):
                cur[t] -= 1
            copies += 1
            sub = self._solve(tuple(cur), idx + 1)
            if sub.coeffs:
                total = total + sub.shift(copies)
        self._memo[key] = total
        return total


@lru_cache(maxsize=None)
def table_for(rank: int) -> PartitionTable:
    """The shared per-rank table used by the module-level functions."""
    return PartitionTable(rank)


def kostant_q(xi: RootVector) -> QPolynomial:
    """The q-analog partition function, via the shared memoized table."""
    return table_for(xi.rank).kostant_q(xi)


def kostant(xi: RootVector) -> int:
    """The number of ways to write xi as a sum of positive roots."""
    return table_for(xi.rank).kostant(xi)


def kostant_q_oracle(xi: RootVector, cap: int = DEFAULT_ORACLE_CAP) -> QPolynomial:
    """Exhaustive cross-check: enumerate the multisets one root at a time.

    Each multiset is generated exactly once, as its sorted-by-(i, j) word;
    at every step the chosen root must start at the first nonzero slot of
    the remainder, which is forced for the sorted word.  No memoization and
    no polynomial arithmetic: counts are accumulated by multiset size.
    Raises CapExceededError when sum(|coeffs|) exceeds the cap.
    """
    cs = xi.coeffs
    weight = sum(abs(c) for c in cs)
    if weight > cap:
        raise CapExceededError(f"coefficient weight {weight} exceeds oracle cap {cap}")
    if any(c < 0 for c in cs):
        return ZERO
    rank = xi.rank
    supports = _root_supports(rank)
    n = len(supports)
    counts = [0] * (weight + 1)

    def rec(rem: list[int], min_idx: int, used: int) -> None:
        p = 0
        while p < rank and rem[p] == 0:
            p += 1
        if p == rank:
            counts[used] += 1
            return
        t = min_idx
        while t < n and supports[t][0] < p:
            t += 1
        while t < n and supports[t][0] == p:
            a, b = supports[t]
            if all(rem[s] > 0 for s in range(a, b + 1)):
                for s in range(a, b + 1):
                    rem[s] -= 1
                rec(rem, t, used + 1)
                for s in range(a, b + 1):
                    rem[s] += 1
            t += 1

    rec(list(cs), 0, 0)
    return QPolynomial(counts)


@lru_cache(maxsize=None)
def _interval_poly(width: int) -> QPolynomial:
    return Q * (ONE + Q) ** width


def kostant_q_interval_closed_form(i: int, j: int, rank: int) -> QPolynomial:
    """The closed form q(q+1)^{j-i} for the q-analog at alpha_i + ... + alpha_j."""
    if not 1 <= i <= j <= rank:
        raise ValueError(f"need 1 <= i <= j <= rank, got ({i}, {j}, {rank})")
    return _interval_poly(j - i)


def factorize_over_intervals(index_set: IndexSet) -> QPolynomial:
    """The q-analog at alpha_I computed run by run.

    The value at an indicator vector factors over the maximal runs of I,
    each factor being the q-analog of one run's interval root.  Matching
    this product against the single direct evaluation is one of the core
    cross-checks.
    """
    parts = interval_partition(index_set)
    table = table_for(index_set.rank)
    out = ONE
    for lo, hi in parts:
        out = out * table.kostant_q(positive_root(lo, hi, index_set.rank))
    return out
