"""Weyl alternation sets and their Fibonacci enumeration.

The alternation set A(lam, mu) collects the Weyl elements sigma whose term
in the multiplicity sum is nonzero, i.e. those with a positive partition
value at sigma(lam + rho) - rho - mu.  For lam the highest root and
mu = alpha_I, the set consists exactly of the products of simple
reflections over nonconsecutive indices drawn from the complement of I with
the endpoints 1 and rank removed.  Counting nonconsecutive subsets run by
run makes the cardinality a product of Fibonacci numbers.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import prod
from typing import Iterable, Iterator

from .intervals import IndexSet, interval_partition, maximal_runs
from .partition import table_for
from .roots import RootVector, embed
from .weyl import (
    DEFAULT_BRUTE_CAP,
    CapExceededError,
    WeylElement,
    product_of_commuting,
)

# Full (perm, sign, image) orbits are cached per (rank, lam) up to this rank;
# beyond it they are streamed to keep memory flat.
_ORBIT_CACHE_MAX_RANK = 7
_ORBIT_CACHE: dict[tuple[int, tuple[int, ...]], tuple] = {}


def fibonacci(n: int) -> int:
    """The n-th Fibonacci number with F_1 = F_2 = 1.

    >>> [fibonacci(n) for n in range(1, 9)]
    [1, 1, 2, 3, 5, 8, 13, 21]
    """
    if n < 1:
        raise ValueError("Fibonacci index must be at least 1")
    a, b = 1, 1
    for _ in range(n - 1):
        a, b = b, a + b
    return a


def nonconsecutive_subsets(lo: int, hi: int) -> Iterator[tuple[int, ...]]:
    """All subsets of {lo, ..., hi} with no two consecutive members.

    The interval may be empty (lo == hi + 1), giving just the empty subset;
    an interval of n integers yields fibonacci(n + 2) subsets.  Subsets come
    out as sorted tuples in a fixed deterministic order.
    """
    if lo > hi + 1:
        raise ValueError(f"invalid interval [{lo}, {hi}]")
    return _ncs(lo, hi)


def _ncs(lo: int, hi: int) -> Iterator[tuple[int, ...]]:
    if lo > hi:
        yield ()
        return
    yield from _ncs(lo + 1, hi)
    for rest in _ncs(lo + 2, hi):
        yield (lo,) + rest


@dataclass(frozen=True)
class AltSet:
    """An alternation set for the highest root against mu = alpha_I.

    ``fib_profile`` holds the Fibonacci indices certifying the cardinality:
    one for the stretch left of the first run of I, one per gap between
    runs, one for the stretch right of the last run.  The product of those
    Fibonacci numbers must equal the number of elements.
    """

    rank: int
    mu: IndexSet
    elements: frozenset[WeylElement]
    fib_profile: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.mu.rank != self.rank:
            raise ValueError("rank mismatch between alternation set and mu")
        expected = prod(fibonacci(k) for k in self.fib_profile)
        if len(self.elements) != expected:
            raise ValueError(
                f"{len(self.elements)} elements but Fibonacci profile gives {expected}"
            )

    @property
    def cardinality(self) -> int:
        return len(self.elements)


def fib_profile(index_set: IndexSet) -> tuple[int, ...]:
    """Fibonacci indices for the runs of I: (i_1, gaps + 1, rank - j_n + 1).

    With runs [i_1, j_1], ..., [i_n, j_n], the free indices left of i_1 form
    the interval [2, i_1 - 1], each gap contributes [j_x + 1, i_{x+1} - 1],
    and the right stretch is [j_n + 1, rank - 1]; an interval of n integers
    has fibonacci(n + 2) nonconsecutive subsets, giving these indices.
    """
    parts = interval_partition(index_set)
    runs = parts.intervals
    r = index_set.rank
    profile = [runs[0][0]]
    for (_, j_x), (i_next, _) in zip(runs, runs[1:]):
        profile.append(i_next - j_x + 1)
    profile.append(r - runs[-1][1] + 1)
    return tuple(profile)


def alt_set_cardinality(index_set: IndexSet) -> int:
    """Size of the alternation set, as the product of Fibonacci numbers."""
    return prod(fibonacci(k) for k in fib_profile(index_set))


def _free_runs(index_set: IndexSet) -> tuple[tuple[int, int], ...]:
    """Maximal runs of the complement of I with the endpoints 1, rank removed."""
    r = index_set.rank
    picked = set(index_set.members)
    free = [k for k in range(2, r) if k not in picked]
    return maximal_runs(free)


def alt_set_closed(index_set: IndexSet) -> AltSet:
    """The alternation set built from the closed-form description.

    Elements are the products of simple reflections over nonconsecutive
    index sets drawn from the complement of I minus {1, rank}; subsets are
    chosen independently within each maximal run of that free region.
    """
    r = index_set.rank
    if index_set.is_empty():
        raise ValueError("index set must be nonempty")
    per_run = [list(nonconsecutive_subsets(lo, hi)) for lo, hi in _free_runs(index_set)]
    elements = set()
    for combo in itertools.product(*per_run):
        indices = tuple(itertools.chain.from_iterable(combo))
        elements.add(product_of_commuting(indices, r))
    return AltSet(
        rank=r,
        mu=index_set,
        elements=frozenset(elements),
        fib_profile=fib_profile(index_set),
    )


def signed_root_images(
    lam: RootVector, cap: int = DEFAULT_BRUTE_CAP
) -> Iterable[tuple[tuple[int, ...], int, tuple[int, ...]]]:
    """(perm, sign, image) for every Weyl element, in lexicographic order.

    ``perm`` is the one-line tuple, ``sign`` is (-1)**length, and ``image``
    is sigma(lam + rho) - rho over the simple-root basis.  This is the inner
    sweep shared by the brute-force alternation set and multiplicity sums.
    Cached per (rank, lam) for small ranks, streamed above that.
    """
    rank = lam.rank
    if rank > cap:
        raise CapExceededError(f"rank {rank} exceeds brute-force cap {cap}")
    key = (rank, lam.coeffs)
    got = _ORBIT_CACHE.get(key)
    if got is not None:
        return got
    if rank <= _ORBIT_CACHE_MAX_RANK:
        rows = tuple(_iter_signed_root_images(lam))
        _ORBIT_CACHE[key] = rows
        return rows
    return _iter_signed_root_images(lam)


def _iter_signed_root_images(
    lam: RootVector,
) -> Iterator[tuple[tuple[int, ...], int, tuple[int, ...]]]:
    rank = lam.rank
    n = rank + 1
    rho = tuple(range(rank, -1, -1))
    shifted = tuple(a + b for a, b in zip(embed(lam).coords, rho))
    for perm in itertools.permutations(range(1, n + 1)):
        img = [0] * n
        for k in range(n):
            img[perm[k] - 1] = shifted[k]
        inv = 0
        for a in range(n):
            pa = perm[a]
            for b in range(a + 1, n):
                if pa > perm[b]:
                    inv += 1
        total = 0
        w = []
        for k in range(rank):
            total += img[k] - rho[k]
            w.append(total)
        yield perm, (-1 if inv & 1 else 1), tuple(w)


def alt_set_brute(
    lam: RootVector, mu: RootVector, cap: int = DEFAULT_BRUTE_CAP
) -> frozenset[WeylElement]:
    """The alternation set for arbitrary lam and mu, by full enumeration.

    Walks all (rank+1)! Weyl elements and keeps those whose shifted image
    has a positive partition count.  This is the ground-truth oracle the
    closed-form construction is checked against.
    """
    if lam.rank != mu.rank:
        raise ValueError("rank mismatch between lam and mu")
    table = table_for(lam.rank)
    mu_c = mu.coeffs
    kept = []
    for perm, _, image in signed_root_images(lam, cap):
        xi = tuple(a - b for a, b in zip(image, mu_c))
        if min(xi) < 0:
            continue
        if table.kostant_q_coeffs(xi).coeffs:
            kept.append(WeylElement(perm))
    return frozenset(kept)
