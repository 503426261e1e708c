"""Counting layer: totients, potential-solution products, new composites,
prime-count formulas and per-cycle censuses."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

import numpy as np

from .errors import BudgetError, DomainError
from .primes import Primorial, primes_up_to, seed_prime_set
from .signatures import potential_prime_mask, potential_twin_mask

DEFAULT_FACTOR_BUDGET = 510_510
DEFAULT_PRIMALITY_BUDGET = 100_000_000


def totient_of_primorial(p: Primorial) -> int:
    """Euler totient of a primorial: product of (factor - 1)."""
    out = 1
    for f in p.prime_factors:
        out *= f - 1
    return out


def potential_solutions_T(p: Primorial) -> int:
    """Potential twin / Goldbach solution count: product of (factor - 2)
    over the odd prime factors."""
    if p.value < 6:
        raise DomainError(f"need primorial >= 6, got {p.value}")
    out = 1
    for f in p.prime_factors[1:]:
        out *= f - 2
    return out


@dataclass(frozen=True)
class NewCompositeSet:
    """Composites up to a primorial whose smallest prime factor is non-core."""

    primorial: Primorial
    members: np.ndarray

    @property
    def count(self) -> int:
        return len(self.members)

    @property
    def least_member(self) -> int:
        return int(self.members[0])


def new_composites(p: Primorial, budget: int = DEFAULT_FACTOR_BUDGET) -> NewCompositeSet:
    """Exact member set of composites generated first by non-core seeds.

    A member is an odd composite > 1 that no core seed prime divides; its
    smallest factor is therefore a non-core seed prime.
    """
    if p.value > budget:
        raise BudgetError(f"primorial {p.value} exceeds factor-sieve budget {budget}")
    table = primes_up_to(p.value)
    mask = potential_prime_mask(p.value, p.prime_factors)
    z = np.arange(1, p.value + 1, dtype=np.int64)
    mask &= ~table.prime_mask()[1:]
    mask &= z > 1
    return NewCompositeSet(p, z[mask])


def prime_count_via_eq3(p: Primorial, budget: int = DEFAULT_FACTOR_BUDGET) -> int:
    """Prime count below a primorial from core count, totient and new composites."""
    n_b = new_composites(p, budget=budget).count
    return len(p.prime_factors) + totient_of_primorial(p) - 1 - n_b


def _check_eq1_seeds(n: int, seeds) -> tuple[int, ...]:
    seeds = tuple(int(s) for s in seeds)
    if len(seeds) > 20:
        raise BudgetError(f"{len(seeds)} seeds is too many for subset enumeration")
    import math

    root = math.isqrt(n)
    expected = tuple(int(q) for q in primes_up_to(max(root, 2)).ordered_primes if q <= root)
    if seeds != expected:
        raise DomainError(f"seeds must be all primes <= sqrt({n}) = {expected}, got {seeds}")
    return seeds


def seed_multiple_level_counts(n: int, seeds) -> list[int]:
    """Per-depth inclusion-exclusion sums of seed multiples up to n.

    Level k holds the sum of floor(n / product) over all k-subsets of the
    seeds; the signed alternating total counts distinct seed multiples
    (e.g. 117 - 45 + 6 - 0 = 78 for n = 100, seeds 2, 3, 5, 7).
    """
    seeds = _check_eq1_seeds(n, seeds)
    levels = []
    for k in range(1, len(seeds) + 1):
        total = 0
        for combo in combinations(seeds, k):
            prod = 1
            for s in combo:
                prod *= s
            if prod <= n:
                total += n // prod
        levels.append(total)
    return levels


def prime_count_via_eq1(n: int, seeds) -> int:
    """Legendre-style count: n - 1 + #seeds - #multiples-of-seeds.

    The inclusion-exclusion multiple count includes the seed primes
    themselves; the +#seeds term compensates.
    """
    seeds = _check_eq1_seeds(n, seeds)
    levels = seed_multiple_level_counts(n, seeds)
    multiples = sum(v if k % 2 == 0 else -v for k, v in enumerate(levels))
    return n - 1 + len(seeds) - multiples


@dataclass(frozen=True)
class CensusCounts:
    """One cycle row of a per-cycle census (Table-5 shape)."""

    cycle_index: int
    cycle_end: int
    cycle_length: int
    potential_primes: int
    potential_twins: int
    false_twins: int
    true_twins: int
    cumulative_potential_primes: int
    cumulative_potential_twins: int
    cumulative_false_twins: int
    cumulative_true_twins: int
    new_composites_cumulative: int


def _twin_true_mask(limit: int, core, prime_value_mask: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """(potential-twin mask, true-twin mask) over integers 1..limit."""
    pt = potential_twin_mask(limit, core)
    z = np.arange(1, limit + 1, dtype=np.int64)
    anchor_prime = prime_value_mask[z]
    partner_prime = np.zeros_like(anchor_prime)
    partner_prime[2:] = prime_value_mask[z[:-2]]
    tt = pt & anchor_prime & partner_prime
    return pt, tt


def cycle_census(inner: Primorial, outer: Primorial,
                 budget: int = DEFAULT_FACTOR_BUDGET) -> list[CensusCounts]:
    """Per-cycle tallies of potential primes and twins of `inner` inside `outer`.

    Potential counts use the core seeds of the outer primorial; a pair is a
    true twin only when its anchor is a potential twin and both members are
    prime, which keeps anchors whose partner is a core seed out of the count.
    """
    if outer.value % inner.value != 0:
        raise DomainError(f"{inner.value} does not divide {outer.value}")
    if outer.value > budget:
        raise BudgetError(f"outer primorial {outer.value} exceeds budget {budget}")
    table = primes_up_to(outer.value)
    value_mask = table.prime_mask()
    pp = potential_prime_mask(outer.value, outer.prime_factors)
    pt, tt = _twin_true_mask(outer.value, outer.prime_factors, value_mask)
    new_comp = pp & ~value_mask[1:] & (np.arange(1, outer.value + 1) > 1)
    rows = []
    cum = np.zeros(5, dtype=np.int64)
    n_cycles = outer.value // inner.value
    for c in range(1, n_cycles + 1):
        lo, hi = (c - 1) * inner.value, c * inner.value
        sl = slice(lo, hi)  # integers lo+1 .. hi
        in_cycle = np.array(
            [pp[sl].sum(), pt[sl].sum(), (pt[sl] & ~tt[sl]).sum(), tt[sl].sum(),
             new_comp[sl].sum()]
        )
        cum += in_cycle
        rows.append(
            CensusCounts(
                cycle_index=c,
                cycle_end=hi,
                cycle_length=inner.value,
                potential_primes=int(in_cycle[0]),
                potential_twins=int(in_cycle[1]),
                false_twins=int(in_cycle[2]),
                true_twins=int(in_cycle[3]),
                cumulative_potential_primes=int(cum[0]),
                cumulative_potential_twins=int(cum[1]),
                cumulative_false_twins=int(cum[2]),
                cumulative_true_twins=int(cum[3]),
                new_composites_cumulative=int(cum[4]),
            )
        )
    return rows


@dataclass(frozen=True)
class Figure1Window:
    """One window of the potential-prime / new-composite series."""

    index: int
    window_end: int
    window_length: int
    potential_primes: int
    cumulative_new_composites: int


def figure1_series(p: Primorial, budget: int = DEFAULT_FACTOR_BUDGET) -> list[Figure1Window]:
    """Potential primes per window of twice the max seed prime, with the
    running new-composite total; the final window keeps its true length."""
    if p.value > budget:
        raise BudgetError(f"primorial {p.value} exceeds budget {budget}")
    sps = seed_prime_set(p)
    width = 2 * sps.max_seed
    table = primes_up_to(p.value)
    pp = potential_prime_mask(p.value, p.prime_factors)
    z = np.arange(1, p.value + 1, dtype=np.int64)
    new_comp = pp & ~table.prime_mask()[1:] & (z > 1)
    rows = []
    cum = 0
    index = 0
    for lo in range(0, p.value, width):
        hi = min(lo + width, p.value)
        index += 1
        cum += int(new_comp[lo:hi].sum())
        rows.append(
            Figure1Window(
                index=index,
                window_end=hi,
                window_length=hi - lo,
                potential_primes=int(pp[lo:hi].sum()),
                cumulative_new_composites=cum,
            )
        )
    return rows


def true_twin_count(limit_primorial: Primorial, budget: int = DEFAULT_FACTOR_BUDGET) -> int:
    """True twins up to a primorial under its own core-seed conventions."""
    rows = cycle_census(limit_primorial, limit_primorial, budget=budget)
    return rows[-1].cumulative_true_twins
