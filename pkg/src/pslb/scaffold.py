"""Primorial scaffold arithmetic: product factors, per-cycle averages and
the two- and three-primorial scaffold tables."""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError
from .primes import Primorial, is_prime, nth_primorial, primes_up_to

PRODUCT_FACTOR_PRIME_LIMIT = 2_800_000  # covers 2,724,079

# Candidate count on an explicit factor list (the scaffold's modulus may
# exceed 64 bits, so its T is never needed as an integer here).


def _T(factors) -> int:
    out = 1
    for f in factors[1:]:
        out *= f - 2
    return out


def _primes_in_range(lo: int, hi: int) -> list[int]:
    table = primes_up_to(max(hi, 2))
    arr = table.ordered_primes
    return [int(q) for q in arr[(arr >= lo) & (arr <= hi)]]


def product_factor(from_prime: int, to_prime: int) -> float:
    """Product of (q - 2)/q over primes q in [from_prime, to_prime].

    Accumulated as a compensated log sum so six printed decimals are stable.
    """
    if not is_prime(from_prime) or not is_prime(to_prime):
        raise DomainError(f"bounds must be prime, got ({from_prime}, {to_prime})")
    if from_prime > to_prime:
        raise DomainError(f"need from_prime <= to_prime, got ({from_prime}, {to_prime})")
    qs = _primes_in_range(from_prime, to_prime)
    return math.exp(math.fsum(math.log1p(-2.0 / q) for q in qs))


def product_factor_fraction(from_prime: int, to_prime: int) -> Fraction:
    """Exact rational product factor; for audit use on short prime ranges."""
    out = Fraction(1)
    for q in _primes_in_range(from_prime, to_prime):
        out *= Fraction(q - 2, q)
    return out


def avg_solutions_in_cycle(T_M: int, pf: float) -> float:
    """Average potential solutions per cycle: exact real product T * pf."""
    if T_M < 1:
        raise DomainError(f"need T >= 1, got {T_M}")
    if not 0.0 < pf <= 1.0:
        raise DomainError(f"product factor must lie in (0, 1], got {pf}")
    return T_M * pf


def round_display(x: float) -> int:
    """Round-half-up to the nearest integer, the tables' display convention."""
    return math.floor(x + 0.5)


def _prev_prime(n: int) -> int:
    table = primes_up_to(max(n, 2))
    return table.largest_prime_at_most(n)


def _next_prime(n: int) -> int:
    table = primes_up_to(2 * n + 10)
    return table.smallest_prime_above(n)


@dataclass(frozen=True)
class ScaffoldRow:
    """One row of a primorial scaffold table.

    C (when present) is carried by its largest factor only; its value can
    exceed 64 bits and is never materialized.
    """

    index: int
    A: Primorial
    B_largest_factor: int
    C_largest_factor: int | None
    P_a: int
    P_b: int
    P_s: int | None
    T_A: int
    product_factor: float
    avg_T_A: float
    avg_T_B: float | None
    smallest_non_core: int | None
    smallest_non_core_squared: int | None

    @property
    def avg_T_A_display(self) -> int:
        return round_display(self.avg_T_A)

    @property
    def avg_T_B_display(self) -> int | None:
        return None if self.avg_T_B is None else round_display(self.avg_T_B)


def _base_primorial(row: int) -> Primorial:
    # Row 1 starts at 210, the smallest primorial > 30.
    return nth_primorial(row + 3)


def build_table17(rows: int = 9) -> list[ScaffoldRow]:
    """Two-primorial scaffold: N's largest factor is the largest prime < sqrt(M)."""
    if not 1 <= rows <= 9:
        raise DomainError(f"table 17 supports 1..9 rows, got {rows}")
    out = []
    for k in range(1, rows + 1):
        M = _base_primorial(k)
        P_m = M.largest_factor
        P_s = _next_prime(P_m)
        P_z = _prev_prime(math.isqrt(M.value))
        t = _T(M.prime_factors)
        pf = product_factor(P_s, P_z)
        out.append(
            ScaffoldRow(
                index=k, A=M, B_largest_factor=P_z, C_largest_factor=None,
                P_a=P_m, P_b=P_z, P_s=P_s, T_A=t, product_factor=pf,
                avg_T_A=avg_solutions_in_cycle(t, pf), avg_T_B=None,
                smallest_non_core=None, smallest_non_core_squared=None,
            )
        )
    return out


@dataclass(frozen=True)
class RatioRow:
    """One row of the successive-average-ratio table."""

    index: int
    M1: Primorial
    M2: Primorial
    avg_1: float
    avg_2: float
    ratio: float
    T_ratio: int
    pf_ratio: float


def build_table18(rows: int = 9) -> list[RatioRow]:
    """Ratios of successive per-cycle averages, computed on unrounded values."""
    if not 2 <= rows <= 9:
        raise DomainError(f"table 18 supports 2..9 rows, got {rows}")
    base = build_table17(rows)
    out = []
    for prev, cur in zip(base, base[1:]):
        out.append(
            RatioRow(
                index=cur.index,
                M1=prev.A,
                M2=cur.A,
                avg_1=prev.avg_T_A,
                avg_2=cur.avg_T_A,
                ratio=cur.avg_T_A / prev.avg_T_A,
                T_ratio=cur.T_A // prev.T_A,
                pf_ratio=cur.product_factor / prev.product_factor,
            )
        )
    return out


def build_table19_20(rows: int = 8) -> list[ScaffoldRow]:
    """Three-primorial scaffold A-B-C with C's factor bound by sqrt(B)."""
    if not 1 <= rows <= 8:
        raise DomainError(f"tables 19/20 support 1..8 rows, got {rows}")
    out = []
    for k in range(1, rows + 1):
        A = _base_primorial(k)
        B = nth_primorial(A.k + 1)
        P_a, P_b = A.largest_factor, B.largest_factor
        P_s = _next_prime(P_b)
        P_c = _prev_prime(math.isqrt(B.value))
        t = _T(A.prime_factors)
        pf = product_factor(P_b, P_c)
        avg_a = avg_solutions_in_cycle(t, pf)
        P_z = _next_prime(P_c)
        out.append(
            ScaffoldRow(
                index=k, A=A, B_largest_factor=P_b, C_largest_factor=P_c,
                P_a=P_a, P_b=P_b, P_s=P_s, T_A=t, product_factor=pf,
                avg_T_A=avg_a, avg_T_B=avg_a * P_b,
                smallest_non_core=P_z, smallest_non_core_squared=P_z * P_z,
            )
        )
    return out


def build_table21(rows: int = 9) -> list[ScaffoldRow]:
    """Goldbach two-primorial scaffold: B's largest factor is the largest
    prime < sqrt(A); verifies smallest-non-core squared exceeds A."""
    if not 1 <= rows <= 9:
        raise DomainError(f"table 21 supports 1..9 rows, got {rows}")
    out = []
    for k in range(1, rows + 1):
        A = _base_primorial(k)
        P_a = A.largest_factor
        P_b = _prev_prime(math.isqrt(A.value))
        P_s = _next_prime(P_a)
        t = _T(A.prime_factors)
        pf = product_factor(P_s, P_b)
        P_z = _next_prime(P_b)
        if P_z * P_z <= A.value:
            raise AssertionError(f"scaffold row {k}: {P_z}^2 <= {A.value}")
        out.append(
            ScaffoldRow(
                index=k, A=A, B_largest_factor=P_b, C_largest_factor=None,
                P_a=P_a, P_b=P_b, P_s=P_s, T_A=t, product_factor=pf,
                avg_T_A=avg_solutions_in_cycle(t, pf), avg_T_B=None,
                smallest_non_core=P_z, smallest_non_core_squared=P_z * P_z,
            )
        )
    return out
