"""Modular signatures: residue sequences, CRT reconstruction, classification."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DomainError
from .primes import SeedPrimeSet, is_prime

VERDICT_UNIT = "unit"
VERDICT_SEED_PRIME = "seed-prime"
VERDICT_COMPOSITE_BY_CORE = "composite-by-core"
VERDICT_POTENTIAL_PRIME = "potential-prime"
VERDICT_CERTIFIED_PRIME = "signature-certified-prime"


@dataclass(frozen=True)
class ModularSignature:
    """Ordered residues of one integer under an ascending seed-prime list."""

    subject: int
    seed_primes: tuple[int, ...]
    residues: tuple[int, ...]


def _check_seeds(seeds) -> tuple[int, ...]:
    seeds = tuple(int(s) for s in seeds)
    if not seeds:
        raise DomainError("seed prime list is empty")
    if list(seeds) != sorted(set(seeds)):
        raise DomainError(f"seed primes must be strictly ascending: {seeds}")
    for s in seeds:
        if not is_prime(s):
            raise DomainError(f"seed {s} is not prime")
    return seeds


def signature(z: int, seeds) -> ModularSignature:
    """Residue sequence of z under each seed prime, in seed order."""
    if z < 1:
        raise DomainError(f"need z >= 1, got {z}")
    seeds = _check_seeds(seeds)
    return ModularSignature(z, seeds, tuple(z % s for s in seeds))


def crt_reconstruct(sig: ModularSignature) -> int:
    """Unique solution in [0, prod(seeds)) matching every residue.

    Iterative pairwise combination; prime moduli are pairwise coprime, so a
    solution always exists.
    """
    x, m = 0, 1
    for p, r in zip(sig.seed_primes, sig.residues):
        # solve x + m*t == r (mod p)
        t = ((r - x) * pow(m, -1, p)) % p
        x += m * t
        m *= p
    return x % m


@dataclass(frozen=True)
class Classification:
    """Verdict on one integer from its signature under a seed-prime set."""

    subject: int
    is_odd: bool
    zero_core_residues: tuple[int, ...]
    zero_noncore_residues: tuple[int, ...]
    verdict: str

    @property
    def is_potential_prime(self) -> bool:
        return self.verdict in (VERDICT_POTENTIAL_PRIME, VERDICT_CERTIFIED_PRIME)


def classify(z: int, sps: SeedPrimeSet) -> Classification:
    """Classify z by its core / non-core zero residues.

    A non-core seed prime dividing z (e.g. 29 | 2291) counts as an ordinary
    zero residue; the seed-prime verdict applies only when z itself is a seed.
    """
    if not 1 <= z <= sps.primorial.value:
        raise DomainError(f"z must lie in [1, {sps.primorial.value}], got {z}")
    zero_core = tuple(p for p in sps.core if z % p == 0)
    zero_noncore = tuple(p for p in sps.non_core if z % p == 0)
    is_odd = z % 2 == 1
    if z == 1:
        verdict = VERDICT_UNIT
    elif z in sps.core or z in sps.non_core:
        verdict = VERDICT_SEED_PRIME
    elif zero_core:
        verdict = VERDICT_COMPOSITE_BY_CORE
    elif zero_noncore:
        verdict = VERDICT_POTENTIAL_PRIME
    else:
        verdict = VERDICT_CERTIFIED_PRIME
    return Classification(z, is_odd, zero_core, zero_noncore, verdict)


def is_potential_twin(o2: int, sps: SeedPrimeSet) -> bool:
    """Whether the pair (o2-2, o2) survives every odd core seed prime.

    The pair is anchored at its larger member o2; it survives a core seed p
    when o2 is neither 0 nor 2 mod p (the latter would zero out o2-2).
    """
    if o2 % 2 == 0:
        raise DomainError(f"twin anchor must be odd, got {o2}")
    if not 5 <= o2 <= sps.primorial.value:
        raise DomainError(f"twin anchor must lie in [5, {sps.primorial.value}], got {o2}")
    for p in sps.core:
        if p == 2:
            continue
        r = o2 % p
        if r == 0 or r == 2 % p:
            return False
    return True


def residue_cycle(p: int, parity: str) -> tuple[int, ...]:
    """One full residue cycle of length p through same-parity integers."""
    if p == 2 or not is_prime(p):
        raise DomainError(f"need an odd prime, got {p}")
    if parity not in ("odd", "even"):
        raise DomainError(f"parity must be 'odd' or 'even', got {parity!r}")
    start = 1 if parity == "odd" else 2
    return tuple((start + 2 * k) % p for k in range(p))


def potential_prime_mask(limit: int, core: tuple[int, ...]) -> np.ndarray:
    """Mask over 1..limit of odd integers with no zero core residue.

    Index i corresponds to the integer i+1.
    """
    z = np.arange(1, limit + 1, dtype=np.int64)
    mask = z % 2 == 1
    for p in core:
        if p == 2:
            continue
        mask &= z % p != 0
    return mask


def potential_twin_mask(limit: int, core: tuple[int, ...]) -> np.ndarray:
    """Mask over 1..limit of twin anchors surviving the odd core seeds."""
    z = np.arange(1, limit + 1, dtype=np.int64)
    mask = (z % 2 == 1) & (z >= 5)
    for p in core:
        if p == 2:
            continue
        r = z % p
        mask &= (r != 0) & (r != 2 % p)
    return mask


def certified_mask(limit: int, seeds: tuple[int, ...]) -> np.ndarray:
    """Mask over 1..limit of odd z > 1 with no zero residue at any seed."""
    z = np.arange(1, limit + 1, dtype=np.int64)
    mask = (z % 2 == 1) & (z > 1)
    for p in seeds:
        if p == 2:
            continue
        mask &= z % p != 0
    return mask
