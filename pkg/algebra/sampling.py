"""
Seeded random instances for property checks and law sweeps.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations_with_replacement
from typing import List, Optional

import numpy as np

from algebra.groebner import Ideal
from algebra.polyring import PolyRing, PrimeField, Polynomial

VARIABLE_NAMES = ("X", "Y", "Z", "U", "V", "W")


@dataclass
class SampleConfig:
    max_vars: int = 3
    max_gens: int = 3
    max_degree: int = 4
    max_terms: int = 4
    primes: tuple = (2, 3)


def random_ring(rng: np.random.Generator, cfg: SampleConfig) -> PolyRing:
    p = int(rng.choice(cfg.primes))
    n = int(rng.integers(1, cfg.max_vars + 1))
    return PolyRing(PrimeField(p), VARIABLE_NAMES[:n])


def _monomials_of_degree(nvars: int, degree: int) -> List[tuple]:
    out = []
    for combo in combinations_with_replacement(range(nvars), degree):
        exps = [0] * nvars
        for i in combo:
            exps[i] += 1
        out.append(tuple(exps))
    return out


def random_polynomial(
    ring: PolyRing,
    rng: np.random.Generator,
    max_degree: int,
    max_terms: int,
    homogeneous_degree: Optional[int] = None,
) -> Polynomial:
    """Random polynomial with at most `max_terms` terms and nonzero coefficients."""
    if homogeneous_degree is not None:
        pool = _monomials_of_degree(ring.nvars, homogeneous_degree)
    else:
        pool = [m for d in range(max_degree + 1) for m in _monomials_of_degree(ring.nvars, d)]
    n_terms = int(rng.integers(1, min(max_terms, len(pool)) + 1))
    picks = rng.choice(len(pool), size=n_terms, replace=False)
    terms = {pool[int(i)]: int(rng.integers(1, ring.p)) for i in picks}
    return ring.from_terms(terms)


def random_ideal(ring: PolyRing, rng: np.random.Generator, cfg: SampleConfig) -> Ideal:
    n_gens = int(rng.integers(1, cfg.max_gens + 1))
    gens = [random_polynomial(ring, rng, cfg.max_degree, cfg.max_terms) for _ in range(n_gens)]
    return Ideal(ring, gens)


def random_homogeneous_ideal(
    ring: PolyRing, rng: np.random.Generator, max_gens: int, max_degree: int, max_terms: int
) -> Ideal:
    n_gens = int(rng.integers(1, max_gens + 1))
    gens = []
    for _ in range(n_gens):
        d = int(rng.integers(1, max_degree + 1))
        gens.append(random_polynomial(ring, rng, d, max_terms, homogeneous_degree=d))
    return Ideal(ring, gens)
