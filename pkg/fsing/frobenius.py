"""
Characteristic-p ideal operators: Frobenius powers I^[q], Frobenius
roots I^[1/q], and the exponent sequence ω_n = 1 + p + ... + p^(n-1).

Over F_p[x_1..x_n] the ring is free over its q-th powers with basis
{x^μ : every μ_i < q}, so every g splits uniquely as Σ_μ (h_μ)^q x^μ and
(g)^[1/q] is generated by the h_μ.
"""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from typing import Dict, List, Sequence, Tuple

from algebra.errors import ExponentOverflowError, PreconditionError, RingMismatchError
from algebra.groebner import Ideal, groebner_basis
from algebra.polyring import Monomial, PolyRing, Polynomial, poly_q_power
from utils.config import EXPONENT_CAP
from utils.logger import get_logger

logger = get_logger(__name__)

OMEGA_LIMIT = 2**63


@dataclass(frozen=True)
class FrobeniusContext:
    p: int
    e: int

    def __post_init__(self) -> None:
        if self.e < 0:
            raise PreconditionError(f"Frobenius level must be >= 0, got {self.e}")
        if self.q > EXPONENT_CAP:
            raise ExponentOverflowError(f"q = {self.p}^{self.e} exceeds the exponent cap 2^20")

    @property
    def q(self) -> int:
        return self.p**self.e

    @classmethod
    def for_ring(cls, ring: PolyRing, e: int) -> "FrobeniusContext":
        return cls(ring.p, e)


def omega(n: int, p: int) -> int:
    """ω_n = 1 + p + ... + p^(n-1), with ω_0 = 0."""
    if n < 0:
        raise PreconditionError(f"omega index must be >= 0, got {n}")
    value = (p**n - 1) // (p - 1)
    if value >= OMEGA_LIMIT:
        raise ExponentOverflowError(f"omega_{n} for p = {p} overflows 2^63")
    return value


@dataclass(frozen=True)
class OmegaSequence:
    p: int
    values: Tuple[int, ...]

    def __post_init__(self) -> None:
        if self.values and self.values[0] != 0:
            raise PreconditionError("omega_0 must be 0")
        for a, b in zip(self.values, self.values[1:]):
            if b != 1 + self.p * a:
                raise PreconditionError(f"omega sequence breaks the recurrence at {a} -> {b}")

    @classmethod
    def build(cls, p: int, k: int) -> "OmegaSequence":
        values = [0]
        for _ in range(k):
            values.append(1 + p * values[-1])
        return cls(p, tuple(values))

    def __getitem__(self, n: int) -> int:
        return self.values[n]


@dataclass(frozen=True)
class FrobeniusDecomposition:
    ring: PolyRing
    e: int
    q: int
    components: Dict[Monomial, Polynomial] = field(default_factory=dict)

    def reconstruct(self) -> Polynomial:
        total = self.ring.zero()
        for mu, h in self.components.items():
            total = total + poly_q_power(h, self.e) * self.ring.monomial(mu)
        return total


def frobenius_decompose(g: Polynomial, e: int) -> FrobeniusDecomposition:
    """Split g = Σ_μ (h_μ)^q x^μ with μ < q componentwise; zero components omitted."""
    if e < 1:
        raise PreconditionError(f"decomposition needs level e >= 1, got {e}")
    q = FrobeniusContext.for_ring(g.ring, e).q
    buckets: Dict[Monomial, Dict[Monomial, int]] = defaultdict(dict)
    for monom, coeff in g.raw.items():
        mu = tuple(a % q for a in monom)
        buckets[mu][tuple(a // q for a in monom)] = int(coeff)
    components = {mu: g.ring.from_terms(buckets[mu]) for mu in sorted(buckets)}
    return FrobeniusDecomposition(g.ring, e, q, components)


def frobenius_power(I: Ideal, e: int) -> Ideal:
    """
    I^[p^e], generated by the p^e-th powers of the generators. The q-th
    powers of the reduced Groebner basis of I are the reduced Groebner basis
    of I^[q], so the cache is filled without running Buchberger again.
    """
    if e == 0:
        return I
    FrobeniusContext.for_ring(I.ring, e)
    J = Ideal(I.ring, [poly_q_power(g, e) for g in I.generators])
    try:
        J._store_gb([poly_q_power(g, e) for g in groebner_basis(I)])
    except ExponentOverflowError:
        logger.debug("Groebner basis of %s overflows at level %d; basis left uncached", I, e)
    return J


def frobenius_root(I: Ideal, e: int) -> Ideal:
    """I^[1/p^e]: the smallest ideal T with I ⊆ T^[p^e]."""
    if e < 0:
        raise PreconditionError(f"Frobenius level must be >= 0, got {e}")
    if e == 0:
        return I
    gens: List[Polynomial] = []
    for g in I.generators:
        gens.extend(frobenius_decompose(g, e).components.values())
    return Ideal(I.ring, gens)


def frobenius_root_family(ideals: Sequence[Ideal], levels: Sequence[int]) -> Ideal:
    """Σ_λ a_λ^[1/q_λ]: the smallest h with a_λ ⊆ h^[q_λ] for every λ."""
    if not ideals:
        raise PreconditionError("a family of ideals must be non-empty")
    if len(ideals) != len(levels):
        raise PreconditionError("one level per ideal is required")
    ring = ideals[0].ring
    gens: List[Polynomial] = []
    for I, e in zip(ideals, levels):
        if I.ring != ring:
            raise RingMismatchError(f"family mixes {ring} and {I.ring}")
        gens.extend(frobenius_root(I, e).generators)
    return Ideal(ring, gens)


def iterated_root_step(J: Ideal, u: Polynomial) -> Ideal:
    """
    (u*J)^[1/p]. Starting from J_0 = (1), J_n equals (u^ω_n)^[1/p^n],
    because u^ω_(n+1) = u^(p^n) * u^ω_n and (g^q I)^[1/q] = g I^[1/q].
    """
    if u.ring != J.ring:
        raise RingMismatchError(f"{u} does not belong to {J.ring}")
    return frobenius_root(Ideal(J.ring, [u * g for g in groebner_basis(J)]), 1)

