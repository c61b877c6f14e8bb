"""
F-singularity invariants of R = S/a for S = F_p[x_1..x_n]:

- the Frobenius adjoint (a^[p] : a) and Fedder's F-purity test,
- selection of u in (a^[p] : a) outside q^[p],
- the descending chain t_n = (u^ω_n)^[1/p^n] + a, whose stabilization
  index is the HSL number of the Frobenius action given by u,
- the ideal a + Σ_{n>=h} (d^(p^h) u^ω_n)^[1/p^n] bounding the test ideal from below.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

from algebra.errors import PreconditionError, RingMismatchError
from algebra.groebner import Ideal, groebner_basis, ideal_contains, ideal_equal, ideal_member
from algebra.ideal_ops import ideal_colon, ideal_sum, principal
from algebra.polyring import Polynomial, poly_q_power
from fsing.frobenius import frobenius_power, frobenius_root_family, iterated_root_step, omega
from utils.config import DEFAULT_MAX_E
from utils.logger import get_logger

logger = get_logger(__name__)

# extra chain elements computed after the first repeat
PERSISTENCE_STEPS = 2


def gens_as_text(I: Ideal) -> List[str]:
    return [str(g) for g in groebner_basis(I)]


def _require_proper(I: Ideal, what: str) -> None:
    if I.is_unit():
        raise PreconditionError(f"{what} must be a proper ideal, got the unit ideal")


def frobenius_adjoint(a: Ideal) -> Ideal:
    """(a^[p] : a)."""
    if a.is_zero():
        return Ideal.unit(a.ring)
    _require_proper(a, "the defining ideal")
    return ideal_colon(frobenius_power(a, 1), a)


def adjoint_quotient_generators(a: Ideal) -> List[Polynomial]:
    """Reduced-basis generators of (a^[p] : a) whose images generate (a^[p] : a)/a^[p]."""
    a_p = frobenius_power(a, 1)
    return [g for g in groebner_basis(frobenius_adjoint(a)) if not ideal_member(g, a_p)]


def fedder_fpure(a: Ideal, m: Ideal) -> bool:
    """
    Fedder's criterion at the prime m ⊇ a: S/a is F-pure at m iff
    (a^[p] : a) is not contained in m^[p].
    """
    if a.ring != m.ring:
        raise RingMismatchError(f"ideals live in different rings: {a.ring} vs {m.ring}")
    _require_proper(m, "the prime")
    if not ideal_contains(m, a):
        raise PreconditionError(f"{a} is not contained in {m}")
    m_p = frobenius_power(m, 1)
    fpure = any(not ideal_member(g, m_p) for g in groebner_basis(frobenius_adjoint(a)))
    logger.info("Fedder test for %s at %s: %s", a, m, "F-pure" if fpure else "not F-pure")
    return fpure


@dataclass
class UCandidates:
    candidates: List[Polynomial]
    fpure: bool

    @property
    def status(self) -> str:
        return "ok" if self.fpure else "not F-pure at q"

    def to_dict(self) -> Dict[str, Any]:
        return {
            "candidates": [str(u) for u in self.candidates],
            "fpure": self.fpure,
            "status": self.status,
        }


def select_u_candidates(a: Ideal, q: Ideal, p: int) -> UCandidates:
    """Reduced-basis generators of (a^[p] : a) lying outside q^[p]."""
    if p != a.ring.p:
        raise PreconditionError(f"characteristic {p} does not match {a.ring}")
    if a.ring != q.ring:
        raise RingMismatchError(f"ideals live in different rings: {a.ring} vs {q.ring}")
    _require_proper(a, "the defining ideal")
    _require_proper(q, "the prime")
    if not ideal_contains(q, a):
        raise PreconditionError(f"{a} is not contained in {q}")
    q_p = frobenius_power(q, 1)
    candidates = [g for g in groebner_basis(frobenius_adjoint(a)) if not ideal_member(g, q_p)]
    return UCandidates(candidates, fpure=bool(candidates))


@dataclass
class HSLChainSpec:
    a: Ideal
    u: Polynomial
    max_e: int = DEFAULT_MAX_E

    def __post_init__(self) -> None:
        if self.u.ring != self.a.ring:
            raise RingMismatchError(f"{self.u} does not belong to {self.a.ring}")
        if self.max_e < 0:
            raise PreconditionError(f"max_e must be >= 0, got {self.max_e}")
        _require_proper(self.a, "the defining ideal")
        if not ideal_member(self.u, frobenius_adjoint(self.a)):
            raise PreconditionError(f"u = {self.u} is not in (a^[p] : a)")

    @property
    def p(self) -> int:
        return self.a.ring.p


@dataclass
class HSLReport:
    chain: List[Ideal]
    hsl: Optional[int]
    stable: bool

    def to_dict(self) -> Dict[str, Any]:
        return {
            "chain": [gens_as_text(t) for t in self.chain],
            "hsl": self.hsl,
            "stable": self.stable,
        }


def chain_ideal(a: Ideal, u: Polynomial, n: int) -> Ideal:
    """t_n = (u^ω_n)^[1/p^n] + a^[1/p^0], straight from the definition as one family root."""
    return frobenius_root_family([principal(u ** omega(n, a.ring.p)), a], [n, 0])


def _assert_descends(upper: Ideal, lower: Ideal, n: int) -> None:
    if not ideal_contains(upper, lower):
        raise AssertionError(f"chain violation: t_{n} does not contain t_{n + 1}")


def hsl_chain(spec: HSLChainSpec) -> HSLReport:
    """
    Compute t_0 ⊇ t_1 ⊇ ... until two consecutive members agree (the index
    is the HSL number) or max_e is exhausted.
    """
    a, u = spec.a, spec.u
    J = Ideal.unit(a.ring)
    chain = [ideal_sum(J, a)]
    for n in range(spec.max_e + 1):
        J = iterated_root_step(J, u)
        t_next = Ideal(a.ring, tuple(groebner_basis(ideal_sum(J, a))))
        _assert_descends(chain[-1], t_next, n)
        chain.append(t_next)
        if ideal_equal(chain[-2], t_next):
            ahead = J
            for j in range(PERSISTENCE_STEPS):
                ahead = iterated_root_step(ahead, u)
                if not ideal_equal(ideal_sum(ahead, a), t_next):
                    raise AssertionError(f"chain moved again at t_{n + j + 2} after stabilizing")
            logger.info("HSL chain for u = %s stabilized: hsl = %d", u, n)
            return HSLReport(chain, hsl=n, stable=True)
        logger.debug("t_%d = %s", n + 1, t_next)
    logger.warning("HSL chain for u = %s unresolved within max_e = %d", u, spec.max_e)
    return HSLReport(chain, hsl=None, stable=False)


def uniform_hsl_bound(a: Ideal, u: Polynomial, max_e: int = DEFAULT_MAX_E) -> Optional[int]:
    """
    Global stabilization index of the chain t_n; it bounds the HSL number at
    every prime. None when unresolved within max_e.
    """
    return hsl_chain(HSLChainSpec(a, u, max_e)).hsl


@dataclass
class TailSum:
    ideal: Ideal
    stable: bool
    last_level: int
    partial_sums: List[Ideal] = field(default_factory=list)


def tail_root_sum(a: Ideal, u: Polynomial, d: Polynomial, e: int, max_e: int) -> TailSum:
    """
    Partial sums of a + Σ_{n>=e} (d u^ω_n)^[1/p^n], stopping at the first
    repeat or at n = max_e. The n-th summand K_n satisfies K_0 = (d),
    K_(n+1) = (u K_n)^[1/p].
    """
    if max_e < e:
        raise PreconditionError(f"max_e = {max_e} is below the starting level {e}")
    K = principal(d)
    for _ in range(e):
        K = iterated_root_step(K, u)
    sigma = Ideal(a.ring, tuple(groebner_basis(ideal_sum(a, K))))
    sums = [sigma]
    for n in range(e, max_e):
        K = iterated_root_step(K, u)
        nxt = Ideal(a.ring, tuple(groebner_basis(ideal_sum(sigma, K))))
        sums.append(nxt)
        if ideal_equal(nxt, sigma):
            return TailSum(sigma, stable=True, last_level=n, partial_sums=sums)
        sigma = nxt
    logger.warning("tail sum for d = %s has not repeated by level %d", d, max_e)
    return TailSum(sigma, stable=False, last_level=max_e, partial_sums=sums)


@dataclass
class TestIdealBoundSpec:
    __test__ = False

    a: Ideal
    u: Polynomial
    d: Polynomial
    h: int
    max_e: int = DEFAULT_MAX_E

    def __post_init__(self) -> None:
        for poly in (self.u, self.d):
            if poly.ring != self.a.ring:
                raise RingMismatchError(f"{poly} does not belong to {self.a.ring}")
        if self.h < 0:
            raise PreconditionError(f"h must be >= 0, got {self.h}")
        if ideal_member(self.d, self.a):
            raise PreconditionError(f"d = {self.d} lies in a")
        if not ideal_member(self.u, frobenius_adjoint(self.a)):
            raise PreconditionError(f"u = {self.u} is not in (a^[p] : a)")


@dataclass
class TestIdealBound:
    __test__ = False

    ideal: Ideal
    stable: bool
    positive: bool
    hsl: Optional[int]
    levels_used: int

    def to_dict(self) -> Dict[str, Any]:
        return {
            "generators": gens_as_text(self.ideal),
            "stable": self.stable,
            "positive": self.positive,
            "hsl": self.hsl,
            "levels_used": self.levels_used,
        }


def test_ideal_lower_bound(spec: TestIdealBoundSpec) -> TestIdealBound:
    """
    t = a + Σ_{n>=h} (d^(p^h) u^ω_n)^[1/p^n]; t/a lies in the big test ideal.
    `positive` is the checkable shadow of height(t/a) > 0: t strictly contains a.
    """
    a = spec.a
    hsl = hsl_chain(HSLChainSpec(a, spec.u, spec.max_e)).hsl
    if hsl is None:
        logger.warning("HSL index unresolved within max_e = %d; h = %d is not verified", spec.max_e, spec.h)
    elif spec.h < hsl:
        raise PreconditionError(f"h = {spec.h} is below the HSL stabilization index {hsl}")
    tail = tail_root_sum(a, spec.u, poly_q_power(spec.d, spec.h), spec.h, max(spec.max_e, spec.h))
    positive = not ideal_equal(tail.ideal, a)
    logger.info("test-ideal bound: %d generators, stable=%s, positive=%s", len(groebner_basis(tail.ideal)), tail.stable, positive)
    return TestIdealBound(tail.ideal, tail.stable, positive, hsl, tail.last_level)


def frobenius_colon(prime: Ideal, u: Polynomial, n: int) -> Ideal:
    """(π^[p^n] : u^ω_n), which equals π when u ∈ (π^[p] : π) lies outside π^[p]."""
    return ideal_colon(frobenius_power(prime, n), principal(u ** omega(n, prime.ring.p)))
