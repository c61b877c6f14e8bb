"""
Level-bounded tight-closure certificates over R = S/a.

Every check here runs for Frobenius levels n <= N only. A passing report is
evidence for a tight-closure membership, never a proof of it.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Sequence

from algebra.errors import (
    ExponentOverflowError,
    InsufficientDataError,
    PreconditionError,
    RingMismatchError,
)
from algebra.groebner import Ideal, ideal_contains, ideal_equal, ideal_member
from algebra.ideal_ops import ideal_sum, saturate
from algebra.polyring import PolyRing, Polynomial, poly_q_power
from fsing.frobenius import frobenius_power
from utils.config import DEFAULT_K_MAX, DEFAULT_LEVEL
from utils.logger import get_logger

logger = get_logger(__name__)


@dataclass
class QuotientRingCtx:
    """R = S/a together with the (trusted) minimal primes of a, if known."""

    S: PolyRing
    a: Ideal
    min_primes: Optional[List[Ideal]] = None

    def __post_init__(self) -> None:
        if self.a.ring != self.S:
            raise RingMismatchError(f"defining ideal {self.a} does not live in {self.S}")
        if self.a.is_unit():
            raise PreconditionError("the defining ideal must be proper")
        if self.min_primes is None:
            return
        if not self.min_primes:
            raise PreconditionError("a proper ideal has at least one minimal prime; got an empty list")
        for prime in self.min_primes:
            if prime.ring != self.S:
                raise RingMismatchError(f"minimal prime {prime} does not live in {self.S}")
            if prime.is_unit():
                raise PreconditionError(f"minimal prime {prime} is the unit ideal")
            if not ideal_contains(prime, self.a):
                raise PreconditionError(f"{prime} does not contain the defining ideal {self.a}")
        for i, first in enumerate(self.min_primes):
            for j, second in enumerate(self.min_primes):
                if i != j and ideal_contains(second, first):
                    raise PreconditionError(f"minimal primes {first} and {second} are comparable")

    def require_primes(self) -> List[Ideal]:
        if self.min_primes is None:
            raise InsufficientDataError("minimal primes of the defining ideal were not supplied")
        return self.min_primes


@dataclass
class TightClosureQuery:
    r: Polynomial
    b: Ideal
    c: Polynomial
    N: int = DEFAULT_LEVEL

    def __post_init__(self) -> None:
        if self.N < 1:
            raise PreconditionError(f"level bound N must be >= 1, got {self.N}")
        for poly in (self.r, self.c):
            if poly.ring != self.b.ring:
                raise RingMismatchError(f"{poly} does not belong to {self.b.ring}")


@dataclass
class CertificateReport:
    levels: List[bool]

    @property
    def all_pass(self) -> bool:
        return all(self.levels)

    @property
    def first_failure(self) -> Optional[int]:
        return next((n for n, ok in enumerate(self.levels) if not ok), None)

    def to_dict(self) -> Dict[str, Any]:
        return {"levels": list(self.levels), "all_pass": self.all_pass, "first_failure": self.first_failure}


@dataclass
class ElementCheck:
    ideal_index: int
    element: Polynomial
    report: CertificateReport

    def to_dict(self) -> Dict[str, Any]:
        return {"ideal": self.ideal_index, "element": str(self.element), **self.report.to_dict()}


@dataclass
class TestElementReport:
    __test__ = False

    checks: List[ElementCheck] = field(default_factory=list)

    @property
    def failures(self) -> List[ElementCheck]:
        return [chk for chk in self.checks if not chk.report.all_pass]

    @property
    def all_pass(self) -> bool:
        return not self.failures

    def to_dict(self) -> Dict[str, Any]:
        return {
            "all_pass": self.all_pass,
            "checks": [chk.to_dict() for chk in self.checks],
            "failures": len(self.failures),
        }


def in_R_circ(c: Polynomial, Q: QuotientRingCtx) -> bool:
    """c avoids every minimal prime of a."""
    if c.ring != Q.S:
        raise RingMismatchError(f"{c} does not belong to {Q.S}")
    return all(not ideal_member(c, prime) for prime in Q.require_primes())


def tc_certificate(query: TightClosureQuery, Q: QuotientRingCtx) -> CertificateReport:
    """Check c * r^(p^n) ∈ b^[p^n] + a for n = 0..N."""
    if query.b.ring != Q.S:
        raise RingMismatchError(f"query lives in {query.b.ring}, quotient in {Q.S}")
    levels: List[bool] = []
    for n in range(query.N + 1):
        target = ideal_sum(frobenius_power(query.b, n), Q.a)
        levels.append(ideal_member(query.c * poly_q_power(query.r, n), target))
    report = CertificateReport(levels)
    logger.debug("tight-closure certificate for r = %s in %s: %s", query.r, query.b, levels)
    return report


def test_element_certificate(
    c: Polynomial,
    ideals: Sequence[Ideal],
    closure_elems: Sequence[Sequence[Polynomial]],
    N: int,
    Q: QuotientRingCtx,
) -> TestElementReport:
    """Run tc_certificate with witness c for each ideal and each of its asserted closure elements."""
    if not ideals:
        raise PreconditionError("the ideal family is empty")
    if len(closure_elems) != len(ideals):
        raise PreconditionError("one closure list per ideal is required")
    if not in_R_circ(c, Q):
        raise PreconditionError(f"c = {c} lies in a minimal prime of {Q.a}")
    report = TestElementReport()
    for idx, (b, elems) in enumerate(zip(ideals, closure_elems)):
        for r in elems:
            cert = tc_certificate(TightClosureQuery(r, b, c, N), Q)
            report.checks.append(ElementCheck(idx, r, cert))
    logger.info(
        "test-element check for c = %s: %d checks, %d failures", c, len(report.checks), len(report.failures)
    )
    return report


def is_nilpotent(r: Polynomial, Q: QuotientRingCtx, k_max: int = DEFAULT_K_MAX) -> Optional[bool]:
    """True once r^(p^k) ∈ a for some k <= k_max; None (unresolved) otherwise."""
    if k_max < 1:
        raise PreconditionError(f"k_max must be >= 1, got {k_max}")
    for k in range(1, k_max + 1):
        try:
            power = poly_q_power(r, k)
        except ExponentOverflowError:
            logger.warning("nilpotency check for %s stopped at k = %d: exponent cap reached", r, k)
            return None
        if ideal_member(power, Q.a):
            logger.debug("%s is nilpotent: r^(p^%d) lies in a", r, k)
            return True
    return None


def r0_certificate(Q: QuotientRingCtx, separators: Sequence[Polynomial]) -> bool:
    """
    The minimal primary components of a are prime. The component at π_i is
    (a : s_i^∞) for a separator s_i outside π_i and inside every other π_j.
    """
    primes = Q.require_primes()
    if len(separators) != len(primes):
        raise PreconditionError(f"expected {len(primes)} separators, got {len(separators)}")
    for i, (prime, s) in enumerate(zip(primes, separators)):
        if ideal_member(s, prime):
            raise PreconditionError(f"separator {s} lies in its own prime {prime}")
        for j, other in enumerate(primes):
            if j != i and not ideal_member(s, other):
                raise PreconditionError(f"separator {s} is not in the other minimal prime {other}")
    for prime, s in zip(primes, separators):
        component = saturate(Q.a, s)
        if not ideal_equal(component, prime):
            logger.info("primary component %s differs from its prime %s", component, prime)
            return False
    return True
