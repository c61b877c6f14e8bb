"""
Buchberger's algorithm, normal forms and the membership / equality
primitives the rest of the library is built on.
"""
from __future__ import annotations

import heapq
import itertools
import threading
from typing import Iterable, List, Optional, Sequence, Set, Tuple

from algebra.errors import PreconditionError, RingMismatchError
from algebra.polyring import PolyRing, Polynomial
from utils.logger import get_logger

logger = get_logger(__name__)

# "normal": smallest lcm degree first; "oldest": pairs in creation order
PAIR_SELECTIONS = ("normal", "oldest")


class Ideal:
    """
    Ideal of a polynomial ring given by generators. Zero generators are
    dropped; the reduced Groebner basis is computed on demand and cached
    (assigned at most once).
    """

    def __init__(self, ring: PolyRing, generators: Iterable[Polynomial] = ()) -> None:
        gens: List[Polynomial] = []
        for g in generators:
            if g.ring != ring:
                raise RingMismatchError(f"generator {g} does not belong to {ring}")
            if not g.is_zero():
                gens.append(g)
        self.ring = ring
        self.generators: Tuple[Polynomial, ...] = tuple(gens)
        self._gb: Optional[Tuple[Polynomial, ...]] = None
        self._lock = threading.Lock()

    @classmethod
    def zero(cls, ring: PolyRing) -> "Ideal":
        return cls(ring, [])

    @classmethod
    def unit(cls, ring: PolyRing) -> "Ideal":
        return cls(ring, [ring.one()])

    def is_zero(self) -> bool:
        return not self.generators

    def is_unit(self) -> bool:
        return groebner_basis(self) == [self.ring.one()]

    @property
    def cached_gb(self) -> Optional[Tuple[Polynomial, ...]]:
        return self._gb

    def _store_gb(self, basis: Sequence[Polynomial]) -> Tuple[Polynomial, ...]:
        with self._lock:
            if self._gb is None:
                self._gb = tuple(basis)
            return self._gb

    def __str__(self) -> str:
        return "(" + ", ".join(str(g) for g in self.generators) + ")" if self.generators else "(0)"

    def __repr__(self) -> str:
        return f"Ideal{self} in {self.ring}"


def _check_same_ring(a: PolyRing, b: PolyRing) -> None:
    if a != b:
        raise RingMismatchError(f"objects live in different rings: {a} vs {b}")


def _buchberger(ring: PolyRing, polys: Sequence, selection: str = "normal") -> List:
    """Reduced Groebner basis of raw sympy elements, sorted descending."""
    R = ring.sympy
    order = R.order
    lcm = R.monomial_lcm
    div = R.monomial_div
    mul = R.monomial_mul

    G: List = []
    lms: List = []
    queue: List[Tuple[int, int, int]] = []
    pending: Set[Tuple[int, int]] = set()
    created = itertools.count()

    def add(f) -> None:
        f = f.monic()
        lmf = f.LM
        j = len(G)
        G.append(f)
        lms.append(lmf)
        for i in range(j):
            m = lcm(lms[i], lmf)
            priority = sum(m) if selection == "normal" else next(created)
            heapq.heappush(queue, (priority, i, j))
            pending.add((i, j))

    for f in polys:
        if f:
            add(f)

    processed = 0
    skipped = 0
    while queue:
        _, i, j = heapq.heappop(queue)
        pending.discard((i, j))
        m = lcm(lms[i], lms[j])
        # first criterion: coprime leading monomials
        if m == mul(lms[i], lms[j]):
            skipped += 1
            continue
        # chain criterion
        if any(
            k not in (i, j)
            and div(m, lms[k]) is not None
            and (min(i, k), max(i, k)) not in pending
            and (min(j, k), max(j, k)) not in pending
            for k in range(len(G))
        ):
            skipped += 1
            continue
        s = G[i].mul_monom(div(m, lms[i])) - G[j].mul_monom(div(m, lms[j]))
        r = s.rem(G) if s else s
        processed += 1
        if r:
            add(r)

    logger.debug(
        "Buchberger in %s: %d pairs reduced, %d skipped, %d basis elements before reduction",
        ring, processed, skipped, len(G),
    )

    # minimalize: drop elements whose leading monomial is divisible by another's
    minimal: List = []
    for f in sorted(G, key=lambda h: order(h.LM)):
        if all(div(f.LM, g.LM) is None for g in minimal):
            minimal.append(f)
    # interreduce
    reduced = []
    for idx, g in enumerate(minimal):
        others = minimal[:idx] + minimal[idx + 1:]
        r = g.rem(others) if others else g
        reduced.append(r.monic())
    reduced.sort(key=lambda h: order(h.LM), reverse=True)
    return reduced


def groebner_basis(I: Ideal, selection: str = "normal") -> List[Polynomial]:
    """
    Reduced Groebner basis of I under its ring's order (monic, sorted descending).
    The result does not depend on `selection`; a non-default strategy always recomputes.
    """
    if selection not in PAIR_SELECTIONS:
        raise PreconditionError(f"unknown pair selection {selection!r}; expected one of {PAIR_SELECTIONS}")
    if I.cached_gb is not None and selection == "normal":
        return list(I.cached_gb)
    raw = _buchberger(I.ring, [g.raw for g in I.generators], selection)
    basis = [I.ring.wrap(r) for r in raw]
    return list(I._store_gb(basis))


def normal_form(f: Polynomial, I: Ideal) -> Polynomial:
    _check_same_ring(f.ring, I.ring)
    gb = groebner_basis(I)
    if not gb or f.is_zero():
        return f
    return f.ring.wrap(f.raw.rem([g.raw for g in gb]))


def ideal_member(f: Polynomial, I: Ideal) -> bool:
    return normal_form(f, I).is_zero()


def ideal_contains(I: Ideal, J: Ideal) -> bool:
    """True iff J is contained in I."""
    _check_same_ring(I.ring, J.ring)
    return all(ideal_member(g, I) for g in J.generators)


def ideal_equal(I: Ideal, J: Ideal) -> bool:
    _check_same_ring(I.ring, J.ring)
    return groebner_basis(I) == groebner_basis(J)
