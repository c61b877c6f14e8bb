"""
Ideal calculus: sum, product, intersection, colon, elimination, saturation.
"""
from __future__ import annotations

from typing import List, Sequence

from algebra.errors import PreconditionError, RingMismatchError
from algebra.groebner import Ideal, groebner_basis, ideal_equal
from algebra.polyring import MonomialOrder, PolyRing, Polynomial
from utils.logger import get_logger

logger = get_logger(__name__)


def _check(I: Ideal, J: Ideal) -> None:
    if I.ring != J.ring:
        raise RingMismatchError(f"ideals live in different rings: {I.ring} vs {J.ring}")


def principal(f: Polynomial) -> Ideal:
    return Ideal(f.ring, [f])


def ideal_sum(I: Ideal, J: Ideal) -> Ideal:
    _check(I, J)
    return Ideal(I.ring, I.generators + J.generators)


def ideal_product(I: Ideal, J: Ideal) -> Ideal:
    _check(I, J)
    return Ideal(I.ring, [f * g for f in I.generators for g in J.generators])


def _residual_order(order: MonomialOrder) -> MonomialOrder:
    return order if order.kind in {"lex", "grevlex"} else MonomialOrder.grevlex()


def _eliminate_into(big: PolyRing, gens: Sequence[Polynomial], k: int, target: PolyRing) -> Ideal:
    """
    Groebner basis of (gens) in `big` (a block(k) ring), keep the elements
    free of the first k variables, re-expressed in `target` (the last
    variables of `big`, same names).
    """
    basis = groebner_basis(Ideal(big, gens))
    positions = [0] * k + list(range(big.nvars - k))
    kept = [
        target.convert(g, positions)
        for g in basis
        if all(not any(m[:k]) for m in g.raw.keys())
    ]
    result = Ideal(target, kept)
    # the kept part is the reduced basis for grevlex on the remaining block
    if target.order == MonomialOrder.grevlex():
        result._store_gb(kept)
    return result


def eliminate(I: Ideal, k: int) -> Ideal:
    """I intersected with the subring without the first k variables, in the smaller ring."""
    ring = I.ring
    if k == 0:
        return I
    if not (1 <= k < ring.nvars):
        raise PreconditionError(f"cannot eliminate {k} variables from {ring}")
    big = ring.with_order(MonomialOrder.block(k))
    small = PolyRing(ring.field, ring.variables[k:], _residual_order(ring.order))
    return _eliminate_into(big, [big.convert(g) for g in I.generators], k, small)


def _fresh_tag(variables: Sequence[str]) -> str:
    tag = "T"
    while tag in variables:
        tag += "_"
    return tag


def ideal_intersect(I: Ideal, J: Ideal) -> Ideal:
    """I ∩ J via t*I + (1 - t)*J with t eliminated."""
    _check(I, J)
    ring = I.ring
    if I.is_zero() or J.is_zero():
        return Ideal.zero(ring)
    tag = _fresh_tag(ring.variables)
    big = PolyRing(ring.field, (tag,) + ring.variables, MonomialOrder.block(1))
    t = big.gen(tag)
    one_minus_t = big.one() - t
    gens = [t * big.convert(g) for g in I.generators]
    gens += [one_minus_t * big.convert(h) for h in J.generators]
    result = _eliminate_into(big, gens, 1, ring)
    logger.debug("intersection in %s: %d generators", ring, len(result.generators))
    return result


def _exact_quotient(f: Polynomial, g: Polynomial) -> Polynomial:
    q, r = f.raw.div(g.raw)
    if r:
        raise AssertionError(f"exact division failed: {f} / {g} leaves remainder")
    return f.ring.wrap(q)


def colon_by_poly(I: Ideal, g: Polynomial) -> Ideal:
    if g.is_zero():
        raise PreconditionError("colon by the zero polynomial")
    if g.is_constant():
        return I
    K = ideal_intersect(I, principal(g))
    return Ideal(I.ring, [_exact_quotient(h, g) for h in K.generators])


def ideal_colon(I: Ideal, J: Ideal) -> Ideal:
    """(I : J) = {h : hJ ⊆ I}, as the intersection of (I : g) over generators g of J."""
    _check(I, J)
    if J.is_zero():
        raise PreconditionError("colon by the zero ideal")
    parts: List[Ideal] = [colon_by_poly(I, g) for g in J.generators]
    result = parts[0]
    for part in parts[1:]:
        result = ideal_intersect(result, part)
    return result


def saturate(I: Ideal, f: Polynomial) -> Ideal:
    """(I : f^∞), iterating colons until two successive steps agree."""
    if f.is_zero():
        raise PreconditionError("saturation at the zero polynomial")
    current = I
    steps = 0
    while True:
        nxt = colon_by_poly(current, f)
        steps += 1
        if ideal_equal(nxt, current):
            logger.debug("saturation at %s stabilized after %d steps", f, steps)
            return current
        current = nxt
