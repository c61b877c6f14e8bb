"""
Exact multivariate polynomial arithmetic over prime fields.

Polynomials are thin immutable wrappers around sympy's sparse
``PolyElement`` over ``GF(p)``; the wrapper adds the ring bookkeeping
(named variables, declared monomial order), the exponent guard and the
canonical term list used for printing and equality.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field as dc_field
from functools import cached_property
from operator import itemgetter
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from sympy import Symbol, isprime
from sympy.polys.domains import GF
from sympy.polys.orderings import ProductOrder, grevlex, lex
from sympy.polys.rings import PolyElement, ring as sympy_ring

from algebra.errors import (
    AlgebraError,
    ExponentOverflowError,
    PreconditionError,
    RingMismatchError,
)
from utils.config import EXPONENT_CAP

VARIABLE_PATTERN = re.compile(r"[A-Za-z][A-Za-z0-9_]*")
MAX_CHARACTERISTIC = 2**31 - 1

Monomial = Tuple[int, ...]


@dataclass(frozen=True)
class PrimeField:
    p: int

    def __post_init__(self) -> None:
        if not isinstance(self.p, int) or not (2 <= self.p <= MAX_CHARACTERISTIC):
            raise AlgebraError(f"characteristic must be a prime in [2, 2^31 - 1], got {self.p!r}")
        if not isprime(self.p):
            raise AlgebraError(f"characteristic {self.p} is not prime")

    @cached_property
    def domain(self):
        return GF(self.p, symmetric=False)

    def __call__(self, value: int) -> "FieldElement":
        return FieldElement(value % self.p, self)

    def __str__(self) -> str:
        return f"F_{self.p}"


@dataclass(frozen=True)
class FieldElement:
    value: int
    field: PrimeField

    def __post_init__(self) -> None:
        if not (0 <= self.value < self.field.p):
            raise AlgebraError(f"{self.value} is not a canonical residue mod {self.field.p}")

    def _check(self, other: "FieldElement") -> None:
        if other.field != self.field:
            raise RingMismatchError(f"cannot combine elements of {self.field} and {other.field}")

    def __add__(self, other: "FieldElement") -> "FieldElement":
        self._check(other)
        return self.field(self.value + other.value)

    def __sub__(self, other: "FieldElement") -> "FieldElement":
        self._check(other)
        return self.field(self.value - other.value)

    def __mul__(self, other: "FieldElement") -> "FieldElement":
        self._check(other)
        return self.field(self.value * other.value)

    def __neg__(self) -> "FieldElement":
        return self.field(-self.value)

    def __pow__(self, n: int) -> "FieldElement":
        return self.field(pow(self.value, n, self.field.p))

    def inverse(self) -> "FieldElement":
        if self.value == 0:
            raise ZeroDivisionError(f"0 has no inverse in {self.field}")
        return self.field(pow(self.value, -1, self.field.p))

    def __truediv__(self, other: "FieldElement") -> "FieldElement":
        return self * other.inverse()

    def frobenius(self) -> "FieldElement":
        # identity on F_p
        return self ** self.field.p

    def __bool__(self) -> bool:
        return self.value != 0

    def __str__(self) -> str:
        return str(self.value)


@dataclass(frozen=True)
class MonomialOrder:
    """
    `lex`, `grevlex`, or `block` with k > 0: the first k variables are
    eliminated (grevlex on the first block, ties broken by grevlex on the rest).
    """

    kind: str = "grevlex"
    k: int = 0

    def __post_init__(self) -> None:
        if self.kind not in {"lex", "grevlex", "block"}:
            raise AlgebraError(f"unknown monomial order {self.kind!r}")
        if self.kind == "block" and self.k < 1:
            raise AlgebraError(f"block order needs k >= 1, got {self.k}")
        if self.kind != "block" and self.k != 0:
            raise AlgebraError(f"order {self.kind!r} takes no block size")

    @classmethod
    def lex(cls) -> "MonomialOrder":
        return cls("lex")

    @classmethod
    def grevlex(cls) -> "MonomialOrder":
        return cls("grevlex")

    @classmethod
    def block(cls, k: int) -> "MonomialOrder":
        return cls("block", k)

    def sympy_order(self):
        if self.kind == "lex":
            return lex
        if self.kind == "grevlex":
            return grevlex
        return ProductOrder(
            (grevlex, itemgetter(slice(0, self.k))),
            (grevlex, itemgetter(slice(self.k, None))),
        )

    def __str__(self) -> str:
        return f"block({self.k})" if self.kind == "block" else self.kind


@dataclass(frozen=True)
class PolyRing:
    field: PrimeField
    variables: Tuple[str, ...]
    order: MonomialOrder = dc_field(default_factory=MonomialOrder.grevlex)

    def __post_init__(self) -> None:
        object.__setattr__(self, "variables", tuple(self.variables))
        if not self.variables:
            raise AlgebraError("a polynomial ring needs at least one variable")
        for name in self.variables:
            if not VARIABLE_PATTERN.fullmatch(name):
                raise AlgebraError(f"invalid variable name {name!r}")
        if len(set(self.variables)) != len(self.variables):
            raise AlgebraError(f"duplicate variable names in {list(self.variables)}")
        if self.order.kind == "block" and not (1 <= self.order.k < len(self.variables)):
            raise AlgebraError(
                f"block({self.order.k}) needs 1 <= k < {len(self.variables)} variables"
            )

    @property
    def p(self) -> int:
        return self.field.p

    @property
    def nvars(self) -> int:
        return len(self.variables)

    @cached_property
    def sympy(self):
        symbols = [Symbol(v) for v in self.variables]
        return sympy_ring(symbols, self.field.domain, self.order.sympy_order())[0]

    def with_order(self, order: MonomialOrder) -> "PolyRing":
        return PolyRing(self.field, self.variables, order)

    def index(self, name: str) -> int:
        try:
            return self.variables.index(name)
        except ValueError:
            raise AlgebraError(f"unknown variable {name!r} in {self}") from None

    # --- constructors ---
    def wrap(self, elem: PolyElement) -> "Polynomial":
        return Polynomial(self, elem)

    def zero(self) -> "Polynomial":
        return Polynomial(self, self.sympy.zero)

    def one(self) -> "Polynomial":
        return Polynomial(self, self.sympy.one)

    def constant(self, value: int) -> "Polynomial":
        return Polynomial(self, self.sympy.ground_new(value % self.p))

    def gen(self, name: str) -> "Polynomial":
        return Polynomial(self, self.sympy.gens[self.index(name)])

    def gens(self) -> List["Polynomial"]:
        return [Polynomial(self, g) for g in self.sympy.gens]

    def monomial(self, exponents: Sequence[int], coeff: int = 1) -> "Polynomial":
        return self.from_terms({tuple(exponents): coeff})

    def from_terms(self, terms: Dict[Monomial, int]) -> "Polynomial":
        for exps in terms:
            check_monomial(exps, self.nvars)
        return Polynomial(self, self.sympy.from_dict({m: c % self.p for m, c in terms.items()}))

    def convert(self, f: "Polynomial", positions: Optional[Sequence[int]] = None) -> "Polynomial":
        """
        Re-express `f` in this ring. `positions[i]` is the index in this ring of
        `f.ring`'s i-th variable; by default variables are matched by name.
        """
        if f.ring.p != self.p:
            raise RingMismatchError(f"cannot move a polynomial from {f.ring} to {self}")
        if positions is None:
            positions = [self.index(v) for v in f.ring.variables]
        terms: Dict[Monomial, int] = {}
        for monom, coeff in f.raw.items():
            target = [0] * self.nvars
            for i, e in enumerate(monom):
                if e:
                    target[positions[i]] = e
            terms[tuple(target)] = int(coeff)
        return self.from_terms(terms)

    def __str__(self) -> str:
        suffix = "" if self.order.kind == "grevlex" else f" ({self.order})"
        return f"{self.field}[{', '.join(self.variables)}]{suffix}"


def check_monomial(exponents: Sequence[int], nvars: int) -> None:
    if len(exponents) != nvars:
        raise AlgebraError(f"monomial {tuple(exponents)} does not have {nvars} exponents")
    for e in exponents:
        if e < 0:
            raise AlgebraError(f"negative exponent in {tuple(exponents)}")
        if e > EXPONENT_CAP:
            raise ExponentOverflowError(f"exponent {e} exceeds the cap 2^20")


class Polynomial:
    """
    Immutable polynomial over a declared ring. Equality is equality of the
    canonical term lists (same ring, same terms).
    """

    __slots__ = ("ring", "raw")

    def __init__(self, ring: PolyRing, raw: PolyElement) -> None:
        self.ring = ring
        self.raw = raw

    # --- canonical form ---
    @property
    def terms(self) -> List[Tuple[FieldElement, Monomial]]:
        return [(self.ring.field(int(c)), m) for m, c in self.raw.terms()]

    def is_zero(self) -> bool:
        return not self.raw

    def is_constant(self) -> bool:
        return self.raw.is_ground

    def is_unit(self) -> bool:
        return self.is_constant() and not self.is_zero()

    @property
    def leading_monomial(self) -> Monomial:
        if self.is_zero():
            raise AlgebraError("the zero polynomial has no leading monomial")
        return self.raw.LM

    @property
    def leading_coefficient(self) -> FieldElement:
        return self.ring.field(int(self.raw.LC))

    def total_degree(self) -> int:
        if self.is_zero():
            return -1
        return max(sum(m) for m in self.raw.keys())

    def max_exponent(self) -> int:
        return max((max(m) for m in self.raw.keys()), default=0)

    def monic(self) -> "Polynomial":
        return Polynomial(self.ring, self.raw.monic())

    # --- arithmetic ---
    def __add__(self, other: "Polynomial") -> "Polynomial":
        return poly_add(self, other)

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return poly_add(self, -other)

    def __neg__(self) -> "Polynomial":
        return Polynomial(self.ring, -self.raw)

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        return poly_mul(self, other)

    def __pow__(self, n: int) -> "Polynomial":
        return poly_pow(self, n)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.ring == other.ring and dict.__eq__(self.raw, other.raw)

    def __hash__(self) -> int:
        return hash((self.ring, frozenset(self.raw.items())))

    def __str__(self) -> str:
        from algebra.parser import format_poly

        return format_poly(self)

    def __repr__(self) -> str:
        return f"Polynomial({self} in {self.ring})"


def _same_ring(f: Polynomial, g: Polynomial) -> None:
    if f.ring != g.ring:
        raise RingMismatchError(f"polynomials live in different rings: {f.ring} vs {g.ring}")


def poly_add(f: Polynomial, g: Polynomial) -> Polynomial:
    _same_ring(f, g)
    return Polynomial(f.ring, f.raw + g.raw)


def poly_mul(f: Polynomial, g: Polynomial) -> Polynomial:
    _same_ring(f, g)
    if f.is_zero() or g.is_zero():
        return f.ring.zero()
    df, dg = f.raw.degrees(), g.raw.degrees()
    for a, b in zip(df, dg):
        if a + b > EXPONENT_CAP:
            raise ExponentOverflowError(f"product exponent {a + b} exceeds the cap 2^20")
    return Polynomial(f.ring, f.raw * g.raw)


def poly_q_power(f: Polynomial, e: int) -> Polynomial:
    """
    f^(p^e), computed termwise: c*x^a -> c*x^(q*a), since c^q = c in F_p
    and Frobenius is additive.
    """
    if e < 0:
        raise PreconditionError(f"Frobenius level must be >= 0, got {e}")
    if e == 0 or f.is_zero():
        return f
    q = f.ring.p ** e
    if f.max_exponent() * q > EXPONENT_CAP or (not f.is_constant() and q > EXPONENT_CAP):
        raise ExponentOverflowError(f"{f}^{q} exceeds the exponent cap 2^20")
    raw = f.ring.sympy.from_dict({tuple(a * q for a in monom): coeff for monom, coeff in f.raw.items()})
    return Polynomial(f.ring, raw)


def poly_pow(f: Polynomial, n: int) -> Polynomial:
    """
    f^n via the base-p expansion of n: f^n = prod_i (f^(p^i))^(d_i),
    so only digit-sized powers are multiplied out.
    """
    if n < 0:
        raise AlgebraError(f"negative exponent {n}")
    ring = f.ring
    if n == 0:
        return ring.one()
    if f.is_constant():
        return ring.constant(pow(int(f.raw.LC), n, ring.p)) if not f.is_zero() else f
    if f.max_exponent() * n > EXPONENT_CAP:
        raise ExponentOverflowError(f"({f})^{n} exceeds the exponent cap 2^20")
    result = ring.one()
    level = 0
    while n:
        n, digit = divmod(n, ring.p)
        if digit:
            twist = poly_q_power(f, level)
            result = Polynomial(ring, result.raw * twist.raw**digit)
        level += 1
    return result
