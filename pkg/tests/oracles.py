"""
Independent checks used only by the test suite.

- dense linear algebra over GF(p) for membership of homogeneous polynomials
  in ideals with homogeneous generators (exact in that setting),
- a degree-bounded certificate search for arbitrary generators,
- lcm / gcd oracles for monomial ideals.
"""
from itertools import combinations_with_replacement
from typing import Iterable, List, Sequence, Tuple

from sympy.polys.matrices import DomainMatrix

from algebra.groebner import Ideal
from algebra.polyring import PolyRing, Polynomial

Exponents = Tuple[int, ...]


def monomials_of_degree(nvars: int, degree: int) -> List[Exponents]:
    out = []
    for combo in combinations_with_replacement(range(nvars), degree):
        exps = [0] * nvars
        for i in combo:
            exps[i] += 1
        out.append(tuple(exps))
    return out


def _rank(K, rows: List[Exponents], cols: List[dict]) -> int:
    entries = [[K(int(col.get(mono, 0))) for col in cols] for mono in rows]
    return DomainMatrix(entries, (len(rows), len(cols)), K).rank()


def is_homogeneous(f: Polynomial) -> bool:
    return len({sum(m) for m in f.raw.keys()}) <= 1


def dense_member(f: Polynomial, generators: Sequence[Polynomial]) -> bool:
    """
    f ∈ (generators) for homogeneous f and generators: f must lie in the
    span of m*g over monomials m of degree deg f - deg g.
    """
    assert is_homogeneous(f) and all(is_homogeneous(g) for g in generators)
    if f.is_zero():
        return True
    ring = f.ring
    K = ring.field.domain
    d = f.total_degree()
    rows = monomials_of_degree(ring.nvars, d)
    columns = []
    for g in generators:
        if g.is_zero() or g.total_degree() > d:
            continue
        for m in monomials_of_degree(ring.nvars, d - g.total_degree()):
            columns.append(dict((g * ring.monomial(m)).raw))
    if not columns:
        return False
    return _rank(K, rows, columns) == _rank(K, rows, columns + [dict(f.raw)])


def monomial_ideal(ring: PolyRing, exponents: Iterable[Exponents]) -> Ideal:
    return Ideal(ring, [ring.monomial(e) for e in exponents])


def lcm_intersection(a: Sequence[Exponents], b: Sequence[Exponents]) -> List[Exponents]:
    """Generators of the intersection of two monomial ideals: pairwise lcms."""
    return [tuple(max(x, y) for x, y in zip(m, n)) for m in a for n in b]


def monomial_colon(a: Sequence[Exponents], m: Exponents) -> List[Exponents]:
    """Generators of (a : x^m): each generator divided by its gcd with x^m."""
    return [tuple(max(x - y, 0) for x, y in zip(g, m)) for g in a]


def bounded_certificate(f: Polynomial, generators: Sequence[Polynomial], D: int) -> bool:
    """
    Is f = sum h_i g_i with deg(h_i g_i) <= D? Any polynomials allowed. Columns
    are m*g_i for monomials m of degree <= D - deg g_i, rows every monomial of
    degree <= D. A solution proves membership; no solution at this D proves nothing.
    """
    if f.is_zero():
        return True
    ring = f.ring
    if f.total_degree() > D:
        return False
    K = ring.field.domain
    rows = [m for d in range(D + 1) for m in monomials_of_degree(ring.nvars, d)]
    columns = []
    for g in generators:
        if g.is_zero() or g.total_degree() > D:
            continue
        for d in range(D - g.total_degree() + 1):
            for m in monomials_of_degree(ring.nvars, d):
                columns.append(dict((g * ring.monomial(m)).raw))
    if not columns:
        return False
    return _rank(K, rows, columns) == _rank(K, rows, columns + [dict(f.raw)])
