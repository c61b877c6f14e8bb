"""
Session files: line-oriented declarations of rings, ideals, polynomials and
minimal-prime lists.

    # comment
    ring S = F 2 [W, Y] order grevlex
    ideal a = W^2, W*Y
    poly u = W^3
    ideal p1 = W
    minprimes a = p1

Ideals and polynomials live in the most recently declared ring.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, List, Optional, Union

from algebra.errors import AlgebraError, ParseError, SessionError
from algebra.groebner import Ideal
from algebra.parser import parse_poly, split_generators
from algebra.polyring import MonomialOrder, PolyRing, Polynomial, PrimeField
from utils.logger import get_logger

logger = get_logger(__name__)

NAME = r"[A-Za-z][A-Za-z0-9_]*"
STATEMENT_RE = re.compile(rf"\s*(?P<kind>ring|ideal|poly|minprimes)\s+(?P<name>{NAME})\s*=\s*")
RING_BODY_RE = re.compile(
    rf"F\s+(?P<p>\d+)\s*\[\s*(?P<vars>{NAME}(?:\s*,\s*{NAME})*)\s*\]"
    r"(?:\s+order\s+(?P<order>lex|grevlex))?\s*$"
)
ORDERS = {"lex": MonomialOrder.lex, "grevlex": MonomialOrder.grevlex}


def parse_ring(text: str) -> PolyRing:
    """Parse a ring body such as "F 2 [W, Y] order lex"."""
    m = RING_BODY_RE.match(text.strip())
    if not m:
        raise ParseError(f"malformed ring declaration {text.strip()!r}", position=0)
    variables = tuple(v.strip() for v in m.group("vars").split(","))
    order = ORDERS[m.group("order") or "grevlex"]()
    return PolyRing(PrimeField(int(m.group("p"))), variables, order)


@dataclass
class Session:
    rings: Dict[str, PolyRing] = field(default_factory=dict)
    ideals: Dict[str, Ideal] = field(default_factory=dict)
    polys: Dict[str, Polynomial] = field(default_factory=dict)
    min_primes: Dict[str, List[Ideal]] = field(default_factory=dict)

    @property
    def default_ring(self) -> Optional[PolyRing]:
        return next(iter(self.rings.values()), None)

    def ring(self, ref: str) -> PolyRing:
        """A declared ring by name, or a literal like "F 3 [X, Y]"."""
        ref = ref.strip()
        if ref in self.rings:
            return self.rings[ref]
        if re.fullmatch(NAME, ref):
            raise SessionError(f"unknown ring {ref!r}")
        return parse_ring(ref)

    def ideal(self, ref: str, ring: PolyRing) -> Ideal:
        """A declared ideal by name, or a generator list parsed in `ring`."""
        ref = ref.strip()
        if ref in self.ideals:
            return self.ideals[ref]
        return Ideal(ring, [parse_poly(g, ring) for g in split_generators(ref)])

    def poly(self, ref: str, ring: PolyRing) -> Polynomial:
        ref = ref.strip()
        if ref in self.polys:
            return self.polys[ref]
        return parse_poly(ref, ring)


class _SessionLoader:
    def __init__(self) -> None:
        self.session = Session()
        self.current: Optional[PolyRing] = None

    def _fail(self, message: str, lineno: int, column: int) -> ParseError:
        return ParseError(message, line=lineno, column=column)

    def feed(self, raw: str, lineno: int) -> None:
        line = raw.split("#", 1)[0].rstrip()
        if not line.strip():
            return
        m = STATEMENT_RE.match(line)
        if not m:
            indent = len(line) - len(line.lstrip())
            raise self._fail("expected a ring, ideal, poly or minprimes statement", lineno, indent + 1)
        kind, name = m.group("kind"), m.group("name")
        body, offset = line[m.end():], m.end()
        try:
            getattr(self, f"_{kind}")(name, body)
        except ParseError as exc:
            if exc.line is not None:
                raise
            column = offset + (exc.position or 0) + 1
            raise self._fail(exc.message, lineno, column) from None
        except AlgebraError as exc:
            raise self._fail(str(exc), lineno, m.start("name") + 1) from None

    def _unique(self, table: Dict, kind: str, name: str) -> None:
        if name in table:
            raise SessionError(f"duplicate {kind} name {name!r}")

    def _require_ring(self, name: str) -> PolyRing:
        if self.current is None:
            raise SessionError(f"{name!r} is declared before any ring")
        return self.current

    def _ring(self, name: str, body: str) -> None:
        self._unique(self.session.rings, "ring", name)
        ring = parse_ring(body)
        self.session.rings[name] = ring
        self.current = ring

    def _ideal(self, name: str, body: str) -> None:
        self._unique(self.session.ideals, "ideal", name)
        ring = self._require_ring(name)
        gens: List[Polynomial] = []
        pos = 0
        for part in body.split(","):
            lead = len(part) - len(part.lstrip())
            try:
                gens.append(parse_poly(part, ring))
            except ParseError as exc:
                raise ParseError(exc.message, position=pos + (exc.position if exc.position is not None else lead)) from None
            pos += len(part) + 1
        self.session.ideals[name] = Ideal(ring, gens)

    def _poly(self, name: str, body: str) -> None:
        self._unique(self.session.polys, "poly", name)
        self.session.polys[name] = parse_poly(body, self._require_ring(name))

    def _minprimes(self, name: str, body: str) -> None:
        self._unique(self.session.min_primes, "minprimes", name)
        if name not in self.session.ideals:
            raise SessionError(f"minprimes refers to unknown ideal {name!r}")
        primes: List[Ideal] = []
        for ref in (r.strip() for r in body.split(",")):
            if ref not in self.session.ideals:
                raise SessionError(f"unknown ideal {ref!r} in minprimes list")
            primes.append(self.session.ideals[ref])
        self.session.min_primes[name] = primes


def load_session(path: Union[str, Path]) -> Session:
    path = Path(path)
    if not path.exists():
        raise SessionError(f"session file not found: {path}")
    try:
        text = path.read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as exc:
        raise SessionError(f"cannot read session file {path}: {exc}") from exc
    loader = _SessionLoader()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        loader.feed(raw, lineno)
    s = loader.session
    logger.info(
        "loaded session %s: %d rings, %d ideals, %d polys", path.name, len(s.rings), len(s.ideals), len(s.polys)
    )
    return s
