import sys
from pathlib import Path
from typing import Callable

import numpy as np
import pytest

ROOT = Path(__file__).resolve().parents[1]
if str(ROOT) not in sys.path:
    sys.path.insert(0, str(ROOT))

from algebra.groebner import Ideal  # noqa: E402
from algebra.parser import parse_poly  # noqa: E402
from algebra.polyring import MonomialOrder, PolyRing, PrimeField  # noqa: E402


@pytest.fixture
def s_wy() -> PolyRing:
    """F_2[W, Y], the ring of the non-reduced running example."""
    return PolyRing(PrimeField(2), ("W", "Y"))


@pytest.fixture
def s_xy() -> PolyRing:
    return PolyRing(PrimeField(2), ("X", "Y"))


@pytest.fixture
def s_xy3() -> PolyRing:
    return PolyRing(PrimeField(3), ("X", "Y"))


@pytest.fixture
def s_xy_lex() -> PolyRing:
    return PolyRing(PrimeField(2), ("X", "Y"), MonomialOrder.lex())


@pytest.fixture
def ideal() -> Callable[..., Ideal]:
    def build(ring: PolyRing, *texts: str) -> Ideal:
        return Ideal(ring, [parse_poly(t, ring) for t in texts])

    return build


@pytest.fixture
def poly():
    return parse_poly


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(20240611)
