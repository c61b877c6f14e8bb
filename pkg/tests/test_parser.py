"""Tests for the expression grammar and canonical printing."""

import pytest

from algebra.errors import ExponentOverflowError, ParseError
from algebra.parser import format_poly, parse_poly, split_generators, tokenize
from algebra.polyring import PolyRing, PrimeField
from algebra.sampling import random_polynomial


def test_parse_examples(s_wy, s_xy) -> None:
    assert parse_poly("0", s_wy).is_zero()
    assert parse_poly("X + X", s_xy).is_zero()
    assert str(parse_poly("(X+Y)^2", s_xy)) == "X^2 + Y^2"


def test_integer_literals_reduce_mod_p(s_xy3) -> None:
    assert str(parse_poly("5*X + 7", s_xy3)) == "2*X + 1"
    assert parse_poly("3", s_xy3).is_zero()


def test_subtraction_and_precedence(s_xy3) -> None:
    f = parse_poly("X*Y^2 - 2*X + (Y - 1)*X", s_xy3)
    assert str(f) == "X*Y^2 + X*Y"


def test_unknown_variable_reports_position(s_wy) -> None:
    with pytest.raises(ParseError, match="unknown variable 'Z'") as err:
        parse_poly("W + Z", s_wy)
    assert err.value.position == 4


@pytest.mark.parametrize("text", ["X +", "(X", "X ^ Y", "X Y", "-X", "X $ Y", ""])
def test_syntax_errors(text, s_xy) -> None:
    with pytest.raises(ParseError):
        parse_poly(text, s_xy)


def test_exponent_overflow(s_xy) -> None:
    with pytest.raises(ExponentOverflowError):
        parse_poly("X^2000000", s_xy)
    # constants may be raised to any power
    assert parse_poly("1^2000000", s_xy) == s_xy.one()


def test_tokenize_positions() -> None:
    kinds = [(t.kind, t.text, t.pos) for t in tokenize("2*X^3")]
    assert kinds == [("int", "2", 0), ("op", "*", 1), ("var", "X", 2), ("op", "^", 3), ("int", "3", 4), ("end", "", 5)]


def test_split_generators() -> None:
    assert split_generators("W^2, W*Y") == ["W^2", "W*Y"]
    assert split_generators("(X^2)") == ["X^2"]
    assert split_generators("(X+Y)*(X-Y), Y") == ["(X+Y)*(X-Y)", "Y"]
    assert split_generators("  ") == []
    with pytest.raises(ParseError):
        split_generators("X,,Y")


def test_format_poly(s_xy3) -> None:
    assert format_poly(s_xy3.zero()) == "0"
    assert format_poly(parse_poly("2*X^2*Y + X + 1", s_xy3)) == "2*X^2*Y + X + 1"


def test_print_parse_round_trip(rng) -> None:
    for p in (2, 3, 5):
        ring = PolyRing(PrimeField(p), ("X", "Y", "Z"))
        for _ in range(25):
            f = random_polynomial(ring, rng, max_degree=5, max_terms=6)
            assert parse_poly(format_poly(f), ring) == f
