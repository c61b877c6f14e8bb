"""Tests for level-bounded tight-closure certificates."""

import pytest

from algebra.errors import InsufficientDataError, PreconditionError, RingMismatchError
from algebra.groebner import Ideal, ideal_member
from algebra.ideal_ops import ideal_sum
from algebra.sampling import SampleConfig, random_ideal, random_polynomial
from fsing.tightclosure import (
    QuotientRingCtx,
    TightClosureQuery,
    in_R_circ,
    is_nilpotent,
    r0_certificate,
    tc_certificate,
)
from fsing.tightclosure import test_element_certificate as element_certificate


@pytest.fixture
def fat_ctx(s_wy, ideal) -> QuotientRingCtx:
    """S/a with a = (W^2, WY), whose only minimal prime is (W)."""
    return QuotientRingCtx(s_wy, ideal(s_wy, "W^2", "W*Y"), [ideal(s_wy, "W")])


@pytest.fixture
def node_ctx(s_xy, ideal) -> QuotientRingCtx:
    return QuotientRingCtx(s_xy, ideal(s_xy, "X*Y"), [ideal(s_xy, "X"), ideal(s_xy, "Y")])


def test_test_element_family_passes(s_wy, fat_ctx, ideal, poly) -> None:
    family = [Ideal.zero(s_wy), ideal(s_wy, "Y"), ideal(s_wy, "Y^2"), ideal(s_wy, "W + Y")]
    closures = [
        [poly("W", s_wy)],
        [poly("W", s_wy), poly("Y", s_wy)],
        [poly("W", s_wy), poly("Y^2", s_wy)],
        [poly("W", s_wy), poly("W + Y", s_wy)],
    ]
    report = element_certificate(poly("Y", s_wy), family, closures, 6, fat_ctx)
    assert report.all_pass
    assert len(report.checks) == 7
    assert all(len(chk.report.levels) == 7 for chk in report.checks)
    summary = report.to_dict()
    assert summary["failures"] == 0
    assert summary["checks"][0] == {
        "ideal": 0,
        "element": "W",
        "levels": [True] * 7,
        "all_pass": True,
        "first_failure": None,
    }


def test_multiples_of_a_passing_witness_pass(s_wy, fat_ctx, ideal, poly) -> None:
    family = [ideal(s_wy, "Y"), ideal(s_wy, "W + Y")]
    closures = [[poly("W", s_wy)], [poly("W", s_wy), poly("W + Y", s_wy)]]
    for c in ("Y", "Y^2", "Y^3 + W*Y"):
        assert element_certificate(poly(c, s_wy), family, closures, 4, fat_ctx).all_pass


def test_random_multiples_never_lose_levels(s_wy, fat_ctx, ideal, poly, rng) -> None:
    cases = [
        (poly("W", s_wy), ideal(s_wy, "Y")),
        (poly("W + Y", s_wy), ideal(s_wy, "W + Y")),
        (poly("Y", s_wy), ideal(s_wy, "Y^2")),
    ]
    for r, b in cases:
        base = tc_certificate(TightClosureQuery(r, b, poly("Y", s_wy), N=3), fat_ctx).levels
        for _ in range(10):
            s = random_polynomial(s_wy, rng, max_degree=3, max_terms=3)
            scaled = tc_certificate(TightClosureQuery(r, b, s * poly("Y", s_wy), N=3), fat_ctx).levels
            assert all(after or not before for before, after in zip(base, scaled))


def test_level_zero_is_plain_membership(s_xy3, ideal, rng) -> None:
    a = ideal(s_xy3, "X^2*Y")
    ctx = QuotientRingCtx(s_xy3, a)
    cfg = SampleConfig(max_gens=2, max_degree=2, max_terms=2)
    for _ in range(25):
        b = random_ideal(s_xy3, rng, cfg)
        r = random_polynomial(s_xy3, rng, max_degree=2, max_terms=3)
        c = random_polynomial(s_xy3, rng, max_degree=2, max_terms=2)
        levels = tc_certificate(TightClosureQuery(r, b, c, N=1), ctx).levels
        assert levels[0] == ideal_member(c * r, ideal_sum(b, a))


def test_certificate_reports_first_failure(s_wy, fat_ctx, ideal, poly) -> None:
    query = TightClosureQuery(poly("Y", s_wy), ideal(s_wy, "Y^2"), poly("Y", s_wy), N=3)
    report = tc_certificate(query, fat_ctx)
    assert report.levels == [True, False, False, False]
    assert report.first_failure == 1
    assert not report.all_pass


def test_elements_of_b_always_pass(s_xy, node_ctx, ideal, poly) -> None:
    b = ideal(s_xy, "X + Y^2", "Y^3")
    for r in ("X + Y^2", "X*Y^3 + Y^3"):
        query = TightClosureQuery(poly(r, s_xy), b, poly("X + Y", s_xy), N=3)
        assert tc_certificate(query, node_ctx).all_pass


def test_failing_checks_are_listed(s_wy, fat_ctx, ideal, poly) -> None:
    report = element_certificate(poly("Y", s_wy), [ideal(s_wy, "Y^2")], [[poly("Y", s_wy)]], 2, fat_ctx)
    assert not report.all_pass
    assert [chk.ideal_index for chk in report.failures] == [0]
    assert report.to_dict()["failures"] == 1


def test_element_certificate_validation(s_wy, fat_ctx, ideal, poly) -> None:
    b = ideal(s_wy, "Y")
    with pytest.raises(PreconditionError, match="empty"):
        element_certificate(poly("Y", s_wy), [], [], 3, fat_ctx)
    with pytest.raises(PreconditionError, match="one closure list"):
        element_certificate(poly("Y", s_wy), [b], [], 3, fat_ctx)
    with pytest.raises(PreconditionError, match="minimal prime"):
        element_certificate(poly("W", s_wy), [b], [[poly("W", s_wy)]], 3, fat_ctx)


def test_query_validation(s_wy, s_xy, ideal, poly) -> None:
    with pytest.raises(PreconditionError):
        TightClosureQuery(poly("Y", s_wy), ideal(s_wy, "Y"), poly("Y", s_wy), N=0)
    with pytest.raises(RingMismatchError):
        TightClosureQuery(poly("X", s_xy), ideal(s_wy, "Y"), poly("Y", s_wy))


def test_in_R_circ(s_wy, s_xy, fat_ctx, node_ctx, poly) -> None:
    assert in_R_circ(poly("Y", s_wy), fat_ctx)
    assert in_R_circ(poly("Y + 1", s_wy), fat_ctx)
    assert not in_R_circ(poly("W", s_wy), fat_ctx)
    assert in_R_circ(poly("X + Y", s_xy), node_ctx)
    assert not in_R_circ(poly("X", s_xy), node_ctx)


def test_missing_primes_are_reported(s_wy, ideal, poly) -> None:
    ctx = QuotientRingCtx(s_wy, ideal(s_wy, "W^2", "W*Y"))
    with pytest.raises(InsufficientDataError):
        in_R_circ(poly("Y", s_wy), ctx)
    with pytest.raises(InsufficientDataError):
        r0_certificate(ctx, [poly("Y", s_wy)])


def test_quotient_context_validation(s_wy, s_xy, ideal) -> None:
    a = ideal(s_xy, "X*Y")
    with pytest.raises(PreconditionError):
        QuotientRingCtx(s_xy, Ideal.unit(s_xy))
    with pytest.raises(PreconditionError, match="does not contain"):
        QuotientRingCtx(s_xy, a, [ideal(s_xy, "X + 1")])
    with pytest.raises(PreconditionError, match="comparable"):
        QuotientRingCtx(s_xy, a, [ideal(s_xy, "X"), ideal(s_xy, "X", "Y")])
    with pytest.raises(PreconditionError):
        QuotientRingCtx(s_xy, a, [Ideal.unit(s_xy)])
    with pytest.raises(PreconditionError, match="at least one minimal prime"):
        QuotientRingCtx(s_xy, a, [])
    with pytest.raises(RingMismatchError):
        QuotientRingCtx(s_wy, a)


def test_nilpotent(s_wy, fat_ctx, poly) -> None:
    assert is_nilpotent(poly("W", s_wy), fat_ctx) is True
    assert is_nilpotent(poly("W + W*Y", s_wy), fat_ctx, k_max=1) is True
    assert is_nilpotent(poly("Y", s_wy), fat_ctx, k_max=3) is None
    assert is_nilpotent(poly("W + Y", s_wy), fat_ctx, k_max=3) is None
    with pytest.raises(PreconditionError):
        is_nilpotent(poly("W", s_wy), fat_ctx, k_max=0)


def test_nilpotent_stops_at_exponent_cap(s_wy, fat_ctx, poly) -> None:
    assert is_nilpotent(poly("Y", s_wy), fat_ctx, k_max=22) is None


def test_r0_examples(s_wy, s_xy, fat_ctx, node_ctx, ideal, poly) -> None:
    assert r0_certificate(fat_ctx, [poly("Y", s_wy)])
    assert r0_certificate(node_ctx, [poly("Y", s_xy), poly("X", s_xy)])
    embedded = QuotientRingCtx(s_xy, ideal(s_xy, "X^2*Y"), [ideal(s_xy, "X"), ideal(s_xy, "Y")])
    assert not r0_certificate(embedded, [poly("Y", s_xy), poly("X", s_xy)])


def test_r0_separator_validation(s_xy, node_ctx, poly) -> None:
    with pytest.raises(PreconditionError, match="expected 2"):
        r0_certificate(node_ctx, [poly("Y", s_xy)])
    with pytest.raises(PreconditionError, match="own prime"):
        r0_certificate(node_ctx, [poly("X", s_xy), poly("X", s_xy)])
    with pytest.raises(PreconditionError, match="other minimal prime"):
        r0_certificate(node_ctx, [poly("Y + 1", s_xy), poly("X", s_xy)])
