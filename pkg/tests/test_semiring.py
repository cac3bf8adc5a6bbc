import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from tpcalc import semiring as sr
from tpcalc.errors import LiteralError, NotRepresentable, TagMismatch

EXACT = [sr.get(t) for t in sr.EXACT_TAGS]
seeds = st.integers(0, 2**32 - 1)


def triple(ring, seed):
    rng = random.Random(seed)
    return ring.sample(rng), ring.sample(rng), ring.sample(rng)


@pytest.mark.parametrize("ring", EXACT, ids=lambda r: r.tag)
@given(seed=seeds)
def test_commutative_semiring_laws(ring, seed):
    a, b, c = triple(ring, seed)
    add, mul, eq = ring.add, ring.mul, ring.eq
    assert eq(add(a, add(b, c)), add(add(a, b), c))
    assert eq(mul(a, mul(b, c)), mul(mul(a, b), c))
    assert eq(add(a, b), add(b, a))
    assert eq(mul(a, b), mul(b, a))
    assert eq(mul(a, add(b, c)), add(mul(a, b), mul(a, c)))
    assert eq(add(a, ring.zero), a)
    assert eq(mul(a, ring.one), a)
    assert eq(mul(a, ring.zero), ring.zero)


@pytest.mark.parametrize("ring", EXACT, ids=lambda r: r.tag)
@given(seed=seeds)
def test_literal_round_trip(ring, seed):
    (a, _, _) = triple(ring, seed)
    assert ring.eq(ring.parse(ring.format(a)), a)


@pytest.mark.parametrize("ring", EXACT, ids=lambda r: r.tag)
@given(seed=seeds)
def test_sub_one_witness_and_canonical_choice(ring, seed):
    (a, b, _) = triple(ring, seed)
    v = ring.add(a, ring.one)
    s = ring.sub_one(v)
    assert ring.eq(ring.add(s, ring.one), v)
    # canon_plus_one picks one representative per class of s + 1
    c = ring.canon_plus_one(s)
    assert ring.eq(ring.add(c, ring.one), v)
    if ring.eq(ring.add(b, ring.one), v):
        assert ring.eq(ring.canon_plus_one(b), c)


def test_sub_one_failures():
    with pytest.raises(NotRepresentable):
        sr.NAT.sub_one(0)
    with pytest.raises(NotRepresentable):
        sr.QNN.sub_one(Fraction(1, 2))
    with pytest.raises(NotRepresentable):
        sr.BOOL.sub_one(0)
    assert sr.Q.sub_one(Fraction(0)) == -1


def test_bool_is_not_cancellative_and_collapses_plus_one():
    assert not sr.BOOL.is_cancellative
    assert sr.BOOL.add(0, 1) == sr.BOOL.add(1, 1)
    assert sr.BOOL.canon_plus_one(1) == sr.BOOL.canon_plus_one(0) == 0


def test_literals():
    assert sr.QI.format(sr.QI.parse("1/2+3i")) == "1/2+3i"
    assert sr.QR2.format(sr.QR2.parse("0+1/2 r2")) == "0+1/2 r2"
    assert sr.Q.parse("-3/4") == Fraction(-3, 4)
    assert sr.NAT.parse("7") == 7
    for ring, bad in [(sr.NAT, "-1"), (sr.QNN, "-1/2"), (sr.BOOL, "2"), (sr.Q, "x")]:
        with pytest.raises(LiteralError):
            ring.parse(bad)


def test_tagged_sum():
    xs = [sr.Q.scalar(1), sr.Q.scalar("1/2")]
    assert sr.sum(xs).value == Fraction(3, 2)
    with pytest.raises(TagMismatch):
        sr.sum([sr.Q.scalar(1), sr.NAT.scalar(1)])
    with pytest.raises(TagMismatch):
        sr.sum([])
    assert sr.sum([], "nat").value == 0


def test_sqrt2_and_gaussian_arithmetic():
    r2 = sr.Sqrt2Rat(Fraction(0), Fraction(1))
    assert r2 * r2 == sr.Sqrt2Rat(Fraction(2), Fraction(0))
    i = sr.GaussRat(Fraction(0), Fraction(1))
    assert i * i == sr.GaussRat(Fraction(-1), Fraction(0))


def test_float_ring_is_inexact():
    assert not sr.F64.exact
    assert "f64" not in sr.EXACT_TAGS
    assert sr.F64.eq(0.1 + 0.2, 0.3)


def test_unknown_tag():
    with pytest.raises(LiteralError):
        sr.get("reals")
