import math
import random

from hypothesis import given, strategies as st

from helpers import small_obj
from tpcalc.colors import (
    BIT, ONE, ZERO, Plus, Tensor, canon_color, depth, dim, enum, enum_full, equivalent,
    format_name, leaves, name_index, reassociate, regroup_perm, sample_color,
)

seeds = st.integers(0, 2**32 - 1)


def color_dim_oracle(c):
    # counts leaves of the distributive normal form directly
    if c == ZERO:
        return 0
    if c == ONE:
        return 1
    a, b = color_dim_oracle(c.left), color_dim_oracle(c.right)
    return a + b if isinstance(c, Plus) else a * b


@given(seed=seeds)
def test_dim_matches_closed_form(seed):
    x = small_obj(random.Random(seed), max_wires=4, depth=3)
    assert dim(x) == math.prod(color_dim_oracle(c) + 1 for c in x) - 1
    assert len(enum(x)) == dim(x)
    assert len(set(enum(x))) == dim(x)


@given(seed=seeds)
def test_name_index_agrees_with_enumeration(seed):
    x = small_obj(random.Random(seed), max_wires=4)
    for i, name in enumerate(enum_full(x)):
        assert name_index(x, name) == i


@given(seed=seeds)
def test_leaves_count_dimension(seed):
    c = sample_color(random.Random(seed), 4)
    assert len(leaves(c)) == dim(c) == color_dim_oracle(c)


@given(seed=seeds)
def test_reassociation_preserves_class(seed):
    rng = random.Random(seed)
    c = sample_color(rng, 4)
    d = reassociate(c, rng)
    assert equivalent(c, d)
    assert canon_color(canon_color(c)) == canon_color(c)
    assert dim(c) == dim(d)


def test_three_wire_enumeration_order():
    assert enum([ONE, ONE, ONE]) == [
        (0, 0, 0), (0, None, 0), (None, 0, 0),
        (0, 0, None), (0, None, None), (None, 0, None), (None, None, 0),
    ]


def test_two_bits():
    x = (BIT, BIT)
    assert dim(x) == 8
    names = [format_name(x, n) for n in enum(x)]
    assert names == ["{1=L,2=L}", "{1=L,2=R}", "{1=R,2=L}", "{1=R,2=R}",
                     "{1=L}", "{1=R}", "{2=L}", "{2=R}"]
    assert enum_full(x)[-1] == (None, None)


def test_canon_is_not_commutative_or_distributive():
    a = Plus(ONE, Tensor(ONE, ONE))
    assert equivalent(Plus(ONE, BIT), Plus(BIT, Tensor(ONE, ONE)))
    assert not equivalent(Plus(ONE, Tensor(BIT, BIT)), Plus(Tensor(BIT, BIT), ONE))
    assert equivalent(Tensor(ONE, a), a)
    assert equivalent(Plus(ZERO, a), a)
    assert not equivalent(Tensor(BIT, BIT), Plus(BIT, BIT))


def test_depth_counts_leaves_as_one():
    assert depth(ONE) == 1
    assert depth(BIT) == 2
    assert depth(Tensor(BIT, ONE)) == 3


@given(seed=seeds)
def test_regroup_is_a_permutation(seed):
    rng = random.Random(seed)
    left, right = small_obj(rng, 2), small_obj(rng, 2)
    for mode, n in (("functional", dim(left + right)), ("full", dim(left + right) + 1)):
        perm = regroup_perm(left, right, mode)
        assert sorted(perm) == list(range(n))


def test_regroup_three_unit_wires():
    assert regroup_perm([ONE], [ONE, ONE]) == [0, 3, 1, 4, 2, 5, 6]
