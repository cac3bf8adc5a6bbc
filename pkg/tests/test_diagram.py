import random

import pytest
from hypothesis import given, strategies as st

from helpers import random_diagram
from tpcalc.colors import BIT, ONE, ZERO, Plus, Tensor
from tpcalc.decision import equiv, iso_diagram
from tpcalc.diagram import (
    Adapt, Contr, Empty, Id, Mirror, Null, Par, PlusG, Seq, Swap, Ten, Unit, Circuit, cap, cup,
    disjunction, ids, is_functional, matrix_on_bit, mirror, n_contraction, or_strict, permutation,
    scalars, scl, size, spider, switch_dup, switch_single, value_bot,
)
from tpcalc.errors import TypeMismatch
from tpcalc.semantics import eval

seeds = st.integers(0, 2**32 - 1)
A, B = BIT, Tensor(ONE, BIT)


def test_generator_boundaries():
    assert (Id(A).dom, Id(A).cod) == ((A,), (A,))
    assert (Swap(A, B).dom, Swap(A, B).cod) == ((A, B), (B, A))
    assert (Ten(A, B).dom, Ten(A, B).cod) == ((A, B), (Tensor(A, B),))
    assert (PlusG(A, B).dom, PlusG(A, B).cod) == ((A, B), (Plus(A, B),))
    assert (Contr(A).dom, Contr(A).cod) == ((A, A), (A,))
    assert (Null(A).dom, Null(A).cod) == ((), (A,))
    assert (Unit().dom, Unit().cod) == ((), (ONE,))
    assert (scl(2, A).dom, scl(2, A).cod) == ((A,), (A,))
    a2 = Tensor(Tensor(ONE, ONE), ONE)
    assert (Adapt(Tensor(ONE, Tensor(ONE, ONE)), a2).cod) == (a2,)
    assert (Empty().dom, Empty().cod) == ((), ())
    m = mirror(Ten(A, B))
    assert (m.dom, m.cod) == ((Tensor(A, B),), (A, B))
    p = Par(Ten(A, B), Null(A))
    assert (p.dom, p.cod) == ((A, B), (Tensor(A, B), A))


def test_composition_is_typed():
    with pytest.raises(TypeMismatch):
        Seq(Ten(ONE, ONE), mirror(PlusG(ONE, ONE)))
    with pytest.raises(TypeMismatch):
        Adapt(Plus(ONE, BIT), Plus(BIT, Tensor(BIT, ONE)))
    with pytest.raises(TypeMismatch):
        Id("not a color")


def test_functional_flag():
    assert is_functional(or_strict())
    assert not is_functional(Unit())
    assert not is_functional(mirror(Unit()) @ Id(ONE))
    assert not is_functional(Id(ONE) >> (Id(ONE) @ Unit()) >> Contr(ONE))


@given(seed=seeds)
def test_mirror_is_an_involution(seed):
    d = random_diagram(random.Random(seed), layers=5, functional=False)
    assert mirror(mirror(d)) == d
    m = mirror(d)
    assert (m.dom, m.cod) == (d.cod, d.dom)


def test_mirror_distributes():
    d, e = Ten(ONE, ONE), mirror(Ten(ONE, ONE))
    assert mirror(Seq(d, e)) == Seq(mirror(e), mirror(d))
    assert mirror(Par(d, Id(A))) == Par(mirror(d), Id(A))
    assert mirror(Swap(A, B)) == Swap(B, A)
    assert mirror(Id(A)) == Id(A)
    assert mirror(scl(3, A)) == scl(3, A)
    assert isinstance(mirror(Unit()), Mirror)


@given(seed=seeds)
def test_prop_laws_hold_semantically(seed):
    rng = random.Random(seed)
    d = random_diagram(rng, layers=2)
    e = random_diagram(rng, dom=d.cod, layers=2)
    f = random_diagram(rng, dom=e.cod, layers=2)
    assert eval(Seq(Seq(d, e), f)) == eval(Seq(d, Seq(e, f)))
    assert eval(ids(d.dom) >> d) == eval(d) == eval(d >> ids(d.cod))
    d2 = random_diagram(rng, layers=2)
    e2 = random_diagram(rng, dom=d2.cod, layers=2)
    assert eval((d @ d2) >> (e @ e2)) == eval((d >> e) @ (d2 >> e2))


def test_identity_and_swap_laws():
    assert eval(Swap(A, B) >> Swap(B, A)) == eval(Id(A) @ Id(B))
    # naturality of the swap, with a scaled negation on A = 1+1
    f = mirror(PlusG(ONE, ONE)) >> Swap(ONE, ONE) >> PlusG(ONE, ONE) >> scl(3, A)
    assert eval((f @ Id(B)) >> Swap(A, B)) == eval(Swap(A, B) >> (Id(B) @ f))


def test_switch_variants_agree_on_identities():
    assert equiv(switch_dup(Id(BIT), Id(BIT)), switch_single(Id(BIT), Id(BIT)))


def test_worked_example_types():
    assert value_bot() == Null(BIT)
    assert or_strict().dom == (BIT, BIT) and or_strict().cod == (BIT,)
    u = matrix_on_bit([[1, 2], [3, 4]])
    assert eval(u).rows() == [[1, 2], [3, 4]]


def test_scalars_and_size():
    d = scl(2, ONE) >> scl("1/2", ONE, "qnn")
    assert scalars(d) == {"q", "qnn"}
    assert size(d) == 2
    assert size(Id(ONE) @ Ten(ONE, ONE)) == 2


def test_derived_builders():
    assert eval(n_contraction(ONE, 3)).rows() == [[0, 0, 0, 0, 1, 1, 1]]
    assert eval(disjunction([ONE, ONE])).rows() == [[0, 0, 0], [0, 1, 0], [0, 0, 1]]
    assert cap(A).dom == (A, A) and cap(A).cod == ()
    assert cup(A) == mirror(cap(A))
    s = spider([ONE, ONE], [Tensor(ONE, ONE)])
    assert eval(s).rows() == [[1, 0, 0]]
    assert iso_diagram([BIT, BIT]).cod == (ONE,) * 8


def test_circuit_and_permutation():
    c = Circuit([ONE, BIT])
    x, y = c.inputs
    (z,) = c.apply(Ten(ONE, BIT), [x, y])
    d = c.build([z])
    assert d.dom == (ONE, BIT) and d.cod == (Tensor(ONE, BIT),)
    p = permutation([ONE, BIT, ZERO], [2, 0, 1])
    assert p.dom == (ONE, BIT, ZERO) and p.cod == (ZERO, ONE, BIT)
