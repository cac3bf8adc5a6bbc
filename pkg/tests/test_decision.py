import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from helpers import random_diagram, random_matrix, small_obj
from tpcalc import semiring as sr
from tpcalc.colors import BIT, ONE, Plus, Tensor, dim
from tpcalc.decision import (
    color_of, embed, equiv, iso_diagram, matrix_diagram, normalize, psi, synthesize,
    synthesize_full, to_single_color,
)
from tpcalc.diagram import Empty, Id, Ten, Unit, or_lazy, or_strict, scl
from tpcalc.errors import NotRepresentable, RefusedError, ShapeError, TypeMismatch
from tpcalc.semantics import SemMatrix, eval, eval_full, product

seeds = st.integers(0, 2**32 - 1)


@given(seed=seeds)
def test_iso_is_identity_on_names(seed):
    x = small_obj(random.Random(seed), max_wires=3)
    d = iso_diagram(x)
    assert d.cod == (ONE,) * dim(x)
    # each name goes to exactly one singleton name of the unit wires
    m = eval(d).rows()
    hits = [[i for i, r in enumerate(m) if r[j] != 0] for j in range(dim(x))]
    assert all(len(h) == 1 and m[h[0]][j] == 1 for j, h in enumerate(hits))
    assert len({h[0] for h in hits}) == dim(x)


@given(seed=seeds)
def test_synthesis_round_trip(seed):
    rng = random.Random(seed)
    dom, cod = small_obj(rng, 2, depth=2), small_obj(rng, 2, depth=2)
    m = random_matrix(rng, sr.Q, dim(cod), dim(dom))
    nf = synthesize(m, dom, cod)
    assert nf.diagram.dom == dom and nf.diagram.cod == cod
    assert eval(nf.diagram).entries == m.entries


def test_synthesis_examples():
    empty = synthesize(SemMatrix.from_rows("q", [], 0), (), ())
    assert eval(empty.diagram).shape == (0, 0)
    assert equiv(empty.diagram, Empty())
    one = Fraction(1)
    nf = synthesize(SemMatrix.from_rows("q", [[one, 0 * one, 0 * one]]), (ONE, ONE), (Tensor(ONE, ONE),))
    assert equiv(nf.diagram, Ten(ONE, ONE))
    with pytest.raises(ShapeError):
        synthesize(SemMatrix.from_rows("q", [[one]]), (BIT,), (BIT,))


def test_full_synthesis():
    nf = synthesize_full(eval_full(Unit(), "nat"), (), (ONE,))
    assert eval_full(nf.diagram, "nat").rows() == [[1], [1]]
    assert equiv(nf.diagram, Unit(), "nat")
    # over nat the corner must be of the form c + 1
    with pytest.raises(NotRepresentable):
        synthesize_full(SemMatrix.from_rows("nat", [[0]]), (), ())


@given(seed=seeds, functional=st.booleans())
def test_normal_form_is_canonical(seed, functional):
    rng = random.Random(seed)
    d = random_diagram(rng, layers=4, functional=functional)
    nf = normalize(d)
    assert equiv(d, nf.diagram)
    assert normalize(nf.diagram).diagram == nf.diagram


def test_normal_form_forgets_syntax():
    assert normalize(Id(BIT)).diagram == normalize(Id(BIT) >> Id(BIT)).diagram
    assert normalize(scl(2, ONE) >> scl(3, ONE)).diagram == normalize(scl(6, ONE)).diagram


def test_equiv_witness_and_refusals():
    v = equiv(or_strict(), or_lazy())
    assert not v
    assert v.describe().startswith("distinct: at output")
    assert v.left != v.right
    with pytest.raises(RefusedError):
        equiv(Id(BIT), Id(BIT), "f64")
    with pytest.raises(TypeMismatch):
        equiv(Id(BIT), Id(ONE))


@given(seed=seeds)
def test_matrix_diagram_respects_products(seed):
    rng = random.Random(seed)
    a = random_matrix(rng, sr.Q, 3, 2)
    b = random_matrix(rng, sr.Q, 2, 4)
    x, y, z = Plus(BIT, BIT), BIT, Plus(BIT, ONE)
    d = synthesize(b, [x], [y]).diagram >> synthesize(a, [y], [z]).diagram
    assert eval(d).entries == product(a, b).entries
    assert matrix_diagram(a).dom == (ONE, ONE)


@given(seed=seeds)
def test_single_color_internal_language(seed):
    rng = random.Random(seed)
    x = small_obj(rng, 3, depth=2)
    assert psi(x).dom == (color_of(x),) and psi(x).cod == x
    assert eval(psi(x)).entries == SemMatrix.identity("q", dim(x)).entries
    d = random_diagram(rng, layers=3, functional=False)
    s = to_single_color(d)
    assert eval_full(s).entries == eval_full(d).entries
    assert equiv(embed(s, d.dom, d.cod), d)
