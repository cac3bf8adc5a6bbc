"""Executable catalog of the equational theory and a randomized soundness harness.

Each schema instantiates to a pair of diagrams with equal boundaries.  A
schema is sound when both sides have the same full semantics for every
choice of colors and scalars; ``fuzz`` samples such choices.
"""

from __future__ import annotations

import json
import random
import time
from dataclasses import dataclass, field
from typing import Any, Callable, Optional, Sequence

from . import semiring as sr
from .colors import ONE, ZERO, Color, Tensor, Plus, dim, reassociate, sample_color
from .decision import Verdict, equiv
from .diagram import (
    Adapt, Contr, Diagram, Empty, Id, Null, PlusG, Scal, Swap, Ten, Unit,
    cap, copies, cup, disjunction, mirror, n_contraction, n_plus, n_tensor, fold_plus,
    fold_tensor, seq_all, spider,
)
from .errors import TpcError

MAX_DIM = 64


class SignatureError(TpcError):
    pass


# shorthand used by the catalog below
I, S, T, P, C, N, U = Id, Swap, Ten, PlusG, Contr, Null, Unit
m = mirror


def _sc(ring: sr.Semiring, v: Any, a: Color) -> Diagram:
    return Scal(sr.Scalar(ring.tag, v), a)


def _s(*ds: Diagram) -> Diagram:
    return seq_all(list(ds))


@dataclass(frozen=True)
class Ctx:
    """What an instantiator gets: colors, scalars, the ring and an rng."""

    colors: tuple
    scalars: tuple
    ring: sr.Semiring
    rng: random.Random

    def sc(self, v: Any, a: Color) -> Diagram:
        return _sc(self.ring, v, a)

    def like(self, a: Color) -> Color:
        return reassociate(a, self.rng)


@dataclass(frozen=True)
class AxiomSchema:
    label: str
    group: str
    color_slots: int
    scalar_slots: int
    build: Callable[[Ctx], tuple]
    fragment: str = "functional"
    derived: bool = False
    precondition: Optional[Callable[[sr.Semiring, tuple], bool]] = None
    scalar_sampler: Optional[Callable[[sr.Semiring, random.Random], tuple]] = None
    mirrored: bool = False

    def instantiate(self, colors: Sequence[Color], scalars: Sequence[Any] = (),
                    semiring="q", rng: Optional[random.Random] = None) -> tuple:
        ring = sr.get(semiring)
        colors, scalars = tuple(colors), tuple(scalars)
        if len(colors) != self.color_slots or len(scalars) != self.scalar_slots:
            raise SignatureError(
                f"{self.label} takes {self.color_slots} colors and {self.scalar_slots} scalars, "
                f"got {len(colors)} and {len(scalars)}")
        scalars = tuple(ring.coerce(v) for v in scalars)
        if self.precondition is not None and not self.precondition(ring, scalars):
            raise SignatureError(f"{self.label}: scalars violate the side condition")
        lhs, rhs = self.build(Ctx(colors, scalars, ring, rng or random.Random(0)))
        if self.mirrored:
            lhs, rhs = m(lhs), m(rhs)
        return lhs, rhs

    def sample_scalars(self, ring: sr.Semiring, rng: random.Random) -> tuple:
        if self.scalar_sampler is not None:
            return self.scalar_sampler(ring, rng)
        return tuple(ring.sample(rng) for _ in range(self.scalar_slots))

    def mirror(self) -> AxiomSchema:
        label = self.label[1:] if self.mirrored else "~" + self.label
        return AxiomSchema(label, self.group, self.color_slots, self.scalar_slots, self.build,
                           self.fragment, self.derived, self.precondition,
                           self.scalar_sampler, not self.mirrored)


def _can_pre(ring: sr.Semiring, sc: tuple) -> bool:
    s, t = sc
    return ring.eq(ring.add(s, ring.one), ring.add(t, ring.one))


def _can_sample(ring: sr.Semiring, rng: random.Random) -> tuple:
    s = ring.sample(rng)
    # over a cancellative ring s + 1 = t + 1 forces t = s
    return (s, ring.sample(rng) if ring.tag == "bool" else s)


def _two(ring: sr.Semiring) -> Any:
    return ring.add(ring.one, ring.one)


# ---- main equations

def _main() -> list:
    def distrib(c: Ctx):
        a, b, x = c.colors
        lhs = (P(a, b) @ I(x)) >> T(Plus(a, b), x)
        rhs = _s(I(a) @ I(b) @ m(C(x)),
                 I(a) @ S(b, x) @ I(x),
                 T(a, x) @ T(b, x),
                 m(T(a, x)) @ m(T(b, x)),
                 I(a) @ S(x, b) @ I(x),
                 P(a, b) @ C(x),
                 T(Plus(a, b), x))
        return lhs, rhs

    def mix(c: Ctx):
        a, b = c.colors
        rhs = _s(m(C(a)) @ m(C(b)),
                 I(a) @ S(a, b) @ I(b),
                 T(a, b) @ P(a, b),
                 m(T(a, b)) @ m(P(a, b)),
                 I(a) @ S(b, a) @ I(b),
                 C(a) @ C(b))
        return I(a) @ I(b), rhs

    def assoc_split(c: Ctx):
        a, b, x = c.colors
        lhs = (m(T(a, b)) @ I(x)) >> (I(a) @ T(b, x))
        rhs = _s(T(Tensor(a, b), x), Adapt(Tensor(Tensor(a, b), x), Tensor(a, Tensor(b, x))),
                 m(T(a, Tensor(b, x))))
        return lhs, rhs

    return [
        AxiomSchema("(⊗)", "main", 2, 0, lambda c: (m(T(*c.colors)) >> T(*c.colors),
                                                    I(Tensor(*c.colors)))),
        AxiomSchema("(⊕)", "main", 2, 0, lambda c: (m(P(*c.colors)) >> P(*c.colors),
                                                    I(Plus(*c.colors)))),
        AxiomSchema("(⊥)", "main", 2, 0, lambda c: (
            m(P(*c.colors)) >> T(*c.colors), m(N(Plus(*c.colors))) >> N(Tensor(*c.colors)))),
        AxiomSchema("(0)", "main", 0, 0, lambda c: (I(ZERO), m(N(ZERO)) >> N(ZERO))),
        AxiomSchema("(σ∇)", "main", 1, 0, lambda c: (S(c.colors[0], c.colors[0]) >> C(c.colors[0]),
                                                     C(c.colors[0]))),
        AxiomSchema("(N⊗)", "main", 3, 0, assoc_split),
        AxiomSchema("(X⊕)", "main", 2, 0, lambda c: (
            _s(P(*c.colors), m(P(*c.colors)), P(*c.colors)), P(*c.colors))),
        AxiomSchema("(⊕→∇)", "main", 3, 0, distrib),
        AxiomSchema("(mix)", "main", 2, 0, mix),
    ]


# ---- interaction with zero

def _zero() -> list:
    def unit_r(c: Ctx):
        (a,) = c.colors
        return (I(a) @ N(a)) >> C(a), I(a)

    def unit_l(c: Ctx):
        (a,) = c.colors
        return (N(a) @ I(a)) >> C(a), I(a)

    return [
        AxiomSchema("(⊗0)", "zero", 2, 0, lambda c: (
            (I(c.colors[0]) @ N(c.colors[1])) >> T(*c.colors),
            m(N(c.colors[0])) >> N(Tensor(*c.colors)))),
        AxiomSchema("(⊕0)", "zero", 2, 0, lambda c: (
            (N(c.colors[0]) @ N(c.colors[1])) >> P(*c.colors), N(Plus(*c.colors)))),
        AxiomSchema("(∇0)", "zero", 1, 0, lambda c: (
            (N(c.colors[0]) @ N(c.colors[0])) >> C(c.colors[0]), N(c.colors[0]))),
        AxiomSchema("(00)", "zero", 1, 0, lambda c: (N(c.colors[0]) >> m(N(c.colors[0])), Empty())),
        AxiomSchema("(0≈)", "zero", 1, 0, lambda c: _null_adapt(c)),
        AxiomSchema("(0R)", "zero", 1, 1, lambda c: (
            N(c.colors[0]) >> c.sc(c.scalars[0], c.colors[0]), N(c.colors[0]))),
        AxiomSchema("(ρ∇)", "zero", 1, 0, unit_r),
        AxiomSchema("(λ∇)", "zero", 1, 0, unit_l),
        AxiomSchema("[0⊗]", "zero", 2, 0, lambda c: (
            N(Tensor(*c.colors)) >> m(T(*c.colors)), N(c.colors[0]) @ N(c.colors[1])), derived=True),
        AxiomSchema("[X⊕0]", "zero", 2, 0, lambda c: (
            _s(I(c.colors[0]) @ N(c.colors[1]), P(*c.colors), m(P(*c.colors))),
            I(c.colors[0]) @ N(c.colors[1])), derived=True),
        AxiomSchema("[⊥∇]", "zero", 1, 0, lambda c: (
            m(C(c.colors[0])) >> T(c.colors[0], c.colors[0]),
            m(N(c.colors[0])) >> N(Tensor(c.colors[0], c.colors[0]))), derived=True),
    ]


def _null_adapt(c: Ctx):
    (a,) = c.colors
    b = c.like(a)
    return N(a) >> Adapt(a, b), N(b)


# ---- commutations of the contraction

def _contraction() -> list:
    def tensor_split(c: Ctx):
        a, b = c.colors
        lhs = C(Tensor(a, b)) >> m(T(a, b))
        rhs = _s(m(T(a, b)) @ m(T(a, b)), I(a) @ S(b, a) @ I(b), C(a) @ C(b))
        return lhs, rhs

    def into_tensor(c: Ctx):
        a, b = c.colors
        lhs = (C(a) @ I(b)) >> T(a, b)
        rhs = _s(I(a) @ I(a) @ m(C(b)), I(a) @ S(a, b) @ I(b), T(a, b) @ T(a, b), C(Tensor(a, b)))
        return lhs, rhs

    def into_plus(c: Ctx):
        a, b = c.colors
        lhs = (C(a) @ C(b)) >> P(a, b)
        rhs = _s(I(a) @ S(a, b) @ I(b), P(a, b) @ P(a, b), C(Plus(a, b)))
        return lhs, rhs

    def disj_plus(c: Ctx):
        a, b = c.colors
        lhs = _s(C(a) @ C(b), P(a, b), m(P(a, b)))
        rhs = disjunction([a, a, b, b]) >> (C(a) @ C(b))
        return lhs, rhs

    def adapt(c: Ctx):
        (a,) = c.colors
        b = c.like(a)
        return (Adapt(a, b) @ Adapt(a, b)) >> C(b), C(a) >> Adapt(a, b)

    return [
        AxiomSchema("(⊗∇)", "contraction", 2, 0, tensor_split),
        AxiomSchema("(∇⊗)", "contraction", 2, 0, into_tensor),
        AxiomSchema("(⊕∇)", "contraction", 2, 0, into_plus),
        AxiomSchema("(X⊕∇)", "contraction", 2, 0, disj_plus),
        AxiomSchema("(α∇)", "contraction", 1, 0, lambda c: (
            (C(c.colors[0]) @ I(c.colors[0])) >> C(c.colors[0]),
            (I(c.colors[0]) @ C(c.colors[0])) >> C(c.colors[0]))),
        AxiomSchema("(∇∇)", "contraction", 1, 0, lambda c: (
            m(C(c.colors[0])) >> C(c.colors[0]), c.sc(_two(c.ring), c.colors[0]))),
        AxiomSchema("(∇R)", "contraction", 1, 1, lambda c: (
            (c.sc(c.scalars[0], c.colors[0]) @ c.sc(c.scalars[0], c.colors[0])) >> C(c.colors[0]),
            C(c.colors[0]) >> c.sc(c.scalars[0], c.colors[0]))),
        AxiomSchema("(∇≈)", "contraction", 1, 0, adapt),
    ]


# ---- coherence of the adapters

def _coherence() -> list:
    def assoc_t(c: Ctx):
        a, b, x = c.colors
        lhs = _s(T(a, b) @ I(x), T(Tensor(a, b), x),
                 Adapt(Tensor(Tensor(a, b), x), Tensor(a, Tensor(b, x))))
        return lhs, (I(a) @ T(b, x)) >> T(a, Tensor(b, x))

    def assoc_p(c: Ctx):
        a, b, x = c.colors
        lhs = _s(P(a, b) @ I(x), P(Plus(a, b), x),
                 Adapt(Plus(Plus(a, b), x), Plus(a, Plus(b, x))))
        return lhs, (I(a) @ P(b, x)) >> P(a, Plus(b, x))

    def natural(node):
        def build(c: Ctx):
            a, b = c.colors
            a2, b2 = c.like(a), c.like(b)
            out = Tensor if node is T else Plus
            lhs = (Adapt(a, a2) @ Adapt(b, b2)) >> node(a2, b2)
            return lhs, node(a, b) >> Adapt(out(a, b), out(a2, b2))
        return build

    def compose(c: Ctx):
        (a,) = c.colors
        b, x = c.like(a), c.like(a)
        return Adapt(a, b) >> Adapt(b, x), Adapt(a, x)

    return [
        AxiomSchema("(α⊗)", "coherence", 3, 0, assoc_t),
        AxiomSchema("(α⊕)", "coherence", 3, 0, assoc_p),
        AxiomSchema("(⊗≈)", "coherence", 2, 0, natural(T)),
        AxiomSchema("(⊕≈)", "coherence", 2, 0, natural(P)),
        AxiomSchema("(ρ⊕)", "coherence", 1, 0, lambda c: (
            _s(I(c.colors[0]) @ N(ZERO), P(c.colors[0], ZERO), Adapt(Plus(c.colors[0], ZERO), c.colors[0])),
            I(c.colors[0]))),
        AxiomSchema("(λ⊕)", "coherence", 1, 0, lambda c: (
            _s(N(ZERO) @ I(c.colors[0]), P(ZERO, c.colors[0]), Adapt(Plus(ZERO, c.colors[0]), c.colors[0])),
            I(c.colors[0]))),
        AxiomSchema("(≈≈)", "coherence", 1, 0, compose),
        AxiomSchema("(≈)", "coherence", 1, 0, lambda c: (Adapt(c.colors[0], c.colors[0]), I(c.colors[0]))),
    ]


# ---- the semiring as scalars

def _scalars() -> list:
    def plus(c: Ctx):
        (a,), (s, t) = c.colors, c.scalars
        lhs = _s(m(C(a)), c.sc(s, a) @ c.sc(t, a), C(a))
        return lhs, c.sc(c.ring.add(s, t), a)

    def through(node):
        def build(c: Ctx):
            (a, b), (s,) = c.colors, c.scalars
            out = Tensor(a, b) if node is T else Plus(a, b)
            lhs = (c.sc(s, a) @ (I(b) if node is T else c.sc(s, b))) >> node(a, b)
            return lhs, node(a, b) >> c.sc(s, out)
        return build

    def adapt(c: Ctx):
        (a,), (s,) = c.colors, c.scalars
        b = c.like(a)
        return c.sc(s, a) >> Adapt(a, b), Adapt(a, b) >> c.sc(s, b)

    return [
        AxiomSchema("[R×]", "scalars", 1, 2, lambda c: (
            c.sc(c.scalars[0], c.colors[0]) >> c.sc(c.scalars[1], c.colors[0]),
            c.sc(c.ring.mul(*c.scalars), c.colors[0])), derived=True),
        AxiomSchema("(R1)", "scalars", 1, 0, lambda c: (c.sc(c.ring.one, c.colors[0]), I(c.colors[0]))),
        AxiomSchema("(R0)", "scalars", 1, 0, lambda c: (
            c.sc(c.ring.zero, c.colors[0]), m(N(c.colors[0])) >> N(c.colors[0]))),
        AxiomSchema("(R+)", "scalars", 1, 2, plus),
        AxiomSchema("(⊗R)", "scalars", 2, 1, through(T)),
        AxiomSchema("[⊕R]", "scalars", 2, 1, through(P), derived=True),
        AxiomSchema("(R≈)", "scalars", 1, 1, adapt),
    ]


# ---- the unit generator (full fragment)

def _unit() -> list:
    def rho(c: Ctx):
        (a,) = c.colors
        return _s(I(a) @ U(), T(a, ONE), Adapt(Tensor(a, ONE), a)), I(a)

    def lam(c: Ctx):
        (a,) = c.colors
        return _s(U() @ I(a), T(ONE, a), Adapt(Tensor(ONE, a), a)), I(a)

    def can(c: Ctx):
        s, t = c.scalars
        return _s(U(), c.sc(s, ONE), m(U())), _s(U(), c.sc(t, ONE), m(U()))

    return [
        AxiomSchema("(ρ⊗)", "unit", 1, 0, rho, fragment="full"),
        AxiomSchema("[λ⊗]", "unit", 1, 0, lam, fragment="full", derived=True),
        AxiomSchema("(10)", "unit", 0, 0, lambda c: (U() >> m(N(ONE)), Empty()), fragment="full"),
        AxiomSchema("(Can)", "unit", 0, 2, can, fragment="full",
                    precondition=_can_pre, scalar_sampler=_can_sample),
        AxiomSchema("[1+]", "unit", 0, 0, lambda c: (
            (U() @ U()) >> C(ONE), U() >> c.sc(_two(c.ring), ONE)), fragment="full", derived=True),
        AxiomSchema("[1∥]", "unit", 0, 0, lambda c: (
            _s(U() @ U(), T(ONE, ONE), Adapt(Tensor(ONE, ONE), ONE)), U()),
            fragment="full", derived=True),
    ]


# ---- deducible equations

def _derived() -> list:
    def swap_t(c: Ctx):
        a, b = c.colors
        return _s(S(a, b), T(b, a), m(T(b, a)), S(b, a)), T(a, b) >> m(T(a, b))

    def copy_t(c: Ctx):
        a, b = c.colors
        lhs = _s(m(C(a)) @ m(C(b)), I(a) @ S(a, b) @ I(b), T(a, b) @ T(a, b), C(Tensor(a, b)))
        return lhs, T(a, b) >> c.sc(_two(c.ring), Tensor(a, b))

    def unit_disj(c: Ctx):
        return _s(I(ONE) @ U(), P(ONE, ONE), m(P(ONE, ONE)), C(ONE)), (I(ONE) @ U()) >> C(ONE)

    def unit_cc(c: Ctx):
        lhs = _s(I(ONE) @ U(), C(ONE), m(C(ONE)), C(ONE))
        return lhs, _s(I(ONE) @ U(), C(ONE), c.sc(_two(c.ring), ONE))

    def disj_sc(c: Ctx):
        (a,), (s,) = c.colors, c.scalars
        d = disjunction([a, a])
        return d >> (c.sc(s, a) @ c.sc(s, a)), (c.sc(s, a) @ c.sc(s, a)) >> d

    return [
        AxiomSchema("[X⊗]", "derived", 2, 0, lambda c: (
            _s(T(*c.colors), m(T(*c.colors)), T(*c.colors)), T(*c.colors)), derived=True),
        AxiomSchema("[σ⊗]", "derived", 2, 0, swap_t, derived=True),
        AxiomSchema("[∇→⊕]", "derived", 1, 0, lambda c: (
            C(c.colors[0]), _s(P(c.colors[0], c.colors[0]), m(P(c.colors[0], c.colors[0])), C(c.colors[0]))),
            derived=True),
        AxiomSchema("[∇∇→⊗]", "derived", 2, 0, copy_t, derived=True),
        AxiomSchema("[X⊕→X∇]", "derived", 1, 0, lambda c: (
            _s(disjunction([c.colors[0]] * 2), C(c.colors[0]), m(C(c.colors[0]))),
            C(c.colors[0]) >> m(C(c.colors[0]))), derived=True),
        AxiomSchema("[X⊕→∇]", "derived", 0, 0, unit_disj, fragment="full", derived=True),
        AxiomSchema("[X∇→∇]", "derived", 0, 0, unit_cc, fragment="full", derived=True),
        AxiomSchema("[σ⊕]", "derived", 2, 0, lambda c: (
            disjunction(c.colors) >> S(*c.colors),
            S(*c.colors) >> disjunction(c.colors[::-1])), derived=True),
        AxiomSchema("[X⊕⊕]", "derived", 3, 0, lambda c: (
            disjunction(c.colors) >> disjunction(c.colors), disjunction(c.colors)), derived=True),
        AxiomSchema("[R⊕⊕]", "derived", 1, 1, disj_sc, derived=True),
    ]


# ---- spiders, n-ary generators, compact closure

def _spider() -> list:
    def fuse(c: Ctx):
        a, b, x = c.colors
        ab, bx = Tensor(a, b), Tensor(b, x)
        return spider([a, b, x], [ab, x]) >> spider([ab, x], [a, bx]), spider([a, b, x], [a, bx])

    def spider_null(c: Ctx):
        a, b = c.colors
        out = c.like(Tensor(a, b))
        return (I(a) @ N(b)) >> spider([a, b], [out]), m(N(a)) >> N(out)

    def spider_adapt(c: Ctx):
        (a,) = c.colors
        b = c.like(a)
        return spider([a], [b]), Adapt(a, b)

    def spider_sc(c: Ctx):
        (a, b), (s,) = c.colors, c.scalars
        out = c.like(Tensor(a, b))
        return (c.sc(s, a) @ I(b)) >> spider([a, b], [out]), spider([a, b], [out]) >> c.sc(s, out)

    def spider_cnt(c: Ctx):
        a, b = c.colors
        ab = c.like(Tensor(a, b))
        split = spider([ab], [a, b])
        lhs = C(ab) >> split
        rhs = _s(split @ split, I(a) @ S(b, a) @ I(b), C(a) @ C(b))
        return lhs, rhs

    return [
        AxiomSchema("[spider spider]", "spider", 3, 0, fuse, derived=True),
        AxiomSchema("[spider 0]", "spider", 2, 0, spider_null, derived=True),
        AxiomSchema("[λρ spider]", "spider", 1, 0, spider_adapt, derived=True),
        AxiomSchema("[spider R]", "spider", 2, 1, spider_sc, derived=True),
        AxiomSchema("[spider ∇]", "spider", 2, 0, spider_cnt, derived=True),
        AxiomSchema("[n-ary ⊗]", "spider", 3, 0, lambda c: (
            m(n_tensor(c.colors)) >> n_tensor(c.colors), I(fold_tensor(c.colors))), derived=True),
        AxiomSchema("[n-ary ⊕]", "spider", 3, 0, lambda c: (
            m(n_plus(c.colors)) >> n_plus(c.colors), I(fold_plus(c.colors))), derived=True),
        AxiomSchema("[n-ary ∇]", "spider", 1, 0, lambda c: (
            copies(c.colors[0], 3) >> n_contraction(c.colors[0], 3),
            c.sc(c.ring.from_int(3), c.colors[0])), derived=True),
        AxiomSchema("[snake 1]", "spider", 1, 0, lambda c: (
            (I(c.colors[0]) @ cup(c.colors[0])) >> (cap(c.colors[0]) @ I(c.colors[0])),
            I(c.colors[0])), fragment="full", derived=True),
        AxiomSchema("[snake 2]", "spider", 1, 0, lambda c: (
            (cup(c.colors[0]) @ I(c.colors[0])) >> (I(c.colors[0]) @ cap(c.colors[0])),
            I(c.colors[0])), fragment="full", derived=True),
    ]


def base_catalog() -> list:
    return _main() + _zero() + _contraction() + _coherence() + _scalars() + _unit() + _derived() + _spider()


def catalog() -> list:
    """Every schema together with its up-down mirror."""
    out = []
    for s in base_catalog():
        out += [s, s.mirror()]
    return out


def find(label: str) -> AxiomSchema:
    for s in catalog():
        if s.label == label:
            return s
    raise KeyError(label)


# ---- checking

@dataclass(frozen=True)
class Check:
    label: str
    passed: bool
    colors: tuple
    scalars: tuple
    tag: str
    verdict: Verdict

    def witness(self) -> Optional[str]:
        if self.passed:
            return None
        args = ", ".join(str(c) for c in self.colors)
        scal = ", ".join(sr.get(self.tag).format(v) for v in self.scalars)
        return f"colors [{args}] scalars [{scal}] over {self.tag}: {self.verdict.describe()}"


def check_pair(label: str, lhs: Diagram, rhs: Diagram, semiring="q", colors=(), scalars=()) -> Check:
    ring = sr.get(semiring)
    v = equiv(lhs, rhs, ring, fragment="full")
    return Check(label, v.equivalent, tuple(colors), tuple(scalars), ring.tag, v)


def check_soundness(schema: AxiomSchema, colors: Sequence[Color], scalars: Sequence[Any] = (),
                    semiring="q", rng: Optional[random.Random] = None) -> Check:
    """Pass iff both sides of the instance have equal full semantics."""
    ring = sr.get(semiring)
    lhs, rhs = schema.instantiate(colors, scalars, ring, rng)
    return check_pair(schema.label, lhs, rhs, ring, colors,
                      tuple(ring.coerce(v) for v in scalars))


def mutate(rhs: Diagram, semiring="q") -> Diagram:
    """Insert a scalar 2 on a closed unit loop beside ``rhs``.

    The loop evaluates to 2 + 1, so every entry of the full matrix is tripled;
    the result differs from ``rhs`` whenever that matrix is nonzero.
    """
    ring = sr.get(semiring)
    return rhs @ _s(U(), _sc(ring, _two(ring), ONE), m(U()))


def negative_controls(semiring="nat") -> list:
    """Unit inequations that must come out distinct over a nontrivial ring."""
    ring = sr.get(semiring)
    pairs = [
        ("unit split then merged ≠ unit", (U() @ U()) >> C(ONE), U()),
        ("unit ≠ null", U(), N(ONE)),
        ("co-unit ≠ co-null", m(U()), m(N(ONE))),
        ("unit then co-unit ≠ empty", U() >> m(U()), Empty()),
    ]
    return [check_pair(label, lhs, rhs, ring) for label, lhs, rhs in pairs]


# ---- fuzzing

def _boundary_ok(lhs: Diagram) -> bool:
    return dim(lhs.dom) <= MAX_DIM and dim(lhs.cod) <= MAX_DIM


def sample_instance(schema: AxiomSchema, ring: sr.Semiring, rng: random.Random,
                    depth_bound: int = 3, tries: int = 200) -> tuple:
    """Colors, scalars and the instantiated pair, boundaries bounded by MAX_DIM."""
    for _ in range(tries):
        colors = tuple(sample_color(rng, depth_bound) for _ in range(schema.color_slots))
        if any(dim(c) > MAX_DIM for c in colors):
            continue
        scalars = schema.sample_scalars(ring, rng)
        lhs, rhs = schema.instantiate(colors, scalars, ring, rng)
        if _boundary_ok(lhs):
            return colors, scalars, lhs, rhs
    raise SignatureError(f"could not sample a small instance of {schema.label}")


@dataclass
class SchemaStats:
    label: str
    group: str
    instances: int = 0
    passed: int = 0
    failed: int = 0
    witness: Optional[str] = None


@dataclass
class FuzzReport:
    seed: int
    iterations: int
    depth_bound: int
    semirings: tuple
    rows: dict = field(default_factory=dict)
    elapsed: float = 0.0

    @property
    def failures(self) -> int:
        return sum(r.failed for r in self.rows.values())

    @property
    def instances(self) -> int:
        return sum(r.instances for r in self.rows.values())

    @property
    def ok(self) -> bool:
        return self.failures == 0

    def to_json(self) -> str:
        return json.dumps({
            "seed": self.seed, "iterations": self.iterations, "depth_bound": self.depth_bound,
            "semirings": list(self.semirings), "elapsed_s": round(self.elapsed, 3),
            "instances": self.instances, "failures": self.failures,
            "schemas": [{"label": r.label, "group": r.group, "instances": r.instances,
                         "passed": r.passed, "failed": r.failed, "pass": r.failed == 0,
                         "witness": r.witness} for r in self.rows.values()],
        }, ensure_ascii=False, indent=2)

    def format_table(self) -> str:
        width = max([len(r.label) for r in self.rows.values()] + [6])
        lines = [f"{'schema':<{width}}  {'group':<12} {'inst':>5} {'pass':>5} {'fail':>5}"]
        for r in self.rows.values():
            lines.append(f"{r.label:<{width}}  {r.group:<12} {r.instances:>5} {r.passed:>5} {r.failed:>5}")
            if r.witness:
                lines.append(f"  witness: {r.witness}")
        lines.append(f"{self.instances} instances, {self.failures} failures, {self.elapsed:.1f}s")
        return "\n".join(lines)


def fuzz(seed: int = 42, iterations: int = 50, depth_bound: int = 3,
         semirings: Sequence[str] = ("bool", "nat", "q"),
         schemas: Optional[Sequence[AxiomSchema]] = None) -> FuzzReport:
    """Check every schema on ``iterations`` random instances per semiring."""
    start = time.perf_counter()
    report = FuzzReport(seed, iterations, depth_bound, tuple(semirings))
    if iterations <= 0:
        return report
    for schema in (catalog() if schemas is None else schemas):
        row = report.rows.setdefault(schema.label, SchemaStats(schema.label, schema.group))
        for tag in semirings:
            ring = sr.get(tag)
            # one stream per (schema, semiring) keeps runs reproducible piecewise
            rng = random.Random(f"{seed}:{schema.label}:{tag}")
            for _ in range(iterations):
                colors, scalars, lhs, rhs = sample_instance(schema, ring, rng, depth_bound)
                res = check_pair(schema.label, lhs, rhs, ring, colors, scalars)
                row.instances += 1
                if res.passed:
                    row.passed += 1
                else:
                    row.failed += 1
                    row.witness = row.witness or res.witness()
    report.elapsed = time.perf_counter() - start
    return report
