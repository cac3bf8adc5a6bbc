"""Typed diagram terms, composition, and derived building blocks.

Diagrams are immutable terms.  ``d >> e`` composes sequentially (``d`` on
top, ``e`` below), ``d @ e`` puts diagrams side by side and ``~d`` mirrors.
No PROP equation is quotiented structurally; equality of terms is plain
structural equality.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Optional, Sequence

from . import semiring as sr
from .colors import ONE, ZERO, BIT, Color, Plus, Tensor, canon_color
from .errors import TypeMismatch


class Diagram:
    """Base class; concrete node classes are frozen dataclasses."""

    dom: tuple
    cod: tuple
    functional: bool

    def __rshift__(self, other: Diagram) -> Diagram:
        return seq(self, other)

    def __matmul__(self, other: Diagram) -> Diagram:
        return par(self, other)

    def __invert__(self) -> Diagram:
        return mirror(self)

    def __str__(self) -> str:
        from .textio import print_diagram

        return print_diagram(self)


def _init(self: Diagram, dom: tuple, cod: tuple, functional: bool = True) -> None:
    object.__setattr__(self, "dom", dom)
    object.__setattr__(self, "cod", cod)
    object.__setattr__(self, "functional", functional)


def _check_color(*cs: Any) -> None:
    for c in cs:
        if not isinstance(c, Color):
            raise TypeMismatch(f"expected a color, got {c!r}")


_meta = dict(init=False, repr=False, compare=False)


@dataclass(frozen=True)
class Id(Diagram):
    a: Color
    dom: tuple = field(**_meta)
    cod: tuple = field(**_meta)
    functional: bool = field(**_meta)

    def __post_init__(self) -> None:
        _check_color(self.a)
        _init(self, (self.a,), (self.a,))


@dataclass(frozen=True)
class Swap(Diagram):
    a: Color
    b: Color
    dom: tuple = field(**_meta)
    cod: tuple = field(**_meta)
    functional: bool = field(**_meta)

    def __post_init__(self) -> None:
        _check_color(self.a, self.b)
        _init(self, (self.a, self.b), (self.b, self.a))


@dataclass(frozen=True)
class Ten(Diagram):
    a: Color
    b: Color
    dom: tuple = field(**_meta)
    cod: tuple = field(**_meta)
    functional: bool = field(**_meta)

    def __post_init__(self) -> None:
        _check_color(self.a, self.b)
        _init(self, (self.a, self.b), (Tensor(self.a, self.b),))


@dataclass(frozen=True)
class PlusG(Diagram):
    a: Color
    b: Color
    dom: tuple = field(**_meta)
    cod: tuple = field(**_meta)
    functional: bool = field(**_meta)

    def __post_init__(self) -> None:
        _check_color(self.a, self.b)
        _init(self, (self.a, self.b), (Plus(self.a, self.b),))


@dataclass(frozen=True)
class Contr(Diagram):
    a: Color
    dom: tuple = field(**_meta)
    cod: tuple = field(**_meta)
    functional: bool = field(**_meta)

    def __post_init__(self) -> None:
        _check_color(self.a)
        _init(self, (self.a, self.a), (self.a,))


@dataclass(frozen=True)
class Null(Diagram):
    a: Color
    dom: tuple = field(**_meta)
    cod: tuple = field(**_meta)
    functional: bool = field(**_meta)

    def __post_init__(self) -> None:
        _check_color(self.a)
        _init(self, (), (self.a,))


@dataclass(frozen=True)
class Unit(Diagram):
    dom: tuple = field(**_meta)
    cod: tuple = field(**_meta)
    functional: bool = field(**_meta)

    def __post_init__(self) -> None:
        _init(self, (), (ONE,), functional=False)


@dataclass(frozen=True)
class Adapt(Diagram):
    a: Color
    b: Color
    dom: tuple = field(**_meta)
    cod: tuple = field(**_meta)
    functional: bool = field(**_meta)

    def __post_init__(self) -> None:
        _check_color(self.a, self.b)
        if canon_color(self.a) != canon_color(self.b):
            raise TypeMismatch(f"adapter between inequivalent colors {self.a} and {self.b}")
        _init(self, (self.a,), (self.b,))


@dataclass(frozen=True)
class Scal(Diagram):
    s: sr.Scalar
    a: Color
    dom: tuple = field(**_meta)
    cod: tuple = field(**_meta)
    functional: bool = field(**_meta)

    def __post_init__(self) -> None:
        _check_color(self.a)
        if not isinstance(self.s, sr.Scalar):
            raise TypeMismatch(f"scalar must be a tagged Scalar, got {self.s!r}")
        _init(self, (self.a,), (self.a,))


@dataclass(frozen=True)
class Empty(Diagram):
    """The identity on the empty object."""

    dom: tuple = field(**_meta)
    cod: tuple = field(**_meta)
    functional: bool = field(**_meta)

    def __post_init__(self) -> None:
        _init(self, (), ())


@dataclass(frozen=True)
class Mirror(Diagram):
    d: Diagram
    dom: tuple = field(**_meta)
    cod: tuple = field(**_meta)
    functional: bool = field(**_meta)

    def __post_init__(self) -> None:
        _init(self, self.d.cod, self.d.dom, self.d.functional)


@dataclass(frozen=True)
class Seq(Diagram):
    d: Diagram
    e: Diagram
    dom: tuple = field(**_meta)
    cod: tuple = field(**_meta)
    functional: bool = field(**_meta)

    def __post_init__(self) -> None:
        if self.d.cod != self.e.dom:
            raise TypeMismatch(
                f"cannot compose: codomain {fmt_obj(self.d.cod)} "
                f"differs from domain {fmt_obj(self.e.dom)}"
            )
        _init(self, self.d.dom, self.e.cod, self.d.functional and self.e.functional)


@dataclass(frozen=True)
class Par(Diagram):
    d: Diagram
    e: Diagram
    dom: tuple = field(**_meta)
    cod: tuple = field(**_meta)
    functional: bool = field(**_meta)

    def __post_init__(self) -> None:
        _init(self, self.d.dom + self.e.dom, self.d.cod + self.e.cod,
              self.d.functional and self.e.functional)


GENERATORS = (Id, Swap, Ten, PlusG, Contr, Null, Unit, Adapt, Scal, Empty)


def fmt_obj(x: Sequence[Color]) -> str:
    return "[" + ", ".join(str(c) for c in x) + "]"


def seq(d: Diagram, e: Diagram) -> Diagram:
    return Seq(d, e)


def par(d: Diagram, e: Diagram) -> Diagram:
    return Par(d, e)


def mirror(d: Diagram) -> Diagram:
    """Up-down reflection, pushed down to the generators."""
    if isinstance(d, Mirror):
        return d.d
    if isinstance(d, Seq):
        return Seq(mirror(d.e), mirror(d.d))
    if isinstance(d, Par):
        return Par(mirror(d.d), mirror(d.e))
    if isinstance(d, (Id, Scal, Empty)):
        return d
    if isinstance(d, Swap):
        return Swap(d.b, d.a)
    if isinstance(d, Adapt):
        return Adapt(d.b, d.a)
    return Mirror(d)


def is_functional(d: Diagram) -> bool:
    return d.functional


def scalars(d: Diagram) -> set:
    """Tags of all scalars occurring in ``d``."""
    out: set = set()
    stack = [d]
    while stack:
        x = stack.pop()
        if isinstance(x, Scal):
            out.add(x.s.tag)
        elif isinstance(x, Mirror):
            stack.append(x.d)
        elif isinstance(x, (Seq, Par)):
            stack += [x.d, x.e]
    return out


def size(d: Diagram) -> int:
    """Number of generator occurrences."""
    n, stack = 0, [d]
    while stack:
        x = stack.pop()
        if isinstance(x, Mirror):
            stack.append(x.d)
        elif isinstance(x, (Seq, Par)):
            stack += [x.d, x.e]
        else:
            n += 1
    return n


# balanced folds keep term depth logarithmic in the number of pieces

def seq_all(ds: Sequence[Diagram], dom: Optional[Sequence[Color]] = None) -> Diagram:
    ds = list(ds)
    if not ds:
        if dom is None:
            raise TypeMismatch("empty sequence needs a boundary")
        return ids(dom)
    if len(ds) == 1:
        return ds[0]
    k = len(ds) // 2
    return Seq(seq_all(ds[:k]), seq_all(ds[k:]))


def par_all(ds: Sequence[Diagram]) -> Diagram:
    ds = [d for d in ds if not isinstance(d, Empty)]
    if not ds:
        return Empty()
    if len(ds) == 1:
        return ds[0]
    k = len(ds) // 2
    return Par(par_all(ds[:k]), par_all(ds[k:]))


def ids(x: Sequence[Color]) -> Diagram:
    return par_all([Id(c) for c in x])


def scl(s: Any, a: Color, ring: str = "q") -> Diagram:
    """Scalar generator; ``s`` may be a Scalar, a literal string or a number."""
    if not isinstance(s, sr.Scalar):
        s = sr.get(ring).scalar(s)
    return Scal(s, a)


# n-ary generators, all left-nested

def fold_tensor(colors: Sequence[Color]) -> Color:
    acc = colors[0]
    for c in colors[1:]:
        acc = Tensor(acc, c)
    return acc


def fold_plus(colors: Sequence[Color]) -> Color:
    acc = colors[0]
    for c in colors[1:]:
        acc = Plus(acc, c)
    return acc


def n_tensor(colors: Sequence[Color]) -> Diagram:
    colors = list(colors)
    if not colors:
        raise TypeMismatch("n_tensor needs at least one color")
    d: Diagram = Id(colors[0])
    acc = colors[0]
    for c in colors[1:]:
        d = Seq(Par(d, Id(c)), Ten(acc, c)) if not isinstance(d, Id) else Ten(acc, c)
        acc = Tensor(acc, c)
    return d


def n_plus(colors: Sequence[Color]) -> Diagram:
    colors = list(colors)
    if not colors:
        raise TypeMismatch("n_plus needs at least one color")
    d: Diagram = Id(colors[0])
    acc = colors[0]
    for c in colors[1:]:
        d = Seq(Par(d, Id(c)), PlusG(acc, c)) if not isinstance(d, Id) else PlusG(acc, c)
        acc = Plus(acc, c)
    return d


def n_contraction(a: Color, n: int) -> Diagram:
    """[A]*n -> [A]; n = 0 gives the Null, n = 1 the identity."""
    if n == 0:
        return Null(a)
    d: Diagram = Id(a)
    for k in range(1, n):
        d = Contr(a) if k == 1 else Seq(Par(d, Id(a)), Contr(a))
    return d


def copies(a: Color, n: int) -> Diagram:
    """[A] -> [A]*n, the mirrored n-ary contraction."""
    return mirror(n_contraction(a, n)) if n != 1 else Id(a)


def spider(inputs: Sequence[Color], outputs: Sequence[Color]) -> Diagram:
    """Tensor all inputs, adapt, and untensor into the outputs."""
    inputs, outputs = list(inputs), list(outputs)
    if not inputs or not outputs:
        raise TypeMismatch("spider needs at least one input and one output")
    a, b = fold_tensor(inputs), fold_tensor(outputs)
    parts = []
    if len(inputs) > 1:
        parts.append(n_tensor(inputs))
    parts.append(Adapt(a, b))
    if len(outputs) > 1:
        parts.append(mirror(n_tensor(outputs)))
    return seq_all(parts)


def disjunction(colors: Sequence[Color]) -> Diagram:
    """Wires forced to behave as a direct sum: at most one carries a token."""
    colors = list(colors)
    if not colors:
        return Empty()
    if len(colors) == 1:
        return Id(colors[0])
    p = n_plus(colors)
    return Seq(p, mirror(p))


def conjunction(groups: Sequence[Sequence[Color]]) -> Diagram:
    """Tensor of disjunctions: each group contributes exactly one token."""
    groups = [list(g) for g in groups]
    sums = [fold_plus(g) for g in groups]
    folds = par_all([n_plus(g) if len(g) > 1 else Id(g[0]) for g in groups])
    t = n_tensor(sums) if len(sums) > 1 else Id(sums[0])
    return seq_all([folds, t, mirror(t), mirror(folds)])


def cap(a: Color) -> Diagram:
    """[A, A] -> []: pairs equal leaves, also accepts two absent tokens."""
    if isinstance(a, Plus) or isinstance(a, Tensor):
        x, y = a.left, a.right
        split = PlusG(x, y) if isinstance(a, Plus) else Ten(x, y)
        return seq_all([
            mirror(split) @ mirror(split),
            Id(x) @ Swap(y, x) @ Id(y),
            cap(x) @ cap(y),
        ])
    if a == ZERO:
        return mirror(Null(ZERO)) @ mirror(Null(ZERO))
    return seq_all([Ten(ONE, ONE), Adapt(Tensor(ONE, ONE), ONE), mirror(Unit())])


def cup(a: Color) -> Diagram:
    return mirror(cap(a))


# wiring: build terms from a list of boxes applied to named wires

class Circuit:
    """Incremental builder turning box applications on named wires into a term.

    >>> c = Circuit([ONE, ONE])
    >>> x, y = c.inputs
    >>> (z,) = c.apply(Ten(ONE, ONE), [x, y])
    >>> c.build([z]).cod == (Tensor(ONE, ONE),)
    True
    """

    def __init__(self, dom: Sequence[Color]):
        self.dom = tuple(dom)
        self._color: dict = {}
        self._live: list = []
        self._layers: list = []
        self._next = 0
        self.inputs = [self._fresh(c) for c in self.dom]
        self._live = list(self.inputs)

    def _fresh(self, c: Color) -> int:
        w = self._next
        self._next += 1
        self._color[w] = c
        return w

    def color(self, w: int) -> Color:
        return self._color[w]

    def _permute(self, target: list) -> None:
        if target != self._live:
            self._layers.append(permutation([self._color[w] for w in self._live],
                                            [self._live.index(w) for w in target]))
            self._live = list(target)

    def apply(self, d: Diagram, wires: Sequence[int]) -> list:
        wires = list(wires)
        if len(set(wires)) != len(wires) or any(w not in self._live for w in wires):
            raise TypeMismatch("box applied to dead or repeated wires")
        got = tuple(self._color[w] for w in wires)
        if got != d.dom:
            raise TypeMismatch(f"box expects {fmt_obj(d.dom)}, wires carry {fmt_obj(got)}")
        if wires:
            rest = [w for w in self._live if w not in wires]
            first = self._live.index(wires[0])
            pos = sum(1 for w in self._live[:first] if w not in wires)
            self._permute(rest[:pos] + wires + rest[pos:])
        else:
            pos = len(self._live)
        before = self._live[:pos]
        after = self._live[pos + len(wires):]
        self._layers.append(par_all([ids([self._color[w] for w in before]), d,
                                     ids([self._color[w] for w in after])]))
        new = [self._fresh(c) for c in d.cod]
        self._live = before + new + after
        return new

    def build(self, outputs: Sequence[int]) -> Diagram:
        outputs = list(outputs)
        if sorted(outputs) != sorted(self._live):
            raise TypeMismatch("outputs must list every live wire exactly once")
        self._permute(outputs)
        return seq_all(self._layers, dom=self.dom)


def permutation(colors: Sequence[Color], order: Sequence[int]) -> Diagram:
    """Wires ``colors`` rearranged so output i is input ``order[i]``.

    Realized as layers of adjacent swaps (odd-even transposition sort).
    """
    colors = list(colors)
    n = len(colors)
    if sorted(order) != list(range(n)):
        raise TypeMismatch(f"not a permutation: {order!r}")
    # rank[w] = target position of the wire currently at position w
    cur = list(range(n))
    target = {src: i for i, src in enumerate(order)}
    layers = []
    for rnd in range(n):
        pieces, i, moved = [], 0, False
        start = rnd % 2
        if start:
            pieces.append(Id(colors[cur[0]]))
            i = 1
        while i < n:
            if i + 1 < n and target[cur[i]] > target[cur[i + 1]]:
                pieces.append(Swap(colors[cur[i]], colors[cur[i + 1]]))
                cur[i], cur[i + 1] = cur[i + 1], cur[i]
                moved = True
                i += 2
            elif i + 1 < n:
                pieces.append(Id(colors[cur[i]]) @ Id(colors[cur[i + 1]]))
                i += 2
            else:
                pieces.append(Id(colors[cur[i]]))
                i += 1
        if moved:
            layers.append(par_all(pieces))
        if all(target[cur[k]] == k for k in range(n)):
            break
    return seq_all(layers, dom=colors)


# worked examples over booleans 1+1: left leaf is False, right leaf is True

def value_bot() -> Diagram:
    return Null(BIT)


def value_false() -> Diagram:
    return (Unit() @ Null(ONE)) >> PlusG(ONE, ONE)


def value_true() -> Diagram:
    return (Null(ONE) @ Unit()) >> PlusG(ONE, ONE)


def value_top() -> Diagram:
    return Unit() >> copies(ONE, 2) >> PlusG(ONE, ONE)


def _or(solo_x_true: bool, solo_y_true: bool) -> Diagram:
    # split both bits into their leaf wires, pair them through tensors and
    # collect the resulting truth value; optional solo paths short-circuit
    c = Circuit([BIT, BIT])
    x, y = c.inputs
    xf, xt = c.apply(mirror(PlusG(ONE, ONE)), [x])
    yf, yt = c.apply(mirror(PlusG(ONE, ONE)), [y])
    xf1, xf2 = c.apply(copies(ONE, 2), [xf])
    xt_c = c.apply(copies(ONE, 3 if solo_x_true else 2), [xt])
    yf1, yf2 = c.apply(copies(ONE, 2), [yf])
    yt_c = c.apply(copies(ONE, 3 if solo_y_true else 2), [yt])
    one_one = Ten(ONE, ONE) >> Adapt(Tensor(ONE, ONE), ONE)
    (ff,) = c.apply(one_one, [xf1, yf1])
    (ft,) = c.apply(one_one, [xf2, yt_c[0]])
    (tf,) = c.apply(one_one, [xt_c[0], yf2])
    (tt,) = c.apply(one_one, [xt_c[1], yt_c[1]])
    trues = [ft, tf, tt]
    if solo_x_true:
        trues.append(xt_c[2])
    if solo_y_true:
        trues.append(yt_c[2])
    (t,) = c.apply(n_contraction(ONE, len(trues)), trues)
    (out,) = c.apply(PlusG(ONE, ONE), [ff, t])
    return c.build([out])


def or_strict() -> Diagram:
    """Needs both inputs."""
    return _or(False, False)


def or_lazy() -> Diagram:
    """Answers True as soon as the first input is True."""
    return _or(True, False)


def or_parallel() -> Diagram:
    """Answers True as soon as either input is True."""
    return _or(True, True)


def pbit(p: Any, q: Any, ring: str = "qnn") -> Diagram:
    """The state sending False with weight p and True with weight q."""
    return ((Unit() >> scl(p, ONE, ring)) @ (Unit() >> scl(q, ONE, ring))) >> PlusG(ONE, ONE)


def matrix_on_bit(m: Sequence[Sequence[Any]], ring: str = "q") -> Diagram:
    """A functional [1+1] -> [1+1] map with 2x2 matrix ``m`` (rows = outputs).

    Each input leaf is copied to the outputs it feeds, scaled, and contracted.
    """
    from .decision import matrix_diagram
    from .semantics import SemMatrix

    r = sr.get(ring)
    mat = SemMatrix.from_rows(r, [[r.coerce(v) for v in row] for row in m])
    body = matrix_diagram(mat)
    return mirror(PlusG(ONE, ONE)) >> body >> PlusG(ONE, ONE)


def proba_coin_matrix(ring: str = "qnn") -> Diagram:
    """if x then coin() else False, as a matrix diagram on 1+1."""
    from fractions import Fraction

    h = Fraction(1, 2)
    c = Circuit([BIT])
    (x,) = c.inputs
    xf, xt = c.apply(mirror(PlusG(ONE, ONE)), [x])
    a, b = c.apply(copies(ONE, 2), [xt])
    (a,) = c.apply(scl(h, ONE, ring), [a])
    (b,) = c.apply(scl(h, ONE, ring), [b])
    (f,) = c.apply(Contr(ONE), [xf, a])
    (out,) = c.apply(PlusG(ONE, ONE), [f, b])
    return c.build([out])


def hadamard() -> Diagram:
    """The Hadamard gate on 1+1 over Q[sqrt 2]."""
    h = sr.Sqrt2Rat(sr.Fraction(0), sr.Fraction(1, 2))
    mh = sr.Sqrt2Rat(sr.Fraction(0), sr.Fraction(-1, 2))
    return matrix_on_bit([[h, h], [h, mh]], ring="qr2")


def plus_state() -> Diagram:
    """(1/sqrt2, 1/sqrt2) over Q[sqrt 2]."""
    h = sr.QR2.scalar(sr.Sqrt2Rat(sr.Fraction(0), sr.Fraction(1, 2)))
    return pbit(h, h, ring="qr2")


def _check_endo(a: Color, *ds: Diagram) -> None:
    for d in ds:
        if d.dom != (a,) or d.cod != (a,):
            raise TypeMismatch(f"expected a diagram [{a}] -> [{a}], got "
                               f"{fmt_obj(d.dom)} -> {fmt_obj(d.cod)}")


def _endo_of(u: Diagram) -> Color:
    if len(u.dom) != 1:
        raise TypeMismatch("switch operands must have one input and one output wire")
    return u.dom[0]


def _route(a: Color) -> Diagram:
    """(1+1)*A -> [(1+1)*A, (1+1)*A]: False tokens left, True tokens right."""
    c = Circuit([Tensor(BIT, a)])
    (t,) = c.inputs
    b, x = c.apply(mirror(Ten(BIT, a)), [t])
    bf, bt = c.apply(mirror(PlusG(ONE, ONE)), [b])
    x1, x2 = c.apply(copies(a, 2), [x])
    (bf,) = c.apply(Par(Id(ONE), Null(ONE)) >> PlusG(ONE, ONE), [bf])
    (bt,) = c.apply(Par(Null(ONE), Id(ONE)) >> PlusG(ONE, ONE), [bt])
    (left,) = c.apply(Ten(BIT, a), [bf, x1])
    (right,) = c.apply(Ten(BIT, a), [bt, x2])
    return c.build([left, right])


def _lift(u: Diagram, a: Color) -> Diagram:
    """id on the control bit, u on the data."""
    return mirror(Ten(BIT, a)) >> (Id(BIT) @ u) >> Ten(BIT, a)


def switch_dup(u: Diagram, v: Diagram) -> Diagram:
    """On (1+1)*A: False applies v then u, True applies u then v.

    Uses one copy of each operation per branch.
    """
    a = _endo_of(u)
    _check_endo(a, u, v)
    c = Circuit([Tensor(BIT, a)])
    (t,) = c.inputs
    b, x = c.apply(mirror(Ten(BIT, a)), [t])
    bf, bt = c.apply(mirror(PlusG(ONE, ONE)), [b])
    x1, x2 = c.apply(copies(a, 2), [x])
    (pf,) = c.apply(Ten(ONE, a), [bf, x1])
    (pt,) = c.apply(Ten(ONE, a), [bt, x2])
    bf, x1 = c.apply(mirror(Ten(ONE, a)), [pf])
    bt, x2 = c.apply(mirror(Ten(ONE, a)), [pt])
    (x1,) = c.apply(v >> u, [x1])
    (x2,) = c.apply(u >> v, [x2])
    (b,) = c.apply(PlusG(ONE, ONE), [bf, bt])
    (x,) = c.apply(Contr(a), [x1, x2])
    (out,) = c.apply(Ten(BIT, a), [b, x])
    return c.build([out])


def _switch_body(a: Color, u_slot, v_slot) -> Diagram:
    """The acyclic core [(1+1)*A, loop] -> [(1+1)*A, loop].

    ``u_slot(c, wire)`` and ``v_slot(c, wire)`` apply the operations to a
    token wire inside circuit ``c``; each is used exactly once.  The loop
    wire carries the token from v back to u on the False branch.
    """
    t_col = Tensor(BIT, a)
    c = Circuit([t_col, t_col])
    t, loop_in = c.inputs
    f1, t1 = c.apply(_route(a), [t])
    (u_in,) = c.apply(Contr(t_col), [t1, loop_in])
    u_out = u_slot(c, u_in)
    uf, ut = c.apply(_route(a), [u_out])
    (v_in,) = c.apply(Contr(t_col), [f1, ut])
    v_out = v_slot(c, v_in)
    vf, vt = c.apply(_route(a), [v_out])
    (out,) = c.apply(Contr(t_col), [uf, vt])
    return c.build([out, vf])


def _trace(body: Diagram, loop: Color) -> Diagram:
    """Feed the last output of ``body`` back to its last input with a cup/cap."""
    x = body.dom[:-1]
    y = body.cod[:-1]
    return seq_all([
        ids(x) @ cup(loop),
        body @ Id(loop),
        ids(y) @ cap(loop),
    ])


def switch_single(u: Diagram, v: Diagram) -> Diagram:
    """Same behaviour as :func:`switch_dup` with a single instance of u and v."""
    a = _endo_of(u)
    _check_endo(a, u, v)

    def slot(op):
        def apply(c, w):
            (o,) = c.apply(_lift(op, a), [w])
            return o
        return apply

    return _trace(_switch_body(a, slot(u), slot(v)), Tensor(BIT, a))


def switch_higher_order(a: Color = BIT) -> Diagram:
    """[(1+1)*A, A, A, A, A] -> [(1+1)*A]: the operations become inputs.

    Wires 2,3 receive the input/output ends of u, wires 4,5 those of v.
    """
    t_col = Tensor(BIT, a)

    def slot(ends_index):
        def apply(c, w):
            b, x = c.apply(mirror(Ten(BIT, a)), [w])
            ins, outs = ends[ends_index]
            c.apply(cap(a), [x, ins])
            (o,) = c.apply(Ten(BIT, a), [b, outs])
            return o
        return apply

    c = Circuit([t_col, a, a, a, a, t_col])
    t, ui, uo, vi, vo, loop_in = c.inputs
    ends = {0: (ui, uo), 1: (vi, vo)}
    f1, t1 = c.apply(_route(a), [t])
    (u_in,) = c.apply(Contr(t_col), [t1, loop_in])
    u_out = slot(0)(c, u_in)
    uf, ut = c.apply(_route(a), [u_out])
    (v_in,) = c.apply(Contr(t_col), [f1, ut])
    v_out = slot(1)(c, v_in)
    vf, vt = c.apply(_route(a), [v_out])
    (out,) = c.apply(Contr(t_col), [uf, vt])
    return _trace(c.build([out, vf]), t_col)


def name_of(u: Diagram) -> Diagram:
    """[] -> [A, A]: the state whose second wire is u applied to the first."""
    a = _endo_of(u)
    return cup(a) >> (Id(a) @ u)


def plug_operations(hos: Diagram, u: Diagram, v: Diagram) -> Diagram:
    """Feed u and v into the higher-order switch."""
    a = _endo_of(u)
    return (Id(Tensor(BIT, a)) @ name_of(u) @ name_of(v)) >> hos


def strict_or_with_bottom() -> Diagram:
    """The strict OR with the failing value plugged into its second input."""
    return (Id(BIT) @ value_bot()) >> or_strict()


def strict_or_with_bottom_rewritten() -> Diagram:
    """Discard the input; nothing comes out."""
    return mirror(Null(BIT)) >> Null(BIT)


def lazy_or_with_true() -> Diagram:
    """The lazy OR with True plugged into its first input."""
    return (value_true() @ Id(BIT)) >> or_lazy()


def lazy_or_with_true_rewritten() -> Diagram:
    """Discard the input (even a missing one) and answer True."""
    discard = (mirror(PlusG(ONE, ONE)) >> Contr(ONE)) @ Unit()
    return seq_all([discard, Contr(ONE), Null(ONE) @ Id(ONE), PlusG(ONE, ONE)])
