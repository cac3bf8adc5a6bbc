"""Normal forms, synthesis from matrices, and the equivalence decision.

Every object X is connected to dim(X) parallel unit wires by ``iso_diagram``;
a matrix becomes a grid of copies, scalars and contractions between unit
wires (``matrix_diagram``).  Conjugating the grid by the isos realizes any
matrix, and since the construction only reads the matrix, semantically equal
diagrams get structurally equal normal forms.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Optional, Sequence

from . import semiring as sr
from .colors import ONE, ZERO, Color, Plus, Tensor, dim, format_name
from .diagram import (
    Adapt, Circuit, Contr, Diagram, Empty, Id, Null, PlusG, Scal, Swap, Ten, Unit,
    copies, disjunction, fmt_obj, mirror, n_contraction, seq_all,
)
from .errors import RefusedError, ShapeError, TypeMismatch
from .semantics import SemMatrix, eval, eval_full, first_difference, resolve_ring

_UU = Tensor(ONE, ONE)


def _pair(c: Circuit, a: int, b: int) -> int:
    (o,) = c.apply(Ten(ONE, ONE) >> Adapt(_UU, ONE), [a, b])
    return o


def _iso_color(a: Color) -> Diagram:
    if a == ZERO:
        return mirror(Null(ZERO))
    if a == ONE:
        return Id(ONE)
    x, y = a.left, a.right
    nx, ny = dim(x), dim(y)
    if isinstance(a, Plus):
        split = mirror(PlusG(x, y)) >> (_iso_color(x) @ _iso_color(y))
        return split >> disjunction([ONE] * (nx + ny)) if nx + ny else split
    # product: every x-leaf meets every y-leaf through a tensor
    c = Circuit([a])
    (w,) = c.inputs
    wx, wy = c.apply(mirror(Ten(x, y)), [w])
    xs = c.apply(_iso_color(x), [wx])
    ys = c.apply(_iso_color(y), [wy])
    xc = [c.apply(copies(ONE, ny), [u]) for u in xs]
    yc = [c.apply(copies(ONE, nx), [v]) for v in ys]
    outs = [_pair(c, xc[i][j], yc[j][i]) for i in range(nx) for j in range(ny)]
    body = c.build(outs)
    return body >> disjunction([ONE] * len(outs)) if outs else body


def iso_diagram(x: Sequence[Color]) -> Diagram:
    """x -> [1]*dim(x), sending the k-th basis name to a token on wire k."""
    x = tuple(x)
    if not x:
        return Empty()
    if len(x) == 1:
        return _iso_color(x[0])
    head, b = x[:-1], x[-1]
    n, m = dim(head), dim(b)
    c = Circuit(x)
    ws = c.inputs
    hs = c.apply(iso_diagram(head), ws[:-1])
    bs = c.apply(_iso_color(b), [ws[-1]])
    # each token is copied to its pairings and to a solo path; the final
    # disjunction discards outcomes where more than one path is taken
    hc = [c.apply(copies(ONE, m + 1), [u]) for u in hs]
    bc = [c.apply(copies(ONE, n + 1), [v]) for v in bs]
    outs = [_pair(c, hc[i][j], bc[j][i]) for i in range(n) for j in range(m)]
    outs += [hc[i][m] for i in range(n)] + [bc[j][n] for j in range(m)]
    return c.build(outs) >> disjunction([ONE] * len(outs)) if outs else c.build(outs)


def iso_plus(x: Sequence[Color]) -> Diagram:
    """x -> [1+...+1]: the iso followed by the left-nested plus fold."""
    from .diagram import n_plus

    k = dim(x)
    d = iso_diagram(x)
    return d >> n_plus([ONE] * k) if k > 1 else d


def matrix_diagram(m: SemMatrix) -> Diagram:
    """[1]*ncols -> [1]*nrows; zero coefficients are missing wires."""
    ring = m.ring
    n, k = m.ncols, m.nrows
    c = Circuit([ONE] * n)
    incoming: list = [[] for _ in range(k)]
    for i, w in enumerate(c.inputs):
        targets = [j for j in range(k) if not ring.is_zero(m[j, i])]
        outs = c.apply(copies(ONE, len(targets)), [w])
        for j, o in zip(targets, outs):
            if not ring.eq(m[j, i], ring.one):
                (o,) = c.apply(Scal(sr.Scalar(ring.tag, m[j, i]), ONE), [o])
            incoming[j].append(o)
    outs = []
    for j in range(k):
        (o,) = c.apply(n_contraction(ONE, len(incoming[j])), incoming[j])
        outs.append(o)
    return c.build(outs)


@dataclass(frozen=True)
class NormalForm:
    diagram: Diagram
    matrix: SemMatrix
    dom: tuple
    cod: tuple
    full: bool


def _check_shape(m: SemMatrix, dom, cod, extra: int) -> None:
    want = (dim(cod) + extra, dim(dom) + extra)
    if m.shape != want:
        raise ShapeError(f"matrix is {m.shape[0]}x{m.shape[1]}, boundary "
                         f"{fmt_obj(dom)} -> {fmt_obj(cod)} needs {want[0]}x{want[1]}")


def synthesize(m: SemMatrix, dom: Sequence[Color], cod: Sequence[Color]) -> NormalForm:
    """A functional diagram whose semantics is ``m``."""
    dom, cod = tuple(dom), tuple(cod)
    _check_shape(m, dom, cod, 0)
    d = seq_all([iso_diagram(dom), matrix_diagram(m), mirror(iso_diagram(cod))])
    mm = SemMatrix(m.tag, m.entries, m.nrows, m.ncols, cod, dom, False)
    return NormalForm(d, mm, dom, cod, False)


def synthesize_full(v: SemMatrix, dom: Sequence[Color], cod: Sequence[Color]) -> NormalForm:
    """A diagram whose full semantics is ``v``; the corner must be c + 1."""
    dom, cod = tuple(dom), tuple(cod)
    _check_shape(v, dom, cod, 1)
    ring = v.ring
    corner = ring.canon_plus_one(ring.sub_one(v.entries[-1][-1]))
    rows = [list(r) for r in v.entries]
    rows[-1][-1] = corner
    inner = SemMatrix.from_rows(ring, rows, v.ncols)
    n = dim(dom)
    d = seq_all([
        iso_diagram(dom) @ Unit(),
        disjunction([ONE] * (n + 1)),
        matrix_diagram(inner),
        mirror(iso_diagram(cod)) @ mirror(Unit()),
    ])
    canon = [list(r) for r in v.entries]
    canon[-1][-1] = ring.add(corner, ring.one)
    vv = SemMatrix(ring.tag, tuple(tuple(r) for r in canon), v.nrows, v.ncols, cod, dom, True)
    return NormalForm(d, vv, dom, cod, True)


def normalize(d: Diagram, semiring=None) -> NormalForm:
    """Canonical representative: depends only on the semantics of ``d``."""
    if d.functional:
        return synthesize(eval(d, semiring), d.dom, d.cod)
    return synthesize_full(eval_full(d, semiring), d.dom, d.cod)


@dataclass(frozen=True)
class Verdict:
    equivalent: bool
    row: Optional[int] = None
    col: Optional[int] = None
    left: Any = None
    right: Any = None
    row_name: str = ""
    col_name: str = ""
    tag: str = ""

    def __bool__(self) -> bool:
        return self.equivalent

    def describe(self) -> str:
        if self.equivalent:
            return "equivalent"
        fmt = sr.get(self.tag).format
        return (f"distinct: at output {self.row_name}, input {self.col_name}: "
                f"{fmt(self.left)} vs {fmt(self.right)}")


def equiv(d: Diagram, e: Diagram, semiring=None, fragment: str = "auto") -> Verdict:
    """Decide semantic equality; returns a witness entry when they differ."""
    if d.dom != e.dom or d.cod != e.cod:
        raise TypeMismatch(f"boundaries differ: {fmt_obj(d.dom)} -> {fmt_obj(d.cod)} vs "
                           f"{fmt_obj(e.dom)} -> {fmt_obj(e.cod)}")
    ring = resolve_ring(d, semiring) if semiring is not None else _common_ring(d, e)
    if not ring.exact:
        raise RefusedError(f"{ring.tag} has no decidable equality; equivalence needs an exact semiring")
    full = fragment == "full" or (fragment == "auto" and not (d.functional and e.functional))
    if fragment == "functional" and not (d.functional and e.functional):
        raise TypeMismatch("functional comparison requested for a diagram using Unit")
    a = eval_full(d, ring) if full else eval(d, ring)
    b = eval_full(e, ring) if full else eval(e, ring)
    diff = first_difference(a, b)
    if diff is None:
        return Verdict(True, tag=ring.tag)
    i, j, x, y = diff
    rn, cn = a.row_names(), a.col_names()
    return Verdict(False, i, j, x, y, format_name(d.cod, rn[i]), format_name(d.dom, cn[j]), ring.tag)


def _common_ring(d: Diagram, e: Diagram) -> sr.Semiring:
    from .diagram import scalars

    tags = scalars(d) | scalars(e)
    if len(tags) > 1:
        raise sr.TagMismatch(f"diagrams mix scalars from {sorted(tags)}")
    return sr.get(tags.pop()) if tags else sr.Q


# internal language: any object as a single wire

def color_of(x: Sequence[Color]) -> Color:
    """Fold wires into one color: A | B becomes (A*B) + (A+B)."""
    x = tuple(x)
    if not x:
        return ZERO
    acc = x[0]
    for b in x[1:]:
        acc = Plus(Tensor(acc, b), Plus(acc, b))
    return acc


def _unfold(a: Color, b: Color) -> Diagram:
    """[(A*B)+(A+B)] -> [A, B], semantically the identity."""
    return seq_all([
        mirror(PlusG(Tensor(a, b), Plus(a, b))),
        mirror(Ten(a, b)) @ mirror(PlusG(a, b)),
        Id(a) @ Swap(b, a) @ Id(b),
        Contr(a) @ Contr(b),
    ])


def psi(x: Sequence[Color]) -> Diagram:
    """[color_of(x)] -> x."""
    x = tuple(x)
    if not x:
        return mirror(Null(ZERO))
    if len(x) == 1:
        return Id(x[0])
    head = x[:-1]
    return _unfold(color_of(head), x[-1]) >> (psi(head) @ Id(x[-1]))


def to_single_color(d: Diagram) -> Diagram:
    """[color_of(dom)] -> [color_of(cod)] with the same matrix as ``d``."""
    return seq_all([psi(d.dom), d, mirror(psi(d.cod))])


def embed(s: Diagram, dom: Sequence[Color], cod: Sequence[Color]) -> Diagram:
    """Inverse of :func:`to_single_color` on the given boundaries."""
    return seq_all([mirror(psi(dom)), s, psi(cod)])
