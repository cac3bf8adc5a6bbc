"""Exact matrix semantics.

``eval_full`` computes the full-calculus matrix of a diagram: rows are
indexed by ``enum_full(cod)`` and columns by ``enum_full(dom)``.  The
functional semantics ``eval`` is its restriction, obtained by dropping the
empty-name row and column after checking they are trivial.

The evaluator flattens a term into a list of slices (one generator placed at
a wire offset, or a permutation of wires) and pushes each input basis name
through the slices as a sparse vector of worlds.  A world lists only the
selected wires, so cost follows the number of live tokens rather than the
exponential size of intermediate enumerations.

``eval_full_dense`` is a second, independent evaluator that follows the
textbook definition literally (matrix products, name-paired Kronecker
products, transposes); it is only practical for small objects and serves as
a cross-check.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Any, Optional, Sequence

from . import semiring as sr
from .colors import dim, enum, enum_full, format_name, name_index
from .diagram import (
    Adapt, Contr, Diagram, Empty, Id, Mirror, Null, Par, PlusG, Scal, Seq, Swap, Ten, Unit,
    scalars,
)
from .errors import InternalError, NotFunctional, ShapeError, TagMismatch


@dataclass(frozen=True, eq=False)
class SemMatrix:
    """Dense matrix over a semiring, optionally annotated with boundaries.

    ``rows_obj``/``cols_obj`` are the codomain/domain objects when the matrix
    is the semantics of a diagram; ``full`` tells which enumeration indexes it.
    """

    tag: str
    entries: tuple
    nrows: int
    ncols: int
    rows_obj: Optional[tuple] = None
    cols_obj: Optional[tuple] = None
    full: bool = False

    @property
    def ring(self) -> sr.Semiring:
        return sr.get(self.tag)

    @staticmethod
    def from_rows(ring, rows: Sequence[Sequence[Any]], ncols: Optional[int] = None,
                  rows_obj=None, cols_obj=None, full: bool = False) -> SemMatrix:
        ring = sr.get(ring)
        rows = tuple(tuple(r) for r in rows)
        if ncols is None:
            ncols = len(rows[0]) if rows else 0
        for r in rows:
            if len(r) != ncols:
                raise ShapeError("ragged matrix")
            for v in r:
                if not ring.contains(v):
                    raise TagMismatch(f"{v!r} is not an element of {ring.tag}")
        return SemMatrix(ring.tag, rows, len(rows), ncols, rows_obj, cols_obj, full)

    @staticmethod
    def zeros(ring, nrows: int, ncols: int) -> SemMatrix:
        ring = sr.get(ring)
        return SemMatrix(ring.tag, tuple((ring.zero,) * ncols for _ in range(nrows)), nrows, ncols)

    @staticmethod
    def identity(ring, n: int) -> SemMatrix:
        ring = sr.get(ring)
        rows = tuple(tuple(ring.one if i == j else ring.zero for j in range(n)) for i in range(n))
        return SemMatrix(ring.tag, rows, n, n)

    def __getitem__(self, ij: tuple) -> Any:
        i, j = ij
        return self.entries[i][j]

    @property
    def shape(self) -> tuple:
        return (self.nrows, self.ncols)

    def rows(self) -> list:
        return [list(r) for r in self.entries]

    def row_names(self) -> Optional[list]:
        if self.rows_obj is None:
            return None
        return enum_full(self.rows_obj) if self.full else enum(self.rows_obj)

    def col_names(self) -> Optional[list]:
        if self.cols_obj is None:
            return None
        return enum_full(self.cols_obj) if self.full else enum(self.cols_obj)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, SemMatrix) and equals(self, other)

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        fmt = self.ring.format
        body = "; ".join(" ".join(fmt(v) for v in r) for r in self.entries)
        return f"SemMatrix[{self.tag}]({self.nrows}x{self.ncols}: {body})"

    def to_json(self) -> dict:
        fmt = self.ring.format
        return {
            "semiring": self.tag,
            "rows": self.nrows,
            "cols": self.ncols,
            "entries": [[fmt(v) for v in r] for r in self.entries],
        }

    @staticmethod
    def from_json(data: Any) -> SemMatrix:
        if isinstance(data, str):
            data = json.loads(data)
        try:
            ring = sr.get(data["semiring"])
            nrows, ncols = int(data["rows"]), int(data["cols"])
            raw = data["entries"]
        except (KeyError, TypeError, ValueError) as exc:
            raise ShapeError(f"malformed matrix JSON: {exc}") from exc
        if len(raw) != nrows or any(len(r) != ncols for r in raw):
            raise ShapeError(f"entries do not match declared shape {nrows}x{ncols}")
        rows = [[ring.parse(str(v)) for v in r] for r in raw]
        return SemMatrix.from_rows(ring, rows, ncols)

    def format_text(self) -> str:
        """Human-readable table with basis-name annotations when available."""
        fmt = self.ring.format
        rn, cn = self.row_names(), self.col_names()
        rlab = [format_name(self.rows_obj, n) for n in rn] if rn else [str(i) for i in range(self.nrows)]
        clab = [format_name(self.cols_obj, n) for n in cn] if cn else [str(j) for j in range(self.ncols)]
        cells = [[fmt(v) for v in r] for r in self.entries]
        w0 = max([len(s) for s in rlab] + [0])
        widths = [max([len(clab[j])] + [len(cells[i][j]) for i in range(self.nrows)])
                  for j in range(self.ncols)]
        lines = [" " * w0 + " | " + " ".join(c.rjust(w) for c, w in zip(clab, widths))]
        lines.append("-" * len(lines[0]))
        for lab, row in zip(rlab, cells):
            lines.append(lab.rjust(w0) + " | " + " ".join(c.rjust(w) for c, w in zip(row, widths)))
        return "\n".join(lines)


# matrix operations

def _same_ring(a: SemMatrix, b: SemMatrix) -> sr.Semiring:
    if a.tag != b.tag:
        raise TagMismatch(f"mixing {a.tag} and {b.tag} matrices")
    return a.ring


def product(a: SemMatrix, b: SemMatrix) -> SemMatrix:
    """Ordinary matrix product a·b."""
    r = _same_ring(a, b)
    if a.ncols != b.nrows:
        raise ShapeError(f"cannot multiply {a.shape} by {b.shape}")
    add, mul, zero = r.add, r.mul, r.zero
    cols = list(zip(*b.entries)) if b.nrows else [()] * b.ncols
    out = []
    for row in a.entries:
        nz = [(k, v) for k, v in enumerate(row) if not r.is_zero(v)]
        line = []
        for col in cols:
            acc = zero
            for k, v in nz:
                acc = add(acc, mul(v, col[k]))
            line.append(acc)
        out.append(tuple(line))
    return SemMatrix(r.tag, tuple(out), a.nrows, b.ncols, a.rows_obj, b.cols_obj, a.full and b.full)


def kron(a: SemMatrix, b: SemMatrix) -> SemMatrix:
    """Kronecker product, left factor outer: row (i, k) -> i*b.nrows + k."""
    r = _same_ring(a, b)
    mul = r.mul
    out = []
    for ra in a.entries:
        for rb in b.entries:
            out.append(tuple(mul(x, y) for x in ra for y in rb))
    return SemMatrix(r.tag, tuple(out), a.nrows * b.nrows, a.ncols * b.ncols)


def direct_sum(a: SemMatrix, b: SemMatrix) -> SemMatrix:
    r = _same_ring(a, b)
    z = r.zero
    out = [tuple(ra) + (z,) * b.ncols for ra in a.entries]
    out += [(z,) * a.ncols + tuple(rb) for rb in b.entries]
    return SemMatrix(r.tag, tuple(out), a.nrows + b.nrows, a.ncols + b.ncols)


def transpose(a: SemMatrix) -> SemMatrix:
    cols = tuple(zip(*a.entries)) if a.nrows else tuple(() for _ in range(a.ncols))
    return SemMatrix(a.tag, cols, a.ncols, a.nrows, a.cols_obj, a.rows_obj, a.full)


def equals(a: SemMatrix, b: SemMatrix) -> bool:
    if a.tag != b.tag or a.shape != b.shape:
        return False
    eq = a.ring.eq
    return all(eq(x, y) for ra, rb in zip(a.entries, b.entries) for x, y in zip(ra, rb))


def first_difference(a: SemMatrix, b: SemMatrix) -> Optional[tuple]:
    """(row, col, a_value, b_value) of the first differing entry, or None."""
    if a.shape != b.shape:
        raise ShapeError(f"shapes differ: {a.shape} vs {b.shape}")
    eq = _same_ring(a, b).eq
    for i, (ra, rb) in enumerate(zip(a.entries, b.entries)):
        for j, (x, y) in enumerate(zip(ra, rb)):
            if not eq(x, y):
                return (i, j, x, y)
    return None


def resolve_ring(d: Diagram, semiring=None) -> sr.Semiring:
    """The semiring a diagram is evaluated in: explicit, else from its scalars, else Q."""
    tags = scalars(d)
    if semiring is not None:
        ring = sr.get(semiring)
        bad = tags - {ring.tag}
        if bad:
            raise TagMismatch(f"diagram has {sorted(bad)} scalars, evaluation asked for {ring.tag}")
        return ring
    if len(tags) > 1:
        raise TagMismatch(f"diagram mixes scalars from {sorted(tags)}")
    return sr.get(tags.pop()) if tags else sr.Q


# slice compilation

# a slice is (offset, n_in, n_out, kind, data, functional)
# kind: "gen" (data = local apply function) | "perm" (data = {old: new}) | "scal"

def _gen_apply(g: Diagram, mirrored: bool, ring: sr.Semiring):
    """Local action of a generator on its own wires.

    Input/output are tuples of Optional leaf indices; the result is a list of
    (output, coefficient) with coefficient None meaning one.
    """
    if isinstance(g, Ten):
        db = dim(g.b)
        if not mirrored:
            def f(w):
                a, b = w
                if a is None and b is None:
                    return [((None,), None)]
                if a is None or b is None:
                    return []
                return [((a * db + b,), None)]
        else:
            def f(w):
                (x,) = w
                if x is None:
                    return [((None, None), None)]
                return [((x // db, x % db), None)]
        return f
    if isinstance(g, PlusG):
        da = dim(g.a)
        if not mirrored:
            def f(w):
                a, b = w
                if a is None:
                    return [((None if b is None else da + b,), None)]
                return [] if b is not None else [((a,), None)]
        else:
            def f(w):
                (x,) = w
                if x is None:
                    return [((None, None), None)]
                return [((x, None), None)] if x < da else [((None, x - da), None)]
        return f
    if isinstance(g, Contr):
        if not mirrored:
            def f(w):
                a, b = w
                if a is None:
                    return [((b,), None)]
                return [] if b is not None else [((a,), None)]
        else:
            def f(w):
                (x,) = w
                if x is None:
                    return [((None, None), None)]
                return [((x, None), None), ((None, x), None)]
        return f
    if isinstance(g, Null):
        if not mirrored:
            return lambda w: [((None,), None)]
        return lambda w: [((), None)] if w[0] is None else []
    if isinstance(g, Unit):
        if not mirrored:
            return lambda w: [((0,), None), ((None,), None)]
        return lambda w: [((), None)]
    raise InternalError(f"no local action for {g!r}")


def compile_slices(d: Diagram, ring: sr.Semiring) -> list:
    out: list = []
    _compile(d, 0, False, ring, out)
    return _merge_perms(out)


def _compile(d: Diagram, off: int, mir: bool, ring: sr.Semiring, out: list) -> None:
    # iterative over Seq spines to avoid deep recursion on long chains
    if isinstance(d, Seq):
        parts = _seq_parts(d)
        if mir:
            parts.reverse()
        for p in parts:
            _compile(p, off, mir, ring, out)
        return
    if isinstance(d, Par):
        _compile(d.d, off, mir, ring, out)
        width = len(d.d.dom if mir else d.d.cod)
        _compile(d.e, off + width, mir, ring, out)
        return
    if isinstance(d, Mirror):
        _compile(d.d, off, not mir, ring, out)
        return
    if isinstance(d, (Id, Adapt, Empty)):
        return
    if isinstance(d, Swap):
        out.append((off, 2, 2, "perm", {off: off + 1, off + 1: off}, True))
        return
    if isinstance(d, Scal):
        if d.s.tag != ring.tag:
            raise TagMismatch(f"scalar {d.s} is {d.s.tag}, evaluating over {ring.tag}")
        if not ring.eq(d.s.value, ring.one):
            out.append((off, 1, 1, "scal", d.s.value, True))
        return
    n_in, n_out = (len(d.cod), len(d.dom)) if mir else (len(d.dom), len(d.cod))
    out.append((off, n_in, n_out, "gen", _gen_apply(d, mir, ring), d.functional))


def _seq_parts(d: Diagram) -> list:
    parts, stack = [], [d]
    while stack:
        x = stack.pop()
        if isinstance(x, Seq):
            stack += [x.e, x.d]
        else:
            parts.append(x)
    return parts


def _merge_perms(slices: list) -> list:
    out: list = []
    for s in slices:
        if s[3] == "perm" and out and out[-1][3] == "perm":
            first, second = out[-1][4], s[4]
            comp = {}
            for p in set(first) | set(second):
                mid = first.get(p, p)
                comp[p] = second.get(mid, mid)
            comp = {k: v for k, v in comp.items() if k != v}
            out[-1] = (0, 0, 0, "perm", comp, True)
            if not comp:
                out.pop()
        else:
            out.append(s)
    return out


def _step(vec: dict, sl: tuple, ring: sr.Semiring) -> dict:
    off, n_in, n_out, kind, data, functional = sl
    add, mul = ring.add, ring.mul
    out: dict = {}
    if kind == "perm":
        for w, c in vec.items():
            nw = tuple(sorted((data.get(p, p), l) for p, l in w))
            out[nw] = add(out[nw], c) if nw in out else c
        return out
    hi = off + n_in
    delta = n_out - n_in
    for w, c in vec.items():
        before, after = [], []
        local = [None] * n_in
        touched = False
        for p, l in w:
            if p < off:
                before.append((p, l))
            elif p < hi:
                local[p - off] = l
                touched = True
            else:
                after.append((p + delta, l))
        if kind == "scal":
            v = mul(c, data) if touched else c
            out[w] = add(out[w], v) if w in out else v
            continue
        if not touched and functional:
            results = [((None,) * n_out, None)]
        else:
            results = data(tuple(local))
        for lo, cc in results:
            mid = tuple((off + i, l) for i, l in enumerate(lo) if l is not None)
            nw = tuple(before) + mid + tuple(after)
            v = c if cc is None else mul(c, cc)
            out[nw] = add(out[nw], v) if nw in out else v
    if not ring.exact:
        return out
    return {w: c for w, c in out.items() if not ring.is_zero(c)}


def _to_sparse(name: Sequence[Optional[int]]) -> tuple:
    return tuple((i, l) for i, l in enumerate(name) if l is not None)


def _to_dense(w: tuple, n: int) -> tuple:
    name = [None] * n
    for p, l in w:
        name[p] = l
    return tuple(name)


def apply_full(d: Diagram, name: Sequence[Optional[int]], semiring=None) -> dict:
    """Image of one input basis name: {output name: coefficient}."""
    ring = resolve_ring(d, semiring)
    slices = compile_slices(d, ring)
    return _push(slices, name, len(d.cod), ring)


def _push(slices: list, name, n_out: int, ring: sr.Semiring) -> dict:
    vec = {_to_sparse(name): ring.one}
    for sl in slices:
        vec = _step(vec, sl, ring)
        if not vec:
            break
    return {_to_dense(w, n_out): c for w, c in vec.items()}


def eval_full(d: Diagram, semiring=None) -> SemMatrix:
    """Full-calculus semantics, indexed by enum_full(cod) x enum_full(dom)."""
    ring = resolve_ring(d, semiring)
    slices = compile_slices(d, ring)
    cod = d.cod
    nr, nc = dim(cod) + 1, dim(d.dom) + 1
    zero = ring.zero
    cols = []
    for name in enum_full(d.dom):
        col = [zero] * nr
        for out, c in _push(slices, name, len(cod), ring).items():
            i = name_index(cod, out)
            col[i] = ring.add(col[i], c)
        cols.append(col)
    rows = tuple(tuple(cols[j][i] for j in range(nc)) for i in range(nr))
    return SemMatrix(ring.tag, rows, nr, nc, d.cod, d.dom, True)


def restrict(full: SemMatrix) -> SemMatrix:
    """Drop the empty-name row/column, checking they carry no information."""
    ring = full.ring
    nr, nc = full.nrows - 1, full.ncols - 1
    e = full.entries
    if any(not ring.is_zero(e[nr][j]) for j in range(nc)) or \
            any(not ring.is_zero(e[i][nc]) for i in range(nr)) or \
            not ring.eq(e[nr][nc], ring.one):
        raise InternalError("functional diagram with non-trivial empty-name block")
    rows = tuple(tuple(r[:nc]) for r in e[:nr])
    return SemMatrix(full.tag, rows, nr, nc, full.rows_obj, full.cols_obj, False)


def eval(d: Diagram, semiring=None) -> SemMatrix:  # noqa: A001
    """Functional semantics, indexed by enum(cod) x enum(dom)."""
    if not d.functional:
        raise NotFunctional("diagram uses Unit; use eval_full")
    return restrict(eval_full(d, semiring))


def extend_full(m: SemMatrix) -> SemMatrix:
    """M ⊕ [1]: the full matrix of a functional semantics."""
    one = SemMatrix.identity(m.tag, 1)
    out = direct_sum(m, one)
    return SemMatrix(out.tag, out.entries, out.nrows, out.ncols, m.rows_obj, m.cols_obj, True)


def in_image(full: SemMatrix) -> bool:
    """Whether the corner entry has the form c + 1."""
    try:
        full.ring.sub_one(full.entries[-1][-1])
        return True
    except sr.NotRepresentable:
        return False


# dense reference evaluator

def gen_matrix_full(g: Diagram, semiring=None) -> SemMatrix:
    """Full matrix of a generator, written entry by entry from basis names."""
    ring = resolve_ring(g, semiring)
    one, zero = ring.one, ring.zero
    rows_n, cols_n = enum_full(g.cod), enum_full(g.dom)

    def entry(o, i):
        if isinstance(g, (Id, Adapt)):
            return one if o == i else zero
        if isinstance(g, Swap):
            return one if o == (i[1], i[0]) else zero
        if isinstance(g, Ten):
            a, b = i
            if a is None and b is None:
                return one if o == (None,) else zero
            if a is None or b is None:
                return zero
            return one if o == (a * dim(g.b) + b,) else zero
        if isinstance(g, PlusG):
            a, b = i
            if a is not None and b is not None:
                return zero
            want = (None,) if a is None and b is None else ((a,) if b is None else (dim(g.a) + b,))
            return one if o == want else zero
        if isinstance(g, Contr):
            a, b = i
            if a is not None and b is not None:
                return zero
            return one if o == ((a if b is None else b),) else zero
        if isinstance(g, Null):
            return one if o == (None,) else zero
        if isinstance(g, Unit):
            return one
        if isinstance(g, Scal):
            if o != i:
                return zero
            return one if i == (None,) else g.s.value
        if isinstance(g, Empty):
            return one
        raise InternalError(f"not a generator: {g!r}")

    rows = tuple(tuple(entry(o, i) for i in cols_n) for o in rows_n)
    return SemMatrix(ring.tag, rows, len(rows_n), len(cols_n), g.cod, g.dom, True)


def _split_name(name: tuple, k: int) -> tuple:
    return name[:k], name[k:]


def eval_full_dense(d: Diagram, semiring=None) -> SemMatrix:
    """Reference evaluator: products, name-paired Kronecker, transposes."""
    ring = resolve_ring(d, semiring)
    return _dense(d, ring)


def _dense(d: Diagram, ring: sr.Semiring) -> SemMatrix:
    if isinstance(d, Seq):
        m = product(_dense(d.e, ring), _dense(d.d, ring))
        return SemMatrix(m.tag, m.entries, m.nrows, m.ncols, d.cod, d.dom, True)
    if isinstance(d, Mirror):
        m = transpose(_dense(d.d, ring))
        return SemMatrix(m.tag, m.entries, m.nrows, m.ncols, d.cod, d.dom, True)
    if isinstance(d, Par):
        a, b = _dense(d.d, ring), _dense(d.e, ring)
        ka, kb = len(d.d.cod), len(d.d.dom)
        ia = {n: i for i, n in enumerate(enum_full(d.d.cod))}
        ib = {n: i for i, n in enumerate(enum_full(d.e.cod))}
        ja = {n: i for i, n in enumerate(enum_full(d.d.dom))}
        jb = {n: i for i, n in enumerate(enum_full(d.e.dom))}
        rows = []
        for o in enum_full(d.cod):
            oa, ob = o[:ka], o[ka:]
            row = []
            for i in enum_full(d.dom):
                xa, xb = i[:kb], i[kb:]
                row.append(ring.mul(a[ia[oa], ja[xa]], b[ib[ob], jb[xb]]))
            rows.append(tuple(row))
        return SemMatrix(ring.tag, tuple(rows), len(rows), dim(d.dom) + 1, d.cod, d.dom, True)
    return gen_matrix_full(d, ring)
