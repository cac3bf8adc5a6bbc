"""Concrete syntax for colors, objects, diagrams; DOT export.

Diagram grammar (``;`` reads top to bottom, ``|`` is side by side, ``~``
mirrors; ``~`` binds tightest, then ``|``, then ``;``)::

    diagram := par { ";" par }
    par     := unary { "|" unary }
    unary   := "~" atom | atom
    atom    := gen | "(" diagram ")"
    gen     := "id<" C ">" | "swap<" C "," C ">" | "ten<" C "," C ">"
             | "plus<" C "," C ">" | "cnt<" C ">" | "nil<" C ">" | "unit"
             | "adp<" C "," C ">" | "scl<" scalar ";" C ">" | "empty"
    C       := "0" | "1" | "(" C "+" C ")" | "(" C "*" C ")"

``#`` starts a comment running to the end of the line.  A comment of the form
``# semiring: TAG`` selects the semiring used for scalar literals.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Optional

from . import semiring as sr
from .colors import ONE, ZERO, Color, Plus, Tensor
from .diagram import (
    Adapt, Contr, Diagram, Empty, Id, Mirror, Null, Par, PlusG, Scal, Seq, Swap, Ten, Unit,
)
from .errors import TpcError, TypeMismatch


@dataclass(frozen=True)
class SourceSpan:
    start: int
    end: int


class TpcSyntaxError(TpcError, ValueError):
    def __init__(self, message: str, span: SourceSpan, text: str = ""):
        self.span = span
        self.text = text
        super().__init__(f"{message} at {self.where()}")

    def where(self) -> str:
        if not self.text:
            return f"offset {self.span.start}"
        line = self.text.count("\n", 0, self.span.start) + 1
        col = self.span.start - (self.text.rfind("\n", 0, self.span.start) + 1) + 1
        return f"line {line}, column {col}"


class TpcTypeError(TpcSyntaxError):
    pass


_SEMIRING_PRAGMA = re.compile(r"#\s*semiring\s*:\s*(\w+)")


def semiring_pragma(text: str) -> Optional[str]:
    m = _SEMIRING_PRAGMA.search(text)
    return m.group(1) if m else None


class _Parser:
    def __init__(self, text: str, ring: sr.Semiring):
        self.text = text
        self.pos = 0
        self.ring = ring

    def error(self, msg: str, start: Optional[int] = None, cls=TpcSyntaxError):
        start = self.pos if start is None else start
        return cls(msg, SourceSpan(start, max(start, self.pos)), self.text)

    def ws(self) -> None:
        t = self.text
        while self.pos < len(t):
            ch = t[self.pos]
            if ch.isspace():
                self.pos += 1
            elif ch == "#":
                nl = t.find("\n", self.pos)
                self.pos = len(t) if nl < 0 else nl + 1
            else:
                break

    def peek(self, s: str) -> bool:
        self.ws()
        return self.text.startswith(s, self.pos)

    def expect(self, s: str) -> None:
        if not self.peek(s):
            got = self.text[self.pos:self.pos + 12] or "end of input"
            raise self.error(f"expected {s!r}, found {got!r}")
        self.pos += len(s)

    def end(self) -> None:
        self.ws()
        if self.pos != len(self.text):
            raise self.error(f"unexpected {self.text[self.pos:self.pos + 12]!r}")

    def color(self) -> Color:
        self.ws()
        start = self.pos
        if self.peek("0"):
            self.pos += 1
            return ZERO
        if self.peek("1"):
            self.pos += 1
            return ONE
        if self.peek("("):
            self.pos += 1
            left = self.color()
            if self.peek("+"):
                node = Plus
            elif self.peek("*"):
                node = Tensor
            else:
                raise self.error("expected '+' or '*' in color")
            self.pos += 1
            right = self.color()
            self.expect(")")
            return node(left, right)
        raise self.error("expected a color", start)

    def obj(self) -> tuple:
        self.expect("[")
        out = []
        if self.peek("]"):
            self.pos += 1
            return ()
        out.append(self.color())
        while self.peek(","):
            self.pos += 1
            out.append(self.color())
        self.expect("]")
        return tuple(out)

    def diagram(self) -> Diagram:
        start = self.pos
        d = self.par()
        while self.peek(";"):
            self.pos += 1
            e = self.par()
            try:
                d = Seq(d, e)
            except TypeMismatch as exc:
                raise self.error(str(exc), start, TpcTypeError) from None
        return d

    def par(self) -> Diagram:
        d = self.unary()
        while self.peek("|"):
            self.pos += 1
            d = Par(d, self.unary())
        return d

    def unary(self) -> Diagram:
        if self.peek("~"):
            self.pos += 1
            return Mirror(self.atom())
        return self.atom()

    def atom(self) -> Diagram:
        if self.peek("("):
            self.pos += 1
            d = self.diagram()
            self.expect(")")
            return d
        return self.gen()

    def _colors(self, n: int) -> list:
        self.expect("<")
        cs = [self.color()]
        for _ in range(n - 1):
            self.expect(",")
            cs.append(self.color())
        self.expect(">")
        return cs

    def gen(self) -> Diagram:
        self.ws()
        start = self.pos
        m = re.compile(r"[a-z]+").match(self.text, self.pos)
        if not m:
            raise self.error("expected a generator")
        word = m.group(0)
        self.pos = m.end()
        try:
            if word == "unit":
                return Unit()
            if word == "empty":
                return Empty()
            if word == "id":
                return Id(*self._colors(1))
            if word == "cnt":
                return Contr(*self._colors(1))
            if word == "nil":
                return Null(*self._colors(1))
            if word in ("swap", "ten", "plus", "adp"):
                node = {"swap": Swap, "ten": Ten, "plus": PlusG, "adp": Adapt}[word]
                return node(*self._colors(2))
            if word == "scl":
                self.expect("<")
                semi = self.text.find(";", self.pos)
                if semi < 0:
                    raise self.error("expected ';' in scalar generator")
                lit_start = self.pos
                lit = self.text[self.pos:semi]
                try:
                    value = self.ring.parse(lit)
                except sr.LiteralError as exc:
                    self.pos = semi
                    raise self.error(str(exc), lit_start) from None
                self.pos = semi + 1
                c = self.color()
                self.expect(">")
                return Scal(sr.Scalar(self.ring.tag, value), c)
        except TypeMismatch as exc:
            raise self.error(str(exc), start, TpcTypeError) from None
        raise self.error(f"unknown generator {word!r}", start)


def _ring_for(text: str, semiring) -> sr.Semiring:
    if semiring is not None:
        return sr.get(semiring)
    tag = semiring_pragma(text)
    return sr.get(tag) if tag else sr.Q


def parse_color(text: str) -> Color:
    p = _Parser(text, sr.Q)
    c = p.color()
    p.end()
    return c


def parse_obj(text: str) -> tuple:
    p = _Parser(text, sr.Q)
    x = p.obj()
    p.end()
    return x


def parse_diagram(text: str, semiring=None) -> Diagram:
    """Parse and type-check a diagram; scalars are read in ``semiring``
    (default: the file's ``# semiring:`` pragma, else Q)."""
    p = _Parser(text, _ring_for(text, semiring))
    d = p.diagram()
    p.end()
    return d


# printing

def print_color(c: Color) -> str:
    return str(c)


def print_obj(x) -> str:
    return "[" + ", ".join(str(c) for c in x) + "]"


def _gen_text(d: Diagram) -> Optional[str]:
    if isinstance(d, Unit):
        return "unit"
    if isinstance(d, Empty):
        return "empty"
    if isinstance(d, Id):
        return f"id<{d.a}>"
    if isinstance(d, Contr):
        return f"cnt<{d.a}>"
    if isinstance(d, Null):
        return f"nil<{d.a}>"
    if isinstance(d, Swap):
        return f"swap<{d.a},{d.b}>"
    if isinstance(d, Ten):
        return f"ten<{d.a},{d.b}>"
    if isinstance(d, PlusG):
        return f"plus<{d.a},{d.b}>"
    if isinstance(d, Adapt):
        return f"adp<{d.a},{d.b}>"
    if isinstance(d, Scal):
        return f"scl<{d.s};{d.a}>"
    return None


def _p_seq(d: Diagram) -> str:
    spine = []
    while isinstance(d, Seq):
        spine.append(d.e)
        d = d.d
    parts = [_p_par(d)] + [_p_par(e, nested_seq=True) for e in reversed(spine)]
    return " ; ".join(parts)


def _p_par(d: Diagram, nested_seq: bool = False) -> str:
    if isinstance(d, Seq):
        return "(" + _p_seq(d) + ")"
    spine = []
    while isinstance(d, Par):
        spine.append(d.e)
        d = d.d
    parts = [_p_unary(d)] + [_p_unary(e) for e in reversed(spine)]
    return " | ".join(parts)


def _p_unary(d: Diagram) -> str:
    if isinstance(d, Mirror):
        inner = _gen_text(d.d)
        return "~" + (inner if inner is not None else "(" + _p_seq(d.d) + ")")
    g = _gen_text(d)
    if g is not None:
        return g
    return "(" + _p_seq(d) + ")"


def print_diagram(d: Diagram) -> str:
    return _p_seq(d)


def render_program(d: Diagram, tag: Optional[str] = None) -> str:
    """Printable file contents with a semiring pragma when scalars occur."""
    from .diagram import scalars

    tags = scalars(d)
    tag = tag or (next(iter(tags)) if len(tags) == 1 else None)
    head = f"# semiring: {tag}\n" if tag else ""
    return head + print_diagram(d) + "\n"


# DOT export

_NAMES = {Ten: "ten", PlusG: "plus", Contr: "cnt", Null: "nil", Unit: "unit",
          Adapt: "adp", Scal: "scl"}


def export_dot(d: Diagram, name: str = "diagram") -> str:
    """Graphviz rendering, read top to bottom: nodes are generator
    occurrences, edges are wires labeled with their colors."""
    lines = [f"digraph {name} {{", "  rankdir=TB;", "  node [shape=box];"]
    counter = [0]

    def node(label: str, shape: str = "box") -> str:
        nid = f"n{counter[0]}"
        counter[0] += 1
        lines.append(f'  {nid} [label="{label}", shape={shape}];')
        return nid

    def edge(src: str, dst: str, c: Color) -> None:
        lines.append(f'  {src} -> {dst} [label="{c}"];')

    wires = []
    for i, c in enumerate(d.dom):
        wires.append((node(f"in{i + 1}", "plaintext"), c))

    def walk(x: Diagram, off: int, mir: bool) -> None:
        if isinstance(x, Seq):
            for p in ([x.e, x.d] if mir else [x.d, x.e]):
                walk(p, off, mir)
        elif isinstance(x, Par):
            walk(x.d, off, mir)
            walk(x.e, off + len(x.d.dom if mir else x.d.cod), mir)
        elif isinstance(x, Mirror):
            walk(x.d, off, not mir)
        elif isinstance(x, (Id, Empty)):
            pass
        elif isinstance(x, Swap):
            wires[off], wires[off + 1] = wires[off + 1], wires[off]
        else:
            label = _NAMES[type(x)]
            if isinstance(x, Scal):
                label = f"scl {x.s}"
            nid = node(("~" if mir else "") + label)
            ins, outs = (x.cod, x.dom) if mir else (x.dom, x.cod)
            for src, c in wires[off:off + len(ins)]:
                edge(src, nid, c)
            wires[off:off + len(ins)] = [(nid, c) for c in outs]

    walk(d, 0, False)
    for j, (src, c) in enumerate(wires):
        edge(src, node(f"out{j + 1}", "plaintext"), c)
    lines.append("}")
    return "\n".join(lines) + "\n"
