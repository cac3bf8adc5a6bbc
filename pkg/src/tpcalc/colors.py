"""Colors, objects, dimensions and the basis enumeration.

A basis name of an object with n wires is a tuple of length n whose entries
are ``None`` (wire not selected) or a leaf index of that wire's color.  The
empty name (all ``None``) only occurs in the full enumeration.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Optional, Sequence, Union

from .errors import ColorError


class Color:
    __slots__ = ()

    def __add__(self, other: Color) -> Color:
        return Plus(self, other)

    def __mul__(self, other: Color) -> Color:
        return Tensor(self, other)


@dataclass(frozen=True)
class _Zero(Color):
    def __str__(self) -> str:
        return "0"

    def __repr__(self) -> str:
        return "ZERO"


@dataclass(frozen=True)
class _One(Color):
    def __str__(self) -> str:
        return "1"

    def __repr__(self) -> str:
        return "ONE"


@dataclass(frozen=True)
class Plus(Color):
    left: Color
    right: Color

    def __str__(self) -> str:
        return f"({self.left}+{self.right})"


@dataclass(frozen=True)
class Tensor(Color):
    left: Color
    right: Color

    def __str__(self) -> str:
        return f"({self.left}*{self.right})"


ZERO: Color = _Zero()
ONE: Color = _One()
BIT: Color = Plus(ONE, ONE)

Obj = tuple  # tuple[Color, ...]; ∥ is strict, so equality is tuple equality
Name = tuple  # tuple[Optional[int], ...]


def obj(*colors: Color) -> tuple:
    for c in colors:
        if not isinstance(c, Color):
            raise ColorError(f"not a color: {c!r}")
    return tuple(colors)


@lru_cache(maxsize=None)
def _dim_color(c: Color) -> int:
    if c is ZERO or isinstance(c, _Zero):
        return 0
    if isinstance(c, _One):
        return 1
    if isinstance(c, Plus):
        return _dim_color(c.left) + _dim_color(c.right)
    if isinstance(c, Tensor):
        return _dim_color(c.left) * _dim_color(c.right)
    raise ColorError(f"not a color: {c!r}")


@lru_cache(maxsize=None)
def _dim_obj(x: tuple) -> int:
    d = 0
    for c in x:
        b = _dim_color(c)
        d = d * b + d + b
    return d


def dim(x: Union[Color, Sequence[Color]]) -> int:
    if isinstance(x, Color):
        return _dim_color(x)
    return _dim_obj(tuple(x))


def depth(c: Color) -> int:
    """Height of the color tree, counting a leaf as 1."""
    if isinstance(c, (Plus, Tensor)):
        return 1 + max(depth(c.left), depth(c.right))
    return 1


@lru_cache(maxsize=None)
def leaves(c: Color) -> tuple:
    """Leaf descriptors: L/R paths through sums, left factor outer for products."""
    if isinstance(c, _Zero):
        return ()
    if isinstance(c, _One):
        return ("",)
    if isinstance(c, Plus):
        return tuple("L" + p for p in leaves(c.left)) + tuple("R" + p for p in leaves(c.right))
    if isinstance(c, Tensor):
        return tuple(a + b for a in leaves(c.left) for b in leaves(c.right))
    raise ColorError(f"not a color: {c!r}")


def _summands(c: Color) -> list:
    out = []
    while isinstance(c, Plus):
        out.append(c.left)
        c = c.right
    if not isinstance(c, _Zero):
        out.append(c)
    return out


def _factors(c: Color) -> list:
    out = []
    while isinstance(c, Tensor):
        out.append(c.left)
        c = c.right
    if not isinstance(c, _One):
        out.append(c)
    return out


def _nest(items: list, node: type, unit: Color) -> Color:
    if not items:
        return unit
    acc = items[-1]
    for c in reversed(items[:-1]):
        acc = node(c, acc)
    return acc


@lru_cache(maxsize=None)
def canon_color(c: Color) -> Color:
    """Normal form under associativity and units of both products.

    Sums are flattened with 0 dropped, products flattened with 1 dropped,
    then re-nested to the right.  No commutativity or distributivity.
    """
    if isinstance(c, Plus):
        items = _summands(canon_color(c.left)) + _summands(canon_color(c.right))
        return _nest(items, Plus, ZERO)
    if isinstance(c, Tensor):
        items = _factors(canon_color(c.left)) + _factors(canon_color(c.right))
        return _nest(items, Tensor, ONE)
    return c


def equivalent(a: Color, b: Color) -> bool:
    return canon_color(a) == canon_color(b)


@lru_cache(maxsize=None)
def _enum(x: tuple) -> tuple:
    if not x:
        return ()
    *init, last = x
    init = tuple(init)
    k = len(x) - 1
    prev = _enum(init)
    lv = range(dim(last))
    pairs = tuple(p + (l,) for p in prev for l in lv)
    alone = tuple(p + (None,) for p in prev)
    last_only = tuple((None,) * k + (l,) for l in lv)
    return pairs + alone + last_only


def enum(x: Sequence[Color]) -> list:
    """Functional basis names of ``x`` in canonical (left-nested) order."""
    return list(_enum(tuple(x)))


def empty_name(x: Sequence[Color]) -> tuple:
    return (None,) * len(x)


def enum_full(x: Sequence[Color]) -> list:
    """Full-calculus names: ``enum(x)`` followed by the empty name."""
    return enum(x) + [empty_name(x)]


def name_index(x: Sequence[Color], name: Sequence[Optional[int]]) -> int:
    """Position of ``name`` in ``enum_full(x)`` without materializing it."""
    x = tuple(x)
    n = len(x)
    if len(name) != n:
        raise ColorError(f"name {name!r} does not fit object of {n} wires")
    # walk from the last wire backwards, accumulating offsets
    last_sel = -1
    for i in range(n - 1, -1, -1):
        if name[i] is not None:
            last_sel = i
            break
    if last_sel < 0:
        return dim(x)
    idx = 0
    # the prefix up to and including last_sel determines the index inside
    # enum(x[:last_sel+1]); unselected trailing wires shift it into the
    # "alone" blocks of the longer objects
    j = last_sel
    prefix_dim = dim(x[:j])
    b = dim(x[j])
    if not 0 <= name[j] < b:
        raise ColorError(f"leaf index {name[j]} out of range for {x[j]}")
    if any(v is not None for v in name[:j]):
        idx = name_index(x[:j], name[:j]) * b + name[j]
    else:
        idx = prefix_dim * b + prefix_dim + name[j]
    for k in range(j + 1, n):
        idx = dim(x[:k]) * dim(x[k]) + idx
    return idx


def format_name(x: Sequence[Color], name: Sequence[Optional[int]]) -> str:
    parts = []
    for i, (c, v) in enumerate(zip(x, name)):
        if v is None:
            continue
        desc = leaves(c)[v]
        parts.append(f"{i + 1}" + (f"={desc}" if desc else ""))
    return "{" + ",".join(parts) + "}"


def regroup_perm(left: Sequence[Color], right: Sequence[Color], mode: str = "functional") -> list:
    """Indices into the enumeration of ``left ++ right`` listed in block order.

    functional: pairs of enum(left) x enum(right) (left outer), then enum(left),
    then enum(right).  full: enum_full(left) x enum_full(right), left outer.
    """
    left, right = tuple(left), tuple(right)
    both = left + right
    el, er = empty_name(left), empty_name(right)
    if mode == "functional":
        block = [a + b for a in enum(left) for b in enum(right)]
        block += [a + er for a in enum(left)] + [el + b for b in enum(right)]
    elif mode == "full":
        block = [a + b for a in enum_full(left) for b in enum_full(right)]
    else:
        raise ValueError(f"unknown mode {mode!r}")
    return [name_index(both, nm) for nm in block]


def sample_color(rng, max_depth: int = 3, p_leaf: float = 0.45, p_zero: float = 0.1) -> Color:
    """Random color of height at most ``max_depth``."""
    if max_depth <= 1 or rng.random() < p_leaf:
        return ZERO if rng.random() < p_zero else ONE
    node = Plus if rng.random() < 0.5 else Tensor
    return node(sample_color(rng, max_depth - 1, p_leaf, p_zero),
                sample_color(rng, max_depth - 1, p_leaf, p_zero))


def reassociate(c: Color, rng) -> Color:
    """A random color equivalent to ``c`` (re-bracketing and unit insertion)."""
    flat = canon_color(c)
    return _rebuild(flat, rng)


def _rebuild(c: Color, rng) -> Color:
    if isinstance(c, (Plus, Tensor)):
        node, unit = (Plus, ZERO) if isinstance(c, Plus) else (Tensor, ONE)
        items = _summands(c) if node is Plus else _factors(c)
        items = [_rebuild(i, rng) for i in items]
        out = _random_bracket(items, node, rng)
    else:
        out = c
        node, unit = (Plus, ZERO) if rng.random() < 0.5 else (Tensor, ONE)
    if rng.random() < 0.25:
        out = node(out, unit) if rng.random() < 0.5 else node(unit, out)
    return out


def _random_bracket(items: list, node: type, rng) -> Color:
    if len(items) == 1:
        return items[0]
    k = rng.randint(1, len(items) - 1)
    return node(_random_bracket(items[:k], node, rng), _random_bracket(items[k:], node, rng))
