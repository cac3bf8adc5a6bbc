"""Exact commutative semirings used as coefficient domains.

Every semiring is a :class:`Semiring` instance registered under a short tag
(``bool``, ``nat``, ``qnn``, ``q``, ``qi``, ``qr2``, ``f64``).  Raw payloads
are plain Python values (ints, :class:`~fractions.Fraction`, small frozen
dataclasses); :class:`Scalar` pairs a payload with its semiring tag so that
values from different semirings cannot be mixed silently.
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Callable, Iterable

from .errors import NotRepresentable, TagMismatch, LiteralError


@dataclass(frozen=True)
class GaussRat:
    """a + b i with rational a, b."""

    re: Fraction
    im: Fraction

    def __add__(self, o: GaussRat) -> GaussRat:
        return GaussRat(self.re + o.re, self.im + o.im)

    def __mul__(self, o: GaussRat) -> GaussRat:
        return GaussRat(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)


@dataclass(frozen=True)
class Sqrt2Rat:
    """a + b sqrt(2) with rational a, b."""

    a: Fraction
    b: Fraction

    def __add__(self, o: Sqrt2Rat) -> Sqrt2Rat:
        return Sqrt2Rat(self.a + o.a, self.b + o.b)

    def __mul__(self, o: Sqrt2Rat) -> Sqrt2Rat:
        return Sqrt2Rat(self.a * o.a + 2 * self.b * o.b, self.a * o.b + self.b * o.a)


_RAT = r"\d+(?:/\d+)?"


def _rat(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise LiteralError(f"bad rational literal {text!r}") from exc


def _fmt_rat(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _parse_pair(text: str, suffix: str) -> tuple[Fraction, Fraction]:
    # a, b<suffix>, a+b<suffix>, a-b<suffix>; a bare suffix means coefficient 1
    t = text.replace(" ", "")
    m = re.fullmatch(
        rf"(?P<a>[+-]?{_RAT})?(?:(?P<s>[+-])?(?P<b>{_RAT})?{suffix})?", t
    )
    if not t or m is None or (m.group("a") is None and suffix not in t):
        raise LiteralError(f"bad literal {text!r}")
    a = _rat(m.group("a")) if m.group("a") else Fraction(0)
    b = Fraction(0)
    if t.endswith(suffix):
        b = _rat(m.group("b")) if m.group("b") else Fraction(1)
        if m.group("s") == "-":
            b = -b
        elif m.group("s") is None and m.group("a") is not None:
            raise LiteralError(f"bad literal {text!r}")
    return a, b


def _fmt_pair(a: Fraction, b: Fraction, suffix: str) -> str:
    if b == 0:
        return _fmt_rat(a)
    sign = "+" if b > 0 else "-"
    return f"{_fmt_rat(a)}{sign}{_fmt_rat(abs(b))}{suffix}"


@dataclass(frozen=True, eq=False)
class Semiring:
    """A commutative semiring over raw payloads."""

    tag: str
    zero: Any
    one: Any
    add: Callable[[Any, Any], Any]
    mul: Callable[[Any, Any], Any]
    eq: Callable[[Any, Any], bool]
    is_cancellative: bool
    exact: bool
    parse: Callable[[str], Any]
    format: Callable[[Any], str]
    contains: Callable[[Any], bool]
    sample: Callable[[random.Random], Any]
    _sub_one: Callable[[Any], Any]

    def __repr__(self) -> str:
        return f"Semiring({self.tag})"

    def scalar(self, value: Any) -> Scalar:
        if isinstance(value, str):
            value = self.parse(value)
        elif not self.contains(value):
            value = self.coerce(value)
        return Scalar(self.tag, value)

    def coerce(self, value: Any) -> Any:
        """Bring an int/Fraction/float into this semiring, or raise."""
        if self.contains(value):
            return value
        if self.tag in ("q", "qnn") and isinstance(value, int):
            value = Fraction(value)
        elif self.tag == "nat" and isinstance(value, Fraction) and value.denominator == 1:
            value = int(value)
        elif self.tag == "bool" and value in (0, 1):
            value = int(value)
        elif self.tag == "qi" and isinstance(value, (int, Fraction)):
            value = GaussRat(Fraction(value), Fraction(0))
        elif self.tag == "qr2" and isinstance(value, (int, Fraction)):
            value = Sqrt2Rat(Fraction(value), Fraction(0))
        elif self.tag == "f64" and isinstance(value, (int, Fraction)):
            value = float(value)
        if not self.contains(value):
            raise LiteralError(f"{value!r} is not an element of {self.tag}")
        return value

    def is_zero(self, v: Any) -> bool:
        return self.eq(v, self.zero)

    def sum(self, values: Iterable[Any]) -> Any:
        acc = self.zero
        for v in values:
            acc = self.add(acc, v)
        return acc

    def from_int(self, n: int) -> Any:
        """n-fold sum of one."""
        return self.sum(self.one for _ in range(n))

    def sub_one(self, v: Any) -> Any:
        """Some s with s + 1 = v; raises NotRepresentable if none exists."""
        return self._sub_one(v)

    def canon_plus_one(self, v: Any) -> Any:
        """Canonical representative of {s | s + 1 = v + 1}."""
        if self.is_cancellative:
            return v
        if self.tag == "bool":
            return 0
        raise NotImplementedError(self.tag)


@dataclass(frozen=True)
class Scalar:
    """A payload tagged with the semiring it lives in."""

    tag: str
    value: Any

    @property
    def ring(self) -> Semiring:
        return get(self.tag)

    def __str__(self) -> str:
        return self.ring.format(self.value)


def _bool_parse(text: str) -> int:
    t = text.strip()
    if t not in ("0", "1"):
        raise LiteralError(f"bad bool literal {text!r}")
    return int(t)


def _nat_parse(text: str) -> int:
    t = text.strip()
    if not t.isdigit():
        raise LiteralError(f"bad nat literal {text!r}")
    return int(t)


def _q_parse(text: str) -> Fraction:
    t = text.strip().replace(" ", "")
    if not re.fullmatch(rf"[+-]?{_RAT}", t):
        raise LiteralError(f"bad rational literal {text!r}")
    return _rat(t)


def _qnn_parse(text: str) -> Fraction:
    v = _q_parse(text)
    if v < 0:
        raise LiteralError(f"negative value {text!r} not in qnn")
    return v


def _f64_parse(text: str) -> float:
    try:
        return float(text.strip())
    except ValueError as exc:
        raise LiteralError(f"bad float literal {text!r}") from exc


def _small_rat(rng: random.Random, signed: bool) -> Fraction:
    num = rng.randint(-4 if signed else 0, 4)
    return Fraction(num, rng.choice((1, 1, 2, 3)))


def _no_witness(v: Any) -> Any:
    raise NotRepresentable(f"no s with s+1 = {v!r}")


def _nat_sub_one(v: int) -> int:
    return v - 1 if v >= 1 else _no_witness(v)


def _qnn_sub_one(v: Fraction) -> Fraction:
    return v - 1 if v >= 1 else _no_witness(v)


def _bool_sub_one(v: int) -> int:
    return 0 if v == 1 else _no_witness(v)


F64_EPS = 1e-9

_ONE_Q = Fraction(1)

BOOL = Semiring(
    "bool", 0, 1, lambda a, b: a | b, lambda a, b: a & b, lambda a, b: a == b,
    False, True, _bool_parse, str,
    lambda v: type(v) is int and v in (0, 1),
    lambda rng: rng.randint(0, 1), _bool_sub_one,
)
NAT = Semiring(
    "nat", 0, 1, lambda a, b: a + b, lambda a, b: a * b, lambda a, b: a == b,
    True, True, _nat_parse, str,
    lambda v: type(v) is int and v >= 0,
    lambda rng: rng.randint(0, 4), _nat_sub_one,
)
QNN = Semiring(
    "qnn", Fraction(0), _ONE_Q, lambda a, b: a + b, lambda a, b: a * b, lambda a, b: a == b,
    True, True, _qnn_parse, _fmt_rat,
    lambda v: isinstance(v, Fraction) and v >= 0,
    lambda rng: _small_rat(rng, False), _qnn_sub_one,
)
Q = Semiring(
    "q", Fraction(0), _ONE_Q, lambda a, b: a + b, lambda a, b: a * b, lambda a, b: a == b,
    True, True, _q_parse, _fmt_rat,
    lambda v: isinstance(v, Fraction),
    lambda rng: _small_rat(rng, True), lambda v: v - 1,
)
QI = Semiring(
    "qi", GaussRat(Fraction(0), Fraction(0)), GaussRat(_ONE_Q, Fraction(0)),
    lambda a, b: a + b, lambda a, b: a * b, lambda a, b: a == b,
    True, True,
    lambda t: GaussRat(*_parse_pair(t, "i")),
    lambda v: _fmt_pair(v.re, v.im, "i"),
    lambda v: isinstance(v, GaussRat),
    lambda rng: GaussRat(_small_rat(rng, True), _small_rat(rng, True)),
    lambda v: v + GaussRat(-_ONE_Q, Fraction(0)),
)
QR2 = Semiring(
    "qr2", Sqrt2Rat(Fraction(0), Fraction(0)), Sqrt2Rat(_ONE_Q, Fraction(0)),
    lambda a, b: a + b, lambda a, b: a * b, lambda a, b: a == b,
    True, True,
    lambda t: Sqrt2Rat(*_parse_pair(t, "r2")),
    lambda v: _fmt_pair(v.a, v.b, " r2").replace("+ ", "+").replace("- ", "-"),
    lambda v: isinstance(v, Sqrt2Rat),
    lambda rng: Sqrt2Rat(_small_rat(rng, True), _small_rat(rng, True)),
    lambda v: v + Sqrt2Rat(-_ONE_Q, Fraction(0)),
)
F64 = Semiring(
    "f64", 0.0, 1.0, lambda a, b: a + b, lambda a, b: a * b,
    lambda a, b: abs(a - b) <= F64_EPS,
    True, False, _f64_parse, repr,
    lambda v: isinstance(v, float),
    lambda rng: rng.uniform(-2.0, 2.0), lambda v: v - 1.0,
)

REGISTRY: dict[str, Semiring] = {r.tag: r for r in (BOOL, NAT, QNN, Q, QI, QR2, F64)}
EXACT_TAGS = tuple(t for t, r in REGISTRY.items() if r.exact)


def get(tag: str | Semiring) -> Semiring:
    if isinstance(tag, Semiring):
        return tag
    try:
        return REGISTRY[tag]
    except KeyError:
        raise LiteralError(f"unknown semiring {tag!r}; expected one of {sorted(REGISTRY)}") from None


def sum(values: Iterable[Scalar], semiring: str | Semiring | None = None) -> Scalar:  # noqa: A001
    """Sum of tagged scalars; all tags (and ``semiring`` if given) must agree.

    An empty input needs ``semiring`` to know which zero to return.
    """
    values = list(values)
    tag = get(semiring).tag if semiring is not None else None
    for v in values:
        if tag is None:
            tag = v.tag
        elif v.tag != tag:
            raise TagMismatch(f"cannot add {v.tag} scalar to {tag} scalar")
    if tag is None:
        raise TagMismatch("empty sum without a semiring")
    ring = get(tag)
    return Scalar(tag, ring.sum(v.value for v in values))
