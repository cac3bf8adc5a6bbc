"""Random typed diagrams and matrices for property tests."""

from fractions import Fraction

from tpcalc import semiring as sr
from tpcalc.colors import Plus, Tensor, dim, reassociate, sample_color
from tpcalc.diagram import (
    Adapt, Contr, Mirror, Null, Par, PlusG, Scal, Seq, Swap, Ten, Unit, ids, mirror,
)
from tpcalc.semantics import SemMatrix

MAX_WIRES = 4
MAX_DIM = 40


def small_color(rng, depth=2):
    while True:
        c = sample_color(rng, depth)
        if dim(c) <= 4:
            return c


def small_obj(rng, max_wires=3, depth=2):
    while True:
        x = tuple(small_color(rng, depth) for _ in range(rng.randint(0, max_wires)))
        if dim(x) <= MAX_DIM:
            return x


def _layer(rng, x, functional, ring):
    """One generator (possibly mirrored) applied somewhere on wires ``x``."""
    n = len(x)
    options = []
    for i, a in enumerate(x):
        if isinstance(a, Tensor):
            options.append((i, 1, mirror(Ten(a.left, a.right))))
        if isinstance(a, Plus):
            options.append((i, 1, mirror(PlusG(a.left, a.right))))
        options.append((i, 1, Adapt(a, reassociate(a, rng))))
        options.append((i, 1, Scal(sr.Scalar(ring.tag, ring.sample(rng)), a)))
        options.append((i, 1, mirror(Null(a))))
        if n < MAX_WIRES:
            options.append((i, 1, mirror(Contr(a))))
        if i + 1 < n:
            b = x[i + 1]
            options += [(i, 2, Ten(a, b)), (i, 2, PlusG(a, b)), (i, 2, Swap(a, b))]
            if a == b:
                options.append((i, 2, Contr(a)))
    if n < MAX_WIRES:
        c = small_color(rng)
        options.append((rng.randint(0, n), 0, Null(c)))
        if not functional:
            options.append((rng.randint(0, n), 0, Unit()))
    while True:
        i, k, g = rng.choice(options)
        y = x[:i] + g.cod + x[i + k:]
        if dim(y) <= MAX_DIM:
            return ids(x[:i]) @ g @ ids(x[i + k:]) if (i or x[i + k:]) else g, y


def random_diagram(rng, dom=None, layers=4, functional=True, ring=sr.Q):
    x = small_obj(rng) if dom is None else tuple(dom)
    d = ids(x)
    for _ in range(layers):
        g, x = _layer(rng, x, functional, ring)
        d = d >> g
    return d


def rebracket(d, rng):
    """The same composite with Seq/Par trees re-bracketed at random."""
    if isinstance(d, Seq):
        parts = _spine(d, Seq)
        return _bracket([rebracket(p, rng) for p in parts], Seq, rng)
    if isinstance(d, Par):
        parts = _spine(d, Par)
        return _bracket([rebracket(p, rng) for p in parts], Par, rng)
    if isinstance(d, Mirror):
        return Mirror(rebracket(d.d, rng))
    return d


def _spine(d, node):
    if isinstance(d, node):
        return _spine(d.d, node) + _spine(d.e, node)
    return [d]


def _bracket(items, node, rng):
    if len(items) == 1:
        return items[0]
    k = rng.randint(1, len(items) - 1)
    return node(_bracket(items[:k], node, rng), _bracket(items[k:], node, rng))


def pad_identities(d, rng):
    """Insert identity layers before and after."""
    if rng.random() < 0.5:
        d = ids(d.dom) >> d
    if rng.random() < 0.5:
        d = d >> ids(d.cod)
    return d


def random_matrix(rng, ring, nrows, ncols, density=0.6):
    rows = [[ring.sample(rng) if rng.random() < density else ring.zero for _ in range(ncols)]
            for _ in range(nrows)]
    return SemMatrix.from_rows(ring, rows, ncols)


def object_with_dim_at_most(rng, bound, max_wires=3):
    while True:
        x = small_obj(rng, max_wires)
        if dim(x) <= bound:
            return x


def q(n, d=1):
    return Fraction(n, d)
