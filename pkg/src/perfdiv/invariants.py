"""Exact invariants: clique numbers, colourings, perfection and decompositions."""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations
from typing import Iterator, Sequence

from .canon import is_isomorphic
from .detectors import (
    Witness,
    find_hole,
    find_odd_antihole,
    is_class_member,
    iter_holes,
)
from .graph import (
    Graph,
    GraphError,
    PreconditionError,
    bits,
    cartesian_product,
    complement,
    complete,
    components,
    induced_subgraph,
    is_connected,
)

WeightFn = Sequence[int]
Coloring = tuple[int, ...]


def check_weights(g: Graph, w: WeightFn) -> None:
    if len(w) != g.n:
        raise GraphError(f"weight function has {len(w)} entries for {g.n} vertices")
    if any(int(x) != x or x < 1 for x in w):
        raise GraphError("weights must be positive integers")


# -- cliques ------------------------------------------------------------------

def iter_maximal_cliques(g: Graph, within: int | None = None) -> Iterator[int]:
    """Maximal cliques of ``G[within]`` as masks (Bron-Kerbosch with pivoting)."""
    rows = g.rows
    p0 = g.full if within is None else within
    if not p0:
        return

    def expand(r: int, p: int, x: int) -> Iterator[int]:
        if not p and not x:
            yield r
            return
        px = p | x
        pivot = max(bits(px), key=lambda u: (rows[u] & p).bit_count())
        for v in bits(p & ~rows[pivot]):
            yield from expand(r | (1 << v), p & rows[v], x & rows[v])
            p &= ~(1 << v)
            x |= 1 << v

    yield from expand(0, p0, 0)


def max_weight_clique(g: Graph, w: WeightFn | None = None, within: int | None = None) -> tuple[int, int]:
    """``(weight, clique mask)`` of a maximum (weight) clique; ties go to the first found."""
    if w is not None:
        check_weights(g, w)
    best, best_mask = 0, 0
    for c in iter_maximal_cliques(g, within):
        val = c.bit_count() if w is None else sum(w[v] for v in bits(c))
        if val > best:
            best, best_mask = val, c
    return best, best_mask


def clique_number(g: Graph) -> int:
    return _clique_number_cached(g)


@lru_cache(maxsize=1 << 16)
def _clique_number_cached(g: Graph) -> int:
    return max_weight_clique(g)[0]


def weighted_clique_number(g: Graph, w: WeightFn) -> int:
    return max_weight_clique(g, w)[0]


# -- colouring ----------------------------------------------------------------

def is_k_colorable(g: Graph, k: int) -> Coloring | None:
    """A proper colouring with colours ``1..k``, or ``None``.

    Backtracking in DSATUR order; a fresh colour is only opened as the next
    unused one, which removes colour-permutation symmetry.
    """
    if k < 0:
        raise GraphError("k must be non-negative")
    n = g.n
    if n == 0:
        return ()
    if k == 0:
        return None
    rows = g.rows
    color = [0] * n
    classes = [0] * (k + 1)  # classes[c]: vertices coloured c

    def pick(uncolored: int) -> int:
        best, key = -1, None
        for v in bits(uncolored):
            sat = sum(1 for c in range(1, k + 1) if rows[v] & classes[c])
            kv = (sat, (rows[v] & uncolored).bit_count())
            if key is None or kv > key:
                best, key = v, kv
        return best

    def solve(uncolored: int, used: int) -> bool:
        if not uncolored:
            return True
        v = pick(uncolored)
        rv = rows[v]
        for c in range(1, min(used + 1, k) + 1):
            if rv & classes[c]:
                continue
            color[v] = c
            classes[c] |= 1 << v
            if solve(uncolored & ~(1 << v), max(used, c)):
                return True
            classes[c] &= ~(1 << v)
        color[v] = 0
        return False

    if solve(g.full, 0):
        return tuple(color)
    return None


def chromatic_number(g: Graph) -> int:
    return _chromatic_cached(g)


@lru_cache(maxsize=1 << 16)
def _chromatic_cached(g: Graph) -> int:
    if g.n == 0:
        return 0
    k = max(1, clique_number(g))
    while is_k_colorable(g, k) is None:
        k += 1
    return k


def optimal_coloring(g: Graph) -> Coloring:
    col = is_k_colorable(g, chromatic_number(g))
    assert col is not None
    return col


def is_proper_coloring(g: Graph, col: Sequence[int]) -> bool:
    return len(col) == g.n and all(col[u] != col[v] for u, v in g.edges())


# -- perfection ---------------------------------------------------------------

def find_imperfection(g: Graph) -> Witness | None:
    """Odd hole or odd antihole certificate, or ``None`` when ``g`` is perfect."""
    return _imperfection_cached(g)


@lru_cache(maxsize=1 << 16)
def _imperfection_cached(g: Graph) -> Witness | None:
    w = find_hole(g, "odd", 5)
    if w is not None:
        return w
    # a 5-antihole is a 5-hole, already excluded
    return find_odd_antihole(g, 7)


def is_perfect(g: Graph) -> bool:
    return find_imperfection(g) is None


def imperfect_cores(g: Graph) -> list[int]:
    """Vertex masks of all odd holes and odd antiholes (length >= 7) of ``g``.

    ``G[S]`` is perfect exactly when ``S`` contains none of these masks.
    """
    out = []
    for h in iter_holes(g, 5):
        if len(h) % 2:
            out.append(sum(1 << v for v in h))
    for h in iter_holes(complement(g), 7):
        if len(h) % 2:
            out.append(sum(1 << v for v in h))
    return out


def find_imperfect_neighborhood(g: Graph) -> int | None:
    """First vertex whose open neighbourhood induces an imperfect graph."""
    for v in range(g.n):
        if not is_perfect(induced_subgraph(g, g.rows[v])):
            return v
    return None


def is_locally_perfect(g: Graph) -> bool:
    return find_imperfect_neighborhood(g) is None


# -- homogeneous sets and clique cutsets --------------------------------------

def module_closure(g: Graph, s: int) -> int:
    """Smallest homogeneous-or-total set containing ``s``."""
    rows = g.rows
    outside = g.full & ~s
    changed = True
    while changed:
        changed = False
        for u in bits(outside):
            hit = rows[u] & s
            if hit and hit != s:
                s |= 1 << u
                outside &= ~(1 << u)
                changed = True
    return s


def is_homogeneous(g: Graph, s: int) -> bool:
    if not 1 < s.bit_count() < g.n:
        return False
    for u in bits(g.full & ~s):
        hit = g.rows[u] & s
        if hit and hit != s:
            return False
    return True


def find_homogeneous_set(g: Graph) -> int | None:
    """Closure of the first vertex pair (lexicographic) that is not all of ``V``.

    Every homogeneous set contains a pair, and the closure of that pair is the
    least homogeneous set containing it, so the search is complete.
    """
    full = g.full
    for a, b in combinations(range(g.n), 2):
        s = module_closure(g, (1 << a) | (1 << b))
        if s != full:
            return s
    return None


def iter_cliques(g: Graph) -> Iterator[int]:
    """All non-empty cliques, by size and then by sorted vertex tuple."""
    rows = g.rows
    layer = [1 << v for v in range(g.n)]
    while layer:
        yield from layer
        nxt = []
        for c in layer:
            top = c.bit_length()
            common = g.full
            for v in bits(c):
                common &= rows[v]
            for v in bits(common >> top << top):
                nxt.append(c | (1 << v))
        layer = nxt


def find_clique_cutset(g: Graph) -> int | None:
    """First clique (in ``iter_cliques`` order) whose removal adds components."""
    base = len(components(g))
    full = g.full
    for k in iter_cliques(g):
        if len(components(g, full & ~k)) > base:
            return k
    return None


# -- diamond trichotomy --------------------------------------------------------

def diamond_trichotomy(g: Graph) -> str:
    """Which alternative holds for a connected (bull, diamond)-free graph.

    Returns ``"triangle-free"``, ``"low-degree"`` (minimum degree at most
    clique number minus one), ``"product"`` (isomorphic to K2 x K_omega) or
    ``"no-branch"`` when none applies.
    """
    if g.n == 0 or not is_connected(g):
        raise PreconditionError("graph must be connected and non-empty")
    member, w = is_class_member(g, "bull,diamond")
    if not member:
        raise PreconditionError(f"graph contains a {w.kind}", w)
    omega = clique_number(g)
    if omega <= 2:
        return "triangle-free"
    if min(g.degrees()) <= omega - 1:
        return "low-degree"
    if 2 * omega == g.n and is_isomorphic(g, cartesian_product(complete(2), complete(omega))):
        return "product"
    return "no-branch"
