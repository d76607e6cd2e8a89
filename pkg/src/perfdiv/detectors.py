"""Induced-subgraph detection for fixed patterns and hole-like families."""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence

from .graph import (
    Graph,
    GraphError,
    bits,
    complement,
    complete,
    cycle,
    edgeless,
    induced_ordered,
    make_named,
    make_odd_torch,
    path,
)


@dataclass(frozen=True)
class Witness:
    """``vertices[i]`` is the host vertex playing pattern vertex ``i``."""

    kind: str
    vertices: tuple[int, ...]

    def as_dict(self) -> dict:
        return {"kind": self.kind, "vertices": list(self.vertices)}


def verify_embedding(g: Graph, h: Graph, vertices: Sequence[int]) -> bool:
    """Whether ``vertices`` (in order) induce exactly ``h`` in ``g``."""
    if len(vertices) != h.n or len(set(vertices)) != h.n:
        return False
    if any(not 0 <= v < g.n for v in vertices):
        return False
    return induced_ordered(g, vertices).rows == h.rows


def _search_order(h: Graph) -> list[int]:
    # connected-first greedy order: each next vertex has the most placed neighbours
    order: list[int] = []
    placed = 0
    remaining = set(range(h.n))
    while remaining:
        v = max(remaining, key=lambda x: ((h.rows[x] & placed).bit_count(), h.rows[x].bit_count(), -x))
        order.append(v)
        placed |= 1 << v
        remaining.discard(v)
    return order


def contains_induced(g: Graph, h: Graph, kind: str = "pattern") -> Witness | None:
    """First induced embedding of ``h`` in ``g`` under a fixed search order.

    Pattern vertices are placed greedily (most already-placed neighbours
    first) and host vertices are tried in ascending order, so the answer is
    reproducible.
    """
    if h.n > g.n:
        return None
    if h.n == 0:
        return Witness(kind, ())
    order = _search_order(h)
    hdeg = [h.rows[v].bit_count() for v in order]
    gdeg = [r.bit_count() for r in g.rows]
    full = g.full
    # constraints[k] lists (earlier position j, adjacent?) for order[k]
    constraints = []
    for k, v in enumerate(order):
        constraints.append([(j, bool(h.rows[v] >> order[j] & 1)) for j in range(k)])
    image = [0] * h.n
    rows = g.rows
    m = h.n

    def extend(k: int, used: int) -> bool:
        if k == m:
            return True
        cand = full & ~used
        for j, adj in constraints[k]:
            r = rows[image[j]]
            cand &= r if adj else ~r
            if not cand:
                return False
        need = hdeg[k]
        for x in bits(cand):
            if gdeg[x] < need:
                continue
            image[k] = x
            if extend(k + 1, used | (1 << x)):
                return True
        return False

    if not extend(0, 0):
        return None
    verts = [0] * h.n
    for k, v in enumerate(order):
        verts[v] = image[k]
    return Witness(kind, tuple(verts))


# -- holes --------------------------------------------------------------------

def iter_holes(g: Graph, min_len: int = 4, max_len: int | None = None) -> Iterator[tuple[int, ...]]:
    """Every induced cycle of length in ``[min_len, max_len]`` exactly once.

    A hole is reported starting at its least vertex ``s``, in the direction
    whose second vertex is smaller than its last.  Induced paths are grown
    from ``s`` through larger vertices; a vertex adjacent to ``s`` closes the
    cycle instead of extending the path.
    """
    rows = g.rows
    top = g.n if max_len is None else min(max_len, g.n)
    lo = max(min_len, 4)
    for s in range(g.n):
        above = g.full & ~((1 << (s + 1)) - 1)
        rs = rows[s]
        walk = [s]

        def grow(last: int, onpath: int, blocked: int) -> Iterator[tuple[int, ...]]:
            # blocked: neighbours of interior path vertices
            size = len(walk)
            for x in bits(rows[last] & above & ~onpath & ~blocked):
                if rs >> x & 1:
                    if size >= 3 and size + 1 >= lo and walk[1] < x:
                        yield tuple(walk) + (x,)
                    continue
                if size + 2 > top:
                    continue
                walk.append(x)
                inner = rows[last] if size > 1 else 0
                yield from grow(x, onpath | (1 << x), blocked | inner)
                walk.pop()

        for first in bits(rs & above):
            walk.append(first)
            yield from grow(first, (1 << s) | (1 << first), 0)
            walk.pop()


def find_hole(g: Graph, parity: str = "any", min_len: int = 4) -> Witness | None:
    if min_len < 4:
        raise GraphError("holes have length at least 4")
    if parity not in ("odd", "even", "any"):
        raise GraphError(f"unknown parity {parity!r}")
    for h in iter_holes(g, min_len):
        k = len(h)
        if parity == "any" or (k % 2 == 1) == (parity == "odd"):
            return Witness(f"{'' if parity == 'any' else parity + '-'}hole", h)
    return None


def find_odd_antihole(g: Graph, min_len: int = 5) -> Witness | None:
    """Odd antihole of length >= ``min_len``; vertex order follows the complementary hole."""
    if min_len < 5:
        raise GraphError("odd antiholes have length at least 5")
    w = find_hole(complement(g), "odd", min_len)
    return None if w is None else Witness("odd-antihole", w.vertices)


def iter_odd_holes(g: Graph) -> Iterator[tuple[int, ...]]:
    return (h for h in iter_holes(g, 5) if len(h) % 2 == 1)


def find_odd_torch(g: Graph) -> Witness | None:
    """Odd hole ``C``, vertex ``y`` with non-empty stable ``N_C(y)``, and a neighbour
    ``x`` of ``y`` with no neighbour on ``C``.

    The witness lists the hole in order, then ``y``, then ``x``; it embeds the
    torch built by ``make_odd_torch`` with the attach set read off the hole.
    """
    rows = g.rows
    for hole in iter_odd_holes(g):
        cmask = 0
        for v in hole:
            cmask |= 1 << v
        for y in range(g.n):
            if cmask >> y & 1:
                continue
            att = rows[y] & cmask
            if not att or not g.is_stable(att):
                continue
            for x in bits(rows[y] & ~cmask):
                if not rows[x] & cmask:
                    return Witness("odd-torch", hole + (y, x))
    return None


def torch_attach_positions(g: Graph, w: Witness) -> int:
    """Attach set of a torch witness, as positions on its hole."""
    hole, y = w.vertices[:-2], w.vertices[-2]
    return sum(1 << i for i, v in enumerate(hole) if g.adjacent(y, v))


# -- classes ------------------------------------------------------------------

_FAMILY_SELECTORS = ("odd-hole", "even-hole", "hole", "odd-antihole", "odd-torch")
_PARAM = re.compile(r"^(P|C|K)(\d+)$|^(\d+)K1$")


@lru_cache(maxsize=None)
def pattern_for(selector: str) -> Graph | None:
    """Fixed pattern graph for a selector, or ``None`` for family selectors."""
    if selector in _FAMILY_SELECTORS:
        return None
    m = _PARAM.match(selector)
    if m:
        if m.group(3):
            return edgeless(int(m.group(3)))
        kind, k = m.group(1), int(m.group(2))
        if kind == "P":
            return path(k)
        if kind == "K":
            return complete(k)
        return cycle(k)
    return make_named(selector)


@dataclass(frozen=True)
class ClassSpec:
    """Forbidden induced subgraphs: named patterns, ``Pk``/``Ck``/``Kk``/``kK1``,
    or one of the families ``odd-hole``, ``even-hole``, ``hole``,
    ``odd-antihole``, ``odd-torch``."""

    forbidden: tuple[str, ...]

    def __post_init__(self):
        if not self.forbidden:
            raise GraphError("class spec needs at least one forbidden selector")
        for sel in self.forbidden:
            try:
                pattern_for(sel)
            except GraphError:
                raise GraphError(f"unresolvable selector {sel!r}") from None

    @classmethod
    def parse(cls, text: str) -> ClassSpec:
        return cls(tuple(s.strip() for s in text.split(",") if s.strip()))

    def __str__(self) -> str:
        return ",".join(self.forbidden)


def find_forbidden(g: Graph, selector: str) -> Witness | None:
    if selector == "odd-hole":
        return find_hole(g, "odd", 5)
    if selector == "even-hole":
        return find_hole(g, "even", 4)
    if selector == "hole":
        return find_hole(g, "any", 4)
    if selector == "odd-antihole":
        return find_odd_antihole(g, 5)
    if selector == "odd-torch":
        return find_odd_torch(g)
    h = pattern_for(selector)
    return contains_induced(g, h, selector)


def is_class_member(g: Graph, spec: ClassSpec | str) -> tuple[bool, Witness | None]:
    if isinstance(spec, str):
        spec = ClassSpec.parse(spec)
    for sel in spec.forbidden:
        w = find_forbidden(g, sel)
        if w is not None:
            return False, w
    return True, None


def is_free(g: Graph, *selectors: str) -> bool:
    return all(find_forbidden(g, s) is None for s in selectors)


def witness_is_valid(g: Graph, w: Witness) -> bool:
    """Independent re-check of a witness against its kind."""
    v = w.vertices
    kind = w.kind
    if kind.endswith("hole") and kind != "odd-antihole":
        k = len(v)
        ok = k >= 4 and verify_embedding(g, cycle(k), v)
        if kind.startswith("odd"):
            ok = ok and k % 2 == 1
        if kind.startswith("even"):
            ok = ok and k % 2 == 0
        return ok
    if kind == "odd-antihole":
        k = len(v)
        return k >= 5 and k % 2 == 1 and verify_embedding(complement(g), cycle(k), v)
    if kind == "odd-torch":
        k = len(v) - 2
        if k < 5 or k % 2 == 0:
            return False
        try:
            t = make_odd_torch(k, torch_attach_positions(g, w))
        except GraphError:
            return False
        return verify_embedding(g, t, v)
    return verify_embedding(g, pattern_for(kind), v)
