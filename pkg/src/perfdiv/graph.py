"""Simple undirected graphs on at most 62 vertices, stored as bit rows.

A vertex set is a plain ``int`` bit mask over ``0..n-1``; bit ``v`` set means
vertex ``v`` is a member.  All graphs are immutable values.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

MAX_ORDER = 62

VertexSet = int


class GraphError(ValueError):
    """Invalid graph construction or out-of-range vertex."""


class PreconditionError(GraphError):
    """An operation's input does not satisfy its precondition.

    ``witness`` optionally carries the offending structure (a vertex tuple or
    a detector witness) so the caller can re-check it.
    """

    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


def bit(v: int) -> int:
    return 1 << v


def bits(mask: int) -> Iterator[int]:
    """Yield the members of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def members(mask: int) -> tuple[int, ...]:
    return tuple(bits(mask))


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


@dataclass(frozen=True, slots=True)
class Graph:
    """Graph of order ``n``; ``rows[v]`` is the neighbourhood mask of ``v``."""

    n: int
    rows: tuple[int, ...]

    def __post_init__(self):
        if not 0 <= self.n <= MAX_ORDER:
            raise GraphError(f"order {self.n} outside 0..{MAX_ORDER}")
        if len(self.rows) != self.n:
            raise GraphError("row count does not match order")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.rows):
            if row & ~full:
                raise GraphError(f"row {v} has bits beyond the order")
            if row >> v & 1:
                raise GraphError(f"loop at vertex {v}")
            for u in bits(row):
                if not self.rows[u] >> v & 1:
                    raise GraphError(f"asymmetric adjacency {v}-{u}")

    @classmethod
    def _trusted(cls, n: int, rows: tuple[int, ...]) -> Graph:
        # skips validation; callers guarantee the invariants
        g = object.__new__(cls)
        object.__setattr__(g, "n", n)
        object.__setattr__(g, "rows", rows)
        return g

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        if not 0 <= n <= MAX_ORDER:
            raise GraphError(f"order {n} outside 0..{MAX_ORDER}")
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for order {n}")
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls._trusted(n, tuple(rows))

    @property
    def full(self) -> int:
        return (1 << self.n) - 1

    def adjacent(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def degrees(self) -> list[int]:
        return [r.bit_count() for r in self.rows]

    def num_edges(self) -> int:
        return sum(r.bit_count() for r in self.rows) // 2

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in bits(self.rows[u] >> (u + 1) << (u + 1))]

    def is_clique(self, mask: int) -> bool:
        for v in bits(mask):
            if (mask & ~(1 << v)) & ~self.rows[v]:
                return False
        return True

    def is_stable(self, mask: int) -> bool:
        return all(not (self.rows[v] & mask) for v in bits(mask))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


def _check_vertex(g: Graph, v: int) -> None:
    if not 0 <= v < g.n:
        raise GraphError(f"vertex {v} out of range for order {g.n}")


def _check_set(g: Graph, s: int) -> None:
    if s < 0 or s >> g.n:
        raise GraphError(f"vertex set {s:#x} out of range for order {g.n}")


# -- families and named patterns -------------------------------------------

def make_family(kind: str, k: int) -> Graph:
    """``path``, ``cycle``, ``complete`` or ``edgeless`` graph on ``k`` vertices."""
    if kind == "cycle":
        if k < 3:
            raise GraphError("a cycle needs at least 3 vertices")
        return Graph.from_edges(k, [(i, (i + 1) % k) for i in range(k)])
    if k < 1:
        raise GraphError(f"{kind} needs at least 1 vertex")
    if kind == "path":
        return Graph.from_edges(k, [(i, i + 1) for i in range(k - 1)])
    if kind == "complete":
        return Graph.from_edges(k, [(i, j) for i in range(k) for j in range(i + 1, k)])
    if kind == "edgeless":
        return Graph.from_edges(k, [])
    raise GraphError(f"unknown family {kind!r}")


def path(k: int) -> Graph:
    return make_family("path", k)


def cycle(k: int) -> Graph:
    return make_family("cycle", k)


def complete(k: int) -> Graph:
    return make_family("complete", k)


def edgeless(k: int) -> Graph:
    return make_family("edgeless", k)


def _grotzsch() -> Graph:
    # Mycielskian of C5: outer cycle 0..4, shadows 5..9, apex 10
    edges = [(i, (i + 1) % 5) for i in range(5)]
    for i in range(5):
        for j in ((i - 1) % 5, (i + 1) % 5):
            edges.append((5 + i, j))
        edges.append((5 + i, 10))
    return Graph.from_edges(11, edges)


# Labelings are fixed; comments give the construction each follows.
_NAMED = {
    # triangle 0,1,2 with pendant edges 0-3 and 1-4
    "bull": lambda: Graph.from_edges(5, [(0, 1), (1, 2), (0, 2), (0, 3), (1, 4)]),
    # complement of the path 0-1-2-3-4
    "house": lambda: complement(path(5)),
    # triangle 0,1,2 sharing vertex 2 with the path 2-3-4
    "hammer": lambda: Graph.from_edges(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4)]),
    # triangles 0,1,2 and 1,2,3 sharing edge 1-2
    "diamond": lambda: Graph.from_edges(4, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]),
    # claw centred at 0 with edge 0-3 subdivided by 4
    "fork": lambda: Graph.from_edges(5, [(0, 1), (0, 2), (0, 3), (3, 4)]),
    # path 0-1-2-3-4 plus vertex 5 adjacent to the middle vertex 2
    "E": lambda: Graph.from_edges(6, [(0, 1), (1, 2), (2, 3), (3, 4), (2, 5)]),
    "claw": lambda: Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)]),
    "triangle": lambda: complete(3),
    # triangle 0,1,2 with pendant 2-3
    "paw": lambda: Graph.from_edges(4, [(0, 1), (1, 2), (0, 2), (2, 3)]),
    "4K1": lambda: edgeless(4),
    "grotzsch": _grotzsch,
}
_ALIASES = {"K1_3": "claw", "K1,3": "claw", "K3": "triangle", "C3": "triangle", "4k1": "4K1"}

NAMED_PATTERNS = tuple(sorted(_NAMED))


def make_named(name: str) -> Graph:
    key = _ALIASES.get(name, name)
    try:
        build = _NAMED[key]
    except KeyError:
        raise GraphError(f"unknown pattern {name!r}") from None
    return build()


# -- operations ---------------------------------------------------------------

def complement(g: Graph) -> Graph:
    full = g.full
    return Graph._trusted(g.n, tuple(full & ~r & ~(1 << v) for v, r in enumerate(g.rows)))


def induced_subgraph(g: Graph, s: VertexSet) -> Graph:
    """``G[S]`` relabelled to ``0..|S|-1`` in ascending order of the originals."""
    _check_set(g, s)
    verts = members(s)
    pos = {v: i for i, v in enumerate(verts)}
    rows = []
    for v in verts:
        r = 0
        for u in bits(g.rows[v] & s):
            r |= 1 << pos[u]
        rows.append(r)
    return Graph._trusted(len(verts), tuple(rows))


def induced_ordered(g: Graph, order: Sequence[int]) -> Graph:
    """Subgraph induced by ``order`` with vertex ``order[i]`` relabelled ``i``."""
    for v in order:
        _check_vertex(g, v)
    if len(set(order)) != len(order):
        raise GraphError("repeated vertex in ordered subset")
    rows = []
    for v in order:
        r = 0
        for i, u in enumerate(order):
            if g.rows[v] >> u & 1:
                r |= 1 << i
        rows.append(r)
    return Graph._trusted(len(order), tuple(rows))


def delete_vertex(g: Graph, v: int) -> Graph:
    """``G - v`` with the vertices above ``v`` shifted down by one."""
    low = (1 << v) - 1
    rows = tuple((r & low) | (r >> (v + 1) << v) for i, r in enumerate(g.rows) if i != v)
    return Graph._trusted(g.n - 1, rows)


def add_vertex(g: Graph, nbrs: VertexSet) -> Graph:
    """Append vertex ``n`` adjacent exactly to ``nbrs``."""
    n = g.n
    if n >= MAX_ORDER:
        raise GraphError("vertex cap reached")
    _check_set(g, nbrs)
    new = 1 << n
    rows = tuple(r | new if nbrs >> i & 1 else r for i, r in enumerate(g.rows))
    return Graph._trusted(n + 1, rows + (nbrs,))


def relabel(g: Graph, order: Sequence[int]) -> Graph:
    """Isomorphic copy in which old vertex ``order[i]`` becomes ``i``."""
    if sorted(order) != list(range(g.n)):
        raise GraphError("order is not a permutation of the vertices")
    return induced_ordered(g, order)


def disjoint_union(g: Graph, h: Graph) -> Graph:
    if g.n + h.n > MAX_ORDER:
        raise GraphError("union exceeds the vertex cap")
    return Graph._trusted(g.n + h.n, g.rows + tuple(r << g.n for r in h.rows))


def cartesian_product(g: Graph, h: Graph) -> Graph:
    """``G □ H``; the pair ``(a, u)`` gets index ``a * |V(H)| + u``."""
    if g.n * h.n > MAX_ORDER:
        raise GraphError(f"product order {g.n * h.n} exceeds {MAX_ORDER}")
    m = h.n
    edges = []
    for a in range(g.n):
        for u, v in h.edges():
            edges.append((a * m + u, a * m + v))
    for a, b in g.edges():
        for u in range(m):
            edges.append((a * m + u, b * m + u))
    return Graph.from_edges(g.n * m, edges)


def clique_blowup(g: Graph, sizes: Sequence[int]) -> Graph:
    """Replace vertex ``v`` by a clique of ``sizes[v]`` vertices.

    Bags are laid out in vertex order: bag ``v`` occupies the block of
    indices starting at ``sum(sizes[:v])``.
    """
    if len(sizes) != g.n:
        raise GraphError("one size per vertex required")
    if any(s < 1 for s in sizes):
        raise GraphError("blowup sizes must be positive")
    total = sum(sizes)
    if total > MAX_ORDER:
        raise GraphError(f"blowup order {total} exceeds {MAX_ORDER}")
    bags = blowup_bags(sizes)
    rows = []
    for v in range(g.n):
        outside = 0
        for u in bits(g.rows[v]):
            outside |= bags[u]
        for x in bits(bags[v]):
            rows.append(outside | (bags[v] & ~(1 << x)))
    return Graph._trusted(total, tuple(rows))


def blowup_bags(sizes: Sequence[int]) -> list[int]:
    bags, start = [], 0
    for s in sizes:
        bags.append(((1 << s) - 1) << start)
        start += s
    return bags


def make_odd_torch(k: int, attach: VertexSet) -> Graph:
    """Odd hole ``0..k-1``, vertex ``k`` adjacent to ``attach``, vertex ``k+1`` pendant on ``k``."""
    if k < 5 or k % 2 == 0:
        raise GraphError("torch hole length must be odd and at least 5")
    c = cycle(k)
    if attach == 0:
        raise GraphError("attach set is empty")
    if attach < 0 or attach >> k:
        raise GraphError("attach set must lie on the hole")
    if not c.is_stable(attach):
        raise GraphError("attach set is not stable on the hole")
    g = add_vertex(c, attach)
    return add_vertex(g, 1 << k)


def neighborhood(g: Graph, v: int) -> VertexSet:
    _check_vertex(g, v)
    return g.rows[v]


def anti_neighborhood(g: Graph, v: int) -> VertexSet:
    _check_vertex(g, v)
    return g.full & ~g.rows[v] & ~(1 << v)


def set_neighborhood(g: Graph, s: VertexSet) -> VertexSet:
    """Vertices outside ``s`` with a neighbour in ``s``."""
    out = 0
    for v in bits(s):
        out |= g.rows[v]
    return out & ~s


def set_anti_neighborhood(g: Graph, s: VertexSet) -> VertexSet:
    return g.full & ~s & ~set_neighborhood(g, s)


def distance(g: Graph, u: int, v: int) -> int | None:
    """Hop distance, or ``None`` when ``v`` is unreachable from ``u``."""
    _check_vertex(g, u)
    _check_vertex(g, v)
    if u == v:
        return 0
    seen = 1 << u
    frontier = 1 << u
    d = 0
    while frontier:
        d += 1
        nxt = 0
        for x in bits(frontier):
            nxt |= g.rows[x]
        nxt &= ~seen
        if nxt >> v & 1:
            return d
        seen |= nxt
        frontier = nxt
    return None


def components(g: Graph, within: VertexSet | None = None) -> list[VertexSet]:
    """Connected components of ``G[within]`` as masks, ordered by least vertex."""
    rest = g.full if within is None else within
    comps = []
    while rest:
        start = rest & -rest
        comp = start
        frontier = start
        while frontier:
            nxt = 0
            for x in bits(frontier):
                nxt |= g.rows[x]
            nxt &= rest & ~comp
            comp |= nxt
            frontier = nxt
        comps.append(comp)
        rest &= ~comp
    return comps


def is_connected(g: Graph) -> bool:
    return len(components(g)) <= 1


__all__ = [
    "Graph", "GraphError", "PreconditionError", "VertexSet", "MAX_ORDER", "NAMED_PATTERNS",
    "bit", "bits", "members", "mask_of",
    "make_family", "make_named", "path", "cycle", "complete", "edgeless",
    "complement", "induced_subgraph", "induced_ordered", "delete_vertex", "add_vertex",
    "relabel", "disjoint_union", "cartesian_product", "clique_blowup", "blowup_bags",
    "make_odd_torch", "neighborhood", "anti_neighborhood", "set_neighborhood",
    "set_anti_neighborhood", "distance", "components", "is_connected",
]
