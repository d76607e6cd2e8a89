"""Canonical labelling and isomorph-free enumeration of small graphs.

The canonical key of a graph is the graph6 string of its relabelling with the
lexicographically least adjacency code.  Candidate relabellings are the leaves
of an individualisation-refinement tree: vertices are first split by degree
and then by neighbour counts into the current cells until the partition is
equitable, and branching happens on the first non-singleton cell.  Branches
that differ by swapping two twins are skipped, since the swap is an
automorphism and yields the same leaves.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Callable, Iterator

from .graph import Graph, GraphError, add_vertex, relabel
from .graph6 import decode_graph6, encode_graph6

DEFAULT_ENUMERATION_CAP = 8


class CapExceeded(GraphError):
    pass


def _refine(rows: tuple[int, ...], cells: list[list[int]]) -> list[list[int]]:
    while True:
        masks = []
        for c in cells:
            m = 0
            for v in c:
                m |= 1 << v
            masks.append(m)
        out = []
        changed = False
        for c in cells:
            if len(c) == 1:
                out.append(c)
                continue
            groups: dict[tuple[int, ...], list[int]] = {}
            for v in c:
                r = rows[v]
                sig = tuple((r & m).bit_count() for m in masks)
                groups.setdefault(sig, []).append(v)
            if len(groups) == 1:
                out.append(c)
            else:
                changed = True
                for sig in sorted(groups):
                    out.append(groups[sig])
        if not changed:
            return out
        cells = out


def _code(rows: tuple[int, ...], order: list[int]) -> int:
    code = 0
    for j in range(1, len(order)):
        rj = rows[order[j]]
        for i in range(j):
            code = (code << 1) | (rj >> order[i] & 1)
    return code


def _best_order(g: Graph) -> list[int]:
    rows = g.rows
    best_code = -1
    best: list[int] = []

    def search(cells: list[list[int]]) -> None:
        nonlocal best_code, best
        cells = _refine(rows, cells)
        for t, cell in enumerate(cells):
            if len(cell) > 1:
                break
        else:
            order = [c[0] for c in cells]
            code = _code(rows, order)
            if best_code < 0 or code < best_code:
                best_code, best = code, order
            return
        tried: list[int] = []
        for v in cell:
            rv = rows[v]
            if any((rv & ~(1 << u)) == (rows[u] & ~(1 << v)) for u in tried):
                continue
            tried.append(v)
            rest = [u for u in cell if u != v]
            search(cells[:t] + [[v], rest] + cells[t + 1:])

    if g.n:
        search([list(range(g.n))])
    return best


def canonical_labeling(g: Graph) -> tuple[int, ...]:
    """Vertex order whose relabelling is the canonical representative."""
    return tuple(_best_order(g))


@lru_cache(maxsize=1 << 17)
def canonical_form(g: Graph) -> str:
    """Canonical key: equal exactly when the graphs are isomorphic."""
    return encode_graph6(relabel(g, _best_order(g)))


def canonical_graph(g: Graph) -> Graph:
    return decode_graph6(canonical_form(g))


def is_isomorphic(g: Graph, h: Graph) -> bool:
    return g.n == h.n and g.num_edges() == h.num_edges() and canonical_form(g) == canonical_form(h)


def _level(parents: list[Graph], keep: Callable[[Graph], bool] | None) -> list[Graph]:
    seen: dict[str, None] = {}
    for p in parents:
        for nbrs in range(1 << p.n):
            child = add_vertex(p, nbrs)
            if keep is not None and not keep(child):
                continue
            seen.setdefault(canonical_form(child), None)
    return [decode_graph6(k) for k in sorted(seen)]


@lru_cache(maxsize=None)
def _level_at(k: int, keep: Callable[[Graph], bool] | None) -> tuple[Graph, ...]:
    if k == 0:
        return (Graph._trusted(0, ()),)
    return tuple(_level(list(_level_at(k - 1, keep)), keep))


def enumerate_nonisomorphic(
    n: int,
    *,
    keep: Callable[[Graph], bool] | None = None,
    cap: int = DEFAULT_ENUMERATION_CAP,
) -> Iterator[Graph]:
    """One canonical representative per isomorphism class on ``n`` vertices.

    Graphs on ``k`` vertices are built by adding a vertex to every
    representative on ``k - 1`` vertices in every possible way and keeping one
    graph per canonical key.  ``keep`` restricts the classes to a hereditary
    property and is applied at every level, which is only correct when the
    property is closed under vertex deletion.  Output is sorted by canonical
    key.
    """
    if n < 0:
        raise GraphError("order must be non-negative")
    if n > cap:
        raise CapExceeded(f"enumeration of order {n} exceeds cap {cap}")
    yield from _level_at(n, keep)


def enumerate_up_to(
    n: int,
    *,
    keep: Callable[[Graph], bool] | None = None,
    cap: int = DEFAULT_ENUMERATION_CAP,
    start: int = 1,
) -> Iterator[Graph]:
    """All representatives of orders ``start..n`` in order of size then key."""
    if n > cap:
        raise CapExceeded(f"enumeration of order {n} exceeds cap {cap}")
    for k in range(start, n + 1):
        yield from _level_at(k, keep)
