"""Good partitions, perfect (weight) divisibility and the induced colouring.

Divisibility of a graph is decided by the recursion "has a good partition and
every one-vertex-deleted subgraph is divisible", memoised by canonical form.
The memo tables are process-wide; inserts are idempotent, so parallel workers
can each keep their own copy.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from math import comb
from typing import Iterator

from .canon import canonical_form
from .graph import (
    Graph,
    GraphError,
    PreconditionError,
    bits,
    delete_vertex,
    induced_subgraph,
    members,
)
from .invariants import (
    Coloring,
    WeightFn,
    check_weights,
    clique_number,
    imperfect_cores,
    is_k_colorable,
    is_perfect,
    iter_maximal_cliques,
    optimal_coloring,
    weighted_clique_number,
)

DEFAULT_WMAX = 2
DEFAULT_WEIGHT_BUDGET = 1 << 20


class BudgetExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class Partition:
    A: int
    B: int

    def as_dict(self) -> dict:
        return {"A": list(members(self.A)), "B": list(members(self.B))}


@dataclass(frozen=True)
class DivisibilityVerdict:
    """``failing_subgraph`` is a vertex mask of the input graph; ``failing_weights``
    lists weights for its vertices in ascending order.  ``semi`` marks a
    positive answer that only covers weights up to a bound."""

    divisible: bool
    failing_subgraph: int | None = None
    failing_weights: tuple[int, ...] | None = None
    semi: bool = False

    def __bool__(self) -> bool:
        return self.divisible


_PD_MEMO: dict[str, bool] = {}
_PWD_MEMO: dict[tuple[str, int], bool] = {}


def clear_memo() -> None:
    _PD_MEMO.clear()
    _PWD_MEMO.clear()
    _partition_data.cache_clear()


def memo_size() -> int:
    return len(_PD_MEMO) + len(_PWD_MEMO)


@lru_cache(maxsize=None)
def _masks_in_search_order(n: int) -> tuple[int, ...]:
    # by size, then by characteristic vector read from vertex 0 (smallest first)
    def rev(m: int) -> int:
        return int(format(m, f"0{n}b")[::-1], 2) if n else 0

    return tuple(sorted(range(1 << n), key=lambda m: (m.bit_count(), rev(m))))


def iter_partition_order(n: int) -> Iterator[int]:
    """Candidate ``B`` sets in the fixed search order."""
    return iter(_masks_in_search_order(n))


@lru_cache(maxsize=1 << 14)
def _partition_data(g: Graph) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """(candidate B masks with G[V - B] perfect, maximal cliques)."""
    cores = imperfect_cores(g)
    full = g.full
    cands = []
    for b in _masks_in_search_order(g.n):
        a = full & ~b
        if all(c & a != c for c in cores):
            cands.append(b)
    return tuple(cands), tuple(iter_maximal_cliques(g))


def _first_good_b(g: Graph, w: WeightFn | None) -> int | None:
    cands, cliques = _partition_data(g)
    if w is None:
        omega = max((c.bit_count() for c in cliques), default=0)
        for b in cands:
            if all((c & b).bit_count() < omega for c in cliques):
                return b
        return None
    cw = [sum(w[v] for v in bits(c)) for c in cliques]
    omega = max(cw, default=0)
    for b in cands:
        if all(sum(w[v] for v in bits(c & b)) < omega for c in cliques):
            return b
    return None


def find_good_partition(g: Graph, w: WeightFn | None = None) -> Partition | None:
    """First good partition ``(A, B)`` with ``B`` in the fixed search order.

    ``G[A]`` is perfect and the (weighted) clique number of ``G[B]`` is
    strictly below that of ``G``.  ``w=None`` means unit weights.
    """
    if g.n == 0:
        raise GraphError("good partitions are defined for non-empty graphs")
    if w is not None:
        check_weights(g, w)
    b = _first_good_b(g, w)
    if b is None:
        return None
    return Partition(g.full & ~b, b)


def is_good_partition(g: Graph, p: Partition, w: WeightFn | None = None) -> bool:
    """Independent re-check of a partition of ``V(G)``."""
    if p.A & p.B or (p.A | p.B) != g.full:
        return False
    if not is_perfect(induced_subgraph(g, p.A)):
        return False
    if w is None:
        return clique_number(induced_subgraph(g, p.B)) < clique_number(g)
    sub_w = [w[v] for v in bits(p.B)]
    return weighted_clique_number(induced_subgraph(g, p.B), sub_w) < weighted_clique_number(g, w)


# -- unweighted ---------------------------------------------------------------

def _pd(g: Graph) -> bool:
    if g.n == 0:
        return True
    key = canonical_form(g)
    r = _PD_MEMO.get(key)
    if r is None:
        if is_perfect(g):
            r = True
        else:
            r = _first_good_b(g, None) is not None and all(
                _pd(delete_vertex(g, v)) for v in range(g.n)
            )
        _PD_MEMO[key] = r
    return r


def _minimal_failing(g: Graph, ok) -> int:
    """Mask of an induced subgraph that fails ``ok`` while all its one-vertex
    deletions pass; ``g`` itself must fail."""
    verts = list(range(g.n))
    cur = g
    while True:
        for i in range(cur.n):
            sub = delete_vertex(cur, i)
            if not ok(sub):
                cur = sub
                del verts[i]
                break
        else:
            return sum(1 << v for v in verts)


def is_perfectly_divisible(g: Graph) -> DivisibilityVerdict:
    if _pd(g):
        return DivisibilityVerdict(True)
    return DivisibilityVerdict(False, _minimal_failing(g, _pd))


def certify_mnpd(g: Graph) -> bool:
    """Not divisible, while every one-vertex deletion is (heredity covers the rest)."""
    if g.n == 0 or _pd(g):
        return False
    return all(_pd(delete_vertex(g, v)) for v in range(g.n))


# -- bounded weights ------------------------------------------------------------

def _check_budget(n: int, wmax: int, budget: int) -> None:
    if wmax < 1:
        raise GraphError("wmax must be at least 1")
    if wmax ** n > budget:
        raise BudgetExceeded(f"{wmax}**{n} weight functions exceed budget {budget}")


def iter_weights(n: int, wmax: int) -> Iterator[tuple[int, ...]]:
    return product(range(1, wmax + 1), repeat=n)


def _first_bad_weights(g: Graph, wmax: int) -> tuple[int, ...] | None:
    if is_perfect(g):
        return None
    for w in iter_weights(g.n, wmax):
        if _first_good_b(g, w) is None:
            return w
    return None


def _pwd(g: Graph, wmax: int) -> bool:
    if g.n == 0:
        return True
    key = (canonical_form(g), wmax)
    r = _PWD_MEMO.get(key)
    if r is None:
        if is_perfect(g):
            r = True
        else:
            r = all(_pwd(delete_vertex(g, v), wmax) for v in range(g.n)) and (
                _first_bad_weights(g, wmax) is None
            )
        _PWD_MEMO[key] = r
    return r


def is_perfectly_weight_divisible_bounded(
    g: Graph, wmax: int = DEFAULT_WMAX, budget: int = DEFAULT_WEIGHT_BUDGET
) -> DivisibilityVerdict:
    """Divisibility for every weight function with values in ``1..wmax`` on every
    induced subgraph.  ``True`` is only a semi-verdict for unbounded weights."""
    _check_budget(g.n, wmax, budget)
    if _pwd(g, wmax):
        return DivisibilityVerdict(True, semi=True)
    sub = _minimal_failing(g, lambda h: _pwd(h, wmax))
    h = induced_subgraph(g, sub)
    return DivisibilityVerdict(False, sub, _first_bad_weights(h, wmax))


def certify_mnwd_bounded(g: Graph, wmax: int = DEFAULT_WMAX, budget: int = DEFAULT_WEIGHT_BUDGET) -> bool:
    _check_budget(g.n, wmax, budget)
    if g.n == 0 or _pwd(g, wmax):
        return False
    return all(_pwd(delete_vertex(g, v), wmax) for v in range(g.n))


# -- constructions ---------------------------------------------------------------

def partition_from_3coloring(h: Graph, w: WeightFn | None = None) -> Partition:
    """Two colour classes plus isolated vertices on one side, the rest on the other.

    The ``B`` side is the colour class with the fewest non-isolated vertices
    (last colour on ties).  Every vertex left in ``B`` has a neighbour, so an
    edge outweighs any single vertex of the stable set ``B``.
    """
    if w is not None:
        check_weights(h, w)
    if clique_number(h) > 2:
        raise PreconditionError("graph is not triangle-free")
    col = is_k_colorable(h, 3)
    if col is None:
        raise PreconditionError("graph is not 3-colourable")
    isolated = sum(1 << v for v in range(h.n) if not h.rows[v])
    classes = [sum(1 << v for v in range(h.n) if col[v] == c) for c in (1, 2, 3)]
    pick = min(range(3), key=lambda i: ((classes[i] & ~isolated).bit_count(), -i))
    b = classes[pick] & ~isolated
    return Partition(h.full & ~b, b)


def coloring_via_divisibility(g: Graph) -> Coloring:
    """Proper colouring with at most C(omega + 1, 2) colours.

    Repeatedly take a good partition of what is left, colour the perfect side
    optimally with a fresh palette and continue on the other side, whose
    clique number is strictly smaller.
    """
    if not _pd(g):
        raise PreconditionError("graph is not perfectly divisible")
    color = [0] * g.n
    offset = 0
    rest = g.full
    while rest:
        verts = members(rest)
        sub = induced_subgraph(g, rest)
        p = find_good_partition(sub)
        assert p is not None
        part = induced_subgraph(sub, p.A)
        col = optimal_coloring(part)
        for i, local in enumerate(members(p.A)):
            color[verts[local]] = offset + col[i]
        offset += max(col, default=0)
        rest = sum(1 << verts[i] for i in bits(p.B))
    return tuple(color)


def divisibility_bound(omega: int) -> int:
    return comb(omega + 1, 2)


__all__ = [
    "Partition", "DivisibilityVerdict", "BudgetExceeded", "DEFAULT_WMAX",
    "find_good_partition", "is_good_partition", "iter_partition_order",
    "is_perfectly_divisible", "is_perfectly_weight_divisible_bounded",
    "certify_mnpd", "certify_mnwd_bounded", "partition_from_3coloring",
    "coloring_via_divisibility", "divisibility_bound", "iter_weights",
    "clear_memo", "memo_size",
]
