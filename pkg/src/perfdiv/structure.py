"""Attachments to odd holes and the classification of a graph around a 5-hole.

Hole positions are 0-based: ``hole[i]`` is the i-th cycle vertex and every
family index ``i`` below refers to that position, taken mod 5.  For a vertex
``u`` off the hole with neighbours ``N_C(u)`` on it:

* ``X[i]``: exactly ``{i}``
* ``Y[i]``: exactly ``{i, i+2}``
* ``Z[i]``: exactly ``{i-1, i, i+1}``
* ``W[i]``: exactly ``{i, i+1, i+2, i+3}``
* ``M``: no neighbour on the hole; ``other``: any remaining shape.

``verify_5hole_claims`` checks the structure such a graph must have when it
is (bull, 4K1)-free and locally perfect and the hole lies in the
non-neighbourhood of an anchor vertex.  Each check is stated for every
rotation, so the result does not depend on how the hole is oriented.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Sequence

from .detectors import contains_induced, find_odd_antihole, verify_embedding
from .graph import (
    Graph,
    GraphError,
    PreconditionError,
    anti_neighborhood,
    bits,
    cycle,
    induced_subgraph,
    is_connected,
    make_named,
    members,
    set_anti_neighborhood,
    set_neighborhood,
)
from .invariants import (
    chromatic_number,
    clique_number,
    find_clique_cutset,
    find_homogeneous_set,
    find_imperfect_neighborhood,
    is_perfect,
    iter_maximal_cliques,
)

HOLDS = "holds"
VIOLATED = "violated"
NOT_APPLICABLE = "not-applicable"
PRECONDITION_NOT_MET = "precondition-not-met"


@dataclass(frozen=True)
class ClaimEntry:
    status: str
    witness: tuple[int, ...] | None = None
    reason: str = ""

    def as_dict(self) -> dict:
        d = {"status": self.status}
        if self.witness is not None:
            d["witness"] = list(self.witness)
        if self.reason:
            d["reason"] = self.reason
        return d


@dataclass
class ClaimLedger:
    entries: dict[str, ClaimEntry] = field(default_factory=dict)

    def __getitem__(self, name: str) -> ClaimEntry:
        return self.entries[name]

    @property
    def all_hold(self) -> bool:
        """No entry is violated (entries whose hypotheses fail are allowed)."""
        return all(e.status != VIOLATED for e in self.entries.values())

    @property
    def violations(self) -> dict[str, ClaimEntry]:
        return {k: e for k, e in self.entries.items() if e.status == VIOLATED}

    def as_dict(self) -> dict:
        return {k: e.as_dict() for k, e in self.entries.items()}


def _holds() -> ClaimEntry:
    return ClaimEntry(HOLDS)


def _violated(witness: Sequence[int], reason: str) -> ClaimEntry:
    return ClaimEntry(VIOLATED, tuple(witness), reason)


def _not_applicable(reason: str, witness: Sequence[int] | None = None, status: str = NOT_APPLICABLE) -> ClaimEntry:
    return ClaimEntry(status, None if witness is None else tuple(witness), reason)


# -- hypotheses ----------------------------------------------------------------

_BULL = make_named("bull")
_FOUR_K1 = make_named("4K1")


def _hypothesis_failure(g: Graph, *, four_k1: bool = False, status: str = PRECONDITION_NOT_MET) -> ClaimEntry | None:
    w = contains_induced(g, _BULL, "bull")
    if w is not None:
        return _not_applicable("graph contains a bull", w.vertices, status)
    if four_k1:
        w = contains_induced(g, _FOUR_K1, "4K1")
        if w is not None:
            return _not_applicable("graph contains 4K1", w.vertices, status)
    v = find_imperfect_neighborhood(g)
    if v is not None:
        return _not_applicable("graph is not locally perfect", (v,), status)
    return None


def _hole_mask(g: Graph, hole: Sequence[int], odd: bool) -> int:
    k = len(hole)
    if k < 4 or (odd and k % 2 == 0) or not verify_embedding(g, cycle(k), hole):
        raise GraphError(f"{tuple(hole)} is not {'an odd' if odd else 'a'} hole of the graph")
    return sum(1 << v for v in hole)


# -- attachments to odd holes --------------------------------------------------

def attachment_on_hole(g: Graph, hole: Sequence[int], u: int) -> tuple[int, bool]:
    """``(N_C(u), whether it is stable)`` for a hole ``C`` and a vertex off it."""
    cmask = _hole_mask(g, hole, odd=False)
    if cmask >> u & 1:
        raise GraphError(f"vertex {u} lies on the hole")
    att = g.rows[u] & cmask
    return att, g.is_stable(att)


def verify_stable_attachment(g: Graph, hole: Sequence[int]) -> ClaimEntry:
    """Every ``u`` on the hole's boundary with a neighbour beyond it attaches to a stable set."""
    cmask = _hole_mask(g, hole, odd=True)
    bad = _hypothesis_failure(g)
    if bad is not None:
        return bad
    far = set_anti_neighborhood(g, cmask)
    for u in bits(set_neighborhood(g, cmask)):
        for v in bits(g.rows[u] & far):
            if not g.is_stable(g.rows[u] & cmask):
                return _violated((u, v), "attachment of u is not stable")
    return _holds()


def verify_common_attachment(g: Graph, hole: Sequence[int]) -> ClaimEntry:
    """Adjacent ``x, y`` with a common neighbour ``z`` beyond the hole and at least
    two hole neighbours each attach to the same hole vertices."""
    cmask = _hole_mask(g, hole, odd=True)
    bad = _hypothesis_failure(g)
    if bad is not None:
        return bad
    rows = g.rows
    near = set_neighborhood(g, cmask)
    for z in bits(set_anti_neighborhood(g, cmask)):
        pool = rows[z] & near
        for x in bits(pool):
            ax = rows[x] & cmask
            if ax.bit_count() < 2:
                continue
            for y in bits(rows[x] & pool):
                if y < x:
                    continue
                ay = rows[y] & cmask
                if ay.bit_count() >= 2 and ax != ay:
                    return _violated((x, y, z), "x and y attach differently")
    return _holds()


def verify_no_far_antihole(g: Graph) -> ClaimEntry:
    """No ``G[M(v)]`` contains an odd antihole on seven or more vertices."""
    if not is_connected(g):
        return _not_applicable("graph is not connected", status=PRECONDITION_NOT_MET)
    bad = _hypothesis_failure(g)
    if bad is not None:
        return bad
    for v in range(g.n):
        far = anti_neighborhood(g, v)
        w = find_odd_antihole(induced_subgraph(g, far), 7)
        if w is not None:
            verts = members(far)
            return _violated((v,) + tuple(verts[i] for i in w.vertices), "odd antihole in M(v)")
    return _holds()


# -- classification around a 5-hole -------------------------------------------

def _shape_table() -> dict[int, tuple[str, int]]:
    table = {}
    for i in range(5):
        def pos(*offs: int) -> int:
            return sum(1 << ((i + o) % 5) for o in offs)

        table[pos(0)] = ("X", i)
        table[pos(0, 2)] = ("Y", i)
        table[pos(-1, 0, 1)] = ("Z", i)
        table[pos(0, 1, 2, 3)] = ("W", i)
    return table


_SHAPES = _shape_table()


@dataclass(frozen=True)
class HoleDecomposition:
    hole: tuple[int, ...]
    X: tuple[int, ...]
    Y: tuple[int, ...]
    Z: tuple[int, ...]
    W: tuple[int, ...]
    M: int
    other: int

    def union(self, name: str) -> int:
        out = 0
        for m in getattr(self, name):
            out |= m
        return out

    @property
    def hole_mask(self) -> int:
        return sum(1 << v for v in self.hole)

    def as_dict(self) -> dict:
        return {
            "hole": list(self.hole),
            **{k: [list(members(m)) for m in getattr(self, k)] for k in "XYZW"},
            "M": list(members(self.M)),
            "other": list(members(self.other)),
        }


def classify_around_5hole(g: Graph, hole: Sequence[int]) -> HoleDecomposition:
    hole = tuple(hole)
    if len(hole) != 5 or not verify_embedding(g, cycle(5), hole):
        raise GraphError(f"{hole} is not a 5-hole of the graph")
    cmask = sum(1 << v for v in hole)
    pos_of = {v: i for i, v in enumerate(hole)}
    fam = {k: [0] * 5 for k in "XYZW"}
    m = other = 0
    for u in range(g.n):
        if cmask >> u & 1:
            continue
        att = 0
        for v in bits(g.rows[u] & cmask):
            att |= 1 << pos_of[v]
        if not att:
            m |= 1 << u
            continue
        shape = _SHAPES.get(att)
        if shape is None:
            other |= 1 << u
        else:
            fam[shape[0]][shape[1]] |= 1 << u
    return HoleDecomposition(hole, *(tuple(fam[k]) for k in "XYZW"), m, other)


def hole_orientations(hole: Sequence[int]) -> list[tuple[int, ...]]:
    """The 10 rotations and reflections of a 5-hole, rotations first."""
    h = tuple(hole)
    rots = [h[i:] + h[:i] for i in range(5)]
    r = (h[0],) + tuple(reversed(h[1:]))
    return rots + [r[i:] + r[:i] for i in range(5)]


# -- claims ----------------------------------------------------------------------

CLAIMS = (
    "partition-covers",
    "xy-complete-to-m",
    "m-singleton",
    "xy-zw-cliques",
    "x-consecutive-clique",
    "y-excludes",
    "y-anticomplete",
    "yz-complete",
    "y-nonempty",
    "z-blowup",
    "x-z-adjacency",
    "w-z-adjacency",
)


def _nonadjacent_pair(g: Graph, s: int) -> tuple[int, int] | None:
    for u in bits(s):
        miss = s & ~g.rows[u] & ~(1 << u)
        if miss:
            return u, (miss & -miss).bit_length() - 1
    return None


def _missing_edge(g: Graph, a: int, b: int) -> tuple[int, int] | None:
    """A pair ``(u in a, v in b)`` with ``u`` not adjacent to ``v``."""
    for u in bits(a):
        miss = b & ~g.rows[u]
        if miss:
            return u, (miss & -miss).bit_length() - 1
    return None


def _present_edge(g: Graph, a: int, b: int) -> tuple[int, int] | None:
    for u in bits(a):
        hit = b & g.rows[u]
        if hit:
            return u, (hit & -hit).bit_length() - 1
    return None


def _check_claims(g: Graph, d: HoleDecomposition, anchor: int) -> dict[str, ClaimEntry]:
    X, Y, Z, W = d.X, d.Y, d.Z, d.W
    Xall, Yall, Wall = d.union("X"), d.union("Y"), d.union("W")
    out: dict[str, ClaimEntry] = {}

    out["partition-covers"] = (
        _violated(members(d.other), "vertices with an unlisted hole attachment") if d.other else _holds()
    )

    bad = _missing_edge(g, Xall | Yall, d.M)
    if bad is not None:
        out["xy-complete-to-m"] = _violated(bad, "X or Y vertex misses a vertex of M")
    else:
        extra = set_neighborhood(g, d.M) & ~(Xall | Yall)
        out["xy-complete-to-m"] = (
            _violated(members(extra), "N(M) contains vertices outside X and Y") if extra else _holds()
        )

    hom = find_homogeneous_set(g)
    if hom is not None:
        out["m-singleton"] = _not_applicable("graph has a homogeneous set", members(hom))
    elif d.M != 1 << anchor:
        out["m-singleton"] = _violated(members(d.M), "M has more than the anchor")
    else:
        out["m-singleton"] = _holds()

    entry = _holds()
    for i in range(5):
        for s, label in ((X[i] | Y[i], f"X{i} with Y{i}"), (Z[(i + 1) % 5] | W[i], f"Z{(i + 1) % 5} with W{i}")):
            pair = _nonadjacent_pair(g, s)
            if pair is not None:
                entry = _violated(pair, f"{label} is not a clique")
                break
        if entry.status == VIOLATED:
            break
    out["xy-zw-cliques"] = entry

    entry = _holds()
    for i in range(5):
        if X[i] and X[(i + 2) % 5]:
            entry = _violated(members(X[i])[:1] + members(X[(i + 2) % 5])[:1], f"X{i} and X{(i + 2) % 5} both non-empty")
            break
    else:
        pair = _nonadjacent_pair(g, Xall)
        if pair is not None:
            entry = _violated(pair, "X is not a clique")
    out["x-consecutive-clique"] = entry

    entry = _holds()
    for i in range(5):
        if not Y[i]:
            continue
        rest = (Xall & ~X[(i + 1) % 5]) | Y[(i + 2) % 5] | Y[(i + 3) % 5] | (Wall & ~W[(i + 2) % 5])
        if rest:
            entry = _violated(members(Y[i])[:1] + members(rest)[:1], f"Y{i} non-empty together with an excluded set")
            break
    out["y-excludes"] = entry

    entry = _holds()
    for i in range(5):
        far = Y[(i + 1) % 5] | Z[(i + 1) % 5] | Z[(i + 3) % 5] | Z[(i + 4) % 5] | W[(i + 2) % 5]
        e = _present_edge(g, Y[i], far)
        if e is not None:
            entry = _violated(e, f"Y{i} has a forbidden neighbour")
            break
    out["y-anticomplete"] = entry

    entry = _holds()
    for i in range(5):
        e = _missing_edge(g, Y[i] | Z[(i + 1) % 5], Z[i]) or _missing_edge(g, Y[i], Z[(i + 2) % 5])
        if e is not None:
            entry = _violated(e, f"missing edge around Z{i}")
            break
    out["yz-complete"] = entry

    if not is_connected(g):
        out["y-nonempty"] = _not_applicable("graph is not connected")
    elif (cut := find_clique_cutset(g)) is not None:
        out["y-nonempty"] = _not_applicable("graph has a clique cutset", members(cut))
    else:
        out["y-nonempty"] = _holds() if Yall else _violated((), "Y is empty")

    if not Yall:
        out["z-blowup"] = _not_applicable("Y is empty")
    else:
        bags = [Z[i] | (1 << d.hole[i]) for i in range(5)]
        entry = _holds()
        for i in range(5):
            pair = _nonadjacent_pair(g, bags[i])
            e = None
            if pair is not None:
                e, why = pair, f"bag {i} is not a clique"
            elif (m := _missing_edge(g, bags[i], bags[(i + 1) % 5])) is not None:
                e, why = m, f"bags {i} and {(i + 1) % 5} not complete"
            elif (m := _present_edge(g, bags[i], bags[(i + 2) % 5])) is not None:
                e, why = m, f"bags {i} and {(i + 2) % 5} not anticomplete"
            if e is not None:
                entry = _violated(e, why)
                break
        out["z-blowup"] = entry

    entry = _holds()
    zall = d.union("Z")
    for i in range(5):
        e = _missing_edge(g, X[i], Z[i]) or _present_edge(g, X[i], zall & ~Z[i])
        if e is not None:
            entry = _violated(e, f"X{i} attaches wrongly to Z")
            break
    out["x-z-adjacency"] = entry

    if not Yall:
        out["w-z-adjacency"] = _not_applicable("Y is empty")
    else:
        entry = _holds()
        for i in range(5):
            if not Y[(i - 2) % 5]:
                continue
            e = _present_edge(g, W[i], Z[(i - 1) % 5]) or _missing_edge(g, W[i], Z[(i - 2) % 5] | Z[i])
            if e is not None:
                entry = _violated(e, f"W{i} attaches wrongly to Z")
                break
        out["w-z-adjacency"] = entry
    return out


def verify_5hole_claims(g: Graph, d: HoleDecomposition, anchor: int) -> ClaimLedger:
    """Check the structure forced around a 5-hole far from ``anchor``.

    Base hypotheses: bull-free, 4K1-free, locally perfect, ``anchor`` in
    ``M``.  When they fail every entry is not-applicable.  Some entries carry
    extra hypotheses (no homogeneous set, connected without clique cutset,
    ``Y`` non-empty) and are downgraded individually.
    """
    if not d.M >> anchor & 1:
        raise GraphError(f"anchor {anchor} is not in M")
    bad = _hypothesis_failure(g, four_k1=True, status=NOT_APPLICABLE)
    if bad is not None:
        return ClaimLedger({name: bad for name in CLAIMS})
    return ClaimLedger(_check_claims(g, d, anchor))


# -- the quotient F and the final partition ------------------------------------

def build_graph_F() -> Graph:
    """Hole 0..4, ``5`` on hole vertices 0 and 2, ``6`` on 1 and 3, ``7`` on 5 and 6."""
    edges = [(i, (i + 1) % 5) for i in range(5)] + [(5, 0), (5, 2), (6, 1), (6, 3), (7, 5), (7, 6)]
    f = Graph.from_edges(8, edges)
    checks = {
        "triangle-free": clique_number(f) <= 2,
        "chromatic number 3": chromatic_number(f) == 3,
        "bull-free": contains_induced(f, _BULL) is None,
        "4K1-free": contains_induced(f, _FOUR_K1) is None,
        "no homogeneous set": find_homogeneous_set(f) is None,
    }
    failed = [k for k, ok in checks.items() if not ok]
    if failed:
        raise RuntimeError(f"graph F postconditions failed: {failed}")
    return f


class ShapeMismatch(PreconditionError):
    def __init__(self, side: str, message: str):
        super().__init__(f"{side}: {message}")
        self.side = side


def check_4k1_shape(d: HoleDecomposition) -> None:
    """Raise ``ShapeMismatch`` unless X = X1, Y = Y0 (non-empty), W = W2,
    no other attachments, and M is a single vertex."""
    if d.other:
        raise ShapeMismatch("other", "vertices with unlisted attachments")
    if d.M.bit_count() != 1:
        raise ShapeMismatch("M", "M must be exactly the anchor")
    if not d.Y[0]:
        raise ShapeMismatch("Y", "Y0 is empty")
    if any(d.Y[i] for i in range(1, 5)):
        raise ShapeMismatch("Y", "Y has vertices outside Y0")
    if any(d.X[i] for i in (0, 2, 3, 4)):
        raise ShapeMismatch("X", "X has vertices outside X1")
    if any(d.W[i] for i in (0, 1, 3, 4)):
        raise ShapeMismatch("W", "W has vertices outside W2")


def split_4k1(d: HoleDecomposition) -> tuple[int, int]:
    h = d.hole
    a = d.X[1] | d.Y[0] | d.Z[0] | d.Z[2] | d.Z[3] | (1 << h[0]) | (1 << h[2]) | (1 << h[3])
    b = d.Z[1] | d.Z[4] | d.W[2] | d.M | (1 << h[1]) | (1 << h[4])
    return a, b


def check_split(g: Graph, a: int, b: int, wmax: int = 2) -> dict[str, bool]:
    """Perfection of ``G[A]`` and the clique-weight drop on ``B`` for unit
    weights and for every weight function with values in ``1..wmax``."""
    cliques = list(iter_maximal_cliques(g))
    unit = max((c & b).bit_count() for c in cliques) < max(c.bit_count() for c in cliques)
    weighted = True
    for w in product(range(1, wmax + 1), repeat=g.n):
        total = [sum(w[v] for v in bits(c)) for c in cliques]
        inside = [sum(w[v] for v in bits(c & b)) for c in cliques]
        if max(inside) >= max(total):
            weighted = False
            break
    return {"A-perfect": is_perfect(induced_subgraph(g, a)), "unit-drop": unit, "weighted-drop": weighted}


def build_4k1_partition(g: Graph, d: HoleDecomposition, wmax: int = 2):
    """The red/blue split ``(A, B)`` for a decomposition of the required shape.

    Returns ``(Partition, checks)`` where ``checks`` re-verifies that ``G[A]``
    is perfect and that ``B`` loses clique weight (see ``check_split``).
    """
    from .divisibility import Partition

    check_4k1_shape(d)
    a, b = split_4k1(d)
    if a | b != g.full or a & b:
        raise ShapeMismatch("partition", "A and B do not partition the vertices")
    return Partition(a, b), check_split(g, a, b, wmax)


def find_4k1_orientation(g: Graph, hole: Sequence[int]) -> HoleDecomposition | None:
    """First of the 10 orientations of ``hole`` whose decomposition has the required shape."""
    for h in hole_orientations(hole):
        d = classify_around_5hole(g, h)
        try:
            check_4k1_shape(d)
        except ShapeMismatch:
            continue
        return d
    return None


__all__ = [
    "ClaimEntry", "ClaimLedger", "HoleDecomposition", "ShapeMismatch", "CLAIMS",
    "HOLDS", "VIOLATED", "NOT_APPLICABLE", "PRECONDITION_NOT_MET",
    "attachment_on_hole", "verify_stable_attachment", "verify_common_attachment",
    "verify_no_far_antihole", "classify_around_5hole", "hole_orientations",
    "verify_5hole_claims", "build_graph_F", "check_4k1_shape", "split_4k1",
    "check_split", "build_4k1_partition", "find_4k1_orientation",
]
