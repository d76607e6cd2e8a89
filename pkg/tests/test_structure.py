import random
from itertools import product

import pytest

from conftest import corpus
from perfdiv.detectors import is_class_member, iter_holes
from perfdiv.divisibility import is_good_partition, is_perfectly_divisible, is_perfectly_weight_divisible_bounded
from perfdiv.graph import (
    Graph,
    GraphError,
    add_vertex,
    anti_neighborhood,
    clique_blowup,
    complete,
    cycle,
    induced_subgraph,
    is_connected,
    make_odd_torch,
    mask_of,
)
from perfdiv.invariants import chromatic_number, clique_number, find_homogeneous_set, is_locally_perfect
from perfdiv.structure import (
    CLAIMS,
    HOLDS,
    NOT_APPLICABLE,
    PRECONDITION_NOT_MET,
    VIOLATED,
    ShapeMismatch,
    attachment_on_hole,
    build_4k1_partition,
    build_graph_F,
    check_4k1_shape,
    classify_around_5hole,
    find_4k1_orientation,
    hole_orientations,
    verify_5hole_claims,
    verify_common_attachment,
    verify_no_far_antihole,
    verify_stable_attachment,
)

HOLE = (0, 1, 2, 3, 4)


def c5_plus(*attachments: int) -> Graph:
    g = cycle(5)
    for att in attachments:
        g = add_vertex(g, att)
    return g


def test_attachment_on_hole():
    assert attachment_on_hole(c5_plus(0b1), HOLE, 5) == (0b1, True)
    assert attachment_on_hole(c5_plus(0b11), HOLE, 5) == (0b11, False)
    assert attachment_on_hole(c5_plus(0), HOLE, 5) == (0, True)
    with pytest.raises(GraphError):
        attachment_on_hole(c5_plus(0), (0, 1, 2, 3, 5), 4)
    with pytest.raises(GraphError):
        attachment_on_hole(c5_plus(0), HOLE, 2)


def test_stable_attachment_examples():
    assert verify_stable_attachment(make_odd_torch(5, 0b1), HOLE).status == HOLDS
    g = add_vertex(c5_plus(0b1), 1 << 5)
    assert verify_stable_attachment(g, HOLE).status == HOLDS
    bull_host = c5_plus(0b11, 1 << 5)  # u on an edge of the hole gives a bull
    e = verify_stable_attachment(bull_host, HOLE)
    assert e.status == PRECONDITION_NOT_MET and "bull" in e.reason and len(e.witness) == 5
    with pytest.raises(GraphError):
        verify_stable_attachment(cycle(6), (0, 1, 2, 3, 4, 5))


def _common_instance(ax: int, ay: int) -> Graph:
    # hole 0..4, x = 5, y = 6, z = 7; x ~ y, both ~ z
    g = c5_plus(ax, ay | (1 << 5))
    return add_vertex(g, mask_of([5, 6]))


def test_common_attachment_examples():
    assert verify_common_attachment(make_odd_torch(5, 0b1), HOLE).status == HOLDS
    assert verify_common_attachment(_common_instance(0b101, 0b101), HOLE).status == HOLDS
    e = verify_common_attachment(_common_instance(0b101, 0b10010), HOLE)
    assert e.status == PRECONDITION_NOT_MET
    assert e.reason in ("graph contains a bull", "graph is not locally perfect")


def test_common_attachment_never_violated_on_corpus():
    for g in corpus(8):
        for h in iter_holes(g, 5):
            if len(h) % 2:
                assert verify_common_attachment(g, h).status != VIOLATED
                assert verify_stable_attachment(g, h).status != VIOLATED


def test_no_far_antihole_examples():
    assert verify_no_far_antihole(complete(5)).status == HOLDS
    assert verify_no_far_antihole(cycle(7)).status == HOLDS
    assert verify_no_far_antihole(Graph(2, (0, 0))).status == PRECONDITION_NOT_MET
    for g in corpus(7):
        if g.n and clique_number(g) <= 2 and is_connected(g):
            assert verify_no_far_antihole(g).status == HOLDS


def test_classify_examples():
    d = classify_around_5hole(c5_plus(0b1), HOLE)
    assert d.X[0] == 1 << 5 and d.M == 0 and d.other == 0
    d = classify_around_5hole(c5_plus(0b11111), HOLE)
    assert d.other == 1 << 5
    d = classify_around_5hole(c5_plus(mask_of([4, 0, 1])), HOLE)
    assert d.Z[0] == 1 << 5
    d = classify_around_5hole(c5_plus(mask_of([0, 2])), HOLE)
    assert d.Y[0] == 1 << 5
    d = classify_around_5hole(c5_plus(mask_of([1, 2, 3, 4])), HOLE)
    assert d.W[1] == 1 << 5
    with pytest.raises(GraphError):
        classify_around_5hole(cycle(6), (0, 1, 2, 3, 4))


def test_classification_is_a_partition_on_corpus():
    for g in corpus(7):
        for h in iter_holes(g, 5, 5):
            d = classify_around_5hole(g, h)
            parts = [d.hole_mask, d.M, d.other, *d.X, *d.Y, *d.Z, *d.W]
            total = 0
            for p in parts:
                assert total & p == 0
                total |= p
            assert total == g.full


def test_orientations():
    o = hole_orientations(HOLE)
    assert len(o) == 10 and len(set(o)) == 10
    assert o[0] == HOLE and o[5] == (0, 4, 3, 2, 1)


def test_graph_F():
    f = build_graph_F()
    assert (f.n, f.num_edges()) == (8, 11)
    assert clique_number(f) == 2 and chromatic_number(f) == 3
    assert is_class_member(f, "bull,4K1")[0]
    assert find_homogeneous_set(f) is None
    assert is_perfectly_divisible(f)
    assert is_perfectly_weight_divisible_bounded(f, 3)
    for v in range(8):
        sizes = [1] * 8
        sizes[v] = 2
        assert find_homogeneous_set(clique_blowup(f, sizes)) is not None


def test_claims_on_F_and_its_blowup():
    f = build_graph_F()
    ledger = verify_5hole_claims(f, classify_around_5hole(f, HOLE), 7)
    assert set(ledger.entries) == set(CLAIMS)
    assert all(e.status == HOLDS for e in ledger.entries.values())
    b = clique_blowup(f, [2, 1, 1, 2, 1, 1, 1, 1])
    hole = (0, 2, 3, 5, 6)
    ledger = verify_5hole_claims(b, classify_around_5hole(b, hole), 9)
    assert ledger.all_hold
    assert ledger["m-singleton"].status == NOT_APPLICABLE
    assert ledger["z-blowup"].status == HOLDS


def test_claims_anchor_must_be_far():
    g = c5_plus(0b1)
    with pytest.raises(GraphError):
        verify_5hole_claims(g, classify_around_5hole(g, HOLE), 5)


def test_claims_not_applicable_on_hypothesis_failure():
    g = c5_plus(0b11, 0)  # a bull on the hole edge 0-1
    ledger = verify_5hole_claims(g, classify_around_5hole(g, HOLE), 6)
    assert all(e.status == NOT_APPLICABLE for e in ledger.entries.values())


def test_claims_and_cover_on_corpus():
    """Every (bull, 4K1)-free locally perfect graph with a 5-hole far from some vertex."""
    seen = 0
    for g in corpus(8):
        if g.n < 6 or not is_class_member(g, "bull,4K1")[0] or not is_locally_perfect(g):
            continue
        for v in range(g.n):
            far = anti_neighborhood(g, v)
            verts = [u for u in range(g.n) if far >> u & 1]
            for h in iter_holes(induced_subgraph(g, far), 5, 5):
                hole = tuple(verts[i] for i in h)
                d = classify_around_5hole(g, hole)
                assert d.other == 0
                assert verify_5hole_claims(g, d, v).all_hold
                seen += 1
    assert seen > 0


# -- synthesised end states ----------------------------------------------------

def end_state(zs, nx_, nw, ny, free) -> tuple[Graph, int]:
    """Hole 0..4, Z_i bags, X_1, W_2, Y_0 (sizes given) and the anchor.

    Adjacency follows the forced structure; ``free`` toggles the three pairs
    the structure leaves open: X-Y, X-W and W-Z_4.
    """
    idx = 5
    Z = []
    for i in range(5):
        Z.append(list(range(idx, idx + zs[i])))
        idx += zs[i]
    X = list(range(idx, idx + nx_)); idx += nx_
    W = list(range(idx, idx + nw)); idx += nw
    Y = list(range(idx, idx + ny)); idx += ny
    anchor = idx
    n = idx + 1
    edges = [(i, (i + 1) % 5) for i in range(5)]

    def join(a, b):
        edges.extend((u, v) for u in a for v in b if u != v)

    def clique(a):
        edges.extend((a[i], a[j]) for i in range(len(a)) for j in range(i + 1, len(a)))

    for i in range(5):
        bag = Z[i] + [i]
        clique(bag)
        join(Z[i], [(i - 1) % 5, (i + 1) % 5])
        join(Z[i], Z[(i + 1) % 5])
    clique(X); clique(W); clique(Y)
    join(X, [1]); join(X, Z[1]); join(X, [anchor])
    join(Y, [0, 2]); join(Y, Z[0]); join(Y, Z[2]); join(Y, [anchor])
    join(W, [2, 3, 4, 0]); join(W, Z[0]); join(W, Z[2]); join(W, Z[3])
    if free[0]:
        join(X, Y)
    if free[1]:
        join(X, W)
    if free[2]:
        join(W, Z[4])
    return Graph.from_edges(n, edges), anchor


def test_partition_rechecks_pass_whenever_claims_hold():
    rnd = random.Random(17)
    configs = list(product(product((0, 1), repeat=5), (0, 1), (0, 1), (1, 2), product((0, 1), repeat=3)))
    strict = 0
    for zs, nx_, nw, ny, free in rnd.sample(configs, 120):
        g, anchor = end_state(zs, nx_, nw, ny, free)
        d = classify_around_5hole(g, HOLE)
        ledger = verify_5hole_claims(g, d, anchor)
        assert ledger.all_hold
        # base hypotheses hold; single claims may still be vacuous
        if ledger["partition-covers"].status != HOLDS:
            continue
        strict += 1
        part, checks = build_4k1_partition(g, d, wmax=2 if g.n <= 13 else 1)
        assert all(checks.values()), (zs, nx_, nw, ny, free, checks)
        assert is_good_partition(g, part)
    assert strict >= 40


def test_synthetic_end_state_all_singletons():
    g, anchor = end_state((1, 1, 1, 1, 1), 1, 1, 1, (0, 0, 1))
    d = find_4k1_orientation(g, HOLE)
    assert d is not None and d.hole == HOLE
    ledger = verify_5hole_claims(g, d, anchor)
    assert ledger.all_hold and ledger["m-singleton"].status == NOT_APPLICABLE
    part, checks = build_4k1_partition(g, d)
    assert checks == {"A-perfect": True, "unit-drop": True, "weighted-drop": True}
    assert part.B >> anchor & 1


def test_synthetic_end_state_every_claim_holds():
    g, anchor = end_state((0, 0, 0, 0, 0), 1, 1, 1, (0, 0, 1))
    d = classify_around_5hole(g, HOLE)
    ledger = verify_5hole_claims(g, d, anchor)
    assert all(e.status == HOLDS for e in ledger.entries.values())
    part, checks = build_4k1_partition(g, d)
    assert all(checks.values()) and is_good_partition(g, part)


def test_shape_mismatch():
    g, anchor = end_state((1, 1, 1, 1, 1), 0, 0, 1, (0, 0, 0))
    # drop Y_0 entirely: the anchor loses its only hole-side neighbours
    y = anchor - 1
    h = induced_subgraph(g, g.full & ~(1 << y))
    with pytest.raises(ShapeMismatch) as exc:
        check_4k1_shape(classify_around_5hole(h, HOLE))
    assert exc.value.side == "Y"
    g2 = add_vertex(g, 0b11111)
    with pytest.raises(ShapeMismatch) as exc:
        build_4k1_partition(g2, classify_around_5hole(g2, HOLE))
    assert exc.value.side == "other"
