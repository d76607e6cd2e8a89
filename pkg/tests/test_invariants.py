from itertools import combinations

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import brute_chromatic_number, brute_clique_number, corpus, graphs, to_nx
from perfdiv.graph import (
    Graph,
    GraphError,
    PreconditionError,
    add_vertex,
    blowup_bags,
    cartesian_product,
    clique_blowup,
    complement,
    complete,
    components,
    cycle,
    edgeless,
    induced_subgraph,
    make_named,
    path,
)
from perfdiv.invariants import (
    chromatic_number,
    clique_number,
    diamond_trichotomy,
    find_clique_cutset,
    find_homogeneous_set,
    find_imperfect_neighborhood,
    find_imperfection,
    imperfect_cores,
    is_homogeneous,
    is_k_colorable,
    is_locally_perfect,
    is_perfect,
    is_proper_coloring,
    iter_cliques,
    iter_maximal_cliques,
    max_weight_clique,
    optimal_coloring,
    weighted_clique_number,
)


def naive_homogeneous_exists(g: Graph) -> bool:
    for s in range(1 << g.n):
        if is_homogeneous(g, s):
            return True
    return False


def naive_clique_cutset_exists(g: Graph) -> bool:
    base = len(components(g))
    for s in range(1, 1 << g.n):
        vs = [v for v in range(g.n) if s >> v & 1]
        if all(g.adjacent(u, v) for u, v in combinations(vs, 2)) and len(components(g, g.full & ~s)) > base:
            return True
    return False


def test_clique_examples():
    assert clique_number(cycle(5)) == 2
    assert clique_number(cartesian_product(complete(2), complete(3))) == 3
    assert weighted_clique_number(complete(2), [2, 3]) == 5
    with pytest.raises(GraphError):
        weighted_clique_number(complete(2), [1])
    with pytest.raises(GraphError):
        weighted_clique_number(complete(2), [1, 0])
    assert clique_number(Graph(0, ())) == 0


@given(graphs(max_n=8), st.data())
@settings(max_examples=150, deadline=None)
def test_weighted_clique_matches_networkx(g, data):
    w = data.draw(st.lists(st.integers(1, 5), min_size=g.n, max_size=g.n))
    h = to_nx(g)
    nx.set_node_attributes(h, dict(enumerate(w)), "w")
    best, mask = max_weight_clique(g, w)
    assert best == nx.max_weight_clique(h, "w")[1]
    assert g.is_clique(mask) and sum(w[v] for v in range(g.n) if mask >> v & 1) == best


@given(graphs(max_n=8))
@settings(max_examples=100, deadline=None)
def test_maximal_cliques_match_networkx(g):
    ours = sorted(iter_maximal_cliques(g))
    theirs = sorted(sum(1 << v for v in c) for c in nx.find_cliques(to_nx(g))) if g.n else []
    assert ours == theirs


def test_chromatic_examples():
    assert chromatic_number(cycle(5)) == 3
    assert chromatic_number(cartesian_product(complete(2), complete(3))) == 3
    assert chromatic_number(make_named("grotzsch")) == 4
    assert is_k_colorable(cycle(5), 2) is None
    assert is_k_colorable(Graph(0, ()), 0) == ()
    assert is_k_colorable(complete(1), 0) is None
    with pytest.raises(GraphError):
        is_k_colorable(cycle(5), -1)


def test_unit_weights_and_coloring_bounds_on_corpus():
    for g in corpus(6):
        omega, chi = clique_number(g), chromatic_number(g)
        assert omega == brute_clique_number(g)
        assert chi == brute_chromatic_number(g)
        assert omega <= chi <= g.n
        assert weighted_clique_number(g, [1] * g.n) == omega
        col = optimal_coloring(g)
        assert is_proper_coloring(g, col) and max(col) == chi


def test_perfection_examples():
    w = find_imperfection(cycle(5))
    assert w is not None and w.kind == "odd-hole"
    for m in range(1, 6):
        assert is_perfect(cartesian_product(complete(2), complete(m)))
    assert find_imperfection(complement(cycle(7))).kind == "odd-antihole"


def test_bipartite_graphs_are_perfect():
    for g in corpus(7):
        if nx.is_bipartite(to_nx(g)):
            assert is_perfect(g)


def test_imperfect_cores_characterise_perfect_subsets():
    for g in corpus(6)[::3]:
        cores = imperfect_cores(g)
        for s in range(1 << g.n):
            assert is_perfect(induced_subgraph(g, s)) == (not any(c & s == c for c in cores))


def test_local_perfection_examples():
    assert is_locally_perfect(cycle(7))
    # each neighbourhood of the 7-antihole induces a P4
    c7bar = complement(cycle(7))
    for v in range(7):
        assert nx.is_isomorphic(to_nx(induced_subgraph(c7bar, c7bar.rows[v])), nx.path_graph(4))
    assert find_imperfect_neighborhood(c7bar) is None
    wheel = add_vertex(cycle(5), 0b11111)
    assert find_imperfect_neighborhood(wheel) == 5
    assert is_locally_perfect(complete(5))


def test_homogeneous_examples():
    assert find_homogeneous_set(cycle(4)) == 0b101
    assert find_homogeneous_set(path(4)) is None
    sizes = [2, 1, 1, 1, 1]
    assert find_homogeneous_set(clique_blowup(cycle(5), sizes)) == blowup_bags(sizes)[0]


def test_clique_cutset_examples():
    assert find_clique_cutset(path(3)) == 0b10
    assert find_clique_cutset(cycle(5)) is None
    assert find_clique_cutset(complete(4)) is None
    assert find_clique_cutset(edgeless(3)) is None


def test_homogeneous_and_cutset_small_corpus():
    for g in corpus(6):
        h = find_homogeneous_set(g)
        assert (h is not None) == naive_homogeneous_exists(g)
        if h is not None:
            assert is_homogeneous(g, h)
        k = find_clique_cutset(g)
        assert (k is not None) == naive_clique_cutset_exists(g)
        if k is not None:
            assert g.is_clique(k) and len(components(g, g.full & ~k)) > len(components(g))


def test_iter_cliques_order():
    cl = list(iter_cliques(complete(3)))
    assert cl == [0b1, 0b10, 0b100, 0b11, 0b101, 0b110, 0b111]


def test_diamond_trichotomy_examples():
    assert diamond_trichotomy(cycle(5)) == "triangle-free"
    assert diamond_trichotomy(make_named("hammer")) == "low-degree"
    assert diamond_trichotomy(cartesian_product(complete(2), complete(4))) == "product"
    with pytest.raises(PreconditionError):
        diamond_trichotomy(make_named("bull"))
    with pytest.raises(PreconditionError):
        diamond_trichotomy(edgeless(2))
