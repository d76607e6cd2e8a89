import random

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import corpus, graphs, labeled_class_count, to_nx
from perfdiv.canon import (
    CapExceeded,
    canonical_form,
    canonical_labeling,
    enumerate_nonisomorphic,
    enumerate_up_to,
    is_isomorphic,
)
from perfdiv.graph import Graph, complement, complete, cycle, relabel
from perfdiv.graph6 import Graph6Error, decode_graph6, encode_graph6, iter_graph6, load_corpus, write_corpus


def test_graph6_known_strings():
    assert encode_graph6(complete(3)) == "Bw"
    assert decode_graph6("Bw") == complete(3)
    assert encode_graph6(complete(1)) == "@"
    assert encode_graph6(Graph(0, ())) == "?"
    assert decode_graph6("?").n == 0
    assert decode_graph6(">>graph6<<Bw") == complete(3)


@given(graphs(max_n=12))
def test_graph6_matches_networkx(g):
    assert encode_graph6(g) == nx.to_graph6_bytes(to_nx(g), header=False).decode().strip()


@pytest.mark.parametrize("line", ["", "B", "Bww", "B~", "Bx", "~~~~", "B\x7f"])
def test_graph6_malformed(line):
    with pytest.raises(Graph6Error):
        decode_graph6(line)


def test_corpus_io(tmp_path):
    p = tmp_path / "g.g6"
    p.write_text("Bw\n\nD?{\n")
    gs = list(load_corpus(p))
    assert [g.n for g in gs] == [3, 5]
    (tmp_path / "empty.g6").write_text("")
    assert list(load_corpus(tmp_path / "empty.g6")) == []
    with pytest.raises(Graph6Error) as exc:
        list(iter_graph6(["Bw", "garbage!"]))
    assert exc.value.lineno == 2
    out = tmp_path / "w.g6"
    assert write_corpus(corpus(4), out) == 18
    assert tuple(load_corpus(out)) == corpus(4)


def test_graph6_round_trip_corpus():
    for g in corpus(7):
        assert decode_graph6(encode_graph6(g)) == g


@pytest.mark.parametrize("n,count", [(1, 1), (2, 2), (3, 4), (4, 11), (5, 34), (6, 156)])
def test_enumeration_counts_match_orbit_oracle(n, count):
    assert labeled_class_count(n) == count
    assert len(list(enumerate_nonisomorphic(n))) == count


def test_enumeration_is_deterministic_and_sorted():
    a = [canonical_form(g) for g in enumerate_nonisomorphic(5)]
    assert a == sorted(a) and len(set(a)) == len(a)
    assert a == [canonical_form(g) for g in enumerate_nonisomorphic(5)]


def test_enumeration_cap():
    with pytest.raises(CapExceeded):
        list(enumerate_nonisomorphic(9))
    with pytest.raises(CapExceeded):
        list(enumerate_up_to(9))


def test_filtered_enumeration_matches_filtering():
    def tf(g):
        return not any(g.rows[u] & g.rows[v] for u, v in g.edges())

    assert [g for g in enumerate_nonisomorphic(6) if tf(g)] == list(enumerate_nonisomorphic(6, keep=tf))


def test_canonical_form_examples():
    assert canonical_form(cycle(5)) == canonical_form(complement(cycle(5)))
    assert canonical_form(cycle(6)) != canonical_form(complement(cycle(6)))


@given(graphs(max_n=8), st.randoms(use_true_random=False))
@settings(max_examples=1000, deadline=None)
def test_canonical_form_invariant_under_relabelling(g, rnd):
    order = list(range(g.n))
    rnd.shuffle(order)
    assert canonical_form(relabel(g, order)) == canonical_form(g)


@given(graphs(max_n=7), graphs(max_n=7))
@settings(max_examples=200, deadline=None)
def test_isomorphism_matches_networkx(g, h):
    assert is_isomorphic(g, h) == (g.n == h.n and nx.is_isomorphic(to_nx(g), to_nx(h)))


def test_canonical_labeling_reproduces_key():
    rnd = random.Random(7)
    for g in corpus(6)[::7]:
        order = canonical_labeling(g)
        assert sorted(order) == list(range(g.n))
        assert encode_graph6(relabel(g, order)) == canonical_form(g)
        perm = list(range(g.n))
        rnd.shuffle(perm)
        assert is_isomorphic(relabel(g, perm), g)
