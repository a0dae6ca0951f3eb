"""Core hypergraph type: ranks, families, recognizers, and file formats."""

import json
import random
from itertools import combinations
from math import comb

import pytest

from fanoturan.errors import CapabilityError, FormatError, ParameterError
from fanoturan.hypergraph import (
    FANO_LINES,
    Graph,
    Hypergraph,
    b_formula,
    complement,
    construct,
    degree_in_set,
    edge_split_counts,
    format_text,
    from_json_dict,
    link_graph,
    pair_rank,
    parse_text,
    random_hypergraph,
    recognize_balanced_bipartite,
    to_json_dict,
    triple_rank,
)


def test_triple_rank_is_colex_bijection():
    colex = [
        (a, b, c) for c in range(2, 10) for b in range(1, c) for a in range(b)
    ]
    assert [triple_rank(*t) for t in colex] == list(range(comb(10, 3)))
    assert sorted(triple_rank(*t) for t in combinations(range(10), 3)) == list(
        range(comb(10, 3))
    )


def test_pair_rank_is_colex_bijection():
    colex = [(a, b) for b in range(1, 12) for a in range(b)]
    assert [pair_rank(*t) for t in colex] == list(range(comb(12, 2)))


def test_b_formula_matches_construction_everywhere():
    for n in range(2, 65):
        assert b_formula(n) == construct("balanced_bipartite", n).edge_count


def test_b_formula_parity_closed_forms_agree():
    for n in range(2, 65):
        if n % 2 == 0:
            split = (n - 2) * n * n // 8
        else:
            split = (n - 2) * (n * n - 1) // 8
        assert b_formula(n) == split == (n - 2) * (n * n // 4) // 2


def test_construct_named_values():
    assert construct("complete", 7).edge_count == 35
    assert construct("fano", 7).edge_count == 7
    assert construct("j7", 7).edge_count == 30
    assert construct("pasch", 6).edge_count == 4
    assert construct("balanced_bipartite", 7).edge_count == 30


def test_construct_validation():
    with pytest.raises(ParameterError):
        construct("fano", 8)
    with pytest.raises(ParameterError):
        construct("j7", 6)
    with pytest.raises(ParameterError):
        construct("pasch", 7)
    with pytest.raises(ParameterError):
        construct("nosuch", 7)
    with pytest.raises(CapabilityError):
        construct("complete", 65)


def test_fano_lines_are_a_projective_plane():
    # 7 lines, every point on 3 of them, any two lines meet in one point.
    assert len(FANO_LINES) == 7
    for v in range(7):
        assert sum(v in line for line in FANO_LINES) == 3
    for la, lb in combinations(FANO_LINES, 2):
        assert len(set(la) & set(lb)) == 1


def test_j7_misses_exactly_the_pair_triples():
    h = construct("j7", 7)
    missing = [t for t in combinations(range(7), 3) if t not in set(h.edges())]
    assert missing == [(0, 1, c) for c in range(2, 7)]


def test_hypergraph_edge_roundtrip_and_membership():
    rng = random.Random(11)
    for _ in range(50):
        n = rng.randrange(4, 11)
        h = random_hypergraph(n, rng.random(), rng)
        edges = h.edges()
        ranks = [triple_rank(*t) for t in edges]
        assert ranks == sorted(ranks)
        assert Hypergraph.from_edges(n, edges) == h
        for t in edges:
            assert h.has_edge(*t)


def test_complement_is_an_involution():
    rng = random.Random(5)
    for _ in range(40):
        n = rng.randrange(3, 12)
        h = random_hypergraph(n, rng.random(), rng)
        assert complement(complement(h)) == h
        assert h.edge_count + complement(h).edge_count == comb(n, 3)


def test_link_graph_has_degree_many_edges():
    rng = random.Random(7)
    for _ in range(30):
        n = rng.randrange(4, 10)
        h = random_hypergraph(n, rng.random(), rng)
        for v in range(n):
            degree = sum(v in t for t in h.edges())
            assert link_graph(h, v).edge_count == degree


def test_link_graph_of_fano_is_a_perfect_matching():
    h = construct("fano", 7)
    for v in range(7):
        link = link_graph(h, v)
        assert link.edge_count == 3
        used = [u for e in link.edges() for u in e]
        assert sorted(used) == sorted(set(used))  # three disjoint pairs


def test_edge_split_counts_sums_to_edge_count():
    rng = random.Random(13)
    for _ in range(60):
        n = rng.randrange(4, 11)
        h = random_hypergraph(n, rng.random(), rng)
        k = rng.sample(range(n), rng.randrange(0, n + 1))
        counts = edge_split_counts(h, k)
        assert len(counts) == 4
        assert sum(counts) == h.edge_count


def test_degree_in_set_matches_direct_count():
    rng = random.Random(17)
    for _ in range(40):
        n = rng.randrange(4, 10)
        h = random_hypergraph(n, rng.random(), rng)
        v = rng.randrange(n)
        others = [u for u in range(n) if u != v]
        k = set(rng.sample(others, rng.randrange(1, n)))
        want = sum(v in t and set(t) - {v} <= k for t in h.edges())
        assert degree_in_set(h, v, k) == want
    with pytest.raises(ParameterError):
        degree_in_set(h, v, {v})


def test_recognize_balanced_bipartite_on_the_family():
    for n in range(2, 17):
        h = construct("balanced_bipartite", n)
        parts = recognize_balanced_bipartite(h)
        assert parts is not None
        x, y = parts
        assert abs(len(x) - len(y)) <= 1
        assert sorted(x + y) == list(range(n))
        for side in (x, y):
            for t in combinations(side, 3):
                assert not h.has_edge(*t)


def test_recognize_balanced_bipartite_is_label_independent():
    rng = random.Random(23)
    base = construct("balanced_bipartite", 9)
    edges = base.edges()
    for _ in range(20):
        perm = list(range(9))
        rng.shuffle(perm)
        h = Hypergraph.from_edges(9, [tuple(sorted(perm[v] for v in t)) for t in edges])
        assert recognize_balanced_bipartite(h) is not None


def test_recognize_balanced_bipartite_rejects_near_misses():
    assert recognize_balanced_bipartite(construct("j7", 7)) is None
    b8 = construct("balanced_bipartite", 8)
    edges = b8.edges()
    # dropping any single crossing triple breaks the family
    assert recognize_balanced_bipartite(Hypergraph.from_edges(8, edges[1:])) is None
    assert recognize_balanced_bipartite(construct("complete", 6)) is None


def test_b6_has_unique_large_independent_set():
    h = construct("balanced_bipartite", 6)
    independent = [
        k for k in combinations(range(6), 3)
        if all(not h.has_edge(*t) for t in combinations(k, 3))
    ]
    assert independent == [(0, 1, 2), (3, 4, 5)]
    bigger = [
        k for k in combinations(range(6), 4)
        if all(not h.has_edge(*t) for t in combinations(k, 3))
    ]
    assert bigger == []


def test_random_hypergraph_is_seed_deterministic():
    a = random_hypergraph(9, 0.4, random.Random(99))
    b = random_hypergraph(9, 0.4, random.Random(99))
    assert a == b
    assert random_hypergraph(6, 0.0, random.Random(1)).edge_count == 0
    assert random_hypergraph(6, 1.0, random.Random(1)).edge_count == comb(6, 3)


def test_text_format_roundtrip():
    rng = random.Random(31)
    for _ in range(25):
        n = rng.randrange(3, 12)
        h = random_hypergraph(n, rng.random(), rng)
        text = format_text(h)
        assert parse_text(text) == h
        first = text.splitlines()[0].split()
        assert first == [str(h.n), str(h.edge_count)]


def test_text_format_rejects_malformed_input():
    bad = [
        "",                        # no header
        "7\n",                     # header too short
        "7 2\n0 1 2\n",            # edge count mismatch
        "7 1\n0 1\n",              # not a triple
        "7 1\n0 1 1\n",            # repeated vertex
        "7 1\n0 1 9\n",            # vertex out of range
        "7 2\n2 3 4\n0 1 2\n",     # not ascending by rank
        "7 2\n0 1 2\n0 1 2\n",     # duplicate edge
        "7 1\n0 1 x\n",            # not an integer
    ]
    for text in bad:
        with pytest.raises(FormatError):
            parse_text(text)


def test_json_roundtrip_and_key_policy():
    h = construct("j7", 7)
    obj = to_json_dict(h)
    assert set(obj) == {"n", "edges"}
    assert from_json_dict(json.loads(json.dumps(obj))) == h
    for bad in (
        {"n": 7},
        {"n": 7, "edges": [], "extra": 1},
        {"n": 7, "edges": [[0, 1]]},
        {"n": 7, "edges": [[0, 1, 7]]},
        {"n": 7, "edges": [[0, 1, 2], [0, 1, 2]]},
        {"n": "7", "edges": []},
        [1, 2, 3],
    ):
        with pytest.raises(FormatError):
            from_json_dict(bad)


def test_graph_type_basics():
    g = Graph.from_edges(5, [(0, 1), (1, 2), (3, 4)])
    assert g.edge_count == 3
    assert g.has_edge(2, 1)
    assert not g.has_edge(0, 4)
    with pytest.raises(ParameterError):
        Graph.from_edges(3, [(0, 0)])
