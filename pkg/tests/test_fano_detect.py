"""Plane detection: three independent methods, witnesses, and cliques."""

import random
from itertools import combinations

import pytest

from fanoturan.canonical import canonical_form
from fanoturan.errors import ParameterError
from fanoturan.fano import (
    DetectionMethod,
    contains_clique,
    contains_fano,
    contains_fano_cover,
    contains_fano_crossing,
    contains_fano_embedding,
    contains_fano_pasch,
    embedding_edges,
    find_clique,
    find_fano_crossing,
    find_fano_embedding,
    find_fano_pasch,
)
from fanoturan.hypergraph import Hypergraph, construct, random_hypergraph, triple_rank


FANO = construct("fano", 7)
FANO_FORM = canonical_form(FANO)


def _witness_subhypergraph(edges):
    """The 7 witness triples relabeled onto vertices 0..6."""
    used = sorted({v for t in edges for v in t})
    assert len(used) == 7
    index = {v: i for i, v in enumerate(used)}
    return Hypergraph.from_edges(
        7, [tuple(sorted(index[v] for v in t)) for t in edges]
    )


def _assert_valid_witness(h, edges):
    assert len(edges) == 7
    for t in edges:
        assert h.has_edge(*t)
    assert canonical_form(_witness_subhypergraph(edges)) == FANO_FORM


def test_three_methods_agree_on_seeded_random_inputs():
    for n in (7, 8, 9):
        rng = random.Random(500 + n)
        for i in range(250):
            density = 0.3 + 0.6 * (i % 50) / 49
            h = random_hypergraph(n, density, rng)
            a = contains_fano_embedding(h)
            assert a == contains_fano_crossing(h)
            assert a == contains_fano_pasch(h)


def test_cover_method_agrees_with_embedding_on_1000_samples():
    rng = random.Random(77)
    for i in range(1000):
        h = random_hypergraph(8, 0.3 + 0.6 * (i % 100) / 99, rng)
        assert contains_fano_cover(h) == contains_fano_embedding(h)


def test_monotone_under_200_edge_additions():
    rng = random.Random(404)
    steps = 0
    while steps < 200:
        h = random_hypergraph(8, 0.35, rng)
        state = contains_fano_embedding(h)
        missing = [t for t in combinations(range(8), 3) if not h.has_edge(*t)]
        rng.shuffle(missing)
        for t in missing[:20]:
            h = Hypergraph(h.n, h.bits | (1 << triple_rank(*t)))
            now = contains_fano_embedding(h)
            assert now >= state  # never flips back to plane-free
            state = now
            steps += 1


def test_embedding_witness_is_sound():
    rng = random.Random(9)
    found = 0
    while found < 40:
        h = random_hypergraph(8, 0.55, rng)
        images = find_fano_embedding(h)
        if images is None:
            continue
        assert len(set(images)) == 7
        _assert_valid_witness(h, embedding_edges(images))
        found += 1


def test_crossing_witness_is_sound():
    rng = random.Random(10)
    found = 0
    while found < 40:
        h = random_hypergraph(8, 0.55, rng)
        w = find_fano_crossing(h)
        if w is None:
            continue
        _assert_valid_witness(h, w.fano_edges())
        found += 1


def test_pasch_witness_is_sound():
    rng = random.Random(11)
    found = 0
    while found < 40:
        h = random_hypergraph(8, 0.55, rng)
        w = find_fano_pasch(h)
        if w is None:
            continue
        assert w.parity in (0, 1)
        _assert_valid_witness(h, w.fano_edges())
        found += 1


def test_fano_contains_itself_with_witness_equal_to_itself():
    images = find_fano_embedding(FANO)
    assert images is not None
    assert set(embedding_edges(images)) == set(FANO.edges())
    w = find_fano_pasch(FANO)
    assert set(w.fano_edges()) == set(FANO.edges())
    w = find_fano_crossing(FANO)
    assert set(w.fano_edges()) == set(FANO.edges())


def test_pasch_hub_works_at_every_plane_vertex():
    # moving any chosen vertex to position 0 still yields a valid witness
    for v in range(7):
        perm = [0] * 7
        perm[v] = 0
        rest = [u for u in range(7) if u != v]
        for i, u in enumerate(rest):
            perm[u] = i + 1
        h = Hypergraph.from_edges(
            7, [tuple(sorted(perm[x] for x in t)) for t in FANO.edges()]
        )
        w = find_fano_pasch(h)
        assert w is not None
        for t in w.fano_edges():
            assert h.has_edge(*t)


def test_named_containment_facts():
    assert contains_fano_embedding(construct("complete", 7))
    assert not contains_fano_embedding(construct("j7", 7))
    for n in range(7, 13):
        b = construct("balanced_bipartite", n)
        assert not contains_fano_embedding(b)
        assert not contains_fano_crossing(b)
        assert not contains_fano_pasch(b)
    assert not contains_fano_embedding(construct("pasch", 6))


def test_small_vertex_counts_are_trivially_plane_free():
    for n in (1, 2, 3, 4, 5, 6):
        h = construct("complete", n)
        assert not contains_fano_embedding(h)
        assert not contains_fano_crossing(h)
        assert not contains_fano_pasch(h)


def test_clique_detection_named_facts():
    assert contains_clique(construct("j7", 7), 6)
    assert contains_clique(construct("balanced_bipartite", 8), 4)
    assert not contains_clique(construct("balanced_bipartite", 9), 5)
    assert contains_clique(construct("complete", 6), 6)
    assert find_clique(construct("complete", 3), 4) is None


def test_clique_witness_is_sound():
    rng = random.Random(15)
    found = 0
    while found < 30:
        h = random_hypergraph(8, 0.7, rng)
        quad = find_clique(h, 4)
        if quad is None:
            continue
        assert len(set(quad)) == 4
        for t in combinations(sorted(quad), 3):
            assert h.has_edge(*t)
        found += 1


def test_clique_size_validation():
    h = construct("complete", 7)
    for k in (2, 3, 7, 8):
        with pytest.raises(ParameterError):
            find_clique(h, k)


def test_dispatch_covers_all_methods():
    for method in DetectionMethod:
        assert contains_fano(FANO, method)
        assert not contains_fano(construct("balanced_bipartite", 7), method)
    assert contains_fano(FANO) == contains_fano(FANO, DetectionMethod.EMBEDDING)
