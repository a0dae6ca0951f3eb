"""Canonical labeling: invariance, separation, automorphism counting."""

import random
from itertools import permutations

import pytest

from fanoturan.canonical import (
    CANONICAL_CAP,
    CanonicalForm,
    automorphism_count,
    canonical_form,
    is_canonical,
    relabel,
)
from fanoturan.errors import CapabilityError, ParameterError
from fanoturan.hypergraph import Hypergraph, construct, random_hypergraph


def _shuffled(h, rng):
    perm = list(range(h.n))
    rng.shuffle(perm)
    return relabel(h, perm)


def test_invariant_under_100_random_relabelings():
    rng = random.Random(42)
    subjects = [
        construct("fano", 7),
        construct("balanced_bipartite", 7),
        construct("j7", 7),
        random_hypergraph(6, 0.5, rng),
        random_hypergraph(8, 0.3, rng),
    ]
    for h in subjects:
        want = canonical_form(h)
        for _ in range(100):
            assert canonical_form(_shuffled(h, rng)) == want


def test_separates_b7_from_j7():
    assert canonical_form(construct("balanced_bipartite", 7)) != canonical_form(
        construct("j7", 7)
    )


def test_exhaustive_oracle_b7_j7_not_isomorphic():
    b7 = construct("balanced_bipartite", 7)
    j7 = set(construct("j7", 7).edges())
    for perm in permutations(range(7)):
        mapped = {tuple(sorted(perm[v] for v in t)) for t in b7.edges()}
        assert mapped != j7


def test_fano_has_30_distinct_encodings():
    fano = construct("fano", 7)
    encodings = {relabel(fano, perm).bits for perm in permutations(range(7))}
    assert len(encodings) == 5040 // 168 == 30


def test_automorphism_counts_of_named_hypergraphs():
    assert automorphism_count(construct("fano", 7)) == 168
    assert automorphism_count(construct("balanced_bipartite", 7)) == 144
    assert automorphism_count(construct("j7", 7)) == 240
    assert automorphism_count(construct("complete", 5)) == 120
    assert automorphism_count(Hypergraph(6, 0)) == 720


def test_pasch_automorphisms_and_orbit():
    pasch = construct("pasch", 6)
    count = automorphism_count(pasch)
    orbit = {relabel(pasch, perm).bits for perm in permutations(range(6))}
    assert count * len(orbit) == 720


def test_equal_forms_exactly_for_isomorphic_inputs():
    rng = random.Random(3)
    for _ in range(20):
        h = random_hypergraph(7, 0.4, rng)
        g = _shuffled(h, rng)
        assert canonical_form(h) == canonical_form(g)
    a = construct("balanced_bipartite", 8)
    b = Hypergraph.from_edges(8, a.edges()[:-1])
    assert canonical_form(a) != canonical_form(b)


def test_canonical_representative_is_reachable():
    rng = random.Random(8)
    for _ in range(15):
        h = random_hypergraph(6, 0.5, rng)
        form = canonical_form(h)
        rep = form.to_hypergraph()
        assert canonical_form(rep) == form
        assert is_canonical(rep)
        assert rep.edge_count == h.edge_count


def test_is_canonical_rejects_non_minimal_labelings():
    fano = construct("fano", 7)
    rep = canonical_form(fano).to_hypergraph()
    seen_other = False
    for perm in permutations(range(7)):
        g = relabel(fano, perm)
        if g != rep:
            seen_other = True
            assert not is_canonical(g)
    assert seen_other


def test_relabel_validation():
    h = construct("fano", 7)
    with pytest.raises(ParameterError):
        relabel(h, [0, 1, 2, 3, 4, 5])  # wrong length
    with pytest.raises(ParameterError):
        relabel(h, [0, 0, 1, 2, 3, 4, 5])  # not a bijection
    with pytest.raises(ParameterError):
        relabel(h, [0, 1, 2, 3, 4, 5, 7])  # out of range


def test_canonical_cap_is_a_capability_error():
    ok = random_hypergraph(CANONICAL_CAP, 0.5, random.Random(0))
    canonical_form(ok)
    over = Hypergraph(CANONICAL_CAP + 1, 7)
    with pytest.raises(CapabilityError):
        canonical_form(over)
    with pytest.raises(CapabilityError):
        automorphism_count(over)


def test_canonical_form_ordering_and_fields():
    f = canonical_form(construct("fano", 7))
    assert f.n == 7
    assert len(f.ranks) == 7
    assert list(f.ranks) == sorted(f.ranks)
    g = canonical_form(construct("j7", 7))
    assert (f < g) != (g < f)
    assert sorted([g, f]) == sorted([f, g])


def test_relabeled_forms_hash_consistently():
    rng = random.Random(12)
    h = random_hypergraph(7, 0.5, rng)
    forms = {canonical_form(_shuffled(h, rng)) for _ in range(30)}
    assert len(forms) == 1
    assert CanonicalForm(h.n, canonical_form(h).ranks) in forms
