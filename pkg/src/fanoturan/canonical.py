"""Canonical forms under vertex relabeling, for hypergraphs on <= 12 vertices.

The canonical form of a hypergraph is the lexicographically least sorted
sequence of colex edge ranks over all n! relabelings.  Two hypergraphs are
isomorphic iff their canonical forms are equal.  The least sequence has the
prefix property (dropping its largest rank leaves the least sequence of the
remaining edge set's class), which the orderly complement generation in the
search module relies on.

The minimum is found by assigning new labels 0, 1, ... one original vertex
at a time.  Edges fully inside the first k labels rank below C(k, 3) and
every later edge ranks at least C(k, 3), so the sorted rank sequence grows
by append-only chunks; partial sequences are compared against the best
complete sequence found so far and losing branches are cut.  Candidates at
each level are ordered by their incremental chunk, which lands on a
near-minimal leaf immediately and makes the pruning effective.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb

from .errors import CapabilityError, ParameterError
from .hypergraph import Hypergraph, triple_rank

CANONICAL_CAP = 12

_SENTINEL = comb(CANONICAL_CAP + 1, 3) + 1


@dataclass(frozen=True, slots=True, order=True)
class CanonicalForm:
    """Isomorphism-class fingerprint: vertex count plus least rank sequence."""

    n: int
    ranks: tuple[int, ...]

    def to_hypergraph(self) -> Hypergraph:
        bits = 0
        for r in self.ranks:
            bits |= 1 << r
        return Hypergraph(self.n, bits)


def relabel(h: Hypergraph, perm) -> Hypergraph:
    """Apply the relabeling v -> perm[v] to every edge."""
    perm = tuple(perm)
    if sorted(perm) != list(range(h.n)):
        raise ParameterError(f"perm must be a permutation of range({h.n})")
    bits = 0
    for a, b, c in h.edges():
        x, y, z = sorted((perm[a], perm[b], perm[c]))
        bits |= 1 << triple_rank(x, y, z)
    return Hypergraph(h.n, bits)


@lru_cache(maxsize=65536)
def _canonicalize(n: int, bits: int) -> tuple[tuple[int, ...], int]:
    """(least rank sequence, number of relabelings attaining it = |Aut|)."""
    h = Hypergraph(n, bits)
    e = h.edge_count
    if e == 0 or e == comb(n, 3):
        # Fully symmetric: every relabeling gives the same edge set.
        ranks = tuple(r for r in range(comb(n, 3)) if bits >> r & 1)
        aut = 1
        for k in range(2, n + 1):
            aut *= k
        return ranks, aut

    has = h.has_edge
    best: list[int] | None = None
    aut = 0
    assigned: list[int] = []
    prefix: list[int] = []

    def chunk_for(u: int) -> list[int]:
        # Ranks of new edges created by giving u the next label k = len(assigned);
        # emitted in increasing rank order.
        k = len(assigned)
        base_k = k * (k - 1) * (k - 2) // 6
        out = []
        for j in range(1, k):
            aj = assigned[j]
            base = base_k + j * (j - 1) // 2
            for i in range(j):
                if has(assigned[i], aj, u):
                    out.append(base + i)
        return out

    def descend(remaining: list[int]) -> None:
        nonlocal best, aut
        m = len(prefix)
        tied = False
        if best is not None:
            # best can change anywhere below, so compare fresh at every node.
            tied = True
            for i in range(m):
                if prefix[i] != best[i]:
                    if prefix[i] > best[i]:
                        return
                    tied = False
                    break
            if tied and m < e:
                # best places its next edge inside the first k labels; this
                # branch cannot, so every completion here compares greater.
                k = len(assigned)
                if best[m] < k * (k - 1) * (k - 2) // 6:
                    return
        if not remaining:
            if tied:
                aut += 1
            else:
                best = prefix.copy()
                aut = 1
            return
        options = []
        for u in remaining:
            ch = chunk_for(u)
            options.append((tuple(ch) + (_SENTINEL,), ch, u))
        options.sort()
        for _, ch, u in options:
            assigned.append(u)
            prefix.extend(ch)
            descend([v for v in remaining if v != u])
            del prefix[len(prefix) - len(ch):]
            assigned.pop()

    descend(list(range(n)))
    assert best is not None and len(best) == e
    return tuple(best), aut


def canonical_form(h: Hypergraph) -> CanonicalForm:
    """Least edge encoding over all relabelings; capability-capped at 12 vertices."""
    if h.n > CANONICAL_CAP:
        raise CapabilityError(
            f"canonical form is capped at {CANONICAL_CAP} vertices, got {h.n}"
        )
    ranks, _ = _canonicalize(h.n, h.bits)
    return CanonicalForm(h.n, ranks)


def automorphism_count(h: Hypergraph) -> int:
    """Number of relabelings fixing the edge set (the automorphism group order)."""
    if h.n > CANONICAL_CAP:
        raise CapabilityError(
            f"automorphism counting is capped at {CANONICAL_CAP} vertices, got {h.n}"
        )
    _, aut = _canonicalize(h.n, h.bits)
    return aut


def is_canonical(h: Hypergraph) -> bool:
    """True iff h's own edge ranks already form the least sequence of its class."""
    own = tuple(r for r in range(comb(h.n, 3)) if h.bits >> r & 1)
    return canonical_form(h).ranks == own
