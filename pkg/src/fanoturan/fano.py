"""Fano plane containment by three independent detection methods.

The methods share nothing beyond edge-membership lookups, so they
cross-validate each other:

* ``embedding``       - injective point map built line by line with forward
                        checking; returns the point images.
* ``crossing_pairs``  - an edge {x, y, z} plus four outside vertices whose
                        three perfect matchings are covered bijectively by
                        the links of x, y, z.
* ``pasch_matching``  - a vertex v, three disjoint edges of its link, and
                        one full parity class of transversal triples (a
                        Pasch configuration) present as edges.

Each detector returns a witness object exposing ``fano_edges()``, the seven
edges of the found copy, so soundness is checkable edge by edge.

For enumeration hot loops there is also a containment test based on
precomputed plane images: a hypergraph is Fano-free iff its complement
intersects every image of the plane.  It is capped at 12 vertices (image
tables) and is re-verified against the embedding method on survivors.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from itertools import combinations, permutations
from math import comb

from .errors import CapabilityError, ParameterError
from .hypergraph import FANO_LINES, Hypergraph, triple_rank

IMAGE_CAP = 12


@lru_cache(maxsize=None)
def _images_base7() -> tuple[int, ...]:
    """Edge bitmasks of the 30 distinct plane copies on 7 labeled vertices."""
    seen = set()
    for s in permutations(range(7)):
        m = 0
        for a, b, c in FANO_LINES:
            x, y, z = sorted((s[a], s[b], s[c]))
            m |= 1 << triple_rank(x, y, z)
        seen.add(m)
    return tuple(sorted(seen))


@lru_cache(maxsize=None)
def fano_images(n: int) -> tuple[int, ...]:
    """Edge bitmasks of every distinct plane copy on n labeled vertices."""
    if n < 7:
        return ()
    if n > IMAGE_CAP:
        raise CapabilityError(f"plane image tables are capped at {IMAGE_CAP} vertices, got {n}")
    base = _images_base7()
    seen = set()
    for sub in combinations(range(n), 7):
        for mask7 in base:
            m7, m = mask7, 0
            while m7:
                low = m7 & -m7
                r = low.bit_length() - 1
                a, b, c = _TRIPLES7[r]
                m |= 1 << triple_rank(sub[a], sub[b], sub[c])
                m7 ^= low
            seen.add(m)
    return tuple(sorted(seen))


_TRIPLES7 = tuple((a, b, c) for c in range(2, 7) for b in range(1, c) for a in range(b))


@lru_cache(maxsize=None)
def triple_cover_masks(n: int) -> tuple[int, ...]:
    """For each triple rank, the bitmask of plane images containing it."""
    images = fano_images(n)
    masks = [0] * comb(n, 3)
    for i, im in enumerate(images):
        m = im
        while m:
            low = m & -m
            masks[low.bit_length() - 1] |= 1 << i
            m ^= low
    return tuple(masks)


def contains_fano_cover(h: Hypergraph) -> bool:
    """Image-table containment test: some plane copy is a subset of the edges.

    Equivalent formulation used by the enumeration engines: the hypergraph is
    Fano-free iff its complement hits every plane image.
    """
    if h.n < 7:
        return False
    full = (1 << len(fano_images(h.n))) - 1
    masks = triple_cover_masks(h.n)
    comp_cover = 0
    nonedges = ~h.bits
    for r in range(comb(h.n, 3)):
        if nonedges >> r & 1:
            comp_cover |= masks[r]
            if comp_cover == full:
                return False
    return True


# ---------------------------------------------------------------------------
# Cliques.
# ---------------------------------------------------------------------------

def find_clique(h: Hypergraph, k: int) -> tuple[int, ...] | None:
    """First k-subset (lex order) all of whose triples are edges, or None."""
    if k not in (4, 5, 6):
        raise ParameterError(f"supported clique orders are 4, 5, 6; got {k}")
    if h.n < k:
        return None
    for sub in combinations(range(h.n), k):
        if all(h.bits >> triple_rank(a, b, c) & 1 for a, b, c in combinations(sub, 3)):
            return sub
    return None


def contains_clique(h: Hypergraph, k: int) -> bool:
    return find_clique(h, k) is not None


# ---------------------------------------------------------------------------
# Method 1: direct embedding.
# ---------------------------------------------------------------------------

def _link_pairs(h: Hypergraph) -> list[list[tuple[int, int]]]:
    out: list[list[tuple[int, int]]] = [[] for _ in range(h.n)]
    for a, b, c in h.edges():
        out[a].append((b, c))
        out[b].append((a, c))
        out[c].append((a, b))
    return out


def find_fano_embedding(h: Hypergraph) -> tuple[int, ...] | None:
    """Point images (img[0..6]) of an embedded plane copy, or None.

    Lines are placed in the fixed order 012, 234, 045, 036; the remaining
    lines 135, 256, 146 become pure membership checks, applied as early as
    their points are available (forward checking).
    """
    if h.n < 7 or h.edge_count < 7:
        return None
    has = h.has_edge
    links = _link_pairs(h)
    thirds: dict[tuple[int, int], list[int]] = {}
    for a, b, c in h.edges():
        thirds.setdefault((a, b), []).append(c)
        thirds.setdefault((a, c), []).append(b)
        thirds.setdefault((b, c), []).append(a)

    def key(u: int, w: int) -> tuple[int, int]:
        return (u, w) if u < w else (w, u)

    for a, b, c in h.edges():
        for i0, i1, i2 in permutations((a, b, c)):
            for x, y in links[i2]:
                if x in (i0, i1) or y in (i0, i1):
                    continue
                for i3, i4 in ((x, y), (y, x)):
                    for i5 in thirds.get(key(i0, i4), ()):
                        if i5 in (i0, i1, i2, i3, i4):
                            continue
                        if not has(i1, i3, i5):
                            continue
                        for i6 in thirds.get(key(i0, i3), ()):
                            if i6 in (i0, i1, i2, i3, i4, i5):
                                continue
                            if has(i2, i5, i6) and has(i1, i4, i6):
                                return (i0, i1, i2, i3, i4, i5, i6)
    return None


def contains_fano_embedding(h: Hypergraph) -> bool:
    return find_fano_embedding(h) is not None


def embedding_edges(images: tuple[int, ...]) -> tuple[tuple[int, int, int], ...]:
    """The seven edges of the plane copy described by point images."""
    return tuple(
        tuple(sorted((images[a], images[b], images[c]))) for a, b, c in FANO_LINES
    )


# ---------------------------------------------------------------------------
# Method 2: crossing pairs.
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CrossingFanoWitness:
    """Edge (x, y, z), outside quad, and which matching each link covers."""

    edge: tuple[int, int, int]
    quad: tuple[int, int, int, int]
    assignment: tuple[int, int, int]  # matching index covered by x, y, z

    def fano_edges(self) -> tuple[tuple[int, int, int], ...]:
        p, q, r, s = self.quad
        matchings = (((p, q), (r, s)), ((p, r), (q, s)), ((p, s), (q, r)))
        out = [self.edge]
        for v, mi in zip(self.edge, self.assignment):
            for u, w in matchings[mi]:
                out.append(tuple(sorted((v, u, w))))
        return tuple(out)


def find_fano_crossing(h: Hypergraph) -> CrossingFanoWitness | None:
    """First (edge, quad, bijection) in canonical scan order, or None."""
    if h.n < 7:
        return None
    has = h.has_edge
    for edge in h.edges():
        x, y, z = edge
        others = [v for v in range(h.n) if v not in edge]
        for quad in combinations(others, 4):
            p, q, r, s = quad
            matchings = (((p, q), (r, s)), ((p, r), (q, s)), ((p, s), (q, r)))
            cov = [
                [all(has(v, u, w) for u, w in m) for m in matchings]
                for v in (x, y, z)
            ]
            for pi in ((0, 1, 2), (0, 2, 1), (1, 0, 2), (1, 2, 0), (2, 0, 1), (2, 1, 0)):
                if cov[0][pi[0]] and cov[1][pi[1]] and cov[2][pi[2]]:
                    return CrossingFanoWitness(edge, quad, pi)
    return None


def contains_fano_crossing(h: Hypergraph) -> bool:
    return find_fano_crossing(h) is not None


# ---------------------------------------------------------------------------
# Method 3: Pasch configurations over a link matching.
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class PaschFanoWitness:
    """Vertex v, three disjoint link edges, and the realized parity class."""

    vertex: int
    matching: tuple[tuple[int, int], tuple[int, int], tuple[int, int]]
    parity: int  # 0: even transversals, 1: odd transversals

    def fano_edges(self) -> tuple[tuple[int, int, int], ...]:
        (a1, a2), (b1, b2), (c1, c2) = self.matching
        out = [tuple(sorted((self.vertex, u, w))) for u, w in self.matching]
        if self.parity == 0:
            quads = ((a1, b1, c1), (a1, b2, c2), (a2, b1, c2), (a2, b2, c1))
        else:
            quads = ((a2, b2, c2), (a2, b1, c1), (a1, b2, c1), (a1, b1, c2))
        out.extend(tuple(sorted(t)) for t in quads)
        return tuple(out)


def find_fano_pasch(h: Hypergraph) -> PaschFanoWitness | None:
    """First (vertex, link matching, parity class) in canonical order, or None.

    With the matching written (a1 a2, b1 b2, c1 c2), the even class is the
    four transversals picking an even number of second elements and the odd
    class its complement; either class plus the three link edges through v
    closes a plane copy.
    """
    if h.n < 7:
        return None
    has = h.has_edge
    links = _link_pairs(h)
    for v in range(h.n):
        pairs = links[v]
        ln = len(pairs)
        if ln < 3:
            continue
        for i in range(ln):
            a1, a2 = pairs[i]
            for j in range(i + 1, ln):
                b1, b2 = pairs[j]
                if b1 in (a1, a2) or b2 in (a1, a2):
                    continue
                for k in range(j + 1, ln):
                    c1, c2 = pairs[k]
                    if c1 in (a1, a2, b1, b2) or c2 in (a1, a2, b1, b2):
                        continue
                    if (
                        has(a1, b1, c1) and has(a1, b2, c2)
                        and has(a2, b1, c2) and has(a2, b2, c1)
                    ):
                        return PaschFanoWitness(v, ((a1, a2), (b1, b2), (c1, c2)), 0)
                    if (
                        has(a2, b2, c2) and has(a2, b1, c1)
                        and has(a1, b2, c1) and has(a1, b1, c2)
                    ):
                        return PaschFanoWitness(v, ((a1, a2), (b1, b2), (c1, c2)), 1)
    return None


def contains_fano_pasch(h: Hypergraph) -> bool:
    return find_fano_pasch(h) is not None


# ---------------------------------------------------------------------------
# Dispatch.
# ---------------------------------------------------------------------------

class DetectionMethod(Enum):
    EMBEDDING = "embedding"
    CROSSING_PAIRS = "crossing_pairs"
    PASCH_MATCHING = "pasch_matching"


def contains_fano(h: Hypergraph, method: DetectionMethod = DetectionMethod.EMBEDDING) -> bool:
    if method is DetectionMethod.EMBEDDING:
        return contains_fano_embedding(h)
    if method is DetectionMethod.CROSSING_PAIRS:
        return contains_fano_crossing(h)
    if method is DetectionMethod.PASCH_MATCHING:
        return contains_fano_pasch(h)
    raise ParameterError(f"unknown detection method {method!r}")
