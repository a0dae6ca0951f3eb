"""Core types for 3-uniform hypergraphs on at most 64 vertices.

Encoding convention
-------------------
Vertices are ``0 .. n-1``.  A triple ``{a, b, c}`` with ``a < b < c`` is
identified by its colexicographic rank

    rank(a, b, c) = C(c, 3) + C(b, 2) + a

and an edge set is a dense bitmask (a Python int) with bit ``rank`` set for
each edge.  Colex ranks are independent of the ambient vertex count, so
growing ``n`` never renumbers existing triples.  Graphs (used for links and
multigraph layers) use the analogous pair rank ``C(b, 2) + a``.

All values are immutable; operations return new objects.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations
from math import comb

from .errors import CapabilityError, FormatError, ParameterError

MAX_VERTICES = 64

# Colex-ordered lookup tables, built once for the n = 64 cap.
TRIPLES: tuple[tuple[int, int, int], ...] = tuple(
    (a, b, c) for c in range(2, MAX_VERTICES) for b in range(1, c) for a in range(b)
)
PAIRS: tuple[tuple[int, int], ...] = tuple(
    (a, b) for b in range(1, MAX_VERTICES) for a in range(b)
)


def triple_rank(a: int, b: int, c: int) -> int:
    """Colex rank of the triple {a, b, c}; requires a < b < c."""
    return c * (c - 1) * (c - 2) // 6 + b * (b - 1) // 2 + a


def pair_rank(a: int, b: int) -> int:
    """Colex rank of the pair {a, b}; requires a < b."""
    return b * (b - 1) // 2 + a


def _check_n(n: int) -> None:
    if not isinstance(n, int) or n < 1:
        raise ParameterError(f"vertex count must be a positive integer, got {n!r}")
    if n > MAX_VERTICES:
        raise CapabilityError(f"vertex count {n} exceeds the supported maximum {MAX_VERTICES}")


@dataclass(frozen=True, slots=True)
class Hypergraph:
    """A 3-uniform hypergraph: vertex count plus a colex-rank edge bitmask."""

    n: int
    bits: int

    def __post_init__(self) -> None:
        _check_n(self.n)
        if self.bits < 0 or self.bits >> comb(self.n, 3):
            raise ParameterError("edge bitmask references triples outside the vertex set")

    @classmethod
    def from_edges(cls, n: int, edges) -> "Hypergraph":
        bits = 0
        for e in edges:
            a, b, c = sorted(e)
            if not (0 <= a < b < c < n):
                raise ParameterError(f"edge {tuple(e)} is not a triple of distinct vertices below {n}")
            bits |= 1 << triple_rank(a, b, c)
        return cls(n, bits)

    @property
    def edge_count(self) -> int:
        return self.bits.bit_count()

    def edges(self) -> tuple[tuple[int, int, int], ...]:
        """All edges as sorted triples, in colex order."""
        out = []
        m = self.bits
        while m:
            low = m & -m
            out.append(TRIPLES[low.bit_length() - 1])
            m ^= low
        return tuple(out)

    def has_edge(self, a: int, b: int, c: int) -> bool:
        a, b, c = sorted((a, b, c))
        return bool(self.bits >> triple_rank(a, b, c) & 1)

    def with_edge(self, a: int, b: int, c: int) -> "Hypergraph":
        a, b, c = sorted((a, b, c))
        if not (0 <= a < b < c < self.n):
            raise ParameterError(f"{(a, b, c)} is not a triple of distinct vertices below {self.n}")
        return Hypergraph(self.n, self.bits | 1 << triple_rank(a, b, c))


@dataclass(frozen=True, slots=True)
class Graph:
    """A simple graph: vertex count plus a colex-rank pair bitmask."""

    n: int
    bits: int

    def __post_init__(self) -> None:
        _check_n(self.n)
        if self.bits < 0 or self.bits >> comb(self.n, 2):
            raise ParameterError("pair bitmask references pairs outside the vertex set")

    @classmethod
    def from_edges(cls, n: int, edges) -> "Graph":
        bits = 0
        for e in edges:
            a, b = sorted(e)
            if not (0 <= a < b < n):
                raise ParameterError(f"edge {tuple(e)} is not a pair of distinct vertices below {n}")
            bits |= 1 << pair_rank(a, b)
        return cls(n, bits)

    @property
    def edge_count(self) -> int:
        return self.bits.bit_count()

    def edges(self) -> tuple[tuple[int, int], ...]:
        out = []
        m = self.bits
        while m:
            low = m & -m
            out.append(PAIRS[low.bit_length() - 1])
            m ^= low
        return tuple(out)

    def has_edge(self, a: int, b: int) -> bool:
        if a > b:
            a, b = b, a
        return bool(self.bits >> pair_rank(a, b) & 1)

    def degrees(self) -> list[int]:
        deg = [0] * self.n
        for a, b in self.edges():
            deg[a] += 1
            deg[b] += 1
        return deg


def b_formula(n: int) -> int:
    """Edge count of the balanced bipartite hypergraph on n >= 2 vertices.

    Computed as ((n - 2) / 2) * floor(n^2 / 4), which is always an integer;
    the binomial form C(n,3) - C(floor(n/2),3) - C(ceil(n/2),3) is asserted
    equal in the test suite.
    """
    if not isinstance(n, int) or n < 2:
        raise ParameterError(f"b(n) requires an integer n >= 2, got {n!r}")
    return (n - 2) * (n * n // 4) // 2


def _bipartite_bits(n: int, in_x: list[bool]) -> int:
    """Bitmask of all triples meeting both classes of the given 2-coloring."""
    bits = 0
    for r in range(comb(n, 3)):
        a, b, c = TRIPLES[r]
        s = in_x[a] + in_x[b] + in_x[c]
        if 0 < s < 3:
            bits |= 1 << r
    return bits


FANO_LINES: tuple[tuple[int, int, int], ...] = (
    (0, 1, 2), (2, 3, 4), (0, 4, 5), (0, 3, 6), (2, 5, 6), (1, 4, 6), (1, 3, 5),
)

PASCH_QUADS: tuple[tuple[int, int, int], ...] = ((0, 2, 4), (0, 3, 5), (1, 2, 5), (1, 3, 4))


def construct(kind: str, n: int) -> Hypergraph:
    """Build a named family member.

    Kinds: ``complete`` (all triples), ``balanced_bipartite`` (classes of
    size floor(n/2) and ceil(n/2), every triple meeting both), ``j7`` (all
    triples on 7 vertices except the five through the pair {0, 1}), ``fano``
    (the 7-point projective plane), ``pasch`` (the 4-line Pasch configuration
    on 6 vertices).
    """
    _check_n(n)
    if kind == "complete":
        return Hypergraph(n, (1 << comb(n, 3)) - 1)
    if kind == "balanced_bipartite":
        if n < 2:
            raise ParameterError("balanced_bipartite requires n >= 2")
        in_x = [v < n // 2 for v in range(n)]
        return Hypergraph(n, _bipartite_bits(n, in_x))
    if kind == "j7":
        if n != 7:
            raise ParameterError("j7 is only defined on 7 vertices")
        bits = (1 << comb(7, 3)) - 1
        for c in range(2, 7):
            bits &= ~(1 << triple_rank(0, 1, c))
        return Hypergraph(7, bits)
    if kind == "fano":
        if n != 7:
            raise ParameterError("fano is only defined on 7 vertices")
        return Hypergraph.from_edges(7, FANO_LINES)
    if kind == "pasch":
        if n != 6:
            raise ParameterError("pasch is only defined on 6 vertices")
        return Hypergraph.from_edges(6, PASCH_QUADS)
    raise ParameterError(
        f"unknown family {kind!r}; expected one of complete, balanced_bipartite, j7, fano, pasch"
    )


def complement(h: Hypergraph) -> Hypergraph:
    return Hypergraph(h.n, h.bits ^ ((1 << comb(h.n, 3)) - 1))


def link_graph(h: Hypergraph, v: int) -> Graph:
    """Graph on the same vertex set: u ~ w iff {u, v, w} is an edge."""
    if not 0 <= v < h.n:
        raise ParameterError(f"vertex {v} outside range(0, {h.n})")
    bits = 0
    for r in range(comb(h.n, 3)):
        if h.bits >> r & 1:
            t = TRIPLES[r]
            if v in t:
                u, w = (x for x in t if x != v)
                bits |= 1 << pair_rank(u, w)
    return Graph(h.n, bits)


def edge_split_counts(h: Hypergraph, k) -> tuple[int, int, int, int]:
    """(e0, e1, e2, e3): edges with exactly i endpoints inside the set k."""
    ks = set(k)
    if not all(isinstance(v, int) and 0 <= v < h.n for v in ks):
        raise ParameterError("k must be a set of vertices of the hypergraph")
    out = [0, 0, 0, 0]
    for a, b, c in h.edges():
        out[(a in ks) + (b in ks) + (c in ks)] += 1
    return tuple(out)


def degree_in_set(h: Hypergraph, v: int, k) -> int:
    """Number of edges through v whose other two endpoints both lie in k."""
    ks = set(k)
    if not 0 <= v < h.n:
        raise ParameterError(f"vertex {v} outside range(0, {h.n})")
    if v in ks:
        raise ParameterError(f"vertex {v} must not belong to the query set")
    if not all(isinstance(u, int) and 0 <= u < h.n for u in ks):
        raise ParameterError("k must be a set of vertices of the hypergraph")
    return sum(1 for a, b in combinations(sorted(ks), 2) if h.has_edge(a, b, v))


def recognize_balanced_bipartite(h: Hypergraph) -> tuple[tuple[int, ...], tuple[int, ...]] | None:
    """Partition (X, Y) with |X| <= |Y| exhibiting h as balanced bipartite, or None.

    The partition, when it exists, is forced by the complement: non-edges are
    exactly the triples inside one class, so complement co-occurrence
    components recover the classes (classes of size < 3 contribute nothing
    and are filled from the leftover vertices).
    """
    n = h.n
    if n < 2 or h.edge_count != b_formula(n):
        return None
    small, large = n // 2, (n + 1) // 2

    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    comp = complement(h)
    touched = [False] * n
    for a, b, c in comp.edges():
        touched[a] = touched[b] = touched[c] = True
        parent[find(b)] = find(a)
        parent[find(c)] = find(a)
    groups: dict[int, list[int]] = {}
    for v in range(n):
        if touched[v]:
            groups.setdefault(find(v), []).append(v)
    free = [v for v in range(n) if not touched[v]]
    gs = sorted(groups.values(), key=len)

    if len(gs) == 0:
        x_side = list(range(small))
    elif len(gs) == 1:
        if len(gs[0]) == large and len(free) == small:
            x_side = free
        elif len(gs[0]) == small and len(free) == large:
            x_side = gs[0]
        else:
            return None
    elif len(gs) == 2:
        if free or sorted(map(len, gs)) != sorted((small, large)):
            return None
        x_side = gs[0] if len(gs[0]) < len(gs[1]) else min(gs, key=min)
    else:
        return None

    in_x = [False] * n
    for v in x_side:
        in_x[v] = True
    if _bipartite_bits(n, in_x) != h.bits:
        return None
    y_side = [v for v in range(n) if not in_x[v]]
    return tuple(sorted(x_side)), tuple(sorted(y_side))


def random_hypergraph(n: int, density: float, rng: random.Random) -> Hypergraph:
    """Each triple is an edge independently with the given probability."""
    _check_n(n)
    if not 0.0 <= density <= 1.0:
        raise ParameterError(f"density must lie in [0, 1], got {density!r}")
    bits = 0
    for r in range(comb(n, 3)):
        if rng.random() < density:
            bits |= 1 << r
    return Hypergraph(n, bits)


# ---------------------------------------------------------------------------
# File formats.  Text: first line "n m", then m lines "a b c" (each triple
# ascending, lines in colex order).  JSON mirror: {"n": ..., "edges": [...]}
# with identical ordering.  Both round-trip bit-exactly.
# ---------------------------------------------------------------------------

def format_text(h: Hypergraph) -> str:
    lines = [f"{h.n} {h.edge_count}"]
    lines.extend(f"{a} {b} {c}" for a, b, c in h.edges())
    return "\n".join(lines) + "\n"


def parse_text(text: str) -> Hypergraph:
    rows = [ln for ln in text.splitlines() if ln.strip()]
    if not rows:
        raise FormatError("empty hypergraph file")
    head = rows[0].split()
    if len(head) != 2:
        raise FormatError(f"header must be 'n m', got {rows[0]!r}")
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError as exc:
        raise FormatError(f"header must be two integers, got {rows[0]!r}") from exc
    if len(rows) - 1 != m:
        raise FormatError(f"header promises {m} edges but file has {len(rows) - 1}")
    _check_n(n)
    bits = 0
    prev = -1
    for ln in rows[1:]:
        parts = ln.split()
        if len(parts) != 3:
            raise FormatError(f"edge line must have three vertices, got {ln!r}")
        try:
            a, b, c = (int(p) for p in parts)
        except ValueError as exc:
            raise FormatError(f"edge line must be integers, got {ln!r}") from exc
        if not 0 <= a < b < c < n:
            raise FormatError(f"edge {ln!r} is not an ascending triple below {n}")
        r = triple_rank(a, b, c)
        if r <= prev:
            raise FormatError("edges must be distinct and sorted colexicographically")
        prev = r
        bits |= 1 << r
    return Hypergraph(n, bits)


def to_json_dict(h: Hypergraph) -> dict:
    return {"n": h.n, "edges": [list(e) for e in h.edges()]}


def from_json_dict(obj) -> Hypergraph:
    if not isinstance(obj, dict) or set(obj) != {"n", "edges"}:
        raise FormatError('hypergraph JSON must be an object with keys "n" and "edges"')
    n = obj["n"]
    if not isinstance(n, int):
        raise FormatError("n must be an integer")
    _check_n(n)
    bits = 0
    prev = -1
    for e in obj["edges"]:
        if not (isinstance(e, list) and len(e) == 3 and all(isinstance(v, int) for v in e)):
            raise FormatError(f"edge {e!r} must be a list of three integers")
        a, b, c = e
        if not 0 <= a < b < c < n:
            raise FormatError(f"edge {e!r} is not an ascending triple below {n}")
        r = triple_rank(a, b, c)
        if r <= prev:
            raise FormatError("edges must be distinct and sorted colexicographically")
        prev = r
        bits |= 1 << r
    return Hypergraph(n, bits)
