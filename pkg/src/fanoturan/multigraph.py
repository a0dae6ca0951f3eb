"""Multigraphs with p edge layers and three-crossing-pair analysis.

A PMultigraph stores, for every vertex pair in colex order, the bitmask of
layers containing that pair (bit l-1 for layer l).  The central pattern is a
4-vertex set {w, x, y, z} whose three perfect matchings are realized in three
distinct layers: wx, yz in layer i; wy, xz in layer j; wz, xy in layer k with
i, j, k pairwise distinct.  Multigraphs avoiding the pattern have a bounded
edge total; this module computes the exact bound for small parameters by a
two-phase branch and bound, provides the matching lower-bound constructions,
and exhaustively verifies the structural facts about crossing-free 4-vertex
5-multigraphs used downstream.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from math import comb

from .certificate import FAIL, PASS, Certificate, Stopwatch
from .errors import CapabilityError, FormatError, ParameterError, VerificationError
from .hypergraph import b_formula, pair_rank

MAX_LAYERS = 16


@dataclass(frozen=True, slots=True)
class PMultigraph:
    """n vertices, p layers, per-pair layer membership masks in colex order."""

    p: int
    n: int
    memb: tuple[int, ...]

    def __post_init__(self) -> None:
        if not 1 <= self.p <= MAX_LAYERS:
            raise ParameterError(f"layer count must be in [1, {MAX_LAYERS}], got {self.p}")
        if not 1 <= self.n <= 64:
            raise ParameterError(f"vertex count must be in [1, 64], got {self.n}")
        if len(self.memb) != comb(self.n, 2):
            raise ParameterError(
                f"expected {comb(self.n, 2)} pair masks for n={self.n}, got {len(self.memb)}"
            )
        full = (1 << self.p) - 1
        for m in self.memb:
            if m & ~full:
                raise ParameterError(f"pair mask {m:#x} has bits outside the {self.p} layers")

    @classmethod
    def empty(cls, p: int, n: int) -> "PMultigraph":
        return cls(p, n, (0,) * comb(n, 2))

    @classmethod
    def complete(cls, p: int, n: int) -> "PMultigraph":
        return cls(p, n, ((1 << p) - 1,) * comb(n, 2))

    def multiplicity(self, u: int, v: int) -> int:
        return self.memb[pair_rank(*sorted((u, v)))].bit_count()

    def layers(self, u: int, v: int) -> tuple[int, ...]:
        m = self.memb[pair_rank(*sorted((u, v)))]
        return tuple(l + 1 for l in range(self.p) if m >> l & 1)

    def edge_total(self) -> int:
        return sum(m.bit_count() for m in self.memb)

    def layer_pairs(self, layer: int) -> tuple[tuple[int, int], ...]:
        """Pairs present in one layer (1-indexed), lex sorted."""
        if not 1 <= layer <= self.p:
            raise ParameterError(f"layer must be in [1, {self.p}], got {layer}")
        bit = 1 << (layer - 1)
        out = [
            (u, v)
            for u in range(self.n)
            for v in range(u + 1, self.n)
            if self.memb[pair_rank(u, v)] & bit
        ]
        return tuple(out)

    def to_json_dict(self) -> dict:
        pairs = []
        for u in range(self.n):
            for v in range(u + 1, self.n):
                m = self.memb[pair_rank(u, v)]
                if m:
                    pairs.append(
                        {"u": u, "v": v, "layers": [l + 1 for l in range(self.p) if m >> l & 1]}
                    )
        return {"p": self.p, "n": self.n, "pairs": pairs}

    @classmethod
    def from_json_dict(cls, d: dict) -> "PMultigraph":
        if not isinstance(d, dict) or set(d) != {"p", "n", "pairs"}:
            raise FormatError('multigraph object must have exactly the keys "p", "n", "pairs"')
        p, n, pairs = d["p"], d["n"], d["pairs"]
        if not (isinstance(p, int) and isinstance(n, int) and isinstance(pairs, list)):
            raise FormatError("multigraph fields have wrong types")
        memb = [0] * comb(n, 2)
        prev = None
        for item in pairs:
            if not isinstance(item, dict) or set(item) != {"u", "v", "layers"}:
                raise FormatError('pair objects must have exactly the keys "u", "v", "layers"')
            u, v, layers = item["u"], item["v"], item["layers"]
            if not (isinstance(u, int) and isinstance(v, int) and 0 <= u < v < n):
                raise FormatError(f"bad pair ({u}, {v}) for n={n}")
            if prev is not None and (u, v) <= prev:
                raise FormatError("pairs must be strictly increasing in lex order")
            prev = (u, v)
            if not layers or layers != sorted(set(layers)):
                raise FormatError(f"layers of pair ({u}, {v}) must be a nonempty ascending list")
            m = 0
            for l in layers:
                if not (isinstance(l, int) and 1 <= l <= p):
                    raise FormatError(f"layer {l} out of range [1, {p}]")
                m |= 1 << (l - 1)
            memb[pair_rank(u, v)] = m
        return cls(p, n, tuple(memb))


def e_induced(g: PMultigraph, vertices) -> int:
    """Layer edges with both endpoints inside the given vertex set."""
    vs = sorted(set(vertices))
    for v in vs:
        if not 0 <= v < g.n:
            raise ParameterError(f"vertex {v} out of range for n={g.n}")
    return sum(g.memb[pair_rank(u, v)].bit_count() for u, v in combinations(vs, 2))


def e_plus(g: PMultigraph, x) -> int:
    """Layer edges with at least one endpoint in the vertex set x."""
    xs = set(x)
    rest = [v for v in range(g.n) if v not in xs]
    return g.edge_total() - e_induced(g, rest)


# ---------------------------------------------------------------------------
# Crossing pairs.
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CrossingWitness:
    """Quad w<x<y<z and distinct layers (i, j, k) realizing its matchings.

    Layer i contains wx and yz, layer j contains wy and xz, layer k contains
    wz and xy; layers are 1-indexed.
    """

    quad: tuple[int, int, int, int]
    layers: tuple[int, int, int]

    def holds_in(self, g: PMultigraph) -> bool:
        w, x, y, z = self.quad
        i, j, k = self.layers
        if len({i, j, k}) != 3:
            return False
        bi, bj, bk = 1 << (i - 1), 1 << (j - 1), 1 << (k - 1)
        m = g.memb
        return bool(
            m[pair_rank(w, x)] & bi and m[pair_rank(y, z)] & bi
            and m[pair_rank(w, y)] & bj and m[pair_rank(x, z)] & bj
            and m[pair_rank(w, z)] & bk and m[pair_rank(x, y)] & bk
        )


def _sdr3(ia: int, ib: int, ic: int) -> bool:
    """Distinct representatives for three bitmask sets (Hall's condition)."""
    if not (ia and ib and ic):
        return False
    if (ia | ib).bit_count() < 2 or (ia | ic).bit_count() < 2 or (ib | ic).bit_count() < 2:
        return False
    return (ia | ib | ic).bit_count() >= 3


@lru_cache(maxsize=None)
def _sdr_table(p: int) -> tuple:
    size = 1 << p
    return tuple(
        tuple(tuple(_sdr3(a, b, c) for c in range(size)) for b in range(size))
        for a in range(size)
    )


def _pick_distinct(ia: int, ib: int, ic: int) -> tuple[int, int, int]:
    """One concrete distinct triple (1-indexed layers) from mask sets."""
    for i in range(ia.bit_length()):
        if not ia >> i & 1:
            continue
        for j in range(ib.bit_length()):
            if j == i or not ib >> j & 1:
                continue
            for k in range(ic.bit_length()):
                if k not in (i, j) and ic >> k & 1:
                    return (i + 1, j + 1, k + 1)
    raise AssertionError("no distinct representatives despite Hall check")


def has_three_crossing_pairs(g: PMultigraph) -> CrossingWitness | None:
    """First crossing quad in lex scan order, or None."""
    if g.p < 3 or g.n < 4:
        return None
    m = g.memb
    for quad in combinations(range(g.n), 4):
        w, x, y, z = quad
        ia = m[pair_rank(w, x)] & m[pair_rank(y, z)]
        ib = m[pair_rank(w, y)] & m[pair_rank(x, z)]
        ic = m[pair_rank(w, z)] & m[pair_rank(x, y)]
        if _sdr3(ia, ib, ic):
            return CrossingWitness(quad, _pick_distinct(ia, ib, ic))
    return None


# ---------------------------------------------------------------------------
# Formulas and constructions.
# ---------------------------------------------------------------------------

def f4_formula(n: int) -> int:
    """2 C(n,2) + 2 floor(n^2/4): the 4-layer crossing-free maximum."""
    if n < 1:
        raise ParameterError(f"need n >= 1, got {n}")
    return 2 * comb(n, 2) + 2 * (n * n // 4)


def extremal_4multigraph(n: int) -> PMultigraph:
    """Layers 1,2 cover one side plus crossing pairs, layers 3,4 the other.

    Split X = first floor(n/2) vertices, Y the rest; a pair inside X lies in
    layers {1,2}, inside Y in {3,4}, and a crossing pair in all four layers.
    Total is exactly f4_formula(n).
    """
    if n < 2:
        raise ParameterError(f"need n >= 2, got {n}")
    half = n // 2
    memb = [0] * comb(n, 2)
    for u in range(n):
        for v in range(u + 1, n):
            if v < half:
                memb[pair_rank(u, v)] = 0b0011
            elif u >= half:
                memb[pair_rank(u, v)] = 0b1100
            else:
                memb[pair_rank(u, v)] = 0b1111
    return PMultigraph(4, n, tuple(memb))


def _three_part_of(n: int) -> list[int]:
    q, r = divmod(n, 3)
    sizes = [q + 1] * r + [q] * (3 - r)
    part = []
    for i, s in enumerate(sizes):
        part.extend([i] * s)
    return part


def f5_lower_constructions(n: int) -> tuple[tuple[PMultigraph, int], tuple[PMultigraph, int]]:
    """The two 5-layer crossing-free constructions with their exact totals.

    First: all five layers equal to the complete 3-partite graph with
    near-equal parts, total 5 floor(n^2/3).  Second: the extremal 4-layer
    multigraph plus a fifth layer holding the crossing pairs, total
    f4_formula(n) + floor(n^2/4).
    """
    if n < 2:
        raise ParameterError(f"need n >= 2, got {n}")
    part = _three_part_of(n)
    memb1 = [0] * comb(n, 2)
    for u in range(n):
        for v in range(u + 1, n):
            if part[u] != part[v]:
                memb1[pair_rank(u, v)] = 0b11111
    g1 = PMultigraph(5, n, tuple(memb1))

    base = extremal_4multigraph(n)
    half = n // 2
    memb2 = list(base.memb)
    for u in range(half):
        for v in range(half, n):
            memb2[pair_rank(u, v)] |= 0b10000
    g2 = PMultigraph(5, n, tuple(memb2))
    return (g1, 5 * (n * n // 3)), (g2, f4_formula(n) + n * n // 4)


# ---------------------------------------------------------------------------
# Exact maximum by deficit-bounded branch and bound.
#
# Pairs are assigned in colex rank order; a 4-subset is tested exactly once,
# at the moment its colex-largest pair is assigned.  Layer-permutation
# symmetry is broken by forcing the first nonempty membership set to be a
# prefix {1..k} of the layers; any multigraph can be layer-permuted into that
# shape without changing totals or crossing structure.  The budget on the
# remaining deficit comes from the seeded construction total, so only states
# that could still beat the seed are expanded.
# ---------------------------------------------------------------------------

_CORE_RANKS = ((0, 5), (1, 4), (3, 2))  # matching slots among ranks 0..5


def _combo_table(p: int) -> tuple[list, list[list[int]]]:
    """Ordered (mask1, mask2) combos sorted by deficit, and masks by deficit."""
    full = (1 << p) - 1
    masks_by_deficit: list[list[int]] = [[] for _ in range(p + 1)]
    for m in range(full + 1):
        masks_by_deficit[p - m.bit_count()].append(m)
    combos = []
    for m1 in range(full + 1):
        for m2 in range(full + 1):
            d = 2 * p - m1.bit_count() - m2.bit_count()
            combos.append((d, m1, m2, m1 & m2))
    combos.sort()
    return combos, masks_by_deficit


def _quad_descriptors(n: int) -> list[list[tuple[int, int, int, int, int]]]:
    """For each pair rank t, the 4-subsets whose colex-largest pair is t.

    Descriptor (r_ab, r_ax, r_by, r_bx, r_ay) for quad a<b<x<y with largest
    pair (x, y): matching masks are then S[r_ab]&S[t], S[r_ax]&S[r_by],
    S[r_ay]&S[r_bx].
    """
    out: list[list[tuple[int, int, int, int, int]]] = [[] for _ in range(comb(n, 2))]
    for a, b, x, y in combinations(range(n), 4):
        t = pair_rank(x, y)
        out[t].append(
            (pair_rank(a, b), pair_rank(a, x), pair_rank(b, y), pair_rank(b, x), pair_rank(a, y))
        )
    return out


def max_edges_no_crossing(
    p: int,
    n: int,
    *,
    node_budget: int = 200_000_000,
    long_run: bool = False,
) -> tuple[int, PMultigraph]:
    """Exact maximum edge total of a crossing-free p-layer multigraph on n vertices.

    Seeded with the matching construction, then proves optimality by branch
    and bound over per-pair deficits.  The (5, 6) instance exceeds the default
    budget by orders of magnitude and must be requested with long_run=True.
    Raises CapabilityError carrying best_found when the node budget runs out.
    """
    if p not in (4, 5):
        raise ParameterError(f"supported layer counts are 4 and 5, got {p}")
    if not 3 <= n <= 6:
        raise ParameterError(f"supported vertex counts are 3..6, got {n}")
    if p == 5 and n == 6 and not long_run:
        raise CapabilityError(
            "the (5, 6) search needs long_run=True and a node budget in the billions",
            best_found=max(t for _, t in f5_lower_constructions(6)),
        )

    if n == 3:
        return p * 3, PMultigraph.complete(p, n)

    if p == 4:
        seed_graph, seed_total = extremal_4multigraph(n), f4_formula(n)
    else:
        (g1, t1), (g2, t2) = f5_lower_constructions(n)
        seed_graph, seed_total = (g1, t1) if t1 >= t2 else (g2, t2)
    if has_three_crossing_pairs(seed_graph) is not None:
        raise AssertionError("seed construction must be crossing-free")

    npairs = comb(n, 2)
    _, masks_by_deficit = _combo_table(p)
    quads_at = _quad_descriptors(n)
    sdr = _sdr_table(p)
    prefixes = frozenset((1 << k) - 1 for k in range(1, p + 1))

    best = seed_total
    best_graph = seed_graph
    cap = p * npairs
    S = [0] * npairs
    nodes = 0

    def extend(t: int, deficit_used: int, seen_nonempty: bool) -> None:
        nonlocal best, best_graph, nodes
        if t == npairs:
            total = cap - deficit_used
            if total > best:
                best = total
                best_graph = PMultigraph(p, n, tuple(S))
            return
        budget = cap - best - 1 - deficit_used
        if budget < 0:
            return
        checks = quads_at[t]
        for d in range(min(budget, p) + 1):
            for mask in masks_by_deficit[d]:
                if mask and not seen_nonempty and mask not in prefixes:
                    continue
                ok = True
                for r_ab, r_ax, r_by, r_bx, r_ay in checks:
                    if sdr[S[r_ab] & mask][S[r_ax] & S[r_by]][S[r_ay] & S[r_bx]]:
                        ok = False
                        break
                if ok:
                    nodes += 1
                    if nodes > node_budget:
                        raise CapabilityError(
                            f"node budget {node_budget} exhausted", best_found=best
                        )
                    S[t] = mask
                    extend(t + 1, deficit_used + d, seen_nonempty or bool(mask))
        S[t] = 0

    extend(0, 0, False)

    if has_three_crossing_pairs(best_graph) is not None:
        raise AssertionError("search produced a crossing witness in its own optimum")
    return best, best_graph


# ---------------------------------------------------------------------------
# Exhaustive 4-vertex facts.
# ---------------------------------------------------------------------------

def _core_multigraph(ca, cb, cc) -> PMultigraph:
    memb = [0] * 6
    for (r1, r2), combo in zip(_CORE_RANKS, (ca, cb, cc)):
        memb[r1], memb[r2] = combo[1], combo[2]
    return PMultigraph(5, 4, tuple(memb))


def verify_lemma_4vertex(
    *,
    sum_bound: int = 5,
    threshold_min_sum: int = 23,
    threshold_full_pair: int = 22,
    seed: int = 0,
) -> Certificate:
    """Scan all 5-layer multigraphs on 4 vertices for two structural facts.

    For every crossing-free state: with edge total >= threshold_min_sum some
    matching has pair-multiplicity sum <= sum_bound, and with edge total >=
    threshold_full_pair some single pair lies in all five layers.  States are
    ranged over as deficit-sorted multisets of ordered matching assignments
    with multiplicities 1, 3 or 6 (the symmetry group of the 4-vertex set
    permutes the three matchings slot-preservingly); the accounting
    reconciles the scan against the closed-form state count exactly.
    """
    watch = Stopwatch()
    p = 5
    space = (1 << (2 * p)) ** 3
    cutoff = 2 * 3 * p - min(threshold_min_sum, threshold_full_pair)
    combos, _ = _combo_table(p)
    sdr = _sdr_table(p)
    ncombos = len(combos)

    scanned_target = sum(comb(6 * p, k) for k in range(cutoff + 1))
    accounted = space - scanned_target  # states below the edge thresholds
    scanned = 0
    n_cross = 0
    n_free = 0
    n_min_sum_checked = 0
    n_full_pair_checked = 0

    def fail(ca, cb, cc, reason: str, e: int) -> None:
        g = _core_multigraph(ca, cb, cc)
        witness = {
            "reason": reason,
            "edge_total": e,
            "matching_sums": sorted(
                2 * p - combo[0] for combo in (ca, cb, cc)
            ),
            "multigraph": g.to_json_dict(),
        }
        cert = Certificate(
            claim="lemma-4vertex",
            verdict=FAIL,
            space=space,
            visited=accounted + scanned,
            witnesses=[witness],
            seed=seed,
            elapsed_ms=watch.elapsed_ms(),
        )
        raise VerificationError(reason, certificate=cert)

    for ia in range(ncombos):
        da = combos[ia][0]
        if 3 * da > cutoff:
            break
        for ib in range(ia, ncombos):
            db = combos[ib][0]
            if da + 2 * db > cutoff:
                break
            for ic in range(ib, ncombos):
                dc = combos[ic][0]
                d = da + db + dc
                if d > cutoff:
                    break
                if ia == ib == ic:
                    mult = 1
                elif ia == ib or ib == ic:
                    mult = 3
                else:
                    mult = 6
                scanned += mult
                ca, cb, cc = combos[ia], combos[ib], combos[ic]
                if sdr[ca[3]][cb[3]][cc[3]]:
                    n_cross += mult
                    continue
                n_free += mult
                e = 6 * p - d
                if e >= threshold_min_sum:
                    n_min_sum_checked += mult
                    if 2 * p - dc > sum_bound:  # dc is the largest deficit
                        fail(ca, cb, cc, "min matching sum exceeds bound", e)
                if e >= threshold_full_pair:
                    n_full_pair_checked += mult
                    full = (1 << p) - 1
                    if not any(
                        combo[1] == full or combo[2] == full for combo in (ca, cb, cc)
                    ):
                        fail(ca, cb, cc, "no pair with full multiplicity", e)

    if scanned != scanned_target:
        raise AssertionError(
            f"state accounting mismatch: scanned {scanned}, expected {scanned_target}"
        )
    witness = {
        "crossing_states_at_threshold": n_cross,
        "crossing_free_states_at_threshold": n_free,
        "min_sum_instances": n_min_sum_checked,
        "full_pair_instances": n_full_pair_checked,
    }
    return Certificate(
        claim="lemma-4vertex",
        verdict=PASS,
        space=space,
        visited=accounted + scanned,
        witnesses=[witness],
        seed=seed,
        elapsed_ms=watch.elapsed_ms(),
    )


# ---------------------------------------------------------------------------
# Integer inequality chains.
# ---------------------------------------------------------------------------

def _f5_upper_scaled(m: int) -> int:
    """4 times the real upper bound (7 m^2 - m) / 4 on the 5-layer maximum."""
    return 7 * m * m - m


def verify_corollary_inequalities(n_max: int = 10001, *, flip: bool = False, seed: int = 0) -> Certificate:
    """Check the two deletion inequalities for every odd n in [9, n_max].

    Everything is multiplied by 4 so the fractional 5-layer bound becomes the
    integer 7 m^2 - m and the checks stay exact.  flip=True asserts the
    reversed comparisons instead, which must fail immediately.
    """
    watch = Stopwatch()
    if n_max < 9:
        raise ParameterError(f"need n_max >= 9, got {n_max}")
    odds = range(9, n_max + 1, 2)
    space = len(odds)
    visited = 0
    for n in odds:
        m5, m6 = n - 5, n - 6
        lhs_a = 4 * b_formula(m5) + _f5_upper_scaled(m5) + 4 * (7 * m5 + 10)
        lhs_b = (
            4 * (b_formula(m6) + (n - 9) // 2)
            + _f5_upper_scaled(m6)
            + 4 * (comb(m6, 2) + 10 * m6 + 20)
        )
        rhs = 4 * b_formula(n)
        ok_a, ok_b = lhs_a < rhs, lhs_b < rhs
        if flip:
            ok_a, ok_b = not ok_a, not ok_b
        visited += 1
        if not (ok_a and ok_b):
            cert = Certificate(
                claim="corollary-bf",
                verdict=FAIL,
                space=space,
                visited=visited,
                witnesses=[
                    {
                        "n": n,
                        "scaled_lhs_a": lhs_a,
                        "scaled_lhs_b": lhs_b,
                        "scaled_rhs": rhs,
                        "flipped": flip,
                    }
                ],
                seed=seed,
                elapsed_ms=watch.elapsed_ms(),
            )
            raise VerificationError("deletion inequality violated", certificate=cert)
    return Certificate(
        claim="corollary-bf",
        verdict=PASS,
        space=space,
        visited=visited,
        witnesses=[],
        seed=seed,
        elapsed_ms=watch.elapsed_ms(),
    )


def verify_section4_arithmetic(
    n_max: int = 10001, *, drop_term: bool = False, seed: int = 0
) -> Certificate:
    """Exact identities: the odd-n edge count split and the even-n increment.

    For odd n >= 9: b(n-4) + f4(n-4) + 5(n-4) + 4 == b(n).
    For even n >= 4: b(n) - b(n-1) == 3 C(n/2, 2).

    drop_term omits the trailing constant from the odd identity; it exists so
    the harness can demonstrate that a wrong identity is caught, not silently
    absorbed.
    """
    watch = Stopwatch()
    if n_max < 9:
        raise ParameterError(f"need n_max >= 9, got {n_max}")
    odds = range(9, n_max + 1, 2)
    evens = range(4, n_max + 1, 2)
    space = len(odds) + len(evens)
    visited = 0
    tail = 0 if drop_term else 4
    for n in odds:
        visited += 1
        lhs = b_formula(n - 4) + f4_formula(n - 4) + 5 * (n - 4) + tail
        if lhs != b_formula(n):
            cert = Certificate(
                claim="section4-arith",
                verdict=FAIL,
                space=space,
                visited=visited,
                witnesses=[{"n": n, "lhs": lhs, "rhs": b_formula(n)}],
                seed=seed,
                elapsed_ms=watch.elapsed_ms(),
            )
            raise VerificationError("odd split identity violated", certificate=cert)
    for n in evens:
        visited += 1
        diff = b_formula(n) - b_formula(n - 1)
        if diff != 3 * comb(n // 2, 2):
            cert = Certificate(
                claim="section4-arith",
                verdict=FAIL,
                space=space,
                visited=visited,
                witnesses=[{"n": n, "difference": diff, "expected": 3 * comb(n // 2, 2)}],
                seed=seed,
                elapsed_ms=watch.elapsed_ms(),
            )
            raise VerificationError("even increment identity violated", certificate=cert)
    return Certificate(
        claim="section4-arith",
        verdict=PASS,
        space=space,
        visited=visited,
        witnesses=[],
        seed=seed,
        elapsed_ms=watch.elapsed_ms(),
    )
