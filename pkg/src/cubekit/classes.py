"""Membership tests for the chain hypercube ⊆ median ⊆ almost-median ⊆ tiled ⊆ semi-median ⊆ partial cube."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations

import numpy as np

from .convexity import ConvexCycleSet, enumerate_convex_cycles, is_convex_set, is_isometric_set
from .errors import InducedDisconnectedError, InternalTheoremViolation, NotPartialCubeError
from .graph import UNREACHABLE, DistanceMatrix, Graph, Verdict, bfs, is_connected
from .theta import ThetaPartition, is_partial_cube

# Exact triple enumeration up to this many vertices; beyond it the median
# test samples triples unless the graph is certified to be a hypercube.
MEDIAN_EXACT_BOUND = 128
MEDIAN_SAMPLES = 200_000


def _interval_masks(d: DistanceMatrix) -> list[list[int]]:
    t = d.table
    n = t.shape[0]
    weights = [1 << z for z in range(n)]
    masks = [[0] * n for _ in range(n)]
    for u in range(n):
        for v in range(u, n):
            if t[u, v] == UNREACHABLE:
                continue
            m = 0
            for z in np.flatnonzero(t[u] + t[v] == t[u, v]):
                m |= weights[z]
            masks[u][v] = masks[v][u] = m
    return masks


def _median_free(masks, u, v, w) -> bool:
    common = masks[u][v] & masks[v][w] & masks[u][w]
    return common == 0 or common & (common - 1) != 0


@dataclass(frozen=True)
class MedianVerdict:
    ok: bool
    witness: tuple[int, int, int] | None = None
    mode: str = "exact"

    def __bool__(self) -> bool:
        return self.ok


def is_median(
    g: Graph,
    d: DistanceMatrix,
    exact_bound: int = MEDIAN_EXACT_BOUND,
    samples: int = MEDIAN_SAMPLES,
    seed: int = 0,
    known_hypercube: bool = False,
) -> MedianVerdict:
    """Every triple has exactly one vertex common to its three intervals.

    ``mode`` is ``"exact"``, ``"hypercube"`` (caller certified the graph is
    a hypercube, which is median) or ``"sampled"``.
    """
    if not d.connected:
        return MedianVerdict(False, None, "exact")
    if known_hypercube:
        return MedianVerdict(True, None, "hypercube")
    n = g.n
    masks = _interval_masks(d)
    if n <= exact_bound:
        for u, v, w in combinations(range(n), 3):
            if _median_free(masks, u, v, w):
                return MedianVerdict(False, (u, v, w), "exact")
        return MedianVerdict(True, None, "exact")
    rng = random.Random(seed)
    for _ in range(samples):
        u, v, w = rng.sample(range(n), 3)
        if _median_free(masks, u, v, w):
            return MedianVerdict(False, tuple(sorted((u, v, w))), "sampled")
    return MedianVerdict(True, None, "sampled")


def _u_sets(g: Graph, d: DistanceMatrix, tp: ThetaPartition):
    t = d.table
    for c, members in enumerate(tp.classes):
        u, v = g.edges[members[0]]
        ends = {x for e in members for x in g.edges[e]}
        u_side = frozenset(x for x in ends if t[u, x] < t[v, x])
        yield c, (u, v), u_side, frozenset(ends - u_side)


def _require_pc(d: DistanceMatrix, tp: ThetaPartition | None) -> None:
    if tp is None or not d.connected:
        raise NotPartialCubeError("class predicates need a partial cube with its Θ-partition")


def is_semi_median(g: Graph, d: DistanceMatrix, tp: ThetaPartition) -> Verdict:
    """All U-sets induce connected subgraphs; witness is the offending edge."""
    _require_pc(d, tp)
    for _, (u, v), su, sv in _u_sets(g, d, tp):
        for s in (su, sv):
            start = next(iter(s))
            reach = bfs(g, start, allowed=s)
            if any(reach[x] == UNREACHABLE for x in s):
                return Verdict(False, (u, v))
    return Verdict(True)


def is_almost_median(g: Graph, d: DistanceMatrix, tp: ThetaPartition) -> Verdict:
    """All U-sets induce isometric subgraphs; witness is the offending edge."""
    _require_pc(d, tp)
    for _, (u, v), su, sv in _u_sets(g, d, tp):
        for s in (su, sv):
            try:
                ok = is_isometric_set(g, d, s)
            except InducedDisconnectedError:
                ok = False
            if not ok:
                return Verdict(False, (u, v))
    return Verdict(True)


def is_median_via_halfspaces(g: Graph, d: DistanceMatrix, tp: ThetaPartition) -> Verdict:
    """Partial cube whose U-sets are all convex."""
    _require_pc(d, tp)
    for _, (u, v), su, sv in _u_sets(g, d, tp):
        for s in (su, sv):
            if not is_convex_set(g, d, s):
                return Verdict(False, (u, v))
    return Verdict(True)


def is_almost_median_via_cycles(ccs: ConvexCycleSet) -> bool:
    return all(c.length == 4 for c in ccs.cycles)


def four_cycles(g: Graph) -> list[tuple[int, int, int, int]]:
    """Every 4-cycle ``(a, b, c, d)`` once, with ``a`` its least vertex."""
    out = set()
    nb = g.neighbor_sets
    for a in range(g.n):
        for c in range(a + 1, g.n):
            common = sorted(x for x in nb[a] & nb[c] if x > a)
            for b, dd in combinations(common, 2):
                out.add((a, b, c, dd))
    return sorted(out)


def gf2_rank(vectors) -> int:
    """Rank over GF(2) of integers read as bit vectors."""
    pivots: dict[int, int] = {}
    rank = 0
    for x in vectors:
        while x:
            top = x.bit_length() - 1
            if top in pivots:
                x ^= pivots[top]
            else:
                pivots[top] = x
                rank += 1
                break
    return rank


def is_tiled(g: Graph, d: DistanceMatrix | None = None) -> Verdict:
    """Every cycle is a mod-2 sum of 4-cycles.

    Equivalently the 4-cycles span the cycle space, whose dimension for a
    connected graph is ``m - n + 1``. On failure the witness gives both numbers.
    """
    if not is_connected(g):
        return Verdict(False, "disconnected")
    idx = g.edge_index
    vecs = []
    for a, b, c, x in four_cycles(g):
        vecs.append((1 << idx[a, b]) | (1 << idx[b, c]) | (1 << idx[c, x]) | (1 << idx[x, a]))
    dim = g.edge_count - g.n + 1
    rank = gf2_rank(vecs)
    return Verdict(rank == dim, None if rank == dim else {"rank": rank, "dimension": dim})


@dataclass
class ClassMembershipReport:
    is_partial_cube: bool
    is_semi_median: bool
    is_tiled: bool
    is_almost_median: bool
    is_almost_median_via_cycles: bool
    is_median: bool
    is_hypercube: bool
    median_mode: str = "exact"
    witnesses: dict[str, object] = field(default_factory=dict)

    CHAIN = (
        "is_hypercube",
        "is_median",
        "is_almost_median",
        "is_tiled",
        "is_semi_median",
        "is_partial_cube",
    )

    def flags(self) -> dict[str, bool]:
        return {
            "is_partial_cube": self.is_partial_cube,
            "is_semi_median": self.is_semi_median,
            "is_tiled": self.is_tiled,
            "is_almost_median": self.is_almost_median,
            "is_almost_median_via_cycles": self.is_almost_median_via_cycles,
            "is_median": self.is_median,
            "is_hypercube": self.is_hypercube,
        }

    def violations(self) -> list[str]:
        out = []
        for stronger, weaker in zip(self.CHAIN, self.CHAIN[1:]):
            if getattr(self, stronger) and not getattr(self, weaker):
                out.append(f"{stronger} without {weaker}")
        if self.is_almost_median != self.is_almost_median_via_cycles:
            out.append("almost-median predicates disagree")
        return out


def class_report(g: Graph, seed: int = 0) -> ClassMembershipReport:
    """Evaluate every class predicate independently and check the chain."""
    from .classify import verify_hypercube  # local: classify imports this module

    pc = is_partial_cube(g)
    w: dict[str, object] = {}
    if not pc:
        reason = f"not a partial cube ({pc.reason})"
        for flag in ("is_semi_median", "is_tiled", "is_almost_median", "is_almost_median_via_cycles", "is_hypercube"):
            w[flag] = reason
        w["is_partial_cube"] = {"reason": pc.reason, "witness": pc.witness}
        median = MedianVerdict(False, None)
        if pc.distances is not None:
            median = is_median(g, pc.distances, seed=seed)
        w["is_median"] = median.witness or reason
        rep = ClassMembershipReport(False, False, False, False, False, median.ok, False, median.mode, w)
    else:
        d, tp = pc.distances, pc.partition
        hyper = verify_hypercube(g, tp, pc.labeling, tp.class_count)
        semi = is_semi_median(g, d, tp)
        tiled = is_tiled(g, d)
        almost = is_almost_median(g, d, tp)
        almost_c = is_almost_median_via_cycles(enumerate_convex_cycles(g, d, tp))
        median = is_median(g, d, seed=seed, known_hypercube=hyper)
        for name, verdict in (("is_semi_median", semi), ("is_tiled", tiled), ("is_almost_median", almost)):
            if not verdict:
                w[name] = verdict.witness
        if not almost_c:
            w["is_almost_median_via_cycles"] = "a convex cycle longer than 4 exists"
        if not median:
            w["is_median"] = median.witness
        if not hyper:
            w["is_hypercube"] = f"{g.n} vertices for isometric dimension {tp.class_count}"
        rep = ClassMembershipReport(
            True, semi.ok, tiled.ok, almost.ok, almost_c, median.ok, hyper, median.mode, w
        )
    bad = rep.violations()
    if bad:
        raise InternalTheoremViolation("; ".join(bad), report=rep)
    return rep
