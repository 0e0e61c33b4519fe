"""Isometric and convex vertex sets, convex hulls and convex-cycle enumeration."""

from __future__ import annotations

import os
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .errors import (
    InducedDisconnectedError,
    NotACycleError,
    NotPartialCubeError,
    OracleBoundExceeded,
)
from .graph import UNREACHABLE, DistanceMatrix, Graph, Verdict, bfs, geodesic_counts_from
from .theta import ThetaPartition

DEFAULT_ORACLE_BOUND = 24


def oracle_bound() -> int:
    """Vertex limit for the brute-force oracle; ``CUBEKIT_ORACLE_BOUND`` overrides it."""
    raw = os.environ.get("CUBEKIT_ORACLE_BOUND")
    return int(raw) if raw else DEFAULT_ORACLE_BOUND


def canonical_cycle(seq: Sequence[int]) -> tuple[int, ...]:
    """Lexicographically least rotation/reflection of a cyclic vertex sequence."""
    m = len(seq)
    seq = list(seq)
    best = None
    for s in (seq, seq[::-1]):
        for r in range(m):
            cand = tuple(s[r:] + s[:r])
            if best is None or cand < best:
                best = cand
    return best


@dataclass(frozen=True)
class CycleSubgraph:
    vertices: tuple[int, ...]
    classes: tuple[int, ...] | None = field(default=None, compare=False)

    @property
    def length(self) -> int:
        return len(self.vertices)

    def edges(self) -> list[tuple[int, int]]:
        vs = self.vertices
        return [(vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs))]


def make_cycle(seq: Sequence[int], tp: ThetaPartition | None = None) -> CycleSubgraph:
    vs = canonical_cycle(seq)
    classes = None
    if tp is not None:
        classes = tuple(tp.class_of_edge(vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs)))
    return CycleSubgraph(vs, classes)


@dataclass(frozen=True)
class ConvexCycleSet:
    cycles: tuple[CycleSubgraph, ...]

    @property
    def length_spectrum(self) -> dict[int, int]:
        return dict(sorted(Counter(c.length for c in self.cycles).items()))

    @property
    def uniform_length(self) -> int | None:
        return length_spectrum_uniform(self)

    def __len__(self) -> int:
        return len(self.cycles)

    def vertex_sets(self) -> set[tuple[int, ...]]:
        return {c.vertices for c in self.cycles}


def length_spectrum_uniform(ccs: ConvexCycleSet) -> int | None:
    spec = ccs.length_spectrum
    if len(spec) == 1:
        return next(iter(spec))
    return None


def is_isometric_set(g: Graph, d: DistanceMatrix, s: Iterable[int]) -> bool:
    s = frozenset(s)
    rows = d.rows
    for x in s:
        local = bfs(g, x, allowed=s)
        for y in s:
            if local[y] == UNREACHABLE:
                raise InducedDisconnectedError(f"vertices {x} and {y} are not joined inside the set")
            if local[y] != rows[x][y]:
                return False
    return True


def is_convex_set(g: Graph, d: DistanceMatrix, s: Iterable[int]) -> Verdict:
    """Check closure under intervals; the witness is ``(u, v, z)`` with z on a u,v-geodesic outside."""
    members = sorted(set(s))
    inside = np.zeros(g.n, dtype=bool)
    inside[members] = True
    t = d.table
    for i, u in enumerate(members):
        for v in members[i + 1 :]:
            duv = t[u, v]
            if duv == UNREACHABLE:
                continue
            on = (t[u] + t[v] == duv) & ~inside
            if on.any():
                return Verdict(False, (u, v, int(np.flatnonzero(on)[0])))
    return Verdict(True)


def convex_hull(g: Graph, d: DistanceMatrix, s: Iterable[int]) -> frozenset[int]:
    t = d.table
    hull = set(s)
    frontier = list(hull)
    while frontier:
        added = set()
        current = sorted(hull)
        for u in frontier:
            for v in current:
                if t[u, v] == UNREACHABLE:
                    continue
                for z in np.flatnonzero(t[u] + t[v] == t[u, v]):
                    z = int(z)
                    if z not in hull and z not in added:
                        added.add(z)
        hull |= added
        frontier = list(added)
    return frozenset(hull)


def _check_cycle(g: Graph, c: CycleSubgraph | Sequence[int]) -> tuple[int, ...]:
    vs = tuple(c.vertices if isinstance(c, CycleSubgraph) else c)
    if len(vs) < 3 or len(set(vs)) != len(vs):
        raise NotACycleError(f"{vs} is not a cycle")
    for i in range(len(vs)):
        if not g.has_edge(vs[i], vs[(i + 1) % len(vs)]):
            raise NotACycleError(f"{vs[i]} and {vs[(i + 1) % len(vs)]} are not adjacent")
    return vs


def is_chordless(g: Graph, vs: Sequence[int]) -> bool:
    s = set(vs)
    induced = sum(1 for v in vs for w in g.adjacency[v] if w in s) // 2
    return induced == len(vs)


def is_convex_cycle(g: Graph, d: DistanceMatrix, c: CycleSubgraph | Sequence[int]) -> bool:
    """A cycle is convex iff its vertex set is convex and it has no chord."""
    vs = _check_cycle(g, c)
    return is_chordless(g, vs) and bool(is_convex_set(g, d, vs))


def enumerate_convex_cycles(g: Graph, d: DistanceMatrix, tp: ThetaPartition) -> ConvexCycleSet:
    """All convex cycles of a partial cube.

    Opposite edges of a convex cycle lie in one Θ-class and are joined by
    two vertex-disjoint unique geodesics, so it suffices to test, for every
    pair of edges in a class, whether such a geodesic pair exists.
    """
    if tp.graph is not g and tp.graph != g:
        raise NotPartialCubeError("partition belongs to a different graph")
    rows = d.rows
    counts: dict[int, list[int]] = {}

    def unique_geodesic(s: int, t: int) -> list[int] | None:
        if s not in counts:
            counts[s] = geodesic_counts_from(g, d, s)
        if counts[s][t] != 1:
            return None
        row = rows[s]
        path = [t]
        while path[-1] != s:
            x = path[-1]
            path.append(next(y for y in g.adjacency[x] if row[y] == row[x] - 1))
        return path[::-1]

    found: dict[tuple[int, ...], CycleSubgraph] = {}
    rejected: set[tuple[int, ...]] = set()
    for members in tp.classes:
        for i, a in enumerate(members):
            u1, v1 = g.edges[a]
            for b in members[i + 1 :]:
                x, y = g.edges[b]
                if rows[u1][x] < rows[u1][y]:
                    u2, v2 = x, y
                else:
                    u2, v2 = y, x
                if rows[u1][u2] != rows[v1][v2] or rows[u1][v2] != rows[u1][u2] + 1:
                    continue
                top = unique_geodesic(u1, u2)
                if top is None:
                    continue
                bottom = unique_geodesic(v1, v2)
                if bottom is None or set(top) & set(bottom):
                    continue
                key = canonical_cycle(top + bottom[::-1])
                if key in found or key in rejected:
                    continue
                if is_convex_cycle(g, d, key):
                    found[key] = make_cycle(key, tp)
                else:
                    rejected.add(key)
    return ConvexCycleSet(tuple(found[k] for k in sorted(found)))


def chordless_cycles(g: Graph) -> list[tuple[int, ...]]:
    """Every induced cycle, each once, in canonical form."""
    adj = g.neighbor_sets
    out = []

    def extend(path: list[int], blocked: set[int]) -> None:
        # blocked: vertices adjacent to some interior path vertex, or on the path
        s, last = path[0], path[-1]
        for w in sorted(adj[last]):
            if w <= s or w in blocked:
                continue
            if s in adj[w]:
                # closing vertex; orientation fixed by path[1] < w
                if len(path) >= 2 and path[1] < w:
                    out.append(canonical_cycle(path + [w]))
                continue
            extend(path + [w], blocked | adj[last] | {w})

    for s in range(g.n):
        for p1 in sorted(adj[s]):
            if p1 <= s:
                continue
            extend([s, p1], {s, p1})
    return sorted(set(out))


def enumerate_convex_cycles_bruteforce(
    g: Graph, d: DistanceMatrix, bound: int | None = None
) -> ConvexCycleSet:
    """Reference enumeration: all chordless cycles filtered by convexity."""
    bound = oracle_bound() if bound is None else bound
    if g.n > bound:
        raise OracleBoundExceeded(f"{g.n} vertices exceed the oracle bound {bound}", bound=bound)
    keep = [c for c in chordless_cycles(g) if is_convex_cycle(g, d, c)]
    return ConvexCycleSet(tuple(CycleSubgraph(c) for c in sorted(keep)))
