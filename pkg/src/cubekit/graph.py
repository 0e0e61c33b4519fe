"""Dense-index undirected simple graphs, BFS distances and basic structure.

Vertices are ``0..n-1``. Arbitrary identifiers are kept in ``Graph.names``
purely for reporting; algorithms never look at them.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Any, Iterable, NamedTuple, Sequence

import numpy as np

from .errors import (
    DisconnectedPairError,
    GraphInputError,
    RejectLoop,
    RejectRange,
)

UNREACHABLE = -1
INFINITE = math.inf

# Dense distance tables beyond this size are out of scope.
DESK_SCALE_BOUND = 2000


class Verdict(NamedTuple):
    """A boolean answer with an optional witness; truthiness follows ``ok``."""

    ok: bool
    witness: Any = None

    def __bool__(self) -> bool:
        return bool(self.ok)


@dataclass(frozen=True, eq=False)
class Graph:
    n: int
    adjacency: tuple[tuple[int, ...], ...]
    edges: tuple[tuple[int, int], ...]
    names: tuple[str, ...] | None = field(default=None, repr=False)

    @property
    def vertex_count(self) -> int:
        return self.n

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    @cached_property
    def neighbor_sets(self) -> tuple[frozenset[int], ...]:
        return tuple(frozenset(a) for a in self.adjacency)

    @cached_property
    def edge_index(self) -> dict[tuple[int, int], int]:
        idx = {}
        for i, (u, v) in enumerate(self.edges):
            idx[u, v] = i
            idx[v, u] = i
        return idx

    def has_edge(self, u: int, v: int) -> bool:
        return (u, v) in self.edge_index

    def name(self, v: int) -> str:
        return self.names[v] if self.names is not None else str(v)

    def vertex_names(self) -> list[str]:
        return [self.name(v) for v in range(self.n)]

    def __eq__(self, other: object) -> bool:
        # Structural equality on the indexed graph; names are annotations only.
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={len(self.edges)})"


def from_edge_list(
    pairs: Iterable[tuple[int, int]],
    vertex_count: int | None = None,
    names: Sequence[str] | None = None,
) -> Graph:
    """Build a canonical graph from integer pairs; duplicates collapse.

    Without ``vertex_count`` the graph spans ``0..max index``.
    """
    seen: set[tuple[int, int]] = set()
    hi = -1
    for pair in pairs:
        u, v = (int(x) for x in pair)
        if u < 0 or v < 0:
            raise RejectRange(f"negative vertex index in edge ({u}, {v})")
        if u == v:
            raise RejectLoop(f"self-loop at vertex {u}")
        if vertex_count is not None and max(u, v) >= vertex_count:
            raise RejectRange(f"edge ({u}, {v}) out of range for {vertex_count} vertices")
        seen.add((min(u, v), max(u, v)))
        hi = max(hi, u, v)
    n = vertex_count if vertex_count is not None else hi + 1
    if n < 0:
        raise RejectRange("negative vertex count")
    adj: list[list[int]] = [[] for _ in range(n)]
    for u, v in seen:
        adj[u].append(v)
        adj[v].append(u)
    if names is not None:
        names = tuple(str(s) for s in names)
        if len(names) != n:
            raise GraphInputError(f"{len(names)} names for {n} vertices")
    return Graph(
        n=n,
        adjacency=tuple(tuple(sorted(a)) for a in adj),
        edges=tuple(sorted(seen)),
        names=names,
    )


@dataclass(frozen=True, eq=False)
class DistanceMatrix:
    """All-pairs hop distances; ``UNREACHABLE`` marks pairs in different components."""

    table: np.ndarray

    def __call__(self, u: int, v: int) -> int:
        x = int(self.table[u, v])
        if x == UNREACHABLE:
            raise DisconnectedPairError(f"vertices {u} and {v} are in different components")
        return x

    @cached_property
    def rows(self) -> list[list[int]]:
        return self.table.tolist()

    @property
    def connected(self) -> bool:
        return bool((self.table != UNREACHABLE).all())

    @property
    def diameter(self) -> int:
        if not self.connected:
            raise DisconnectedPairError("diameter of a disconnected graph")
        return int(self.table.max()) if self.table.size else 0


def bfs(g: Graph, source: int, allowed: frozenset[int] | set[int] | None = None) -> list[int]:
    dist = [UNREACHABLE] * g.n
    dist[source] = 0
    queue = deque([source])
    adj = g.adjacency
    while queue:
        x = queue.popleft()
        dx = dist[x] + 1
        for y in adj[x]:
            if dist[y] == UNREACHABLE and (allowed is None or y in allowed):
                dist[y] = dx
                queue.append(y)
    return dist


def all_pairs_distances(g: Graph) -> DistanceMatrix:
    table = np.array([bfs(g, s) for s in range(g.n)], dtype=np.int64).reshape(g.n, g.n)
    return DistanceMatrix(table)


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return False
    return UNREACHABLE not in bfs(g, 0)


def girth(g: Graph) -> float | int:
    """Length of a shortest cycle, or ``INFINITE`` for forests."""
    best: float | int = INFINITE
    adj = g.adjacency
    for root in range(g.n):
        dist = [UNREACHABLE] * g.n
        parent = [-1] * g.n
        dist[root] = 0
        queue = deque([root])
        while queue:
            x = queue.popleft()
            if 2 * dist[x] >= best:
                break
            for y in adj[x]:
                if dist[y] == UNREACHABLE:
                    dist[y] = dist[x] + 1
                    parent[y] = x
                    queue.append(y)
                elif parent[x] != y:
                    best = min(best, dist[x] + dist[y] + 1)
    return best


class DegreeProfile(NamedTuple):
    min_degree: int
    max_degree: int
    is_regular: bool
    k: int | None


def degree_profile(g: Graph) -> DegreeProfile:
    if g.n == 0:
        return DegreeProfile(0, 0, True, 0)
    degs = [len(a) for a in g.adjacency]
    lo, hi = min(degs), max(degs)
    return DegreeProfile(lo, hi, lo == hi, lo if lo == hi else None)


class BipartiteResult(NamedTuple):
    is_bipartite: bool
    coloring: tuple[int, ...] | None
    odd_cycle: tuple[int, ...] | None

    def __bool__(self) -> bool:
        return self.is_bipartite


def is_bipartite(g: Graph) -> BipartiteResult:
    """Two-colour ``g``; on failure return an odd cycle through the conflicting edge."""
    color = [-1] * g.n
    parent = [-1] * g.n
    for root in range(g.n):
        if color[root] != -1:
            continue
        color[root] = 0
        queue = deque([root])
        while queue:
            x = queue.popleft()
            for y in g.adjacency[x]:
                if color[y] == -1:
                    color[y] = 1 - color[x]
                    parent[y] = x
                    queue.append(y)
                elif color[y] == color[x]:
                    return BipartiteResult(False, None, _odd_cycle(parent, x, y))
    return BipartiteResult(True, tuple(color), None)


def _odd_cycle(parent: list[int], x: int, y: int) -> tuple[int, ...]:
    # x and y are adjacent, same BFS-tree colour; join their tree paths at the LCA.
    px = [x]
    while parent[px[-1]] != -1:
        px.append(parent[px[-1]])
    py = [y]
    while parent[py[-1]] != -1:
        py.append(parent[py[-1]])
    on_x = {v: i for i, v in enumerate(px)}
    for j, v in enumerate(py):
        if v in on_x:
            i = on_x[v]
            return tuple(px[: i + 1]) + tuple(reversed(py[:j]))
    raise AssertionError("tree paths of one BFS component must meet")


def interval(g: Graph, d: DistanceMatrix, u: int, v: int) -> frozenset[int]:
    """Vertices lying on some u,v-geodesic."""
    duv = d(u, v)
    hits = np.flatnonzero(d.table[u] + d.table[v] == duv)
    return frozenset(int(z) for z in hits if d.table[u, z] != UNREACHABLE)


def geodesic_counts_from(g: Graph, d: DistanceMatrix, s: int) -> list[int]:
    """Number of shortest s,w-paths for every w (0 when unreachable)."""
    row = d.rows[s]
    order = sorted((x for x in range(g.n) if row[x] != UNREACHABLE), key=row.__getitem__)
    count = [0] * g.n
    count[s] = 1
    for w in order[1:]:
        dw = row[w] - 1
        count[w] = sum(count[x] for x in g.adjacency[w] if row[x] == dw)
    return count


def geodesic_count(g: Graph, d: DistanceMatrix, u: int, v: int) -> int:
    d(u, v)
    return geodesic_counts_from(g, d, u)[v]


def cartesian_product(g: Graph, h: Graph) -> Graph:
    """Box product; vertex ``(a, x)`` gets index ``a * h.n + x``."""
    pairs = []
    for a in range(g.n):
        for x, y in h.edges:
            pairs.append((a * h.n + x, a * h.n + y))
    for a, b in g.edges:
        for x in range(h.n):
            pairs.append((a * h.n + x, b * h.n + x))
    names = None
    if g.names is not None or h.names is not None:
        names = [f"({g.name(a)},{h.name(x)})" for a in range(g.n) for x in range(h.n)]
    return from_edge_list(pairs, vertex_count=g.n * h.n, names=names)


def induced_subgraph(g: Graph, s: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    """Subgraph induced by ``s``; the returned map sends new indices to old ones."""
    keep = tuple(sorted(set(s)))
    new_of = {v: i for i, v in enumerate(keep)}
    pairs = [(new_of[u], new_of[v]) for u, v in g.edges if u in new_of and v in new_of]
    names = [g.name(v) for v in keep] if g.names is not None else None
    return from_edge_list(pairs, vertex_count=len(keep), names=names), keep


def relabel(pairs: Iterable[tuple[Any, Any]], isolated: Iterable[Any] = ()) -> Graph:
    """Ingest edges over arbitrary hashable identifiers.

    Integer-only identifiers are indexed in numeric order; anything else in
    order of first appearance. Original identifiers become ``Graph.names``.
    """
    pairs = list(pairs)
    ids: list[Any] = []
    seen: set[Any] = set()
    for pair in pairs:
        for x in pair:
            if x not in seen:
                seen.add(x)
                ids.append(x)
    for x in isolated:
        if x not in seen:
            seen.add(x)
            ids.append(x)
    if all(isinstance(x, int) for x in ids):
        ids.sort()
    index = {x: i for i, x in enumerate(ids)}
    return from_edge_list(
        [(index[a], index[b]) for a, b in pairs],
        vertex_count=len(ids),
        names=[str(x) for x in ids],
    )
