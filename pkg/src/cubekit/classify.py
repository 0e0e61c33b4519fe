"""Classification of regular partial cubes with a uniform convex-cycle length.

A finite regular partial cube (other than K1, K2) whose convex cycles all
have length 4, 6 or 2n >= 8 is respectively a hypercube, a doubled odd
graph or the even cycle C_2n. ``classify`` runs that decision procedure and
certifies each outcome it can certify cheaply.
"""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass, field
from typing import Iterator, Sequence

import numpy as np

from .convexity import enumerate_convex_cycles
from .errors import InternalTheoremViolation, NotAPathError, PathTooShortError, SizeBoundExceeded
from .families import doubled_odd
from .graph import DESK_SCALE_BOUND, DistanceMatrix, Graph, Verdict, all_pairs_distances, degree_profile
from .theta import HypercubeLabeling, ThetaPartition, is_partial_cube

HYPERCUBE = "HYPERCUBE"
DOUBLED_ODD = "DOUBLED_ODD"
EVEN_CYCLE = "EVEN_CYCLE"
EXCLUDED = "EXCLUDED"

NOT_PARTIAL_CUBE = "NOT_PARTIAL_CUBE"
NOT_REGULAR = "NOT_REGULAR"
TRIVIAL_K1_K2 = "TRIVIAL_K1_K2"
MIXED_CYCLE_LENGTHS = "MIXED_CYCLE_LENGTHS"
NO_CYCLES = "NO_CYCLES"


@dataclass
class Classification:
    outcome: str
    parameter: int | None = None
    reason: str | None = None
    convex_length: int | None = None
    degree: int | None = None
    idim: int | None = None
    spectrum: dict[int, int] = field(default_factory=dict)
    labeling: HypercubeLabeling | None = None
    isomorphism: dict[int, int] | None = None
    notes: list[str] = field(default_factory=list)

    @property
    def label(self) -> str:
        if self.outcome == EXCLUDED:
            return f"{EXCLUDED}({self.reason})"
        return f"{self.outcome}({self.parameter})"

    def __str__(self) -> str:
        return self.label


def verify_hypercube(g: Graph, tp: ThetaPartition, lab: HypercubeLabeling, k: int) -> bool:
    """An isometric labeling of width k that hits all 2^k strings is an isomorphism onto Q_k."""
    if g.n != 1 << k or lab.width != k or tp.class_count != k:
        return False
    return set(lab.labels) == set(range(1 << k))


def _bfs_order(g: Graph) -> list[int]:
    seen = [False] * g.n
    order = []
    for root in range(g.n):
        if seen[root]:
            continue
        seen[root] = True
        queue = deque([root])
        while queue:
            x = queue.popleft()
            order.append(x)
            for y in g.adjacency[x]:
                if not seen[y]:
                    seen[y] = True
                    queue.append(y)
    return order


def verify_isomorphism(
    g: Graph, h: Graph, dg: DistanceMatrix | None = None, dh: DistanceMatrix | None = None
) -> dict[int, int] | None:
    """Find a vertex bijection g -> h preserving adjacency both ways, or ``None``.

    Backtracking in BFS order; a candidate must share the distance profile of
    its preimage and respect distances to every vertex already mapped.
    """
    if max(g.n, h.n) > DESK_SCALE_BOUND:
        raise SizeBoundExceeded(f"isomorphism search limited to {DESK_SCALE_BOUND} vertices")
    if g.n != h.n or g.edge_count != h.edge_count:
        return None
    if sorted(map(len, g.adjacency)) != sorted(map(len, h.adjacency)):
        return None
    n = g.n
    if n == 0:
        return {}
    Dg = (dg or all_pairs_distances(g)).table
    Dh = (dh or all_pairs_distances(h)).table
    prof_g = [tuple(sorted(r)) for r in Dg.tolist()]
    prof_h = [tuple(sorted(r)) for r in Dh.tolist()]
    if sorted(prof_g) != sorted(prof_h):
        return None
    ids = {p: i for i, p in enumerate(sorted(set(prof_g)))}
    sg = np.array([ids[p] for p in prof_g])
    sh = np.array([ids.get(p, -1) for p in prof_h])

    order = _bfs_order(g)
    mapping = np.full(n, -1, dtype=np.int64)
    used = np.zeros(n, dtype=bool)
    cands: list[list[int] | None] = [None] * n
    i = 0
    while 0 <= i < n:
        v = order[i]
        if cands[i] is None:
            mask = (sh == sg[v]) & ~used
            if i:
                done = np.array(order[:i])
                mask &= (Dh[:, mapping[done]] == Dg[v, done]).all(axis=1)
            cands[i] = [int(x) for x in np.flatnonzero(mask)[::-1]]
        else:
            used[mapping[v]] = False
            mapping[v] = -1
        if cands[i]:
            w = cands[i].pop()
            mapping[v] = w
            used[w] = True
            i += 1
        else:
            cands[i] = None
            i -= 1
    if i < 0:
        return None
    return {v: int(mapping[v]) for v in range(n)}


def classify(g: Graph, certify: bool = False) -> Classification:
    pc = is_partial_cube(g)
    if not pc:
        return Classification(EXCLUDED, reason=NOT_PARTIAL_CUBE, notes=[str(pc.reason)])
    d, tp, lab = pc.distances, pc.partition, pc.labeling
    idim = tp.class_count
    if g.n <= 2:
        return Classification(EXCLUDED, reason=TRIVIAL_K1_K2, idim=idim)
    prof = degree_profile(g)
    if not prof.is_regular:
        return Classification(EXCLUDED, reason=NOT_REGULAR, idim=idim)
    k = prof.k
    ccs = enumerate_convex_cycles(g, d, tp)
    spectrum = ccs.length_spectrum
    base = dict(degree=k, idim=idim, spectrum=spectrum)
    if not spectrum:
        return Classification(EXCLUDED, reason=NO_CYCLES, **base)
    length = ccs.uniform_length
    if length is None:
        return Classification(EXCLUDED, reason=MIXED_CYCLE_LENGTHS, **base)

    if length == 4:
        if not verify_hypercube(g, tp, lab, k):
            raise InternalTheoremViolation(f"uniform 4-cycle spectrum, {k}-regular, but not Q_{k}")
        return Classification(HYPERCUBE, k, convex_length=4, labeling=lab, **base)
    if length == 6:
        out = Classification(DOUBLED_ODD, k, convex_length=6, **base)
        if k == 2:
            out.notes.append("doubled odd graph of parameter 2 is the 6-cycle")
        if certify:
            iso = verify_isomorphism(g, doubled_odd(k), dg=d)
            if iso is None:
                raise InternalTheoremViolation(f"uniform 6-cycle spectrum but not isomorphic to DO:{k}")
            out.isomorphism = iso
        return out
    half = length // 2
    if k != 2 or g.n != length:
        raise InternalTheoremViolation(f"uniform {length}-cycle spectrum on a graph that is not C_{length}")
    return Classification(EVEN_CYCLE, half, convex_length=length, **base)


# -- path types -------------------------------------------------------------

TYPE_I = "TYPE_I"
TYPE_II = "TYPE_II"
NEITHER = "NEITHER"


@dataclass(frozen=True)
class PathWitness:
    vertices: tuple[int, ...]
    types: tuple[str, ...]
    failing: tuple[str, int] | None = None

    @property
    def tag(self) -> str:
        return "+".join(self.types) if self.types else NEITHER


def _edge_classes(g: Graph, tp: ThetaPartition, p: Sequence[int], min_len: int) -> list[int]:
    p = list(p)
    if len(set(p)) != len(p):
        raise NotAPathError(f"{p} repeats a vertex")
    if len(p) - 1 < min_len:
        err = PathTooShortError if min_len == 3 else NotAPathError
        raise err(f"path of length {len(p) - 1} is shorter than {min_len}")
    for a, b in zip(p, p[1:]):
        if not g.has_edge(a, b):
            raise NotAPathError(f"{a} and {b} are not adjacent")
    # index i holds the class of e_i = v_{i-1} v_i; slot 0 unused
    return [-1] + [tp.class_of_edge(a, b) for a, b in zip(p, p[1:])]


def is_type_one_path(g: Graph, tp: ThetaPartition, p: Sequence[int]) -> Verdict:
    c = _edge_classes(g, tp, p, 1)
    F = tp.incident
    l = len(p) - 1
    if not F[p[0]] - F[p[1]]:
        return Verdict(False, ("start", 0))
    if not F[p[l]] - F[p[l - 1]]:
        return Verdict(False, ("end", l))
    for i in range(1, l):
        if c[i + 1] in F[p[i - 1]]:
            return Verdict(False, ("next_class_behind", i))
        if c[i] in F[p[i + 1]]:
            return Verdict(False, ("class_ahead", i))
    return Verdict(True)


def is_type_two_path(g: Graph, tp: ThetaPartition, p: Sequence[int]) -> Verdict:
    c = _edge_classes(g, tp, p, 3)
    F = tp.incident
    for i in range(1, len(p) - 2):
        if c[i] in F[p[i + 2]]:
            return Verdict(False, ("class_two_ahead", i))
        if c[i + 2] in F[p[i - 1]]:
            return Verdict(False, ("class_two_behind", i))
    return Verdict(True)


def path_witness(g: Graph, tp: ThetaPartition, p: Sequence[int]) -> PathWitness:
    types = []
    failing = None
    one = is_type_one_path(g, tp, p)
    if one:
        types.append(TYPE_I)
    else:
        failing = one.witness
    if len(p) >= 4:
        two = is_type_two_path(g, tp, p)
        if two:
            types.append(TYPE_II)
        elif failing is None:
            failing = two.witness
    return PathWitness(tuple(p), tuple(types), None if types else failing)


def every_3path_in_6cycle(g: Graph) -> Verdict:
    """Witness is a path a-b-c-d that closes into no 6-cycle a-b-c-d-x-y."""
    nb = g.neighbor_sets
    for b, c in g.edges:
        for b_, c_ in ((b, c), (c, b)):
            for a in nb[b_]:
                if a == c_:
                    continue
                for dd in nb[c_]:
                    if dd in (b_, a):
                        continue
                    used = {a, b_, c_, dd}
                    if not any(
                        y in nb[x] for x in nb[dd] - used for y in nb[a] - used if y != x
                    ):
                        return Verdict(False, (a, b_, c_, dd))
    return Verdict(True)


def _local_ok(kind: str, path: list[int], w: int, cls, F) -> bool:
    # Window conditions touching the new last edge only; both path types are
    # prefix-closed under these, so DFS can prune on them.
    l = len(path) - 1  # current length, new edge will be e_{l+1}
    e_new = cls(path[-1], w)
    if kind == TYPE_I:
        if l < 1:
            return True
        return e_new not in F[path[-2]] and cls(path[-2], path[-1]) not in F[w]
    if l < 2:
        return True
    return cls(path[-3], path[-2]) not in F[w] and e_new not in F[path[-3]]


def iter_candidate_paths(g: Graph, tp: ThetaPartition, kind: str, max_len: int) -> Iterator[list[int]]:
    """All paths up to ``max_len`` edges satisfying the interior conditions of ``kind``."""
    F = tp.incident
    cls = tp.class_of_edge
    min_len = 1 if kind == TYPE_I else 3

    def grow(path: list[int], on: set[int]):
        if len(path) - 1 >= min_len:
            yield path
        if len(path) - 1 == max_len:
            return
        for w in g.adjacency[path[-1]]:
            if w not in on and _local_ok(kind, path, w, cls, F):
                on.add(w)
                yield from grow(path + [w], on)
                on.discard(w)

    for s in range(g.n):
        yield from grow([s], {s})


def non_geodesic_typed_paths(
    g: Graph,
    d: DistanceMatrix,
    tp: ThetaPartition,
    kind: str,
    max_len: int = 6,
    exhaustive_bound: int = 200,
    samples: int = 200,
    seed: int = 0,
) -> tuple[int, list[tuple[int, ...]]]:
    """Check that every path of the given type is a geodesic.

    Paths up to ``max_len`` edges are enumerated exhaustively on graphs with
    at most ``exhaustive_bound`` vertices; seeded random self-avoiding walks
    restricted to the type's interior conditions probe longer paths.
    Returns ``(paths checked, counterexamples)``.
    """
    test = is_type_one_path if kind == TYPE_I else is_type_two_path
    rows = d.rows
    checked = 0
    bad: list[tuple[int, ...]] = []

    def check(p: list[int]) -> None:
        nonlocal checked
        if test(g, tp, p):
            checked += 1
            if rows[p[0]][p[-1]] != len(p) - 1:
                bad.append(tuple(p))

    if g.n <= exhaustive_bound:
        for p in iter_candidate_paths(g, tp, kind, max_len):
            check(p)
    F = tp.incident
    cls = tp.class_of_edge
    rng = random.Random(seed)
    limit = 2 * (d.diameter + 1)
    min_len = 1 if kind == TYPE_I else 3
    for _ in range(samples if g.n else 0):
        p = [rng.randrange(g.n)]
        on = {p[0]}
        while len(p) - 1 < limit:
            nxt = [w for w in g.adjacency[p[-1]] if w not in on and _local_ok(kind, p, w, cls, F)]
            if not nxt:
                break
            w = rng.choice(nxt)
            p.append(w)
            on.add(w)
            if len(p) - 1 > max_len or (g.n > exhaustive_bound and len(p) - 1 >= min_len):
                check(p)
    return checked, bad
