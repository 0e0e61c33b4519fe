"""Djoković–Winkler relation, Θ-classes, half-spaces and hypercube labelings."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import NamedTuple

import numpy as np

from .errors import LabelingNotIsometric, NotAnEdgeError, NotConnectedError, NotPartialCubeError
from .graph import DistanceMatrix, Graph, all_pairs_distances, is_bipartite, is_connected

NOT_CONNECTED = "NOT_CONNECTED"
NOT_BIPARTITE = "NOT_BIPARTITE"
THETA_NOT_TRANSITIVE = "THETA_NOT_TRANSITIVE"
LABELING_NOT_ISOMETRIC = "LABELING_NOT_ISOMETRIC"


class ThetaNotTransitive(NotPartialCubeError):
    """Carries an edge triple ``(e, f, h)`` with e Θ f, f Θ h but not e Θ h."""

    def __init__(self, triple):
        super().__init__(f"Θ is not transitive on edges {triple}", triple=triple)
        self.triple = triple


@dataclass(frozen=True, eq=False)
class ThetaPartition:
    graph: Graph
    class_of: tuple[int, ...]
    classes: tuple[tuple[int, ...], ...]

    @property
    def class_count(self) -> int:
        return len(self.classes)

    def class_of_edge(self, u: int, v: int) -> int:
        try:
            return self.class_of[self.graph.edge_index[u, v]]
        except KeyError:
            raise NotAnEdgeError(f"({u}, {v}) is not an edge") from None

    @cached_property
    def incident(self) -> tuple[frozenset[int], ...]:
        fam: list[set[int]] = [set() for _ in range(self.graph.n)]
        for i, (u, v) in enumerate(self.graph.edges):
            fam[u].add(self.class_of[i])
            fam[v].add(self.class_of[i])
        return tuple(frozenset(s) for s in fam)


class HalfSpaces(NamedTuple):
    W_uv: frozenset[int]
    W_vu: frozenset[int]
    U_uv: frozenset[int]
    U_vu: frozenset[int]


@dataclass(frozen=True, eq=False)
class HypercubeLabeling:
    """Vertex labels as integers; bit ``i`` is the coordinate of Θ-class ``i``.

    ``one_side[i]`` is the endpoint of the class representative edge whose
    side carries bit value 1.
    """

    labels: tuple[int, ...]
    width: int
    one_side: tuple[int, ...]

    @property
    def class_bit(self) -> tuple[int, ...]:
        return tuple(range(self.width))

    def bits(self, v: int) -> str:
        x = self.labels[v]
        return "".join("1" if x >> i & 1 else "0" for i in range(self.width))

    def as_strings(self) -> list[str]:
        return [self.bits(v) for v in range(len(self.labels))]


def _endpoints(g: Graph) -> tuple[np.ndarray, np.ndarray]:
    arr = np.array(g.edges, dtype=np.int64).reshape(-1, 2)
    return arr[:, 0], arr[:, 1]


def _theta_rows(d: DistanceMatrix, U: np.ndarray, V: np.ndarray, idx) -> np.ndarray:
    # e=uv Θ f=xy  <=>  d(u,x) - d(v,x) != d(u,y) - d(v,y)
    diff = d.table[U[idx]] - d.table[V[idx]]
    return diff[..., U] != diff[..., V]


def _edge_id(g: Graph, e) -> int:
    try:
        return g.edge_index[tuple(e)]
    except KeyError:
        raise NotAnEdgeError(f"{tuple(e)} is not an edge") from None


def theta_related(g: Graph, d: DistanceMatrix, e, f) -> bool:
    _edge_id(g, e)
    _edge_id(g, f)
    (u, v), (x, y) = e, f
    return d(u, x) + d(v, y) != d(u, y) + d(v, x)


def theta_partition(g: Graph, d: DistanceMatrix, strict: bool = True) -> ThetaPartition:
    """Θ-classes by cut propagation from each unassigned edge.

    With ``strict`` every member row is compared against its class
    representative, so a failure of transitivity raises ``ThetaNotTransitive``
    with an explicit edge triple. Without it, the rows of representatives
    are taken as classes, which is only meaningful for partial cubes.
    """
    if not d.connected:
        raise NotConnectedError("Θ-classes need a connected graph")
    m = g.edge_count
    U, V = _endpoints(g)
    class_of = np.full(m, -1, dtype=np.int64)
    classes = []
    for e in range(m):
        if class_of[e] >= 0:
            continue
        row = _theta_rows(d, U, V, e)
        if strict:
            members = np.flatnonzero(row)
            block = _theta_rows(d, U, V, members)
            bad = np.flatnonzero((block != row).any(axis=1))
            if bad.size:
                f = int(members[bad[0]])
                h = int(np.flatnonzero(block[bad[0]] != row)[0])
                triple = (e, f, h) if block[bad[0], h] else (f, e, h)
                raise ThetaNotTransitive(tuple(g.edges[i] for i in triple))
        members = np.flatnonzero(row & (class_of < 0))
        class_of[members] = len(classes)
        classes.append(tuple(int(i) for i in members))
    return ThetaPartition(g, tuple(int(c) for c in class_of), tuple(classes))


def labeling(g: Graph, d: DistanceMatrix, tp: ThetaPartition, verify: bool = True) -> HypercubeLabeling:
    """Bit ``i`` is 1 exactly on the side of class ``i`` not containing vertex 0."""
    labels = np.zeros(g.n, dtype=object)
    one_side = []
    bitmat = np.zeros((g.n, tp.class_count), dtype=np.int64)
    for i, members in enumerate(tp.classes):
        u, v = g.edges[members[0]]
        side_u = d.table[u] < d.table[v]
        ones = ~side_u if side_u[0] else side_u
        one_side.append(v if side_u[0] else u)
        bitmat[:, i] = ones
    for x in range(g.n):
        labels[x] = sum(1 << i for i in np.flatnonzero(bitmat[x]))
    result = HypercubeLabeling(tuple(int(x) for x in labels), tp.class_count, tuple(one_side))
    if verify:
        bad = _isometry_violation(d, bitmat)
        if bad is not None:
            raise LabelingNotIsometric(f"Hamming distance differs from graph distance at {bad}", pair=bad)
    return result


def _isometry_violation(d: DistanceMatrix, bitmat: np.ndarray):
    ham = bitmat @ (1 - bitmat).T + (1 - bitmat) @ bitmat.T
    wrong = np.argwhere(ham != d.table)
    if wrong.size:
        return tuple(int(x) for x in wrong[0])
    return None


def label_bit_matrix(lab: HypercubeLabeling) -> np.ndarray:
    return np.array(
        [[x >> i & 1 for i in range(lab.width)] for x in lab.labels], dtype=np.int64
    ).reshape(len(lab.labels), lab.width)


def is_isometric_labeling(d: DistanceMatrix, lab: HypercubeLabeling) -> bool:
    return _isometry_violation(d, label_bit_matrix(lab)) is None


def isometric_dimension(tp: ThetaPartition) -> int:
    return tp.class_count


def incident_classes(tp: ThetaPartition, v: int) -> frozenset[int]:
    return tp.incident[v]


def halfspaces(g: Graph, d: DistanceMatrix, e) -> HalfSpaces:
    u, v = e
    idx = _edge_id(g, e)
    U, V = _endpoints(g)
    row = _theta_rows(d, U, V, idx)
    w_uv = d.table[u] < d.table[v]
    w_vu = d.table[v] < d.table[u]
    touched = np.zeros(g.n, dtype=bool)
    touched[U[row]] = True
    touched[V[row]] = True
    as_set = lambda mask: frozenset(int(x) for x in np.flatnonzero(mask))  # noqa: E731
    return HalfSpaces(as_set(w_uv), as_set(w_vu), as_set(w_uv & touched), as_set(w_vu & touched))


@dataclass(frozen=True, eq=False)
class PartialCubeResult:
    is_partial_cube: bool
    reason: str | None = None
    witness: object = None
    distances: DistanceMatrix | None = None
    partition: ThetaPartition | None = None
    labeling: HypercubeLabeling | None = None

    def __bool__(self) -> bool:
        return self.is_partial_cube


def is_partial_cube(g: Graph, d: DistanceMatrix | None = None) -> PartialCubeResult:
    """Winkler recognition with a self-checked embedding as certificate."""
    if not is_connected(g):
        return PartialCubeResult(False, NOT_CONNECTED)
    bip = is_bipartite(g)
    if not bip:
        return PartialCubeResult(False, NOT_BIPARTITE, witness=bip.odd_cycle)
    if d is None:
        d = all_pairs_distances(g)
    try:
        tp = theta_partition(g, d, strict=True)
    except ThetaNotTransitive as exc:
        return PartialCubeResult(False, THETA_NOT_TRANSITIVE, witness=exc.triple, distances=d)
    try:
        lab = labeling(g, d, tp, verify=True)
    except LabelingNotIsometric as exc:
        return PartialCubeResult(
            False, LABELING_NOT_ISOMETRIC, witness=exc.details.get("pair"), distances=d, partition=tp
        )
    return PartialCubeResult(True, distances=d, partition=tp, labeling=lab)


def require_partial_cube(g: Graph) -> PartialCubeResult:
    res = is_partial_cube(g)
    if not res:
        raise NotPartialCubeError(f"not a partial cube ({res.reason})", reason=res.reason)
    return res
