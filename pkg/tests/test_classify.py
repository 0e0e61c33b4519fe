import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cubekit.classify import (
    DOUBLED_ODD,
    EVEN_CYCLE,
    EXCLUDED,
    HYPERCUBE,
    MIXED_CYCLE_LENGTHS,
    NEITHER,
    NO_CYCLES,
    NOT_PARTIAL_CUBE,
    NOT_REGULAR,
    TRIVIAL_K1_K2,
    TYPE_I,
    TYPE_II,
    classify,
    every_3path_in_6cycle,
    is_type_one_path,
    is_type_two_path,
    iter_candidate_paths,
    non_geodesic_typed_paths,
    path_witness,
    verify_isomorphism,
)
from cubekit.errors import NotAPathError, PathTooShortError, SizeBoundExceeded
from cubekit.families import build_family, cycle, doubled_odd, grid, hypercube, path
from cubekit.graph import Graph, all_pairs_distances, from_edge_list
from cubekit.theta import is_partial_cube

from conftest import q4_induced, to_nx


@pytest.mark.parametrize(
    "spec, label",
    [
        ("Q:2", "HYPERCUBE(2)"),
        ("Q:5", "HYPERCUBE(5)"),
        ("KB:2,2", "HYPERCUBE(2)"),
        ("C:6", "DOUBLED_ODD(2)"),
        ("DO:3", "DOUBLED_ODD(3)"),
        ("C:12", "EVEN_CYCLE(6)"),
        ("C:20", "EVEN_CYCLE(10)"),
        ("GRID:3x3", "EXCLUDED(NOT_REGULAR)"),
        ("Q:1", "EXCLUDED(TRIVIAL_K1_K2)"),
        ("Q:0", "EXCLUDED(TRIVIAL_K1_K2)"),
        ("KB:2,3", "EXCLUDED(NOT_PARTIAL_CUBE)"),
        ("C:5", "EXCLUDED(NOT_PARTIAL_CUBE)"),
        ("PROD(C:6,C:6)", "EXCLUDED(MIXED_CYCLE_LENGTHS)"),
    ],
)
def test_labels(spec, label):
    assert classify(build_family(spec)).label == label


def test_no_cycles_needs_regular_tree():
    # only K_1 and K_2 are regular trees, so NO_CYCLES is reached by no
    # connected partial cube; a perfect matching is not connected
    assert classify(path(2)).reason == TRIVIAL_K1_K2
    assert NO_CYCLES != MIXED_CYCLE_LENGTHS


def test_hypercube_certificate():
    c = classify(hypercube(4))
    assert c.outcome == HYPERCUBE and c.labeling.width == 4
    assert sorted(c.labeling.labels) == list(range(16))


def test_doubled_odd_certified():
    c = classify(doubled_odd(4), certify=True)
    assert (c.outcome, c.parameter) == (DOUBLED_ODD, 4)
    g, h = doubled_odd(4), doubled_odd(4)
    iso = c.isomorphism
    assert sorted(iso.values()) == list(range(g.n))
    assert all(h.has_edge(iso[u], iso[v]) for u, v in g.edges)


def test_six_cycle_note():
    c = classify(cycle(6), certify=True)
    assert c.notes and c.isomorphism is not None


def test_excluded_outcomes_carry_reason():
    c = classify(grid(2, 3))
    assert c.outcome == EXCLUDED and c.reason == NOT_REGULAR and c.idim == 3
    c = classify(build_family("KB:3,3"))
    assert c.reason == NOT_PARTIAL_CUBE and c.notes == ["THETA_NOT_TRANSITIVE"]


def test_isomorphism_against_networkx():
    assert verify_isomorphism(doubled_odd(3), build_family("DO:3")) is not None
    assert verify_isomorphism(cycle(8), grid(2, 4)) is None
    assert verify_isomorphism(build_family("PROD(P:2,C:6)"), build_family("PROD(C:6,P:2)")) is not None
    big = from_edge_list([(0, 1)], vertex_count=2001)
    with pytest.raises(SizeBoundExceeded):
        verify_isomorphism(big, big)


@settings(max_examples=60, deadline=None)
@given(st.integers(1, (1 << 16) - 1), st.permutations(range(16)))
def test_isomorphism_matches_networkx(mask, perm):
    g = q4_induced(mask)
    relabelled = from_edge_list([(perm[u], perm[v]) for u, v in g.edges], vertex_count=16)
    other = q4_induced(mask ^ 1 if mask ^ 1 else mask)
    for h in (relabelled, other):
        g16 = from_edge_list(g.edges, vertex_count=16) if g.n < 16 and h.n == 16 else g
        iso = verify_isomorphism(g16, h)
        assert (iso is not None) == nx.is_isomorphic(to_nx(g16), to_nx(h))
        if iso is not None:
            assert all(h.has_edge(iso[u], iso[v]) for u, v in g16.edges)


def test_every_3path_in_6cycle():
    assert every_3path_in_6cycle(doubled_odd(3))
    v = every_3path_in_6cycle(cycle(8))
    assert not v and len(v.witness) == 4


def test_path_type_errors():
    g = hypercube(3)
    tp = is_partial_cube(g).partition
    with pytest.raises(PathTooShortError):
        is_type_two_path(g, tp, [0, 1, 3])
    with pytest.raises(NotAPathError):
        is_type_one_path(g, tp, [0, 3])
    with pytest.raises(NotAPathError):
        is_type_one_path(g, tp, [0, 1, 0])


def test_path_types_on_grid():
    g = grid(3, 3)  # vertex a*3+b
    tp = is_partial_cube(g).partition
    # corner endpoints see no class their neighbour lacks
    assert is_type_one_path(g, tp, [0, 1, 2]).witness == ("start", 0)
    assert not any(is_type_one_path(g, tp, p) for p in iter_candidate_paths(g, tp, TYPE_I, 6))
    g5 = grid(5, 5)
    t5 = is_partial_cube(g5).partition
    assert is_type_one_path(g5, t5, [1, 2, 3])
    stair = path_witness(g, tp, [0, 1, 4, 5, 8])
    assert stair.types == (TYPE_II,)
    around = path_witness(g, tp, [0, 1, 4, 3])
    assert around.tag == NEITHER and around.failing is not None


def test_type_one_single_edges():
    g = cycle(8)
    tp = is_partial_cube(g).partition
    assert all(is_type_one_path(g, tp, e) for e in g.edges)
    q = hypercube(3)
    tq = is_partial_cube(q).partition
    assert not any(is_type_one_path(q, tq, e) for e in q.edges)


def test_type_two_on_cycles():
    g = cycle(6)
    tp = is_partial_cube(g).partition
    assert is_type_two_path(g, tp, [0, 1, 2, 3]).witness == ("class_two_ahead", 1)
    g = cycle(12)
    tp = is_partial_cube(g).partition
    assert all(is_type_two_path(g, tp, [(s + i) % 12 for i in range(4)]) for s in range(12))
    q = hypercube(3)
    assert not is_type_two_path(q, is_partial_cube(q).partition, [0, 1, 3, 7])


def test_no_type_two_paths_in_doubled_odd():
    # every 3-path closes into a 6-cycle, so no path qualifies
    g = doubled_odd(3)
    tp = is_partial_cube(g).partition
    assert list(iter_candidate_paths(g, tp, TYPE_II, 5)) == []


def test_type_two_paths_geodesic_on_benzenoid(naphthalene):
    pc = is_partial_cube(naphthalene)
    checked, bad = non_geodesic_typed_paths(naphthalene, pc.distances, pc.partition, TYPE_II, max_len=8)
    assert checked > 0 and bad == []


@pytest.mark.parametrize("spec", ["GRID:3x4", "GRID:4x4", "P:5", "PROD(P:5,P:2)"])
def test_type_one_paths_geodesic(spec):
    g = build_family(spec)
    pc = is_partial_cube(g)
    checked, bad = non_geodesic_typed_paths(g, pc.distances, pc.partition, TYPE_I)
    assert checked > 0 and bad == []


def test_type_one_paths_geodesic_on_tree():
    spider = from_edge_list([(0, 1), (1, 2), (2, 3), (0, 4), (4, 5), (0, 6), (6, 7), (7, 8)])
    pc = is_partial_cube(spider)
    checked, bad = non_geodesic_typed_paths(spider, pc.distances, pc.partition, TYPE_I)
    assert checked > 0 and bad == []


def test_candidate_paths_satisfy_type(naphthalene):
    tp = is_partial_cube(naphthalene).partition
    paths = list(iter_candidate_paths(naphthalene, tp, TYPE_II, 6))
    assert paths
    assert all(is_type_two_path(naphthalene, tp, p) for p in paths)
    g = grid(4, 4)
    tp = is_partial_cube(g).partition
    # candidates obey the interior conditions; endpoints are checked afterwards
    found = {tuple(p) for p in iter_candidate_paths(g, tp, TYPE_I, 3)}
    every = {tuple(p) for p in _all_paths(g, 3) if is_type_one_path(g, tp, p)}
    assert every and every <= found


def _all_paths(g: Graph, max_len: int):
    def grow(p):
        if len(p) > 1:
            yield p
        if len(p) - 1 < max_len:
            for w in g.adjacency[p[-1]]:
                if w not in p:
                    yield from grow(p + [w])

    for s in range(g.n):
        yield from grow([s])
