"""Per-graph property sweep run by ``cubekit corpus``.

Each check returns True, False, or None when its hypothesis does not apply
to the graph at hand. Any False is a violation.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from typing import Any

import numpy as np

from .classes import class_report, is_median_via_halfspaces
from .classify import (
    DOUBLED_ODD,
    EVEN_CYCLE,
    HYPERCUBE,
    TYPE_I,
    TYPE_II,
    classify,
    every_3path_in_6cycle,
    non_geodesic_typed_paths,
    verify_isomorphism,
)
from .convexity import (
    enumerate_convex_cycles,
    enumerate_convex_cycles_bruteforce,
    oracle_bound,
)
from .errors import InternalTheoremViolation
from .families import NEGATIVE_SPECS, corpus, doubled_odd, parse_family
from .graph import INFINITE, Graph, bfs, degree_profile, girth
from .theta import is_isometric_labeling, is_partial_cube


def cycles_of_length(g: Graph, length: int) -> list[tuple[int, ...]]:
    """All cycles with exactly ``length`` vertices, each reported once."""
    out = []
    adj = g.adjacency

    def grow(path, on):
        s, last = path[0], path[-1]
        if len(path) == length:
            if s in g.neighbor_sets[last] and path[1] < last:
                out.append(tuple(path))
            return
        for w in adj[last]:
            if w > s and w not in on:
                on.add(w)
                path.append(w)
                grow(path, on)
                path.pop()
                on.discard(w)

    for s in range(g.n):
        grow([s], {s})
    return out


def _expected_outcome(name: str) -> tuple[str, int] | None:
    spec = parse_family(name)
    if spec.tag == "Q" and spec.params[0] >= 2:
        return HYPERCUBE, spec.params[0]
    if spec.tag == "DO" and spec.params[0] >= 2:
        return DOUBLED_ODD, spec.params[0]
    if spec.tag == "C" and spec.params[0] % 2 == 0:
        m = spec.params[0]
        return {4: (HYPERCUBE, 2), 6: (DOUBLED_ODD, 2)}.get(m, (EVEN_CYCLE, m // 2))
    if spec.tag == "KB" and spec.params == (2, 2):
        return HYPERCUBE, 2
    return None


def _halfspace_cut_ok(g: Graph, d, tp) -> bool:
    t = d.table
    for members in tp.classes:
        u, v = g.edges[members[0]]
        side = t[u] < t[v]
        cut = set(members)
        for s in (set(np.flatnonzero(side).tolist()), set(np.flatnonzero(~side).tolist())):
            start = next(iter(s))
            reach = bfs(g, start, allowed=s)
            if any(reach[x] < 0 for x in s):
                return False
        for i, (x, y) in enumerate(g.edges):
            if (side[x] != side[y]) != (i in cut):
                return False
    return True


def _cycle_classes_ok(ccs) -> bool:
    for c in ccs.cycles:
        k = c.length // 2
        cls = c.classes
        if len(set(cls)) != k:
            return False
        if any(cls[i] != cls[i + k] for i in range(k)):
            return False
    return True


def check_graph(name: str, g: Graph, seed: int = 0) -> dict[str, Any]:
    checks: dict[str, bool | None] = {}
    summary: dict[str, Any] = {"vertices": g.n, "edges": g.edge_count}
    g_girth = girth(g)
    summary["girth"] = None if g_girth == INFINITE else int(g_girth)
    prof = degree_profile(g)
    summary["regular_degree"] = prof.k

    pc = is_partial_cube(g)
    summary["partial_cube"] = pc.is_partial_cube
    checks["recognition_matches_family"] = pc.is_partial_cube == (name not in NEGATIVE_SPECS)
    if not pc:
        summary["rejection"] = pc.reason
        checks["median_implies_partial_cube"] = None
    d, tp = pc.distances, pc.partition

    if d is not None:
        checks["distances_match_bfs"] = all(bfs(g, s) == d.rows[s] for s in range(g.n))

    try:
        rep = class_report(g, seed=seed)
        checks["class_chain"] = True
    except InternalTheoremViolation as exc:
        rep = exc.details["report"]
        checks["class_chain"] = False
    summary["classes"] = rep.flags()
    summary["median_mode"] = rep.median_mode
    if not pc:
        checks["median_implies_partial_cube"] = not rep.is_median

    outcome = classify(g, certify=True) if g.n <= 2000 else None
    summary["classification"] = outcome.label if outcome else None
    expected = _expected_outcome(name)
    checks["classification_matches_family"] = (
        None if expected is None else (outcome.outcome, outcome.parameter) == expected
    )

    if pc:
        summary["idim"] = tp.class_count
        checks["labeling_isometric"] = is_isometric_labeling(d, pc.labeling)
        checks["incident_family_is_degree"] = all(
            len(tp.incident[v]) == g.degree(v) for v in range(g.n)
        )
        checks["adjacent_edges_not_theta"] = all(
            len({tp.class_of_edge(v, w) for w in g.adjacency[v]}) == g.degree(v) for v in range(g.n)
        )
        checks["halfspace_cuts"] = _halfspace_cut_ok(g, d, tp)

        ccs = enumerate_convex_cycles(g, d, tp)
        summary["spectrum"] = {str(k): v for k, v in ccs.length_spectrum.items()}
        if g.n <= oracle_bound():
            oracle = enumerate_convex_cycles_bruteforce(g, d)
            checks["oracle_equivalence"] = oracle.vertex_sets() == ccs.vertex_sets()
        else:
            checks["oracle_equivalence"] = None
        checks["convex_cycle_classes"] = _cycle_classes_ok(ccs)
        if g_girth != INFINITE:
            shortest = {tuple(sorted(c)) for c in cycles_of_length(g, int(g_girth))}
            convex = {tuple(sorted(c.vertices)) for c in ccs.cycles}
            checks["shortest_cycles_convex"] = shortest <= convex
        else:
            checks["shortest_cycles_convex"] = None

        checks["almost_median_agreement"] = rep.is_almost_median == rep.is_almost_median_via_cycles
        if rep.median_mode == "exact":
            checks["median_halfspace_agreement"] = rep.is_median == bool(is_median_via_halfspaces(g, d, tp))
        else:
            checks["median_halfspace_agreement"] = None

        nontrivial_regular = prof.is_regular and g.n > 2
        is_hyper = outcome is not None and outcome.outcome == HYPERCUBE
        checks["regular_almost_median_is_hypercube"] = (
            nontrivial_regular and rep.is_almost_median
        ) == is_hyper
        checks["hypercube_families_equal"] = (
            len(set(tp.incident)) == 1 if is_hyper else None
        )
        if nontrivial_regular and g_girth != INFINITE and g_girth > 6:
            checks["large_girth_is_even_cycle"] = outcome.outcome == EVEN_CYCLE
        else:
            checks["large_girth_is_even_cycle"] = None
        if nontrivial_regular and g_girth == 6:
            a = ccs.uniform_length == 6
            b = bool(every_3path_in_6cycle(g))
            c = prof.k <= 8 and verify_isomorphism(g, doubled_odd(prof.k), dg=d) is not None
            checks["girth6_equivalence"] = a == b == c
        else:
            checks["girth6_equivalence"] = None

        all4 = all(c.length == 4 for c in ccs.cycles)
        all6 = bool(ccs.cycles) and all(c.length == 6 for c in ccs.cycles)
        if all4:
            n_checked, bad = non_geodesic_typed_paths(g, d, tp, TYPE_I, seed=seed)
            summary["type_one_paths_checked"] = n_checked
            checks["type_one_paths_geodesic"] = not bad
        else:
            checks["type_one_paths_geodesic"] = None
        if all6:
            n_checked, bad = non_geodesic_typed_paths(g, d, tp, TYPE_II, seed=seed)
            summary["type_two_paths_checked"] = n_checked
            checks["type_two_paths_geodesic"] = not bad
        else:
            checks["type_two_paths_geodesic"] = None

    violations = sorted(k for k, v in checks.items() if v is False)
    return {
        "name": name,
        "summary": summary,
        "checks": dict(sorted(checks.items())),
        "violations": violations,
    }


def _check_named(args) -> dict[str, Any]:
    name, seed = args
    from .families import build_family

    return check_graph(name, build_family(name), seed)


def run_corpus(profile: str = "SMALL", seed: int = 0, jobs: int = 1) -> list[dict[str, Any]]:
    names = [name for name, _ in corpus(profile)]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(_check_named, [(n, seed) for n in names]))
    return [_check_named((n, seed)) for n in names]
