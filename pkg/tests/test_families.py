from math import comb

import networkx as nx
import pytest

from cubekit.errors import ParamRangeError, ParseError
from cubekit.families import (
    FULL_EXTRA_SPECS,
    SMALL_SPECS,
    build_family,
    corpus,
    doubled_odd,
    even_cycle,
    hypercube,
    parse_family,
    q3_minus,
)
from cubekit.graph import degree_profile, girth

from conftest import to_nx


@pytest.mark.parametrize("n", range(0, 7))
def test_hypercube_matches_networkx(n):
    g = hypercube(n)
    assert g.n == 2**n and g.edge_count == n * 2 ** max(n - 1, 0)
    if n:
        assert nx.is_isomorphic(to_nx(g), nx.hypercube_graph(n))


@pytest.mark.parametrize("k", range(1, 6))
def test_doubled_odd_counts(k):
    g = doubled_odd(k)
    assert g.n == 2 * comb(2 * k - 1, k)
    assert degree_profile(g).k == k
    if k >= 2:
        assert girth(g) == 6


def test_desargues():
    g = doubled_odd(3)
    assert (g.n, g.edge_count, girth(g)) == (20, 30, 6)
    assert nx.is_isomorphic(to_nx(g), nx.desargues_graph())
    assert g.name(0) == "{1,2}"


def test_small_members():
    assert nx.is_isomorphic(to_nx(doubled_odd(2)), nx.cycle_graph(6))
    assert nx.is_isomorphic(to_nx(even_cycle(5)), nx.cycle_graph(10))
    q = q3_minus()
    assert (q.n, q.edge_count) == (7, 9)
    assert hypercube(3).name(5) == "101"


@pytest.mark.parametrize(
    "text, canonical",
    [("Q:3", "Q:3"), ("GRID:3x4", "GRID:3x4"), ("KB:2,3", "KB:2,3"), ("PROD(P:2,PROD(C:4,C:6))", "PROD(P:2,PROD(C:4,C:6))"),
     (" Q3MINUS ", "Q3MINUS")],
)
def test_parse_round_trip(text, canonical):
    assert str(parse_family(text)) == canonical


@pytest.mark.parametrize("bad", ["Q", "Q:x", "GRID:3,4", "KB:2x3", "PROD(Q:2)", "PROD(Q:2,C:4", "Q:3 junk", "Z:1"])
def test_parse_errors(bad):
    with pytest.raises(ParseError):
        parse_family(bad)


@pytest.mark.parametrize("bad", ["Q:17", "DO:0", "DO:9", "C:2", "P:0", "GRID:0x3"])
def test_param_range(bad):
    with pytest.raises(ParamRangeError):
        build_family(bad)


def test_product_size_guard():
    with pytest.raises(ParamRangeError):
        build_family("PROD(Q:8,Q:4)")


def test_corpus_profiles():
    small = [name for name, _ in corpus("SMALL")]
    full = [name for name, _ in corpus("full")]
    assert small == list(SMALL_SPECS)
    assert full == list(SMALL_SPECS + FULL_EXTRA_SPECS)
    with pytest.raises(ParamRangeError):
        corpus("HUGE")
