"""Deterministic generators for the graph families used throughout the toolkit.

Family specs have a short textual form used on the command line::

    Q:4  DO:3  C:10  P:5  GRID:3x4  KB:2,3  Q3MINUS  PROD(Q:2,C:6)
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import reduce
from itertools import combinations

from .errors import ParamRangeError, ParseError
from .graph import DESK_SCALE_BOUND, Graph, cartesian_product, from_edge_list, induced_subgraph


def _check(cond: bool, msg: str) -> None:
    if not cond:
        raise ParamRangeError(msg)


def hypercube(n: int) -> Graph:
    _check(0 <= n <= 16, f"hypercube dimension {n} outside 0..16")
    pairs = [(x, x ^ (1 << i)) for x in range(1 << n) for i in range(n) if not x >> i & 1]
    names = [format(x, f"0{n}b") if n else "()" for x in range(1 << n)]
    return from_edge_list(pairs, vertex_count=1 << n, names=names)


def _colex_key(s: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(sorted(s, reverse=True))


def _subset_name(s: tuple[int, ...]) -> str:
    return "{" + ",".join(map(str, s)) + "}"


def doubled_odd(k: int) -> Graph:
    """Bipartite containment graph between (k-1)- and k-subsets of {1..2k-1}."""
    _check(1 <= k <= 8, f"doubled odd parameter {k} outside 1..8")
    ground = range(1, 2 * k)
    lower = sorted(combinations(ground, k - 1), key=_colex_key)
    upper = sorted(combinations(ground, k), key=_colex_key)
    index = {s: i for i, s in enumerate(lower)}
    offset = len(lower)
    pairs = []
    for j, t in enumerate(upper):
        for x in t:
            pairs.append((index[tuple(y for y in t if y != x)], offset + j))
    names = [_subset_name(s) for s in lower + upper]
    return from_edge_list(pairs, vertex_count=offset + len(upper), names=names)


def cycle(m: int) -> Graph:
    _check(3 <= m <= 2 * 10**5, f"cycle length {m} outside 3..200000")
    return from_edge_list([(i, (i + 1) % m) for i in range(m)], vertex_count=m)


def even_cycle(n: int) -> Graph:
    """The cycle on ``2n`` vertices."""
    _check(2 <= n <= 10**5, f"even cycle parameter {n} outside 2..100000")
    return cycle(2 * n)


def path(n: int) -> Graph:
    """Path on ``n`` vertices."""
    _check(1 <= n <= DESK_SCALE_BOUND, f"path order {n} outside 1..{DESK_SCALE_BOUND}")
    return from_edge_list([(i, i + 1) for i in range(n - 1)], vertex_count=n)


def grid(m: int, n: int) -> Graph:
    _check(m >= 1 and n >= 1 and m * n <= DESK_SCALE_BOUND, f"grid {m}x{n} out of range")
    return cartesian_product(path(m), path(n))


def complete_bipartite(a: int, b: int) -> Graph:
    _check(a >= 1 and b >= 1 and a + b <= DESK_SCALE_BOUND, f"K_{{{a},{b}}} out of range")
    return from_edge_list([(i, a + j) for i in range(a) for j in range(b)], vertex_count=a + b)


def q3_minus() -> Graph:
    """The 3-cube with vertex 111 removed."""
    g, _ = induced_subgraph(hypercube(3), range(7))
    return g


@dataclass(frozen=True)
class FamilySpec:
    tag: str
    params: tuple[int, ...] = ()
    factors: tuple["FamilySpec", ...] = ()

    def build(self) -> Graph:
        p = self.params
        if self.tag == "Q":
            return hypercube(*p)
        if self.tag == "DO":
            return doubled_odd(*p)
        if self.tag == "C":
            return cycle(*p)
        if self.tag == "P":
            return path(*p)
        if self.tag == "GRID":
            return grid(*p)
        if self.tag == "KB":
            return complete_bipartite(*p)
        if self.tag == "Q3MINUS":
            return q3_minus()
        if self.tag == "PROD":
            size = 1
            for f in self.factors:
                size *= f.build().n
            _check(size <= DESK_SCALE_BOUND, f"product with {size} vertices exceeds desk scale")
            return reduce(cartesian_product, (f.build() for f in self.factors))
        raise ParamRangeError(f"unknown family {self.tag}")

    def __str__(self) -> str:
        if self.tag == "Q3MINUS":
            return "Q3MINUS"
        if self.tag == "GRID":
            return f"GRID:{self.params[0]}x{self.params[1]}"
        if self.tag == "PROD":
            return "PROD(" + ",".join(map(str, self.factors)) + ")"
        return f"{self.tag}:" + ",".join(map(str, self.params))


_ATOM = re.compile(r"(Q|DO|C|P|KB|GRID):(\d+)(?:([,x])(\d+))?|Q3MINUS")


def parse_family(text: str) -> FamilySpec:
    spec, pos = _parse(text.strip(), 0)
    if pos != len(text.strip()):
        raise ParseError(f"unexpected trailing input in family spec {text!r}", line=1, column=pos + 1)
    return spec


def _parse(text: str, pos: int) -> tuple[FamilySpec, int]:
    if text.startswith("PROD(", pos):
        pos += 5
        factors = []
        while True:
            f, pos = _parse(text, pos)
            factors.append(f)
            if pos < len(text) and text[pos] == ",":
                pos += 1
                continue
            if pos < len(text) and text[pos] == ")":
                pos += 1
                break
            raise ParseError("expected ',' or ')' in PROD(...)", line=1, column=pos + 1)
        if len(factors) < 2:
            raise ParseError("PROD needs at least two factors", line=1, column=pos)
        return FamilySpec("PROD", (), tuple(factors)), pos
    m = _ATOM.match(text, pos)
    if not m:
        raise ParseError(f"cannot parse family spec at {text[pos:]!r}", line=1, column=pos + 1)
    if m.group(0) == "Q3MINUS":
        return FamilySpec("Q3MINUS"), m.end()
    tag, a, sep, b = m.groups()
    wants = {"Q": None, "DO": None, "C": None, "P": None, "KB": ",", "GRID": "x"}[tag]
    if sep != wants:
        raise ParseError(f"malformed parameters for {tag}", line=1, column=pos + 1)
    params = (int(a),) if b is None else (int(a), int(b))
    return FamilySpec(tag, params), m.end()


def build_family(text: str) -> Graph:
    return parse_family(text).build()


SMALL_SPECS = (
    "Q:0", "Q:1", "Q:2", "Q:3", "Q:4",
    "DO:1", "DO:2", "DO:3",
    "C:4", "C:6", "C:8", "C:10", "C:12",
    "P:2", "P:3", "P:5",
    "GRID:2x3", "GRID:2x4", "GRID:3x3", "GRID:3x4", "GRID:4x4",
    "Q3MINUS",
    "KB:1,3", "KB:2,2",
    "PROD(P:2,C:6)", "PROD(P:3,C:6)", "PROD(C:4,C:6)", "PROD(P:3,Q:2)",
    # designated negatives
    "KB:2,3", "KB:3,3", "C:5",
)

FULL_EXTRA_SPECS = (
    "Q:5", "Q:6", "Q:7", "Q:8",
    "DO:4",
    "C:14", "C:16", "C:18", "C:20",
    "GRID:5x5", "PROD(C:6,C:6)", "PROD(C:8,P:2)", "PROD(DO:3,P:2)",
)

NEGATIVE_SPECS = frozenset({"KB:2,3", "KB:3,3", "C:5"})


def corpus(profile: str = "SMALL") -> list[tuple[str, Graph]]:
    profile = profile.upper()
    if profile not in ("SMALL", "FULL"):
        raise ParamRangeError(f"unknown corpus profile {profile}")
    specs = SMALL_SPECS + (FULL_EXTRA_SPECS if profile == "FULL" else ())
    return [(s, build_family(s)) for s in specs]
