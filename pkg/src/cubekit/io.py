"""graph6 and plain edge-list readers/writers."""

from __future__ import annotations

from pathlib import Path

from .errors import ParseError, RejectLoop, RejectRange
from .graph import Graph, from_edge_list, relabel

GRAPH6_HEADER = ">>graph6<<"


def _encode_n(n: int) -> bytes:
    if n <= 62:
        return bytes([n + 63])
    if n <= 258047:
        return bytes([126] + [((n >> s) & 63) + 63 for s in (12, 6, 0)])
    return bytes([126, 126] + [((n >> s) & 63) + 63 for s in (30, 24, 18, 12, 6, 0)])


def to_graph6(g: Graph) -> bytes:
    """graph6 encoding without header or trailing newline."""
    bits = []
    for j in range(1, g.n):
        for i in range(j):
            bits.append(1 if g.has_edge(i, j) else 0)
    bits += [0] * (-len(bits) % 6)
    body = bytes(
        63 + int("".join(map(str, bits[k : k + 6])), 2) for k in range(0, len(bits), 6)
    )
    return _encode_n(g.n) + body


def from_graph6(data: bytes | str, line: int = 1) -> Graph:
    if isinstance(data, str):
        data = data.encode("ascii")
    data = data.strip()
    if data.startswith(GRAPH6_HEADER.encode()):
        data = data[len(GRAPH6_HEADER) :]
    for col, b in enumerate(data, start=1):
        if not 63 <= b <= 126:
            raise ParseError(f"byte {b!r} outside graph6 range", line=line, column=col)
    if not data:
        raise ParseError("empty graph6 string", line=line, column=1)
    if data[0] != 126:
        n, pos = data[0] - 63, 1
    elif len(data) > 1 and data[1] == 126:
        if len(data) < 8:
            raise ParseError("truncated vertex count", line=line, column=1)
        n = 0
        for b in data[2:8]:
            n = (n << 6) | (b - 63)
        pos = 8
    else:
        if len(data) < 4:
            raise ParseError("truncated vertex count", line=line, column=1)
        n = 0
        for b in data[1:4]:
            n = (n << 6) | (b - 63)
        pos = 4
    need = (n * (n - 1) // 2 + 5) // 6
    body = data[pos:]
    if len(body) != need:
        raise ParseError(
            f"expected {need} adjacency bytes for {n} vertices, found {len(body)}",
            line=line,
            column=pos + 1,
        )
    pairs = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if (body[k // 6] - 63) >> (5 - k % 6) & 1:
                pairs.append((i, j))
            k += 1
    return from_edge_list(pairs, vertex_count=n)


def parse_edge_list(text: str) -> Graph:
    """``u v`` per line, ``#`` comments, optional ``n=<count>`` header.

    With a header, identifiers must be integers in ``0..n-1``; otherwise any
    whitespace-free tokens are accepted and relabelled.
    """
    pairs = []
    count = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0]
        if not body.strip():
            continue
        col = len(body) - len(body.lstrip()) + 1
        stripped = body.strip()
        if stripped.startswith("n="):
            if count is not None or pairs:
                raise ParseError("n=<count> header must come first and only once", line=lineno, column=col)
            try:
                count = int(stripped[2:])
            except ValueError:
                raise ParseError(f"bad vertex count {stripped[2:]!r}", line=lineno, column=col + 2) from None
            if count < 0:
                raise ParseError("negative vertex count", line=lineno, column=col + 2)
            continue
        tokens = stripped.split()
        if len(tokens) != 2:
            raise ParseError(f"expected two vertex identifiers, got {len(tokens)}", line=lineno, column=col)
        if count is not None:
            try:
                u, v = int(tokens[0]), int(tokens[1])
            except ValueError:
                raise ParseError("identifiers must be integers when n= is given", line=lineno, column=col) from None
            if not (0 <= u < count and 0 <= v < count):
                raise ParseError(f"vertex out of range 0..{count - 1}", line=lineno, column=col)
            if u == v:
                raise ParseError(f"self-loop at {u}", line=lineno, column=col)
            pairs.append((u, v))
        else:
            if tokens[0] == tokens[1]:
                raise ParseError(f"self-loop at {tokens[0]}", line=lineno, column=col)
            pairs.append(tuple(int(t) if t.lstrip("-").isdigit() else t for t in tokens))
    if count is not None:
        return from_edge_list(pairs, vertex_count=count)
    try:
        return relabel(pairs)
    except (RejectLoop, RejectRange) as exc:
        raise ParseError(str(exc)) from exc


def to_edge_list(g: Graph) -> str:
    lines = [f"n={g.n}"] + [f"{u} {v}" for u, v in g.edges]
    return "\n".join(lines) + "\n"


def read_graph(path: str | Path, fmt: str | None = None) -> Graph:
    path = Path(path)
    if fmt is None:
        fmt = "g6" if path.suffix in (".g6", ".graph6") else "edges"
    if fmt == "g6":
        lines = [ln for ln in path.read_bytes().splitlines() if ln.strip()]
        if len(lines) != 1:
            raise ParseError(f"expected exactly one graph6 record, found {len(lines)}", line=1)
        return from_graph6(lines[0])
    if fmt == "edges":
        return parse_edge_list(path.read_text())
    raise ParseError(f"unknown format {fmt!r}")


def write_graph(g: Graph, path: str | Path, fmt: str = "g6") -> None:
    path = Path(path)
    if fmt == "g6":
        path.write_bytes(to_graph6(g) + b"\n")
    elif fmt == "edges":
        path.write_text(to_edge_list(g))
    else:
        raise ParseError(f"unknown format {fmt!r}")
