"""graph6 encoding plus edge-list and JSON adjacency forms."""

from __future__ import annotations

import json
from typing import Iterable, Iterator, TextIO

from .graph import GraphError, SimpleGraph


class Graph6Error(GraphError):
    pass


def _encode_n(n: int) -> list[int]:
    if n < 63:
        return [n]
    if n < 258048:
        return [63] + [(n >> s) & 63 for s in (12, 6, 0)]
    return [63, 63] + [(n >> s) & 63 for s in (30, 24, 18, 12, 6, 0)]


def encode(g: SimpleGraph) -> str:
    """graph6 string (no header, no newline) for ``g``."""
    n = g.n
    out = _encode_n(n)
    bitstream = []
    for j in range(1, n):
        aj = g.adj[j]
        for i in range(j):
            bitstream.append((aj >> i) & 1)
    while len(bitstream) % 6:
        bitstream.append(0)
    for k in range(0, len(bitstream), 6):
        chunk = 0
        for b in bitstream[k:k + 6]:
            chunk = (chunk << 1) | b
        out.append(chunk)
    return "".join(chr(c + 63) for c in out)


def decode(text: str) -> SimpleGraph:
    """Parse one graph6 line (an optional ``>>graph6<<`` header is accepted)."""
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise Graph6Error("empty graph6 string")
    data = [ord(c) - 63 for c in s]
    if any(d < 0 or d > 63 for d in data):
        raise Graph6Error(f"invalid graph6 character in {s!r}")
    if data[0] < 63:
        n, rest = data[0], data[1:]
    elif len(data) > 1 and data[1] < 63:
        if len(data) < 4:
            raise Graph6Error("truncated order field")
        n = (data[1] << 12) | (data[2] << 6) | data[3]
        rest = data[4:]
    else:
        if len(data) < 8:
            raise Graph6Error("truncated order field")
        n = 0
        for d in data[2:8]:
            n = (n << 6) | d
        rest = data[8:]
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    if len(rest) != need:
        raise Graph6Error(f"expected {need} data bytes for n={n}, got {len(rest)}")
    adj = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte, off = divmod(k, 6)
            if (rest[byte] >> (5 - off)) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
    return SimpleGraph.from_adjacency(adj)


def read_lines(stream: TextIO | Iterable[str]) -> Iterator[tuple[int, SimpleGraph]]:
    """Yield ``(line_number, graph)`` for each non-blank line."""
    for lineno, line in enumerate(stream, 1):
        if not line.strip():
            continue
        try:
            yield lineno, decode(line)
        except GraphError as exc:
            raise Graph6Error(f"line {lineno}: {exc}") from exc


def to_edge_list(g: SimpleGraph, labels: bool = False) -> str:
    """One ``u v`` pair per line, preceded by the vertex count."""
    lines = [str(g.n)]
    for u, v in g.edges():
        lines.append(f"{g.label(u)} {g.label(v)}" if labels else f"{u} {v}")
    return "\n".join(lines)


def from_edge_list(text: str) -> SimpleGraph:
    lines = [ln.split() for ln in text.splitlines() if ln.strip() and not ln.startswith("#")]
    if not lines:
        raise GraphError("empty edge list")
    n = int(lines[0][0])
    return SimpleGraph(n, [(int(a), int(b)) for a, b in lines[1:]])


def to_json(g: SimpleGraph) -> dict:
    out = {"n": g.n, "adjacency": [g.neighbors(v) for v in g.vertices()]}
    if g.labels:
        out["labels"] = list(g.labels)
    return out


def from_json(obj: dict | str) -> SimpleGraph:
    if isinstance(obj, str):
        obj = json.loads(obj)
    n = obj["n"]
    edges = [(u, v) for u, nbrs in enumerate(obj["adjacency"]) for v in nbrs if u < v]
    g = SimpleGraph(n, edges, obj.get("labels"))
    for u, nbrs in enumerate(obj["adjacency"]):
        if sorted(nbrs) != g.neighbors(u):
            raise GraphError(f"adjacency of vertex {u} is not symmetric")
    return g
