"""Graph codecs (graph6, edge lists) and the JSON report document."""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field
from fractions import Fraction

from .graph import Graph, GraphError

SCHEMA_VERSION = 1
_HEADER = ">>graph6<<"


class ParseError(ValueError):
    """Malformed graph input."""


# graph6 ------------------------------------------------------------------------------


def _encode_size(n: int) -> str:
    if n < 0:
        raise GraphError("negative vertex count")
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    if n <= 68719476735:
        return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))
    raise GraphError("graph too large for graph6")


def encode_graph6(g: Graph) -> str:
    """graph6 text (no header, no newline)."""
    out = [_encode_size(g.n)]
    acc = nbits = 0
    for j in range(1, g.n):
        col = g.rows[j]
        for i in range(j):
            acc = (acc << 1) | ((col >> i) & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(acc + 63))
                acc = nbits = 0
    if nbits:
        out.append(chr((acc << (6 - nbits)) + 63))
    return "".join(out)


def parse_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(_HEADER):
        s = s[len(_HEADER):]
    if not s:
        raise ParseError("graph6: empty input")
    for pos, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise ParseError(f"graph6: byte {ord(ch)} out of range at position {pos}")
    vals = [ord(ch) - 63 for ch in s]
    if vals[0] != 63:
        n, body = vals[0], vals[1:]
    elif len(vals) >= 4 and vals[1] != 63:
        n = (vals[1] << 12) | (vals[2] << 6) | vals[3]
        body = vals[4:]
        if n <= 62:
            raise ParseError("graph6: non-minimal size header")
    elif len(vals) >= 8 and vals[1] == 63:
        n = 0
        for v in vals[2:8]:
            n = (n << 6) | v
        body = vals[8:]
        if n <= 258047:
            raise ParseError("graph6: non-minimal size header")
    else:
        raise ParseError("graph6: truncated size header")
    nbits = n * (n - 1) // 2
    need = -(-nbits // 6)
    if len(body) != need:
        what = "trailing data" if len(body) > need else "truncated data"
        raise ParseError(f"graph6: {what} (expected {need} bytes, got {len(body)})")
    rows = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if (body[k // 6] >> (5 - k % 6)) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    pad = need * 6 - nbits
    if pad and body[-1] & ((1 << pad) - 1):
        raise ParseError("graph6: nonzero padding bits")
    return Graph(n, tuple(rows))


def parse_graph6_lines(text: str) -> list[Graph]:
    return [parse_graph6(line) for line in text.splitlines() if line.strip()]


# edge lists --------------------------------------------------------------------------


def _content_lines(text: str) -> list[tuple[int, str]]:
    out = []
    for no, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            out.append((no, line))
    return out


def parse_edge_list(text: str) -> Graph:
    """``n m`` on the first line, then m lines ``u v`` with ``0 <= u, v < n``."""
    lines = _content_lines(text)
    if not lines:
        raise ParseError("edge list: empty input")

    def ints(no: int, line: str) -> tuple[int, int]:
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(f"line {no}: expected two integers")
        try:
            return int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(f"line {no}: expected two integers") from None

    n, m = ints(*lines[0])
    if n < 0 or m < 0:
        raise ParseError("edge list: negative counts")
    if len(lines) - 1 != m:
        raise ParseError(f"edge list: header announces {m} edges, found {len(lines) - 1}")
    seen = set()
    edges = []
    for no, line in lines[1:]:
        u, v = ints(no, line)
        if u == v:
            raise ParseError(f"line {no}: self-loop at {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"line {no}: vertex out of range 0..{n - 1}")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise ParseError(f"line {no}: duplicate edge {key}")
        seen.add(key)
        edges.append(key)
    return Graph.from_edges(n, edges)


def encode_edge_list(g: Graph) -> str:
    edges = g.edges()
    return "\n".join([f"{g.n} {len(edges)}"] + [f"{u} {v}" for u, v in edges]) + "\n"


def parse_graph(text: str, fmt: str = "graph6") -> Graph:
    if fmt == "graph6":
        return parse_graph6(text)
    if fmt == "edgelist":
        return parse_edge_list(text)
    raise ValueError(f"unknown format {fmt!r}")


# reports -----------------------------------------------------------------------------


def rational_str(x) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def parse_rational(s: str) -> Fraction:
    return Fraction(s)


def graph_hash(g: Graph) -> str:
    """SHA-256 of the canonical graph6 string (isomorphism invariant)."""
    from .recognize import canonical_form

    return hashlib.sha256(canonical_form(g).canon.encode()).hexdigest()


@dataclass
class ReportDocument:
    command: str
    source: str
    format: str
    canonical_hash: str | None
    sections: dict = field(default_factory=dict)
    schema_version: int = SCHEMA_VERSION

    def to_dict(self) -> dict:
        return {
            "schema_version": self.schema_version,
            "command": self.command,
            "input": {"source": self.source, "format": self.format,
                      "canonical_hash": self.canonical_hash},
            "sections": self.sections,
        }

    def to_json(self) -> str:
        doc = self.to_dict()
        check_no_floats(doc)
        return json.dumps(doc, indent=2, sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> "ReportDocument":
        doc = json.loads(text)
        if doc.get("schema_version") != SCHEMA_VERSION:
            raise ParseError(f"unsupported schema version {doc.get('schema_version')!r}")
        inp = doc["input"]
        return cls(doc["command"], inp["source"], inp["format"], inp["canonical_hash"],
                   doc["sections"], doc["schema_version"])


def check_no_floats(obj, path: str = "$") -> None:
    if isinstance(obj, float):
        raise TypeError(f"float in report at {path}")
    if isinstance(obj, dict):
        for k, v in obj.items():
            check_no_floats(v, f"{path}.{k}")
    elif isinstance(obj, (list, tuple)):
        for i, v in enumerate(obj):
            check_no_floats(v, f"{path}[{i}]")
