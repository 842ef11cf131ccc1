"""Edge-list and graph6 readers/writers and the deterministic report format."""
from __future__ import annotations

import json
import warnings
from dataclasses import dataclass, field
from typing import Any, Optional

from .errors import ParseError
from .graph import Graph


@dataclass(frozen=True)
class GraphDocument:
    graph: Graph
    labels: Optional[tuple[str, ...]] = None
    fmt: str = "edgelist"
    warnings: tuple[str, ...] = field(default=())

    def label(self, v: int) -> str:
        return self.labels[v] if self.labels is not None else str(v)

    def vertex(self, label: str) -> int:
        """Inverse of :meth:`label`."""
        if self.labels is None:
            try:
                v = int(label)
            except ValueError:
                raise KeyError(label) from None
            if not 0 <= v < self.graph.n:
                raise KeyError(label)
            return v
        try:
            return self.labels.index(label)
        except ValueError:
            raise KeyError(label) from None


def _is_index(tok: str) -> bool:
    return tok.isdigit() and (tok == "0" or not tok.startswith("0"))


def parse_edge_list(text: str) -> GraphDocument:
    """Parse ``u v`` lines with an optional ``n <count>`` header.

    Without a header, vertices are exactly those mentioned; integer names are
    kept in numeric order, other names in order of first appearance. With a
    header every token must be an index below the declared count.
    """
    n_header = None
    pairs: list[tuple[str, str, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        toks = line.split()
        if toks[0] == "n":
            if len(toks) != 2 or not toks[1].isdigit():
                raise ParseError(f"bad header {raw.strip()!r}", lineno)
            if n_header is not None or pairs:
                raise ParseError("header must come first and only once", lineno)
            n_header = int(toks[1])
            continue
        if len(toks) != 2:
            raise ParseError(f"expected two vertex names, got {raw.strip()!r}", lineno)
        u, v = toks
        if u == v:
            raise ParseError(f"self-loop at {u}", lineno)
        pairs.append((u, v, lineno))

    if n_header is not None:
        n = n_header
        for u, v, lineno in pairs:
            for tok in (u, v):
                if not _is_index(tok) or int(tok) >= n:
                    raise ParseError(f"vertex {tok!r} outside 0..{n - 1}", lineno)
        index = {str(i): i for i in range(n)}
        labels = None
    else:
        names: dict[str, None] = {}
        for u, v, _ in pairs:
            names.setdefault(u)
            names.setdefault(v)
        if all(_is_index(t) for t in names):
            order = sorted(names, key=int)
        else:
            order = list(names)
        index = {t: i for i, t in enumerate(order)}
        n = len(order)
        plain = order == [str(i) for i in range(n)]
        labels = None if plain else tuple(order)

    seen = set()
    edges = []
    notes = []
    for u, v, lineno in pairs:
        a, b = index[u], index[v]
        key = (min(a, b), max(a, b))
        if key in seen:
            msg = f"line {lineno}: duplicate edge {u} {v} ignored"
            warnings.warn(msg, stacklevel=2)
            notes.append(msg)
            continue
        seen.add(key)
        edges.append(key)
    return GraphDocument(Graph(n, edges), labels, "edgelist", tuple(notes))


def emit_edge_list(g: Graph, header: bool = True) -> str:
    lines = [f"n {g.n}"] if header else []
    lines += [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def _encode_n(n: int) -> str:
    if n < 63:
        return chr(63 + n)
    if n < 258048:
        return "~" + "".join(chr(63 + ((n >> s) & 63)) for s in (12, 6, 0))
    return "~~" + "".join(chr(63 + ((n >> s) & 63)) for s in (30, 24, 18, 12, 6, 0))


def emit_graph6(g: Graph) -> str:
    """graph6 string for ``g`` (no header, no newline)."""
    n = g.n
    bits = []
    adj = g.adj
    for j in range(1, n):
        a = adj[j]
        bits.extend(1 if i in a else 0 for i in range(j))
    bits.extend([0] * (-len(bits) % 6))
    body = "".join(
        chr(63 + int("".join(map(str, bits[i:i + 6])), 2)) for i in range(0, len(bits), 6)
    )
    return _encode_n(n) + body


def parse_graph6(text: str) -> GraphDocument:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise ParseError("empty graph6 string")
    data = []
    for pos, ch in enumerate(s):
        c = ord(ch) - 63
        if not 0 <= c < 64:
            raise ParseError(f"invalid graph6 byte {ch!r} at offset {pos}")
        data.append(c)
    if data[0] != 63:
        n, rest = data[0], data[1:]
    elif len(data) >= 4 and data[1] != 63:
        n = (data[1] << 12) | (data[2] << 6) | data[3]
        rest = data[4:]
    elif len(data) >= 8:
        n = 0
        for c in data[2:8]:
            n = (n << 6) | c
        rest = data[8:]
    else:
        raise ParseError("truncated graph6 size field")
    nbits = n * (n - 1) // 2
    if len(rest) != (nbits + 5) // 6:
        raise ParseError(
            f"graph6 payload has {len(rest)} bytes, expected {(nbits + 5) // 6} for n={n}"
        )
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if (rest[k // 6] >> (5 - k % 6)) & 1:
                edges.append((i, j))
            k += 1
    return GraphDocument(Graph(n, edges), None, "graph6")


def read_graph6_lines(text: str) -> list[Graph]:
    """One graph per non-blank line (catalog/atlas files)."""
    out = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        if line.strip():
            try:
                out.append(parse_graph6(line).graph)
            except ParseError as exc:
                raise ParseError(str(exc), lineno) from None
    return out


def parse_graph(text: str, fmt: str) -> GraphDocument:
    if fmt == "graph6":
        return parse_graph6(text)
    if fmt == "edgelist":
        return parse_edge_list(text)
    raise ValueError(f"unknown format {fmt!r}")


def _plain(obj: Any) -> Any:
    if hasattr(obj, "to_report"):
        return _plain(obj.to_report())
    if isinstance(obj, dict):
        return {str(k): _plain(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_plain(v) for v in obj]
    if isinstance(obj, (set, frozenset)):
        return sorted(_plain(v) for v in obj)
    return obj


def emit_report(result: Any) -> str:
    """Serialize a result (anything with ``to_report()``, or plain data) as
    sorted-key JSON. Output is byte-stable for equal inputs."""
    return json.dumps(_plain(result), sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def parse_partition(text: str, doc: GraphDocument) -> list[list[int]]:
    """Partition file: one class per line, vertex labels separated by spaces."""
    classes = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        cls = []
        for tok in line.split():
            try:
                cls.append(doc.vertex(tok))
            except KeyError:
                raise ParseError(f"unknown vertex {tok!r}", lineno) from None
        classes.append(cls)
    return classes


def emit_partition(classes, doc: Optional[GraphDocument] = None) -> str:
    label = doc.label if doc is not None else str
    return "".join(" ".join(label(v) for v in sorted(c)) + "\n" for c in classes)
