"""Canonical labeling of small graphs for isomorphism deduplication.

Colour refinement followed by individualization of the first non-singleton
cell; the certificate is the lexicographically smallest graph6 string over all
leaves. Twin vertices (equal neighborhoods up to each other) are swapped by an
automorphism fixing everything else, so only one twin per cell is tried.
"""
from __future__ import annotations

from .errors import BudgetExceeded
from .graph import Graph, relabel
from .graph_io import emit_graph6

MAX_VERTICES = 16


def _refine(adj, colors: list[int]) -> list[int]:
    while True:
        sig = [(colors[v], tuple(sorted(colors[w] for w in adj[v]))) for v in range(len(adj))]
        rank = {s: i for i, s in enumerate(sorted(set(sig)))}
        new = [rank[s] for s in sig]
        if len(rank) == len(set(colors)):
            return new
        colors = new


def _twins(adj, u: int, v: int) -> bool:
    return adj[u] - {v} == adj[v] - {u}


def canonical_form(g: Graph) -> tuple[tuple[int, ...], str]:
    """Return ``(labeling, certificate)``.

    ``labeling[v]`` is the canonical position of vertex ``v``; isomorphic
    graphs get identical certificates.
    """
    n = g.n
    if n > MAX_VERTICES:
        raise BudgetExceeded(f"canonical form limited to {MAX_VERTICES} vertices")
    adj = g.adj
    best: list = [None, None]

    def search(colors: list[int]) -> None:
        cells: dict[int, list[int]] = {}
        for v, c in enumerate(colors):
            cells.setdefault(c, []).append(v)
        target = next((c for c in sorted(cells) if len(cells[c]) > 1), None)
        if target is None:
            cert = emit_graph6(relabel(g, colors))
            if best[1] is None or cert < best[1]:
                best[0], best[1] = tuple(colors), cert
            return
        tried: list[int] = []
        for v in cells[target]:
            if any(_twins(adj, u, v) for u in tried):
                continue
            tried.append(v)
            split = [2 * c + (1 if c == target and w != v else 0) for w, c in enumerate(colors)]
            search(_refine(adj, split))

    search(_refine(adj, [len(a) for a in adj]))
    if n == 0:
        return (), emit_graph6(g)
    return best[0], best[1]


def certificate(g: Graph) -> str:
    return canonical_form(g)[1]


def canonical_graph(g: Graph) -> Graph:
    return relabel(g, canonical_form(g)[0])


def is_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.m != h.m:
        return False
    return certificate(g) == certificate(h)
