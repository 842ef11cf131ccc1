"""Recognizers for split, bipartite chain and co-chain graphs.

Each recognizer returns either a certificate consumed by
:mod:`transitivity.fast_transitivity` or a failure record with a small
forbidden-subgraph witness. Failure is a result, never an exception.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Optional, Union

from .graph import Graph, complement, components


@dataclass(frozen=True)
class SplitPartition:
    """Independent set ``s`` and maximum clique ``k`` covering the graph."""

    s: frozenset[int]
    k: frozenset[int]

    def to_report(self):
        return {"recognized": True, "independent": sorted(self.s), "clique": sorted(self.k)}


@dataclass(frozen=True)
class ChainOrdering:
    """Nested-neighborhood orderings of the two sides of a chain graph.

    ``j`` is the largest index with ``x_j y_j`` an edge (1-based, 0 if the
    graph has no edges). ``of_complement`` is set when the ordering certifies
    the complement of the graph it was computed for.
    """

    sigma_x: tuple[int, ...]
    sigma_y: tuple[int, ...]
    j: int
    of_complement: bool = False

    @property
    def p(self) -> int:
        # Minimum edge dominating set size of the chain graph.
        return self.j

    def x(self, i: int) -> Optional[int]:
        """``x_i`` (1-based) or None when out of range."""
        return self.sigma_x[i - 1] if 1 <= i <= len(self.sigma_x) else None

    def y(self, i: int) -> Optional[int]:
        return self.sigma_y[i - 1] if 1 <= i <= len(self.sigma_y) else None

    def to_report(self):
        return {
            "recognized": True,
            "sigma_x": list(self.sigma_x),
            "sigma_y": list(self.sigma_y),
            "j": self.j,
            "p": self.p,
        }


@dataclass(frozen=True)
class NotRecognized:
    """Failure record. ``kind`` names the witness: ``2K2``, ``C4``, ``C5``,
    ``odd_cycle`` or ``independent_triple`` (a triangle of the complement).
    ``witness`` may be None when witness search was switched off."""

    cls: str
    kind: Optional[str]
    witness: Optional[tuple[int, ...]]

    def __bool__(self):
        return False

    def to_report(self):
        return {"recognized": False, "class": self.cls, "witness_kind": self.kind,
                "witness": list(self.witness) if self.witness is not None else None}


SplitResult = Union[SplitPartition, NotRecognized]
ChainResult = Union[ChainOrdering, NotRecognized]


# -- split graphs ----------------------------------------------------------

def split_partition(g: Graph, witness: bool = True) -> SplitResult:
    """Split partition with a maximum clique, via the degree-sequence test.

    On failure an induced 2K2, C4 or C5 is searched for when ``witness`` is
    true; that search is quadratic in m and only meant for small inputs.
    """
    n = g.n
    order = sorted(range(n), key=lambda v: (-g.degree(v), v))
    deg = [g.degree(v) for v in order]
    top = 0
    for i, d in enumerate(deg):
        if d >= i:
            top = i + 1
    if sum(deg[:top]) != top * (top - 1) + sum(deg[top:]):
        found = _split_witness(g) if witness else None
        return NotRecognized("split", found[0] if found else None,
                             found[1] if found else None)
    clique = set(order[:top])
    indep = set(order[top:])
    # At most one independent vertex can see the whole clique.
    for s in sorted(indep):
        if len(g.adj[s]) >= len(clique) and clique <= g.adj[s]:
            indep.discard(s)
            clique.add(s)
            break
    return SplitPartition(frozenset(indep), frozenset(clique))


def _split_witness(g: Graph):
    adj = g.adj
    edges = list(g.edges())
    for (a, b), (c, d) in combinations(edges, 2):
        if len({a, b, c, d}) < 4:
            continue
        present = [c in adj[a], d in adj[a], c in adj[b], d in adj[b]]
        if not any(present):
            return "2K2", (a, b, c, d)
        # C4 a-b-?-?: needs exactly a perfect matching of the cross pairs.
        if present == [False, True, True, False]:
            return "C4", (a, b, c, d)
        if present == [True, False, False, True]:
            return "C4", (a, b, d, c)
    # No 2K2 or C4: a non-split graph must contain an induced C5.
    for a in range(g.n):
        for b in adj[a]:
            if b <= a:
                continue
            for c in adj[b]:
                if c <= a or c in adj[a]:
                    continue
                for d in adj[c]:
                    if d <= a or d in (a, b) or d in adj[a] or d in adj[b]:
                        continue
                    for e in adj[d] & adj[a]:
                        if e > a and e not in adj[b] and e not in adj[c] and e not in (b, c):
                            return "C5", (a, b, c, d, e)
    return None


# -- bipartite chain graphs ----------------------------------------------

def _bipartition(g: Graph, comp: list[int]):
    side = {comp[0]: 0}
    parent = {comp[0]: -1}
    queue = deque([comp[0]])
    while queue:
        v = queue.popleft()
        for w in sorted(g.adj[v]):
            if w not in side:
                side[w] = 1 - side[v]
                parent[w] = v
                queue.append(w)
            elif side[w] == side[v]:
                return None, _cycle_from_tree(parent, v, w)
    return side, None


def _cycle_from_tree(parent: dict, u: int, v: int) -> tuple[int, ...]:
    anc_u = [u]
    while parent[anc_u[-1]] != -1:
        anc_u.append(parent[anc_u[-1]])
    pos = {x: i for i, x in enumerate(anc_u)}
    path_v = [v]
    while path_v[-1] not in pos:
        path_v.append(parent[path_v[-1]])
    meet = path_v[-1]
    # u ... meet ... v, closed by the edge v-u.
    return tuple(anc_u[: pos[meet] + 1] + path_v[-2::-1])


def chain_ordering(g: Graph) -> ChainResult:
    """Chain ordering of a bipartite chain graph, or an odd cycle / 2K2.

    Isolated vertices go to the end of ``sigma_x``. Each side is sorted by
    non-increasing degree with ties by vertex index.
    """
    comps = [c for c in components(g) if len(c) > 1]
    if len(comps) >= 2:
        a = comps[0][0]
        b = min(g.adj[a])
        c = comps[1][0]
        d = min(g.adj[c])
        return NotRecognized("chain", "2K2", (a, b, c, d))
    xs: list[int] = []
    ys: list[int] = []
    if comps:
        side, cyc = _bipartition(g, comps[0])
        if side is None:
            return NotRecognized("chain", "odd_cycle", cyc)
        for v in comps[0]:
            (xs if side[v] == 0 else ys).append(v)
    key = lambda v: (-g.degree(v), v)
    xs.sort(key=key)
    ys.sort(key=key)
    bad = _nesting_violation(g, xs, ys)
    if bad is not None:
        return NotRecognized("chain", "2K2", bad)
    isolated = sorted(v for v in g.vertices if g.degree(v) == 0)
    xs.extend(isolated)
    j = 0
    while j < min(len(xs), len(ys)) and g.has_edge(xs[j], ys[j]):
        j += 1
    return ChainOrdering(tuple(xs), tuple(ys), j)


def _nesting_violation(g: Graph, xs: list[int], ys: list[int]):
    """Return an induced 2K2 if some neighborhood is not a prefix of the
    opposite degree order, else None."""
    for this, other in ((xs, ys), (ys, xs)):
        pos = {v: i for i, v in enumerate(other)}
        for v in this:
            d = len(g.adj[v])
            if d and max(pos[w] for w in g.adj[v]) >= d:
                # Some earlier y_a is missed while a later y_b is hit.
                hit = set(g.adj[v])
                ya = next(w for w in other[:d] if w not in hit)
                yb = next(w for w in g.adj[v] if pos[w] >= d)
                # deg(y_a) >= deg(y_b) and x ~ y_b, x !~ y_a, so y_a has a
                # private neighbor x' outside N(y_b).
                xp = min(g.adj[ya] - g.adj[yb])
                return (v, yb, xp, ya)
    return None


def is_chain_ordering(g: Graph, co: ChainOrdering) -> bool:
    """Post-hoc O(n + m) check of a chain certificate against ``g``."""
    xs, ys = co.sigma_x, co.sigma_y
    if sorted(xs + ys) != list(range(g.n)):
        return False
    xset, yset = set(xs), set(ys)
    for this, other, oset in ((xs, ys, yset), (ys, xs, xset)):
        pos = {v: i for i, v in enumerate(other)}
        prev = None
        for v in this:
            a = g.adj[v]
            if not a <= oset:
                return False
            d = len(a)
            if d and max(pos[w] for w in a) >= d:
                return False
            if prev is not None and d > prev:
                return False
            prev = d
    j = 0
    while j < min(len(xs), len(ys)) and g.has_edge(xs[j], ys[j]):
        j += 1
    return j == co.j


# -- complements of chain graphs --------------------------------------------

def _independent_triple(g: Graph):
    adj = g.adj
    for v in sorted(range(g.n), key=lambda v: (g.degree(v), v)):
        non = [u for u in range(g.n) if u != v and u not in adj[v]]
        for i, u in enumerate(non):
            for w in non[i + 1:]:
                if w not in adj[u]:
                    return (v, u, w)
    return None


def cochain_ordering(g: Graph) -> ChainResult:
    """Chain ordering of the complement of ``g``.

    The two sides of the ordering are cliques of ``g``. Graphs with fewer
    than ``C(n,2) - floor(n^2/4)`` edges are rejected without building the
    complement, since their complement cannot be bipartite. On failure an
    ``independent_triple`` witness lies in ``g``; every other witness kind is
    a subgraph of the complement.
    """
    n = g.n
    if g.m < n * (n - 1) // 2 - (n * n) // 4:
        return NotRecognized("cochain", "independent_triple", _independent_triple(g))
    res = chain_ordering(complement(g))
    if isinstance(res, NotRecognized):
        return NotRecognized("cochain", res.kind, res.witness)
    return ChainOrdering(res.sigma_x, res.sigma_y, res.j, of_complement=True)
