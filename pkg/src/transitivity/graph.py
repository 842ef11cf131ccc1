"""Immutable simple graphs, set domination and the transitive-partition verifier.

Vertices are the integers ``0..n-1``. Neighborhoods are stored as frozensets;
bitmask views (one Python int per vertex) are built lazily for the exhaustive
searches in :mod:`transitivity.oracle`.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Sequence

from .errors import ContractError, MalformedPartition


class Graph:
    """Simple undirected graph on vertices ``0..n-1``.

    Instances are value-immutable: every "mutation" returns a new graph.
    """

    __slots__ = ("_adj", "_m", "_masks")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ContractError(f"vertex count must be non-negative, got {n}")
        adj: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ContractError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ContractError(f"self-loop at vertex {u}")
            adj[u].add(v)
            adj[v].add(u)
        self._adj = tuple(frozenset(a) for a in adj)
        self._m = sum(len(a) for a in adj) // 2
        self._masks = None

    @classmethod
    def _from_adjacency(cls, adj: Sequence[Iterable[int]]) -> "Graph":
        # Trusted constructor: caller guarantees symmetry and no loops.
        g = cls.__new__(cls)
        g._adj = tuple(frozenset(a) for a in adj)
        g._m = sum(len(a) for a in g._adj) // 2
        g._masks = None
        return g

    @property
    def n(self) -> int:
        return len(self._adj)

    @property
    def m(self) -> int:
        return self._m

    @property
    def adj(self) -> tuple[frozenset[int], ...]:
        return self._adj

    @property
    def vertices(self) -> range:
        return range(len(self._adj))

    def neighbors(self, v: int) -> frozenset[int]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    @property
    def max_degree(self) -> int:
        return max((len(a) for a in self._adj), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adj[u]

    def edges(self) -> Iterator[tuple[int, int]]:
        """Edges ``(u, v)`` with ``u < v`` in lexicographic order."""
        for u, nbrs in enumerate(self._adj):
            for v in sorted(nbrs):
                if u < v:
                    yield u, v

    @property
    def masks(self) -> tuple[int, ...]:
        """Neighborhoods as integer bitmasks."""
        if self._masks is None:
            self._masks = tuple(sum(1 << w for w in a) for a in self._adj)
        return self._masks

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self._adj == other._adj

    def __hash__(self):
        return hash(self._adj)

    def __repr__(self):
        return f"Graph(n={self.n}, edges={list(self.edges())})"


@dataclass(frozen=True)
class TransitivePartition:
    """Ordered vertex partition ``V_1, ..., V_k``."""

    classes: tuple[frozenset[int], ...]

    @classmethod
    def of(cls, classes: Iterable[Iterable[int]]) -> "TransitivePartition":
        return cls(tuple(frozenset(c) for c in classes))

    @property
    def k(self) -> int:
        return len(self.classes)

    def as_lists(self) -> list[list[int]]:
        return [sorted(c) for c in self.classes]


@dataclass(frozen=True)
class TrResult:
    """Transitivity value with an optional certificate partition.

    ``method`` is one of ``split``, ``chain``, ``cochain``, ``oracle``.
    ``verified`` records whether the certificate passed
    :func:`verify_transitive_partition` (None when no certificate).
    """

    value: int
    certificate: Optional[TransitivePartition]
    method: str
    verified: Optional[bool] = None

    def to_report(self, labels=None):
        out = {"method": self.method, "transitivity": self.value}
        if self.certificate is not None:
            name = (lambda v: labels[v]) if labels is not None else (lambda v: v)
            out["classes"] = [
                [name(v) for v in cls] for cls in self.certificate.as_lists()
            ]
            out["verified"] = self.verified
        return out


def _check_vertices(g: Graph, s: Iterable[int], what: str) -> frozenset[int]:
    s = frozenset(s)
    for v in s:
        if not (isinstance(v, int) and 0 <= v < g.n):
            raise ContractError(f"{what}: vertex {v!r} not in graph of order {g.n}")
    return s


def dominates(g: Graph, a: Iterable[int], b: Iterable[int]) -> bool:
    """True iff every vertex of ``b`` has a neighbor in ``a``.

    ``a`` and ``b`` must be disjoint vertex sets; an empty ``b`` is dominated
    vacuously.
    """
    a = _check_vertices(g, a, "dominator")
    b = _check_vertices(g, b, "dominated set")
    if not a.isdisjoint(b):
        raise ContractError(f"sets overlap on {sorted(a & b)}")
    adj = g.adj
    return all(not adj[v].isdisjoint(a) for v in b)


def _class_index(g: Graph, classes: Sequence[Iterable[int]]) -> list[int]:
    owner = [-1] * g.n
    for i, cls in enumerate(classes):
        if not cls:
            raise MalformedPartition(f"class {i + 1} is empty")
        for v in cls:
            if not (isinstance(v, int) and 0 <= v < g.n):
                raise MalformedPartition(f"vertex {v!r} not in graph of order {g.n}")
            if owner[v] != -1:
                raise MalformedPartition(
                    f"vertex {v} appears in classes {owner[v] + 1} and {i + 1}"
                )
            owner[v] = i
    missing = [v for v in range(g.n) if owner[v] == -1]
    if missing:
        raise MalformedPartition(f"vertices {missing} are not covered")
    return owner


def verify_transitive_partition(g: Graph, p) -> bool:
    """Check that ``V_i`` dominates ``V_j`` for all ``i < j``.

    ``p`` is a :class:`TransitivePartition` or any sequence of vertex
    collections. Raises :class:`MalformedPartition` when the classes do not
    partition ``V(g)``. Runs in O(n + m): a vertex in class ``c`` must see
    exactly ``c - 1`` distinct lower classes among its neighbors.
    """
    classes = p.classes if isinstance(p, TransitivePartition) else [list(c) for c in p]
    owner = _class_index(g, classes)
    adj = g.adj
    for v in range(g.n):
        c = owner[v]
        if c == 0:
            continue
        if len(adj[v]) < c:
            return False
        seen = {owner[w] for w in adj[v] if owner[w] < c}
        if len(seen) != c:
            return False
    return True


def complement(g: Graph) -> Graph:
    everything = frozenset(range(g.n))
    return Graph._from_adjacency([everything - a - {v} for v, a in enumerate(g.adj)])


def induced_subgraph(g: Graph, s: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    """Subgraph induced on ``s``; returns ``(h, labels)`` with ``labels[i]``
    the vertex of ``g`` that became vertex ``i`` of ``h``."""
    keep = sorted(_check_vertices(g, s, "induced_subgraph"))
    index = {v: i for i, v in enumerate(keep)}
    adj = [[index[w] for w in g.adj[v] if w in index] for v in keep]
    return Graph._from_adjacency(adj), tuple(keep)


def delete_edge(g: Graph, u: int, v: int) -> Graph:
    if not (0 <= u < g.n and 0 <= v < g.n) or not g.has_edge(u, v):
        raise ContractError(f"edge ({u}, {v}) not in graph")
    adj = list(g.adj)
    adj[u] = adj[u] - {v}
    adj[v] = adj[v] - {u}
    return Graph._from_adjacency(adj)


def delete_vertex(g: Graph, v: int) -> Graph:
    if not 0 <= v < g.n:
        raise ContractError(f"vertex {v} not in graph of order {g.n}")
    h, _ = induced_subgraph(g, [w for w in range(g.n) if w != v])
    return h


def disjoint_union(*graphs: Graph) -> Graph:
    adj: list[list[int]] = []
    for h in graphs:
        off = len(adj)
        adj.extend([w + off for w in a] for a in h.adj)
    return Graph._from_adjacency(adj)


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Graph with vertex ``v`` renamed ``perm[v]``."""
    adj: list[list[int]] = [[] for _ in range(g.n)]
    for v, a in enumerate(g.adj):
        adj[perm[v]] = [perm[w] for w in a]
    return Graph._from_adjacency(adj)


def components(g: Graph) -> list[list[int]]:
    """Connected components as sorted vertex lists, ordered by least vertex."""
    seen = [False] * g.n
    out = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        comp, stack = [s], [s]
        while stack:
            v = stack.pop()
            for w in g.adj[v]:
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    stack.append(w)
        out.append(sorted(comp))
    return out


# Small named graphs, used throughout the tests and the atom machinery.

def complete(n: int) -> Graph:
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def empty(n: int) -> Graph:
    return Graph(n)


def path(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def star(leaves: int) -> Graph:
    return Graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def complete_bipartite(a: int, b: int) -> Graph:
    """``K_{a,b}`` with sides ``0..a-1`` and ``a..a+b-1``."""
    return Graph(a + b, [(u, a + v) for u in range(a) for v in range(b)])
