"""t-atoms: generation up to isomorphism and criticality classification.

A ``t``-atom is grown from a ``(t-1)``-atom ``H`` on ``n`` vertices by adding
``r`` new independent vertices, matching them perfectly to an ``r``-subset
``W`` of ``V(H)``, and joining every vertex outside ``W`` to exactly one new
vertex. The only 1-atom is ``K_1``.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, product
from typing import Optional

from .canonical import canonical_form
from .errors import BudgetExceeded, ContractError
from .graph import Graph, complete, disjoint_union, empty, relabel
from .graph_io import emit_graph6, read_graph6_lines
from .oracle import SearchBudget, is_edge_critical, is_vertex_critical, tr_value

MAX_T = 5


def grow(h: Graph):
    """Yield every labeled graph obtained from ``h`` by one atom step."""
    n = h.n
    base = list(h.edges())
    for r in range(1, n + 1):
        for w in combinations(range(n), r):
            wset = set(w)
            outside = [v for v in range(n) if v not in wset]
            matching = [(v, n + i) for i, v in enumerate(w)]
            for f in product(range(r), repeat=len(outside)):
                extra = [(v, n + f[i]) for i, v in enumerate(outside)]
                yield Graph(n + r, base + matching + extra)


@lru_cache(maxsize=None)
def _atoms(t: int) -> tuple[Graph, ...]:
    if t == 1:
        return (complete(1),)
    found: dict[str, Graph] = {}
    for h in _atoms(t - 1):
        for g in grow(h):
            labeling, cert = canonical_form(g)
            if cert not in found:
                found[cert] = relabel(g, labeling)
    order = sorted(found, key=lambda c: (found[c].n, found[c].m, c))
    return tuple(found[c] for c in order)


def generate_atoms(t: int) -> list[Graph]:
    """All t-atoms up to isomorphism, canonically labeled, ordered by
    (order, size, certificate)."""
    if t < 1:
        raise ContractError(f"t must be at least 1, got {t}")
    if t > MAX_T:
        raise BudgetExceeded(f"atom generation limited to t <= {MAX_T}")
    return list(_atoms(t))


@dataclass(frozen=True)
class AtomRecord:
    graph: Graph
    t: int
    tr: int
    vertex_critical: bool
    edge_critical: bool

    @property
    def ve_critical(self) -> bool:
        return self.vertex_critical and self.edge_critical

    @property
    def in_Ak_prime(self) -> bool:
        return self.tr == self.t and self.ve_critical

    def to_report(self):
        return {
            "graph6": emit_graph6(self.graph),
            "n": self.graph.n,
            "m": self.graph.m,
            "t": self.t,
            "tr": self.tr,
            "vertex_critical": self.vertex_critical,
            "edge_critical": self.edge_critical,
            "ve_critical": self.ve_critical,
            "in_Ak_prime": self.in_Ak_prime,
        }


def classify_atoms(t: int, budget: Optional[SearchBudget] = None) -> list[AtomRecord]:
    """Annotate each generated t-atom with its exact transitivity and
    criticality flags. Atoms outside ``A_t'`` form the excluded family."""
    budget = budget or SearchBudget()
    out = []
    for g in generate_atoms(t):
        out.append(AtomRecord(g, t, tr_value(g, budget),
                              is_vertex_critical(g, budget), is_edge_critical(g, budget)))
    return out


def ve_critical_atoms(k: int, budget: Optional[SearchBudget] = None) -> list[Graph]:
    """``A_k'``: the k-atoms with transitivity k that are vertex- and edge-critical."""
    return [r.graph for r in classify_atoms(k, budget) if r.in_Ak_prime]


def edge_critical_members(k: int, n: int, budget: Optional[SearchBudget] = None) -> list[Graph]:
    """All edge-critical graphs on ``n`` vertices with transitivity ``k``, as
    ``H`` plus ``n - |H|`` isolated vertices for each ``H`` in ``A_k'``."""
    return [
        disjoint_union(h, empty(n - h.n))
        for h in ve_critical_atoms(k, budget)
        if h.n <= n
    ]


def write_atlas(graphs) -> str:
    return "".join(emit_graph6(g) + "\n" for g in graphs)


def read_atlas(text: str) -> list[Graph]:
    return read_graph6_lines(text)
