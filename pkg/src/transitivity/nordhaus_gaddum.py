"""Tr(G) + Tr(complement of G): sums, class theorems, counterexample search."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from .catalog import iter_catalog
from .errors import NotInClass
from .fast_transitivity import (
    Unsupported,
    transitivity_auto,
    transitivity_chain,
    transitivity_cochain,
    transitivity_split,
)
from .graph import Graph, complement
from .oracle import SearchBudget
from .recognition import ChainOrdering, NotRecognized, SplitPartition, chain_ordering, split_partition

NOT_APPLICABLE = "not-applicable"


@dataclass(frozen=True)
class NGReport:
    trG: int
    trGbar: int
    n: int
    predicted_case: str = NOT_APPLICABLE
    matches_theorem: Optional[bool] = None

    @property
    def sum(self) -> int:
        return self.trG + self.trGbar

    @property
    def predicted_value(self) -> Optional[int]:
        return {"n+1": self.n + 1, "n+2": self.n + 2}.get(self.predicted_case)

    def to_report(self):
        return {
            "trG": self.trG,
            "trGbar": self.trGbar,
            "sum": self.sum,
            "n": self.n,
            "case": self.predicted_case,
            "matches_theorem": self.matches_theorem,
        }


def _predicted(trg: int, trgbar: int, n: int, case: str) -> NGReport:
    report = NGReport(trg, trgbar, n, case)
    return NGReport(trg, trgbar, n, case, report.sum == report.predicted_value)


def ng_sum(g: Graph, budget: Optional[SearchBudget] = None) -> NGReport:
    """Transitivity of ``g`` and of its complement, by any applicable method.

    Raises :class:`NotInClass` when either side is neither recognized nor
    small enough for the oracle.
    """
    a = transitivity_auto(g, budget, certificate=False)
    b = transitivity_auto(complement(g), budget, certificate=False)
    for side, res in (("graph", a), ("complement", b)):
        if isinstance(res, Unsupported):
            raise NotInClass(f"{side}: {res.reason}")
    return NGReport(a.value, b.value, g.n)


def complement_split_partition(g: Graph, sp: SplitPartition) -> SplitPartition:
    """Maximum-clique split partition of the complement, read off ``sp``.

    If every clique vertex sees the independent side, the sides simply swap;
    otherwise a clique vertex without such a neighbor joins the new clique.
    """
    lonely = next((v for v in sorted(sp.k) if g.adj[v].isdisjoint(sp.s)), None)
    if lonely is None:
        return SplitPartition(s=sp.k, k=sp.s)
    return SplitPartition(s=sp.k - {lonely}, k=sp.s | {lonely})


def verify_ng_split(g: Graph, cert: Optional[SplitPartition] = None) -> NGReport:
    sp = cert if cert is not None else split_partition(g)
    if isinstance(sp, NotRecognized):
        raise NotInClass("graph is not split", sp.witness)
    all_seen = all(not g.adj[v].isdisjoint(sp.s) for v in sp.k)
    case = "n+2" if all_seen and sp.s else "n+1"
    gbar = complement(g)
    trg = transitivity_split(g, sp, certificate=False).value
    trgbar = transitivity_split(gbar, complement_split_partition(g, sp), certificate=False).value
    return _predicted(trg, trgbar, g.n, case)


def verify_ng_chain(g: Graph, cert: Optional[ChainOrdering] = None) -> NGReport:
    co = cert if cert is not None else chain_ordering(g)
    if isinstance(co, NotRecognized):
        raise NotInClass("graph is not a bipartite chain graph", co.witness)
    j = co.j
    xn, yn = co.x(j + 1), co.y(j + 1)
    cross = j > 0 and xn is not None and yn is not None and \
        g.has_edge(xn, co.y(j)) and g.has_edge(co.x(j), yn)
    case = "n+2" if cross else "n+1"
    trg = transitivity_chain(g, co, certificate=False).value
    flipped = ChainOrdering(co.sigma_x, co.sigma_y, co.j, of_complement=True)
    trgbar = transitivity_cochain(complement(g), flipped, certificate=False).value
    return _predicted(trg, trgbar, g.n, case)


def find_counterexamples(n_max: int, graphs: Optional[Iterable[Graph]] = None,
                         budget: Optional[SearchBudget] = None) -> list[Graph]:
    """Graphs other than ``K_n`` and its complement with sum exactly ``n + 1``.

    Scans ``graphs`` (default: the bundled catalog up to ``n_max``).
    """
    source = graphs if graphs is not None else iter_catalog(n_max)
    out = []
    for g in source:
        if g.n > n_max:
            continue
        full = g.n * (g.n - 1) // 2
        if g.m in (0, full):
            continue
        if ng_sum(g, budget).sum == g.n + 1:
            out.append(g)
    return out
