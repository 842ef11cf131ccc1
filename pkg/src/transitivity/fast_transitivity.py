"""Linear-time transitivity for split, bipartite chain and co-chain graphs.

Every solver validates the certificate it is handed, returns the value and
(unless suppressed) a transitive partition of exactly that order, and checks
that partition with :func:`verify_transitive_partition` before returning it.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Union

from .errors import BudgetExceeded, InvalidCertificate
from .graph import Graph, TransitivePartition, TrResult, verify_transitive_partition
from .recognition import (
    ChainOrdering,
    NotRecognized,
    SplitPartition,
    chain_ordering,
    cochain_ordering,
    is_chain_ordering,
    split_partition,
)

__all__ = [
    "TrResult",
    "Unsupported",
    "min_eds_chain",
    "transitivity_auto",
    "transitivity_chain",
    "transitivity_cochain",
    "transitivity_split",
]


def _finish(g: Graph, value: int, classes, method: str, certificate: bool) -> TrResult:
    if not certificate:
        return TrResult(value, None, method)
    part = TransitivePartition.of(classes)
    if part.k != value or not verify_transitive_partition(g, part):
        raise AssertionError(f"{method}: constructed partition failed verification")
    return TrResult(value, part, method, True)


def _check_split(g: Graph, cert: SplitPartition) -> None:
    s, k = cert.s, cert.k
    if len(s) + len(k) != g.n or not s.isdisjoint(k) or not (s | k) <= set(g.vertices):
        raise InvalidCertificate("split partition does not partition the vertex set")
    size = len(k)
    for v in k:
        if len(g.adj[v] & k) != size - 1:
            raise InvalidCertificate(f"clique side is not a clique at vertex {v}")
    for v in s:
        if not g.adj[v].isdisjoint(s):
            raise InvalidCertificate(f"independent side has an edge at vertex {v}")
        if len(g.adj[v]) >= size and k <= g.adj[v]:
            raise InvalidCertificate(f"clique is not maximum: {v} sees all of it")


def transitivity_split(g: Graph, cert: SplitPartition, certificate: bool = True) -> TrResult:
    """Transitivity of a split graph given a maximum-clique split partition.

    The value is ``|K| + 1`` when every clique vertex has a neighbor in the
    independent side and ``|K|`` otherwise.
    """
    _check_split(g, cert)
    s, k = cert.s, cert.k
    clique = sorted(k)
    if not clique:
        return _finish(g, 0, [], "split", certificate)
    lonely = next((v for v in clique if g.adj[v].isdisjoint(s)), None) if s else clique[0]
    if lonely is None:
        classes = [sorted(s)] + [[v] for v in clique]
        return _finish(g, len(clique) + 1, classes, "split", certificate)
    rest = [v for v in clique if v != lonely]
    classes = [sorted(s) + [lonely]] + [[v] for v in rest]
    return _finish(g, len(clique), classes, "split", certificate)


def _check_chain(g: Graph, cert: ChainOrdering) -> None:
    if not is_chain_ordering(g, cert):
        raise InvalidCertificate("not a chain ordering of this graph")


def transitivity_chain(g: Graph, cert: ChainOrdering, certificate: bool = True) -> TrResult:
    """Transitivity of a bipartite chain graph.

    With ``j`` the largest index such that ``x_j y_j`` is an edge, the value
    is ``j + 2`` when ``x_{j+1} y_j`` and ``x_j y_{j+1}`` are both edges and
    ``j + 1`` otherwise (1 for an edgeless graph).
    """
    _check_chain(g, cert)
    if g.n == 0:
        return _finish(g, 0, [], "chain", certificate)
    j = cert.j
    if j == 0:
        return _finish(g, 1, [list(g.vertices)], "chain", certificate)
    x, y = cert.x, cert.y
    xn, yn = x(j + 1), y(j + 1)
    cross = xn is not None and yn is not None and g.has_edge(xn, y(j)) and g.has_edge(x(j), yn)
    if cross:
        # K_{j+1,j+1} minus x_{j+1}y_{j+1}: the non-adjacent pair dominates
        # the K_{j,j} core, which then yields j + 1 classes.
        top = [[xn, yn]]
    else:
        top = []
    core = [[x(i), y(i)] for i in range(1, j)] + [[x(j)], [y(j)]]
    classes = top + core
    used = {v for c in classes for v in c}
    classes[0] = classes[0] + [v for v in g.vertices if v not in used]
    return _finish(g, j + 2 if cross else j + 1, classes, "chain", certificate)


def min_eds_chain(cert: ChainOrdering) -> list[tuple[int, int]]:
    """Minimum edge dominating set ``{x_i y_i : i <= j}`` of a chain graph."""
    return [(cert.x(i), cert.y(i)) for i in range(1, cert.j + 1)]


def transitivity_cochain(g: Graph, cert: ChainOrdering, certificate: bool = True) -> TrResult:
    """Transitivity of the complement of a bipartite chain graph: ``n - p``.

    The pairs ``{x_i, y_i}`` (``i <= p``) come first; each is independent in
    ``g`` and, the sides being cliques, dominates everything after it. The
    remaining vertices are pairwise adjacent in ``g`` and become singletons,
    X side then Y side in chain order.
    """
    if not cert.of_complement:
        raise InvalidCertificate("expected an ordering of the complement")
    xs, ys = cert.sigma_x, cert.sigma_y
    if sorted(xs + ys) != list(g.vertices):
        raise InvalidCertificate("ordering does not cover the vertex set")
    # Validate against the complement without materializing it: the sides
    # must be cliques of g, and cross non-edges must nest.
    xset, yset = set(xs), set(ys)
    for side, sset in ((xs, xset), (ys, yset)):
        for v in side:
            if len(g.adj[v] & sset) != len(sset) - 1:
                raise InvalidCertificate(f"side containing {v} is not a clique")
    for this, other, oset in ((xs, ys, yset), (ys, xs, xset)):
        pos = {v: i for i, v in enumerate(other)}
        prev = None
        for v in this:
            miss = [w for w in other if w not in g.adj[v]] if len(g.adj[v] & oset) < len(oset) else []
            d = len(miss)
            if d and max(pos[w] for w in miss) >= d:
                raise InvalidCertificate("complement neighborhoods are not nested")
            if prev is not None and d > prev:
                raise InvalidCertificate("complement degrees not monotone")
            prev = d
    p = 0
    while p < min(len(xs), len(ys)) and not g.has_edge(xs[p], ys[p]):
        p += 1
    if p != cert.j:
        raise InvalidCertificate(f"certificate claims j={cert.j}, found {p}")
    n = g.n
    classes = [[xs[i], ys[i]] for i in range(p)]
    classes += [[v] for v in xs[p:]] + [[v] for v in ys[p:]]
    return _finish(g, n - p, classes, "cochain", certificate)


@dataclass(frozen=True)
class Unsupported:
    """No exact method applies: not in a recognized class and too large for
    exhaustive search."""

    reason: str

    def to_report(self):
        return {"supported": False, "reason": self.reason}


def transitivity_auto(g: Graph, budget=None, certificate: bool = True) -> Union[TrResult, Unsupported]:
    """Dispatch split, then chain, then co-chain, then the exact oracle."""
    from .oracle import SearchBudget, transitivity_bruteforce

    sp = split_partition(g, witness=False)
    if not isinstance(sp, NotRecognized):
        return transitivity_split(g, sp, certificate)
    ch = chain_ordering(g)
    if not isinstance(ch, NotRecognized):
        return transitivity_chain(g, ch, certificate)
    co = cochain_ordering(g)
    if not isinstance(co, NotRecognized):
        return transitivity_cochain(g, co, certificate)
    budget = budget or SearchBudget()
    try:
        return transitivity_bruteforce(g, budget)
    except BudgetExceeded as exc:
        return Unsupported(f"class not recognized, instance too large for exact search ({exc})")
