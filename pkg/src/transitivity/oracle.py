"""Exhaustive ground truth for small graphs.

Every quantity the fast algorithms claim is recomputed here by brute force:
transitivity (two independent strategies), Grundy number, minimum edge
dominating sets, t-atom containment and the three criticality predicates.
"""
from __future__ import annotations

import os
import time
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from typing import Optional, Sequence

from . import kernels
from .errors import BudgetExceeded, ContractError
from .graph import (
    Graph,
    TransitivePartition,
    TrResult,
    components,
    delete_edge,
    delete_vertex,
    induced_subgraph,
    verify_transitive_partition,
)

DEFAULT_MAX_VERTICES = 12


def _default_max_vertices() -> int:
    raw = os.environ.get("TRANSITIVITY_BUDGET")
    return int(raw) if raw else DEFAULT_MAX_VERTICES


@dataclass(frozen=True)
class SearchBudget:
    """Limits for exhaustive searches.

    ``max_vertices`` defaults to ``$TRANSITIVITY_BUDGET`` or 12. ``max_edges``
    bounds the edge-subset search for edge domination. ``time_limit`` (seconds)
    is checked between search steps done in Python; a single kernel call is
    bounded by ``max_vertices`` only.
    """

    max_vertices: int = field(default_factory=_default_max_vertices)
    max_edges: int = 40
    time_limit: Optional[float] = None

    def check(self, g: Graph, what: str) -> None:
        limit = min(self.max_vertices, kernels.MAX_VERTICES)
        if g.n > limit:
            raise BudgetExceeded(f"{what}: {g.n} vertices exceeds budget of {limit}")

    def deadline(self) -> Optional[float]:
        return None if self.time_limit is None else time.monotonic() + self.time_limit


def _tick(deadline: Optional[float], what: str) -> None:
    if deadline is not None and time.monotonic() > deadline:
        raise BudgetExceeded(f"{what}: time limit exceeded")


def _mask_to_set(mask: int, labels: Sequence[int]) -> list[int]:
    return [labels[i] for i in range(len(labels)) if mask >> i & 1]


# -- transitivity ----------------------------------------------------------

def _tr_component_a(h: Graph) -> tuple[int, list[int]]:
    return kernels.transitive_order(h.masks, h.n)


def _tr_component_b(h: Graph) -> tuple[int, list[int]]:
    """Upper iterated domination: repeatedly delete a minimal dominating set of
    what is left; plain subset enumeration, no pruning."""
    n = h.n
    adj = h.masks
    closed = [adj[v] | (1 << v) for v in range(n)]

    def dominating(d: int, rest: int) -> bool:
        covered = 0
        x = d
        while x:
            low = x & -x
            covered |= closed[low.bit_length() - 1]
            x ^= low
        return rest & ~covered == 0

    def minimal(d: int, rest: int) -> bool:
        x = d
        while x:
            low = x & -x
            if dominating(d ^ low, rest):
                return False
            x ^= low
        return True

    @lru_cache(maxsize=None)
    def best(rest: int) -> tuple[int, int]:
        if rest == 0:
            return 0, 0
        top, pick = 0, 0
        sub = rest
        while sub:
            if dominating(sub, rest) and minimal(sub, rest):
                value = 1 + best(rest & ~sub)[0]
                if value > top:
                    top, pick = value, sub
            sub = (sub - 1) & rest
        return top, pick

    k = best((1 << n) - 1)[0]
    classes = []
    rest = (1 << n) - 1
    while rest:
        d = best(rest)[1]
        classes.append(d)
        rest &= ~d
    return k, classes


def transitivity_bruteforce(g: Graph, budget: Optional[SearchBudget] = None,
                            strategy: str = "A") -> TrResult:
    """Exact transitivity with a witness partition.

    Strategy ``"A"`` builds the partition from the top class down with
    minimal-dominator branching (compiled kernel when available). Strategy
    ``"B"`` peels minimal dominating sets by plain enumeration and serves as
    the cross-check. Components are solved separately; the other components
    are folded into the first class of the winning one.
    """
    budget = budget or SearchBudget()
    budget.check(g, "transitivity")
    if strategy not in ("A", "B"):
        raise ContractError(f"unknown strategy {strategy!r}")
    solve = _tr_component_a if strategy == "A" else _tr_component_b
    deadline = budget.deadline()
    if g.n == 0:
        return TrResult(0, TransitivePartition(()), "oracle", True)
    best_k, best_classes, best_comp = -1, None, None
    for comp in components(g):
        _tick(deadline, "transitivity")
        h, labels = induced_subgraph(g, comp)
        k, masks = solve(h)
        if k > best_k:
            best_k = k
            best_classes = [_mask_to_set(m, labels) for m in masks]
            best_comp = set(comp)
    others = [v for v in g.vertices if v not in best_comp]
    best_classes[0] = sorted(best_classes[0] + others)
    cert = TransitivePartition.of(best_classes)
    return TrResult(best_k, cert, "oracle", verify_transitive_partition(g, cert))


def tr_value(g: Graph, budget: Optional[SearchBudget] = None) -> int:
    """Exact transitivity without building a certificate; 0 for the null graph."""
    budget = budget or SearchBudget()
    budget.check(g, "transitivity")
    best = 0
    for comp in components(g):
        if len(comp) <= best:
            continue
        h, _ = induced_subgraph(g, comp)
        best = max(best, kernels.transitive_order(h.masks, h.n)[0])
    return best


# -- Grundy number -----------------------------------------------------------

@dataclass(frozen=True)
class GrundyResult:
    value: int
    partition: TransitivePartition

    def to_report(self):
        return {"grundy": self.value, "classes": self.partition.as_lists()}


def is_grundy_partition(g: Graph, classes) -> bool:
    classes = [set(c) for c in classes]
    for c in classes:
        if any(g.adj[v] & c for v in c):
            return False
    return verify_transitive_partition(g, classes)


def grundy_bruteforce(g: Graph, budget: Optional[SearchBudget] = None) -> GrundyResult:
    """Grundy number: maximum order of a partition into independent sets with
    every earlier class dominating every later one."""
    budget = budget or SearchBudget()
    budget.check(g, "grundy")
    if g.n == 0:
        return GrundyResult(0, TransitivePartition(()))
    k, masks = kernels.grundy_order(g.masks, g.n)
    labels = list(g.vertices)
    part = TransitivePartition.of(_mask_to_set(m, labels) for m in masks)
    return GrundyResult(k, part)


# -- edge domination -------------------------------------------------------

@dataclass(frozen=True)
class EDSResult:
    size: int
    edges: tuple[tuple[int, int], ...]


def is_edge_dominating(g: Graph, d) -> bool:
    touched = {v for e in d for v in e}
    return all(u in touched or v in touched for u, v in g.edges())


def eds_bruteforce(g: Graph, budget: Optional[SearchBudget] = None) -> EDSResult:
    """Minimum edge dominating set by increasing-size subset enumeration."""
    budget = budget or SearchBudget()
    if g.m > budget.max_edges:
        raise BudgetExceeded(f"edge domination: {g.m} edges exceeds budget of {budget.max_edges}")
    deadline = budget.deadline()
    edges = list(g.edges())
    for size in range(len(edges) + 1):
        _tick(deadline, "edge domination")
        for d in combinations(edges, size):
            if is_edge_dominating(g, d):
                return EDSResult(size, d)
    raise AssertionError("unreachable: all edges dominate themselves")


# -- atom containment ------------------------------------------------------

@dataclass(frozen=True)
class Containment:
    """Result of an atom search; truthy when an embedding was found.

    ``mapping[i]`` is the target vertex hosting vertex ``i`` of ``atom``.
    """

    found: bool
    atom: Optional[Graph] = None
    mapping: Optional[tuple[int, ...]] = None

    def __bool__(self):
        return self.found


def find_embedding(pattern: Graph, target: Graph) -> Optional[tuple[int, ...]]:
    """Injective map of ``pattern`` into ``target`` preserving edges (not
    necessarily induced), by backtracking with bitmask candidate sets."""
    if pattern.n > target.n or pattern.m > target.m:
        return None
    pd = sorted((pattern.degree(v) for v in pattern.vertices), reverse=True)
    td = sorted((target.degree(v) for v in target.vertices), reverse=True)
    if any(a > b for a, b in zip(pd, td)):
        return None
    # Order pattern vertices so each one (after the first of its component)
    # has an already-placed neighbor.
    order: list[int] = []
    placed = set()
    for start in sorted(pattern.vertices, key=lambda v: (-pattern.degree(v), v)):
        if start in placed:
            continue
        frontier = [start]
        placed.add(start)
        while frontier:
            v = frontier.pop(0)
            order.append(v)
            for w in sorted(pattern.adj[v], key=lambda w: (-pattern.degree(w), w)):
                if w not in placed:
                    placed.add(w)
                    frontier.append(w)
    tmask = target.masks
    tdeg = [target.degree(v) for v in target.vertices]
    full = (1 << target.n) - 1
    back = [[w for w in pattern.adj[v] if order.index(w) < i] for i, v in enumerate(order)]
    image = [-1] * pattern.n

    def rec(i: int, used: int) -> bool:
        if i == len(order):
            return True
        v = order[i]
        cand = full & ~used
        for w in back[i]:
            cand &= tmask[image[w]]
        need = pattern.degree(v)
        while cand:
            low = cand & -cand
            t = low.bit_length() - 1
            cand ^= low
            if tdeg[t] < need:
                continue
            image[v] = t
            if rec(i + 1, used | low):
                return True
        image[v] = -1
        return False

    if rec(0, 0):
        return tuple(image)
    return None


def contains_atom(g: Graph, t: int, atoms: Optional[Sequence[Graph]] = None,
                  budget: Optional[SearchBudget] = None) -> Containment:
    """Does some t-atom occur in ``g`` as a subgraph?

    ``atoms`` defaults to :func:`transitivity.atoms.generate_atoms` ``(t)``.
    """
    if atoms is None:
        if t > 4:
            raise BudgetExceeded(f"atom containment for t={t} needs an explicit atom list")
        from .atoms import generate_atoms
        atoms = generate_atoms(t)
    deadline = (budget or SearchBudget()).deadline()
    for atom in atoms:
        _tick(deadline, "atom containment")
        mapping = find_embedding(atom, g)
        if mapping is not None:
            return Containment(True, atom, mapping)
    return Containment(False)


# -- criticality -----------------------------------------------------------

def is_vertex_critical(g: Graph, budget: Optional[SearchBudget] = None) -> bool:
    """Every vertex deletion lowers the transitivity."""
    budget = budget or SearchBudget()
    k = tr_value(g, budget)
    deadline = budget.deadline()
    for v in g.vertices:
        _tick(deadline, "criticality")
        if tr_value(delete_vertex(g, v), budget) >= k:
            return False
    return True


def is_edge_critical(g: Graph, budget: Optional[SearchBudget] = None) -> bool:
    """Every edge deletion lowers the transitivity (vacuous without edges)."""
    budget = budget or SearchBudget()
    k = tr_value(g, budget)
    deadline = budget.deadline()
    for u, v in g.edges():
        _tick(deadline, "criticality")
        if tr_value(delete_edge(g, u, v), budget) >= k:
            return False
    return True


def is_ve_critical(g: Graph, budget: Optional[SearchBudget] = None) -> bool:
    return is_vertex_critical(g, budget) and is_edge_critical(g, budget)
