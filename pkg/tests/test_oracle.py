import itertools
import random

import pytest

from conftest import random_graph
from transitivity import BudgetExceeded, ContractError
from transitivity.graph import (
    Graph,
    complete,
    complete_bipartite,
    cycle,
    empty,
    path,
    star,
    verify_transitive_partition,
)
from transitivity.oracle import (
    SearchBudget,
    contains_atom,
    eds_bruteforce,
    find_embedding,
    grundy_bruteforce,
    is_edge_critical,
    is_edge_dominating,
    is_grundy_partition,
    is_ve_critical,
    is_vertex_critical,
    tr_value,
    transitivity_bruteforce,
)


def ordered_partitions(items):
    """Every ordered set partition of ``items``."""
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in ordered_partitions(rest):
        for i in range(len(part)):
            yield part[:i] + [part[i] + [first]] + part[i + 1:]
        for i in range(len(part) + 1):
            yield part[:i] + [[first]] + part[i:]


def naive_tr(g):
    return max(len(p) for p in ordered_partitions(list(g.vertices))
               if verify_transitive_partition(g, p))


def naive_grundy(g):
    best = 0
    for order in itertools.permutations(g.vertices):
        color = {}
        for v in order:
            used = {color[u] for u in g.adj[v] if u in color}
            c = 0
            while c in used:
                c += 1
            color[v] = c
        best = max(best, max(color.values()) + 1)
    return best


def test_tr_examples():
    assert transitivity_bruteforce(complete(1)).value == 1
    res = transitivity_bruteforce(cycle(4))
    assert res.value == 3 and res.verified and res.certificate.k == 3
    assert verify_transitive_partition(cycle(4), [{0, 1}, {2}, {3}])
    assert transitivity_bruteforce(path(4)).value == 3
    assert transitivity_bruteforce(empty(0)).value == 0
    assert transitivity_bruteforce(cycle(5)).value == 3


def test_tr_against_ordered_partitions(catalog7):
    graphs = [g for g in catalog7 if g.n <= 6]
    for g in graphs:
        expect = naive_tr(g)
        for strategy in ("A", "B"):
            res = transitivity_bruteforce(g, strategy=strategy)
            assert res.value == expect and res.verified
        assert tr_value(g) == expect


def test_grundy_examples():
    for n in range(1, 6):
        assert grundy_bruteforce(complete(n)).value == n
    assert grundy_bruteforce(cycle(4)).value == 2
    assert grundy_bruteforce(path(4)).value == 3


def test_grundy_against_greedy(catalog7):
    for g in catalog7:
        if g.n > 6:
            break
        res = grundy_bruteforce(g)
        assert res.value == naive_grundy(g)
        assert is_grundy_partition(g, res.partition.classes)


def test_eds_examples():
    assert eds_bruteforce(complete(3)).size == 1
    res = eds_bruteforce(path(4))
    assert res.size == 1 and res.edges == ((1, 2),)
    assert eds_bruteforce(cycle(5)).size == 2
    assert eds_bruteforce(empty(3)).size == 0
    assert is_edge_dominating(cycle(4), [(0, 1), (2, 3)])


def test_budget_outcomes():
    big = random_graph(30, 0.3, random.Random(0))
    with pytest.raises(BudgetExceeded):
        transitivity_bruteforce(big)
    with pytest.raises(BudgetExceeded):
        grundy_bruteforce(big)
    with pytest.raises(BudgetExceeded):
        eds_bruteforce(big)
    with pytest.raises(BudgetExceeded):
        tr_value(path(5), SearchBudget(max_vertices=4))
    with pytest.raises(ContractError):
        transitivity_bruteforce(path(3), strategy="C")


def test_budget_env(monkeypatch):
    monkeypatch.setenv("TRANSITIVITY_BUDGET", "3")
    with pytest.raises(BudgetExceeded):
        tr_value(path(4))


def test_find_embedding():
    p4 = path(4)
    m = find_embedding(p4, cycle(4))
    assert m is not None
    for u, v in p4.edges():
        assert cycle(4).has_edge(m[u], m[v])
    assert find_embedding(complete(3), complete_bipartite(3, 3)) is None
    assert find_embedding(complete(4), complete(3)) is None


def test_contains_atom_examples():
    assert contains_atom(cycle(4), 3)
    assert not contains_atom(complete(3), 4)
    hit = contains_atom(complete(4), 4)
    assert hit and hit.atom.n <= 4
    assert contains_atom(empty(1), 1)
    with pytest.raises(BudgetExceeded):
        contains_atom(path(3), 6)


def test_criticality_examples():
    assert is_ve_critical(complete(2))
    assert not is_edge_critical(star(2))
    assert is_ve_critical(path(4))
    assert is_ve_critical(complete(3))
    assert not is_vertex_critical(Graph(3, [(0, 1)]))
    assert not is_ve_critical(cycle(4))
