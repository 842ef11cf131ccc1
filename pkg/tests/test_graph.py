import pytest

from transitivity import ContractError, MalformedPartition
from transitivity.graph import (
    Graph,
    TransitivePartition,
    complement,
    complete,
    complete_bipartite,
    components,
    cycle,
    delete_edge,
    delete_vertex,
    disjoint_union,
    dominates,
    empty,
    induced_subgraph,
    path,
    relabel,
    star,
    verify_transitive_partition,
)

C4 = cycle(4)


def test_graph_basics():
    g = Graph(4, [(0, 1), (1, 2), (2, 1)])
    assert g.n == 4 and g.m == 2
    assert g.degree(1) == 2 and g.max_degree == 2
    assert list(g.edges()) == [(0, 1), (1, 2)]
    assert g == Graph(4, [(2, 1), (1, 0)])
    assert hash(g) == hash(Graph(4, [(2, 1), (1, 0)]))


@pytest.mark.parametrize("edges", [[(0, 0)], [(0, 5)], [(-1, 2)]])
def test_graph_rejects_bad_edges(edges):
    with pytest.raises(ContractError):
        Graph(3, edges)


def test_dominates_examples():
    k13 = star(3)
    assert dominates(k13, {0}, {1, 2, 3})
    assert not dominates(empty(2), {0}, {1})
    assert dominates(C4, {0, 1}, {2})
    assert not dominates(C4, {0}, {2})
    assert dominates(C4, {0}, set())


def test_dominates_contract():
    with pytest.raises(ContractError):
        dominates(C4, {0, 1}, {1, 2})
    with pytest.raises(ContractError):
        dominates(C4, {0}, {7})


def test_verifier_examples():
    assert verify_transitive_partition(C4, TransitivePartition.of([{0, 1}, {2}, {3}]))
    assert not verify_transitive_partition(C4, TransitivePartition.of([{1, 3}, {0}, {2}]))
    for g in (C4, path(5), empty(3), complete(4)):
        assert verify_transitive_partition(g, [list(g.vertices)])


@pytest.mark.parametrize("classes", [[[0, 1], [1, 2, 3]], [[0, 1], [2]], [[0, 1, 2, 3], []], [[0, 1, 2, 3, 9]]])
def test_verifier_malformed(classes):
    with pytest.raises(MalformedPartition):
        verify_transitive_partition(C4, classes)


def test_verifier_matches_pairwise_definition(catalog7):
    # compare the O(n+m) check with the definition on every ordered split into blocks
    import itertools

    for g in catalog7[:300]:
        for labels in itertools.product(range(3), repeat=g.n):
            classes = [[v for v in g.vertices if labels[v] == c] for c in range(3)]
            classes = [c for c in classes if c]
            expect = all(dominates(g, classes[i], classes[j])
                         for i in range(len(classes)) for j in range(i + 1, len(classes)))
            assert verify_transitive_partition(g, classes) == expect


def test_complement_examples():
    assert complement(complete(3)) == empty(3)
    p4 = path(4)  # a-b-c-d as 0-1-2-3
    assert complement(p4) == Graph(4, [(1, 3), (3, 0), (0, 2)])
    assert complement(complete_bipartite(2, 2)) == Graph(4, [(0, 1), (2, 3)])


def test_induced_and_deletions():
    h, labels = induced_subgraph(C4, [0, 1, 2])
    assert h == path(3) and labels == (0, 1, 2)
    assert induced_subgraph(C4, range(4))[0] == C4
    assert induced_subgraph(complete(4), [0, 1, 2])[0] == complete(3)
    assert delete_edge(complete(2), 0, 1) == empty(2)
    assert delete_vertex(complete(3), 1) == complete(2)
    assert delete_vertex(path(4), 0) == path(3)
    with pytest.raises(ContractError):
        delete_edge(path(3), 0, 2)
    with pytest.raises(ContractError):
        delete_vertex(path(3), 3)
    with pytest.raises(ContractError):
        induced_subgraph(path(3), [5])


def test_union_relabel_components():
    g = disjoint_union(complete(3), empty(2), path(2))
    assert g.n == 7 and g.m == 4
    assert sorted(map(sorted, components(g))) == [[0, 1, 2], [3], [4], [5, 6]]
    assert relabel(path(3), [2, 0, 1]) == Graph(3, [(2, 0), (0, 1)])
