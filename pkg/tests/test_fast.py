import random

import pytest

from conftest import random_graph
from transitivity import InvalidCertificate
from transitivity.fast_transitivity import (
    Unsupported,
    min_eds_chain,
    transitivity_auto,
    transitivity_chain,
    transitivity_cochain,
    transitivity_split,
)
from transitivity.graph import (
    Graph,
    complement,
    complete,
    complete_bipartite,
    cycle,
    disjoint_union,
    empty,
    path,
    star,
    verify_transitive_partition,
)
from transitivity.oracle import eds_bruteforce, tr_value
from transitivity.recognition import (
    ChainOrdering,
    SplitPartition,
    chain_ordering,
    cochain_ordering,
    split_partition,
)

K4_PENDANT = Graph(5, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (0, 4)])
P4_XY = Graph(4, [(0, 2), (0, 3), (1, 2)])  # x1=0, x2=1, y1=2, y2=3


def check(g, res, expect):
    assert res.value == expect
    assert res.verified and res.certificate.k == expect
    assert verify_transitive_partition(g, res.certificate)


def test_split_examples():
    # K = {a,b,c} = {0,1,2}, S = {s1,s2} = {3,4}
    g = Graph(5, [(0, 1), (0, 2), (1, 2), (3, 0), (4, 1), (4, 2)])
    check(g, transitivity_split(g, split_partition(g)), 4)
    assert tr_value(g) == 4
    check(K4_PENDANT, transitivity_split(K4_PENDANT, split_partition(K4_PENDANT)), 4)
    for n in range(1, 7):
        check(complete(n), transitivity_split(complete(n), split_partition(complete(n))), n)


def test_split_rejects_bad_certificates():
    with pytest.raises(InvalidCertificate):
        transitivity_split(K4_PENDANT, SplitPartition(s=frozenset({3, 4}), k=frozenset({0, 1, 2})))
    with pytest.raises(InvalidCertificate):
        transitivity_split(K4_PENDANT, SplitPartition(s=frozenset({0, 4}), k=frozenset({1, 2, 3})))
    with pytest.raises(InvalidCertificate):
        transitivity_split(K4_PENDANT, SplitPartition(s=frozenset({4}), k=frozenset({0, 1, 2})))


def test_chain_examples():
    check(complete_bipartite(3, 3), transitivity_chain(complete_bipartite(3, 3),
                                                        chain_ordering(complete_bipartite(3, 3))), 4)
    co = chain_ordering(P4_XY)
    assert co.j == 1
    check(P4_XY, transitivity_chain(P4_XY, co), 3)
    check(star(3), transitivity_chain(star(3), chain_ordering(star(3))), 2)
    check(empty(3), transitivity_chain(empty(3), chain_ordering(empty(3))), 1)


def test_chain_rejects_bad_certificate():
    g = complete_bipartite(2, 2)
    with pytest.raises(InvalidCertificate):
        transitivity_chain(g, ChainOrdering((0, 1), (2, 3), 1))


def test_min_eds_examples():
    g = complete_bipartite(2, 2)
    assert len(min_eds_chain(chain_ordering(g))) == 2
    assert min_eds_chain(chain_ordering(P4_XY)) == [(0, 2)]
    assert len(min_eds_chain(chain_ordering(complete(2)))) == 1


def test_min_eds_against_bruteforce():
    rng = random.Random(3)
    for _ in range(150):
        a, b = rng.randint(0, 5), rng.randint(0, 5)
        # random nested neighborhoods: x_i sees y_1..y_{d_i}
        degs = sorted((rng.randint(0, b) for _ in range(a)), reverse=True)
        edges = [(i, a + t) for i, d in enumerate(degs) for t in range(d)]
        g = Graph(a + b, edges)
        co = chain_ordering(g)
        eds = min_eds_chain(co)
        assert len(eds) == eds_bruteforce(g).size
        assert all(g.has_edge(u, v) for u, v in eds)


def test_cochain_examples():
    two_k2 = Graph(4, [(0, 1), (2, 3)])
    co = cochain_ordering(two_k2)
    assert co.p == 2
    check(two_k2, transitivity_cochain(two_k2, co), 2)
    co = cochain_ordering(path(4))
    assert co.p == 1
    check(path(4), transitivity_cochain(path(4), co), 3)
    k3k1 = disjoint_union(complete(3), empty(1))
    co = cochain_ordering(k3k1)
    assert co.p == 1
    check(k3k1, transitivity_cochain(k3k1, co), 3)


def test_cochain_rejects_bad_certificate():
    g = path(4)
    co = cochain_ordering(g)
    with pytest.raises(InvalidCertificate):
        transitivity_cochain(g, ChainOrdering(co.sigma_x, co.sigma_y, co.j))
    with pytest.raises(InvalidCertificate):
        transitivity_cochain(g, ChainOrdering(co.sigma_x, co.sigma_y, co.j + 1, True))


def test_no_certificate_mode():
    res = transitivity_split(K4_PENDANT, split_partition(K4_PENDANT), certificate=False)
    assert res.value == 4 and res.certificate is None


def test_auto_dispatch():
    res = transitivity_auto(K4_PENDANT)
    assert res.method == "split" and res.value == 4
    res = transitivity_auto(cycle(5))
    assert res.method == "oracle" and res.value == 3
    assert transitivity_auto(complete_bipartite(2, 3)).method == "chain"
    assert transitivity_auto(complement(complete_bipartite(3, 3))).method == "cochain"


def test_auto_unsupported_large():
    # 200000 disjoint 5-cycles: in no recognized class, far beyond exact search
    k = 200_000
    edges = [(5 * c + i, 5 * c + (i + 1) % 5) for c in range(k) for i in range(5)]
    g = Graph(5 * k, edges)
    res = transitivity_auto(g)
    assert isinstance(res, Unsupported)
    assert "class not recognized" in res.reason


def test_fast_solvers_on_random_instances():
    rng = random.Random(11)
    for _ in range(300):
        g = random_graph(rng.randint(1, 9), rng.random(), rng)
        res = transitivity_auto(g)
        assert not isinstance(res, Unsupported)
        assert res.verified
        assert res.value == tr_value(g)
