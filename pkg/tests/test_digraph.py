import pytest

from minhom.digraph import (
    Digraph,
    GraphError,
    bipartite_replication,
    converse,
    directed_cycle,
    disjoint_union,
    extension_decomposition,
    induced_subdigraph,
    is_acyclic,
    is_directed_cycle,
    strong_components,
    transitive_tournament,
    weak_components,
)

from conftest import dg


def test_invariants_enforced():
    with pytest.raises(GraphError):
        dg(2, [(0, 0)])
    with pytest.raises(GraphError):
        dg(2, [(0, 2)])
    with pytest.raises(GraphError):
        Digraph.from_arcs(2, [(0, 1), (0, 1)])


def test_strong_components_examples(c3, tt3):
    assert [set(c) for c in strong_components(c3)] == [{0, 1, 2}]
    assert [set(c) for c in strong_components(tt3)] == [{0}, {1}, {2}]
    assert [set(c) for c in strong_components(dg(2, [(0, 1), (1, 0)]))] == [{0, 1}]


def test_strong_components_topological():
    d = dg(5, [(3, 4), (4, 3), (0, 3), (1, 0), (2, 1), (1, 2)])
    comps = list(strong_components(d))
    where = {v: i for i, c in enumerate(comps) for v in c}
    assert all(where[u] <= where[v] for u, v in d.arcs)
    assert sorted(len(c) for c in comps) == [1, 2, 2]


def test_weak_components(tt3):
    c2_plus = dg(3, [(0, 1), (1, 0)])
    assert len(weak_components(c2_plus)) == 2
    assert len(weak_components(tt3)) == 1
    both = disjoint_union(directed_cycle(3), directed_cycle(2))
    assert sorted(len(c) for c in weak_components(both)) == [2, 3]


def test_bipartite_replication(tt3):
    b = bipartite_replication(dg(2, [(0, 1)]))
    assert b.edges == {(0, 1)}
    assert not b.white_nbrs[1] and not b.black_nbrs[0]
    assert bipartite_replication(directed_cycle(2)).edges == {(0, 1), (1, 0)}
    assert bipartite_replication(tt3).edges == {(0, 1), (0, 2), (1, 2)}


def test_converse(c3, tt3):
    assert converse(dg(2, [(0, 1)])).arcs == {(1, 0)}
    assert is_directed_cycle(converse(c3)) == 3
    assert converse(tt3).arcs == {(1, 0), (2, 0), (2, 1)}
    assert converse(converse(tt3)) == tt3


def test_induced_subdigraph(tt3):
    sub, back = induced_subdigraph(tt3, {0, 2})
    assert sub.arcs == {(0, 1)} and back == [0, 2]
    assert induced_subdigraph(tt3, tt3.vertices)[0] == tt3
    assert induced_subdigraph(tt3, [])[0].n == 0
    with pytest.raises(GraphError):
        induced_subdigraph(tt3, {5})


def test_acyclic_and_cycle():
    tt4 = transitive_tournament(4)
    assert is_acyclic(tt4) and is_directed_cycle(tt4) is None
    c2 = directed_cycle(2)
    assert not is_acyclic(c2) and is_directed_cycle(c2) == 2
    # C3 with an extra vertex 3 -> 0
    assert is_directed_cycle(dg(4, [(0, 1), (1, 2), (2, 0), (3, 0)])) is None


def test_extension_decomposition(c3, tt3):
    assert sorted(map(sorted, extension_decomposition(c3))) == [[0], [1], [2]]
    parts = extension_decomposition(dg(4, [(0, 2), (1, 2), (2, 3), (3, 0), (3, 1)]))
    assert sorted(map(sorted, parts)) == [[0, 1], [2], [3]]
    assert extension_decomposition(tt3) is None


def test_extension_reconstructs_arcs():
    d = dg(6, [(a, b) for a in (0, 1) for b in (2, 3)] + [(a, b) for a in (2, 3) for b in (4, 5)]
           + [(a, b) for a in (4, 5) for b in (0, 1)])
    parts = extension_decomposition(d)
    rebuilt = {(u, v) for i in range(3) for u in parts[i] for v in parts[(i + 1) % 3]}
    assert rebuilt == d.arcs
