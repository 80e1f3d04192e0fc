from hypothesis import given, settings
from hypothesis import strategies as st

from minhom import io as fmt
from minhom.classifier import classify, verify_certificate, verify_witness
from minhom.digraph import BipartiteGraph, Digraph, converse, relabel, transitive_tournament
from minhom.ordering import find_minmax_ordering, verify_minmax
from minhom.pibigraph import (
    find_bipartite_minmax_ordering,
    find_forbidden_bigraph,
    is_minmax_bipartite_ordering,
    obstruction_is_genuine,
)
from minhom.recognizers import is_locally_semicomplete
from minhom.solver import brute_force_minhom, solve


@st.composite
def digraphs(draw, max_n=5):
    n = draw(st.integers(1, max_n))
    pairs = [(u, v) for u in range(n) for v in range(n) if u != v]
    arcs = draw(st.sets(st.sampled_from(pairs))) if pairs else set()
    return Digraph(n, frozenset(arcs))


@st.composite
def bigraphs(draw):
    nw, nb = draw(st.integers(1, 5)), draw(st.integers(1, 5))
    edges = draw(st.sets(st.tuples(st.integers(0, nw - 1), st.integers(0, nb - 1))))
    return BipartiteGraph(nw, nb, frozenset(edges))


@st.composite
def instances(draw):
    h = draw(digraphs(max_n=4))
    g = draw(digraphs(max_n=5))
    costs = draw(st.lists(st.lists(st.integers(-5, 5), min_size=h.n, max_size=h.n), min_size=g.n, max_size=g.n))
    return g, h, costs


@given(digraphs())
def test_digraph_text_round_trip(d):
    assert fmt.parse_digraph(fmt.format_digraph(d)) == d


@given(digraphs())
def test_orderings_found_are_valid(d):
    o = find_minmax_ordering(d)
    if o is not None:
        assert verify_minmax(d, o)


@settings(max_examples=150)
@given(digraphs())
def test_classifier_outputs_verify(d):
    for verdict in classify(d):
        for comp in verdict.components:
            if comp.certificate is not None:
                assert verify_certificate(d, comp.vertices, comp.certificate)
            if comp.witness is not None:
                assert verify_witness(d, comp.witness)


@given(digraphs())
def test_ls_verdict_invariant_under_converse(d):
    if is_locally_semicomplete(d):
        assert classify(d, "ls")[0].outcome == classify(converse(d), "ls")[0].outcome


@given(bigraphs())
def test_pib_recognizers_agree(b):
    order = find_bipartite_minmax_ordering(b)
    obs = find_forbidden_bigraph(b)
    assert (order is None) == (obs is not None)
    if order is not None:
        assert is_minmax_bipartite_ordering(b, order)
    else:
        assert obstruction_is_genuine(b, obs)


@settings(max_examples=150)
@given(instances())
def test_solve_matches_brute_force(inst):
    g, h, c = inst
    ref = brute_force_minhom(g, h, c)
    res = solve(g, h, c).homomorphism
    assert (ref is None) == (res is None)
    if ref is not None:
        assert res.cost == ref.cost


@given(instances(), st.randoms(use_true_random=False))
def test_optimum_invariant_under_relabelling_input(inst, rnd):
    g, h, c = inst
    perm = list(range(g.n))
    rnd.shuffle(perm)
    g2 = relabel(g, perm)
    c2 = [None] * g.n
    for u in range(g.n):
        c2[perm[u]] = c[u]
    a, b = brute_force_minhom(g, h, c), brute_force_minhom(g2, h, c2)
    assert (a is None) == (b is None)
    assert a is None or a.cost == b.cost


@given(st.integers(1, 6))
def test_transitive_tournaments_have_identity_ordering(n):
    assert verify_minmax(transitive_tournament(n), tuple(range(n)))
