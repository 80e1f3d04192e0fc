import itertools

import numpy as np
import pytest

from minhom.digraph import Digraph, directed_cycle, transitive_tournament
from minhom.flow import FlowNetwork, min_cut
from minhom.ordering import MinMaxOrdering, PreconditionError, find_minmax_ordering
from minhom.solver import (
    EncodingError,
    IncompatibleAlgorithm,
    brute_force_minhom,
    encode_arc_constraint,
    hom_cost,
    is_homomorphism,
    solve,
    solve_cycle_shift,
    solve_via_minmax,
)
from minhom.suites import _random_input, _random_target

from conftest import dg

ARC = dg(2, [(0, 1)])
TT2 = transitive_tournament(2)


def exhaustive(g, h, c):
    best = None
    for f in itertools.product(range(h.n), repeat=g.n):
        if is_homomorphism(g, h, f):
            cost = hom_cost(c, f)
            if best is None or cost < best[0]:
                best = (cost, f)
    return best


def test_is_homomorphism(c3):
    assert is_homomorphism(c3, c3, [0, 1, 2])
    assert not is_homomorphism(ARC, TT2, [0, 0])
    assert is_homomorphism(c3, c3, [1, 2, 0])


def test_brute_force_examples(c3, tt3):
    assert brute_force_minhom(dg(1, []), TT2, [[5, 7]]).cost == 5
    assert brute_force_minhom(c3, tt3, [[0] * 3] * 3) is None
    assert brute_force_minhom(c3, c3, [[0, 1, 2]] * 3).cost == 3


def test_brute_force_lex_least():
    # all four mappings of two isolated vertices to TT2 cost 0
    assert brute_force_minhom(dg(2, []), TT2, [[0, 0], [0, 0]]).f == (0, 0)
    g = dg(3, [(0, 1), (1, 2)])
    h = transitive_tournament(4)
    c = [[0] * 4 for _ in range(3)]
    assert brute_force_minhom(g, h, c).f == (0, 1, 2)


def test_brute_force_domains():
    h = transitive_tournament(3)
    hom = brute_force_minhom(ARC, h, [[0, 0, 0], [0, 0, 0]], domains=[[1], [0, 1, 2]])
    assert hom.f == (1, 2)


def test_min_cut_examples():
    net = FlowNetwork(inf=100)
    net.add_arc("s", "t", 5)
    assert min_cut(net)[0] == 5
    net = FlowNetwork(inf=100)
    net.add_arc("s", "a", 3)
    net.add_arc("a", "t", 2)
    assert min_cut(net) == (2, frozenset({"s", "a"}))
    net = FlowNetwork(inf=100)
    for x in "ab":
        net.add_arc("s", x, 1)
        net.add_arc(x, "t", 1)
    assert min_cut(net)[0] == 2
    with pytest.raises(ValueError):
        net.add_arc("s", "a", -1)


def test_encode_examples():
    enc = encode_arc_constraint({(0, 1)}, 2)
    assert enc.decoded() == {(0, 1)}
    diag = encode_arc_constraint({(0, 0), (1, 1)}, 2)
    assert diag.decoded() == {(0, 0), (1, 1)}
    assert set(diag.implications) == {(0, 1, 1, 1), (1, 1, 0, 1)}
    tt3_rel = {(0, 1), (0, 2), (1, 2)}
    assert encode_arc_constraint(tt3_rel, 3).decoded() == tt3_rel


def test_encode_rejects_non_lattice_relation():
    with pytest.raises(EncodingError):
        encode_arc_constraint({(0, 1), (1, 0)}, 2)


def test_minmax_solver_examples(c3, tt3):
    c = [[0, 10], [10, 0]]
    hom = solve_via_minmax(ARC, TT2, c, MinMaxOrdering((0, 1)))
    assert hom.f == (0, 1) and hom.cost == 0
    assert solve_via_minmax(c3, tt3, [[0] * 3] * 3, MinMaxOrdering((0, 1, 2))) is None
    with pytest.raises(PreconditionError):
        solve_via_minmax(ARC, c3, [[0] * 3] * 2, MinMaxOrdering((0, 1, 2)))


def test_minmax_solver_with_other_valid_order():
    h = dg(3, [(0, 2), (1, 2)])  # two sources into a sink
    c = [[3, -1, 0], [0, 0, -4]]
    for order in ((0, 1, 2), (1, 0, 2)):
        hom = solve_via_minmax(ARC, h, c, MinMaxOrdering(order))
        assert hom.cost == brute_force_minhom(ARC, h, c).cost == -5


def test_shift_examples(c3):
    assert solve_cycle_shift(c3, c3, [[1, 0, 0]] * 3).cost == 1
    assert solve_cycle_shift(directed_cycle(2), c3, [[0] * 3] * 2) is None
    ext = dg(4, [(0, 2), (1, 2), (2, 3), (3, 0), (3, 1)])
    assert solve_cycle_shift(dg(1, []), ext, [[4, 1, 9, 9]]).cost == 1
    with pytest.raises(PreconditionError):
        solve_cycle_shift(ARC, TT2, [[0, 0], [0, 0]])


def test_solve_dispatch(c3, tt3):
    r = solve(c3, c3, [[0, 1, 2]] * 3)
    assert r.algorithms == ["shift"] and r.homomorphism.cost == 3
    r = solve(ARC, tt3, [[0, 0, 0], [0, 0, 0]])
    assert r.algorithms == ["mincut"] and r.feasible
    with pytest.raises(IncompatibleAlgorithm):
        solve(ARC, c3, [[0] * 3] * 2, algorithm="mincut")
    with pytest.raises(IncompatibleAlgorithm):
        solve(ARC, tt3, [[0] * 3] * 2, algorithm="shift")


def test_solve_falls_back_to_brute_force():
    # C3 plus a pendant vertex: NP-hard for both classes
    h = dg(4, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 0)])
    r = solve(ARC, h, [[0] * 4] * 2)
    assert r.brute_force_fallback and r.feasible
    assert "warning" in r.to_json()


def test_solve_across_target_components():
    h = Digraph(5, frozenset({(0, 1), (2, 3), (3, 4), (4, 2)}))
    g = dg(3, [(0, 1), (1, 2), (2, 0)])
    c = [[0, 0, 5, 5, 5]] * 3
    r = solve(g, h, c)
    assert r.homomorphism.cost == 15 and set(r.homomorphism.f) == {2, 3, 4}
    assert r.homomorphism.cost == brute_force_minhom(g, h, c).cost


def test_random_agreement_and_exhaustive_oracle():
    rng = np.random.default_rng(11)
    families = ("transitive_oriented", "acyclic_locally_semicomplete", "directed_cycle", "c3_extension")
    for trial in range(160):
        h = _random_target(rng, families[trial % 4])
        g = _random_input(rng, h)
        if g.n > 5 or h.n > 5:
            continue
        c = rng.integers(-5, 6, size=(g.n, h.n)).tolist()
        ref = exhaustive(g, h, c)
        bf = brute_force_minhom(g, h, c)
        assert (ref is None) == (bf is None)
        if ref is not None:
            assert bf.cost == ref[0]
        res = solve(g, h, c).homomorphism
        assert (res is None) == (ref is None)
        if ref is not None:
            assert res.cost == ref[0]
        o = find_minmax_ordering(h)
        if o is not None:
            mc = solve_via_minmax(g, h, c, o)
            assert (mc is None) == (ref is None) and (mc is None or mc.cost == ref[0])


def test_cost_shift_equivariance():
    rng = np.random.default_rng(5)
    h = transitive_tournament(4)
    for _ in range(40):
        g = _random_input(rng, h)
        c = rng.integers(-5, 6, size=(g.n, h.n)).tolist()
        delta = rng.integers(-10, 11, size=g.n).tolist()
        shifted = [[x + delta[u] for x in row] for u, row in enumerate(c)]
        a, b = brute_force_minhom(g, h, c), brute_force_minhom(g, h, shifted)
        if a is None:
            assert b is None
            continue
        assert b.cost == a.cost + sum(delta)
        assert a.f == b.f  # same lexicographically least optimum
