import pytest

from minhom.digraph import converse, directed_cycle, is_acyclic, transitive_tournament
from minhom.enumerate import all_digraphs
from minhom.recognizers import (
    has_symmetric_arc,
    is_locally_semicomplete,
    is_quasi_transitive,
    is_semicomplete,
    is_transitive_oriented,
    recognize_all,
)

from conftest import dg


def test_semicomplete(c3):
    assert is_semicomplete(c3)
    assert not is_semicomplete(directed_cycle(4))
    assert is_semicomplete(dg(1, []))


def test_locally_semicomplete(c3):
    assert is_locally_semicomplete(directed_cycle(4))
    assert not is_locally_semicomplete(dg(3, [(0, 1), (0, 2)]))
    assert is_locally_semicomplete(transitive_tournament(5))


def test_quasi_transitive(c3):
    assert is_quasi_transitive(c3)
    assert not is_quasi_transitive(directed_cycle(4))
    assert is_quasi_transitive(transitive_tournament(5))


def test_transitive_oriented(c3):
    assert is_transitive_oriented(transitive_tournament(4))
    assert not is_transitive_oriented(c3)
    assert not is_transitive_oriented(directed_cycle(2))


def test_symmetric_arc(c3, tt3):
    assert has_symmetric_arc(directed_cycle(2)) == (0, 1)
    assert has_symmetric_arc(tt3) is None
    assert has_symmetric_arc(dg(3, [(0, 1), (1, 2), (2, 0), (1, 0)])) == (0, 1)


def test_recognize_all_keys(tt3):
    rec = recognize_all(tt3)
    assert rec["transitive_oriented"] and rec["tournament"] and rec["acyclic"]


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_implications_and_converse_invariance(n):
    for d in all_digraphs(n):
        sc, ls, qt, to = (is_semicomplete(d), is_locally_semicomplete(d),
                          is_quasi_transitive(d), is_transitive_oriented(d))
        if sc:
            assert ls and qt
        if to:
            assert qt and is_acyclic(d)
        assert recognize_all(d) == recognize_all(converse(d))
