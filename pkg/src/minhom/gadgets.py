"""The cycle-plus-one-vertex target digraphs H1(k) and H2(k).

Vertex ``i`` (0-based) stands for label ``i + 1``: labels ``1..k`` form the
directed cycle and label ``k + 1`` is the extra vertex.
"""

from __future__ import annotations

from .digraph import Digraph


def _cycle_arcs(k: int) -> list[tuple[int, int]]:
    return [(i, (i + 1) % k) for i in range(k)]


def gadget_h1(k: int) -> Digraph:
    """Directed k-cycle plus a vertex dominated by label k and dominating label 1."""
    if k < 2:
        raise ValueError("H1 needs k >= 2")
    return Digraph(k + 1, frozenset(_cycle_arcs(k) + [(k - 1, k), (k, 0)]))


def gadget_h2(k: int) -> Digraph:
    """Directed k-cycle plus a vertex dominated by label k and dominating labels 1 and 2."""
    if k < 3:
        raise ValueError("H2 needs k >= 3")
    return Digraph(k + 1, frozenset(_cycle_arcs(k) + [(k - 1, k), (k, 0), (k, 1)]))
