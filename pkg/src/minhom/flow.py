"""Capacitated networks and minimum s-t cuts (networkx backend)."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Hashable

import networkx as nx
from networkx.algorithms.flow import edmonds_karp


@dataclass
class FlowNetwork:
    """Directed network with nonnegative integer capacities.

    ``inf`` is the distinguished "infinite" capacity: a cut of value ``>= inf``
    means every cut crosses an infinite arc.
    """

    source: Hashable = "s"
    sink: Hashable = "t"
    inf: int = 1
    arcs: dict[tuple[Hashable, Hashable], int] = field(default_factory=dict)

    def add_arc(self, a: Hashable, b: Hashable, cap: int) -> None:
        if cap < 0:
            raise ValueError("capacities must be nonnegative")
        if a == b:
            return
        cap = min(cap, self.inf)
        # parallel arcs merge; infinite stays infinite
        self.arcs[a, b] = min(self.arcs.get((a, b), 0) + cap, self.inf)

    def add_infinite(self, a: Hashable, b: Hashable) -> None:
        self.add_arc(a, b, self.inf)

    def is_infinite(self, value: int) -> bool:
        return value >= self.inf


def min_cut(net: FlowNetwork) -> tuple[int, frozenset]:
    """Min-cut value and the minimal source side (vertices reachable in the residual graph)."""
    g = nx.DiGraph()
    g.add_node(net.source)
    g.add_node(net.sink)
    for (a, b), cap in net.arcs.items():
        g.add_edge(a, b, capacity=cap)
    value, (side, _) = nx.minimum_cut(g, net.source, net.sink, flow_func=edmonds_karp)
    return int(value), frozenset(side)
