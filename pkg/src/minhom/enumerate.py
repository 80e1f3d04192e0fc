"""Exhaustive and random generators of small digraphs used by the verification suites."""

from __future__ import annotations

from itertools import combinations, product
from typing import Iterator

import numpy as np

from .digraph import BipartiteGraph, Digraph


def all_digraphs(n: int) -> Iterator[Digraph]:
    """Every labelled loopless digraph on ``n`` vertices (``4 ** C(n,2)`` of them)."""
    pairs = list(combinations(range(n), 2))
    # per pair: none, forward, backward, both
    for states in product(range(4), repeat=len(pairs)):
        arcs = []
        for (u, v), s in zip(pairs, states):
            if s & 1:
                arcs.append((u, v))
            if s & 2:
                arcs.append((v, u))
        yield Digraph(n, frozenset(arcs))


def all_oriented(n: int) -> Iterator[Digraph]:
    """Every labelled oriented graph (no 2-cycles) on ``n`` vertices (``3 ** C(n,2)``)."""
    pairs = list(combinations(range(n), 2))
    for states in product(range(3), repeat=len(pairs)):
        arcs = [(u, v) if s == 1 else (v, u) for (u, v), s in zip(pairs, states) if s]
        yield Digraph(n, frozenset(arcs))


def all_semicomplete(n: int) -> Iterator[Digraph]:
    pairs = list(combinations(range(n), 2))
    for states in product(range(1, 4), repeat=len(pairs)):
        arcs = []
        for (u, v), s in zip(pairs, states):
            if s & 1:
                arcs.append((u, v))
            if s & 2:
                arcs.append((v, u))
        yield Digraph(n, frozenset(arcs))


def all_transitive_oriented(n: int) -> Iterator[Digraph]:
    """Every labelled transitive oriented graph (strict partial order) on ``n`` vertices.

    Built vertex by vertex: the new vertex gets a down-set D and an up-set U of
    the current order with D below U pointwise, which yields every labelled
    order exactly once.
    """

    def grow(k: int, below: list[int]) -> Iterator[list[int]]:
        # below[v]: bitmask of vertices strictly below v
        if k == n:
            yield below
            return
        above = [0] * k
        for v in range(k):
            for u in range(k):
                if below[v] >> u & 1:
                    above[u] |= 1 << v
        for dmask in range(1 << k):
            # D must be down-closed
            if any(dmask >> v & 1 and below[v] & ~dmask for v in range(k)):
                continue
            for umask in range(1 << k):
                if umask & dmask:
                    continue
                if any(umask >> v & 1 and above[v] & ~umask for v in range(k)):
                    continue
                # transitivity through the new vertex
                if any(dmask >> d & 1 and umask & ~above[d] for d in range(k)):
                    continue
                nxt = [b | (1 << k if umask >> v & 1 else 0) for v, b in enumerate(below)]
                yield from grow(k + 1, nxt + [dmask])

    for below in grow(0, []):
        yield Digraph(n, frozenset((u, v) for v in range(n) for u in range(n) if below[v] >> u & 1))


def all_bipartite(nw: int, nb: int) -> Iterator[BipartiteGraph]:
    pairs = [(w, b) for w in range(nw) for b in range(nb)]
    for mask in range(1 << len(pairs)):
        yield BipartiteGraph(nw, nb, frozenset(p for i, p in enumerate(pairs) if mask >> i & 1))


def random_digraph(rng: np.random.Generator, n: int, p: float) -> Digraph:
    arcs = [(u, v) for u in range(n) for v in range(n) if u != v and rng.random() < p]
    return Digraph(n, frozenset(arcs))


def random_dag(rng: np.random.Generator, n: int, p: float) -> Digraph:
    perm = rng.permutation(n).tolist()
    arcs = [(perm[i], perm[j]) for i in range(n) for j in range(i + 1, n) if rng.random() < p]
    return Digraph(n, frozenset(arcs))


def random_transitive_oriented(rng: np.random.Generator, n: int, p: float) -> Digraph:
    d = random_dag(rng, n, p)
    # transitive closure
    reach = [set(d.out_nbrs[v]) for v in range(n)]
    changed = True
    while changed:
        changed = False
        for v in range(n):
            extra = set().union(*(reach[w] for w in reach[v])) - reach[v] if reach[v] else set()
            if extra:
                reach[v] |= extra
                changed = True
    return Digraph(n, frozenset((u, v) for u in range(n) for v in reach[u]))


def random_bipartite(rng: np.random.Generator, nw: int, nb: int, p: float) -> BipartiteGraph:
    return BipartiteGraph(nw, nb, frozenset((w, b) for w in range(nw) for b in range(nb) if rng.random() < p))
