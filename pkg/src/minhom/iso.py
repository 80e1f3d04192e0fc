"""Induced subgraph isomorphism for small patterns (backtracking, first match)."""

from __future__ import annotations

from collections.abc import Iterator, Sequence
from functools import lru_cache

from .digraph import Digraph


@lru_cache(maxsize=256)
def _search_order(pattern: Digraph) -> tuple[int, ...]:
    # connected-first order so each new vertex is usually constrained by a mapped one
    order: list[int] = []
    seen: set[int] = set()
    for start in sorted(pattern.vertices, key=lambda v: (-len(pattern.nbrs[v]), v)):
        if start in seen:
            continue
        frontier = [start]
        seen.add(start)
        while frontier:
            v = frontier.pop(0)
            order.append(v)
            for w in sorted(pattern.nbrs[v], key=lambda x: (-len(pattern.nbrs[x]), x)):
                if w not in seen:
                    seen.add(w)
                    frontier.append(w)
    return tuple(order)


def iter_induced_embeddings(pattern: Digraph, target: Digraph) -> Iterator[list[int]]:
    """Yield maps ``m`` (``m[p]`` = target vertex) embedding ``pattern`` as an induced subdigraph."""
    if pattern.n > target.n:
        return
    order = _search_order(pattern)
    p_out, p_in = pattern.out_nbrs, pattern.in_nbrs
    t_out, t_in = target.out_nbrs, target.in_nbrs
    # constraints against earlier vertices in the order
    earlier = [[q for q in order[:i]] for i in range(len(order))]
    anchors = [
        next((q for q in order[:i] if q in pattern.nbrs[order[i]]), None)
        for i in range(len(order))
    ]
    mapping: dict[int, int] = {}
    used: set[int] = set()

    def candidates(i: int):
        p = order[i]
        a = anchors[i]
        if a is None:
            pool = target.vertices
        else:
            ta = mapping[a]
            if p in p_out[a]:
                pool = t_out[ta]
            else:
                pool = t_in[ta]
            pool = sorted(pool)
        dout, din = len(p_out[p]), len(p_in[p])
        for t in pool:
            if t in used or len(t_out[t]) < dout or len(t_in[t]) < din:
                continue
            ok = True
            for q in earlier[i]:
                tq = mapping[q]
                if (q in p_out[p]) != (tq in t_out[t]) or (q in p_in[p]) != (tq in t_in[t]):
                    ok = False
                    break
            if ok:
                yield t

    def extend(i: int):
        if i == len(order):
            yield [mapping[p] for p in pattern.vertices]
            return
        p = order[i]
        for t in candidates(i):
            mapping[p] = t
            used.add(t)
            yield from extend(i + 1)
            used.discard(t)
            del mapping[p]

    yield from extend(0)


def find_induced(pattern: Digraph, target: Digraph) -> list[int] | None:
    return next(iter_induced_embeddings(pattern, target), None)


def are_isomorphic(a: Digraph, b: Digraph) -> bool:
    if a.n != b.n or len(a.arcs) != len(b.arcs):
        return False
    if sorted(len(s) for s in a.out_nbrs) != sorted(len(s) for s in b.out_nbrs):
        return False
    return find_induced(a, b) is not None


def undirected_digraph(n: int, edges: Sequence[tuple[int, int]] | frozenset) -> Digraph:
    """Symmetric digraph standing in for an undirected graph."""
    return Digraph(n, frozenset([(a, b) for a, b in edges] + [(b, a) for a, b in edges]))
