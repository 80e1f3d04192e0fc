"""Membership tests for the digraph classes the dichotomies talk about."""

from __future__ import annotations

from itertools import combinations

from .digraph import Digraph, is_acyclic


def _induces_semicomplete(d: Digraph, verts) -> bool:
    return all(d.adjacent(x, y) for x, y in combinations(verts, 2))


def is_semicomplete(d: Digraph) -> bool:
    return _induces_semicomplete(d, range(d.n))


def is_locally_semicomplete(d: Digraph) -> bool:
    return all(
        _induces_semicomplete(d, d.in_nbrs[v]) and _induces_semicomplete(d, d.out_nbrs[v])
        for v in d.vertices
    )


def is_quasi_transitive(d: Digraph) -> bool:
    # every 2-path x -> y -> z needs its ends adjacent
    for y in d.vertices:
        for x in d.in_nbrs[y]:
            for z in d.out_nbrs[y]:
                if x != z and not d.adjacent(x, z):
                    return False
    return True


def is_transitive(d: Digraph) -> bool:
    for y in d.vertices:
        for x in d.in_nbrs[y]:
            for z in d.out_nbrs[y]:
                if x != z and not d.has_arc(x, z):
                    return False
    return True


def has_symmetric_arc(d: Digraph) -> tuple[int, int] | None:
    """Lexicographically least ``(u, v)`` with both ``uv`` and ``vu`` present."""
    sym = [(u, v) for u, v in d.arcs if u < v and (v, u) in d.arcs]
    return min(sym) if sym else None


def is_transitive_oriented(d: Digraph) -> bool:
    return has_symmetric_arc(d) is None and is_transitive(d)


def is_tournament(d: Digraph) -> bool:
    return is_semicomplete(d) and has_symmetric_arc(d) is None


def recognize_all(d: Digraph) -> dict[str, bool]:
    return {
        "acyclic": is_acyclic(d),
        "locally_semicomplete": is_locally_semicomplete(d),
        "quasi_transitive": is_quasi_transitive(d),
        "semicomplete": is_semicomplete(d),
        "tournament": is_tournament(d),
        "transitive": is_transitive(d),
        "transitive_oriented": is_transitive_oriented(d),
    }
