"""Constructive Min-Max orderings of target digraphs.

Two constructions are provided:

* acyclic connected locally semicomplete digraphs: the unique order of the
  strong components (all singletons) is already a Min-Max ordering;
* transitive oriented graphs T: start from a bipartite Min-Max ordering of
  B(T) and swap white or black copies of improper pairs until the white and
  black orders agree. When no swap is allowed the six vertices involved induce
  one of the obstructions O1..O4.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .digraph import (
    Digraph,
    bipartite_replication,
    induced_subdigraph,
    is_acyclic,
    strong_components,
    weak_components,
)
from .iso import find_induced
from .pibigraph import (
    BigraphObstruction,
    BipartiteOrdering,
    find_bipartite_minmax_ordering,
    find_forbidden_bigraph,
    is_minmax_bipartite_ordering,
)
from .recognizers import is_locally_semicomplete, is_transitive_oriented


class PreconditionError(ValueError):
    """Input digraph is outside the class an algorithm is defined for."""


@dataclass(frozen=True)
class MinMaxOrdering:
    order: tuple[int, ...]

    def to_json(self) -> dict:
        return {"ordering": list(self.order)}


def verify_minmax(h: Digraph, o: MinMaxOrdering | tuple[int, ...] | list[int]) -> bool:
    """Check ``i<j, s<r, ir, js in A(H)  =>  is, jr in A(H)`` over all arc pairs."""
    order = o.order if isinstance(o, MinMaxOrdering) else tuple(o)
    if sorted(order) != list(h.vertices):
        raise ValueError("ordering must be a permutation of the vertices")
    pos = {v: k for k, v in enumerate(order)}
    arcs = list(h.arcs)
    for i, r in arcs:
        for j, s in arcs:
            if pos[i] < pos[j] and pos[s] < pos[r]:
                if (i, s) not in h.arcs or (j, r) not in h.arcs:
                    return False
    return True


def order_acyclic_locally_semicomplete(h: Digraph) -> MinMaxOrdering:
    """The unique strong-component order of a connected acyclic locally semicomplete digraph."""
    if h.n == 0 or len(weak_components(h)) != 1:
        raise PreconditionError("digraph must be connected")
    if not is_acyclic(h):
        raise PreconditionError("digraph must be acyclic")
    if not is_locally_semicomplete(h):
        raise PreconditionError("digraph must be locally semicomplete")
    order = tuple(next(iter(c)) for c in strong_components(h))
    # consecutive vertices are joined by an arc in such digraphs
    assert all(h.has_arc(order[k], order[k + 1]) for k in range(len(order) - 1))
    result = MinMaxOrdering(order)
    assert verify_minmax(h, result)
    return result


# ---------------------------------------------------------------------------
# the obstructions O1..O4

O_BASE_ARCS = ((1, 3), (1, 4), (1, 5), (1, 6), (2, 4), (2, 5), (2, 6), (3, 6), (4, 5), (4, 6))
O_OPTIONAL_ARCS = ((1, 2), (5, 6))


def _o_digraph(extra: tuple[tuple[int, int], ...]) -> Digraph:
    return Digraph(6, frozenset((a - 1, b - 1) for a, b in O_BASE_ARCS + extra))


# Which drawing carries which index is not recoverable from the text; the labels
# below fix one convention (O1 = no optional arc, O4 = both).
O_FAMILY: dict[str, Digraph] = {
    "O1": _o_digraph(()),
    "O2": _o_digraph(((1, 2),)),
    "O3": _o_digraph(((5, 6),)),
    "O4": _o_digraph(((1, 2), (5, 6))),
}


def o_family() -> dict[str, Digraph]:
    return dict(O_FAMILY)


@dataclass(frozen=True)
class OObstruction:
    """Induced copy of an O digraph; ``vertices[g - 1]`` is the vertex playing label g."""

    label: str
    vertices: tuple[int, ...]

    def to_json(self) -> dict:
        return {"kind": "InducedO", "label": self.label, "vertices": list(self.vertices)}


def o_label_of(h: Digraph, verts: tuple[int, ...]) -> str | None:
    """Label of the O digraph that ``verts`` (in label order 1..6) induces in ``h``, if any."""
    if len(set(verts)) != 6:
        return None
    for label, o in O_FAMILY.items():
        if all(h.has_arc(verts[a], verts[b]) == o.has_arc(a, b) for a in range(6) for b in range(6) if a != b):
            return label
    return None


def find_induced_o(h: Digraph) -> OObstruction | None:
    for label, o in O_FAMILY.items():
        emb = find_induced(o, h)
        if emb is not None:
            return OObstruction(label, tuple(emb))
    return None


# ---------------------------------------------------------------------------
# exchange procedure


@dataclass
class ProperPairState:
    """Bipartite ordering of B(T) together with the number of proper pairs."""

    white: list[int]
    black: list[int]
    proper_count: int = 0

    def positions(self) -> tuple[dict[int, int], dict[int, int]]:
        return {v: k for k, v in enumerate(self.white)}, {v: k for k, v in enumerate(self.black)}

    def recount(self) -> int:
        wpos, bpos = self.positions()
        n = len(self.white)
        self.proper_count = sum(
            1 for x, y in combinations(range(n), 2) if (wpos[x] < wpos[y]) == (bpos[x] < bpos[y])
        )
        return self.proper_count


@dataclass
class ExchangeResult:
    kind: str  # "ordering", "obstruction_o" or "not_pib"
    ordering: MinMaxOrdering | None = None
    obstruction: OObstruction | None = None
    bigraph_obstruction: BigraphObstruction | None = None
    exchanges: int = 0
    proper_counts: list[int] = field(default_factory=list)
    minmax_preserved: bool = True
    fallback_search: bool = False

    def to_json(self) -> dict:
        if self.kind == "ordering":
            return self.ordering.to_json()
        if self.kind == "obstruction_o":
            return {"obstruction": self.obstruction.to_json()}
        return {"obstruction": {"kind": "BigraphObstruction", **self.bigraph_obstruction.to_json()}}


def _improper_pairs(state: ProperPairState, bpos) -> list[tuple[int, int]]:
    """Pairs (x, y) with x' < y' and y'' < x'', by white positions."""
    white = state.white
    return [
        (white[p], white[q])
        for p in range(len(white))
        for q in range(p + 1, len(white))
        if bpos[white[q]] < bpos[white[p]]
    ]


def _white_blockers(t: Digraph, x: int, y: int, bpos) -> list[tuple[int, int]]:
    """Pairs (c, d), d'' < c'', x'd'' and y'c'' edges, with x'c'' or y'd'' missing."""
    out = t.out_nbrs
    return sorted(
        (c, d)
        for d in out[x]
        for c in out[y]
        if bpos[d] < bpos[c] and not (c in out[x] and d in out[y])
    )


def _black_blockers(t: Digraph, x: int, y: int, wpos) -> list[tuple[int, int]]:
    """Pairs (a, b), b' < a', a'x'' and b'y'' edges, with a'y'' or b'x'' missing."""
    inn = t.in_nbrs
    return sorted(
        (a, b)
        for a in inn[x]
        for b in inn[y]
        if wpos[b] < wpos[a] and not (a in inn[y] and b in inn[x])
    )


def _extract_o(t: Digraph, x: int, y: int, wb, bb) -> OObstruction | None:
    for a, b in bb:
        for c, d in wb:
            # the configuration and its mirror image (both orders reversed)
            for verts in ((a, b, x, y, c, d), (b, a, y, x, d, c)):
                label = o_label_of(t, verts)
                if label is not None:
                    return OObstruction(label, verts)
    return None


def proper_exchange_procedure(t: Digraph, check: bool = False) -> ExchangeResult:
    """Turn a bipartite Min-Max ordering of B(T) into a Min-Max ordering of T.

    Improper pairs are scanned by white positions; for each, swapping the white
    copies is tried before swapping the black copies. When no pair can be
    swapped, an improper pair blocked on both sides yields six vertices
    ``a, b, x, y, c, d`` inducing one of O1..O4.

    With ``check`` set, the bipartite Min-Max property is re-verified after every
    exchange and the outcome is stored in ``minmax_preserved``.
    """
    if not is_transitive_oriented(t):
        raise PreconditionError("digraph must be a transitive oriented graph")
    bt = bipartite_replication(t)
    start = find_bipartite_minmax_ordering(bt)
    if start is None:
        return ExchangeResult("not_pib", bigraph_obstruction=find_forbidden_bigraph(bt))

    state = ProperPairState(list(start.white_order), list(start.black_order))
    result = ExchangeResult("ordering", proper_counts=[state.recount()])
    while True:
        wpos, bpos = state.positions()
        improper = _improper_pairs(state, bpos)
        if not improper:
            break
        swapped = False
        for x, y in improper:
            # only neighbouring copies are swapped, so (x, y) is the one pair whose
            # relative order changes and the blocker test is exactly Min-Max preservation
            if wpos[y] == wpos[x] + 1 and not _white_blockers(t, x, y, bpos):
                state.white[wpos[x]], state.white[wpos[y]] = y, x
                swapped = True
            elif bpos[x] == bpos[y] + 1 and not _black_blockers(t, x, y, wpos):
                state.black[bpos[x]], state.black[bpos[y]] = y, x
                swapped = True
            if swapped:
                break
        if not swapped:
            obs = None
            for x, y in improper:
                wb = _white_blockers(t, x, y, bpos)
                bb = _black_blockers(t, x, y, wpos)
                if wb and bb:
                    obs = _extract_o(t, x, y, wb, bb)
                    if obs is not None:
                        break
            if obs is None:
                obs = find_induced_o(t)
                result.fallback_search = True
            if obs is None:
                raise RuntimeError(f"exchange procedure stuck on {t!r}")
            result.kind = "obstruction_o"
            result.obstruction = obs
            return result
        result.exchanges += 1
        result.proper_counts.append(state.recount())
        if check and not is_minmax_bipartite_ordering(bt, BipartiteOrdering(tuple(state.white), tuple(state.black))):
            result.minmax_preserved = False

    result.ordering = MinMaxOrdering(tuple(state.white))
    assert verify_minmax(t, result.ordering)
    return result


def find_minmax_ordering(h: Digraph) -> MinMaxOrdering | None:
    """Min-Max ordering by the constructive routes above, or None when neither applies.

    Weak components are ordered separately and concatenated, which keeps the
    Min-Max property since no arc joins two components.
    """
    order: list[int] = []
    for comp in weak_components(h):
        sub, back = induced_subdigraph(h, comp)
        part = None
        if is_acyclic(sub) and is_locally_semicomplete(sub):
            part = order_acyclic_locally_semicomplete(sub)
        elif is_transitive_oriented(sub):
            res = proper_exchange_procedure(sub)
            part = res.ordering
        if part is None:
            return None
        order += [back[v] for v in part.order]
    result = MinMaxOrdering(tuple(order))
    assert verify_minmax(h, result)
    return result


def brute_force_minmax_ordering(h: Digraph) -> MinMaxOrdering | None:
    """Try every permutation (small digraphs only)."""
    from itertools import permutations

    for perm in permutations(h.vertices):
        if verify_minmax(h, perm):
            return MinMaxOrdering(perm)
    return None
