"""Proper interval bigraph recognition.

Two independent routes: a search for a bipartite Min-Max ordering, and a search
for one of the forbidden induced subgraphs (even cycles of length >= 6, biclaw,
binet, bitent). A graph is a proper interval bigraph exactly when the first
succeeds, exactly when the second finds nothing.
"""

from __future__ import annotations

from dataclasses import dataclass

from .digraph import BipartiteGraph, Digraph
from .iso import find_induced

Vertex = tuple[str, int]  # ("w", id) or ("b", id)


@dataclass(frozen=True)
class BipartiteOrdering:
    white_order: tuple[int, ...]
    black_order: tuple[int, ...]

    def to_json(self) -> dict:
        return {"white_order": list(self.white_order), "black_order": list(self.black_order)}


@dataclass(frozen=True)
class BigraphObstruction:
    kind: str  # "EvenCycle", "Biclaw", "Binet" or "Bitent"
    vertices: tuple[Vertex, ...]
    half_length: int | None = None  # for EvenCycle: k with cycle length 2k

    def to_json(self) -> dict:
        out: dict = {"kind": self.kind, "vertices": [list(v) for v in self.vertices]}
        if self.half_length is not None:
            out["half_length"] = self.half_length
        return out


# x1..x4 on one side, y1..y3 on the other, as drawn in the standard figure
_X, _Y = 4, 3


def _pattern(edges: list[tuple[int, int]]) -> BipartiteGraph:
    return BipartiteGraph(_X, _Y, frozenset((x - 1, y - 1) for x, y in edges))


BICLAW = _pattern([(1, 1), (4, 1), (2, 2), (4, 2), (3, 3), (4, 3)])
BINET = _pattern([(1, 1), (3, 1), (3, 2), (4, 2), (4, 1), (2, 2), (4, 3)])
BITENT = _pattern([(1, 1), (3, 1), (2, 1), (4, 1), (2, 3), (4, 2), (1, 3), (1, 2)])
FINITE_OBSTRUCTIONS: dict[str, BipartiteGraph] = {
    "Biclaw": BICLAW,
    "Binet": BINET,
    "Bitent": BITENT,
}


def even_cycle_bigraph(k: int) -> BipartiteGraph:
    """The cycle C_2k as a bipartite graph: white i adjacent to blacks i and i+1 (mod k)."""
    return BipartiteGraph(k, k, frozenset([(i, i) for i in range(k)] + [(i, (i + 1) % k) for i in range(k)]))


def _flat(b: BipartiteGraph) -> Digraph:
    n, adj = b.as_undirected()
    return Digraph(n, frozenset((u, v) for u in range(n) for v in adj[u]))


_FLAT_FINITE = {kind: _flat(pat) for kind, pat in FINITE_OBSTRUCTIONS.items()}


def _unflat(b: BipartiteGraph, v: int) -> Vertex:
    return ("w", v) if v < b.nw else ("b", v - b.nw)


# ---------------------------------------------------------------------------
# ordering route


def is_minmax_bipartite_ordering(b: BipartiteGraph, o: BipartiteOrdering) -> bool:
    if sorted(o.white_order) != list(b.whites) or sorted(o.black_order) != list(b.blacks):
        raise ValueError("ordering does not cover the vertex set exactly")
    wpos = {w: i for i, w in enumerate(o.white_order)}
    bpos = {x: i for i, x in enumerate(o.black_order)}
    edges = list(b.edges)
    for i, r in edges:
        for j, s in edges:
            # i < j among whites, s < r among blacks, ir and js edges
            if wpos[i] < wpos[j] and bpos[s] < bpos[r]:
                if (i, s) not in b.edges or (j, r) not in b.edges:
                    return False
    return True


def _components(b: BipartiteGraph) -> list[tuple[list[int], list[int]]]:
    """Connected components that contain at least one edge."""
    seen_w: set[int] = set()
    comps = []
    for start in b.whites:
        if start in seen_w or not b.white_nbrs[start]:
            continue
        ws, bs = {start}, set()
        stack = [("w", start)]
        seen_w.add(start)
        while stack:
            side, v = stack.pop()
            if side == "w":
                for x in b.white_nbrs[v]:
                    if x not in bs:
                        bs.add(x)
                        stack.append(("b", x))
            else:
                for w in b.black_nbrs[v]:
                    if w not in ws:
                        ws.add(w)
                        seen_w.add(w)
                        stack.append(("w", w))
        comps.append((sorted(ws), sorted(bs)))
    return comps


def _twin_groups(nbrs: dict[int, frozenset[int]]) -> list[list[int]]:
    groups: dict[frozenset[int], list[int]] = {}
    for v in sorted(nbrs):
        groups.setdefault(nbrs[v], []).append(v)
    return sorted(groups.values())


def _order_component(b: BipartiteGraph, ws: list[int], bs: list[int]) -> tuple[list[int], list[int]] | None:
    wgroups = _twin_groups({w: b.white_nbrs[w] for w in ws})
    bgroups = _twin_groups({x: b.black_nbrs[x] for x in bs})
    bclass = {x: k for k, g in enumerate(bgroups) for x in g}
    nw, nb = len(wgroups), len(bgroups)
    adj = [frozenset(bclass[x] for x in b.white_nbrs[g[0]]) for g in wgroups]

    # need[i][j]: black precedences (r, s) meaning r before s, forced once
    # white class i is placed before white class j
    need = [[None] * nw for _ in range(nw)]
    for i in range(nw):
        for j in range(nw):
            if i == j:
                continue
            arcs = []
            for r in adj[i]:
                for s in adj[j]:
                    if r != s and not (s in adj[i] and r in adj[j]):
                        arcs.append((r, s))  # r must precede s
            need[i][j] = arcs

    full = (1 << nw) - 1
    failed: set[tuple[int, tuple[int, ...]]] = set()

    def add_arcs(reach: list[int], arcs) -> list[int] | None:
        # reach[v]: bitmask of blacks reachable from v (strictly after v)
        reach = list(reach)
        for r, s in arcs:
            if reach[r] >> s & 1:
                continue
            if s == r or reach[s] >> r & 1:
                return None
            gain = (1 << s) | reach[s]
            for v in range(nb):
                if v == r or reach[v] >> r & 1:
                    reach[v] |= gain
        return reach

    def search(placed: int, order: list[int], reach: list[int]) -> list[int] | None:
        if placed == full:
            return reach
        key = (placed, tuple(reach))
        if key in failed:
            return None
        for j in range(nw):
            if placed >> j & 1:
                continue
            arcs = [a for u in range(nw) if not (placed >> u & 1) and u != j for a in need[j][u]]
            nxt = add_arcs(reach, arcs)
            if nxt is None:
                continue
            order.append(j)
            res = search(placed | 1 << j, order, nxt)
            if res is not None:
                return res
            order.pop()
        failed.add(key)
        return None

    order: list[int] = []
    reach = search(0, order, [0] * nb)
    if reach is None:
        return None
    # topological order of black classes, smallest class first among ready ones
    remaining = set(range(nb))
    border = []
    while remaining:
        ready = min(v for v in remaining if not any(reach[u] >> v & 1 for u in remaining if u != v))
        border.append(ready)
        remaining.discard(ready)
    white_seq = [w for k in order for w in wgroups[k]]
    black_seq = [x for k in border for x in bgroups[k]]
    return white_seq, black_seq


def find_bipartite_minmax_ordering(b: BipartiteGraph) -> BipartiteOrdering | None:
    """Search for a bipartite Min-Max ordering; None when none exists.

    Components with edges are ordered independently and concatenated; isolated
    vertices go last. Twin vertices are collapsed before the search.
    """
    wseq: list[int] = []
    bseq: list[int] = []
    for ws, bs in _components(b):
        res = _order_component(b, ws, bs)
        if res is None:
            return None
        wseq += res[0]
        bseq += res[1]
    wseq += [w for w in b.whites if not b.white_nbrs[w]]
    bseq += [x for x in b.blacks if not b.black_nbrs[x]]
    o = BipartiteOrdering(tuple(wseq), tuple(bseq))
    assert is_minmax_bipartite_ordering(b, o)
    return o


# ---------------------------------------------------------------------------
# forbidden subgraph route


def shortest_induced_cycle(n: int, adj: list[frozenset[int]], min_len: int) -> list[int] | None:
    """Shortest chordless cycle with at least ``min_len`` vertices in an undirected graph.

    Grows induced paths from their least vertex ``s``; a path closes into a
    cycle as soon as its newest vertex touches ``s``.
    """
    best: list[int] | None = None

    def extend(path: list[int], blocked: frozenset[int], s: int) -> None:
        nonlocal best
        if best is not None and len(path) + 1 >= len(best):
            return
        last = path[-1]
        for w in sorted(adj[last]):
            if w <= s or w in blocked or w in path:
                continue
            if s in adj[w]:
                if len(path) + 1 >= min_len and (best is None or len(path) + 1 < len(best)):
                    best = path + [w]
                continue
            path.append(w)
            extend(path, blocked | adj[last], s)
            path.pop()

    for s in range(n):
        for v1 in sorted(adj[s]):
            if v1 > s:
                extend([s, v1], frozenset(), s)
    return best


def find_forbidden_bigraph(b: BipartiteGraph) -> BigraphObstruction | None:
    """An induced biclaw, binet, bitent or even cycle of length >= 6, or None."""
    busy = sum(1 for s in b.white_nbrs if s) + sum(1 for s in b.black_nbrs if s)
    if busy >= 7:
        target = _flat(b)
        for kind, pat in _FLAT_FINITE.items():
            emb = find_induced(pat, target)
            if emb is not None:
                return BigraphObstruction(kind, tuple(_unflat(b, v) for v in emb))
    n, adj = b.as_undirected()
    cyc = shortest_induced_cycle(n, adj, 6)
    if cyc is not None:
        return BigraphObstruction("EvenCycle", tuple(_unflat(b, v) for v in cyc), len(cyc) // 2)
    return None


def obstruction_pattern(obs: BigraphObstruction) -> BipartiteGraph:
    if obs.kind == "EvenCycle":
        return even_cycle_bigraph(obs.half_length)
    return FINITE_OBSTRUCTIONS[obs.kind]


def obstruction_is_genuine(b: BipartiteGraph, obs: BigraphObstruction) -> bool:
    """Check that the listed vertices induce a copy of the named graph."""
    ws = [v for side, v in obs.vertices if side == "w"]
    bs = [v for side, v in obs.vertices if side == "b"]
    if len(set(obs.vertices)) != len(obs.vertices):
        return False
    sub = b.induced(ws, bs)
    pat = obstruction_pattern(obs)
    if sub.nw + sub.nb != pat.nw + pat.nb or len(sub.edges) != len(pat.edges):
        return False
    return find_induced(_flat(pat), _flat(sub)) is not None


def is_proper_interval_bigraph(b: BipartiteGraph) -> tuple[bool, BipartiteOrdering | BigraphObstruction]:
    order = find_bipartite_minmax_ordering(b)
    if order is not None:
        return True, order
    obs = find_forbidden_bigraph(b)
    if obs is None:
        raise AssertionError(f"no Min-Max ordering and no forbidden subgraph in {b!r}")
    return False, obs
