"""Digraph and bipartite graph representations plus structural decompositions."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

Arc = tuple[int, int]


class GraphError(ValueError):
    """Raised for structurally invalid graphs (loops, bad endpoints, ...)."""


@dataclass(frozen=True)
class Digraph:
    """Loopless digraph on vertices ``0..n-1`` with set-semantics arcs."""

    n: int
    arcs: frozenset[Arc] = frozenset()
    names: tuple[str, ...] | None = field(default=None, compare=False)

    def __post_init__(self) -> None:
        if self.n < 0:
            raise GraphError(f"negative vertex count {self.n}")
        arcs = frozenset((int(u), int(v)) for u, v in self.arcs)
        for u, v in arcs:
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise GraphError(f"arc ({u}, {v}) out of range for n={self.n}")
        object.__setattr__(self, "arcs", arcs)
        if self.names is not None:
            names = tuple(self.names)
            if len(names) != self.n:
                raise GraphError("name table length does not match vertex count")
            object.__setattr__(self, "names", names)

    @classmethod
    def from_arcs(cls, n: int, arcs: Iterable[Arc], names: Sequence[str] | None = None) -> Digraph:
        arcs = list(arcs)
        if len(set(arcs)) != len(arcs):
            raise GraphError("parallel arcs")
        return cls(n, frozenset(arcs), tuple(names) if names is not None else None)

    @property
    def vertices(self) -> range:
        return range(self.n)

    @cached_property
    def out_nbrs(self) -> tuple[frozenset[int], ...]:
        out: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.arcs:
            out[u].add(v)
        return tuple(frozenset(s) for s in out)

    @cached_property
    def in_nbrs(self) -> tuple[frozenset[int], ...]:
        inn: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.arcs:
            inn[v].add(u)
        return tuple(frozenset(s) for s in inn)

    @cached_property
    def nbrs(self) -> tuple[frozenset[int], ...]:
        return tuple(o | i for o, i in zip(self.out_nbrs, self.in_nbrs))

    def has_arc(self, u: int, v: int) -> bool:
        return (u, v) in self.arcs

    def adjacent(self, u: int, v: int) -> bool:
        return (u, v) in self.arcs or (v, u) in self.arcs

    def sorted_arcs(self) -> list[Arc]:
        return sorted(self.arcs)

    def label(self, v: int) -> str:
        return self.names[v] if self.names is not None else str(v)

    def __repr__(self) -> str:
        return f"Digraph(n={self.n}, arcs={self.sorted_arcs()})"


@dataclass(frozen=True)
class BipartiteGraph:
    """Bipartite graph with whites ``0..nw-1`` and blacks ``0..nb-1``.

    Edges are ``(white, black)`` pairs; the two sides have independent id spaces.
    """

    nw: int
    nb: int
    edges: frozenset[tuple[int, int]] = frozenset()

    def __post_init__(self) -> None:
        edges = frozenset((int(w), int(b)) for w, b in self.edges)
        for w, b in edges:
            if not (0 <= w < self.nw and 0 <= b < self.nb):
                raise GraphError(f"edge ({w}, {b}) out of range")
        object.__setattr__(self, "edges", edges)

    @cached_property
    def white_nbrs(self) -> tuple[frozenset[int], ...]:
        out: list[set[int]] = [set() for _ in range(self.nw)]
        for w, b in self.edges:
            out[w].add(b)
        return tuple(frozenset(s) for s in out)

    @cached_property
    def black_nbrs(self) -> tuple[frozenset[int], ...]:
        out: list[set[int]] = [set() for _ in range(self.nb)]
        for w, b in self.edges:
            out[b].add(w)
        return tuple(frozenset(s) for s in out)

    @property
    def whites(self) -> range:
        return range(self.nw)

    @property
    def blacks(self) -> range:
        return range(self.nb)

    def has_edge(self, w: int, b: int) -> bool:
        return (w, b) in self.edges

    def as_undirected(self) -> tuple[int, list[frozenset[int]]]:
        """Flatten to a plain graph: whites keep their ids, black ``b`` becomes ``nw + b``."""
        adj: list[set[int]] = [set() for _ in range(self.nw + self.nb)]
        for w, b in self.edges:
            adj[w].add(self.nw + b)
            adj[self.nw + b].add(w)
        return self.nw + self.nb, [frozenset(s) for s in adj]

    def induced(self, whites: Iterable[int], blacks: Iterable[int]) -> BipartiteGraph:
        ws, bs = sorted(set(whites)), sorted(set(blacks))
        wi = {w: i for i, w in enumerate(ws)}
        bi = {b: i for i, b in enumerate(bs)}
        return BipartiteGraph(
            len(ws), len(bs),
            frozenset((wi[w], bi[b]) for w, b in self.edges if w in wi and b in bi),
        )

    def __repr__(self) -> str:
        return f"BipartiteGraph(nw={self.nw}, nb={self.nb}, edges={sorted(self.edges)})"


@dataclass(frozen=True)
class ComponentOrdering:
    """Strong components listed so that no arc goes from a later set to an earlier one."""

    components: tuple[frozenset[int], ...]

    def __iter__(self):
        return iter(self.components)

    def __len__(self) -> int:
        return len(self.components)


def strong_components(d: Digraph) -> ComponentOrdering:
    """Tarjan's algorithm (iterative); components come out in topological order."""
    index: dict[int, int] = {}
    low: dict[int, int] = {}
    on_stack: set[int] = set()
    stack: list[int] = []
    found: list[frozenset[int]] = []
    counter = 0
    succ = [sorted(s) for s in d.out_nbrs]

    for root in d.vertices:
        if root in index:
            continue
        work = [(root, 0)]
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on_stack.add(root)
        while work:
            v, i = work[-1]
            if i < len(succ[v]):
                work[-1] = (v, i + 1)
                w = succ[v][i]
                if w not in index:
                    index[w] = low[w] = counter
                    counter += 1
                    stack.append(w)
                    on_stack.add(w)
                    work.append((w, 0))
                elif w in on_stack:
                    low[v] = min(low[v], index[w])
                continue
            work.pop()
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[v])
            if low[v] == index[v]:
                comp = set()
                while True:
                    w = stack.pop()
                    on_stack.discard(w)
                    comp.add(w)
                    if w == v:
                        break
                found.append(frozenset(comp))

    # Tarjan finishes sinks first
    found.reverse()
    where = {v: k for k, comp in enumerate(found) for v in comp}
    assert all(where[u] <= where[v] for u, v in d.arcs), "condensation order is not topological"
    return ComponentOrdering(tuple(found))


def weak_components(d: Digraph) -> list[frozenset[int]]:
    """Connected components of the underlying undirected graph, ordered by least vertex."""
    seen = [False] * d.n
    comps = []
    for s in d.vertices:
        if seen[s]:
            continue
        seen[s] = True
        comp = [s]
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for w in d.nbrs[v]:
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    queue.append(w)
        comps.append(frozenset(comp))
    return comps


def bipartite_replication(d: Digraph) -> BipartiteGraph:
    """B(D): white copy and black copy per vertex, edge v'w'' for every arc vw."""
    return BipartiteGraph(d.n, d.n, frozenset(d.arcs))


def converse(d: Digraph) -> Digraph:
    return Digraph(d.n, frozenset((v, u) for u, v in d.arcs), d.names)


def induced_subdigraph(d: Digraph, keep: Iterable[int]) -> tuple[Digraph, list[int]]:
    """Subdigraph induced by ``keep``, re-indexed in increasing vertex order.

    Returns the subdigraph and ``mapping`` with ``mapping[new_id] = old_id``.
    """
    verts = sorted(set(keep))
    for v in verts:
        if not 0 <= v < d.n:
            raise GraphError(f"vertex {v} out of range for n={d.n}")
    pos = {v: i for i, v in enumerate(verts)}
    arcs = frozenset((pos[u], pos[v]) for u, v in d.arcs if u in pos and v in pos)
    names = tuple(d.names[v] for v in verts) if d.names is not None else None
    return Digraph(len(verts), arcs, names), verts


def is_acyclic(d: Digraph) -> bool:
    indeg = [len(s) for s in d.in_nbrs]
    queue = deque(v for v in d.vertices if indeg[v] == 0)
    seen = 0
    while queue:
        v = queue.popleft()
        seen += 1
        for w in d.out_nbrs[v]:
            indeg[w] -= 1
            if indeg[w] == 0:
                queue.append(w)
    return seen == d.n


def topological_order(d: Digraph) -> list[int] | None:
    """Smallest-id-first topological order, or None when ``d`` has a cycle."""
    import heapq

    indeg = [len(s) for s in d.in_nbrs]
    heap = [v for v in d.vertices if indeg[v] == 0]
    heapq.heapify(heap)
    order = []
    while heap:
        v = heapq.heappop(heap)
        order.append(v)
        for w in d.out_nbrs[v]:
            indeg[w] -= 1
            if indeg[w] == 0:
                heapq.heappush(heap, w)
    return order if len(order) == d.n else None


def is_directed_cycle(d: Digraph) -> int | None:
    """Return k when ``d`` is the directed k-cycle (k >= 2), else None."""
    if d.n < 2 or len(d.arcs) != d.n:
        return None
    if any(len(d.out_nbrs[v]) != 1 or len(d.in_nbrs[v]) != 1 for v in d.vertices):
        return None
    if len(weak_components(d)) != 1:
        return None
    return d.n


def cycle_order(d: Digraph) -> list[int]:
    """Vertices of a directed cycle in traversal order starting from vertex 0."""
    order = [0]
    while len(order) < d.n:
        (nxt,) = d.out_nbrs[order[-1]]
        order.append(nxt)
    return order


def twin_classes(d: Digraph) -> list[list[int]]:
    """Group vertices with identical in- and out-neighbourhoods."""
    groups: dict[tuple[frozenset[int], frozenset[int]], list[int]] = {}
    for v in d.vertices:
        groups.setdefault((d.in_nbrs[v], d.out_nbrs[v]), []).append(v)
    return sorted(groups.values())


def extension_decomposition(d: Digraph, k: int = 3) -> tuple[frozenset[int], ...] | None:
    """Parts ``S_1..S_k`` if ``d`` is an extension of the directed k-cycle, else None.

    Parts are listed along the cycle (``S_i -> S_{i+1}``) starting with the part
    holding vertex 0. Vertices are collapsed by identical neighbourhoods and the
    quotient is tested against the k-cycle.
    """
    if d.n < k:
        return None
    classes = twin_classes(d)
    if len(classes) != k:
        return None
    cls_of = {v: i for i, c in enumerate(classes) for v in c}
    quotient_arcs = {(cls_of[u], cls_of[v]) for u, v in d.arcs}
    if any(a == b for a, b in quotient_arcs):
        return None
    quotient = Digraph(k, frozenset(quotient_arcs))
    if is_directed_cycle(quotient) != k:
        return None
    parts = []
    c = cls_of[0]
    for _ in range(k):
        parts.append(frozenset(classes[c]))
        (c,) = quotient.out_nbrs[c]
    expected = {(u, v) for i in range(k) for u in parts[i] for v in parts[(i + 1) % k]}
    if expected != set(d.arcs):
        return None
    return tuple(parts)


def is_c2(d: Digraph) -> bool:
    return d.n == 2 and d.arcs == {(0, 1), (1, 0)}


def relabel(d: Digraph, perm: Sequence[int]) -> Digraph:
    """Image of ``d`` under vertex map ``v -> perm[v]`` (a permutation)."""
    return Digraph(d.n, frozenset((perm[u], perm[v]) for u, v in d.arcs))


def directed_cycle(k: int) -> Digraph:
    return Digraph(k, frozenset((i, (i + 1) % k) for i in range(k)))


def transitive_tournament(p: int) -> Digraph:
    return Digraph(p, frozenset((i, j) for i in range(p) for j in range(i + 1, p)))


def disjoint_union(*graphs: Digraph) -> Digraph:
    arcs = set()
    off = 0
    for g in graphs:
        arcs |= {(u + off, v + off) for u, v in g.arcs}
        off += g.n
    return Digraph(off, frozenset(arcs))
