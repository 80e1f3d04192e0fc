"""Independent-set reductions to MinHOM(H1), MinHOM(H2), MinHOM(O_i) and the B(H) lift.

Every generator returns a :class:`ReductionInstance` carrying the expected
optimal cost, which :func:`verify_reduction` checks against the brute-force
oracle and an exact maximum independent set computation.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Callable, Sequence

from .digraph import BipartiteGraph, Digraph
from .gadgets import gadget_h1, gadget_h2
from .ordering import O_FAMILY
from .solver import Homomorphism, brute_force_minhom

__all__ = [
    "UGraph",
    "EdgeGadget",
    "ReductionInstance",
    "ReductionReport",
    "gadget_h1",
    "gadget_h2",
    "edge_gadget_d_uv",
    "reduce_independent_set",
    "reduce_i3",
    "lift_bigraph_instance",
    "bipartite_minhom",
    "max_independent_set",
    "verify_reduction",
]

COLORS = ("U", "V", "W")
MIS_LIMIT = 20


@dataclass(frozen=True)
class UGraph:
    """Simple undirected graph on ``0..n-1``, optionally with a proper 3-colouring."""

    n: int
    edges: frozenset[tuple[int, int]]
    colors: tuple[str, ...] | None = None

    def __post_init__(self) -> None:
        norm = set()
        for a, b in self.edges:
            if a == b:
                raise ValueError(f"loop at {a}")
            if not (0 <= a < self.n and 0 <= b < self.n):
                raise ValueError(f"edge {a}-{b} out of range")
            norm.add((min(a, b), max(a, b)))
        object.__setattr__(self, "edges", frozenset(norm))
        if self.colors is not None:
            if len(self.colors) != self.n or any(x not in COLORS for x in self.colors):
                raise ValueError("colouring must give U, V or W to every vertex")
            bad = [(a, b) for a, b in self.edges if self.colors[a] == self.colors[b]]
            if bad:
                raise ValueError(f"colouring is not proper on edge {bad[0]}")

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def adjacency_masks(self) -> list[int]:
        adj = [0] * self.n
        for a, b in self.edges:
            adj[a] |= 1 << b
            adj[b] |= 1 << a
        return adj


@dataclass(frozen=True)
class EdgeGadget:
    """The fragment D_uv: a cycle c_1..c_K (K = k(k+1)), x, y, u', v' and the ports u, v."""

    k: int
    digraph: Digraph
    port_u: int
    port_v: int

    @property
    def cycle_length(self) -> int:
        return self.k * (self.k + 1)


def edge_gadget_d_uv(k: int) -> EdgeGadget:
    if k < 2:
        raise ValueError("edge gadget needs k >= 2")
    big = k * (k + 1)
    x, y, up, vp, u, v = range(big, big + 6)
    arcs = [(i, (i + 1) % big) for i in range(big)]
    # c_{2k} -> u' -> u and c_{K-1} -> v' -> v (1-based cycle labels)
    arcs += [(2 * k - 1, up), (up, u), (big - 2, vp), (vp, v)]
    arcs += [(x, y), (x, 0), (y, 0)]
    names = [f"c:{i + 1}" for i in range(big)] + ["x", "y", "u'", "v'", "u", "v"]
    return EdgeGadget(k, Digraph(big + 6, frozenset(arcs), tuple(names)), u, v)


@dataclass(frozen=True)
class ReductionInstance:
    kind: str  # "h1", "h2", "o1".."o4" or "lift"
    g: Digraph
    h: Digraph
    costs: tuple[tuple[int, ...], ...]
    source: UGraph | None = None
    k: int | None = None
    formula: str = ""
    expected: int | None = None
    ports: tuple[int, ...] = ()  # D-vertices of the original graph
    gadgets: tuple[tuple[tuple[int, int], tuple[int, ...]], ...] = ()  # (edge, cycle vertices)

    def manifest(self) -> dict:
        out: dict = {
            "kind": self.kind,
            "n_g": self.g.n,
            "n_h": self.h.n,
            "arcs_g": len(self.g.arcs),
            "formula": self.formula,
        }
        if self.k is not None:
            out["k"] = self.k
        if self.expected is not None:
            out["expected_cost"] = self.expected
        return out


def max_independent_set(g: UGraph) -> int:
    """Exact independence number by branch and bound on bitmasks."""
    if g.n > MIS_LIMIT:
        raise ValueError(f"max_independent_set is limited to {MIS_LIMIT} vertices")
    adj = g.adjacency_masks()
    best = 0

    def rec(rest: int, size: int) -> None:
        nonlocal best
        if size + bin(rest).count("1") <= best:
            return
        if not rest:
            best = size
            return
        # branch on the vertex of largest remaining degree
        v = max(_iter_bits(rest), key=lambda w: bin(adj[w] & rest).count("1"))
        if not adj[v] & rest:
            # isolated in the remainder: always take it
            rec(rest & ~(1 << v), size + 1)
            return
        rec(rest & ~(1 << v) & ~adj[v], size + 1)
        rec(rest & ~(1 << v), size)

    rec((1 << g.n) - 1, 0)
    return best


def _iter_bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def reduce_independent_set(g: UGraph, target: str, k: int) -> ReductionInstance:
    """D = G plus one edge gadget per edge (oriented u -> v with u < v).

    Original vertices pay 1 for label 1 and |V(G)| for label k+1; everything
    else is free. The optimum is |V(G)| - alpha(G).
    """
    if target not in ("h1", "h2"):
        raise ValueError("target must be h1 or h2")
    h = gadget_h1(k) if target == "h1" else gadget_h2(k)
    frag = edge_gadget_d_uv(k)
    inner = frag.digraph.n - 2
    arcs: list[tuple[int, int]] = []
    names = [f"g:{v}" for v in range(g.n)]
    gadgets = []
    for u, v in g.sorted_edges():
        base = len(names)
        local = {frag.port_u: u, frag.port_v: v}
        for i in range(inner):
            local[i] = base + i
        names += [f"{u}-{v}:{frag.digraph.names[i]}" for i in range(inner)]
        arcs += [(local[a], local[b]) for a, b in frag.digraph.sorted_arcs()]
        gadgets.append(((u, v), tuple(local[i] for i in range(frag.cycle_length))))
    d = Digraph(len(names), frozenset(arcs), tuple(names))
    assert d.n == g.n + len(g.edges) * (k * (k + 1) + 4)
    costs = [[0] * h.n for _ in range(d.n)]
    for v in range(g.n):
        costs[v][0] = 1
        costs[v][k] = g.n
    return ReductionInstance(
        target, d, h, tuple(map(tuple, costs)), g, k,
        "|V(G)| - alpha(G)", g.n - max_independent_set(g) if g.n <= MIS_LIMIT else None,
        tuple(range(g.n)), tuple(gadgets),
    )


def reduce_i3(x: UGraph, variant: str) -> ReductionInstance:
    """Reduction from a properly 3-coloured graph X to MinHOM(O_i).

    U-V edges become arcs u -> v, V-W edges arcs v -> w, and a U-W edge becomes
    u -> m, n -> m, n -> w with two fresh vertices m, n. Labels 1..6 of O_i are
    vertex ids 0..5.
    """
    label = variant.upper()
    if label not in O_FAMILY:
        raise ValueError(f"unknown O variant {variant!r}")
    if x.colors is None:
        raise ValueError("reduce_i3 needs a 3-coloured graph")
    col = x.colors
    big = x.n
    names = [f"{col[v]}:{v}" for v in range(x.n)]
    arcs: list[tuple[int, int]] = []
    mn: list[int] = []
    for a, b in x.sorted_edges():
        ca, cb = col[a], col[b]
        if {ca, cb} == {"U", "V"}:
            arcs.append((a, b) if ca == "U" else (b, a))
        elif {ca, cb} == {"V", "W"}:
            arcs.append((a, b) if ca == "V" else (b, a))
        else:
            u, w = (a, b) if ca == "U" else (b, a)
            m, n = len(names), len(names) + 1
            names += [f"{u}-{w}:m", f"{u}-{w}:n"]
            arcs += [(u, m), (n, m), (n, w)]
            mn += [m, n]
    d = Digraph(len(names), frozenset(arcs), tuple(names))
    costs = [[big] * 6 for _ in range(d.n)]
    cheap = {"U": (1, 0), "V": (2, 3), "W": (4, 5)}  # (cost-0 label, cost-1 label), 0-based
    for v in range(x.n):
        zero, one = cheap[col[v]]
        costs[v][zero] = 0
        costs[v][one] = 1
    for v in mn:
        costs[v][2] = -big
    return ReductionInstance(
        label.lower(), d, O_FAMILY[label], tuple(map(tuple, costs)), x, None,
        "|V(X)| - alpha(X)", x.n - max_independent_set(x) if x.n <= MIS_LIMIT else None,
        tuple(range(x.n)),
    )


def lift_bigraph_instance(
    gb: BipartiteGraph,
    h: Digraph,
    white_costs: Sequence[Sequence[int]],
    black_costs: Sequence[Sequence[int]],
) -> ReductionInstance:
    """Orient every edge of ``gb`` white -> black; whites are D-vertices 0..nw-1, blacks follow.

    ``white_costs[w][i]`` is the cost of sending white w to i' and
    ``black_costs[b][i]`` that of sending black b to i''.
    """
    if len(white_costs) != gb.nw or len(black_costs) != gb.nb:
        raise ValueError("one cost row per bipartite vertex is required")
    d = Digraph(gb.nw + gb.nb, frozenset((w, gb.nw + b) for w, b in gb.edges))
    costs = tuple(tuple(r) for r in white_costs) + tuple(tuple(r) for r in black_costs)
    if any(len(r) != h.n for r in costs):
        raise ValueError("cost rows must have one entry per target vertex")
    return ReductionInstance("lift", d, h, costs, formula="optimum of MinHOM(B(H)) on the bigraph")


def bipartite_minhom(
    gb: BipartiteGraph,
    h: Digraph,
    white_costs: Sequence[Sequence[int]],
    black_costs: Sequence[Sequence[int]],
) -> int | None:
    """Side-preserving MinHOM(gb -> B(H)) by plain enumeration (tiny instances only)."""
    best = None
    for fw in product(h.vertices, repeat=gb.nw):
        for fb in product(h.vertices, repeat=gb.nb):
            if all(h.has_arc(fw[w], fb[b]) for w, b in gb.edges):
                cost = sum(white_costs[w][fw[w]] for w in gb.whites) + sum(black_costs[b][fb[b]] for b in gb.blacks)
                if best is None or cost < best:
                    best = cost
    return best


@dataclass
class ReductionReport:
    ok: bool
    expected: int | None
    observed: int | None
    homomorphism: Homomorphism | None = None
    invariants: dict[str, bool] = field(default_factory=dict)

    def to_json(self) -> dict:
        out = {"ok": self.ok, "expected": self.expected, "observed": self.observed, "invariants": self.invariants}
        if self.homomorphism is not None:
            out["mapping"] = list(self.homomorphism.f)
        return out


def forced_sequence_holds(k: int, colors: Sequence[int]) -> bool:
    """Cycle colours (1-based labels) are 1..k repeated k+1 times or 1..k+1 repeated k times."""
    short = list(range(1, k + 1)) * (k + 1)
    long = list(range(1, k + 2)) * k
    return list(colors) in (short, long)


def verify_reduction(
    inst: ReductionInstance,
    oracle: Callable[..., Homomorphism | None] | None = None,
) -> ReductionReport:
    """Solve the instance with the oracle and compare with the expected optimum."""
    if oracle is None:
        def oracle(g, h, c):
            return brute_force_minhom(g, h, c, lex_ties=False)
    hom = oracle(inst.g, inst.h, inst.costs)
    observed = None if hom is None else hom.cost
    report = ReductionReport(observed == inst.expected, inst.expected, observed, hom)
    if hom is not None and inst.kind in ("h1", "h2"):
        f = hom.f
        report.invariants["never_both_2"] = all(
            not (f[u] == 1 and f[v] == 1) for (u, v), _ in inst.gadgets
        )
        if inst.kind == "h1":
            report.invariants["forced_sequence"] = all(
                forced_sequence_holds(inst.k, [f[c] + 1 for c in cyc]) for _, cyc in inst.gadgets
            )
        report.ok = report.ok and all(report.invariants.values())
    return report
