"""Exact MinHOM solvers.

* ``brute_force_minhom``: branch and bound with arc-consistency propagation;
  the reference oracle.
* ``solve_via_minmax``: one minimum cut, for targets with a Min-Max ordering.
* ``solve_cycle_shift``: shift enumeration for directed cycles, C2 and
  extensions of C3.
* ``solve``: dispatch on the classifier's certificates.

Costs are a list of rows, ``c[u][i]`` being the cost of mapping input vertex u
to target vertex i.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .classifier import POLYNOMIAL, classify
from .digraph import (
    Digraph,
    cycle_order,
    extension_decomposition,
    induced_subdigraph,
    is_c2,
    is_directed_cycle,
    weak_components,
)
from .flow import FlowNetwork, min_cut
from .ordering import MinMaxOrdering, PreconditionError, find_minmax_ordering, verify_minmax

CostMatrix = Sequence[Sequence[int]]

ALGORITHMS = ("auto", "brute", "mincut", "shift")


class IncompatibleAlgorithm(ValueError):
    """The requested algorithm does not apply to the target digraph."""


class EncodingError(RuntimeError):
    """An arc relation could not be expressed by threshold implications."""


@dataclass(frozen=True)
class Homomorphism:
    f: tuple[int, ...]
    cost: int

    def to_json(self) -> dict:
        return {"mapping": list(self.f), "cost": self.cost}


def check_costs(g: Digraph, h: Digraph, c: CostMatrix) -> None:
    if len(c) != g.n or any(len(row) != h.n for row in c):
        raise ValueError(f"cost matrix must be {g.n} x {h.n}")


def is_homomorphism(g: Digraph, h: Digraph, f: Sequence[int]) -> bool:
    if len(f) != g.n or any(not 0 <= x < h.n for x in f):
        return False
    return all(h.has_arc(f[u], f[v]) for u, v in g.arcs)


def hom_cost(c: CostMatrix, f: Sequence[int]) -> int:
    return sum(c[u][x] for u, x in enumerate(f))


# ---------------------------------------------------------------------------
# brute force


class _Masks:
    """Support masks: OUT[m] = vertices with an in-neighbour in m, IN[m] likewise."""

    def __init__(self, h: Digraph) -> None:
        self.out_single = [sum(1 << b for b in h.out_nbrs[a]) for a in h.vertices]
        self.in_single = [sum(1 << b for b in h.in_nbrs[a]) for a in h.vertices]
        self._out: dict[int, int] = {}
        self._in: dict[int, int] = {}

    @staticmethod
    def _union(table: list[int], mask: int) -> int:
        acc = 0
        while mask:
            low = mask & -mask
            acc |= table[low.bit_length() - 1]
            mask ^= low
        return acc

    def succ(self, mask: int) -> int:
        r = self._out.get(mask)
        if r is None:
            r = self._out[mask] = self._union(self.out_single, mask)
        return r

    def pred(self, mask: int) -> int:
        r = self._in.get(mask)
        if r is None:
            r = self._in[mask] = self._union(self.in_single, mask)
        return r


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


class _BranchAndBound:
    def __init__(self, g: Digraph, h: Digraph, c: CostMatrix, masks: _Masks) -> None:
        self.g, self.h, self.c, self.m = g, h, c, masks
        self.rank = {v: r for r, v in enumerate(sorted(g.vertices, key=lambda v: (-len(g.nbrs[v]), v)))}

    def propagate(self, dom: list[int], queue: list[int]) -> bool:
        g, m = self.g, self.m
        pending = set(queue)
        while queue:
            w = queue.pop()
            pending.discard(w)
            dw = dom[w]
            for x in g.out_nbrs[w]:
                nd = dom[x] & m.succ(dw)
                if nd != dom[x]:
                    if not nd:
                        return False
                    dom[x] = nd
                    if x not in pending:
                        pending.add(x)
                        queue.append(x)
            for x in g.in_nbrs[w]:
                nd = dom[x] & m.pred(dw)
                if nd != dom[x]:
                    if not nd:
                        return False
                    dom[x] = nd
                    if x not in pending:
                        pending.add(x)
                        queue.append(x)
        return True

    def bound(self, dom: list[int]) -> int:
        c = self.c
        return sum(min(c[u][a] for a in _bits(dom[u])) for u in self.g.vertices)

    def search(self, dom: list[int], limit: int | None) -> tuple[int, list[int]] | None:
        """Cheapest assignment within ``dom`` with cost < limit (or any, if limit is None)."""
        best: list = [limit, None]
        c, rank = self.c, self.rank

        def rec(dom: list[int]) -> None:
            lb = self.bound(dom)
            if best[0] is not None and lb >= best[0]:
                return
            open_vars = [u for u in self.g.vertices if dom[u] & (dom[u] - 1)]
            if not open_vars:
                best[0] = lb
                best[1] = [_bits(d)[0] for d in dom]
                return
            u = min(open_vars, key=lambda v: (bin(dom[v]).count("1"), rank[v]))
            for a in sorted(_bits(dom[u]), key=lambda a: (c[u][a], a)):
                nxt = list(dom)
                nxt[u] = 1 << a
                if self.propagate(nxt, [u]):
                    rec(nxt)

        rec(dom)
        if best[1] is None:
            return None
        return best[0], best[1]


def brute_force_minhom(
    g: Digraph,
    h: Digraph,
    c: CostMatrix,
    domains: Sequence[Sequence[int]] | None = None,
    lex_ties: bool = True,
) -> Homomorphism | None:
    """Minimum-cost homomorphism by exhaustive branch and bound.

    Weak components of G are solved independently. With ``lex_ties`` the
    lexicographically least optimal mapping (by vertex id) is returned, at the
    price of one extra bounded search per vertex and value.
    """
    check_costs(g, h, c)
    full = (1 << h.n) - 1
    masks = _Masks(h)
    f = [0] * g.n
    total = 0
    for comp in weak_components(g):
        sub, back = induced_subdigraph(g, comp)
        sc = [list(c[v]) for v in back]
        dom = [full if domains is None else sum(1 << a for a in domains[v]) for v in back]
        bb = _BranchAndBound(sub, h, sc, masks)
        if not all(dom) or not bb.propagate(dom, list(sub.vertices)):
            return None
        found = bb.search(list(dom), None)
        if found is None:
            return None
        cost, assign = found
        if lex_ties:
            assign = _lex_least(bb, dom, cost)
        for i, v in enumerate(back):
            f[v] = assign[i]
        total += cost
    result = Homomorphism(tuple(f), total)
    assert is_homomorphism(g, h, result.f) and hom_cost(c, result.f) == total
    return result


def _lex_least(bb: _BranchAndBound, dom: list[int], cost: int) -> list[int]:
    dom = list(dom)
    for u in bb.g.vertices:
        for a in _bits(dom[u]):
            trial = list(dom)
            trial[u] = 1 << a
            if bb.propagate(trial, [u]) and bb.search(trial, cost + 1) is not None:
                dom = trial
                break
        else:  # pragma: no cover - the optimum lies in some branch
            raise AssertionError("optimum lost while fixing values")
    return [_bits(d)[0] for d in dom]


# ---------------------------------------------------------------------------
# min-cut solver for Min-Max ordered targets


@dataclass(frozen=True)
class ArcEncoding:
    """Threshold encoding of a binary relation R over positions 0..p-1.

    ``x_{s,i}`` means "the position of s is >= i". An implication
    ``(s, i, t, j)`` reads ``x_{s,i} -> x_{t,j}``; side 0 is the tail u of the
    arc, side 1 the head v.
    """

    p: int
    implications: tuple[tuple[int, int, int, int], ...]
    allowed: tuple[frozenset[int], frozenset[int]]

    def accepts(self, a: int, b: int) -> bool:
        if a not in self.allowed[0] or b not in self.allowed[1]:
            return False
        pos = (a, b)
        return all(not pos[s] >= i or pos[t] >= j for s, i, t, j in self.implications)

    def decoded(self) -> frozenset[tuple[int, int]]:
        return frozenset((a, b) for a in range(self.p) for b in range(self.p) if self.accepts(a, b))


def encode_arc_constraint(rel: set[tuple[int, int]] | frozenset, p: int) -> ArcEncoding:
    """Strongest valid threshold implications between the two endpoints, checked to be exact."""
    rel = frozenset(rel)
    allowed = (frozenset(a for a, _ in rel), frozenset(b for _, b in rel))
    imps = []
    for s, t in ((0, 1), (1, 0)):
        if not allowed[s] or not allowed[t]:
            continue
        lo_t = min(allowed[t])
        for i in range(1, p):
            if i > max(allowed[s]):
                break
            # largest j with: every pair having pos_s >= i has pos_t >= j
            j = min(pair[t] for pair in rel if pair[s] >= i)
            if j > lo_t:
                imps.append((s, i, t, j))
    enc = ArcEncoding(p, tuple(imps), allowed)
    if enc.decoded() != rel:
        raise EncodingError("relation is not closed under min and max for this ordering")
    return enc


def solve_via_minmax(
    g: Digraph, h: Digraph, c: CostMatrix, o: MinMaxOrdering | None = None
) -> Homomorphism | None:
    """Optimum by a single minimum cut over threshold variables.

    Chain (u, j) -> (u, j+1) carries the cost of placing u at position j,
    reverse chain arcs and implication arcs are infinite. Rows are shifted to be
    nonnegative and the shifts added back to the reported cost.
    """
    check_costs(g, h, c)
    if o is None:
        o = find_minmax_ordering(h)
        if o is None:
            raise PreconditionError("target has no Min-Max ordering from the constructive routes")
    if not verify_minmax(h, o):
        raise PreconditionError("ordering is not a Min-Max ordering of the target")
    p = h.n
    if g.n == 0:
        return Homomorphism((), 0)
    if p == 0:
        return None
    order = o.order
    pos = {v: k for k, v in enumerate(order)}
    rel = frozenset((pos[a], pos[b]) for a, b in h.arcs)

    allowed = [set(range(p)) for _ in g.vertices]
    encodings = []
    if g.arcs:
        if not rel:
            return None
        enc = encode_arc_constraint(rel, p)
        for u, v in g.sorted_arcs():
            allowed[u] &= enc.allowed[0]
            allowed[v] &= enc.allowed[1]
            encodings.append((u, v, enc))
    if any(not a for a in allowed):
        return None

    shift = [min(row) for row in c]
    pc = [[c[u][order[j]] - shift[u] for j in range(p)] for u in g.vertices]
    net = FlowNetwork(inf=1 + sum(sum(row) for row in pc))
    s, t = net.source, net.sink

    def node(u: int, j: int):
        return s if j == 0 else t if j == p else (u, j)

    for u in g.vertices:
        for j in range(p):
            cap = pc[u][j] if j in allowed[u] else net.inf
            net.add_arc(node(u, j), node(u, j + 1), cap)
            net.add_infinite(node(u, j + 1), node(u, j))
    for u, v, enc in encodings:
        ends = (u, v)
        for side_s, i, side_t, j in enc.implications:
            # x_{s,i} true (source side) forces x_{t,j} true
            net.add_infinite(node(ends[side_s], i), node(ends[side_t], j))

    value, side = min_cut(net)
    if net.is_infinite(value):
        return None
    f = []
    for u in g.vertices:
        j = max(k for k in range(p) if node(u, k) in side)
        f.append(order[j])
    cost = hom_cost(c, f)
    assert is_homomorphism(g, h, f), "min cut decoded to a non-homomorphism"
    assert cost == value + sum(shift)
    return Homomorphism(tuple(f), cost)


# ---------------------------------------------------------------------------
# shift solver for cyclic targets


def cyclic_parts(h: Digraph) -> list[frozenset[int]] | None:
    """Parts of H in cycle order when H is C_k (k >= 2) or an extension of C3."""
    k = is_directed_cycle(h)
    if k:
        return [frozenset([v]) for v in cycle_order(h)]
    if is_c2(h):
        return [frozenset([0]), frozenset([1])]
    parts = extension_decomposition(h)
    if parts is not None:
        return [frozenset(p) for p in parts]
    return None


def solve_cycle_shift(g: Digraph, h: Digraph, c: CostMatrix) -> Homomorphism | None:
    """Each arc advances the part index by one (mod k); enumerate the k shifts per component."""
    check_costs(g, h, c)
    parts = cyclic_parts(h)
    if parts is None:
        raise PreconditionError("target must be a directed cycle or an extension of C3")
    k = len(parts)
    members = [sorted(p) for p in parts]
    best_in = [[min(members[q], key=lambda x: (c[u][x], x)) for q in range(k)] for u in g.vertices]
    f = [0] * g.n
    total = 0
    for comp in weak_components(g):
        start = min(comp)
        idx = {start: 0}
        stack = [start]
        while stack:
            u = stack.pop()
            for v, step in [(v, 1) for v in g.out_nbrs[u]] + [(v, -1) for v in g.in_nbrs[u]]:
                want = (idx[u] + step) % k
                if v not in idx:
                    idx[v] = want
                    stack.append(v)
                elif idx[v] != want:
                    return None
        best_shift, best_cost = 0, None
        for sh in range(k):
            cost = sum(c[u][best_in[u][(idx[u] + sh) % k]] for u in comp)
            if best_cost is None or cost < best_cost:
                best_shift, best_cost = sh, cost
        for u in comp:
            f[u] = best_in[u][(idx[u] + best_shift) % k]
        total += best_cost
    assert is_homomorphism(g, h, f)
    return Homomorphism(tuple(f), total)


# ---------------------------------------------------------------------------
# dispatch


@dataclass
class SolveResult:
    homomorphism: Homomorphism | None
    algorithms: list[str] = field(default_factory=list)
    brute_force_fallback: bool = False

    @property
    def feasible(self) -> bool:
        return self.homomorphism is not None

    def to_json(self) -> dict:
        out: dict = {"feasible": self.feasible, "algorithms": self.algorithms}
        if self.homomorphism is not None:
            out.update(self.homomorphism.to_json())
        if self.brute_force_fallback:
            out["warning"] = "no polynomial certificate for the target; used brute force"
        return out


def _component_algorithm(hc: Digraph) -> tuple[str, MinMaxOrdering | None]:
    for verdict in classify(hc, "auto"):
        if verdict.outcome != POLYNOMIAL:
            continue
        cert = verdict.components[0].certificate
        if cert.kind == "MinMaxOrdering":
            return "mincut", MinMaxOrdering(cert.order)
        return "shift", None
    return "brute", None


def _solve_one(g: Digraph, h: Digraph, c: CostMatrix, algorithm: str, o=None) -> Homomorphism | None:
    if algorithm == "mincut":
        return solve_via_minmax(g, h, c, o)
    if algorithm == "shift":
        return solve_cycle_shift(g, h, c)
    return brute_force_minhom(g, h, c)


def solve(g: Digraph, h: Digraph, c: CostMatrix, algorithm: str = "auto") -> SolveResult:
    """Minimum-cost homomorphism G -> H with the requested algorithm.

    ``auto`` maps every weak component of G into every weak component of H,
    solving each pair with the algorithm the classifier certifies, and keeps the
    cheapest. Explicit algorithms run on the whole instance.
    """
    check_costs(g, h, c)
    if algorithm not in ALGORITHMS:
        raise ValueError(f"unknown algorithm {algorithm!r}")
    if algorithm == "brute":
        return SolveResult(brute_force_minhom(g, h, c), ["brute"])
    if algorithm == "mincut":
        o = find_minmax_ordering(h)
        if o is None:
            raise IncompatibleAlgorithm("mincut needs a target with a certified Min-Max ordering")
        return SolveResult(solve_via_minmax(g, h, c, o), ["mincut"])
    if algorithm == "shift":
        if cyclic_parts(h) is None:
            raise IncompatibleAlgorithm("shift needs a directed cycle, C2 or an extension of C3")
        return SolveResult(solve_cycle_shift(g, h, c), ["shift"])

    hcomps = []
    for comp in weak_components(h):
        hc, hback = induced_subdigraph(h, comp)
        alg, o = _component_algorithm(hc)
        hcomps.append((hc, hback, alg, o))
    result = SolveResult(None)
    used = set()
    f = [0] * g.n
    total = 0
    for comp in weak_components(g):
        gc, gback = induced_subdigraph(g, comp)
        best = None
        for hc, hback, alg, o in hcomps:
            cc = [[c[u][x] for x in hback] for u in gback]
            hom = _solve_one(gc, hc, cc, alg, o)
            used.add(alg)
            if hom is not None and (best is None or hom.cost < best[0].cost):
                best = (hom, hback)
        if best is None:
            result.algorithms = sorted(used)
            result.brute_force_fallback = "brute" in used
            return result
        hom, hback = best
        for i, u in enumerate(gback):
            f[u] = hback[hom.f[i]]
        total += hom.cost
    result.homomorphism = Homomorphism(tuple(f), total)
    result.algorithms = sorted(used)
    result.brute_force_fallback = "brute" in used
    assert is_homomorphism(g, h, f) and hom_cost(c, f) == total
    return result
