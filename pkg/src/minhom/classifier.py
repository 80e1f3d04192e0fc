"""Polynomial / NP-hard classification of MinHOM(H) for the two digraph classes.

Locally semicomplete H: polynomial iff every weak component is acyclic or a
directed cycle. Quasi-transitive H: polynomial iff every weak component is C2,
an extension of C3, or acyclic with B(component) a proper interval bigraph and
no induced O1..O4.

Every polynomial component carries a checkable certificate and every NP-hard
component an induced witness subdigraph whose MinHOM problem is NP-hard.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from itertools import combinations

from .digraph import (
    Digraph,
    bipartite_replication,
    converse,
    cycle_order,
    extension_decomposition,
    induced_subdigraph,
    is_acyclic,
    is_c2,
    is_directed_cycle,
    weak_components,
)
from .gadgets import gadget_h1, gadget_h2
from .iso import are_isomorphic
from .ordering import (
    MinMaxOrdering,
    PreconditionError,
    find_induced_o,
    o_label_of,
    order_acyclic_locally_semicomplete,
    proper_exchange_procedure,
    verify_minmax,
)
from .pibigraph import BigraphObstruction, find_forbidden_bigraph, obstruction_is_genuine
from .recognizers import has_symmetric_arc, is_locally_semicomplete, is_quasi_transitive, is_semicomplete

LS = "locally_semicomplete"
QT = "quasi_transitive"

POLYNOMIAL = "polynomial"
NP_HARD = "np-hard"
NOT_IN_CLASS = "not-in-class"


@dataclass(frozen=True)
class Certificate:
    """Why a component is polynomial.

    kind is one of ``MinMaxOrdering`` (``order``), ``DirectedCycle`` (``order``
    lists the cycle, ``k`` its length), ``C2`` and ``ExtensionOfC3`` (``parts``).
    """

    kind: str
    order: tuple[int, ...] = ()
    k: int | None = None
    parts: tuple[tuple[int, ...], ...] = ()

    def to_json(self) -> dict:
        out: dict = {"kind": self.kind}
        if self.kind == "ExtensionOfC3":
            out["parts"] = [list(p) for p in self.parts]
        else:
            out["order" if self.kind == "MinMaxOrdering" else "cycle"] = list(self.order)
        if self.k is not None:
            out["k"] = self.k
        return out


@dataclass(frozen=True)
class Witness:
    """Induced subdigraph of H on which MinHOM is already NP-hard.

    kind: ``SemicompleteWithCycle``, ``H1``, ``H2``, ``InducedO`` or
    ``BigraphObstruction``. For the last one ``vertices`` is empty and the
    obstruction lives in B(H) (``bigraph``).
    """

    kind: str
    vertices: tuple[int, ...]
    reason: str
    k: int | None = None
    label: str | None = None
    converse: bool = False
    bigraph: BigraphObstruction | None = None

    def to_json(self) -> dict:
        out: dict = {"kind": self.kind, "reason": self.reason}
        if self.bigraph is not None:
            out["bigraph"] = self.bigraph.to_json()
        else:
            out["vertices"] = list(self.vertices)
        if self.k is not None:
            out["k"] = self.k
        if self.label is not None:
            out["label"] = self.label
        if self.kind in ("H1", "H2"):
            out["converse"] = self.converse
        return out


@dataclass(frozen=True)
class ComponentVerdict:
    vertices: tuple[int, ...]
    outcome: str
    certificate: Certificate | None = None
    witness: Witness | None = None

    def to_json(self) -> dict:
        out: dict = {"vertices": list(self.vertices), "outcome": self.outcome}
        if self.certificate is not None:
            out["certificate"] = self.certificate.to_json()
        if self.witness is not None:
            out["witness"] = self.witness.to_json()
        return out


@dataclass(frozen=True)
class Verdict:
    class_checked: str
    outcome: str
    components: tuple[ComponentVerdict, ...] = field(default=())

    @property
    def polynomial(self) -> bool:
        return self.outcome == POLYNOMIAL

    def witness(self) -> Witness | None:
        return next((c.witness for c in self.components if c.witness is not None), None)

    def to_json(self) -> dict:
        return {
            "class": self.class_checked,
            "verdict": self.outcome,
            "components": [c.to_json() for c in self.components],
        }


# ---------------------------------------------------------------------------
# helpers


def shortest_cycle(h: Digraph) -> list[int] | None:
    """A shortest directed cycle (hence induced), least start vertex on ties."""
    best: list[int] | None = None
    succ = [sorted(s) for s in h.out_nbrs]
    for s in h.vertices:
        parent = {s: None}
        queue = deque([s])
        found = None
        while queue and found is None:
            v = queue.popleft()
            for w in succ[v]:
                if w == s:
                    found = v
                    break
                if w not in parent:
                    parent[w] = v
                    queue.append(w)
        if found is None:
            continue
        path = []
        v = found
        while v is not None:
            path.append(v)
            v = parent[v]
        path.reverse()
        if best is None or len(path) < len(best):
            best = path
    return best


def _embed(local: Witness, back: list[int]) -> Witness:
    """Translate a witness on an induced subdigraph back to the host's vertex ids."""
    bigraph = None
    if local.bigraph is not None:
        bigraph = BigraphObstruction(
            local.bigraph.kind,
            tuple((side, back[v]) for side, v in local.bigraph.vertices),
            local.bigraph.half_length,
        )
    return Witness(
        local.kind, tuple(back[v] for v in local.vertices), local.reason,
        local.k, local.label, local.converse, bigraph,
    )


def _gadget_kind(h: Digraph, verts: tuple[int, ...]) -> tuple[str, int, bool] | None:
    sub, _ = induced_subdigraph(h, verts)
    k = sub.n - 1
    for kind, make, kmin in (("H1", gadget_h1, 2), ("H2", gadget_h2, 3)):
        if k < kmin:
            continue
        g = make(k)
        if are_isomorphic(sub, g):
            return kind, k, False
        if are_isomorphic(sub, converse(g)):
            return kind, k, True
    return None


def _is_semicomplete_with_cycle(h: Digraph, verts) -> bool:
    sub, _ = induced_subdigraph(h, verts)
    if not is_semicomplete(sub) or is_acyclic(sub):
        return False
    return not (is_c2(sub) or is_directed_cycle(sub) == 3)


# ---------------------------------------------------------------------------
# witness extraction


def extract_ls_witness(h: Digraph) -> Witness:
    """NP-hardness witness in a connected locally semicomplete digraph that is
    neither acyclic nor a directed cycle."""
    if len(weak_components(h)) != 1 or not is_locally_semicomplete(h):
        raise PreconditionError("need a connected locally semicomplete digraph")
    if is_acyclic(h) or is_directed_cycle(h):
        raise PreconditionError("digraph is acyclic or a directed cycle")
    cyc = shortest_cycle(h)
    on_cycle = set(cyc)
    w = min(v for v in h.vertices if v not in on_cycle and h.nbrs[v] & on_cycle)
    k = len(cyc)
    if k == 2:
        verts = (cyc[0], cyc[1], w)
        assert _is_semicomplete_with_cycle(h, verts)
        return Witness("SemicompleteWithCycle", verts, "semicomplete-with-cycle")

    d, walk = h, cyc
    if not any(h.has_arc(c, w) for c in cyc):
        # w only dominates cycle vertices: argue in the converse
        d, walk = converse(h), cyc[::-1]
    dom = [d.has_arc(c, w) for c in walk]
    if all(dom):
        # only possible for k == 3: the four vertices form a semicomplete digraph
        verts = tuple(sorted(cyc + [w]))
        assert _is_semicomplete_with_cycle(h, verts)
        return Witness("SemicompleteWithCycle", verts, "semicomplete-with-cycle")
    start = next(i for i in range(k) if dom[i] and not dom[i - 1])
    walk = walk[start:] + walk[:start]

    def at(j: int) -> int:
        return walk[j % k]

    if d.has_arc(w, at(1)):
        verts = tuple(walk) + (w,)
    elif d.has_arc(at(1), w):
        if d.has_arc(w, at(3)):
            verts = tuple(v for v in walk if v != at(1)) + (w,)
        else:
            verts = tuple(walk) + (w,)
    else:
        raise AssertionError("out-neighbourhood of a cycle vertex is not semicomplete")
    verts = tuple(sorted(verts))
    found = _gadget_kind(h, verts)
    if found is None:
        raise RuntimeError(f"witness on {verts} is not an H1/H2 copy in {h!r}")
    kind, kk, conv = found
    return Witness(kind, verts, "h1-gadget" if kind == "H1" else "h2-gadget", k=kk, converse=conv)


def _induced_c3(h: Digraph) -> tuple[int, int, int] | None:
    for a in h.vertices:
        for b in sorted(h.out_nbrs[a]):
            for c in sorted(h.out_nbrs[b]):
                if c != a and h.has_arc(c, a):
                    return a, b, c
    return None


def _maximal_c3_extension(h: Digraph, seed: tuple[int, int, int]) -> tuple[frozenset[int], ...]:
    members = set(seed)
    grown = True
    while grown:
        grown = False
        for x in h.vertices:
            if x in members:
                continue
            sub, _ = induced_subdigraph(h, members | {x})
            if extension_decomposition(sub) is not None:
                members.add(x)
                grown = True
    sub, back = induced_subdigraph(h, members)
    parts = extension_decomposition(sub)
    return tuple(frozenset(back[v] for v in p) for p in parts)


def extract_qt_witness(h: Digraph) -> Witness:
    """NP-hardness witness in a connected quasi-transitive digraph outside the polynomial cases."""
    if len(weak_components(h)) != 1 or not is_quasi_transitive(h):
        raise PreconditionError("need a connected quasi-transitive digraph")
    if is_c2(h) or extension_decomposition(h) is not None:
        raise PreconditionError("digraph is C2 or an extension of C3")

    sym = has_symmetric_arc(h)
    if sym is not None:
        u, v = sym
        w = min(x for x in h.vertices if x not in sym and (h.adjacent(x, u) or h.adjacent(x, v)))
        verts = (u, v, w)
        assert _is_semicomplete_with_cycle(h, verts)
        return Witness("SemicompleteWithCycle", tuple(sorted(verts)), "semicomplete-with-cycle")

    if not is_acyclic(h):
        parts = _maximal_c3_extension(h, _induced_c3(h))
        inside = set().union(*parts)
        for x in h.vertices:
            if x in inside or not h.nbrs[x] & inside:
                continue
            picks = [min((v for v in p if h.adjacent(x, v)), default=None) for p in parts]
            if None not in picks:
                verts = tuple(sorted([x] + picks))
                assert _is_semicomplete_with_cycle(h, verts)
                return Witness("SemicompleteWithCycle", verts, "semicomplete-with-cycle")
        raise RuntimeError(f"no vertex adjacent to all three parts of a maximal C3 extension in {h!r}")

    obs = find_induced_o(h)
    if obs is not None:
        return Witness("InducedO", obs.vertices, "o-gadget", label=obs.label)
    big = find_forbidden_bigraph(bipartite_replication(h))
    if big is not None:
        return Witness("BigraphObstruction", (), "bigraph-lift", bigraph=big)
    raise PreconditionError("acyclic digraph satisfies the polynomial conditions")


# ---------------------------------------------------------------------------
# classification


def _ls_component(sub: Digraph) -> ComponentVerdict:
    local = tuple(sub.vertices)
    if is_acyclic(sub):
        o = order_acyclic_locally_semicomplete(sub)
        return ComponentVerdict(local, POLYNOMIAL, Certificate("MinMaxOrdering", o.order))
    k = is_directed_cycle(sub)
    if k:
        return ComponentVerdict(local, POLYNOMIAL, Certificate("DirectedCycle", tuple(cycle_order(sub)), k=k))
    return ComponentVerdict(local, NP_HARD, witness=extract_ls_witness(sub))


def _qt_component(sub: Digraph) -> ComponentVerdict:
    local = tuple(sub.vertices)
    if is_c2(sub):
        return ComponentVerdict(local, POLYNOMIAL, Certificate("C2", (0, 1), k=2))
    parts = extension_decomposition(sub)
    if parts is not None:
        cert = Certificate("ExtensionOfC3", parts=tuple(tuple(sorted(p)) for p in parts))
        return ComponentVerdict(local, POLYNOMIAL, cert)
    if is_acyclic(sub):
        res = proper_exchange_procedure(sub)
        if res.kind == "ordering":
            return ComponentVerdict(local, POLYNOMIAL, Certificate("MinMaxOrdering", res.ordering.order))
        if res.kind == "obstruction_o":
            w = Witness("InducedO", res.obstruction.vertices, "o-gadget", label=res.obstruction.label)
        else:
            w = Witness("BigraphObstruction", (), "bigraph-lift", bigraph=res.bigraph_obstruction)
        return ComponentVerdict(local, NP_HARD, witness=w)
    return ComponentVerdict(local, NP_HARD, witness=extract_qt_witness(sub))


def _lift(cv: ComponentVerdict, back: list[int]) -> ComponentVerdict:
    cert = cv.certificate
    if cert is not None:
        cert = Certificate(
            cert.kind, tuple(back[v] for v in cert.order), cert.k,
            tuple(tuple(sorted(back[v] for v in p)) for p in cert.parts),
        )
    wit = _embed(cv.witness, back) if cv.witness is not None else None
    return ComponentVerdict(tuple(back), cv.outcome, cert, wit)


def _classify(h: Digraph, cls: str, member, per_component) -> Verdict:
    if not member(h):
        return Verdict(cls, NOT_IN_CLASS)
    comps = []
    for comp in weak_components(h):
        sub, back = induced_subdigraph(h, comp)
        comps.append(_lift(per_component(sub), back))
    outcome = POLYNOMIAL if all(c.outcome == POLYNOMIAL for c in comps) else NP_HARD
    return Verdict(cls, outcome, tuple(comps))


def classify_locally_semicomplete(h: Digraph) -> Verdict:
    return _classify(h, LS, is_locally_semicomplete, _ls_component)


def classify_quasi_transitive(h: Digraph) -> Verdict:
    return _classify(h, QT, is_quasi_transitive, _qt_component)


def classify(h: Digraph, cls: str = "auto") -> list[Verdict]:
    """Verdicts for ``ls``, ``qt`` or both (``auto``)."""
    if cls in ("ls", LS):
        return [classify_locally_semicomplete(h)]
    if cls in ("qt", QT):
        return [classify_quasi_transitive(h)]
    if cls == "auto":
        return [classify_locally_semicomplete(h), classify_quasi_transitive(h)]
    raise ValueError(f"unknown class {cls!r}")


# ---------------------------------------------------------------------------
# checking certificates and witnesses


def verify_certificate(h: Digraph, comp: tuple[int, ...], cert: Certificate) -> bool:
    sub, back = induced_subdigraph(h, comp)
    pos = {v: i for i, v in enumerate(back)}
    if cert.kind == "MinMaxOrdering":
        if sorted(cert.order) != sorted(comp):
            return False
        return verify_minmax(sub, MinMaxOrdering(tuple(pos[v] for v in cert.order)))
    if cert.kind in ("DirectedCycle", "C2"):
        cyc = cert.order
        if sorted(cyc) != sorted(comp) or len(cyc) != cert.k:
            return False
        return is_directed_cycle(sub) == cert.k and all(
            h.has_arc(cyc[i], cyc[(i + 1) % len(cyc)]) for i in range(len(cyc))
        )
    if cert.kind == "ExtensionOfC3":
        if sorted(v for p in cert.parts for v in p) != sorted(comp) or len(cert.parts) != 3:
            return False
        if any(h.adjacent(u, v) for p in cert.parts for u, v in combinations(p, 2)):
            return False
        expected = {(u, v) for i in range(3) for u in cert.parts[i] for v in cert.parts[(i + 1) % 3]}
        return expected == {(u, v) for u, v in h.arcs if u in pos and v in pos}
    return False


def verify_witness(h: Digraph, w: Witness) -> bool:
    if w.kind == "SemicompleteWithCycle":
        return _is_semicomplete_with_cycle(h, w.vertices)
    if w.kind in ("H1", "H2"):
        return _gadget_kind(h, w.vertices) == (w.kind, w.k, w.converse)
    if w.kind == "InducedO":
        return o_label_of(h, w.vertices) == w.label
    if w.kind == "BigraphObstruction":
        return w.bigraph is not None and obstruction_is_genuine(bipartite_replication(h), w.bigraph)
    return False


def ls_dichotomy_condition(h: Digraph) -> bool:
    """Independent restatement: every weak component acyclic or a directed cycle."""
    for comp in weak_components(h):
        sub, _ = induced_subdigraph(h, comp)
        if not (is_acyclic(sub) or is_directed_cycle(sub)):
            return False
    return True
