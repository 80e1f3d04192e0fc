"""Verification suites shared by the ``verify`` subcommand and the acceptance tests.

Every suite returns a JSON-ready dict with a boolean ``passed`` and counters.
Random suites derive one independent generator per trial from
``numpy.random.SeedSequence(seed).spawn``, so results do not depend on how
trials are scheduled; per-trial records are folded into a sha256 digest in
trial order.
"""

from __future__ import annotations

import hashlib
import json
import os
from concurrent.futures import ProcessPoolExecutor
from itertools import combinations
from typing import Callable, Iterable

import numpy as np

from .classifier import classify, classify_locally_semicomplete, ls_dichotomy_condition, verify_certificate, verify_witness
from .digraph import Digraph, bipartite_replication, converse, directed_cycle, is_acyclic, relabel, weak_components
from .enumerate import (
    all_bipartite,
    all_digraphs,
    all_oriented,
    all_transitive_oriented,
    random_bipartite,
    random_dag,
    random_digraph,
    random_transitive_oriented,
)
from .ordering import (
    find_induced_o,
    find_minmax_ordering,
    order_acyclic_locally_semicomplete,
    proper_exchange_procedure,
    verify_minmax,
)
from .pibigraph import find_bipartite_minmax_ordering, find_forbidden_bigraph
from .recognizers import is_locally_semicomplete, is_semicomplete
from .reductions import UGraph, reduce_i3, reduce_independent_set, verify_reduction
from .solver import brute_force_minhom, cyclic_parts, solve_cycle_shift, solve_via_minmax

THREADS_ENV = "MINHOM_THREADS"


def worker_count() -> int:
    try:
        return max(1, int(os.environ.get(THREADS_ENV, "1")))
    except ValueError:
        return 1


def _pmap(fn: Callable, items: list, workers: int) -> list:
    if workers <= 1 or len(items) < 2:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items, chunksize=max(1, len(items) // (4 * workers))))


def _digest(records: Iterable[dict]) -> str:
    h = hashlib.sha256()
    for r in records:
        h.update(json.dumps(r, sort_keys=True).encode())
        h.update(b"\n")
    return h.hexdigest()


def _connected(d: Digraph) -> bool:
    return d.n > 0 and len(weak_components(d)) == 1


# ---------------------------------------------------------------------------
# oracle equivalence of the polynomial solvers


FAMILIES = ("transitive_oriented", "acyclic_locally_semicomplete", "directed_cycle", "c3_extension")


def _random_target(rng: np.random.Generator, family: str) -> Digraph:
    if family == "transitive_oriented":
        while True:
            h = random_transitive_oriented(rng, int(rng.integers(1, 7)), float(rng.uniform(0.2, 0.8)))
            if find_minmax_ordering(h) is not None:
                return h
    if family == "acyclic_locally_semicomplete":
        while True:
            h = random_dag(rng, int(rng.integers(1, 7)), float(rng.uniform(0.4, 1.0)))
            if is_locally_semicomplete(h):
                return h
    if family == "directed_cycle":
        k = int(rng.integers(2, 7))
        return relabel(directed_cycle(k), rng.permutation(k).tolist())
    sizes = [1, 1, 1]
    for _ in range(int(rng.integers(0, 4))):
        sizes[int(rng.integers(0, 3))] += 1
    parts, start = [], 0
    for s in sizes:
        parts.append(range(start, start + s))
        start += s
    arcs = [(u, v) for i in range(3) for u in parts[i] for v in parts[(i + 1) % 3]]
    return relabel(Digraph(start, frozenset(arcs)), rng.permutation(start).tolist())


def _random_input(rng: np.random.Generator, h: Digraph) -> Digraph:
    n = int(rng.integers(1, 8))
    if rng.random() < 0.5:
        return random_digraph(rng, n, float(rng.uniform(0.05, 0.4)))
    # arcs pulled back along a random map, plus an occasional stray arc
    phi = rng.integers(0, h.n, size=n).tolist()
    arcs = {(u, v) for u in range(n) for v in range(n) if u != v and h.has_arc(phi[u], phi[v]) and rng.random() < 0.6}
    if rng.random() < 0.3 and n > 1:
        u, v = rng.choice(n, size=2, replace=False).tolist()
        arcs.add((u, v))
    return Digraph(n, frozenset(arcs))


def _oracle_trial(job: tuple[int, np.random.SeedSequence]) -> dict:
    idx, ss = job
    rng = np.random.default_rng(ss)
    family = FAMILIES[idx % len(FAMILIES)]
    h = _random_target(rng, family)
    g = _random_input(rng, h)
    c = rng.integers(-5, 6, size=(g.n, h.n)).tolist()
    brute = brute_force_minhom(g, h, c, lex_ties=False)
    record = {
        "trial": idx,
        "family": family,
        "n_g": g.n,
        "n_h": h.n,
        "brute": None if brute is None else brute.cost,
        "solvers": {},
    }
    o = find_minmax_ordering(h)
    if o is not None:
        r = solve_via_minmax(g, h, c, o)
        record["solvers"]["mincut"] = None if r is None else r.cost
    if cyclic_parts(h) is not None:
        r = solve_cycle_shift(g, h, c)
        record["solvers"]["shift"] = None if r is None else r.cost
    record["agree"] = bool(record["solvers"]) and all(v == record["brute"] for v in record["solvers"].values())
    return record


def oracle_suite(seed: int = 42, trials: int = 500, workers: int = 1) -> dict:
    jobs = list(enumerate(np.random.SeedSequence(seed).spawn(trials)))
    records = sorted(_pmap(_oracle_trial, jobs, workers), key=lambda r: r["trial"])
    bad = [r["trial"] for r in records if not r["agree"]]
    comparisons = sum(len(r["solvers"]) for r in records)
    return {
        "suite": "oracle",
        "seed": seed,
        "trials": trials,
        "comparisons": comparisons,
        "by_solver": {
            name: sum(1 for r in records if name in r["solvers"]) for name in ("mincut", "shift")
        },
        "feasible": sum(1 for r in records if r["brute"] is not None),
        "infeasible": sum(1 for r in records if r["brute"] is None),
        "disagreements": bad,
        "digest": _digest(records),
        "passed": not bad and len(records) == trials,
    }


# ---------------------------------------------------------------------------
# constructive orderings


def ordering_suite(seed: int = 42, trials: int = 2000, max_n: int = 5) -> dict:
    """Acyclic connected locally semicomplete digraphs: exhaustive up to ``max_n``, sampled at max_n+1."""
    checked = failures = 0
    for n in range(1, max_n + 1):
        for d in all_oriented(n):
            if _connected(d) and is_acyclic(d) and is_locally_semicomplete(d):
                checked += 1
                failures += not verify_minmax(d, order_acyclic_locally_semicomplete(d))
    rng = np.random.default_rng(np.random.SeedSequence(seed))
    sampled = 0
    attempts = 0
    while sampled < trials and attempts < 200 * trials:
        attempts += 1
        d = random_dag(rng, max_n + 1, float(rng.uniform(0.3, 1.0)))
        if _connected(d) and is_locally_semicomplete(d):
            sampled += 1
            failures += not verify_minmax(d, order_acyclic_locally_semicomplete(d))
    return {
        "suite": "ordering",
        "seed": seed,
        "exhaustive_checked": checked,
        "sampled": sampled,
        "failures": failures,
        "passed": failures == 0 and sampled == trials,
    }


def _exchange_case(t: Digraph) -> dict:
    n = t.n
    res = proper_exchange_procedure(t, check=True)
    pc = res.proper_counts
    bt = bipartite_replication(t)
    pib = find_forbidden_bigraph(bt) is None  # the independent recognizer
    o_free = find_induced_o(t) is None
    return {
        "kind": res.kind,
        "a": res.exchanges <= n * (n - 1) // 2 and all(b > a for a, b in zip(pc, pc[1:])),
        "b": res.minmax_preserved,
        "c": (res.kind == "ordering") == (pib and o_free),
        "fallback": res.fallback_search,
    }


def exchange_suite(max_n: int = 6, workers: int = 1) -> dict:
    graphs = [t for n in range(1, max_n + 1) for t in all_transitive_oriented(n)]
    rows = _pmap(_exchange_case, graphs, workers)
    kinds: dict[str, int] = {}
    for r in rows:
        kinds[r["kind"]] = kinds.get(r["kind"], 0) + 1
    fails = {cond: sum(1 for r in rows if not r[cond]) for cond in ("a", "b", "c")}
    return {
        "suite": "exchange",
        "graphs": len(rows),
        "outcomes": dict(sorted(kinds.items())),
        "failures": fails,
        "fallback_searches": sum(1 for r in rows if r["fallback"]),
        "passed": not any(fails.values()),
    }


# ---------------------------------------------------------------------------
# proper interval bigraphs


def pib_suite(seed: int = 42, trials: int = 500, exhaustive: tuple[int, int] = (4, 4)) -> dict:
    disagreements = 0
    counted = non_pib = 0
    for b in all_bipartite(*exhaustive):
        has_order = find_bipartite_minmax_ordering(b) is not None
        no_obstruction = find_forbidden_bigraph(b) is None
        counted += 1
        non_pib += not has_order
        disagreements += has_order != no_obstruction
    rng = np.random.default_rng(np.random.SeedSequence(seed))
    random_non_pib = 0
    for _ in range(trials):
        b = random_bipartite(rng, int(rng.integers(1, 8)), int(rng.integers(1, 8)), float(rng.uniform(0.15, 0.7)))
        has_order = find_bipartite_minmax_ordering(b) is not None
        random_non_pib += not has_order
        disagreements += has_order != (find_forbidden_bigraph(b) is None)
    return {
        "suite": "pib",
        "seed": seed,
        "exhaustive": counted,
        "exhaustive_non_pib": non_pib,
        "random": trials,
        "random_non_pib": random_non_pib,
        "disagreements": disagreements,
        "passed": disagreements == 0,
    }


# ---------------------------------------------------------------------------
# reductions


def labelled_graphs(n: int) -> Iterable[UGraph]:
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield UGraph(n, frozenset(p for i, p in enumerate(pairs) if mask >> i & 1))


def colour_sorted_graphs(n: int) -> Iterable[UGraph]:
    """3-coloured graphs with colours sorted U < V < W; every coloured graph is isomorphic to one."""
    for a in range(n + 1):
        for b in range(n - a + 1):
            cols = ("U",) * a + ("V",) * b + ("W",) * (n - a - b)
            pairs = [(i, j) for i, j in combinations(range(n), 2) if cols[i] != cols[j]]
            for mask in range(1 << len(pairs)):
                yield UGraph(n, frozenset(p for i, p in enumerate(pairs) if mask >> i & 1), cols)


FIXTURES = {
    "P3": UGraph(3, frozenset({(0, 1), (1, 2)})),
    "C5": UGraph(5, frozenset({(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)})),
}


def _gadget_case(job: tuple[str, int, UGraph]) -> dict:
    target, k, g = job
    r = verify_reduction(reduce_independent_set(g, target, k))
    return {"ok": r.ok, "expected": r.expected, "observed": r.observed, "invariants": r.invariants,
            "n": g.n, "edges": sorted(g.edges)}


def gadget_suite(target: str, k: int, max_n: int = 5, workers: int = 1) -> dict:
    graphs = [g for n in range(1, max_n + 1) for g in labelled_graphs(n)] + list(FIXTURES.values())
    rows = _pmap(_gadget_case, [(target, k, g) for g in graphs], workers)
    bad = [r for r in rows if not r["ok"]]
    return {
        "suite": f"reduction-{target}",
        "k": k,
        "instances": len(rows),
        "failures": len(bad),
        "invariant_failures": {
            name: sum(1 for r in rows if not r["invariants"].get(name, True))
            for name in ("never_both_2", "forced_sequence")
        },
        "first_failure": bad[0] if bad else None,
        "passed": not bad,
    }


def _o_case(job: tuple[str, UGraph]) -> dict:
    variant, x = job
    r = verify_reduction(reduce_i3(x, variant))
    return {"ok": r.ok, "expected": r.expected, "observed": r.observed}


def o_reduction_suite(max_n: int = 5, workers: int = 1) -> dict:
    xs = [x for n in range(1, max_n + 1) for x in colour_sorted_graphs(n)]
    out = {"suite": "reduction-o", "instances_per_variant": len(xs), "failures": {}}
    for variant in ("o1", "o2", "o3", "o4"):
        rows = _pmap(_o_case, [(variant, x) for x in xs], workers)
        out["failures"][variant] = sum(1 for r in rows if not r["ok"])
    out["passed"] = not any(out["failures"].values())
    return out


# ---------------------------------------------------------------------------
# classifier


def classifier_suite(max_n: int = 4) -> dict:
    counts = {"certificates": 0, "witnesses": 0, "semicomplete": 0, "locally_semicomplete": 0}
    fails = {"a": 0, "b": 0, "c": 0, "d": 0, "converse": 0}
    for n in range(1, max_n + 1):
        for h in all_digraphs(n):
            ls, qt = classify(h)
            for v in (ls, qt):
                for comp in v.components:
                    if comp.certificate is not None:
                        counts["certificates"] += 1
                        fails["a"] += not verify_certificate(h, comp.vertices, comp.certificate)
                    if comp.witness is not None:
                        counts["witnesses"] += 1
                        fails["b"] += not verify_witness(h, comp.witness)
            if is_semicomplete(h):
                counts["semicomplete"] += 1
                fails["c"] += ls.outcome != qt.outcome
            if is_locally_semicomplete(h):
                counts["locally_semicomplete"] += 1
                fails["d"] += ls.polynomial != ls_dichotomy_condition(h)
                fails["converse"] += ls.outcome != classify_locally_semicomplete(converse(h)).outcome
    return {"suite": "classifier", "max_n": max_n, **counts, "failures": fails,
            "passed": not any(fails.values())}


SUITES = ("oracle", "ordering", "exchange", "pib", "classifier", "reductions", "all")


def run_suite(name: str, seed: int = 42, trials: int | None = None, workers: int | None = None) -> dict:
    workers = worker_count() if workers is None else workers
    if name == "oracle":
        return oracle_suite(seed, trials or 500, workers)
    if name == "ordering":
        return ordering_suite(seed, trials or 2000)
    if name == "exchange":
        return exchange_suite(workers=workers)
    if name == "pib":
        return pib_suite(seed, trials or 500)
    if name == "classifier":
        return classifier_suite()
    if name == "reductions":
        parts = [gadget_suite("h1", 2, workers=workers), gadget_suite("h1", 3, workers=workers),
                 gadget_suite("h2", 3, workers=workers), o_reduction_suite(workers=workers)]
        return {"suite": "reductions", "parts": parts, "passed": all(p["passed"] for p in parts)}
    if name == "all":
        parts = [run_suite(s, seed, trials, workers) for s in SUITES[:-1]]
        return {"suite": "all", "parts": parts, "passed": all(p["passed"] for p in parts)}
    raise ValueError(f"unknown suite {name!r}")


__all__ = [
    "FAMILIES",
    "SUITES",
    "classifier_suite",
    "exchange_suite",
    "gadget_suite",
    "o_reduction_suite",
    "oracle_suite",
    "ordering_suite",
    "pib_suite",
    "run_suite",
    "worker_count",
]
