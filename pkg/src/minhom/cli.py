"""Command-line interface: ``minhom <subcommand> ...``.

Every subcommand prints one JSON report on stdout. Exit codes: 0 success
(an NP-hard verdict is a successful answer), 1 usage error, 2 malformed or
unsuitable input, 3 verification failure.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
import time
from pathlib import Path
from typing import Sequence

from . import io as fmt
from .classifier import classify
from .digraph import GraphError, is_acyclic, weak_components
from .ordering import PreconditionError, find_minmax_ordering, proper_exchange_procedure
from .pibigraph import is_proper_interval_bigraph
from .recognizers import is_locally_semicomplete, is_transitive_oriented, recognize_all
from .reductions import reduce_i3, reduce_independent_set
from .solver import ALGORITHMS, IncompatibleAlgorithm, solve
from .suites import SUITES, run_suite, worker_count

SCHEMA = "minhom-report/1"
EXIT_OK, EXIT_USAGE, EXIT_INPUT, EXIT_VERIFY = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # argparse would exit with 2, which means bad input here
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _read(path: str) -> tuple[str, dict]:
    try:
        data = Path(path).read_bytes()
    except OSError as exc:
        raise fmt.FormatError(f"cannot read {path}: {exc.strerror}") from exc
    try:
        text = data.decode("utf-8")
    except UnicodeDecodeError as exc:
        raise fmt.FormatError(f"{path} is not UTF-8") from exc
    return text, {"path": path, "sha256": hashlib.sha256(data).hexdigest()}


# ---------------------------------------------------------------------------
# subcommands; each returns (payload, inputs, exit code)


def cmd_classify(args):
    text, meta = _read(args.input)
    h = fmt.parse_digraph(text)
    verdicts = classify(h, args.cls)
    return {"verdicts": [v.to_json() for v in verdicts]}, [meta], EXIT_OK


def cmd_recognize(args):
    text, meta = _read(args.input)
    return recognize_all(fmt.parse_digraph(text)), [meta], EXIT_OK


def cmd_order(args):
    text, meta = _read(args.input)
    h = fmt.parse_digraph(text)
    if is_transitive_oriented(h):
        res = proper_exchange_procedure(h)
        payload = {"method": "exchange", **res.to_json(), "exchanges": res.exchanges}
        return payload, [meta], EXIT_OK
    if is_acyclic(h) and is_locally_semicomplete(h):
        o = find_minmax_ordering(h)
        return {"method": "strong-components", **o.to_json(), "components": len(weak_components(h))}, [meta], EXIT_OK
    raise PreconditionError("order needs a transitive oriented or an acyclic locally semicomplete digraph")


def cmd_pib(args):
    text, meta = _read(args.input)
    ok, cert = is_proper_interval_bigraph(fmt.parse_bipartite(text))
    key = "ordering" if ok else "obstruction"
    return {"pib": ok, "certificate": {key: cert.to_json()}}, [meta], EXIT_OK


def cmd_solve(args):
    gt, gm = _read(args.g)
    ht, hm = _read(args.H)
    ct, cm = _read(args.c)
    g, h = fmt.parse_digraph(gt), fmt.parse_digraph(ht)
    costs = fmt.parse_costs(ct, rows=g.n, cols=h.n)
    result = solve(g, h, costs, args.algorithm)
    return result.to_json(), [gm, hm, cm], EXIT_OK


def cmd_reduce(args):
    text, meta = _read(args.graph)
    x = fmt.parse_ugraph(text)
    gadget = args.gadget.lower()
    if gadget in ("h1", "h2"):
        if args.k is None:
            raise UsageError("--k is required for h1/h2 gadgets")
        inst = reduce_independent_set(x, gadget, args.k)
    else:
        inst = reduce_i3(x, gadget)
    manifest = inst.manifest()
    if args.emit:
        out = Path(args.emit)
        out.mkdir(parents=True, exist_ok=True)
        files = {
            "G.dg": fmt.format_digraph(inst.g),
            "H.dg": fmt.format_digraph(inst.h),
            "costs.csv": fmt.format_costs(inst.costs),
        }
        for name, body in files.items():
            (out / name).write_text(body, encoding="utf-8")
        manifest["files"] = sorted(files)
        (out / "manifest.json").write_text(json.dumps(manifest, indent=2, sort_keys=True) + "\n", encoding="utf-8")
    return manifest, [meta], EXIT_OK


def cmd_verify(args):
    report = run_suite(args.suite, seed=args.seed, trials=args.trials, workers=worker_count())
    return report, [], EXIT_OK if report["passed"] else EXIT_VERIFY


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="minhom", description="Minimum cost homomorphism dichotomy toolkit.")
    p.add_argument("--timing", action="store_true", help="add wall time to the report (breaks byte-identity)")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(sp):
        sp.add_argument("--json", action="store_true", default=True, help="JSON output (the only format)")
        sp.add_argument("--timing", action="store_true", default=argparse.SUPPRESS)

    sp = sub.add_parser("classify", help="polynomial / NP-hard verdict for a target digraph")
    sp.add_argument("--input", "-i", required=True)
    sp.add_argument("--class", dest="cls", choices=("ls", "qt", "auto"), default="auto")
    common(sp)
    sp.set_defaults(func=cmd_classify)

    sp = sub.add_parser("recognize", help="class membership of a digraph")
    sp.add_argument("--input", "-i", required=True)
    common(sp)
    sp.set_defaults(func=cmd_recognize)

    sp = sub.add_parser("order", help="constructive Min-Max ordering or obstruction")
    sp.add_argument("--input", "-i", required=True)
    common(sp)
    sp.set_defaults(func=cmd_order)

    sp = sub.add_parser("pib", help="proper interval bigraph test with certificate")
    sp.add_argument("--input", "-i", required=True)
    common(sp)
    sp.set_defaults(func=cmd_pib)

    sp = sub.add_parser("solve", help="minimum cost homomorphism G -> H")
    sp.add_argument("-g", required=True, help="input digraph G")
    sp.add_argument("-H", required=True, help="target digraph H")
    sp.add_argument("-c", required=True, help="cost CSV, one row per G vertex")
    sp.add_argument("--algorithm", choices=ALGORITHMS, default="auto")
    common(sp)
    sp.set_defaults(func=cmd_solve)

    sp = sub.add_parser("reduce", help="build an independent-set reduction instance")
    sp.add_argument("--gadget", required=True, choices=("h1", "h2", "o1", "o2", "o3", "o4"))
    sp.add_argument("--k", type=int)
    sp.add_argument("--graph", required=True, help="undirected graph file")
    sp.add_argument("--emit", help="directory for G.dg, H.dg, costs.csv and manifest.json")
    common(sp)
    sp.set_defaults(func=cmd_reduce)

    sp = sub.add_parser("verify", help="run a verification suite")
    sp.add_argument("--suite", choices=SUITES, default="oracle")
    sp.add_argument("--seed", type=int, default=42)
    sp.add_argument("--trials", type=int)
    common(sp)
    sp.set_defaults(func=cmd_verify)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    start = time.perf_counter()
    try:
        payload, inputs, code = args.func(args)
    except UsageError as exc:
        print(f"minhom: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (fmt.FormatError, GraphError, PreconditionError, IncompatibleAlgorithm, ValueError) as exc:
        print(f"minhom: {exc}", file=sys.stderr)
        return EXIT_INPUT
    report = {"schema": SCHEMA, "subcommand": args.command, "inputs": inputs, "result": payload}
    if getattr(args, "timing", False):
        report["wall_time_s"] = round(time.perf_counter() - start, 6)
    if args.command == "verify":
        report["seed"] = args.seed
    sys.stdout.write(json.dumps(report, sort_keys=True, indent=2) + "\n")
    return code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
