"""Command-line entry point: ``chromagraph <subcommand> ...``.

Every subcommand writes one JSON document (CSV only for ``poly --sweep``), embedding
the package version and the fully resolved configuration. Failures exit with code 1
and a JSON object ``{"kind": ..., "detail": ...}`` on stderr.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from dataclasses import asdict, dataclass, field
from pathlib import Path

from . import __version__
from .colouring import Budget, build_colouring_graph, read_edge_list, strip_labels, write_edge_list
from .counting import count_induced_copies
from .errors import ChromagraphError, ParseError
from .graph import (
    Graph,
    enumerate_connected_graphs,
    graph_label,
    named_graph,
    parse_graph,
    serialize_graph,
    to_graph6,
)


class UsageError(ChromagraphError):
    kind = "usage-error"


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


@dataclass
class RunConfig:
    subcommand: str
    inputs: dict = field(default_factory=dict)
    k: int | None = None
    budgets: dict = field(default_factory=dict)
    seed: int | None = None
    sample: dict | None = None
    threads: int = 1
    output: str | None = None
    options: dict = field(default_factory=dict)


def default_threads() -> int:
    env = os.environ.get("CHROMAGRAPH_THREADS")
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


def load_graph(spec: str, fmt: str | None = None) -> Graph:
    p = Path(spec)
    if p.exists():
        text = p.read_text()
        if fmt is None:
            fmt = "graph6" if p.suffix in (".g6", ".graph6") else "edge-list"
        g = parse_graph(text, fmt)
        return Graph(g.n, g.adj, p.stem)
    try:
        return named_graph(spec)
    except ParseError:
        raise ParseError(f"{spec!r} is neither a readable file nor a graph name like P3, K1+K2")


def _emit(text: str, out: str | None):
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def _report(cfg: RunConfig, result: dict) -> str:
    return _dump({"version": __version__, "config": asdict(cfg), "result": result})


def _budget(args) -> Budget:
    return Budget(max_colourings=args.max_colourings, max_partitions=args.max_partitions)


# ---------------------------------------------------------------------------
# subcommands

def cmd_build(args):
    g = load_graph(args.graph, args.format)
    cg = build_colouring_graph(g, args.k, _budget(args))
    out = strip_labels(cg, args.strip_seed) if args.strip_seed is not None else cg.graph
    buf = io.StringIO()
    write_edge_list(out, buf)
    _emit(buf.getvalue(), args.out)
    if args.labels:
        if args.strip_seed is not None:
            raise UsageError("--labels cannot be combined with --strip-seed")
        Path(args.labels).write_text(_dump(cg.labels_json()))
    return 0


def cmd_gcp(args, cfg):
    g = load_graph(args.graph, args.format)
    h = load_graph(args.pattern, args.format)
    cg = build_colouring_graph(g, args.k, _budget(args))
    count = count_induced_copies(cg, h)
    _emit(_report(cfg, {"graph": serialize_graph(g), "pattern": serialize_graph(h),
                        "k": args.k, "count": str(count)}), args.out)
    return 0


def cmd_poly(args, cfg):
    from .gcp import gcp

    g = load_graph(args.graph, args.format)
    h = load_graph(args.pattern, args.format)
    p = gcp(g, h, _budget(args))
    result = {"graph": serialize_graph(g), "pattern": serialize_graph(h), "polynomial": p.to_json()}
    if args.monomial:
        result["monomial"] = [str(c) for c in p.to_monomial()]
    if args.check is not None:
        rows = []
        for k in range(args.check + 1):
            oracle = count_induced_copies(build_colouring_graph(g, k, _budget(args)), h)
            rows.append({"k": k, "polynomial": str(p(k)), "oracle": str(oracle), "equal": p(k) == oracle})
        result["oracle_check"] = {"rows": rows, "pass": all(r["equal"] for r in rows)}
    if args.sweep:
        lo, hi = (int(x) for x in args.sweep.split(":"))
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["k", "value"])
        for k in range(lo, hi + 1):
            w.writerow([k, p(k)])
        if args.csv:
            Path(args.csv).write_text(buf.getvalue())
        else:
            result["sweep_csv"] = buf.getvalue()
    _emit(_report(cfg, result), args.out)
    return 0 if result.get("oracle_check", {}).get("pass", True) else 1


def cmd_reconstruct(args, cfg):
    from .reconstruct import SampleSpec, reconstruct

    ag = read_edge_list(Path(args.input).read_text())
    sample = SampleSpec(None) if args.full else SampleSpec(args.sample)
    rep = reconstruct(ag, args.k, sample, args.seed, workers=args.threads)
    _emit(_report(cfg, rep.to_dict()), args.out)
    return 0


def cmd_pair(args, cfg):
    from .counterexample import verify_pair

    rep = verify_pair(args.m, args.k, seed=args.seed, samples=args.samples, budget=_budget(args))
    _emit(_report(cfg, rep.to_dict()), args.out)
    return 0 if rep.passed else 1


def cmd_catalog(args, cfg):
    graphs = enumerate_connected_graphs(args.max_edges)
    result = [{"label": graph_label(h), "n": h.n, "m": h.m, "graph6": to_graph6(h),
               "edge_list": serialize_graph(h)} for h in graphs]
    _emit(_report(cfg, {"count": len(result), "graphs": result}), args.out)
    return 0


# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="chromagraph", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="subcommand", required=True, parser_class=_Parser)

    def common(sp, seed=False):
        sp.add_argument("--out", help="output path (default: stdout)")
        sp.add_argument("--threads", type=int, default=None,
                        help="worker-pool size hint (default: $CHROMAGRAPH_THREADS or cores)")
        sp.add_argument("--max-colourings", type=int, default=10**7)
        sp.add_argument("--max-partitions", type=int, default=10**7)
        sp.add_argument("--format", choices=["edge-list", "graph6"], default=None,
                        help="format of graph files (default: by extension)")
        if seed:
            sp.add_argument("--seed", type=int, default=0)

    b = sub.add_parser("build", help="write C_k(G) as an edge list")
    b.add_argument("--graph", required=True)
    b.add_argument("--k", type=int, required=True)
    b.add_argument("--labels", help="JSON sidecar: vertex id -> colour sequence")
    b.add_argument("--strip-seed", type=int, default=None, help="relabel randomly, drop labels")
    common(b)

    g = sub.add_parser("gcp", help="oracle count of induced copies of H in C_k(G)")
    g.add_argument("--graph", required=True)
    g.add_argument("--pattern", required=True)
    g.add_argument("--k", type=int, required=True)
    common(g)

    q = sub.add_parser("poly", help="generalised chromatic polynomial of (G, H)")
    q.add_argument("--graph", required=True)
    q.add_argument("--pattern", required=True)
    q.add_argument("--monomial", action="store_true")
    q.add_argument("--check", type=int, metavar="KMAX", help="cross-check against the oracle for k=0..KMAX")
    q.add_argument("--sweep", metavar="LO:HI", help="tabulate values for k in LO..HI")
    q.add_argument("--csv", help="write the sweep table here")
    common(q)

    r = sub.add_parser("reconstruct", help="recover G from an unlabelled C_k(G)")
    r.add_argument("--input", required=True)
    r.add_argument("--k", type=int, required=True)
    grp = r.add_mutually_exclusive_group()
    grp.add_argument("--sample", type=int, default=200)
    grp.add_argument("--full", action="store_true")
    common(r, seed=True)

    pr = sub.add_parser("pair", help="verify the indistinguishable pair for m")
    pr.add_argument("--m", type=int, required=True)
    pr.add_argument("--k", type=int, required=True)
    pr.add_argument("--samples", type=int, default=100, help="sampled copies for the inverse check")
    common(pr, seed=True)

    c = sub.add_parser("catalog", help="connected patterns with at most E edges")
    c.add_argument("--max-edges", type=int, required=True)
    common(c)
    return p


def _config(args) -> RunConfig:
    keys = ("graph", "pattern", "input", "labels")
    opts = {k: v for k, v in vars(args).items()
            if k not in keys + ("subcommand", "k", "seed", "threads", "out", "max_colourings",
                                 "max_partitions", "sample", "full")}
    sample = None
    if args.subcommand == "reconstruct":
        sample = {"size": None if args.full else args.sample}
    return RunConfig(
        subcommand=args.subcommand,
        inputs={k: getattr(args, k) for k in keys if getattr(args, k, None) is not None},
        k=getattr(args, "k", None),
        budgets={"max_colourings": args.max_colourings, "max_partitions": args.max_partitions},
        seed=getattr(args, "seed", None),
        sample=sample,
        threads=args.threads,
        output=args.out,
        options=opts,
    )


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
        if args.threads is None:
            args.threads = default_threads()
        cfg = _config(args)
        if args.subcommand == "build":
            return cmd_build(args)
        return {"gcp": cmd_gcp, "poly": cmd_poly, "reconstruct": cmd_reconstruct,
                "pair": cmd_pair, "catalog": cmd_catalog}[args.subcommand](args, cfg)
    except ChromagraphError as e:
        err = e.to_dict()
    except (OSError, ValueError) as e:
        err = {"kind": type(e).__name__, "detail": str(e)}
    sys.stderr.write(json.dumps(err, sort_keys=True) + "\n")
    return 1


if __name__ == "__main__":
    sys.exit(main())
