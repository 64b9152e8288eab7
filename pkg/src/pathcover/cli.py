"""Batch driver: ingest graph6 corpora or generated families, run a mode per
graph, persist JSON-lines records plus a CSV summary, and exit nonzero on any
bound violation or internal invariant failure.

Results are cached content-addressed under <out>/cache keyed by
(graph6, mode, seed, options), so reruns are byte-identical.
"""

from __future__ import annotations

import argparse
import csv
import hashlib
import json
import math
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from .audit import audit_structure
from .classify import classify
from .discharge import transfer_weights
from .enumeration import enumerate_cubic
from .errors import PathcoverError
from .exact import ham_cycle_exists, ham_path_exists, min_path_cover_exact, parity_lower_bound
from .generators import k4minus_blowup, petersen, petersen_ring, random_cubic
from .graph import Graph, build_graph
from .graph6 import encode_graph6, iter_graph6_lines
from .optimizer import ImproveOptions, improve

MODES = ("exact", "search", "audit", "generate", "certify")

BUILTINS = {
    "petersen": lambda: petersen(),
    "k4": lambda: build_graph(4, [(i, j) for i in range(4) for j in range(i + 1, 4)], True),
    "k33": lambda: build_graph(6, [(i, j) for i in range(3) for j in range(3, 6)], True),
    "prism": lambda: build_graph(
        6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)], True
    ),
}


def _derived_seed(master: int, index: int) -> int:
    return (master * 1_000_003 + index) % (2**31)


def _options_key(args) -> dict:
    return {
        "exact_cap": args.exact_cap,
        "restarts": args.restarts,
        "time_budget": args.time_budget,
    }


def _cache_path(outdir: Path, g6: str, mode: str, seed: int, opts: dict) -> Path:
    blob = json.dumps({"graph6": g6, "mode": mode, "seed": seed, "opts": opts}, sort_keys=True)
    h = hashlib.sha256(blob.encode()).hexdigest()
    return outdir / "cache" / h[:2] / f"{h}.json"


def run_one(g6: str, mode: str, seed: int, opts: dict) -> dict:
    """Process a single graph; returns the JSON record."""
    from .graph6 import decode_graph6

    g = decode_graph6(g6)
    t0 = time.perf_counter()
    record: dict = {
        "graph6": g6,
        "n": g.n,
        "mode": mode,
        "seed": seed,
        "result": {},
        "cover": None,
        "ledger": None,
        "audit": None,
    }
    node_budget = int(opts.get("time_budget", 10.0) * 5_000_000)
    try:
        if mode == "exact":
            res = min_path_cover_exact(g, opts["exact_cap"])
            hp, _ = ham_path_exists(g, node_budget)
            hc, _ = ham_cycle_exists(g, node_budget)
            record["result"] = {"paths": res.count, "ham_path": hp, "ham_cycle": hc}
            cover = res.cover
        else:
            iopts = ImproveOptions(
                seed=seed, exact_cap=opts["exact_cap"], max_restarts=opts["restarts"]
            )
            out = improve(g, iopts)
            cover = out.cover
            bound = math.ceil(g.n / 10)
            record["result"] = {
                "paths": len(cover.paths),
                "bound": bound,
                "bound_exceeded": out.bound_exceeded,
                "used_exact": out.trace.used_exact,
                "moves": out.trace.moves_applied,
            }
            if out.bound_exceeded:
                record["violation"] = True
        record["cover"] = [list(p) for p in cover.paths]
        if g.is_cubic():
            classes = classify(cover)
            ledger = transfer_weights(cover, classes)
            record["ledger"] = ledger.to_json()
            record["audit"] = audit_structure(cover, classes).to_json()
    except PathcoverError as exc:
        record["error"] = f"{type(exc).__name__}: {exc}"
        record["violation"] = True
    record["wall_time"] = round(time.perf_counter() - t0, 6)
    return record


def _run_one_star(payload):
    return run_one(*payload)


def _collect_inputs(args) -> list[str]:
    """Resolve all requested graphs to graph6 strings."""
    graphs: list[str] = []

    def add(g: Graph):
        graphs.append(encode_graph6(g))

    for path in args.inputs or []:
        with open(path) as fh:
            for lineno, raw, g, err in iter_graph6_lines(fh):
                if err is not None:
                    msg = f"{path}:{lineno}: {err}"
                    if args.strict:
                        raise PathcoverError(msg)
                    print(f"warning: skipping {msg}", file=sys.stderr)
                    continue
                graphs.append(encode_graph6(g))
    for name in args.builtin or []:
        add(BUILTINS[name]())
    if args.gadget:
        h, _ = k4minus_blowup(BUILTINS[args.gadget]())
        add(h)
    if args.ring:
        add(petersen_ring(args.ring))
    if args.random:
        n, count = args.random
        for i in range(count):
            add(random_cubic(n, _derived_seed(args.seed, i)))
    if args.enumerate is not None:
        for g in enumerate_cubic(
            args.enumerate, mode=args.enum_mode, biconnected_only=args.biconnected
        ):
            add(g)
    return graphs


def _mode_generate(args, graphs: list[str], outdir: Path) -> int:
    sink = sys.stdout
    close = False
    if args.out:
        outdir.mkdir(parents=True, exist_ok=True)
        sink = open(outdir / "generated.g6", "w")
        close = True
    for g6 in graphs:
        print(g6, file=sink)
    if close:
        sink.close()
        print(f"wrote {len(graphs)} graphs to {outdir / 'generated.g6'}", file=sys.stderr)
    return 0


def _mode_certify(args, outdir: Path) -> int:
    """Blowup certification: parity lower bound vs searched upper bound."""
    if not args.gadget:
        print("certify needs --gadget {k4,k33,petersen}", file=sys.stderr)
        return 2
    base = BUILTINS[args.gadget]()
    h, gmap = k4minus_blowup(base)
    lower = parity_lower_bound(h, gmap)
    out = improve(h, ImproveOptions(seed=args.seed, exact_cap=args.exact_cap,
                                    max_restarts=args.restarts))
    upper = len(out.cover.paths)
    ok = lower <= upper and lower == h.n // 14
    record = {
        "mode": "certify",
        "gadget": args.gadget,
        "graph6": encode_graph6(h),
        "n": h.n,
        "lower_bound": lower,
        "upper_bound": upper,
        "consistent": ok,
        "cover": [list(p) for p in out.cover.paths],
    }
    outdir.mkdir(parents=True, exist_ok=True)
    with open(outdir / "results.jsonl", "a") as fh:
        fh.write(json.dumps(record) + "\n")
    print(
        f"certify {args.gadget}: n={h.n} lower={lower} upper={upper} "
        f"{'OK' if ok else 'INCONSISTENT'}"
    )
    return 0 if ok else 1


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(
        prog="pathcover",
        description="Path covers of cubic graphs: search, exact oracles, audits.",
    )
    ap.add_argument("mode", choices=MODES, nargs="?")
    ap.add_argument("--mode", dest="mode_flag", choices=MODES)
    ap.add_argument("inputs", nargs="*", help="graph6 files")
    ap.add_argument("--input", action="append", dest="inputs_flag", default=[])
    ap.add_argument("--builtin", action="append", choices=sorted(BUILTINS))
    ap.add_argument("--gadget", choices=sorted(BUILTINS))
    ap.add_argument("--ring", type=int, metavar="K")
    ap.add_argument("--random", type=int, nargs=2, metavar=("N", "COUNT"))
    ap.add_argument("--enumerate", type=int, metavar="N")
    ap.add_argument("--enum-mode", choices=("labeled", "reduced"), default="labeled")
    ap.add_argument("--biconnected", action="store_true", help="filter enumeration to 2-connected")
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--jobs", type=int, default=1)
    ap.add_argument("--exact-cap", type=int, default=22, dest="exact_cap")
    ap.add_argument("--restarts", type=int, default=20)
    ap.add_argument("--time-budget", type=float, default=10.0, dest="time_budget")
    ap.add_argument("--strict", action="store_true")
    ap.add_argument("--out", default=None, help="output directory (default pathcover-out; generate mode streams to stdout unless set)")
    args = ap.parse_args(argv)

    mode = args.mode_flag or args.mode
    if mode is None:
        ap.error("a mode is required (positional or --mode)")
    args.inputs = list(args.inputs) + list(args.inputs_flag)
    outdir = Path(args.out) if args.out else Path("pathcover-out")

    if mode == "certify":
        return _mode_certify(args, outdir)

    try:
        graphs = _collect_inputs(args)
    except PathcoverError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1

    if mode == "generate":
        return _mode_generate(args, graphs, outdir)

    outdir.mkdir(parents=True, exist_ok=True)
    opts = _options_key(args)
    jobs: list[tuple[int, str, int]] = []
    records: dict[int, dict] = {}
    for i, g6 in enumerate(graphs):
        seed_i = _derived_seed(args.seed, i)
        cpath = _cache_path(outdir, g6, mode, seed_i, opts)
        if cpath.exists():
            records[i] = json.loads(cpath.read_text())
        else:
            jobs.append((i, g6, seed_i))

    if args.jobs > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            fresh = pool.map(_run_one_star, [(g6, mode, s, opts) for _, g6, s in jobs])
            for (i, g6, s), rec in zip(jobs, fresh):
                records[i] = rec
    else:
        for i, g6, s in jobs:
            records[i] = run_one(g6, mode, s, opts)

    violation = False
    with open(outdir / "results.jsonl", "a") as jfh:
        for i in sorted(records):
            rec = records[i]
            jfh.write(json.dumps(rec) + "\n")
            cpath = _cache_path(outdir, rec["graph6"], mode, rec["seed"], opts)
            if not cpath.exists():
                cpath.parent.mkdir(parents=True, exist_ok=True)
                cpath.write_text(json.dumps(rec))
            if rec.get("violation"):
                violation = True

    with open(outdir / "summary.csv", "w", newline="") as cfh:
        w = csv.writer(cfh)
        w.writerow(["index", "graph6", "n", "mode", "paths", "bound", "ok", "wall_time", "seed"])
        for i in sorted(records):
            rec = records[i]
            res = rec.get("result", {})
            w.writerow(
                [
                    i,
                    rec["graph6"],
                    rec["n"],
                    rec["mode"],
                    res.get("paths", ""),
                    res.get("bound", ""),
                    not rec.get("violation", False),
                    rec.get("wall_time", ""),
                    rec["seed"],
                ]
            )

    done = len(records)
    print(f"{mode}: {done} graphs, {'violations found' if violation else 'all ok'}", file=sys.stderr)
    return 1 if violation else 0


if __name__ == "__main__":
    sys.exit(main())
