"""Command-line front end.

Subcommands mirror the library modules: generate named families, run
embedding and tiling searches on .dg files, produce lattice and vertex
statistic reports, drive the enumeration/sampling probes, and replay the
built-in claim checklist.

Exit codes: 0 success / found / verified, 1 not found / refuted,
2 usage or I/O error, 3 search gave up on its node budget.  With --json
a single JSON document (sorted keys) goes to stdout; logs go to stderr.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys

from . import analysis, embed, generators, lattice, search, tiling, verify
from .core import (
    read_graph,
    read_partition,
    serialize,
    serialize_partition,
    write_graph,
    write_partition,
)
from .errors import BudgetExceededError, ParseError

log = logging.getLogger("oriograph")


def _threads(args):
    env = os.environ.get("ORIOGRAPH_THREADS")
    if env is not None:
        return max(1, int(env))
    if args.threads is not None:
        return max(1, args.threads)
    return os.cpu_count() or 1


def _emit(args, doc, human):
    if args.json:
        print(json.dumps(doc, sort_keys=True, indent=2))
    else:
        human()


def _print_table(rows, header):
    widths = [max(len(str(r[i])) for r in [header, *rows]) for i in range(len(header))]
    for row in [header, *rows]:
        print("  ".join(str(c).ljust(w) for c, w in zip(row, widths)))


# generate

GENERATE_USAGE = {
    "transitive": "n",
    "cycle-power": "k ell",
    "d-abc": "a b c",
    "f-r": "r",
    "s": "",
    "rotational": "n r1,r2,...",
    "blow-up": "base.dg t",
    "t-sk": "s k",
    "c3-barrier": "n",
}


def _build_family(family, params):
    def want(k):
        if len(params) != k:
            raise ValueError(
                f"family {family!r} takes parameters: {GENERATE_USAGE[family] or '(none)'}"
            )

    if family == "transitive":
        want(1)
        return generators.transitive(int(params[0])), None
    if family == "cycle-power":
        want(2)
        return generators.cycle_power(int(params[0]), int(params[1])), None
    if family == "d-abc":
        want(3)
        return generators.d_abc(int(params[0]), int(params[1]), int(params[2]))
    if family == "f-r":
        want(1)
        return generators.f_r(int(params[0])), None
    if family == "s":
        want(0)
        return generators.graph_s(), None
    if family == "rotational":
        want(2)
        residues = [int(x) for x in params[1].split(",") if x]
        return generators.rotational(int(params[0]), residues), None
    if family == "blow-up":
        want(2)
        return generators.blow_up(read_graph(params[0]), int(params[1]))
    if family == "t-sk":
        want(2)
        w = generators.t_sk(int(params[0]), int(params[1]))
        return w.graph, w.partition
    if family == "c3-barrier":
        want(1)
        return generators.c3_barrier(int(params[0]))
    raise ValueError(f"unknown family {family!r}")


def cmd_generate(args):
    graph, partition = _build_family(args.family, args.params)
    if args.output:
        write_graph(args.output, graph)
        doc = {"written": args.output}
        if partition is not None:
            sidecar = os.path.splitext(args.output)[0] + ".parts"
            write_partition(sidecar, partition)
            doc["parts"] = sidecar
        log.info("wrote %s (n=%d, m=%d)", args.output, graph.n, graph.edge_count)
        _emit(args, doc, lambda: None)
        return 0
    doc = {"dg": serialize(graph)}
    if partition is not None:
        doc["parts"] = serialize_partition(partition)
    _emit(args, doc, lambda: print(doc["dg"], end=""))
    return 0


# embed

def cmd_embed(args):
    pattern = read_graph(args.pattern)
    host = read_graph(args.host)
    partition = read_partition(args.parts) if args.parts else None
    if args.vectors:
        if partition is None:
            raise ValueError("--vectors needs --parts")
        vecs = sorted(
            embed.enumerate_index_vectors(pattern, host, partition, budget=args.budget)
        )
        doc = {"index_vectors": [list(v) for v in vecs]}
        _emit(args, doc, lambda: [print(",".join(map(str, v))) for v in vecs])
        return 0 if vecs else 1
    if args.count:
        n = embed.count_embeddings(pattern, host, budget=args.budget)
        _emit(args, {"count": n}, lambda: print(n))
        return 0 if n else 1
    emb = embed.find_embedding(pattern, host, budget=args.budget)
    if emb is None:
        _emit(args, {"found": False}, lambda: print("not found"))
        return 1
    doc = {"found": True, "mapping": list(emb.mapping)}
    if partition is not None:
        doc["index_vector"] = list(emb.index_vector(partition))
    _emit(args, doc, lambda: print(" ".join(map(str, emb.mapping))))
    return 0


# tile

def cmd_tile(args):
    pattern = read_graph(args.pattern)
    host = read_graph(args.host)
    partition = read_partition(args.parts) if args.parts else None
    result = tiling.perfect_tiling(pattern, host, partition=partition, budget=args.budget)
    doc = {"mode": result.mode}
    if result.tiling is not None:
        doc["copies"] = [sorted(c) for c in result.tiling.copies]
    if result.note:
        doc["note"] = result.note
    if args.certificate:
        with open(args.certificate, "w") as fh:
            json.dump(doc, fh, sort_keys=True, indent=2)
            fh.write("\n")
        log.info("certificate written to %s", args.certificate)

    def human():
        print(result.mode)
        if result.tiling is not None:
            for copy in doc["copies"]:
                print(" ".join(map(str, copy)))

    _emit(args, doc, human)
    if result.mode == tiling.FOUND:
        return 0
    if result.mode == tiling.INCONCLUSIVE:
        return 3
    return 1


# lattice

def cmd_lattice(args):
    host = read_graph(args.host)
    partition = read_partition(args.parts)
    pattern = read_graph(args.pattern)
    hyper = tiling.copy_hypergraph(pattern, host, budget=args.budget)
    report = lattice.edge_vectors(hyper, partition, threshold=args.threshold)
    transferrals = lattice.find_2_transferrals(report)
    modulus = args.mod if args.mod else pattern.n
    lat = lattice.residue_lattice(report.robust, modulus, partition.d)
    doc = {
        "copies": len(hyper.edges),
        "vectors": {
            ",".join(map(str, v)): c for v, c in sorted(report.counts)
        },
        "threshold": args.threshold,
        "implied_mu_hat": args.threshold / host.n ** pattern.n,
        "robust_vectors": sorted(map(list, report.robust)),
        "two_transferrals": [
            {"i": i, "j": j, "from": list(a), "to": list(b)}
            for i, j, a, b in transferrals
        ],
        "modulus": modulus,
        "lattice_size": len(lat),
    }
    verdict = None
    if args.target:
        target = tuple(int(x) for x in args.target.split(","))
        if len(target) != partition.d:
            raise ValueError(f"--target needs {partition.d} comma-separated entries")
        verdict = lat.contains(tuple(t % modulus for t in target))
        doc["target"] = list(target)
        doc["target_in_lattice"] = verdict

    def human():
        print(f"copies: {doc['copies']}")
        rows = [(k, v) for k, v in doc["vectors"].items()]
        _print_table(rows, ("vector", "count"))
        print(f"robust at threshold {args.threshold}: {doc['robust_vectors']}")
        print(f"2-transferrals: {len(transferrals)}")
        print(f"residue lattice mod {modulus}: {doc['lattice_size']} classes")
        if verdict is not None:
            word = "inside" if verdict else "OUTSIDE"
            print(f"target {doc['target']} is {word} the lattice")

    _emit(args, doc, human)
    if verdict is False:
        return 1
    return 0


# analyze

def cmd_analyze(args):
    host = read_graph(args.host)
    partition = read_partition(args.parts) if args.parts else None
    if args.stats == "extremal":
        gamma = args.gamma if args.gamma is not None else 0.05
        if partition is None:
            partition = analysis.find_extremal_partition(host, gamma, seed=args.seed)
        if partition is None:
            doc = {"gamma": gamma, "extremal": False, "note": "no partition found by local search"}
            _emit(args, doc, lambda: print(f"extremal at gamma={gamma}: False (search found no partition)"))
            return 1
        verdict = analysis.extremal_check(host, partition, gamma)
        doc = {
            "gamma": gamma,
            "extremal": verdict.ok,
            "sizes": list(verdict.sizes),
            "reverse_counts": list(verdict.reverse_counts),
            "parts": serialize_partition(partition),
        }

        def human():
            print(f"extremal at gamma={gamma}: {verdict.ok}")
            print(f"part sizes {list(verdict.sizes)}")
            print(f"reverse class counts {list(verdict.reverse_counts)}")

        _emit(args, doc, human)
        return 0 if verdict.ok else 1
    cls = host.classify()
    lo, hi = analysis.cyclic_edge_window(host)
    floor = analysis.d_copies_floor(host)
    counts = analysis.d_copy_counts(host)
    rows = []
    for v in range(host.n):
        rows.append(
            (
                v,
                host.out_degree(v),
                host.in_degree(v),
                analysis.cyclic_edge_stat(host, v),
                counts[v],
            )
        )
    doc = {
        "n": host.n,
        "edges": host.edge_count,
        "tournament": cls.is_tournament,
        "semi_regular": cls.is_semi_regular,
        "min_semi_degree": cls.min_semi_degree,
        "cyclic_edge_window": [float(lo), float(hi)],
        "d_copies_floor": float(floor),
        "vertices": [
            {
                "v": v,
                "out": o,
                "in": i,
                "cyclic_edges": ce,
                "d_copies": dc,
            }
            for v, o, i, ce, dc in rows
        ],
    }

    def human():
        kind = "tournament" if cls.is_tournament else "oriented graph"
        print(f"{kind} on {host.n} vertices, {host.edge_count} edges")
        print(f"min semi-degree {cls.min_semi_degree}, semi-regular: {cls.is_semi_regular}")
        print(f"cyclic edge window [{float(lo):g}, {float(hi):g}], copy floor {float(floor):g}")
        _print_table(rows, ("v", "out", "in", "cyclic", "copies"))

    _emit(args, doc, human)
    return 0


# search

def _parse_sizes(text):
    return [int(x) for x in text.split(",") if x]


def cmd_search(args):
    if args.search_cmd == "enumerate-rt":
        reps = search.enumerate_regular_tournaments(args.n)
        doc = {
            "n": args.n,
            "classes": len(reps),
            "graphs": [serialize(g) for g in reps],
        }
        if args.out_dir:
            os.makedirs(args.out_dir, exist_ok=True)
            for i, g in enumerate(reps):
                write_graph(os.path.join(args.out_dir, f"rt{args.n}-{i}.dg"), g)
            doc["written"] = args.out_dir
        _emit(
            args,
            doc,
            lambda: print(f"{len(reps)} isomorphism classes of regular tournaments on {args.n} vertices"),
        )
        return 0
    if args.search_cmd == "probe":
        pattern = read_graph(args.pattern)
        report = search.turanability_probe(
            pattern,
            sizes=_parse_sizes(args.n),
            mode=args.mode,
            samples=args.samples,
            seed=args.seed,
            budget=args.budget,
        )

        def human():
            for entry in report["per_n"]:
                print(
                    f"n={entry['n']}: {entry['containing']}/{entry['population']} hosts contain the pattern"
                )
            print(report["note"])

        _emit(args, report, human)
        if any(entry["misses"] for entry in report["per_n"]):
            return 1
        if any("inconclusive" in entry for entry in report["per_n"]):
            return 3
        return 0
    pattern = read_graph(args.pattern)
    report = search.tileability_probe(
        pattern,
        sizes=_parse_sizes(args.n),
        samples=args.samples,
        seed=args.seed,
        budget=args.budget,
    )

    def human():
        for entry in report["per_n"]:
            if "skipped" in entry:
                print(f"n={entry['n']}: skipped ({entry['skipped']})")
            else:
                print(f"n={entry['n']}: {entry['tiled']}/{entry['samples']} samples tiled")
        print(report["note"])

    _emit(args, report, human)
    untiled = any(
        "skipped" not in e and e["tiled"] < e["samples"] for e in report["per_n"]
    )
    return 1 if untiled else 0


# verify-paper

def cmd_verify_paper(args):
    report = verify.run_checks(args.profile)

    def human():
        for check in report["checks"]:
            status = check["status"]
            if status == verify.INCONCLUSIVE:
                status = "INCONCLUSIVE(budget)"
            print(f"{status:20s} {check['name']}")
        s = report["summary"]
        print(f"{s['pass']} pass, {s['fail']} fail, {s['inconclusive']} inconclusive")

    _emit(args, report, human)
    return 0 if report["summary"]["fail"] == 0 else 1


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--threads", type=int, default=None, help="worker threads (env ORIOGRAPH_THREADS overrides)")
    common.add_argument("--seed", default="0", help="seed for randomized subcommands")
    common.add_argument("--json", action="store_true", help="emit a single JSON document on stdout")
    common.add_argument("--budget", type=int, default=None, help="search node budget")

    parser = argparse.ArgumentParser(
        prog="oriograph",
        description="oriented-graph construction, embedding, tiling and lattice toolkit",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", parents=[common], help="write a named family to a .dg file")
    p.add_argument("family", choices=sorted(GENERATE_USAGE))
    p.add_argument("params", nargs="*", help="family parameters, see docs")
    p.add_argument("-o", "--output", help="output .dg path (default stdout)")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("embed", parents=[common], help="search for one pattern copy in a host")
    p.add_argument("--pattern", required=True)
    p.add_argument("--host", required=True)
    p.add_argument("--parts", help="host partition sidecar")
    group = p.add_mutually_exclusive_group()
    group.add_argument("--count", action="store_true", help="count embeddings instead")
    group.add_argument("--vectors", action="store_true", help="list index vectors of all copies")
    p.set_defaults(func=cmd_embed)

    p = sub.add_parser("tile", parents=[common], help="search for a perfect tiling")
    p.add_argument("--pattern", required=True)
    p.add_argument("--host", required=True)
    p.add_argument("--parts", help="host partition sidecar, enables the lattice pre-check")
    p.add_argument("--certificate", help="write the result JSON here as well")
    p.set_defaults(func=cmd_tile)

    p = sub.add_parser("lattice", parents=[common], help="edge-vector and residue-lattice report")
    p.add_argument("--host", required=True)
    p.add_argument("--parts", required=True)
    p.add_argument("--pattern", required=True)
    p.add_argument("--mod", type=int, default=None, help="lattice modulus (default pattern order)")
    p.add_argument("--target", help="comma-separated index vector to test for membership")
    p.add_argument("--threshold", type=int, default=1, help="robustness count threshold")
    p.set_defaults(func=cmd_lattice)

    p = sub.add_parser("analyze", parents=[common], help="vertex statistics or extremal structure")
    p.add_argument("--host", required=True)
    p.add_argument("--parts", help="candidate partition for the extremal check")
    p.add_argument("--gamma", type=float, default=None)
    p.add_argument("--stats", choices=["vertex", "extremal"], default="vertex")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("search", parents=[common], help="enumeration and sampling probes")
    ssub = p.add_subparsers(dest="search_cmd", required=True)
    q = ssub.add_parser("enumerate-rt", parents=[common], help="regular tournaments up to isomorphism")
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--out-dir", help="also write each class as a .dg file")
    q.set_defaults(func=cmd_search)
    q = ssub.add_parser("probe", parents=[common], help="pattern containment over tournament corpora")
    q.add_argument("--pattern", required=True)
    q.add_argument("--mode", choices=["exhaustive", "sample"], default="exhaustive")
    q.add_argument("--n", required=True, help="comma-separated host orders")
    q.add_argument("--samples", type=int, default=20)
    q.set_defaults(func=cmd_search)
    q = ssub.add_parser("tile-probe", parents=[common], help="perfect-tiling evidence over samples")
    q.add_argument("--pattern", required=True)
    q.add_argument("--n", required=True, help="comma-separated host orders")
    q.add_argument("--samples", type=int, default=20)
    q.set_defaults(func=cmd_search)

    p = sub.add_parser("verify-paper", parents=[common], help="replay the built-in claim checklist")
    p.add_argument("--profile", choices=sorted(verify.PROFILES), default="full")
    p.set_defaults(func=cmd_verify_paper)

    return parser


def main(argv=None):
    logging.basicConfig(stream=sys.stderr, level=logging.INFO, format="%(message)s")
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    log.debug("threads=%d", _threads(args))
    try:
        return args.func(args)
    except BudgetExceededError as exc:
        log.error("search budget of %s nodes exhausted", exc.budget)
        return 3
    except ParseError as exc:
        log.error("%s", exc)
        return 2
    except (OSError, ValueError) as exc:
        log.error("%s", exc)
        return 2


def entry():
    sys.exit(main())


if __name__ == "__main__":
    entry()
