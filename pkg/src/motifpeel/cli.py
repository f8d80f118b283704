"""Command-line entry point.

Subcommands: cluster, generate, oracle, evaluate, bounds.  Exit codes:
0 success, 1 input/config error, 2 no motif instance, 3 guarantee violation.

Outputs written to files (and stdout) are byte-identical for a fixed
config/seed/thread count; wall-clock timings are therefore reported on
stderr and stored as null in report files.  The --threads flag is accepted
for interface stability; all reductions are fixed-order, so results do not
depend on it.
"""

from __future__ import annotations

import argparse
import sys
import time
from fractions import Fraction

from .bounds import diagnostic_rows, psmc_plus
from .errors import (
    EdgeListParseError,
    GeneratorConfigError,
    MotifPeelError,
    NoAdmissiblePrefixError,
    NoMotifError,
    OracleTooLargeError,
    UndefinedResultError,
)
from .generators import GeneratorConfig, generate, write_ground_truth
from .graph import Graph, ingest_edge_list, write_edge_list
from .metrics import (
    evaluate_cluster,
    fmt12,
    metrics_report,
    read_communities,
    report_csv_header,
    report_to_csv_row,
    report_to_json,
)
from .oracle import certify_ratio
from .peeling import psmc, trace_to_csv

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_NO_MOTIF = 2
EXIT_VIOLATION = 3


def _load_graph(path: str, declared_n: int | None = None) -> Graph:
    with open(path, "r", encoding="utf-8") as fh:
        return ingest_edge_list(fh, declared_n=declared_n)


def _peak_rss_kb() -> int:
    import resource

    return resource.getrusage(resource.RUSAGE_SELF).ru_maxrss


def _write_report(report: dict, out: str | None, fmt: str) -> None:
    if out is None:
        return
    with open(out, "w", encoding="utf-8") as fh:
        if fmt == "json":
            fh.write(report_to_json(report))
        else:
            fh.write(report_csv_header())
            fh.write(report_to_csv_row(report))


def cmd_cluster(args: argparse.Namespace) -> int:
    graph = _load_graph(args.graph, args.vertices)
    t0 = time.perf_counter()
    if args.method == "psmc":
        result = psmc(graph, args.k)
    else:
        result = psmc_plus(graph, args.k)
    wall_ms = (time.perf_counter() - t0) * 1000.0
    truth = None
    if args.truth:
        with open(args.truth, "r", encoding="utf-8") as fh:
            truth = read_communities(fh)
    report = metrics_report(
        graph, args.k, result, ground_truth=truth, dataset=args.graph, wall_ms=None
    )
    members = report["cluster"]
    print(" ".join(str(v) for v in members))
    print(f"mc = {report['mc_num']}/{report['mc_den']} = {report['mc']:.12g}")
    if report.get("f1") is not None:
        print(f"f1 = {report['f1']:.12g}")
    print(f"size = {report['size']}")
    # timing and memory vary between runs, so they stay off the output files
    print(f"wall_ms = {fmt12(wall_ms):.12g}", file=sys.stderr)
    print(f"peak_rss_kb = {_peak_rss_kb()}", file=sys.stderr)
    _write_report(report, args.out, args.format)
    if args.trace:
        with open(args.trace, "w", encoding="utf-8") as fh:
            trace_to_csv(result.trace, fh, graph)
    return EXIT_OK


def cmd_generate(args: argparse.Namespace) -> int:
    config = GeneratorConfig(
        model=args.model,
        n=args.n,
        seed=args.seed,
        p=args.p,
        attachments=args.attachments,
        triangle_prob=args.triangle_prob,
        communities=args.communities,
        p_in=args.p_in,
        p_out=args.p_out,
    )
    produced = generate(config)
    with open(args.out, "w", encoding="utf-8") as fh:
        write_edge_list(produced.graph, fh)
    print(f"n = {produced.graph.n}")
    print(f"m = {produced.graph.m}")
    if produced.communities is not None and args.truth_out:
        with open(args.truth_out, "w", encoding="utf-8") as fh:
            write_ground_truth(produced.communities, fh)
        print(f"communities = {len(produced.communities)}")
    return EXIT_OK


def _certify_line(tag: str, cert) -> str:
    return (
        f"{tag} phi_hat={cert.phi_hat} phi_star={cert.phi_star} "
        f"bound={cert.bound} holds={'yes' if cert.holds else 'NO'}"
    )


def cmd_oracle(args: argparse.Namespace) -> int:
    if args.limit > 20:
        print("error: --limit cannot exceed 20", file=sys.stderr)
        return EXIT_INPUT
    if args.batch:
        return _oracle_batch(args)
    graph = _load_graph(args.graph)
    if graph.n > args.limit:
        raise OracleTooLargeError(f"n={graph.n} exceeds --limit {args.limit}")
    cert = certify_ratio(graph, args.k)
    print(_certify_line(args.graph, cert))
    if args.out:
        record = {
            "dataset": args.graph,
            "k": args.k,
            "phi_hat_num": cert.phi_hat.numerator,
            "phi_hat_den": cert.phi_hat.denominator,
            "phi_star_num": cert.phi_star.numerator,
            "phi_star_den": cert.phi_star.denominator,
            "bound": fmt12(float(cert.bound)),
            "holds": cert.holds,
            "retention_ok": cert.retention_ok,
        }
        import json

        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(json.dumps(record, indent=2) + "\n")
    return EXIT_OK if cert.holds else EXIT_VIOLATION


def _oracle_batch(args: argparse.Namespace) -> int:
    probs = (0.2, 0.4, 0.6)
    produced = 0
    violations = 0
    attempt = 0
    while produced < args.batch:
        n = 6 + attempt % 9  # cycle sizes 6..14
        p = probs[attempt % len(probs)]
        config = GeneratorConfig(model="er", n=n, p=p, seed=args.seed + attempt)
        attempt += 1
        graph = generate(config).graph
        try:
            cert = certify_ratio(graph, args.k)
        except NoMotifError:
            continue
        produced += 1
        if not cert.holds:
            violations += 1
            print(_certify_line(f"instance {produced}", cert))
    print(f"holds {produced - violations}/{produced}")
    return EXIT_OK if violations == 0 else EXIT_VIOLATION


def cmd_evaluate(args: argparse.Namespace) -> int:
    graph = _load_graph(args.graph)
    with open(args.cluster, "r", encoding="utf-8") as fh:
        members = [int(tok) for tok in fh.read().split()]
    truth = None
    if args.truth:
        with open(args.truth, "r", encoding="utf-8") as fh:
            truth = read_communities(fh)
    report = evaluate_cluster(graph, args.k, members, truth, dataset=args.graph)
    print(f"mc = {report['mc_num']}/{report['mc_den']} = {report['mc']:.12g}")
    if report.get("f1") is not None:
        print(f"f1 = {report['f1']:.12g}")
    print(f"size = {report['size']}")
    _write_report(report, args.out, args.format)
    return EXIT_OK


def cmd_bounds(args: argparse.Namespace) -> int:
    graph = _load_graph(args.graph)
    rows = diagnostic_rows(graph, args.k)
    lines = ["vertex,exact,lower,upper,estimate\n"]
    lines += [f"{v},{e},{lo},{up},{est}\n" for v, e, lo, up, est in rows]
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.writelines(lines)
    else:
        sys.stdout.writelines(lines)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="motifpeel",
        description="Motif-conductance clustering by greedy peeling",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, need_graph=True):
        if need_graph:
            p.add_argument("--graph", required=True, help="edge-list file")
        p.add_argument("--k", type=int, default=3, help="clique order (>= 2)")
        p.add_argument("--threads", type=int, default=1, help="worker count (results are thread-count independent)")

    p_cluster = sub.add_parser("cluster", help="run a peeling method on a graph")
    add_common(p_cluster)
    p_cluster.add_argument("--method", choices=("psmc", "psmc-plus"), required=True)
    p_cluster.add_argument("--out", help="report file")
    p_cluster.add_argument("--format", choices=("json", "csv"), default="json")
    p_cluster.add_argument("--truth", help="ground-truth community file")
    p_cluster.add_argument("--trace", help="write the peel trace CSV here")
    p_cluster.add_argument("--vertices", type=int, help="declared vertex count (dense ids)")
    p_cluster.set_defaults(func=cmd_cluster)

    p_gen = sub.add_parser("generate", help="write a synthetic graph")
    p_gen.add_argument("--model", choices=("er", "ba", "plc", "planted"), required=True)
    p_gen.add_argument("--n", type=int, required=True)
    p_gen.add_argument("--seed", type=int, required=True)
    p_gen.add_argument("--p", type=float, help="ER edge probability")
    p_gen.add_argument("--attachments", type=int, help="BA/PLC links per vertex")
    p_gen.add_argument("--tri-prob", dest="triangle_prob", type=float, help="PLC closure probability")
    p_gen.add_argument("--communities", type=int, help="planted block count")
    p_gen.add_argument("--p-in", dest="p_in", type=float)
    p_gen.add_argument("--p-out", dest="p_out", type=float)
    p_gen.add_argument("--out", required=True)
    p_gen.add_argument("--truth-out", dest="truth_out", help="ground-truth file (planted)")
    p_gen.set_defaults(func=cmd_generate)

    p_oracle = sub.add_parser("oracle", help="certify the approximation bound")
    p_oracle.add_argument("--graph", help="edge-list file (single-instance mode)")
    p_oracle.add_argument("--k", type=int, default=3)
    p_oracle.add_argument("--threads", type=int, default=1)
    p_oracle.add_argument("--batch", type=int, help="certify this many random instances")
    p_oracle.add_argument("--seed", type=int, default=0)
    p_oracle.add_argument("--limit", type=int, default=20, help="oracle vertex limit (max 20)")
    p_oracle.add_argument("--out", help="JSON record (single-instance mode)")
    p_oracle.set_defaults(func=cmd_oracle)

    p_eval = sub.add_parser("evaluate", help="score an externally given cluster")
    add_common(p_eval)
    p_eval.add_argument("--cluster", required=True, help="file of original vertex ids")
    p_eval.add_argument("--truth", help="ground-truth community file")
    p_eval.add_argument("--out")
    p_eval.add_argument("--format", choices=("json", "csv"), default="json")
    p_eval.set_defaults(func=cmd_evaluate)

    p_bounds = sub.add_parser("bounds", help="per-vertex bound quality CSV")
    add_common(p_bounds)
    p_bounds.add_argument("--out")
    p_bounds.set_defaults(func=cmd_bounds)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "oracle" and not args.batch and not args.graph:
        print("oracle: --graph or --batch is required", file=sys.stderr)
        return EXIT_INPUT
    try:
        return args.func(args)
    except (NoMotifError, NoAdmissiblePrefixError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NO_MOTIF
    except (
        EdgeListParseError,
        GeneratorConfigError,
        OracleTooLargeError,
        UndefinedResultError,
        OSError,
        ValueError,
    ) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except MotifPeelError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


def console_main() -> None:
    sys.exit(main())


if __name__ == "__main__":
    console_main()
