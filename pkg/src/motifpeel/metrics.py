"""Cluster quality metrics and run reports.

F1 against ground truth takes the best-matching community: the paper-style
protocol scores one detected cluster against many reference communities, so
the maximum over communities is reported.
"""

from __future__ import annotations

import json
from collections.abc import Iterable
from fractions import Fraction
from typing import IO

from .errors import UndefinedResultError
from .graph import Graph
from .motifs import motif_conductance
from .peeling import ClusterResult

REPORT_FIELDS = ("dataset", "k", "method", "mc_num", "mc_den", "mc", "f1", "size", "wall_ms")


def fmt12(x: float) -> float:
    """Round a float through 12 significant digits for stable printing."""
    return float(f"{x:.12g}")


def f1_score(detected: Iterable[int], communities: list[set[int]]) -> float:
    """Best-match F1: max over communities of 2PR/(P+R); 0 when P+R = 0."""
    c = set(detected)
    if not c:
        raise UndefinedResultError("detected cluster is empty")
    if not communities:
        raise UndefinedResultError("ground truth has no communities")
    best = Fraction(0)
    for t in communities:
        if not t:
            continue
        hit = len(c & t)
        if hit == 0:
            continue
        p = Fraction(hit, len(c))
        r = Fraction(hit, len(t))
        f1 = 2 * p * r / (p + r)
        if f1 > best:
            best = f1
    return float(best)


def read_communities(stream: IO[str] | Iterable[str]) -> list[set[int]]:
    """One community per line, space-separated original vertex ids."""
    communities = []
    for line in stream:
        text = line.strip()
        if not text or text.startswith("#"):
            continue
        communities.append({int(tok) for tok in text.split()})
    return communities


def metrics_report(
    graph: Graph,
    k: int,
    result: ClusterResult,
    ground_truth: list[set[int]] | None = None,
    dataset: str = "",
    wall_ms: float | None = None,
) -> dict:
    """Assemble the standard report record for one clustering run.

    mc_num/mc_den carry the exact value; mc is the float view.  f1 appears
    only when ground truth is supplied (matched on original vertex ids).
    """
    members = sorted(graph.original_ids[v] for v in result.cluster)
    report: dict = {
        "dataset": dataset,
        "k": k,
        "method": result.method,
        "mc_num": result.phi.numerator,
        "mc_den": result.phi.denominator,
        "mc": fmt12(float(result.phi)),
        "f1": None,
        "size": len(members),
        "wall_ms": wall_ms,
    }
    if ground_truth is not None:
        report["f1"] = fmt12(f1_score(members, ground_truth))
    if result.phi_estimate is not None:
        report["mc_estimate_num"] = result.phi_estimate.numerator
        report["mc_estimate_den"] = result.phi_estimate.denominator
        report["mc_estimate"] = fmt12(float(result.phi_estimate))
    report["cluster"] = members
    return report


def evaluate_cluster(
    graph: Graph,
    k: int,
    members_original_ids: Iterable[int],
    ground_truth: list[set[int]] | None = None,
    dataset: str = "",
) -> dict:
    """Report for an externally supplied cluster (original ids)."""
    wanted = set(members_original_ids)
    internal = [v for v in range(graph.n) if graph.original_ids[v] in wanted]
    missing = wanted - {graph.original_ids[v] for v in internal}
    if missing:
        raise ValueError(f"cluster ids not present in graph: {sorted(missing)[:5]}")
    cond = motif_conductance(graph, k, internal)
    members = sorted(wanted)
    report: dict = {
        "dataset": dataset,
        "k": k,
        "method": "external",
        "mc_num": cond.phi.numerator,
        "mc_den": cond.phi.denominator,
        "mc": fmt12(float(cond.phi)),
        "f1": fmt12(f1_score(members, ground_truth)) if ground_truth else None,
        "size": len(members),
        "wall_ms": None,
        "cluster": members,
    }
    return report


def report_to_json(report: dict) -> str:
    ordered = {key: report[key] for key in REPORT_FIELDS if key in report}
    for key in report:
        if key not in ordered:
            ordered[key] = report[key]
    return json.dumps(ordered, indent=2) + "\n"


def report_csv_header() -> str:
    return ",".join(REPORT_FIELDS) + "\n"


def report_to_csv_row(report: dict) -> str:
    cells = []
    for key in REPORT_FIELDS:
        value = report.get(key)
        cells.append("" if value is None else str(value))
    return ",".join(cells) + "\n"
