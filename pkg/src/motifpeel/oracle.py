"""Exhaustive ground truth on tiny graphs, and guarantee certification.

The oracle enumerates every nonempty subset of vertices (hard limit 20, so
at most ~1M subsets) and computes exact cut/volume for each against the
full instance list.  It reports both the conductance optimum over subsets
with vol(S) <= vol(V\\S) and the maximizer of g(S) = (vol - cut) / vol.
Certification then checks the peeling result against the half-plus-half
bound and the retention property of the g-maximizer.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import NoMotifError, OracleTooLargeError
from .graph import Graph, VertexSet
from .motifs import check_motif_order, enumerate_cliques
from .peeling import ClusterResult, psmc

ORACLE_VERTEX_LIMIT = 20


@dataclass(frozen=True)
class OracleResult:
    best_set: VertexSet  # argmin conductance among admissible subsets
    phi_star: Fraction
    g_set: VertexSet  # argmax g among all nonempty subsets with vol > 0
    g_value: Fraction
    instance_count: int


@dataclass(frozen=True)
class Certification:
    phi_hat: Fraction  # conductance of the peeled cluster
    phi_star: Fraction
    bound: Fraction  # 1/2 + phi_star / 2
    holds: bool
    retention_ok: bool  # every g-maximizer member retains at least g
    result: ClusterResult
    oracle: OracleResult


def _instance_masks(graph: Graph, k: int) -> list[int]:
    masks: list[int] = []

    def collect(clique: tuple[int, ...]) -> None:
        m = 0
        for v in clique:
            m |= 1 << v
        masks.append(m)

    enumerate_cliques(graph, k, collect)
    return masks


def brute_force_optimum(graph: Graph, k: int) -> OracleResult:
    """Exact optimum by subset enumeration; ties pick the smallest bitmap."""
    check_motif_order(k)
    n = graph.n
    if n > ORACLE_VERTEX_LIMIT:
        raise OracleTooLargeError(
            f"n={n} exceeds the oracle limit of {ORACLE_VERTEX_LIMIT}"
        )
    masks = _instance_masks(graph, k)
    if not masks:
        raise NoMotifError(f"graph has no {k}-clique instance")
    degrees = [0] * n
    for m in masks:
        mm = m
        while mm:
            low = mm & -mm
            degrees[low.bit_length() - 1] += 1
            mm ^= low
    total = k * len(masks)

    subsets = np.arange(1, 1 << n, dtype=np.int64)
    vol = np.zeros(subsets.shape, dtype=np.int64)
    for v in range(n):
        vol += degrees[v] * ((subsets >> v) & 1)
    cut = np.zeros(subsets.shape, dtype=np.int64)
    for m in masks:
        hit = subsets & m
        cut += ((hit != 0) & (hit != m)).astype(np.int64)

    vol_list = vol.tolist()
    cut_list = cut.tolist()

    best_phi_num = best_phi_den = 0
    best_phi_mask = -1
    best_g_num = best_g_den = 0
    best_g_mask = -1
    for idx, s_vol in enumerate(vol_list):
        s_cut = cut_list[idx]
        mask = idx + 1
        if s_vol > 0:
            # g = (vol - cut) / vol over all nonempty subsets
            if best_g_mask < 0 or (s_vol - s_cut) * best_g_den > best_g_num * s_vol:
                best_g_num, best_g_den = s_vol - s_cut, s_vol
                best_g_mask = mask
            co_vol = total - s_vol
            if co_vol >= s_vol:
                # admissible: phi = cut / vol (the smaller side)
                if best_phi_mask < 0 or s_cut * best_phi_den < best_phi_num * s_vol:
                    best_phi_num, best_phi_den = s_cut, s_vol
                    best_phi_mask = mask
    if best_phi_mask < 0:
        raise NoMotifError("no admissible subset with positive volume")
    return OracleResult(
        best_set=VertexSet(n, best_phi_mask),
        phi_star=Fraction(best_phi_num, best_phi_den),
        g_set=VertexSet(n, best_g_mask),
        g_value=Fraction(best_g_num, best_g_den),
        instance_count=len(masks),
    )


def retention_scores(graph: Graph, k: int, s: VertexSet) -> dict[int, Fraction]:
    """Exact retention score of every member of S with nonzero motif degree."""
    masks = _instance_masks(graph, k)
    s_mask = s.mask
    scores: dict[int, Fraction] = {}
    for u in s:
        bit = 1 << u
        deg = inside = sole = 0
        for m in masks:
            if m & bit:
                deg += 1
                overlap = m & s_mask
                if overlap == m:
                    inside += 1
                elif overlap == bit:
                    sole += 1
        if deg:
            scores[u] = Fraction(deg + inside - sole, deg)
    return scores


def certify_ratio(graph: Graph, k: int) -> Certification:
    """Run the peel and the oracle; check the half-plus-half guarantee exactly.

    Also checks that every motif-active member of the oracle's g-maximizer
    retains a score of at least g (the property the guarantee rests on).
    """
    result = psmc(graph, k)
    oracle = brute_force_optimum(graph, k)
    bound = Fraction(1, 2) + oracle.phi_star / 2
    holds = result.phi <= bound
    scores = retention_scores(graph, k, oracle.g_set)
    retention_ok = all(v >= oracle.g_value for v in scores.values())
    return Certification(
        phi_hat=result.phi,
        phi_star=oracle.phi_star,
        bound=bound,
        holds=holds,
        retention_ok=retention_ok,
        result=result,
        oracle=oracle,
    )
