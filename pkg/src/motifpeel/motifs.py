"""Exact k-clique statistics: enumeration, degrees, local counts, conductance.

The query motif is always a k-clique (k >= 2); k = 2 degenerates into plain
edges and classic conductance.  Enumeration walks the degeneracy-oriented
DAG (each vertex keeps only neighbors later in the removal order), so every
clique is produced exactly once and the work stays proportional to
k * (delta/2)^(k-2) * m.

All counts are exact integers; conductance values are exact Fractions with
float views derived on demand.
"""

from __future__ import annotations

from collections.abc import Callable, Iterable
from dataclasses import dataclass
from fractions import Fraction
from typing import IO

from .errors import UndefinedResultError
from .graph import Graph, VertexSet, as_vertex_set


def check_motif_order(k: int) -> int:
    if not isinstance(k, int) or k < 2:
        raise ValueError(f"clique order k must be an integer >= 2, got {k!r}")
    return k


@dataclass(frozen=True)
class MotifStats:
    """Per-vertex clique participation counts for one clique order."""

    k: int
    degrees: tuple[int, ...]  # degrees[u] = number of k-cliques containing u
    total: int  # number of k-clique instances in the whole graph


@dataclass(frozen=True)
class WeightedMotifGraph:
    """Edge weights w(u,v) = number of k-cliques through (u,v); D[u] = sum."""

    k: int
    weights: dict[tuple[int, int], int]  # keyed (u, v) with u < v; includes zeros
    weighted_degrees: tuple[int, ...]


@dataclass(frozen=True)
class Conductance:
    """Exact conductance of a bipartition (S, V\\S)."""

    cut: int
    vol: int  # motif volume of S (full-graph degrees)
    vol_rest: int
    phi: Fraction
    g: Fraction  # (vol - cut) / vol


def enumerate_cliques(graph: Graph, k: int, visitor: Callable[[tuple[int, ...]], None]) -> None:
    """Invoke `visitor` exactly once per k-clique, as an id-sorted tuple."""
    check_motif_order(k)
    if k == 2:
        for u in range(graph.n):
            for v in graph.adj[u]:
                if v > u:
                    visitor((u, v))
        return
    out = graph.ordered_out_lists()
    out_sets = graph.ordered_out_sets()

    def extend(prefix: tuple[int, ...], cand: list[int], need: int) -> None:
        if need == 1:
            for w in cand:
                visitor(tuple(sorted(prefix + (w,))))
            return
        for w in cand:
            own = out_sets[w]
            nxt = [x for x in cand if x in own]
            if len(nxt) >= need - 1:
                extend(prefix + (w,), nxt, need - 1)

    for u in range(graph.n):
        cand = out[u]
        if len(cand) >= k - 1:
            extend((u,), cand, k - 1)


class TriangleIndex:
    """Per-edge / per-vertex triangle counts plus triangle-edge sublists.

    supports[u][i] counts triangles through edge (u, adj[u][i]), aligned
    with the adjacency lists.  tri_degrees[u] counts triangles containing
    u (equivalently, edges inside u's neighbor subgraph).  active[u] lists
    the (neighbor, adjacency-index) pairs whose edge lies in at least one
    triangle; active_out[u] restricts that to degeneracy-DAG successors.
    Edges outside `active` can never contribute to clique counts for any
    k >= 3, which lets sparse-graph loops skip them wholesale.
    """

    __slots__ = ("supports", "tri_degrees", "active", "active_out")

    def __init__(self, supports, tri_degrees, active, active_out):
        self.supports = supports
        self.tri_degrees = tri_degrees
        self.active = active
        self.active_out = active_out


def triangle_supports(graph: Graph) -> TriangleIndex:
    """One cached DAG pass over all triangles; see TriangleIndex."""
    if graph._tri_cache is not None:
        return graph._tri_cache
    from bisect import bisect_left

    n = graph.n
    adj = graph.adj
    supports: list[list[int]] = [[0] * len(a) for a in adj]
    tri_deg = [0] * n
    out = graph.ordered_out_lists()
    out_sets = graph.ordered_out_sets()

    def bump(a: int, b: int) -> None:
        supports[a][bisect_left(adj[a], b)] += 1
        supports[b][bisect_left(adj[b], a)] += 1

    for u in range(n):
        su = out_sets[u]
        for v in out[u]:
            for w in su & out_sets[v]:
                tri_deg[u] += 1
                tri_deg[v] += 1
                tri_deg[w] += 1
                bump(u, v)
                bump(u, w)
                bump(v, w)
    pos = graph.order_positions()
    active: list[list[tuple[int, int]]] = [[] for _ in range(n)]
    active_out: list[list[int]] = [[] for _ in range(n)]
    for u in range(n):
        row = supports[u]
        nbrs = adj[u]
        pu = pos[u]
        for i, c in enumerate(row):
            if c:
                v = nbrs[i]
                active[u].append((v, i))
                if pos[v] > pu:
                    active_out[u].append(v)
    index = TriangleIndex(supports, tri_deg, active, active_out)
    graph._tri_cache = index
    return index


def count_cliques_within(graph: Graph, vertices: Iterable[int], size: int) -> int:
    """Number of `size`-cliques in the subgraph induced by `vertices`.

    size 0 counts the empty clique (always 1, even on no vertices).
    """
    if size < 0:
        raise ValueError("size must be >= 0")
    verts = sorted(set(vertices))
    if size == 0:
        return 1
    if size == 1:
        return len(verts)
    adj_sets = graph.adjacency_sets()
    if size == 2:
        count = 0
        for i, w in enumerate(verts):
            aw = adj_sets[w]
            for x in verts[i + 1 :]:
                if x in aw:
                    count += 1
        return count
    # orient by ascending id within the induced subgraph
    member = set(verts)
    succ = {
        w: sorted(x for x in adj_sets[w] if x in member and x > w) for w in verts
    }
    total = 0
    for w in verts:
        cand = succ[w]
        if len(cand) >= size - 1:
            total += _walk_count(succ, cand, size - 1)
    return total


def _walk_count(succ: dict[int, list[int]], cand: list[int], need: int) -> int:
    if need == 1:
        return len(cand)
    total = 0
    cset = set(cand)
    for w in cand:
        nxt = [x for x in succ[w] if x in cset]
        if len(nxt) >= need - 1:
            total += _walk_count(succ, nxt, need - 1)
    return total


def motif_degrees(graph: Graph, k: int, method: str = "enumerate") -> MotifStats:
    """Per-vertex k-clique participation counts.

    method "enumerate" tallies a full enumeration pass; "neighborhood" counts
    (k-1)-cliques inside each vertex's neighbor subgraph.  The two paths are
    independent and must agree.
    """
    check_motif_order(k)
    if method == "enumerate":
        if k == 3:
            # triangle degrees fall out of the cached support pass
            tri_deg = triangle_supports(graph).tri_degrees
            return MotifStats(k, tuple(tri_deg), sum(tri_deg) // 3)
        degrees = [0] * graph.n
        total = 0

        def tally(clique: tuple[int, ...]) -> None:
            nonlocal total
            total += 1
            for v in clique:
                degrees[v] += 1

        enumerate_cliques(graph, k, tally)
        return MotifStats(k, tuple(degrees), total)
    if method == "neighborhood":
        degrees = [
            count_cliques_within(graph, graph.adj[u], k - 1) for u in range(graph.n)
        ]
        weighted = sum(degrees)
        if weighted % k != 0:
            raise AssertionError("degree sum not divisible by k; counting bug")
        return MotifStats(k, tuple(degrees), weighted // k)
    raise ValueError(f"unknown method {method!r}")


def local_counts(
    graph: Graph, k: int, u: int, v: int, s: VertexSet | Iterable[int]
) -> tuple[int, int]:
    """Edge-local instance counts (inside_count, crossing_pair_count) for (u, v).

    inside_count: instances through edge (u,v) with all k vertices in S, i.e.
    (k-2)-cliques among common neighbors inside S.  crossing_pair_count:
    instances through (u,v) whose only S-vertices are u and v, i.e.
    (k-2)-cliques among common neighbors outside S.

    For k = 2 the single instance {u, v} lies in both categories at once
    (exactly k vertices in S and exactly 2), so the result is (1, 1); this
    keeps the peel update exact in the degenerate case.
    """
    check_motif_order(k)
    vs = as_vertex_set(graph.n, s)
    if u not in vs or v not in vs:
        raise ValueError("both endpoints must lie in S")
    if not graph.has_edge(u, v):
        raise ValueError(f"({u}, {v}) is not an edge")
    if k == 2:
        return (1, 1)
    adj_sets = graph.adjacency_sets()
    common = adj_sets[u] & adj_sets[v]
    inside = [w for w in common if w in vs]
    outside = [w for w in common if w not in vs]
    return (
        count_cliques_within(graph, inside, k - 2),
        count_cliques_within(graph, outside, k - 2),
    )


def cut_and_vol(
    graph: Graph,
    k: int,
    s: VertexSet | Iterable[int],
    stats: MotifStats | None = None,
) -> tuple[int, int, int]:
    """(cut, vol(S), vol(V\\S)): straddling instances and full-graph volumes."""
    check_motif_order(k)
    vs = as_vertex_set(graph.n, s)
    if stats is None:
        stats = motif_degrees(graph, k)
    member = bytearray(graph.n)
    for v in vs:
        member[v] = 1
    cut = 0
    if k == 3:
        active_out = triangle_supports(graph).active_out
        out_sets = graph.ordered_out_sets()
        for u in range(graph.n):
            su = out_sets[u]
            mu = member[u]
            for v in active_out[u]:
                base = mu + member[v]
                for w in su & out_sets[v]:
                    if 0 < base + member[w] < 3:
                        cut += 1
    else:

        def tally(clique: tuple[int, ...]) -> None:
            nonlocal cut
            inside = 0
            for w in clique:
                inside += member[w]
            if 0 < inside < k:
                cut += 1

        enumerate_cliques(graph, k, tally)
    vol_s = sum(stats.degrees[v] for v in vs)
    return cut, vol_s, stats.total * k - vol_s


def motif_conductance(
    graph: Graph,
    k: int,
    s: VertexSet | Iterable[int],
    stats: MotifStats | None = None,
) -> Conductance:
    """Exact motif conductance of S: cut / min(vol(S), vol(V\\S)).

    Raises UndefinedResultError when either side has zero volume (including
    S empty or S = V), rather than returning 0 or infinity.
    """
    cut, vol_s, vol_rest = cut_and_vol(graph, k, s, stats)
    if min(vol_s, vol_rest) <= 0:
        raise UndefinedResultError(
            f"conductance undefined: vol(S)={vol_s}, vol(rest)={vol_rest}"
        )
    return Conductance(
        cut=cut,
        vol=vol_s,
        vol_rest=vol_rest,
        phi=Fraction(cut, min(vol_s, vol_rest)),
        g=Fraction(vol_s - cut, vol_s),
    )


def build_weighted_motif_graph(graph: Graph, k: int) -> WeightedMotifGraph:
    """Reweight every edge by the number of k-cliques it participates in."""
    check_motif_order(k)
    weights = {(u, v): 0 for u, v in graph.edges()}

    def tally(clique: tuple[int, ...]) -> None:
        for i, a in enumerate(clique):
            for b in clique[i + 1 :]:
                weights[(a, b)] += 1

    enumerate_cliques(graph, k, tally)
    degs = [0] * graph.n
    for (a, b), w in weights.items():
        degs[a] += w
        degs[b] += w
    return WeightedMotifGraph(k, weights, tuple(degs))


def weighted_conductance(
    wmg: WeightedMotifGraph, s: VertexSet | Iterable[int], n: int
) -> Fraction:
    """Classic weighted edge conductance of S on the reweighted graph."""
    vs = as_vertex_set(n, s)
    cut_w = 0
    for (a, b), w in wmg.weights.items():
        if (a in vs) != (b in vs):
            cut_w += w
    vol_s = sum(wmg.weighted_degrees[v] for v in vs)
    vol_rest = sum(wmg.weighted_degrees) - vol_s
    if min(vol_s, vol_rest) <= 0:
        raise UndefinedResultError("weighted conductance undefined: zero-volume side")
    return Fraction(cut_w, min(vol_s, vol_rest))


def write_weighted_edge_list(
    wmg: WeightedMotifGraph, stream: IO[str], original_ids: list[int] | None = None
) -> None:
    """One 'u v w' line per edge for external inspection."""
    for (a, b), w in sorted(wmg.weights.items()):
        if original_ids is not None:
            a, b = original_ids[a], original_ids[b]
        stream.write(f"{a} {b} {w}\n")
