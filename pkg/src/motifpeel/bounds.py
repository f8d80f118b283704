"""Clique-count bounds and the bound-estimated peeling variant.

Exact peeling spends most of its time counting small cliques inside
neighbor subgraphs.  This module replaces those counts with cheap
lower/upper bounds and peels on their average instead:

* lower bounds come from edge density.  A subgraph on nv vertices with ne
  edges has clique number at least r = ceil(nv^2 / (nv^2 - 2*ne)) (the
  classical density threshold, exact on complete multipartite extremal
  graphs), hence at least C(r, h) h-cliques; a second bound multiplies by
  the guaranteed number t = floor((nv/(r-1))^(r-2)) of r-cliques and
  subtracts pairwise overlap, t*C(r,h) - C(t,2)*C(r-1,h).  Both are sound:
  they never exceed the true count.
* upper bounds come from a proper coloring: every h-clique is a star/wedge
  whose vertices carry pairwise distinct colors, so counting distinct-color
  selections (an elementary symmetric polynomial over per-color neighbor
  multiplicities) bounds the clique count from above.

Estimates are floor((lower + upper) / 2) after clamping lower to the upper
bound.  The estimated peel (`psmc_plus`) orders deletions by these
estimates; the conductance of the cluster it returns is recomputed exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .errors import NoMotifError, UndefinedResultError
from .graph import Graph, VertexSet, as_vertex_set
from .motifs import (
    check_motif_order,
    motif_conductance,
    motif_degrees,
    triangle_supports,
)
from .peeling import ClusterResult, PeelState, sweep_select


@dataclass(frozen=True)
class Coloring:
    """A proper vertex coloring with at most degeneracy + 1 colors."""

    colors: tuple[int, ...]
    color_count: int


@dataclass(frozen=True)
class BoundEstimate:
    lower: int
    upper: int
    estimate: int  # floor((lower + upper) / 2), always within [0, upper]


def greedy_color(graph: Graph) -> Coloring:
    """Color greedily in reverse degeneracy-removal order (smallest-last).

    Each vertex sees at most `degeneracy` already-colored neighbors when its
    turn comes, so the smallest absent color never exceeds degeneracy + 1.
    """
    colors = [-1] * graph.n
    adj = graph.adj
    highest = -1
    # stamp-marked scratch: mark[c] == v means color c is taken at vertex v
    mark = [-1] * (graph.degeneracy + 2)
    for v in reversed(graph.degeneracy_order):
        for w in adj[v]:
            c = colors[w]
            if 0 <= c < len(mark):
                mark[c] = v
        c = 0
        while mark[c] == v:
            c += 1
        colors[v] = c
        if c > highest:
            highest = c
    return Coloring(tuple(colors), highest + 1)


def turan_clique_order(n_vertices: int, n_edges: int) -> int:
    """Largest clique order guaranteed by edge density alone.

    A graph on nv vertices with ne edges satisfies omega >= ceil(nv^2 /
    (nv^2 - 2*ne)); the denominator is positive because 2*ne < nv^2.
    Returns nv for complete subgraphs and 0 on the empty vertex set.
    """
    if n_vertices <= 0:
        return 0
    sq = n_vertices * n_vertices
    return -(-sq // (sq - 2 * n_edges))


def turan_lower(n_vertices: int, n_edges: int, h: int) -> int:
    """Density lower bound on the number of h-cliques: C(r, h)."""
    if h < 0:
        raise ValueError("h must be >= 0")
    if h == 0:
        return 1
    return comb(turan_clique_order(n_vertices, n_edges), h)


def erdos_lower(n_vertices: int, n_edges: int, h: int) -> int:
    """Counting lower bound: t guaranteed r-cliques minus pairwise overlap.

    t = floor((nv / (r-1))^(r-2)) r-cliques exist at density threshold r;
    two r-cliques share at most r-1 vertices, so inclusion-exclusion gives
    at least t*C(r,h) - C(t,2)*C(r-1,h) distinct h-cliques.  Clamped to 0.
    """
    if h < 0:
        raise ValueError("h must be >= 0")
    if h == 0:
        return 1
    r = turan_clique_order(n_vertices, n_edges)
    if r <= 0:
        return 0
    if r <= 2:
        t = 1
    else:
        t = n_vertices ** (r - 2) // (r - 1) ** (r - 2)
    value = t * comb(r, h) - comb(t, 2) * comb(r - 1, h)
    return max(0, value)


def _esp(multiplicities: list[int], j: int) -> int:
    """Elementary symmetric polynomial e_j over the multiplicities."""
    if j < 0:
        return 0
    e = [0] * (j + 1)
    e[0] = 1
    for c in multiplicities:
        for idx in range(min(j, len(e) - 1), 0, -1):
            e[idx] += e[idx - 1] * c
    return e[j]


def _color_multiplicities(coloring: Coloring, vertices) -> list[int]:
    counts: dict[int, int] = {}
    for w in vertices:
        c = coloring.colors[w]
        counts[c] = counts.get(c, 0) + 1
    return [counts[c] for c in sorted(counts)]


def colorful_star_degree(graph: Graph, coloring: Coloring, u: int, h: int) -> int:
    """Number of h-vertex stars at u whose vertices all have distinct colors.

    Equals e_{h-1} over the per-color multiplicities of N(u); a proper
    coloring already excludes u's own color from its neighborhood.  Upper
    bounds the number of h-cliques containing u.  O(h * |N(u)|).
    """
    if h < 2:
        raise ValueError("star size h must be >= 2")
    return _esp(_color_multiplicities(coloring, graph.adj[u]), h - 1)


def colorful_wedge_degree(
    graph: Graph, coloring: Coloring, u: int, v: int, s: VertexSet, h: int
) -> int:
    """Distinct-color selections of h-2 common neighbors of (u, v) inside S.

    Upper bounds the number of h-cliques through edge (u, v) whose non-
    endpoint vertices all lie in S.  Middles adjacent to an endpoint are
    forced away from its color by properness; no further constraint is
    applied.
    """
    if h < 3:
        raise ValueError("wedge count needs h >= 3")
    vs = as_vertex_set(graph.n, s)
    adj_sets = graph.adjacency_sets()
    middles = [w for w in adj_sets[u] & adj_sets[v] if w in vs]
    return _esp(_color_multiplicities(coloring, middles), h - 2)


def _edge_count_within(graph: Graph, vertices: list[int]) -> int:
    adj_sets = graph.adjacency_sets()
    count = 0
    for i, w in enumerate(vertices):
        aw = adj_sets[w]
        for x in vertices[i + 1 :]:
            if x in aw:
                count += 1
    return count


def _combine(raw_lower: int, upper: int) -> BoundEstimate:
    lower = min(max(raw_lower, 0), upper)
    return BoundEstimate(lower, upper, (lower + upper) // 2)


def _bounded_count(graph: Graph, coloring: Coloring, members: list[int], h: int) -> BoundEstimate:
    """Bounds on the number of h-cliques induced by `members`."""
    if h == 0:
        return BoundEstimate(1, 1, 1)
    nv = len(members)
    ne = _edge_count_within(graph, members) if h >= 2 else 0
    raw = max(turan_lower(nv, ne, h), erdos_lower(nv, ne, h))
    upper = _esp(_color_multiplicities(coloring, members), h)
    return _combine(raw, upper)


def estimate_motif_degree(
    graph: Graph,
    coloring: Coloring,
    k: int,
    u: int,
    neighborhood_edges: int | None = None,
) -> BoundEstimate:
    """Bounds on M(u), the (k-1)-clique count of u's neighbor subgraph.

    `neighborhood_edges` (the edge count among N(u), equivalently u's
    triangle degree) can be passed in when precomputed for the whole graph.
    """
    check_motif_order(k)
    nv = graph.degree(u)
    ne = (
        _edge_count_within(graph, graph.adj[u])
        if neighborhood_edges is None
        else neighborhood_edges
    )
    raw = max(turan_lower(nv, ne, k - 1), erdos_lower(nv, ne, k - 1))
    upper = _esp(_color_multiplicities(coloring, graph.adj[u]), k - 1)
    return _combine(raw, upper)


def estimate_local_counts(
    graph: Graph, coloring: Coloring, k: int, u: int, v: int, s: VertexSet
) -> tuple[BoundEstimate, BoundEstimate]:
    """Bounds on the two edge-local counts for (u, v) against S.

    First element bounds the instances through (u, v) with all vertices in
    S ((k-2)-cliques among common neighbors inside S); second bounds those
    whose only S-vertices are u and v ((k-2)-cliques among common neighbors
    outside S).
    """
    check_motif_order(k)
    vs = as_vertex_set(graph.n, s)
    adj_sets = graph.adjacency_sets()
    common = adj_sets[u] & adj_sets[v]
    inside = sorted(w for w in common if w in vs)
    outside = sorted(w for w in common if w not in vs)
    return (
        _bounded_count(graph, coloring, inside, k - 2),
        _bounded_count(graph, coloring, outside, k - 2),
    )


def neighborhood_edge_counts(graph: Graph) -> list[int]:
    """Edge count of every vertex's neighbor subgraph (= triangle degree)."""
    return list(triangle_supports(graph).tri_degrees)


def _bulk_degree_estimates(
    graph: Graph, coloring: Coloring, k: int, tri_deg: list[int]
) -> list[int]:
    """Estimated motif degree of every vertex; dict-free inner loop.

    Produces exactly estimate_motif_degree(...).estimate for each vertex.
    """
    n = graph.n
    adj = graph.adj
    colors = coloring.colors
    counts = [0] * max(coloring.color_count, 1)
    touched: list[int] = []
    h = k - 1
    est = [0] * n
    for u in range(n):
        nbrs = adj[u]
        nv = len(nbrs)
        if nv < h:
            continue
        if h == 1:
            upper = nv
        else:
            touched.clear()
            for w in nbrs:
                c = colors[w]
                if counts[c] == 0:
                    touched.append(c)
                counts[c] += 1
            if h == 2:
                s2 = 0
                for c in touched:
                    s2 += counts[c] * counts[c]
                upper = (nv * nv - s2) // 2
            else:
                upper = _esp([counts[c] for c in touched], h)
            for c in touched:
                counts[c] = 0
        if upper <= 0:
            continue
        ne = tri_deg[u]
        raw = max(turan_lower(nv, ne, h), erdos_lower(nv, ne, h))
        lower = min(raw, upper)
        est[u] = (lower + upper) // 2
    return est


def psmc_plus(graph: Graph, k: int) -> ClusterResult:
    """Peel on estimated counts; report the exact conductance of the result.

    Only the deletion order and the split selection use estimates.  The
    returned cluster's conductance is recomputed exactly; the ordering
    value survives as `phi_estimate`.  Raises NoMotifError when every
    estimated motif degree is zero, mirroring the exact method.  Falls back
    to the exact peel in the rare case the estimated selection has no
    exactly-defined conductance.
    """
    check_motif_order(k)
    coloring = greedy_color(graph)
    tri = neighborhood_edge_counts(graph)
    est_degrees = _bulk_degree_estimates(graph, coloring, k, tri)
    if not any(est_degrees):
        raise NoMotifError(f"all estimated {k}-clique degrees are zero")

    state = PeelState(
        graph,
        k,
        degrees=est_degrees,
        local_decrement_factory=_estimated_decrement_factory(coloring),
    )
    trace = state.run()
    selected = sweep_select(trace, method="psmc-plus")
    try:
        exact = motif_conductance(graph, k, selected.cluster)
    except UndefinedResultError:
        if motif_degrees(graph, k).total == 0:
            raise NoMotifError(f"graph has no {k}-clique instance") from None
        fallback = _psmc_exact(graph, k)
        return ClusterResult(
            cluster=fallback.cluster,
            phi=fallback.phi,
            g=fallback.g,
            step_index=fallback.step_index,
            steps_admissible=fallback.steps_admissible,
            trace=fallback.trace,
            method="psmc-plus",
            phi_estimate=selected.phi,
        )
    return ClusterResult(
        cluster=selected.cluster,
        phi=exact.phi,
        g=Fraction(min(exact.vol, exact.vol_rest) - exact.cut,
                   min(exact.vol, exact.vol_rest)),
        step_index=selected.step_index,
        steps_admissible=selected.steps_admissible,
        trace=trace,
        method="psmc-plus",
        phi_estimate=selected.phi,
    )


def _psmc_exact(graph: Graph, k: int) -> ClusterResult:
    from .peeling import psmc

    return psmc(graph, k)


def _estimated_decrement_factory(coloring: Coloring):
    """Per-edge decrement built from estimated counts instead of exact ones."""

    def factory(graph: Graph, k: int, alive: bytearray):
        if k == 2:
            return lambda u, v, i: 2
        colors = coloring.colors
        h = k - 2

        if h == 1:
            # single-vertex selections: the general bound machinery reduces
            # to lower = min(1, nv), upper = nv, estimate = (1 + nv) // 2;
            # the cached per-edge triangle support skips empty intersections
            supports = triangle_supports(graph).supports
            adj_sets = graph.adjacency_sets()

            def decrement_h1(u: int, v: int, i: int) -> int:
                c = supports[u][i]
                if c == 0:
                    return 0
                inside = 0
                for w in adj_sets[u] & adj_sets[v]:
                    if alive[w]:
                        inside += 1
                outside = c - inside
                total = 0
                if inside:
                    total += (1 + inside) // 2
                if outside:
                    total += (1 + outside) // 2
                return total

            return decrement_h1

        adj_sets = graph.adjacency_sets()

        def decrement(u: int, v: int, i: int) -> int:
            common = adj_sets[u] & adj_sets[v]
            inside: list[int] = []
            outside: list[int] = []
            for w in common:
                (inside if alive[w] else outside).append(w)
            total = 0
            for members in (inside, outside):
                nv = len(members)
                ne = _edge_count_within(graph, members) if h >= 2 else 0
                raw = max(turan_lower(nv, ne, h), erdos_lower(nv, ne, h))
                counts: dict[int, int] = {}
                for w in members:
                    c = colors[w]
                    counts[c] = counts.get(c, 0) + 1
                upper = _esp(list(counts.values()), h)
                lower = min(max(raw, 0), upper)
                total += (lower + upper) // 2
            return total

        return decrement

    return factory


def diagnostic_rows(
    graph: Graph, k: int, coloring: Coloring | None = None
) -> list[tuple[int, int, int, int, int]]:
    """(vertex original id, exact M(u), lower, upper, estimate) per vertex."""
    check_motif_order(k)
    if coloring is None:
        coloring = greedy_color(graph)
    exact = motif_degrees(graph, k)
    tri = neighborhood_edge_counts(graph)
    rows = []
    for u in range(graph.n):
        b = estimate_motif_degree(graph, coloring, k, u, neighborhood_edges=tri[u])
        rows.append((graph.original_ids[u], exact.degrees[u], b.lower, b.upper, b.estimate))
    return rows
