"""Greedy peeling for motif conductance.

The peel deletes, at every step, the alive vertex with the smallest retention
score.  For a vertex u inside the alive set S the score is

    (M(u) + inside_S(u) - sole_S(u)) / M(u)

where M(u) is u's motif degree in the full graph, inside_S(u) counts u's
instances entirely inside S, and sole_S(u) counts instances whose only alive
vertex is u.  Scores start at exactly 2 (numerator 2*M(u)) and stay in
[0, 2].  Vertices in no instance (M(u) = 0) carry an undefined score and are
peeled first; they change no running quantity.

Numerators are maintained incrementally: deleting u subtracts, for every
alive neighbor v, the number of instances through edge (u, v) that were
fully inside S plus those whose only S-vertices were u and v.  The running
cut is updated from the deleted vertex's own numerator (cut' = cut +
numerator(u) - M(u)) and the volume drops by M(u).  Everything is exact
integer arithmetic; score comparisons cross-multiply instead of dividing.

The sweep evaluates every prefix of the peel as a bipartition: its value is
the true conductance cut / min(vol, vol_rest), and the returned cluster is
whichever side of the best bipartition has the smaller volume.  Returning
the complement of an oversized prefix matters: when a small motif component
is peeled away early, the zero-cut split it leaves behind is only visible
from the complement side.
"""

from __future__ import annotations

import heapq
from collections.abc import Callable
from dataclasses import dataclass
from fractions import Fraction
from typing import IO

from .errors import NoAdmissiblePrefixError, NoMotifError
from .graph import Graph, VertexSet
from .motifs import (
    MotifStats,
    check_motif_order,
    count_cliques_within,
    motif_degrees,
    triangle_supports,
)

# combined per-edge decrement: instances fully inside S plus instances whose
# only S-vertices are the edge's endpoints; called as fn(u, v, i) where
# v == adj[u][i]
LocalDecrementFn = Callable[[int, int, int], int]
# builds a decrement function around the live alive-flag array
LocalDecrementFactory = Callable[["Graph", int, bytearray], LocalDecrementFn]


class _HeapKey:
    """Heap entry ordered by exact score numerator/denominator ratio.

    Ties break toward smaller motif degree, then smaller vertex id.
    """

    __slots__ = ("num", "deg", "v")

    def __init__(self, num: int, deg: int, v: int):
        self.num = num
        self.deg = deg
        self.v = v

    def __lt__(self, other: "_HeapKey") -> bool:
        a = self.num * other.deg
        b = other.num * self.deg
        if a != b:
            return a < b
        if self.deg != other.deg:
            return self.deg < other.deg
        return self.v < other.v


@dataclass(frozen=True)
class PeelStep:
    """One deletion; vol/cut describe the prefix the vertex was deleted from."""

    vertex: int
    score_num: int | None  # None when the score is undefined (M(u) = 0)
    score_den: int | None
    vol: int
    cut: int


@dataclass(frozen=True)
class PeelTrace:
    k: int
    n: int
    total_vol: int
    steps: tuple[PeelStep, ...]
    deletion_order: tuple[int, ...]


@dataclass(frozen=True)
class ClusterResult:
    """Selected cluster plus the full peel trace behind it."""

    cluster: VertexSet
    phi: Fraction
    g: Fraction
    step_index: int  # 0-based index of the selected prefix in the trace
    steps_admissible: int
    trace: PeelTrace
    method: str
    phi_estimate: Fraction | None = None  # ordering-phi when counts were estimated

    @property
    def size(self) -> int:
        return len(self.cluster)


def exact_local_decrement(graph: Graph, k: int, alive: bytearray) -> LocalDecrementFn:
    """Exact per-edge decrement against a live alive-flag array."""
    if k == 2:
        # the edge itself is one instance, counted in both categories
        return lambda u, v, i: 2
    if k == 3:
        # every common neighbor closes a triangle, alive or dead, so the
        # decrement is the precomputed per-edge triangle support
        supports = triangle_supports(graph).supports

        def tri(u: int, v: int, i: int) -> int:
            return supports[u][i]

        return tri

    adj_sets = graph.adjacency_sets()

    def general(u: int, v: int, i: int) -> int:
        common = adj_sets[u] & adj_sets[v]
        inside = [w for w in common if alive[w]]
        outside = [w for w in common if not alive[w]]
        return count_cliques_within(graph, inside, k - 2) + count_cliques_within(
            graph, outside, k - 2
        )

    return general


class PeelState:
    """Live peeling state; one `delete_min` call per step.

    `degrees` may be exact motif degrees or estimates; `local_decrement`
    must match.  The defaults run the exact algorithm.
    """

    def __init__(
        self,
        graph: Graph,
        k: int,
        degrees: list[int] | None = None,
        local_decrement_factory: LocalDecrementFactory | None = None,
    ):
        check_motif_order(k)
        self.graph = graph
        self.k = k
        if degrees is None:
            degrees = list(motif_degrees(graph, k).degrees)
        self.degrees = degrees
        self.total_vol = sum(degrees)
        if self.total_vol == 0:
            raise NoMotifError(f"graph has no {k}-clique instance")
        n = graph.n
        self.alive = bytearray([1]) * n
        self.numerators = [2 * d for d in degrees]
        self.vol = self.total_vol
        self.cut = 0
        self.steps: list[PeelStep] = []
        self.deletion_order: list[int] = []
        factory = local_decrement_factory or exact_local_decrement
        self._local = factory(graph, k, self.alive)
        if k == 2:
            self._neighbor_edges = [
                [(v, i) for i, v in enumerate(a)] for a in graph.adj
            ]
        else:
            # for k >= 3 only triangle-carrying edges can have a nonzero
            # decrement (any clique pair shares a common neighbor)
            self._neighbor_edges = triangle_supports(graph).active
        # zero-degree vertices peel first (undefined score), in id order
        self._pending_zero = [v for v in range(n) if degrees[v] == 0]
        self._pending_zero.reverse()
        # every starting score is exactly 2 (numerator 2*M), so the initial
        # ordering is just (degree, id); vertices whose numerator changes
        # migrate to a small exact-comparison heap on first rescore
        self._initial = sorted(
            (degrees[v], v) for v in range(n) if degrees[v] > 0
        )
        self._ptr = 0
        self._heap: list[_HeapKey] = []

    @property
    def remaining(self) -> int:
        return self.graph.n - len(self.deletion_order)

    @property
    def g(self) -> Fraction | None:
        """Exact (vol - cut) / vol of the current alive set; None at vol 0."""
        if self.vol <= 0:
            return None
        return Fraction(self.vol - self.cut, self.vol)

    def score(self, v: int) -> Fraction | None:
        """Current retention score of an alive vertex; None if undefined."""
        if self.degrees[v] == 0:
            return None
        return Fraction(self.numerators[v], self.degrees[v])

    def alive_vertices(self) -> list[int]:
        return [v for v in range(self.graph.n) if self.alive[v]]

    def alive_set(self) -> VertexSet:
        return VertexSet.from_iterable(self.graph.n, self.alive_vertices())

    def _pop_min(self) -> int:
        """Exact minimum-score alive vertex, from the presorted untouched
        entries (score exactly 2) merged with the rescored-vertex heap."""
        heap = self._heap
        alive = self.alive
        numerators = self.numerators
        degrees = self.degrees
        initial = self._initial
        ptr = self._ptr
        limit = len(initial)
        while ptr < limit:
            d, v = initial[ptr]
            if alive[v] and numerators[v] == 2 * d:
                break
            ptr += 1
        self._ptr = ptr
        while heap:
            top = heap[0]
            if alive[top.v] and top.num == numerators[top.v]:
                break
            heapq.heappop(heap)
        if ptr < limit and heap:
            d, v = initial[ptr]
            top = heap[0]
            # untouched score is exactly 2 = 2d/d; compare with top exactly
            a = 2 * d * top.deg
            b = top.num * d
            if a < b or (a == b and (d, v) < (top.deg, top.v)):
                self._ptr = ptr + 1
                return v
            return heapq.heappop(heap).v
        if ptr < limit:
            self._ptr = ptr + 1
            return initial[ptr][1]
        if heap:
            return heapq.heappop(heap).v
        raise RuntimeError("peel already complete")

    def delete_min(self) -> int:
        """Delete the minimum-score vertex, update neighbors, return it."""
        if self._pending_zero:
            u = self._pending_zero.pop()
            # no instance contains u, so nothing changes but the alive set
            self.steps.append(PeelStep(u, None, None, self.vol, self.cut))
            self.alive[u] = 0
            self.deletion_order.append(u)
            return u
        u = self._pop_min()
        alive = self.alive
        numerators = self.numerators
        heap = self._heap
        degrees = self.degrees
        self.steps.append(
            PeelStep(u, numerators[u], degrees[u], self.vol, self.cut)
        )
        local = self._local
        push = heapq.heappush
        for v, i in self._neighbor_edges[u]:
            if alive[v] and degrees[v] > 0:
                drop = local(u, v, i)
                if drop:
                    numerators[v] -= drop
                    push(heap, _HeapKey(numerators[v], degrees[v], v))
        self.cut += numerators[u] - degrees[u]
        self.vol -= degrees[u]
        alive[u] = 0
        self.deletion_order.append(u)
        return u

    def run(self) -> PeelTrace:
        while self.remaining:
            self.delete_min()
        return PeelTrace(
            k=self.k,
            n=self.graph.n,
            total_vol=self.total_vol,
            steps=tuple(self.steps),
            deletion_order=tuple(self.deletion_order),
        )


def sweep_select(trace: PeelTrace, method: str = "psmc") -> ClusterResult:
    """Pick the best split along the peel and return its smaller-volume side.

    Every step i exposes the bipartition (S_i, V \\ S_i) where S_i is the
    alive set the i-th deletion was taken from.  Splits where either side
    has zero volume are skipped.  The value of a split is the exact
    conductance cut / min(vol, vol_rest); ties go to the earlier (larger)
    prefix.  The returned cluster always satisfies vol <= vol_rest.
    """
    total = trace.total_vol
    best_num = best_den = 0
    best_index = -1
    admissible = 0
    for i, st in enumerate(trace.steps):
        small = min(st.vol, total - st.vol)
        if small <= 0:
            continue
        if 2 * st.vol <= total:
            admissible += 1
        cut = st.cut if st.cut > 0 else 0
        # exact ratio comparison: cut/small < best_num/best_den
        if best_index < 0 or cut * best_den < best_num * small:
            best_num, best_den = cut, small
            best_index = i
    if best_index < 0:
        raise NoAdmissiblePrefixError("no prefix with a well-defined conductance")
    best_phi = Fraction(best_num, best_den)
    st = trace.steps[best_index]
    if st.vol <= total - st.vol:
        members = trace.deletion_order[best_index:]
    else:
        members = trace.deletion_order[:best_index]
    cluster = VertexSet.from_iterable(trace.n, members)
    return ClusterResult(
        cluster=cluster,
        phi=best_phi,
        g=1 - best_phi,
        step_index=best_index,
        steps_admissible=admissible,
        trace=trace,
        method=method,
    )


def psmc(graph: Graph, k: int, stats: MotifStats | None = None) -> ClusterResult:
    """Exact peeling: returns the minimum-conductance cluster along the peel.

    Raises NoMotifError when the graph holds no k-clique.  Deterministic:
    score ties break toward smaller motif degree, then smaller vertex id.
    """
    degrees = None if stats is None else list(stats.degrees)
    state = PeelState(graph, k, degrees=degrees)
    trace = state.run()
    return sweep_select(trace, method="psmc")


def trace_to_csv(trace: PeelTrace, stream: IO[str], graph: Graph | None = None) -> None:
    """Per-step CSV: step, deleted vertex (original id), score, vol, cut, g, phi."""
    stream.write("step,deleted_vertex,mr_num,mr_den,vol,cut,g_num,g_den,admissible,phi\n")
    total = trace.total_vol
    ids = graph.original_ids if graph is not None else None
    for i, st in enumerate(trace.steps, start=1):
        vertex = ids[st.vertex] if ids is not None else st.vertex
        if st.score_num is None:
            mr_num = mr_den = ""
        else:
            mr = Fraction(st.score_num, st.score_den)
            mr_num, mr_den = str(mr.numerator), str(mr.denominator)
        if st.vol > 0:
            g = Fraction(st.vol - st.cut, st.vol)
            g_num, g_den = str(g.numerator), str(g.denominator)
        else:
            g_num = g_den = ""
        admissible = int(st.vol > 0 and 2 * st.vol <= total)
        small = min(st.vol, total - st.vol)
        phi = f"{float(Fraction(max(st.cut, 0), small)):.12g}" if small > 0 else ""
        stream.write(
            f"{i},{vertex},{mr_num},{mr_den},{st.vol},{st.cut},"
            f"{g_num},{g_den},{admissible},{phi}\n"
        )
