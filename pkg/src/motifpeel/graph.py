"""Immutable simple undirected graphs in compressed adjacency form.

A :class:`Graph` stores sorted per-vertex neighbor lists over dense vertex
ids 0..n-1, plus degeneracy metadata computed once at construction: the
degeneracy ``delta`` and a removal order in which every vertex has at most
``delta`` neighbors appearing later.  External (sparse) vertex ids from an
edge-list file are compacted in first-appearance order and the mapping is
retained in ``original_ids``.

Graphs are immutable after construction and safe to share across threads.
"""

from __future__ import annotations

import heapq
from collections.abc import Iterable, Iterator
from typing import IO

from .errors import EdgeListParseError


class VertexSet:
    """A set of vertices over 0..n-1 backed by an integer bitmap."""

    __slots__ = ("n", "mask")

    def __init__(self, n: int, mask: int = 0):
        self.n = n
        self.mask = mask

    @classmethod
    def from_iterable(cls, n: int, vertices: Iterable[int]) -> "VertexSet":
        bits = bytearray((n + 7) // 8)
        for v in vertices:
            if not 0 <= v < n:
                raise ValueError(f"vertex {v} out of range 0..{n - 1}")
            bits[v >> 3] |= 1 << (v & 7)
        return cls(n, int.from_bytes(bytes(bits), "little"))

    @classmethod
    def full(cls, n: int) -> "VertexSet":
        return cls(n, (1 << n) - 1)

    def __contains__(self, v: int) -> bool:
        return 0 <= v < self.n and (self.mask >> v) & 1 == 1

    def __iter__(self) -> Iterator[int]:
        mask = self.mask
        while mask:
            low = mask & -mask
            yield low.bit_length() - 1
            mask ^= low

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, VertexSet)
            and self.n == other.n
            and self.mask == other.mask
        )

    def __hash__(self) -> int:
        return hash((self.n, self.mask))

    def __repr__(self) -> str:
        return f"VertexSet(n={self.n}, members={sorted(self)})"

    def complement(self) -> "VertexSet":
        return VertexSet(self.n, self.mask ^ ((1 << self.n) - 1))

    def to_set(self) -> set[int]:
        return set(self)


def as_vertex_set(n: int, s: "VertexSet | Iterable[int]") -> VertexSet:
    """Normalize an iterable of vertex ids (or a VertexSet) to a VertexSet."""
    if isinstance(s, VertexSet):
        if s.n != n:
            raise ValueError(f"VertexSet over {s.n} vertices used with n={n}")
        return s
    return VertexSet.from_iterable(n, s)


class Graph:
    """Simple undirected graph with degeneracy metadata.

    Invariants: no self-loops, no parallel edges, adjacency lists strictly
    ascending, and ``u in adj[v]`` iff ``v in adj[u]``.
    """

    __slots__ = (
        "n",
        "m",
        "adj",
        "degeneracy",
        "degeneracy_order",
        "original_ids",
        "_adj_sets",
        "_order_pos",
        "_out_lists",
        "_out_sets",
        "_tri_cache",
    )

    def __init__(self, adj: list[list[int]], original_ids: list[int] | None = None):
        self.n = len(adj)
        self.adj = adj
        self.m = sum(len(a) for a in adj) // 2
        self.original_ids = (
            list(range(self.n)) if original_ids is None else list(original_ids)
        )
        if len(self.original_ids) != self.n:
            raise ValueError("original_ids length must equal vertex count")
        self.degeneracy, self.degeneracy_order = degeneracy_order_of(adj)
        self._adj_sets: list[set[int]] | None = None
        self._order_pos: list[int] | None = None
        self._out_lists: list[list[int]] | None = None
        self._out_sets: list[set[int]] | None = None
        self._tri_cache = None  # TriangleIndex, built lazily by the motif engine

    @classmethod
    def from_edges(
        cls,
        edges: Iterable[tuple[int, int]],
        n: int | None = None,
        original_ids: list[int] | None = None,
    ) -> "Graph":
        """Build a graph from (u, v) pairs over dense ids, dropping loops/dups."""
        pairs = set()
        max_v = -1
        for u, v in edges:
            if u == v:
                continue
            if u > v:
                u, v = v, u
            pairs.add((u, v))
            if v > max_v:
                max_v = v
        count = max_v + 1 if n is None else n
        if n is not None and max_v >= n:
            raise ValueError(f"edge endpoint {max_v} exceeds declared n={n}")
        adj: list[list[int]] = [[] for _ in range(count)]
        for u, v in pairs:
            adj[u].append(v)
            adj[v].append(u)
        for a in adj:
            a.sort()
        return cls(adj, original_ids)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def edges(self) -> Iterator[tuple[int, int]]:
        """All edges as (u, v) with u < v, ascending."""
        for u in range(self.n):
            for v in self.adj[u]:
                if v > u:
                    yield (u, v)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency_sets()[u]

    def adjacency_sets(self) -> list[set[int]]:
        if self._adj_sets is None:
            self._adj_sets = [set(a) for a in self.adj]
        return self._adj_sets

    def order_positions(self) -> list[int]:
        """Rank of each vertex in the degeneracy removal order."""
        if self._order_pos is None:
            pos = [0] * self.n
            for i, v in enumerate(self.degeneracy_order):
                pos[v] = i
            self._order_pos = pos
        return self._order_pos

    def ordered_out_lists(self) -> list[list[int]]:
        """Neighbors later in the degeneracy order (the search DAG); <= delta each."""
        if self._out_lists is None:
            pos = self.order_positions()
            self._out_lists = [
                [v for v in self.adj[u] if pos[v] > pos[u]] for u in range(self.n)
            ]
        return self._out_lists

    def ordered_out_sets(self) -> list[set[int]]:
        if self._out_sets is None:
            self._out_sets = [set(o) for o in self.ordered_out_lists()]
        return self._out_sets

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Graph)
            and self.adj == other.adj
            and self.original_ids == other.original_ids
        )

    def __hash__(self) -> int:  # identity hashing; graphs are mutable-free but big
        return id(self)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m}, degeneracy={self.degeneracy})"


def degeneracy_order_of(adj: list[list[int]]) -> tuple[int, list[int]]:
    """Repeated minimum-degree removal; ties go to the smallest vertex id.

    Returns (delta, order) where delta is the largest residual degree seen at
    removal time.  Every vertex has at most delta neighbors later in `order`.
    """
    n = len(adj)
    deg = [len(a) for a in adj]
    removed = bytearray(n)
    heap = [(deg[v], v) for v in range(n)]
    heapq.heapify(heap)
    order: list[int] = []
    delta = 0
    while heap:
        d, v = heapq.heappop(heap)
        if removed[v] or d != deg[v]:
            continue
        removed[v] = 1
        if d > delta:
            delta = d
        order.append(v)
        for w in adj[v]:
            if not removed[w]:
                deg[w] -= 1
                heapq.heappush(heap, (deg[w], w))
    return delta, order


def induced_neighbors(graph: Graph, v: int, s: "VertexSet | Iterable[int]") -> list[int]:
    """Sorted neighbors of v that lie inside the vertex set s."""
    vs = as_vertex_set(graph.n, s)
    return [u for u in graph.adj[v] if u in vs]


def ingest_edge_list(stream: IO[str] | Iterable[str], declared_n: int | None = None) -> Graph:
    """Parse a whitespace-separated edge list ('#' starts a comment line).

    Self-loops are dropped and duplicate / reversed-duplicate edges merged.
    Vertex ids are compacted to 0..n-1 in first-appearance order, with the
    original ids retained on the graph.  When ``declared_n`` is given the file
    must already use dense ids in 0..declared_n-1; no compaction happens and
    isolated vertices up to declared_n are materialized.

    Raises EdgeListParseError (with the line number) on non-integer tokens or
    lines that do not hold exactly two fields.  An empty file is a valid empty
    graph.
    """
    id_map: dict[int, int] = {}
    original: list[int] = []
    edges: list[tuple[int, int]] = []

    def dense(ext: int) -> int:
        idx = id_map.get(ext)
        if idx is None:
            idx = len(original)
            id_map[ext] = idx
            original.append(ext)
        return idx

    for line_no, line in enumerate(stream, start=1):
        text = line.strip()
        if not text or text.startswith("#"):
            continue
        fields = text.split()
        if len(fields) != 2:
            raise EdgeListParseError(line_no, f"expected 2 fields, got {len(fields)}")
        try:
            a, b = int(fields[0]), int(fields[1])
        except ValueError:
            raise EdgeListParseError(line_no, f"non-integer token in {fields!r}") from None
        if declared_n is not None:
            if not (0 <= a < declared_n and 0 <= b < declared_n):
                raise EdgeListParseError(
                    line_no, f"vertex id outside 0..{declared_n - 1}"
                )
            edges.append((a, b))
        else:
            edges.append((dense(a), dense(b)))

    if declared_n is not None:
        return Graph.from_edges(edges, n=declared_n)
    return Graph.from_edges(edges, n=len(original), original_ids=original)


def write_edge_list(graph: Graph, stream: IO[str]) -> None:
    """Serialize as one 'u v' line per edge, using original ids, u-side ascending."""
    orig = graph.original_ids
    for u, v in graph.edges():
        stream.write(f"{orig[u]} {orig[v]}\n")
