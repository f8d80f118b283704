"""Shared fixtures and independent brute-force oracles for the test suite.

The helpers here deliberately avoid the library's clique machinery: cliques
come from an O(n^k) subset checker, and all set-local quantities are counted
straight from the instance list.  Expected values asserted in the tests are
computed by these oracles (or by hand where noted), never by the code paths
under test.
"""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import combinations

import pytest

from motifpeel import Graph


def naive_cliques(graph: Graph, k: int) -> list[tuple[int, ...]]:
    """All k-cliques by checking every k-subset; independent oracle."""
    adj = [set(a) for a in graph.adj]
    found = []
    for combo in combinations(range(graph.n), k):
        if all(b in adj[a] for a, b in combinations(combo, 2)):
            found.append(combo)
    return found


def instance_sets(graph: Graph, k: int) -> list[frozenset[int]]:
    return [frozenset(c) for c in naive_cliques(graph, k)]


def brute_degree(instances, u) -> int:
    return sum(1 for inst in instances if u in inst)


def brute_mj(instances, u, s: set[int], j: int) -> int:
    """Instances containing u with exactly j vertices inside s."""
    return sum(1 for inst in instances if u in inst and len(inst & s) == j)


def brute_cut(instances, s: set[int]) -> int:
    return sum(1 for inst in instances if inst & s and inst - s)


def brute_vol(instances, s: set[int]) -> int:
    return sum(len(inst & s) for inst in instances)


def brute_score(instances, u, s: set[int]) -> Fraction | None:
    """Retention score of u in s from the raw instance list."""
    deg = brute_degree(instances, u)
    if deg == 0:
        return None
    inside = sum(1 for inst in instances if u in inst and inst <= s)
    sole = sum(1 for inst in instances if u in inst and inst & s == {u})
    return Fraction(deg + inside - sole, deg)


def er_graph(n: int, p: float, seed: int) -> Graph:
    """Test-side ER sampler (independent of the library generators)."""
    rng = random.Random(seed)
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return Graph.from_edges(edges, n=n)


def complete_graph(n: int) -> Graph:
    return Graph.from_edges([(u, v) for u in range(n) for v in range(u + 1, n)], n=n)


@pytest.fixture
def triangle() -> Graph:
    return Graph.from_edges([(0, 1), (1, 2), (0, 2)])


@pytest.fixture
def k4() -> Graph:
    return complete_graph(4)


@pytest.fixture
def k5() -> Graph:
    return complete_graph(5)


@pytest.fixture
def double_triangle() -> Graph:
    """Two triangles sharing the edge (1, 2): vertices 0,1,2 and 1,2,3."""
    return Graph.from_edges([(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)])


@pytest.fixture
def bridged_triangles() -> Graph:
    """Two disjoint triangles {0,1,2}, {3,4,5} joined by the edge (2, 3)."""
    return Graph.from_edges(
        [(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5), (2, 3)]
    )


@pytest.fixture
def triangle_plus_k4() -> Graph:
    """A triangle and a K4 with no connection; asymmetric motif components."""
    edges = [(0, 1), (0, 2), (1, 2)]
    edges += [(u, v) for u in range(3, 7) for v in range(u + 1, 7)]
    return Graph.from_edges(edges)


def dumbbell(side: int) -> Graph:
    """Two complete graphs on `side` vertices joined by a single edge."""
    edges = [(u, v) for u in range(side) for v in range(u + 1, side)]
    edges += [(u + side, v + side) for u in range(side) for v in range(u + 1, side)]
    edges.append((side - 1, side))
    return Graph.from_edges(edges)
