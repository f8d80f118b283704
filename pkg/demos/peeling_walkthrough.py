"""Walk through the peeling algorithm step by step on small graphs.

Shows the retention scores driving each deletion, the running volume/cut,
and how the sweep picks the final cluster.  Run: python demos/peeling_walkthrough.py
"""

from fractions import Fraction

from motifpeel import Graph, PeelState, psmc, sweep_select


def banner(text):
    print("\n" + "=" * 64)
    print(text)
    print("=" * 64)


def show_peel(graph, k, name):
    banner(f"{name}  (n={graph.n}, m={graph.m}, k={k})")
    state = PeelState(graph, k)
    print(f"total motif volume: {state.total_vol}")
    print(f"{'step':>4} {'vertex':>6} {'score':>8} {'vol':>5} {'cut':>5} {'g':>8}")
    while state.remaining:
        scores = {
            v: state.score(v) for v in state.alive_vertices()
        }
        u = state.delete_min()
        s = scores[u]
        shown = f"{s.numerator}/{s.denominator}" if s is not None else "-"
        g = state.g
        g_shown = f"{float(g):.4f}" if g is not None else "-"
        print(f"{len(state.deletion_order):>4} {u:>6} {shown:>8} "
              f"{state.vol:>5} {state.cut:>5} {g_shown:>8}")
    result = sweep_select(state.run(), method="psmc")
    print(f"selected step {result.step_index + 1}: "
          f"cluster {sorted(result.cluster)}, conductance {result.phi} "
          f"({float(result.phi):.4f})")


def main():
    # two triangles joined by a bridge edge: the bridge carries no triangle,
    # so a zero-conductance split exists and the peel must find it
    bridged = Graph.from_edges(
        [(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5), (2, 3)]
    )
    show_peel(bridged, 3, "bridged double triangle")

    # a triangle next to a K4 with no connection at all: the triangle peels
    # away first, and the best split appears as the complement of a prefix
    tri_k4 = Graph.from_edges(
        [(0, 1), (0, 2), (1, 2)]
        + [(u, v) for u in range(3, 7) for v in range(u + 1, 7)]
    )
    show_peel(tri_k4, 3, "triangle + disjoint K4")

    # classic conductance (k = 2) on a dumbbell: two K5 blocks, one bridge
    side = 5
    edges = [(u, v) for u in range(side) for v in range(u + 1, side)]
    edges += [(u + side, v + side) for u in range(side) for v in range(u + 1, side)]
    edges.append((side - 1, side))
    show_peel(Graph.from_edges(edges), 2, "K5-K5 dumbbell, edge motif")
    print(f"\nexpected dumbbell conductance: 1/{side * (side - 1) + 1} "
          f"= {Fraction(1, side * (side - 1) + 1)}")


if __name__ == "__main__":
    main()
