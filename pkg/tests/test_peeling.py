import io
import random
from fractions import Fraction

import pytest

from motifpeel import (
    Graph,
    NoAdmissiblePrefixError,
    NoMotifError,
    PeelState,
    cut_and_vol,
    psmc,
    sweep_select,
    trace_to_csv,
)
from motifpeel.peeling import PeelStep, PeelTrace
from tests.conftest import (
    brute_cut,
    brute_score,
    dumbbell,
    er_graph,
    instance_sets,
)


class TestPeelState:
    def test_initial_numerators_and_volume(self):
        g = er_graph(12, 0.4, 1)
        st = PeelState(g, 3)
        assert st.numerators == [2 * d for d in st.degrees]
        assert st.vol == sum(st.degrees)
        assert st.cut == 0
        # g starts at exactly 1
        assert Fraction(st.vol - st.cut, st.vol) == 1

    def test_no_motif_raises(self):
        g = Graph.from_edges([(0, 1), (1, 2), (2, 3)])  # path, no triangle
        with pytest.raises(NoMotifError):
            PeelState(g, 3)

    def test_zero_degree_vertices_peel_first_in_id_order(self):
        # triangle 2,3,4 plus pendant path 0-1 attached at 2
        g = Graph.from_edges([(0, 1), (1, 2), (2, 3), (2, 4), (3, 4)])
        st = PeelState(g, 3)
        first, second = st.delete_min(), st.delete_min()
        assert (first, second) == (0, 1)
        assert st.vol == sum(st.degrees)  # untouched by zero-degree peels
        assert st.cut == 0

    def test_score_range_stays_within_zero_two(self):
        for seed in range(6):
            g = er_graph(13, 0.45, 700 + seed)
            for k in (2, 3, 4):
                try:
                    st = PeelState(g, k)
                except NoMotifError:
                    continue
                while st.remaining:
                    for v in st.alive_vertices():
                        s = st.score(v)
                        if s is not None:
                            assert 0 <= s <= 2
                    st.delete_min()

    @pytest.mark.parametrize("k", [2, 3, 4])
    def test_incremental_state_matches_recomputation(self, k):
        # exact equality of numerators, vol, cut, and g after every step
        for seed in range(6):
            g = er_graph(12, 0.45, 800 + seed)
            inst = instance_sets(g, k)
            if not inst:
                continue
            degrees = [sum(1 for i in inst if u in i) for u in range(g.n)]
            st = PeelState(g, k)
            assert list(st.degrees) == degrees
            while st.remaining:
                st.delete_min()
                alive = set(st.alive_vertices())
                assert st.vol == sum(degrees[u] for u in alive)
                assert st.cut == brute_cut(inst, alive)
                for u in alive:
                    expect = brute_score(inst, u, alive)
                    if expect is not None:
                        assert st.score(u) == expect

    def test_g_update_rule_holds_stepwise(self):
        # g(next) = (vol*g - score*deg) / (vol - deg) at every deletion
        g = er_graph(12, 0.5, 900)
        st = PeelState(g, 3)
        while st.remaining:
            vol_before, cut_before = st.vol, st.cut
            u = st.delete_min()
            if st.degrees[u] == 0 or st.vol == 0:
                continue
            g_before = Fraction(vol_before - cut_before, vol_before)
            step = st.steps[-1]
            score = Fraction(step.score_num, step.score_den)
            deg = st.degrees[u]
            lhs = Fraction(st.vol - st.cut, st.vol)
            rhs = (vol_before * g_before - score * deg) / (vol_before - deg)
            assert lhs == rhs

    def test_deletion_order_is_permutation(self):
        g = er_graph(15, 0.4, 1000)
        trace = PeelState(g, 3).run()
        assert sorted(trace.deletion_order) == list(range(g.n))
        assert len(trace.steps) == g.n


class TestSweep:
    def test_bridged_triangles_finds_zero_cut(self, bridged_triangles):
        res = psmc(bridged_triangles, 3)
        assert res.phi == 0
        assert sorted(res.cluster) in ([0, 1, 2], [3, 4, 5])
        assert res.g == 1

    def test_k6_stepwise_cut_matches_direct_recount(self):
        g = Graph.from_edges([(u, v) for u in range(6) for v in range(u + 1, 6)])
        st = PeelState(g, 3)
        while st.remaining:
            st.delete_min()
            alive = st.alive_vertices()
            if alive:
                cut, vol, _ = cut_and_vol(g, 3, alive)
                assert (st.cut, st.vol) == (cut, vol)

    def test_single_triangle_returns_one_vertex(self, triangle):
        # V itself is inadmissible (empty complement); 2-vertex prefixes have
        # larger volume than their complement; phi = 1 in all cases
        res = psmc(triangle, 3)
        assert res.phi == 1
        assert len(res.cluster) == 1

    def test_dumbbell_classic_conductance(self):
        side = 5
        res = psmc(dumbbell(side), 2)
        assert res.phi == Fraction(1, side * (side - 1) + 1)
        assert sorted(res.cluster) in (
            [list(range(side)), list(range(side, 2 * side))]
        )

    def test_cluster_is_smaller_volume_side(self):
        for seed in range(8):
            g = er_graph(13, 0.5, 1100 + seed)
            for k in (2, 3):
                try:
                    res = psmc(g, k)
                except NoMotifError:
                    continue
                cut, vol, vol_rest = cut_and_vol(g, k, res.cluster)
                assert vol <= vol_rest
                assert Fraction(cut, min(vol, vol_rest)) == res.phi

    def test_oversized_prefix_selected_through_complement(self, triangle_plus_k4):
        # the triangle peels away first; the zero-cut split only appears as
        # the complement of the surviving K4 prefix
        res = psmc(triangle_plus_k4, 3)
        assert res.phi == 0
        assert sorted(res.cluster) == [0, 1, 2]

    def test_no_admissible_prefix_error(self):
        trace = PeelTrace(
            k=3,
            n=1,
            total_vol=1,
            steps=(PeelStep(0, 2, 1, 1, 0),),
            deletion_order=(0,),
        )
        # single prefix S = V has zero complement volume
        with pytest.raises(NoAdmissiblePrefixError):
            sweep_select(trace)

    def test_ties_pick_earlier_prefix(self):
        steps = (
            PeelStep(0, 8, 4, 12, 2),  # phi = 2/6... vol 12 of 16 -> small side 4 -> 2/4
            PeelStep(1, 4, 4, 8, 2),   # small side 8 = total/2 -> phi = 2/8
            PeelStep(2, 2, 4, 4, 1),   # phi = 1/4 = 2/8, tie -> earlier wins
        )
        trace = PeelTrace(k=3, n=3, total_vol=16, steps=steps, deletion_order=(0, 1, 2))
        res = sweep_select(trace)
        assert res.step_index == 1

    def test_guarantee_on_adversarial_components(self):
        from motifpeel import certify_ratio

        # asymmetric motif components exercise the complement-side sweep
        cases = []
        tri = [(0, 1), (0, 2), (1, 2)]
        k4 = [(u, v) for u in range(3, 7) for v in range(u + 1, 7)]
        cases.append(Graph.from_edges(tri + k4))
        diamond = [(3, 4), (3, 5), (4, 5), (4, 6), (5, 6)]
        cases.append(Graph.from_edges(tri + diamond))
        k5 = [(u, v) for u in range(4, 9) for v in range(u + 1, 9)]
        cases.append(Graph.from_edges([(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)] + k5))
        for g in cases:
            cert = certify_ratio(g, 3)
            assert cert.holds


class TestTraceCsv:
    def test_columns_and_row_count(self, bridged_triangles):
        res = psmc(bridged_triangles, 3)
        buf = io.StringIO()
        trace_to_csv(res.trace, buf, bridged_triangles)
        lines = buf.getvalue().strip().split("\n")
        assert lines[0] == (
            "step,deleted_vertex,mr_num,mr_den,vol,cut,g_num,g_den,admissible,phi"
        )
        assert len(lines) == 1 + bridged_triangles.n

    def test_undefined_score_prints_empty_fields(self):
        g = Graph.from_edges([(0, 1), (1, 2), (2, 3), (2, 4), (3, 4)])
        res = psmc(g, 3)
        buf = io.StringIO()
        trace_to_csv(res.trace, buf, g)
        first = buf.getvalue().split("\n")[1].split(",")
        assert first[1] == "0"  # zero-degree vertex 0 peels first
        assert first[2] == "" and first[3] == ""


class TestDeterminism:
    def test_identical_runs(self):
        g = er_graph(40, 0.3, 1234)
        a = psmc(g, 3)
        b = psmc(g, 3)
        assert a.trace.deletion_order == b.trace.deletion_order
        assert a.phi == b.phi
        assert sorted(a.cluster) == sorted(b.cluster)


def test_exact_greedy_matches_bruteforce_order():
    """The deleted vertex is always the true argmin under the tie rules."""
    for seed in range(4):
        g = er_graph(10, 0.45, 1300 + seed)
        for k in (2, 3, 4):
            inst = instance_sets(g, k)
            if not inst:
                continue
            st = PeelState(g, k)
            alive = set(range(g.n))
            while st.remaining:
                best = None
                for u in sorted(alive):
                    s = brute_score(inst, u, alive)
                    key = (
                        (0, 0, 0, u) if s is None
                        else (1, s, st.degrees[u], u)
                    )
                    if best is None or _key_lt(key, best):
                        best = key
                got = st.delete_min()
                assert got == best[3]
                alive.discard(got)


def _key_lt(a, b):
    if a[0] != b[0]:
        return a[0] < b[0]
    if a[0] == 1 and a[1] != b[1]:
        return a[1] < b[1]
    return (a[2], a[3]) < (b[2], b[3])
