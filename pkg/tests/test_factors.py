from fractions import Fraction

import pytest

from distfactor.corpus import connected_graphs_upto
from distfactor.factors import (
    TooLargeError,
    component_stats,
    edge_threshold,
    fractional_ab_factor,
    fractional_pm_violator,
    half_integral_feasible,
    hall_check,
    has_k_factor,
    id_criterion_violator,
    is_fractional_ab_deleted,
    is_id_factor_critical,
    max_matching,
    tutte_violator,
)
from distfactor.graphs import (
    Graph,
    complete_graph,
    cycle_graph,
    disjoint_union,
    empty_graph,
    extremal_graph,
    join,
    path_graph,
)

STAR = Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)])


class TestComponentStats:
    def test_clique_plus_isolates(self):
        g = disjoint_union(complete_graph(7), empty_graph(2))
        assert component_stats(g) == component_stats(g, removed=())
        stats = component_stats(g)
        assert (stats.components, stats.odd_components, stats.isolated) == (3, 3, 2)

    def test_connected(self):
        stats = component_stats(complete_graph(4))
        assert (stats.components, stats.odd_components, stats.isolated) == (1, 0, 0)

    def test_independent(self):
        stats = component_stats(empty_graph(3))
        assert (stats.components, stats.odd_components, stats.isolated) == (3, 3, 3)


class TestMatching:
    def test_complete_four(self):
        w = max_matching(complete_graph(4))
        assert w.exists and len(w.edges) == 2

    def test_star_not_perfect(self):
        w = max_matching(STAR)
        assert not w.exists and len(w.edges) == 1 and w.deficiency == 2

    def test_six_cycle(self):
        w = max_matching(cycle_graph(6))
        assert w.exists and len(w.edges) == 3

    def test_matching_edges_disjoint(self):
        for g in connected_graphs_upto(6):
            w = max_matching(g)
            seen = set()
            for u, v in w.edges:
                assert u not in seen and v not in seen
                seen.update((u, v))


class TestTutte:
    def test_star_center(self):
        w = tutte_violator(STAR)
        assert not w.exists and w.blocking_set == (0,) and w.deficiency == 3

    def test_complete_four_passes(self):
        assert tutte_violator(complete_graph(4)).exists

    def test_odd_order_empty_set(self):
        w = tutte_violator(path_graph(3))
        assert not w.exists and w.blocking_set == () and w.deficiency == 1

    def test_cap(self):
        with pytest.raises(TooLargeError):
            tutte_violator(empty_graph(25))

    def test_matches_matching_small(self):
        for g in connected_graphs_upto(6):
            assert tutte_violator(g).exists == max_matching(g).exists


class TestHall:
    def test_balanced_complete_bipartite(self):
        g = join(empty_graph(2), empty_graph(2))  # K_{2,2} on labels 0,1 | 2,3
        w = hall_check(g, [0, 1], [2, 3])
        assert w.exists

    def test_star_from_leaves(self):
        w = hall_check(STAR, [1, 2, 3], [0])
        assert not w.exists
        assert w.deficiency == 1 and len(w.blocking_set) == 2  # first violator by size

    def test_path_alternating(self):
        w = hall_check(path_graph(4), [0, 2], [1, 3])
        assert w.exists
        assert max_matching(path_graph(4)).exists

    def test_unbalanced_pass_is_not_perfect(self):
        g = join(empty_graph(1), empty_graph(2))  # K_{1,2}
        w = hall_check(g, [0], [1, 2])
        assert not w.exists and w.blocking_set is None

    def test_non_bipartition_rejected(self):
        with pytest.raises(ValueError):
            hall_check(complete_graph(3), [0, 1], [2])
        with pytest.raises(ValueError):
            hall_check(path_graph(4), [0, 1], [2, 3])


class TestFractionalViolator:
    def test_star_center(self):
        w = fractional_pm_violator(STAR)
        assert not w.exists and w.blocking_set == (0,) and w.deficiency == 3

    def test_odd_cycle_has_fractional_matching(self):
        assert fractional_pm_violator(cycle_graph(5)).exists

    def test_isolated_pair(self):
        w = fractional_pm_violator(empty_graph(2))
        assert not w.exists and w.blocking_set == () and w.deficiency == 2

    def test_matches_exact_solver(self):
        for g in connected_graphs_upto(6):
            assert fractional_pm_violator(g).exists == fractional_ab_factor(g, 1, 1).exists


class TestFractionalFactor:
    def test_path_four_interval(self):
        w = fractional_ab_factor(path_graph(4), 1, 2)
        assert w.exists

    def test_star_infeasible(self):
        assert not fractional_ab_factor(STAR, 1, 1).exists

    def test_odd_cycle_halves(self):
        w = fractional_ab_factor(cycle_graph(5), 1, 1)
        assert w.exists
        values = dict(w.assignment)
        assert all(h == Fraction(1, 2) for h in values.values())

    def test_sums_exact(self):
        for g, a, b in [(path_graph(4), 1, 2), (complete_graph(5), 2, 3), (cycle_graph(6), 1, 2)]:
            w = fractional_ab_factor(g, a, b)
            assert w.exists
            sums = {v: Fraction(0) for v in range(g.n)}
            for (u, v), h in w.assignment:
                assert 0 <= h <= 1
                sums[u] += h
                sums[v] += h
            assert all(a <= s <= b for s in sums.values())

    def test_degree_screen(self):
        w = fractional_ab_factor(disjoint_union(complete_graph(3), empty_graph(1)), 1, 2)
        assert not w.exists and w.blocking_set == (3,)

    def test_parameter_validation(self):
        with pytest.raises(ValueError):
            fractional_ab_factor(STAR, 0, 1)
        with pytest.raises(ValueError):
            fractional_ab_factor(STAR, 2, 1)


class TestHalfIntegralOracle:
    def test_four_cycle(self):
        assert half_integral_feasible(cycle_graph(4), 1, 1).exists

    def test_path_three_infeasible(self):
        assert not half_integral_feasible(path_graph(3), 1, 1).exists

    def test_path_four_interval(self):
        assert half_integral_feasible(path_graph(4), 1, 2).exists

    def test_edge_cap(self):
        with pytest.raises(TooLargeError):
            half_integral_feasible(complete_graph(7), 1, 1)

    def test_agreement_quick(self):
        for g in connected_graphs_upto(5):
            for a, b in [(1, 1), (1, 2), (2, 2)]:
                exact = fractional_ab_factor(g, a, b).exists
                brute = half_integral_feasible(g, a, b).exists
                assert exact == brute, (g.edges, a, b)


class TestDeleted:
    def test_complete_five(self):
        assert is_fractional_ab_deleted(complete_graph(5), 1, 2).exists

    def test_odd_cycle_single_matching_route(self):
        w = is_fractional_ab_deleted(cycle_graph(5), 1, 1)
        assert not w.exists and w.blocking_edge == (0, 1)

    def test_complete_four_robust(self):
        assert is_fractional_ab_deleted(complete_graph(4), 1, 1).exists


class TestKFactor:
    def test_cycle_is_its_own_two_factor(self):
        w = has_k_factor(cycle_graph(6), 2)
        assert w.exists and w.edges == cycle_graph(6).edges

    def test_complete_four_three_factor(self):
        w = has_k_factor(complete_graph(4), 3)
        assert w.exists and w.edges == complete_graph(4).edges

    def test_star_has_no_one_factor(self):
        assert not has_k_factor(STAR, 1).exists

    def test_parity_screen(self):
        w = has_k_factor(cycle_graph(5), 1)
        assert not w.exists and "odd" in w.detail

    def test_degree_screen(self):
        w = has_k_factor(path_graph(4), 2)
        assert not w.exists

    def test_two_factor_of_complete_five(self):
        w = has_k_factor(complete_graph(5), 2)
        assert w.exists
        degrees = [0] * 5
        for u, v in w.edges:
            degrees[u] += 1
            degrees[v] += 1
        assert degrees == [2] * 5

    def test_one_factor_agrees_with_matching(self):
        for g in connected_graphs_upto(6):
            assert has_k_factor(g, 1).exists == max_matching(g).exists


class TestIdFactorCritical:
    def test_complete_five(self):
        assert is_id_factor_critical(complete_graph(5)).exists

    def test_four_cycle_is_not_critical(self):
        # Removing the independent pair {0, 2} leaves the non-adjacent pair
        # {1, 3}, so the definition fails at size two.
        w = is_id_factor_critical(cycle_graph(4))
        assert not w.exists
        assert w.blocking_pair == ((0, 2), ())
        assert w.deficiency == 2
        assert not id_criterion_violator(cycle_graph(4)).exists

    def test_extremal_family_witness(self):
        g, _ = extremal_graph(11, 1)
        w = is_id_factor_critical(g)
        assert not w.exists
        ind, sep = w.blocking_pair
        assert (len(ind), len(sep), w.deficiency) == (1, 1, 3)

    def test_cap(self):
        with pytest.raises(TooLargeError):
            is_id_factor_critical(empty_graph(25))

    def test_deciders_agree_quick(self):
        for g in connected_graphs_upto(5):
            assert is_id_factor_critical(g).exists == id_criterion_violator(g).exists


class TestEdgeThreshold:
    def test_one_factor_bound(self):
        t = edge_threshold("k_factor", 8, 1)
        assert t.threshold == Fraction(22) and t.strict
        assert t.min_edge_count == 23
        assert not t.met_by(22) and t.met_by(23)

    def test_fractional_bound(self):
        t = edge_threshold("fractional", 10, 2)
        assert t.threshold == Fraction(75, 2) and not t.strict
        assert t.min_edge_count == 38

    def test_deleted_bound(self):
        t = edge_threshold("deleted", 7, 1, b=3)
        assert t.threshold == Fraction(33, 2)
        assert t.min_degree_required == 2

    def test_validation(self):
        with pytest.raises(ValueError):
            edge_threshold("fractional", 1, 2)
        with pytest.raises(ValueError):
            edge_threshold("deleted", 7, 1)
        with pytest.raises(ValueError):
            edge_threshold("k_factor", 3, 0)
        with pytest.raises(ValueError):
            edge_threshold("unknown", 5, 1)
