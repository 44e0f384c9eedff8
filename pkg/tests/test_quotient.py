import numpy as np
import pytest

from distfactor.graphs import complete_graph, extremal_graph, path_graph
from distfactor.quotient import (
    NotEquitableError,
    extremal_quotient_matrix,
    perron_ratio_report,
    quotient_matrix,
    quotient_perron,
    radius_threshold_report,
    validate_partition,
    verify_quotient_equality,
)
from distfactor.spectra import distance_matrix, spectral_radius


class TestQuotientMatrix:
    def test_complete_four_two_blocks(self):
        q = quotient_matrix(distance_matrix(complete_graph(4)), [[0, 1], [2, 3]])
        assert q.matrix.tolist() == [[1.0, 2.0], [2.0, 1.0]]
        assert q.equitable and q.block_sizes == (2, 2)

    def test_path_three_end_blocks(self):
        q = quotient_matrix(distance_matrix(path_graph(3)), [[0, 2], [1]])
        assert q.matrix.tolist() == [[2.0, 1.0], [2.0, 0.0]]
        assert q.equitable

    def test_path_four_not_equitable(self):
        q = quotient_matrix(distance_matrix(path_graph(4)), [[0, 1], [2, 3]])
        assert not q.equitable

    def test_partition_validation(self):
        m = distance_matrix(complete_graph(3))
        with pytest.raises(ValueError):
            quotient_matrix(m, [[0, 1]])
        with pytest.raises(ValueError):
            quotient_matrix(m, [[0, 1], [1, 2]])
        with pytest.raises(ValueError):
            quotient_matrix(m, [[0, 1, 2], []])
        with pytest.raises(ValueError):
            validate_partition(3, [[0, 1], [5]])


class TestExtremalQuotient:
    def test_order_eleven_closed_form(self):
        expected = [[0, 1, 7, 2], [1, 0, 7, 2], [1, 1, 6, 4], [1, 1, 14, 2]]
        assert extremal_quotient_matrix(11, 1).tolist() == expected

    def test_r_two_closed_form(self):
        expected = [[2, 2, 11, 3], [2, 1, 11, 3], [2, 2, 10, 6], [2, 2, 22, 4]]
        assert extremal_quotient_matrix(18, 2).tolist() == expected

    @pytest.mark.parametrize("n,r", [(12, 1), (11, 1), (18, 2), (25, 3), (30, 2)])
    def test_matches_computed_quotient(self, n, r):
        g, layout = extremal_graph(n, r)
        computed = quotient_matrix(distance_matrix(g), layout.blocks())
        assert computed.equitable
        assert (computed.matrix == extremal_quotient_matrix(n, r)).all()

    def test_parameter_validation(self):
        with pytest.raises(ValueError):
            extremal_quotient_matrix(4, 1)
        with pytest.raises(ValueError):
            extremal_quotient_matrix(12, 0)


class TestQuotientEquality:
    def test_extremal_instance(self):
        g, layout = extremal_graph(11, 1)
        rep = verify_quotient_equality(distance_matrix(g), layout.blocks())
        assert rep.perron_match and rep.eigen_containment
        assert abs(rep.perron_full - rep.perron_quotient) <= 1e-8 * rep.perron_full

    def test_complete_graph_any_partition(self):
        m = distance_matrix(complete_graph(6))
        rep = verify_quotient_equality(m, [[0, 1, 2], [3, 4, 5]])
        assert rep.perron_match and rep.eigen_containment
        for value in rep.quotient_eigenvalues:
            assert min(abs(value - 5), abs(value + 1)) <= 1e-8

    def test_not_equitable_raises(self):
        with pytest.raises(NotEquitableError):
            verify_quotient_equality(distance_matrix(path_graph(4)), [[0, 1], [2, 3]])

    def test_quotient_perron_routes_agree(self):
        res = quotient_perron(extremal_quotient_matrix(11, 1), (1, 1, 7, 2))
        g, _ = extremal_graph(11, 1)
        assert abs(res.value - spectral_radius(distance_matrix(g)).value) <= 1e-8 * res.value


class TestRatioReport:
    @pytest.mark.parametrize("n,r", [(11, 1), (12, 1), (18, 2), (26, 3)])
    def test_ratio_identity(self, n, r):
        rep = perron_ratio_report(n, r)
        assert rep.ok and rep.abs_error <= 1e-8
        assert rep.max_equation_residual <= 1e-8
        a, b, c, d = rep.vector
        assert min(a, b, c, d) > 0
        assert d > c  # trailing independent block always carries more weight


class TestThresholdReport:
    def test_boundary_order_not_applicable(self):
        rep = radius_threshold_report(11, 1)
        assert not rep.applicable and rep.threshold is None

    def test_large_order_both_sufficient(self):
        rep = radius_threshold_report(26, 1)
        assert rep.applicable
        assert rep.threshold == pytest.approx(6 + 48 / 15)
        assert rep.row_sum_sufficient and rep.radius_sufficient

    def test_near_boundary_shortfall_recorded(self):
        # Just above the boundary order the closed-form threshold (54 here)
        # exceeds both the row-sum bound and the actual radius; the report
        # records that shortfall instead of asserting the reduction.
        rep = radius_threshold_report(12, 1)
        assert rep.applicable and rep.threshold == pytest.approx(54.0)
        assert rep.row_sum_value == 11
        assert rep.row_sum_sufficient is False
        assert rep.radius == pytest.approx(14.341045904, abs=1e-6)
        assert rep.radius_sufficient is False

    def test_order_below_boundary_rejected(self):
        with pytest.raises(ValueError):
            radius_threshold_report(10, 1)
