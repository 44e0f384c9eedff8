import math

import numpy as np
import pytest

from distfactor.corpus import connected_graphs_upto
from distfactor.graphs import (
    Graph,
    complete_graph,
    cycle_graph,
    delete,
    disjoint_union,
    empty_graph,
    is_connected,
    path_graph,
)
from distfactor.spectra import (
    DisconnectedGraphError,
    NonConvergenceError,
    all_pairs_distances,
    distance_matrix,
    dq_matrix,
    full_spectrum,
    spectral_radius,
    transmission_report,
)

P3_RADIUS = 1 + math.sqrt(3)  # root of x^3 - 6x - 4 = (x+2)(x^2 - 2x - 2)


class TestDistances:
    def test_complete_graph(self):
        data = all_pairs_distances(complete_graph(4))
        assert (data.dist + np.eye(4, dtype=int) == 1).all()
        assert data.transmissions == (3, 3, 3, 3)
        assert data.sigma == 6 and data.diameter == 1

    def test_path(self):
        data = all_pairs_distances(path_graph(3))
        assert data.transmissions == (3, 2, 3)
        assert data.sigma == 4

    def test_cycle(self):
        data = all_pairs_distances(cycle_graph(4))
        assert data.transmissions == (4, 4, 4, 4)
        assert data.sigma == 8 and data.diameter == 2

    def test_disconnected_rejected(self):
        with pytest.raises(DisconnectedGraphError):
            all_pairs_distances(disjoint_union(complete_graph(2), complete_graph(2)))

    def test_invariants_on_corpus(self):
        for g in connected_graphs_upto(6):
            data = all_pairs_distances(g)
            d = data.dist
            assert (d == d.T).all()
            assert (np.diag(d) == 0).all()
            if g.n > 1:
                assert d[~np.eye(g.n, dtype=bool)].min() >= 1
            # triangle inequality
            for k in range(g.n):
                assert (d <= d[:, [k]] + d[[k], :]).all()
            assert data.transmissions == tuple(d.sum(axis=1))
            assert 2 * data.sigma == sum(data.transmissions)


class TestDqMatrix:
    def test_cycle_row_sums(self):
        assert (dq_matrix(cycle_graph(4)).sum(axis=1) == 8).all()

    def test_single_edge(self):
        assert dq_matrix(complete_graph(2)).tolist() == [[1, 1], [1, 1]]

    def test_path_diagonal(self):
        assert np.diag(dq_matrix(path_graph(3))).tolist() == [3, 2, 3]


class TestSpectralRadius:
    @pytest.mark.parametrize("n", range(2, 13))
    def test_complete_graph_closed_form(self, n):
        res = spectral_radius(distance_matrix(complete_graph(n)))
        assert abs(res.value - (n - 1)) <= 1e-9

    def test_path_three_closed_form(self):
        res = spectral_radius(distance_matrix(path_graph(3)))
        assert abs(res.value - P3_RADIUS) <= 1e-9

    def test_dq_cycle(self):
        assert abs(spectral_radius(dq_matrix(cycle_graph(4))).value - 8) <= 1e-9

    def test_perron_vector_properties(self):
        res = spectral_radius(distance_matrix(path_graph(5)))
        assert res.vector.min() > 0
        assert abs(np.linalg.norm(res.vector) - 1) <= 1e-12

    def test_row_sum_bracketing(self):
        for g in [path_graph(6), cycle_graph(7), complete_graph(5)]:
            m = distance_matrix(g)
            value = spectral_radius(m).value
            sums = m.sum(axis=1)
            assert sums.min() - 1e-9 <= value <= sums.max() + 1e-9

    def test_negative_entries_rejected(self):
        with pytest.raises(ValueError):
            spectral_radius(np.array([[0.0, -1.0], [-1.0, 0.0]]))

    def test_zero_matrix(self):
        res = spectral_radius(np.zeros((3, 3)))
        assert res.value == 0.0

    def test_bipartite_oscillation_raises(self):
        # Adjacency of a path on three vertices never settles: the +/- pair
        # of extreme eigenvalues keeps the residual large.
        adjacency = np.array([[0, 1, 0], [1, 0, 1], [0, 1, 0]], dtype=float)
        with pytest.raises(NonConvergenceError):
            spectral_radius(adjacency, max_iterations=200)


class TestFullSpectrum:
    def test_complete_three(self):
        assert np.allclose(full_spectrum(distance_matrix(complete_graph(3))), [2, -1, -1])

    def test_path_three(self):
        expected = [P3_RADIUS, 1 - math.sqrt(3), -2.0]
        assert np.allclose(full_spectrum(distance_matrix(path_graph(3))), expected)

    def test_zero_matrix(self):
        assert full_spectrum(np.zeros((2, 2))).tolist() == [0.0, 0.0]

    def test_trace_identity_and_agreement(self):
        for g in connected_graphs_upto(5):
            m = distance_matrix(g)
            eigs = full_spectrum(m)
            assert abs(eigs.sum() - np.trace(m)) <= 1e-8
            assert abs(eigs[0] - spectral_radius(m).value) <= 1e-8

    def test_asymmetric_rejected(self):
        with pytest.raises(ValueError):
            full_spectrum(np.array([[0.0, 1.0], [2.0, 0.0]]))


class TestTransmissionReport:
    def test_cycle_regular_equality(self):
        rep = transmission_report(cycle_graph(4))
        assert rep.transmission_regular
        mu = spectral_radius(dq_matrix(cycle_graph(4))).value
        assert abs(mu - rep.four_sigma_over_n) <= 1e-9

    def test_path_three_wiener_bound(self):
        rep = transmission_report(path_graph(3))
        assert rep.two_wiener_over_n == pytest.approx(8 / 3)
        assert spectral_radius(distance_matrix(path_graph(3))).value >= rep.two_wiener_over_n

    def test_path_four_end_vertex_strict(self):
        rep = transmission_report(path_graph(4))
        end = rep.vertex_bounds[0]
        assert end.transmission == 6 and end.lower_bound == 5
        assert end.transmission > end.lower_bound and end.eccentricity > 2

    def test_complement_flagged_when_disconnected(self):
        rep = transmission_report(complete_graph(4))
        assert not rep.complement_connected
        assert rep.complement_sigma is None and rep.complement_bound_ok is None

    def test_complement_bound_when_connected(self):
        rep = transmission_report(cycle_graph(5))
        assert rep.complement_connected
        assert rep.complement_sigma >= rep.complement_sigma_lower_bound


class TestEdgeMonotonicity:
    def test_strict_increase_on_samples(self):
        for g in [cycle_graph(5), complete_graph(4), cycle_graph(6)]:
            base = spectral_radius(distance_matrix(g)).value
            for e in g.sorted_edges():
                reduced, _ = delete(g, edges=[e])
                if is_connected(reduced):
                    increased = spectral_radius(distance_matrix(reduced)).value
                    assert increased - base > 1e-9


class TestCorpusInvariants:
    def test_radius_bounds_sweep(self):
        """Row-sum bracketing, Wiener bounds, the regularity equality case, and
        the per-vertex transmission bound over every connected graph with at
        most 8 vertices."""
        for g in connected_graphs_upto(8):
            data = all_pairs_distances(g)
            n = g.n
            lam = spectral_radius(data.dist).value
            dq = data.dist + np.diag(np.asarray(data.transmissions))
            mu = spectral_radius(dq).value
            lo, hi = min(data.transmissions), max(data.transmissions)
            assert lo - 1e-9 <= lam <= hi + 1e-9
            assert lam >= 2 * data.sigma / n - 1e-9
            assert mu >= 4 * data.sigma / n - 1e-9
            regular = lo == hi
            equality = abs(mu - 4 * data.sigma / n) <= 1e-9
            assert regular == equality
            deg = g.degrees()
            for v in range(n):
                bound = 2 * (n - 1) - deg[v]
                assert data.transmissions[v] >= bound
                ecc = int(data.dist[v].max())
                assert (data.transmissions[v] == bound) == (ecc <= 2)
