"""Distance matrices, transmissions, and Perron spectral radii.

Distances are exact integers from breadth-first search; only the eigenvalue
work is floating point.  The Perron solver is power iteration certified by
its residual, with a LAPACK full diagonalization available as an independent
cross-check (full_spectrum).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .graphs import Graph, complement, is_connected


class DisconnectedGraphError(ValueError):
    """Distance data is undefined for disconnected graphs."""


class NonConvergenceError(RuntimeError):
    """Power iteration hit its cap; tolerance or cap is misconfigured."""


@dataclass(frozen=True)
class DistanceData:
    """All-pairs hop distances with derived transmissions."""

    dist: np.ndarray              # n x n integer matrix
    transmissions: tuple[int, ...]
    sigma: int                    # graph transmission, equals the Wiener index
    diameter: int


@dataclass(frozen=True)
class SpectralResult:
    value: float
    vector: np.ndarray            # unit Perron eigenvector, entrywise positive
    residual: float
    iterations: int


def all_pairs_distances(g: Graph) -> DistanceData:
    """BFS from every vertex; raises DisconnectedGraphError if any pair is unreachable."""
    n = g.n
    masks = g.adjacency_masks()
    dist = np.zeros((n, n), dtype=np.int64)
    full = (1 << n) - 1
    for src in range(n):
        seen = frontier = 1 << src
        d = 0
        while frontier:
            d += 1
            nxt = 0
            m = frontier
            while m:
                v = (m & -m).bit_length() - 1
                m &= m - 1
                nxt |= masks[v]
            frontier = nxt & ~seen
            seen |= frontier
            m = frontier
            while m:
                v = (m & -m).bit_length() - 1
                m &= m - 1
                dist[src, v] = d
        if seen != full:
            raise DisconnectedGraphError(
                f"vertex {src} does not reach every vertex; distances undefined"
            )
    tr = tuple(int(x) for x in dist.sum(axis=1))
    return DistanceData(
        dist=dist,
        transmissions=tr,
        sigma=sum(tr) // 2,
        diameter=int(dist.max()) if n > 1 else 0,
    )


def distance_matrix(g: Graph) -> np.ndarray:
    return all_pairs_distances(g).dist


def dq_matrix(g: Graph) -> np.ndarray:
    """Distance signless Laplacian: diagonal of transmissions plus the distance matrix."""
    data = all_pairs_distances(g)
    return data.dist + np.diag(np.asarray(data.transmissions, dtype=np.int64))


def spectral_radius(
    matrix,
    rq_tol: float = 1e-12,
    residual_tol: float | None = None,
    max_iterations: int = 10 ** 6,
) -> SpectralResult:
    """Perron value and vector of a nonnegative irreducible matrix by power iteration.

    Starts from the all-ones vector (positive overlap with the Perron
    direction), stops once the Rayleigh quotient settles to rq_tol relative
    change AND the residual ||Mx - vx|| drops below residual_tol.  The
    residual certifies the value: for symmetric input the nearest eigenvalue
    is within the residual of the returned value.
    """
    m = np.asarray(matrix, dtype=np.float64)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError(f"square matrix required, got shape {m.shape}")
    if (m < 0).any():
        raise ValueError("matrix must be entrywise nonnegative")
    n = m.shape[0]
    if n == 0:
        raise ValueError("empty matrix")
    ones = np.full(n, 1.0 / np.sqrt(n))
    if not m.any():
        return SpectralResult(0.0, ones, 0.0, 0)
    if residual_tol is None:
        residual_tol = 1e-11 * max(1.0, float(m.sum(axis=1).max()))

    x = ones
    mx = m @ x
    value = float(x @ mx)
    for it in range(1, max_iterations + 1):
        norm = float(np.linalg.norm(mx))
        if norm == 0.0:
            raise ValueError("iterate vanished; matrix is not irreducible")
        x_new = mx / norm
        mx = m @ x_new
        new_value = float(x_new @ mx)
        residual = float(np.linalg.norm(mx - new_value * x_new))
        settled = abs(new_value - value) <= rq_tol * max(1.0, abs(new_value))
        x, value = x_new, new_value
        if settled and residual <= residual_tol:
            if x.min() < 0:
                x = -x
            return SpectralResult(value, x, residual, it)
    raise NonConvergenceError(
        f"no convergence after {max_iterations} iterations "
        f"(rq_tol={rq_tol}, residual_tol={residual_tol})"
    )


def full_spectrum(matrix) -> np.ndarray:
    """All eigenvalues of a symmetric matrix, sorted descending (LAPACK oracle)."""
    m = np.asarray(matrix, dtype=np.float64)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError(f"square matrix required, got shape {m.shape}")
    if not np.allclose(m, m.T):
        raise ValueError("matrix must be symmetric")
    return np.sort(np.linalg.eigvalsh(m))[::-1]


@dataclass(frozen=True)
class VertexTransmissionBound:
    vertex: int
    transmission: int
    lower_bound: int      # 2(n-1) - degree
    eccentricity: int


@dataclass(frozen=True)
class TransmissionReport:
    """Row-sum and edge-count lower bounds on the two spectral radii."""

    n: int
    edge_count: int
    wiener: int
    two_wiener_over_n: float
    four_sigma_over_n: float
    transmission_regular: bool
    min_transmission: int
    max_transmission: int
    vertex_bounds: tuple[VertexTransmissionBound, ...]
    vertex_bounds_ok: bool
    sigma_lower_bound: int            # n(n-1) - e(G)
    sigma_bound_ok: bool
    complement_connected: bool
    complement_sigma: int | None
    complement_sigma_lower_bound: Fraction
    complement_bound_ok: bool | None


def transmission_report(g: Graph) -> TransmissionReport:
    """Evaluate the transmission-based lower bounds on a connected graph.

    Complement figures are flagged as unavailable (None) when the complement
    is disconnected, since its distance data does not exist.
    """
    data = all_pairs_distances(g)
    n, e = g.n, g.edge_count
    deg = g.degrees()
    ecc = [int(row.max()) for row in data.dist] if n > 1 else [0]
    bounds = tuple(
        VertexTransmissionBound(
            vertex=v,
            transmission=data.transmissions[v],
            lower_bound=2 * (n - 1) - deg[v],
            eccentricity=ecc[v],
        )
        for v in range(n)
    )
    gbar = complement(g)
    comp_connected = is_connected(gbar) and gbar.n > 0
    comp_sigma = all_pairs_distances(gbar).sigma if comp_connected else None
    comp_lb = Fraction(n * (n - 1), 2) + e
    return TransmissionReport(
        n=n,
        edge_count=e,
        wiener=data.sigma,
        two_wiener_over_n=2.0 * data.sigma / n,
        four_sigma_over_n=4.0 * data.sigma / n,
        transmission_regular=len(set(data.transmissions)) == 1,
        min_transmission=min(data.transmissions),
        max_transmission=max(data.transmissions),
        vertex_bounds=bounds,
        vertex_bounds_ok=all(b.transmission >= b.lower_bound for b in bounds),
        sigma_lower_bound=n * (n - 1) - e,
        sigma_bound_ok=data.sigma >= n * (n - 1) - e,
        complement_connected=comp_connected,
        complement_sigma=comp_sigma,
        complement_sigma_lower_bound=comp_lb,
        complement_bound_ok=None if comp_sigma is None else comp_sigma >= comp_lb,
    )
