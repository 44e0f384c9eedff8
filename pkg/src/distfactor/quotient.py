"""Equitable partitions, quotient matrices, and the extremal family's 4x4 quotient.

A quotient entry is the average row sum of one block of the source matrix.
When the partition is equitable the quotient shares the Perron root with the
full matrix, which is what lets an n x n eigenproblem collapse to a handful
of block equations.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .spectra import SpectralResult, full_spectrum, spectral_radius


class NotEquitableError(ValueError):
    """The partition is not equitable, so quotient eigenvalue claims do not apply."""


def validate_partition(n: int, blocks: Sequence[Sequence[int]]) -> list[list[int]]:
    seen = set()
    out = []
    for i, block in enumerate(blocks):
        blk = list(block)
        if not blk:
            raise ValueError(f"block {i} is empty")
        for v in blk:
            if not 0 <= v < n:
                raise ValueError(f"block {i} contains out-of-range index {v}")
            if v in seen:
                raise ValueError(f"index {v} appears in more than one block")
            seen.add(v)
        out.append(blk)
    if len(seen) != n:
        raise ValueError(f"blocks cover {len(seen)} of {n} indices")
    return out


@dataclass(frozen=True)
class QuotientMatrix:
    matrix: np.ndarray        # m x m block-average row sums
    equitable: bool
    block_sizes: tuple[int, ...]


def quotient_matrix(matrix, blocks: Sequence[Sequence[int]]) -> QuotientMatrix:
    """Block-average row sums of a matrix under a partition of its index set.

    Equitability is decided by exact integer row sums when the matrix is
    integral, and within 1e-12 otherwise.
    """
    m = np.asarray(matrix)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError(f"square matrix required, got shape {m.shape}")
    blks = validate_partition(m.shape[0], blocks)
    integral = np.issubdtype(m.dtype, np.integer)
    k = len(blks)
    quot = np.zeros((k, k), dtype=np.float64)
    equitable = True
    for i, rows in enumerate(blks):
        for j, cols in enumerate(blks):
            sums = m[np.ix_(rows, cols)].sum(axis=1)
            if integral:
                if len(set(int(x) for x in sums)) > 1:
                    equitable = False
            elif np.ptp(sums) > 1e-12:
                equitable = False
            quot[i, j] = sums.sum() / len(rows)
    return QuotientMatrix(quot, equitable, tuple(len(b) for b in blks))


def quotient_perron(quot: np.ndarray, block_sizes: Sequence[int]) -> SpectralResult:
    """Perron pair of a nonnegative equitable quotient matrix.

    Solved two ways that must agree within 1e-8: power iteration on the
    quotient itself, and LAPACK on the symmetrization D Q D^{-1} with
    D = diag(sqrt(block sizes)), which is symmetric exactly when the quotient
    came from a symmetric matrix under an equitable partition.
    """
    q = np.asarray(quot, dtype=np.float64)
    result = spectral_radius(q)
    d = np.sqrt(np.asarray(block_sizes, dtype=np.float64))
    sym = q * d[:, None] / d[None, :]
    if not np.allclose(sym, sym.T, atol=1e-9):
        raise ValueError("quotient does not symmetrize; not an equitable quotient of a symmetric matrix")
    lapack_top = float(full_spectrum((sym + sym.T) / 2.0)[0])
    if abs(lapack_top - result.value) > 1e-8 * max(1.0, abs(lapack_top)):
        raise ArithmeticError(
            f"Perron routes disagree: power iteration {result.value!r} vs LAPACK {lapack_top!r}"
        )
    return result


@dataclass(frozen=True)
class QuotientEqualityReport:
    perron_full: float
    perron_quotient: float
    perron_match: bool            # within 1e-8
    quotient_eigenvalues: tuple[float, ...]
    eigen_containment: bool       # every quotient eigenvalue in the full spectrum within 1e-7
    max_containment_error: float


def verify_quotient_equality(matrix, blocks: Sequence[Sequence[int]],
                             perron_tol: float = 1e-8,
                             containment_tol: float = 1e-7) -> QuotientEqualityReport:
    """Check that an equitable quotient shares its spectrum with the full matrix."""
    m = np.asarray(matrix)
    quot = quotient_matrix(m, blocks)
    if not quot.equitable:
        raise NotEquitableError("partition is not equitable; quotient eigenvalues need not embed")
    full = full_spectrum(m)
    q_eigs = np.linalg.eigvals(quot.matrix)
    if np.abs(q_eigs.imag).max() > 1e-8:
        raise ArithmeticError(f"equitable quotient produced complex eigenvalues: {q_eigs}")
    q_real = np.sort(q_eigs.real)[::-1]
    perron_q = quotient_perron(quot.matrix, quot.block_sizes).value
    perron_full = float(full[0])
    errs = [float(np.abs(full - ev).min()) for ev in q_real]
    return QuotientEqualityReport(
        perron_full=perron_full,
        perron_quotient=perron_q,
        perron_match=abs(perron_full - perron_q) <= perron_tol * max(1.0, abs(perron_full)),
        quotient_eigenvalues=tuple(float(v) for v in q_real),
        eigen_containment=max(errs) <= containment_tol,
        max_containment_error=max(errs),
    )


# ---------------------------------------------------------------------------
# Closed-form quotient of the extremal family's distance matrix
# ---------------------------------------------------------------------------

def _check_extremal_params(n: int, r: int) -> None:
    if r < 1:
        raise ValueError(f"need r >= 1, got r={r}")
    if n < 3 * r + 2:
        raise ValueError(f"need n >= 3r+2 = {3*r+2}, got n={n}")


def extremal_quotient_matrix(n: int, r: int) -> np.ndarray:
    """The 4x4 distance quotient of extremal_graph(n, r) under its canonical layout.

    Rows and columns follow the blocks [independent r, clique r, clique
    n-3r-1, independent r+1]; entries are block sums of hop distances.
    """
    _check_extremal_params(n, r)
    c = n - 3 * r - 1
    return np.array(
        [
            [2 * (r - 1), r, c, r + 1],
            [r, r - 1, c, r + 1],
            [r, r, c - 1, 2 * (r + 1)],
            [r, r, 2 * c, 2 * r],
        ],
        dtype=np.int64,
    )


@dataclass(frozen=True)
class RatioCheckReport:
    """Perron eigenvector ratio of the extremal quotient versus its closed form."""

    n: int
    r: int
    radius: float
    vector: tuple[float, float, float, float]
    ratio: float                  # d / c, trailing block over large-clique block
    predicted: float              # (radius + n - 3r) / (radius + 2)
    abs_error: float
    max_equation_residual: float  # worst of the four block eigen-equations
    ok: bool


def perron_ratio_report(n: int, r: int, tol: float = 1e-8) -> RatioCheckReport:
    quot = extremal_quotient_matrix(n, r)
    res = quotient_perron(quot, (r, r, n - 3 * r - 1, r + 1))
    a, b, c, d = (float(v) for v in res.vector)
    lam = res.value
    predicted = (lam + n - 3 * r) / (lam + 2.0)
    ratio = d / c
    residuals = np.abs(quot @ res.vector - lam * res.vector)
    err = abs(ratio - predicted)
    return RatioCheckReport(
        n=n,
        r=r,
        radius=lam,
        vector=(a, b, c, d),
        ratio=ratio,
        predicted=predicted,
        abs_error=err,
        max_equation_residual=float(residuals.max()),
        ok=err <= tol,
    )


@dataclass(frozen=True)
class ThresholdCheckReport:
    """Whether the quotient radius clears the closed-form threshold used to
    reduce the barrier comparison, and whether the cheap row-sum bound n-1
    already suffices.  Not applicable at n = 7r+4, where the reduction's
    denominator vanishes and a direct comparison is required instead.
    """

    n: int
    r: int
    applicable: bool
    threshold: float | None       # 4r+2 + ((4r+3)^2 - 1)/(n-7r-4)
    row_sum_value: int            # n-1, a lower bound on the radius
    row_sum_sufficient: bool | None
    radius: float
    radius_sufficient: bool | None


def radius_threshold_report(n: int, r: int) -> ThresholdCheckReport:
    _check_extremal_params(n, r)
    if n < 7 * r + 4:
        raise ValueError(f"need n >= 7r+4 = {7*r+4}, got n={n}")
    quot = extremal_quotient_matrix(n, r)
    radius = quotient_perron(quot, (r, r, n - 3 * r - 1, r + 1)).value
    if n == 7 * r + 4:
        return ThresholdCheckReport(
            n=n, r=r, applicable=False, threshold=None,
            row_sum_value=n - 1, row_sum_sufficient=None,
            radius=radius, radius_sufficient=None,
        )
    threshold = Fraction(4 * r + 2) + Fraction((4 * r + 3) ** 2 - 1, n - 7 * r - 4)
    return ThresholdCheckReport(
        n=n,
        r=r,
        applicable=True,
        threshold=float(threshold),
        row_sum_value=n - 1,
        row_sum_sufficient=n - 1 > threshold,
        radius=radius,
        radius_sufficient=radius > float(threshold),
    )
