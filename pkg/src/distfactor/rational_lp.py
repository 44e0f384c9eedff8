"""Exact rational linear feasibility via a phase-1 simplex.

Decides whether {x >= 0 : A x <= b} is nonempty over the rationals and, when
it is, returns an exact feasible point.  Fractions end to end: threshold
instances (all-halves assignments and the like) are decided exactly, never
lost to floating point.  Bland's rule rules out cycling.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Mapping, Sequence

Constraint = tuple[Mapping[int, Fraction | int], Fraction | int]

_ZERO = Fraction(0)
_ONE = Fraction(1)


def feasible_point(num_vars: int, constraints: Sequence[Constraint]) -> list[Fraction] | None:
    """Feasible x for the system (each constraint is coeffs . x <= rhs, x >= 0), or None.

    The auxiliary variable trick: maximize -x0 subject to A x - x0 <= b.
    The system is feasible exactly when the auxiliary optimum reaches 0.
    """
    m = len(constraints)
    if m == 0:
        return [_ZERO] * num_vars
    aux = num_vars + m          # column index of the auxiliary variable
    width = num_vars + m + 1    # variables, slacks, auxiliary

    rows: list[list[Fraction]] = []
    rhs: list[Fraction] = []
    for i, (coeffs, bound) in enumerate(constraints):
        row = [_ZERO] * width
        for j, val in coeffs.items():
            if not 0 <= j < num_vars:
                raise ValueError(f"variable index {j} out of range")
            row[j] = Fraction(val)
        row[num_vars + i] = _ONE
        row[aux] = -_ONE
        rows.append(row)
        rhs.append(Fraction(bound))
    basis = [num_vars + i for i in range(m)]

    worst = min(range(m), key=lambda i: rhs[i])
    if rhs[worst] >= 0:
        return [_ZERO] * num_vars

    _pivot(rows, rhs, basis, worst, aux)

    while True:
        aux_row = basis.index(aux) if aux in basis else None
        if aux_row is None or rhs[aux_row] == 0:
            break
        # Decreasing x0 means entering any nonbasic column with a positive
        # coefficient in x0's row; Bland picks the smallest index.
        r = rows[aux_row]
        entering = next(
            (j for j in range(width) if j != aux and j not in basis and r[j] > 0),
            None,
        )
        if entering is None:
            return None  # auxiliary optimum is positive: infeasible
        leaving, best = None, None
        for i in range(m):
            coeff = rows[i][entering]
            if coeff > 0:
                ratio = rhs[i] / coeff
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leaving]):
                    best, leaving = ratio, i
        if leaving is None:
            raise ArithmeticError("unbounded auxiliary descent; inconsistent tableau")
        _pivot(rows, rhs, basis, leaving, entering)

    solution = [_ZERO] * num_vars
    for i, var in enumerate(basis):
        if var < num_vars:
            solution[var] = rhs[i]
    return solution


def _pivot(rows: list[list[Fraction]], rhs: list[Fraction], basis: list[int],
           pivot_row: int, pivot_col: int) -> None:
    pr = rows[pivot_row]
    inv = _ONE / pr[pivot_col]
    if inv != 1:
        rows[pivot_row] = pr = [v * inv for v in pr]
        rhs[pivot_row] *= inv
    support = [j for j, v in enumerate(pr) if v != 0]
    for i, row in enumerate(rows):
        if i == pivot_row:
            continue
        factor = row[pivot_col]
        if factor == 0:
            continue
        for j in support:
            row[j] -= factor * pr[j]
        rhs[i] -= factor * rhs[pivot_row]
    basis[pivot_row] = pivot_col
