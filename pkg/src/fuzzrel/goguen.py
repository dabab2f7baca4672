"""Closed-form Chebyshev distance for Goguen-implication systems.

Same skeleton as the Godel solver, with cell statistics adapted to the
product t-norm:

    theta[j][i] = max over {l : gamma[j][i] <= gamma[l][i], gamma[l][i] > 0}
                  of (beta[l] - gamma[j][i] / gamma[l][i])        (0 if empty)
    zeta[j][i]  = max over all l of
                  goguen_threshold(gamma[j][i], beta[l], gamma[l][i], beta[j])

    tau_j   = min over supporting i of max(theta[j][i], zeta[j][i])  (1 if none)
    nabla_j = min(1 - beta[j], tau_j),   nabla = max_j nabla_j.

On supporting cells theta <= zeta always holds, so tau_j is also the min of
the zetas; the implementation asserts both forms agree.  The distance is
always achieved here, so every report carries the MINIMUM verdict.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import ImplicationKind, pos
from .errors import KindMismatch
from .operators import FuzzySystem
from .report import Attainability, ChebyshevReport, RowDiagnostics


@dataclass(frozen=True)
class GoguenCellStats:
    """Statistics of one (row, column) cell; theta is kept signed."""

    theta: float
    zeta: float
    support: bool


def goguen_threshold(u: float, x: float, y: float, z: float) -> float:
    """Least delta with y * (x - delta)^+ / u <= min(z + delta, 1).

    Defined as 0 when u = 0 or y = 0; otherwise

        max((x - u/y)^+, min((x*y - u*z)^+ / (u + y), 1 - z)).

    The zero cases make the division total; no epsilon-regularisation is
    applied.
    """
    if u == 0.0 or y == 0.0:
        return 0.0
    return max(pos(x - u / y), min(pos(x * y - u * z) / (u + y), 1.0 - z))


def goguen_cell(system: FuzzySystem, row: int, col: int) -> GoguenCellStats:
    """Compute the cell statistics for one (row, col) pair (0-based)."""
    gamma, beta = system.gamma, system.beta
    if not 0 <= row < system.m:
        raise IndexError(f"row {row} out of range for {system.m} rows")
    if not 0 <= col < system.n:
        raise IndexError(f"col {col} out of range for {system.n} columns")
    g = gamma[row][col]
    theta = 0.0
    found = False
    for l in range(system.m):
        gl = gamma[l][col]
        if gl > 0.0 and g <= gl:
            candidate = beta[l] - g / gl
            theta = candidate if not found else max(theta, candidate)
            found = True
    support = g > 0.0
    # A supporting cell always dominates itself, so the empty-set convention
    # theta = 0 is only ever reachable on non-supporting cells.
    assert found or not support
    zeta = max(
        goguen_threshold(g, beta[l], gamma[l][col], beta[row]) for l in range(system.m)
    )
    return GoguenCellStats(theta, zeta, support)


def goguen_distance(system: FuzzySystem) -> ChebyshevReport:
    """Chebyshev distance report for a Goguen-implication system."""
    if system.kind is not ImplicationKind.GOGUEN:
        raise KindMismatch(f"expected a Goguen system, got kind {system.kind.value!r}")

    rows = []
    for j in range(system.m):
        cells = tuple(goguen_cell(system, j, i) for i in range(system.n))
        one_minus_beta = 1.0 - system.beta[j]

        tau, argmin = 1.0, None
        for i, cell in enumerate(cells):
            if not cell.support:
                continue
            value = max(cell.theta, cell.zeta)
            if argmin is None or value < tau:
                tau, argmin = value, i
        # theta <= zeta on supporting cells, so the min of the zetas is an
        # equivalent form of tau (up to one ulp when a tie is split by
        # float rounding).
        support_zetas = [cell.zeta for cell in cells if cell.support]
        tau_via_zeta = min(support_zetas) if support_zetas else 1.0
        assert abs(tau - tau_via_zeta) <= 1e-12

        nabla_j = min(one_minus_beta, tau)
        rows.append(
            RowDiagnostics(
                row=j,
                nabla_j=nabla_j,
                tau_j=tau,
                one_minus_beta=one_minus_beta,
                attainable=True,
                argmin_col=argmin,
                borderline=False,
                cells=cells,
            )
        )

    nabla = max(r.nabla_j for r in rows)
    return ChebyshevReport(
        kind=system.kind,
        nabla=nabla,
        verdict=Attainability.MINIMUM,
        rows=tuple(rows),
    )
