"""Best consistent right-hand sides at the Chebyshev distance.

When the distance nabla of a report is achieved, the vector

    closure(system, lower_shift(beta, nabla))

is the componentwise-least consistent right-hand side at distance nabla from
beta, and

    xi = max_t_compose(gamma^t, kind, lower_shift(beta, nabla))

solves the system perturbed to that right-hand side.  The t-norm used for xi
is the one matched to the system's implication kind.  When the distance is
only an infimum (possible for the Godel kind alone) no right-hand side at
distance nabla exists at all; `near_approximation` then provides a
consistent right-hand side at any chosen tolerance above nabla, explicitly
labelled non-optimal.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from enum import Enum

from .algebra import Vector, max_t_compose, shifted_bounds, sup_distance, transpose, unit
from .errors import ReportMismatch
from .operators import DEFAULT_TOL, FuzzySystem, closure
from .report import Attainability, ChebyshevReport


class ApproximationStatus(Enum):
    MINIMUM_ATTAINED = "minimum_attained"
    APPROXIMATION_SET_EMPTY = "approximation_set_empty"


@dataclass(frozen=True)
class ApproximationResult:
    """Lowest approximation of a right-hand side, if one exists.

    Both vectors are present exactly when status is MINIMUM_ATTAINED, in
    which case achieved_distance equals the report's nabla up to float
    drift.
    """

    status: ApproximationStatus
    lowest_approximation: Vector | None
    approximate_solution: Vector | None
    achieved_distance: float | None


@dataclass(frozen=True)
class NearApproximation:
    """A consistent right-hand side near an unattainable distance.

    Returned for callers who want a usable vector when the approximation set
    is empty; `optimal` is always False because no vector achieves the
    distance itself.
    """

    delta: float
    vector: Vector
    solution: Vector
    achieved_distance: float
    optimal: bool = False


def build_approximation(system: FuzzySystem, report: ChebyshevReport) -> ApproximationResult:
    """Construct the lowest approximation described by `report`.

    The report must have been produced for `system` by the solver matching
    its kind.
    """
    if report.kind is not system.kind:
        raise ReportMismatch(
            f"report kind {report.kind.value!r} does not match system kind "
            f"{system.kind.value!r}"
        )
    if report.verdict is Attainability.INFIMUM:
        return ApproximationResult(
            ApproximationStatus.APPROXIMATION_SET_EMPTY, None, None, None
        )
    if report.verdict is not Attainability.MINIMUM:
        raise ReportMismatch("report carries no attainability verdict")
    lower, _ = shifted_bounds(system.beta, report.nabla)
    lowest = closure(system, lower)
    solution = max_t_compose(transpose(system.gamma), system.kind, lower)
    achieved = sup_distance(system.beta, lowest)
    return ApproximationResult(
        ApproximationStatus.MINIMUM_ATTAINED, lowest, solution, achieved
    )


def near_approximation(system: FuzzySystem, delta: float) -> NearApproximation:
    """Consistent right-hand side within `delta` of beta, without any
    optimality claim.  Useful when the approximation set is empty: any
    delta strictly above the report's nabla yields a vector."""
    delta = unit(delta, "delta")
    lower, _ = shifted_bounds(system.beta, delta)
    vector = closure(system, lower)
    solution = max_t_compose(transpose(system.gamma), system.kind, lower)
    return NearApproximation(delta, vector, solution, sup_distance(system.beta, vector))


def verify_lowest(
    system: FuzzySystem,
    result: ApproximationResult,
    trials: int = 500,
    seed: int = 0,
    tol: float = DEFAULT_TOL,
) -> bool:
    """Sample the approximation set and check the lowest vector really is lowest.

    Draws random vectors inside the sup-norm band of radius achieved_distance
    around beta, projects them through the closure map (every image is a
    consistent right-hand side) and keeps those still inside the band; each
    kept vector is a member of the approximation set.  Returns True iff the
    result's lowest_approximation is componentwise below every sampled
    member.  Vacuously true when nothing is sampled.  Trials are keyed by
    (seed, index) so they are independent and order-insensitive.
    """
    if result.status is not ApproximationStatus.MINIMUM_ATTAINED:
        raise ValueError("verify_lowest requires a MINIMUM_ATTAINED result")
    nabla = result.achieved_distance
    lowest = result.lowest_approximation
    lower, upper = shifted_bounds(system.beta, nabla)
    for trial in range(trials):
        rng = random.Random(f"{seed}:{trial}")
        candidate = tuple(
            lo + rng.random() * (hi - lo) for lo, hi in zip(lower, upper)
        )
        member = closure(system, candidate)
        if sup_distance(system.beta, member) > nabla + tol:
            continue
        if any(lw > mj + tol for lw, mj in zip(lowest, member)):
            return False
    return True
