"""Unit-interval algebra: t-norms, residual implicators, compositions.

Three t-norm / residuum pairs are supported, selected by `ImplicationKind`:

    GODEL        T(x, y) = min(x, y)        x -> y = 1 if x <= y else y
    GOGUEN       T(x, y) = x * y            x -> y = 1 if x <= y else y / x
    LUKASIEWICZ  T(x, y) = (x + y - 1)^+    x -> y = min(1 - x + y, 1)

Each residuum is the adjoint of its t-norm: T(x, z) <= y iff z <= x -> y.
On top of the scalar operations sit the two matrix-vector compositions used
by every solver in this package:

    max_t_compose     out[i] = max_j T(M[i][j], v[j])
    min_impl_compose  out[j] = min_i (M[j][i] -> v[i])

and the shifted bounds of a vector, `shifted_bounds(v, delta)`, which bracket
the closed sup-norm ball of radius delta around v inside the unit cube.

All functions are pure and all aggregates are plain tuples of floats, so
values are immutable and safe to share between threads.  Branch-selecting
comparisons (the x <= y test inside a residuum) are exact on purpose: the
residua are genuinely discontinuous there and blurring the branch point with
a tolerance would change results.
"""

from __future__ import annotations

import math
from enum import Enum

from .errors import DimensionMismatch, DomainError

Vector = tuple[float, ...]
Matrix = tuple[tuple[float, ...], ...]

# Values within CLAMP_EPS of [0, 1] are clamped onto the interval; anything
# further out is rejected.  Decimal inputs survive round-tripping through
# arithmetic that drifts by a few ulps without poisoning invariants.
CLAMP_EPS = 1e-12


class ImplicationKind(Enum):
    """A t-norm together with its residual implicator."""

    GODEL = "godel"
    GOGUEN = "goguen"
    LUKASIEWICZ = "lukasiewicz"


def pos(x: float) -> float:
    """Positive part, max(x, 0)."""
    return x if x > 0.0 else 0.0


def unit(value, name: str = "value") -> float:
    """Validate a scalar as a unit-interval value.

    Rejects NaN and anything further than CLAMP_EPS outside [0, 1]; values
    within the clamp window are snapped onto the interval.
    """
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise DomainError(f"{name}: expected a number, got {type(value).__name__}")
    x = float(value)
    if math.isnan(x):
        raise DomainError(f"{name}: NaN is not a unit-interval value")
    if x < 0.0:
        if x < -CLAMP_EPS:
            raise DomainError(f"{name}: {x!r} is outside [0, 1]")
        return 0.0
    if x > 1.0:
        if x > 1.0 + CLAMP_EPS:
            raise DomainError(f"{name}: {x!r} is outside [0, 1]")
        return 1.0
    return x


def unit_vector(values, name: str = "vector") -> Vector:
    """Validate a non-empty sequence of unit-interval values."""
    entries = tuple(unit(v, f"{name}[{i}]") for i, v in enumerate(values))
    if not entries:
        raise DomainError(f"{name}: must have at least one entry")
    return entries


def unit_matrix(rows, name: str = "matrix") -> Matrix:
    """Validate a non-empty rectangular grid of unit-interval values."""
    grid = tuple(
        tuple(unit(v, f"{name}[{i}][{j}]") for j, v in enumerate(row))
        for i, row in enumerate(rows)
    )
    if not grid or not grid[0]:
        raise DomainError(f"{name}: must have at least one row and one column")
    width = len(grid[0])
    for i, row in enumerate(grid):
        if len(row) != width:
            raise DimensionMismatch(
                f"{name}: row {i} has {len(row)} entries, expected {width}"
            )
    return grid


def transpose(matrix: Matrix) -> Matrix:
    return tuple(zip(*matrix))


def t_norm(kind: ImplicationKind, x: float, y: float) -> float:
    """Apply the t-norm selected by `kind`."""
    if kind is ImplicationKind.GODEL:
        return x if x < y else y
    if kind is ImplicationKind.GOGUEN:
        return x * y
    s = x + y - 1.0
    return s if s > 0.0 else 0.0


def residuum(kind: ImplicationKind, x: float, y: float) -> float:
    """Apply the residual implicator selected by `kind`.

    The branch x > y implies x > 0, so the Goguen quotient never divides
    by zero.
    """
    if x <= y:
        return 1.0
    if kind is ImplicationKind.GODEL:
        return y
    if kind is ImplicationKind.GOGUEN:
        return y / x
    return 1.0 - x + y


def max_t_compose(matrix: Matrix, kind: ImplicationKind, vec: Vector) -> Vector:
    """Row-wise max of t-norms: out[i] = max_j T(matrix[i][j], vec[j])."""
    if not matrix or len(matrix[0]) != len(vec):
        raise DimensionMismatch(
            f"max_t_compose: matrix has {len(matrix[0]) if matrix else 0} columns, "
            f"vector has {len(vec)} entries"
        )
    return tuple(max(t_norm(kind, mij, vj) for mij, vj in zip(row, vec)) for row in matrix)


def min_impl_compose(matrix: Matrix, kind: ImplicationKind, vec: Vector) -> Vector:
    """Row-wise min of residua: out[j] = min_i (matrix[j][i] -> vec[i])."""
    if not matrix or len(matrix[0]) != len(vec):
        raise DimensionMismatch(
            f"min_impl_compose: matrix has {len(matrix[0]) if matrix else 0} columns, "
            f"vector has {len(vec)} entries"
        )
    return tuple(min(residuum(kind, mij, vj) for mij, vj in zip(row, vec)) for row in matrix)


def shifted_bounds(vec: Vector, delta: float) -> tuple[Vector, Vector]:
    """Componentwise lower/upper shift of `vec` by `delta`, clipped to [0, 1].

    lower[i] = (vec[i] - delta)^+ and upper[i] = min(vec[i] + delta, 1), so
    for any c in the unit cube: ||vec - c||_inf <= delta iff lower <= c <= upper.
    """
    lower = tuple(pos(v - delta) for v in vec)
    upper = tuple(min(v + delta, 1.0) for v in vec)
    return lower, upper


def sup_distance(u: Vector, v: Vector) -> float:
    """Sup-norm distance max_i |u[i] - v[i]|."""
    if len(u) != len(v):
        raise DimensionMismatch(f"sup_distance: lengths {len(u)} and {len(v)} differ")
    return max(abs(a - b) for a, b in zip(u, v))


def leq(u: Vector, v: Vector, slack: float = 0.0) -> bool:
    """Componentwise u <= v, optionally allowing `slack` of float drift."""
    if len(u) != len(v):
        raise DimensionMismatch(f"leq: lengths {len(u)} and {len(v)} differ")
    return all(a <= b + slack for a, b in zip(u, v))
