"""Exact polyhedral-cone primitives.

A cone is given by a finite generator list.  Three questions are answered
here, all via one exact phase-1 simplex: does an equality system with lower
bounds have a feasible point, is a vector a nonnegative combination of the
generators, and is zero a strictly positive combination of all generators
(which holds exactly when the cone is a linear subspace).  The lineality
space of the cone is found by testing which generators have their negatives
inside the cone.

No facet or vertex description is ever computed; rank plus membership plus
the relative-interior test cover everything callers need, and the simplex
with Bland's rule terminates in exact arithmetic without perturbation.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exactlin import (
    RationalMatrix,
    Vector,
    is_zero_vector,
    matvec,
    rank,
    vec_neg,
    zero_vector,
)


@dataclass(frozen=True)
class ConeByGenerators:
    """Cone spanned by nonnegative combinations of `generators` in R^ambient_dim.

    Duplicate and zero generators are allowed; callers decide what to feed in.
    """

    ambient_dim: int
    generators: tuple[Vector, ...]

    def __post_init__(self):
        for g in self.generators:
            if len(g) != self.ambient_dim:
                raise ValueError(
                    f"generator of length {len(g)} in ambient dimension {self.ambient_dim}"
                )

    def generator_matrix(self) -> RationalMatrix:
        """Matrix whose columns are the generators."""
        return RationalMatrix.from_columns(self.generators, self.ambient_dim)


@dataclass(frozen=True)
class PositiveCombinationWitness:
    """Coefficients, one per generator and each >= 1, combining to zero."""

    coefficients: tuple[Fraction, ...]


def lp_feasible(
    equalities: RationalMatrix,
    rhs: Vector,
    lower_bounds: Vector,
) -> Vector | None:
    """Exact feasible point of  equalities @ x = rhs,  x >= lower_bounds.

    Phase-1 simplex over the rationals with Bland's rule (lowest eligible
    index enters; ties in the ratio test break toward the lowest basic
    index), so the result is deterministic given the input order.  Returns
    the point found or None when the system is infeasible.
    """
    n_rows, n_cols = equalities.rows, equalities.cols
    if len(rhs) != n_rows:
        raise ValueError(f"rhs of length {len(rhs)} against {n_rows} equality rows")
    if len(lower_bounds) != n_cols:
        raise ValueError(f"{len(lower_bounds)} lower bounds for {n_cols} variables")

    # Shift to y = x - lower_bounds >= 0.
    shifted_rhs = [
        rhs[i] - sum((equalities[i, j] * lower_bounds[j] for j in range(n_cols)), Fraction(0))
        for i in range(n_rows)
    ]
    if n_cols == 0:
        if all(b == 0 for b in shifted_rhs):
            return ()
        return None

    # Rows with negative right-hand side are negated so artificials start
    # feasible at value shifted_rhs >= 0.
    table: list[list[Fraction]] = []
    for i in range(n_rows):
        row = list(equalities.row(i))
        b = shifted_rhs[i]
        if b < 0:
            row = [-x for x in row]
            b = -b
        row.extend(Fraction(1) if k == i else Fraction(0) for k in range(n_rows))
        row.append(b)
        table.append(row)

    n_total = n_cols + n_rows  # structural + artificial variables
    basis = [n_cols + i for i in range(n_rows)]

    # Reduced-cost row for minimizing the sum of artificials.
    cost = [Fraction(0)] * (n_total + 1)
    for j in range(n_cols, n_total):
        cost[j] = Fraction(1)
    for row in table:
        for j in range(n_total + 1):
            cost[j] -= row[j]

    while True:
        entering = None
        for j in range(n_total):
            if cost[j] < 0:
                entering = j
                break
        if entering is None:
            break
        leaving = None
        best_ratio = None
        for i in range(n_rows):
            coef = table[i][entering]
            if coef > 0:
                ratio = table[i][-1] / coef
                if (
                    best_ratio is None
                    or ratio < best_ratio
                    or (ratio == best_ratio and basis[i] < basis[leaving])
                ):
                    best_ratio = ratio
                    leaving = i
        if leaving is None:
            # Cannot happen for a phase-1 objective bounded below by zero,
            # but guard against a malformed tableau.
            raise RuntimeError("phase-1 simplex detected an unbounded direction")
        pivot = table[leaving][entering]
        if pivot != 1:
            table[leaving] = [x / pivot for x in table[leaving]]
        pivot_row = table[leaving]
        for i in range(n_rows):
            if i == leaving:
                continue
            factor = table[i][entering]
            if factor:
                row_i = table[i]
                for j in range(n_total + 1):
                    row_i[j] -= factor * pivot_row[j]
        factor = cost[entering]
        if factor:
            for j in range(n_total + 1):
                cost[j] -= factor * pivot_row[j]
        basis[leaving] = entering

    if -cost[-1] != 0:  # optimal artificial sum is -cost[-1]
        return None

    y = [Fraction(0)] * n_cols
    for i, var in enumerate(basis):
        if var < n_cols:
            y[var] = table[i][-1]
    return tuple(y[j] + lower_bounds[j] for j in range(n_cols))


def member(cone: ConeByGenerators, v: Vector) -> bool:
    """True iff v is a nonnegative combination of the generators."""
    if len(v) != cone.ambient_dim:
        raise ValueError(
            f"vector of length {len(v)} against ambient dimension {cone.ambient_dim}"
        )
    if not cone.generators:
        return is_zero_vector(v)
    solution = lp_feasible(
        cone.generator_matrix(), v, zero_vector(len(cone.generators))
    )
    return solution is not None


def zero_in_relative_interior(cone: ConeByGenerators) -> PositiveCombinationWitness | None:
    """Witness that zero is a strictly positive combination of all generators.

    Such a witness exists iff the cone equals its linear span.  Cones are
    scale invariant, so the open condition "all coefficients > 0" is solved
    as the closed, LP-expressible condition "all coefficients >= 1".  The
    empty generator list describes the cone {0}, a linear space, and gets
    the empty witness.
    """
    if not cone.generators:
        return PositiveCombinationWitness(())
    ones = (Fraction(1),) * len(cone.generators)
    solution = lp_feasible(
        cone.generator_matrix(), zero_vector(cone.ambient_dim), ones
    )
    if solution is None:
        return None
    return PositiveCombinationWitness(solution)


def lineality_dimension(cone: ConeByGenerators) -> int:
    """Dimension of the largest linear subspace contained in the cone.

    A generator g lies in the lineality space exactly when -g is still in
    the cone; the lineality space is spanned by those generators, so its
    dimension is the rank of that subset.
    """
    if not cone.generators:
        return 0
    two_sided = [g for g in cone.generators if member(cone, vec_neg(g))]
    if not two_sided:
        return 0
    return rank(RationalMatrix.from_columns(two_sided, cone.ambient_dim))


def verify_witness(cone: ConeByGenerators, witness: PositiveCombinationWitness) -> bool:
    """Re-check a witness by plain arithmetic: sum is zero, coefficients >= 1."""
    coeffs = witness.coefficients
    if len(coeffs) != len(cone.generators):
        return False
    if any(c < 1 for c in coeffs):
        return False
    if not cone.generators:
        return True
    combo = matvec(cone.generator_matrix(), coeffs)
    return is_zero_vector(combo)
