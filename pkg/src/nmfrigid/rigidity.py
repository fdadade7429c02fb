"""Rigidity certification for nonnegative factorizations M = AB.

Each zero of A or B contributes one generator to a cone of r x r matrices:
a zero at entry (i, j) of A gives the outer product of row i of A with the
j-th coordinate row, a zero at (i, j) of B gives minus the outer product of
the i-th coordinate column with column j of B.  The factorization is
infinitesimally rigid exactly when that cone is the full (r^2-r)-dimensional
space of zero-diagonal matrices, which reduces to a rank computation, a
lineality computation and one relative-interior feasibility test, all in
exact arithmetic.

The first-order deformation cone W is dual to the generator cone, so its
dimension is r^2 minus the lineality dimension of the generators.  When W
is a linear space strictly between the diagonal and everything, the
zero-diagonal slice V of W is extracted and tested for V^2 = 0; success
certifies that the identity plus V stays inside the factorization fiber,
the partially-rigid situation.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from itertools import combinations

from . import patterns
from .cone import (
    ConeByGenerators,
    PositiveCombinationWitness,
    lineality_dimension,
    zero_in_relative_interior,
)
from .exactlin import RationalMatrix, Vector, matmul, nullspace_basis, rank

DEFAULT_KRUSKAL_BUDGET = 10**6


class Classification(Enum):
    INFINITESIMALLY_RIGID = "infinitesimally-rigid"
    PARTIALLY_INFINITESIMALLY_RIGID = "partially-infinitesimally-rigid"
    INTERIOR_CERTIFIED = "interior-certified"
    UNDETERMINED = "undetermined"
    NOT_RIGID = "not-rigid"  # symmetric (completely positive) case only


@dataclass(frozen=True)
class FactorizationPair:
    """A nonnegative pair (A: m x r, B: r x n), both of full rank r.

    Rank-deficient or negative input is a hard error: the rigidity theory
    assumes rank equals nonnegative rank throughout, and silently reducing
    the rank would certify the wrong object.
    """

    a: RationalMatrix
    b: RationalMatrix

    def __post_init__(self):
        if self.a.cols != self.b.rows:
            raise ValueError(
                f"inner dimensions differ: A is {self.a.rows}x{self.a.cols}, "
                f"B is {self.b.rows}x{self.b.cols}"
            )
        for name, mat in (("A", self.a), ("B", self.b)):
            for i in range(mat.rows):
                for j in range(mat.cols):
                    if mat[i, j] < 0:
                        raise ValueError(f"{name}[{i},{j}] = {mat[i, j]} is negative")
        r = self.a.cols
        if rank(self.a) != r:
            raise ValueError(f"A has rank below {r}")
        if rank(self.b) != r:
            raise ValueError(f"B has rank below {r}")

    @property
    def r(self) -> int:
        return self.a.cols

    @property
    def m(self) -> int:
        return self.a.rows

    @property
    def n(self) -> int:
        return self.b.cols

    def product(self) -> RationalMatrix:
        return matmul(self.a, self.b)

    def zero_pattern(self) -> patterns.ZeroPattern:
        return patterns.pattern_of_factorization(self.a.row_list(), self.b.row_list())


@dataclass(frozen=True)
class GeneratorSource:
    """Which zero produced a generator: factor 'A' or 'B' plus the entry."""

    factor: str
    row: int
    col: int


@dataclass(frozen=True)
class DualConeGenerators:
    """Vectorized generators, one per zero, with their origins.

    The ambient dimension is r^2 for factorization pairs and r(r-1)/2 for
    symmetric factors in skew coordinates.
    """

    r: int
    ambient_dim: int
    vectors: tuple[Vector, ...]
    sources: tuple[GeneratorSource, ...]

    @property
    def count(self) -> int:
        return len(self.vectors)

    def cone(self) -> ConeByGenerators:
        return ConeByGenerators(self.ambient_dim, self.vectors)

    def matrix(self) -> RationalMatrix:
        """ambient_dim x count matrix whose columns are the generators."""
        return RationalMatrix.from_columns(self.vectors, self.ambient_dim)


def build_dual_generators(pair: FactorizationPair) -> DualConeGenerators:
    """One generator per zero: A-zeros in row-major order, then B-zeros.

    All generators vanish on the diagonal of their r x r matrix, because the
    zero at (i, j) of A means exactly that row i of A has a zero in slot j.
    """
    r = pair.r
    vectors: list[Vector] = []
    sources: list[GeneratorSource] = []
    zero = Fraction(0)
    for i in range(pair.m):
        row = pair.a.row(i)
        for j in range(r):
            if row[j] == 0:
                vec = [zero] * (r * r)
                for k in range(r):
                    vec[k * r + j] = row[k]
                vectors.append(tuple(vec))
                sources.append(GeneratorSource("A", i, j))
    for i in range(r):
        for j in range(pair.n):
            if pair.b[i, j] == 0:
                col = pair.b.column(j)
                vec = [zero] * (r * r)
                for l in range(r):
                    vec[i * r + l] = -col[l]
                vectors.append(tuple(vec))
                sources.append(GeneratorSource("B", i, j))
    return DualConeGenerators(r, r * r, tuple(vectors), tuple(sources))


@dataclass(frozen=True)
class RigidityCertificate:
    """Full verdict for one factorization (or symmetric factor).

    `ambient_dim` is r^2 for pairs and r(r-1)/2 for symmetric factors;
    `dim_w` is always ambient_dim - lineality_dim, the dimension of the
    deformation cone.  `v_basis` is only present for the partially rigid
    classification and spans the zero-diagonal slice of W.
    """

    r: int
    ambient_dim: int
    generator_count: int
    span_rank: int
    lineality_dim: int
    relint_witness: PositiveCombinationWitness | None
    dim_w: int
    classification: Classification
    v_basis: tuple[RationalMatrix, ...] | None = None
    kruskal_rank: int | None = None
    symmetric: bool = False

    def v_support(self) -> tuple[tuple[int, int], ...]:
        """Entries (row, col), 0-based, touched by any V-basis element."""
        if not self.v_basis:
            return ()
        support = set()
        for mat in self.v_basis:
            for i in range(mat.rows):
                for j in range(mat.cols):
                    if mat[i, j] != 0:
                        support.add((i, j))
        return tuple(sorted(support))


def _zero_diagonal_slice_basis(gens: DualConeGenerators) -> tuple[RationalMatrix, ...]:
    # Basis of V = {D : <g, D> = 0 for all generators, diag D = 0}, read off
    # the kernel of the generator rows stacked with r diagonal selectors.
    r = gens.r
    rows = [list(v) for v in gens.vectors]
    for d in range(r):
        picker = [Fraction(0)] * (r * r)
        picker[d * r + d] = Fraction(1)
        rows.append(picker)
    stacked = RationalMatrix.from_rows(rows) if rows else RationalMatrix.zeros(0, r * r)
    basis = nullspace_basis(stacked)
    return tuple(RationalMatrix(r, r, vec) for vec in basis)


def _squares_to_zero(basis: tuple[RationalMatrix, ...]) -> bool:
    # D^2 = 0 for every element of span(basis) iff each basis element squares
    # to zero and each pair anticommutes.
    zero = None
    for mat in basis:
        zero = RationalMatrix.zeros(mat.rows, mat.cols)
        if matmul(mat, mat) != zero:
            return False
    for x, y in combinations(basis, 2):
        xy = matmul(x, y)
        yx = matmul(y, x)
        if any(p + q != 0 for p, q in zip(xy.data, yx.data)):
            return False
    return True


def certify(
    pair: FactorizationPair, kruskal_budget: int = DEFAULT_KRUSKAL_BUDGET
) -> RigidityCertificate:
    """Classify a factorization from its dual-cone generators.

    Classification:
      * infinitesimally rigid: the generators positively span the whole
        zero-diagonal space (lineality = span rank = r^2 - r with a
        relative-interior witness);
      * interior certified: no lineality at all, so the deformation cone W
        is full dimensional and the product lies in the interior of the
        fixed-nonnegative-rank set;
      * partially infinitesimally rigid: W is a linear space with
        r < dim W < r^2 whose zero-diagonal slice V squares to zero, so the
        affine space I + V survives inside the factorization fiber;
      * undetermined: anything else; the raw dimensions are still reported.

    The Kruskal rank of the generator matrix is attached when the subset
    budget allows (pass 0 to skip it).
    """
    gens = build_dual_generators(pair)
    return _certify_generators(
        gens,
        r=pair.r,
        ambient_dim=pair.r * pair.r,
        kruskal_budget=kruskal_budget,
        symmetric=False,
    )


def _certify_generators(
    gens: DualConeGenerators,
    r: int,
    ambient_dim: int,
    kruskal_budget: int,
    symmetric: bool,
) -> RigidityCertificate:
    cone = ConeByGenerators(ambient_dim, gens.vectors)
    span_rank = rank(gens.matrix()) if gens.count else 0
    witness = zero_in_relative_interior(cone)
    if witness is not None:
        lin_dim = span_rank  # the cone is its span
    else:
        lin_dim = lineality_dimension(cone)
    dim_w = ambient_dim - lin_dim

    v_basis = None
    if symmetric:
        if lin_dim == span_rank == ambient_dim and witness is not None:
            classification = Classification.INFINITESIMALLY_RIGID
        else:
            # Without trivial deformations, any nonzero W element is a
            # genuine infinitesimal motion.
            classification = Classification.NOT_RIGID
    elif lin_dim == span_rank == ambient_dim - r and witness is not None:
        classification = Classification.INFINITESIMALLY_RIGID
    elif dim_w == ambient_dim:
        classification = Classification.INTERIOR_CERTIFIED
    elif witness is not None and r < dim_w < ambient_dim:
        candidate = _zero_diagonal_slice_basis(gens)
        if _squares_to_zero(candidate):
            classification = Classification.PARTIALLY_INFINITESIMALLY_RIGID
            v_basis = candidate
        else:
            classification = Classification.UNDETERMINED
    else:
        classification = Classification.UNDETERMINED

    kruskal = kruskal_rank_of_columns(gens.vectors, kruskal_budget)
    return RigidityCertificate(
        r=r,
        ambient_dim=ambient_dim,
        generator_count=gens.count,
        span_rank=span_rank,
        lineality_dim=lin_dim,
        relint_witness=witness,
        dim_w=dim_w,
        classification=classification,
        v_basis=v_basis,
        kruskal_rank=kruskal,
        symmetric=symmetric,
    )


def is_infinitesimally_rigid(pair: FactorizationPair) -> bool:
    """Cheap accept test: span rank r^2-r plus a relative-interior witness.

    Skips the lineality and Kruskal computations, so per-sample search loops
    pay one rank and at most one feasibility LP.
    """
    gens = build_dual_generators(pair)
    target = pair.r * pair.r - pair.r
    if target > 0 and gens.count < target + 1:
        return False
    if rank(gens.matrix()) != target:
        return False
    return zero_in_relative_interior(gens.cone()) is not None


def dim_w(pair: FactorizationPair) -> int:
    """Dimension of the deformation cone W: r^2 minus the dual lineality."""
    gens = build_dual_generators(pair)
    return pair.r * pair.r - lineality_dimension(gens.cone())


# ---------------------------------------------------------------------------
# Kruskal rank
# ---------------------------------------------------------------------------

def kruskal_rank_of_columns(columns: tuple[Vector, ...], budget: int) -> int | None:
    """Largest k such that every k columns are linearly independent.

    Descends from min(count, rank): the first level whose subsets are all
    independent is the answer.  Every subset rank test counts against
    `budget`; when the budget runs out the result is reported as unknown
    (None) rather than approximated.  An empty column list has Kruskal rank
    zero by convention.
    """
    c = len(columns)
    if c == 0:
        return 0
    height = len(columns[0])
    full_rank = rank(RationalMatrix.from_columns(columns, height))
    k = min(c, full_rank)
    used = 0
    while k >= 1:
        level_ok = True
        for subset in combinations(range(c), k):
            if used >= budget:
                return None
            used += 1
            sub = RationalMatrix.from_columns([columns[i] for i in subset], height)
            if rank(sub) != k:
                level_ok = False
                break
        if level_ok:
            return k
        k -= 1
    return 0


def kruskal_rank(gens: DualConeGenerators, budget: int = DEFAULT_KRUSKAL_BUDGET) -> int | None:
    """Kruskal rank of the generator matrix, None when over budget."""
    return kruskal_rank_of_columns(gens.vectors, budget)


@dataclass(frozen=True)
class KruskalReport:
    """Whether the generator matrix reaches its maximal possible Kruskal rank.

    For a locally rigid factorization, reaching min(count, r^2-r) implies
    infinitesimal rigidity; `holds` is None when the subset budget ran out.
    A zero-free factorization (count 0) passes vacuously.
    """

    generator_count: int
    bound: int
    kruskal_rank: int | None
    holds: bool | None


def check_kruskal_criterion(
    pair: FactorizationPair, budget: int = DEFAULT_KRUSKAL_BUDGET
) -> KruskalReport:
    gens = build_dual_generators(pair)
    target = pair.r * pair.r - pair.r
    bound = min(gens.count, target) if gens.count else 0
    k = kruskal_rank_of_columns(gens.vectors, budget)
    holds = None if k is None else (k == bound)
    return KruskalReport(gens.count, bound, k, holds)


# ---------------------------------------------------------------------------
# Necessary conditions
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ConditionResult:
    name: str
    applicable: bool
    passed: bool | None
    detail: str = ""


@dataclass(frozen=True)
class NecessaryConditionsReport:
    conditions: tuple[ConditionResult, ...]

    @property
    def all_applicable_pass(self) -> bool:
        return all(c.passed for c in self.conditions if c.applicable)


def necessary_conditions_report(pair: FactorizationPair) -> NecessaryConditionsReport:
    """Evaluate the combinatorial necessary conditions on the zero pattern.

    Conditions whose hypotheses do not apply (for example the tight-count
    lemmas when the zero count is not exactly r^2-r+1, or the per-row bound
    when the product has a zero entry) are reported as not applicable.
    Works directly on the zero supports so that pairs with an all-zero row
    of A or column of B (valid inputs that no realizable pattern object
    represents) still get a report instead of an error.
    """
    r, m, n = pair.r, pair.m, pair.n
    cols_a = tuple(
        sum(1 << i for i in range(m) if pair.a[i, j] == 0) for j in range(r)
    )
    rows_b = tuple(
        sum(1 << l for l in range(n) if pair.b[i, l] == 0) for i in range(r)
    )
    row_masks_a = [
        sum(1 << j for j in range(r) if pair.a[i, j] == 0) for i in range(m)
    ]
    col_masks_b = [
        sum(1 << i for i in range(r) if pair.b[i, l] == 0) for l in range(n)
    ]
    c = sum(mask.bit_count() for mask in cols_a) + sum(mask.bit_count() for mask in rows_b)
    tight = r * r - r + 1
    results: list[ConditionResult] = []

    results.append(
        ConditionResult(
            "zero-count",
            True,
            c >= tight,
            f"{c} zeros, need at least {tight}",
        )
    )
    results.append(
        ConditionResult(
            "boundary-closed-a",
            True,
            patterns._pairwise_separating(cols_a),
            "each ordered inner pair separated by some row of A",
        )
    )
    results.append(
        ConditionResult(
            "boundary-closed-b",
            True,
            patterns._pairwise_separating(rows_b),
            "each ordered inner pair separated by some column of B",
        )
    )
    results.append(
        ConditionResult(
            "inner-coverage",
            True,
            all(cols_a) and all(rows_b),
            "every column of A and every row of B contains a zero",
        )
    )

    product = pair.product()
    positive = product.is_strictly_positive()
    row_bound_ok = None
    if positive:
        row_bound_ok = all(mask.bit_count() <= r - 2 for mask in row_masks_a) and all(
            mask.bit_count() <= r - 2 for mask in col_masks_b
        )
    results.append(
        ConditionResult(
            "row-zero-bound",
            positive,
            row_bound_ok,
            "at most r-2 zeros per row of A and column of B (product strictly positive)",
        )
    )

    tight_case = c == tight
    col_bound_ok = None
    if tight_case:
        col_bound_ok = all(mask.bit_count() <= r - 1 for mask in cols_a) and all(
            mask.bit_count() <= r - 1 for mask in rows_b
        )
    results.append(
        ConditionResult(
            "column-zero-bound",
            tight_case,
            col_bound_ok,
            "at most r-1 zeros per column of A and row of B (tight zero count)",
        )
    )
    rect = (
        patterns.rectangle_violation_from_masks(r, row_masks_a, col_masks_b)
        if tight_case
        else None
    )
    results.append(
        ConditionResult(
            "zero-rectangles",
            tight_case,
            (rect is None) if tight_case else None,
            "no oversized zero rectangle pair (tight zero count)"
            if rect is None
            else f"violated by alpha={rect.alpha} beta={rect.beta} k={rect.k} l={rect.l}",
        )
    )
    results.append(
        ConditionResult(
            "product-positive",
            tight_case,
            positive if tight_case else None,
            "a rigid factorization with the tight zero count has strictly positive product",
        )
    )
    return NecessaryConditionsReport(tuple(results))
