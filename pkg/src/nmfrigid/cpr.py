"""Rigidity of symmetric factorizations M = A A^T.

The factor A is unique up to the orthogonal group, whose tangent space at
the identity consists of skew-symmetric matrices; coordinates here are the
above-diagonal entries d_{kl}, k < l, in row-major pair order.  Each zero
of A cuts the motion cone by one linear inequality, so the whole machinery
of the nonsymmetric case applies with r(r-1)/2 in place of r^2 - r, with
one structural difference: there are no trivial deformations, so a factor
is infinitesimally rigid exactly when its motion cone is the origin, and
anything else is definitively not rigid.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exactlin import RationalMatrix, Vector, rank
from .patterns import _pairwise_separating, _perms
from .rigidity import (
    DEFAULT_KRUSKAL_BUDGET,
    ConditionResult,
    DualConeGenerators,
    GeneratorSource,
    KruskalReport,
    NecessaryConditionsReport,
    RigidityCertificate,
    _certify_generators,
    kruskal_rank_of_columns,
)


@dataclass(frozen=True)
class SymmetricFactor:
    """Nonnegative n x r factor of full rank r."""

    a: RationalMatrix

    def __post_init__(self):
        for i in range(self.a.rows):
            for j in range(self.a.cols):
                if self.a[i, j] < 0:
                    raise ValueError(f"A[{i},{j}] = {self.a[i, j]} is negative")
        if rank(self.a) != self.a.cols:
            raise ValueError(f"A has rank below {self.a.cols}")

    @property
    def r(self) -> int:
        return self.a.cols

    @property
    def n(self) -> int:
        return self.a.rows

    def gram(self) -> RationalMatrix:
        from .exactlin import matmul

        return matmul(self.a, self.a.transpose())


def skew_coordinate_pairs(r: int) -> tuple[tuple[int, int], ...]:
    """Row-major above-diagonal pair order (0,1), (0,2), ..., (r-2,r-1)."""
    return tuple((k, l) for k in range(r) for l in range(k + 1, r))


def build_skew_generators(factor: SymmetricFactor) -> DualConeGenerators:
    """One generator per zero of A, in row-major order over the entries.

    The zero at (i, j) imposes d_j . a_i >= 0 on skew matrices D; in the
    above-diagonal coordinates the functional has +a_{i,k} at pair (k, j)
    with k < j and -a_{i,l} at pair (j, l) with l > j.  For r = 1 the
    tangent space is zero dimensional and the generator list is empty.
    """
    r = factor.r
    pairs = skew_coordinate_pairs(r)
    index = {pair: pos for pos, pair in enumerate(pairs)}
    vectors: list[Vector] = []
    sources: list[GeneratorSource] = []
    if r >= 2:
        for i in range(factor.n):
            row = factor.a.row(i)
            for j in range(r):
                if row[j] == 0:
                    vec = [Fraction(0)] * len(pairs)
                    for k in range(j):
                        vec[index[(k, j)]] = row[k]
                    for l in range(j + 1, r):
                        vec[index[(j, l)]] = -row[l]
                    vectors.append(tuple(vec))
                    sources.append(GeneratorSource("A", i, j))
    return DualConeGenerators(r, len(pairs), tuple(vectors), tuple(sources))


def certify_cp(
    factor: SymmetricFactor, kruskal_budget: int = DEFAULT_KRUSKAL_BUDGET
) -> RigidityCertificate:
    """Certificate for a symmetric factor; rigid means the motion cone is {0}.

    Infinitesimally rigid exactly when the skew generators positively span
    the full r(r-1)/2-dimensional tangent space; since the symmetric
    setting has no trivial deformations, every other outcome is reported as
    not rigid.  For r <= 1 the tangent space is trivial and the factor is
    rigid vacuously.
    """
    gens = build_skew_generators(factor)
    r = factor.r
    ambient = r * (r - 1) // 2
    return _certify_generators(
        gens, r=r, ambient_dim=ambient, kruskal_budget=kruskal_budget, symmetric=True
    )


def cp_necessary_conditions(factor: SymmetricFactor) -> NecessaryConditionsReport:
    """Combinatorial necessary conditions on the zero pattern of A."""
    r, n = factor.r, factor.n
    a = factor.a
    col_masks = tuple(
        sum(1 << i for i in range(n) if a[i, j] == 0) for j in range(r)
    )
    row_zero_counts = [sum(1 for x in a.row(i) if x == 0) for i in range(n)]
    c = sum(row_zero_counts)
    tight = r * (r - 1) // 2 + 1
    results: list[ConditionResult] = []

    results.append(
        ConditionResult("zero-count", True, c >= tight, f"{c} zeros, need at least {tight}")
    )
    results.append(
        ConditionResult(
            "boundary-closed",
            True,
            _pairwise_separating(col_masks),
            "each ordered inner pair separated by some row of A",
        )
    )
    results.append(
        ConditionResult(
            "column-coverage",
            True,
            all(col_masks),
            "every column of A contains a zero",
        )
    )

    gram = factor.gram()
    positive = gram.is_strictly_positive()
    results.append(
        ConditionResult(
            "row-zero-bound",
            positive,
            all(z <= r - 2 for z in row_zero_counts) if positive else None,
            "at most r-2 zeros per row of A (Gram matrix strictly positive)",
        )
    )

    tight_case = c == tight
    results.append(
        ConditionResult(
            "column-zero-bound",
            tight_case,
            all(mask.bit_count() <= r - 1 for mask in col_masks) if tight_case else None,
            "at most r-1 zeros per column of A (tight zero count)",
        )
    )
    rect_detail = ""
    rect_ok = None
    if tight_case:
        rect_ok = True
        row_masks = [
            sum(1 << j for j in range(r) if a[i, j] == 0) for i in range(n)
        ]
        for alpha in range(1, 1 << r):
            size = alpha.bit_count()
            k = sum(1 for mask in row_masks if mask & alpha == alpha)
            if k > r - size:
                rect_ok = False
                rect_detail = (
                    f"{k} rows zero on columns {tuple(j for j in range(r) if (alpha >> j) & 1)}"
                )
                break
    results.append(
        ConditionResult(
            "zero-rectangles",
            tight_case,
            rect_ok,
            rect_detail or "no k x |alpha| zero block with k > r - |alpha| (tight zero count)",
        )
    )
    # Positivity of the Gram matrix is necessary only for r >= 3: at r = 2
    # the two zeros of a rigid tight factor can sit in complementary rows
    # (the 2x2 coordinate permutation is rigid with Gram matrix I), so the
    # subset-minimality argument behind the corollary has nothing to bite.
    gram_applicable = tight_case and r >= 3
    results.append(
        ConditionResult(
            "gram-positive",
            gram_applicable,
            positive if gram_applicable else None,
            "a rigid factor with the tight zero count has strictly positive Gram matrix (r >= 3)",
        )
    )
    return NecessaryConditionsReport(tuple(results))


def cp_kruskal_criterion(
    factor: SymmetricFactor, budget: int = DEFAULT_KRUSKAL_BUDGET
) -> KruskalReport:
    """Whether the skew generator matrix reaches Kruskal rank min(c, r(r-1)/2)."""
    gens = build_skew_generators(factor)
    bound = min(gens.count, factor.r * (factor.r - 1) // 2) if gens.count else 0
    k = kruskal_rank_of_columns(gens.vectors, budget)
    holds = None if k is None else (k == bound)
    return KruskalReport(gens.count, bound, k, holds)


def canonical_symmetric_pattern(zeros_a: tuple[tuple[bool, ...], ...]) -> tuple[tuple[bool, ...], ...]:
    """Canonical form of a factor zero pattern under row and column permutations.

    No transpose and no second factor here; the encoding is the row-major
    reading with rows sorted, minimized over all column permutations.
    """
    n = len(zeros_a)
    r = len(zeros_a[0]) if n else 0
    best = None
    for perm in _perms(r):
        rows = sorted(
            sum((1 if zeros_a[i][perm[j]] else 0) << (r - 1 - j) for j in range(r))
            for i in range(n)
        )
        enc = tuple(rows)
        if best is None or enc < best:
            best = enc
    return tuple(
        tuple(bool((best[i] >> (r - 1 - j)) & 1) for j in range(r)) for i in range(n)
    )


def enumerate_symmetric_patterns(
    n: int, r: int, zeros: int, require_pairs: bool = True, column_bound: bool = False
) -> list[tuple[tuple[bool, ...], ...]]:
    """Canonical factor zero patterns with the given zero count.

    `require_pairs` imposes the one-sided boundary-closed condition (some
    row zero at i and nonzero at j for every ordered pair), which is the
    symmetric counterpart of the rigidity count filter; `column_bound`
    imposes at most r-1 zeros per column.  No published counts exist for
    this case, so the enumeration is provided as a generic tool only.
    """
    if n < 1 or r < 1 or zeros < 0:
        raise ValueError("dimensions must be positive and zeros nonnegative")
    cap = min(n, r - 1 if column_bound else n)
    masks = sorted(
        (m for m in range(1 << n) if m.bit_count() <= cap),
        key=lambda m: (m.bit_count(), m),
    )
    found: set[tuple[tuple[bool, ...], ...]] = set()
    chosen: list[int] = []

    def emit(total: int) -> None:
        if total != zeros:
            return
        if require_pairs and not _pairwise_separating(tuple(chosen)):
            return
        full = (1 << n) - 1
        acc = full
        for c in chosen:
            acc &= c
        if acc:
            return  # an all-zero row of A drops no rank but is never realizable
        zeros_a = tuple(
            tuple(bool((chosen[j] >> i) & 1) for j in range(r)) for i in range(n)
        )
        found.add(canonical_symmetric_pattern(zeros_a))

    def rec(start: int, total: int) -> None:
        if len(chosen) == r:
            emit(total)
            return
        remaining = r - len(chosen)
        for idx in range(start, len(masks)):
            pc = masks[idx].bit_count()
            if total + remaining * pc > zeros:
                break
            chosen.append(masks[idx])
            rec(idx, total + pc)
            chosen.pop()

    rec(0, 0)
    return sorted(found)
