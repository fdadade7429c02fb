"""Zero-pattern combinatorics for factorizations (A, B).

A pattern records which entries of the two factors are forced to zero.  Two
patterns are considered the same when one maps to the other by permuting
rows of A, permuting columns of B, permuting the inner index (columns of A
together with rows of B), or, for square products, swapping the roles of
A and B via transposition.  This module provides the combinatorial
necessary-condition filters for infinitesimal rigidity, a canonical form
under that group, and exhaustive enumeration of orbit representatives with
a given zero count.

Bit tricks: a column of the A-pattern is held as an integer mask over the
row set, a row of the B-pattern as a mask over the column set.  Every test
and the whole enumeration run on these masks; booleans appear only at the
public boundary.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache

BoolMatrix = tuple[tuple[bool, ...], ...]


class PatternFilter(Enum):
    """Named necessary-condition filters for enumeration."""

    WPOINT = "wpoint"
    COLUMN_BOUND = "column-bound"
    ROW_COVERAGE_A = "row-coverage-a"
    COLUMN_COVERAGE_B = "column-coverage-b"
    POSITIVE_PRODUCT = "positive-product"
    ZERO_RECTANGLES = "zero-rectangles"


@dataclass(frozen=True)
class ZeroPattern:
    """Forced zeros of an m x r factor A and an r x n factor B.

    True marks a forced zero.  An all-true row of `zeros_a` or all-true
    column of `zeros_b` is rejected: it would force a zero row of A or zero
    column of B, which no valid factorization pair realizes.
    """

    m: int
    n: int
    r: int
    zeros_a: BoolMatrix
    zeros_b: BoolMatrix

    def __post_init__(self):
        if len(self.zeros_a) != self.m or any(len(row) != self.r for row in self.zeros_a):
            raise ValueError(f"zeros_a must be {self.m}x{self.r}")
        if len(self.zeros_b) != self.r or any(len(row) != self.n for row in self.zeros_b):
            raise ValueError(f"zeros_b must be {self.r}x{self.n}")
        for i, row in enumerate(self.zeros_a):
            if self.r and all(row):
                raise ValueError(f"row {i} of the A-pattern is entirely zero")
        for l in range(self.n):
            if self.r and all(self.zeros_b[i][l] for i in range(self.r)):
                raise ValueError(f"column {l} of the B-pattern is entirely zero")

    @property
    def zero_count(self) -> int:
        return sum(x for row in self.zeros_a for x in row) + sum(
            x for row in self.zeros_b for x in row
        )

    @classmethod
    def from_masks(
        cls, m: int, n: int, r: int, cols_a: tuple[int, ...], rows_b: tuple[int, ...]
    ) -> "ZeroPattern":
        zeros_a = tuple(
            tuple(bool((cols_a[j] >> i) & 1) for j in range(r)) for i in range(m)
        )
        zeros_b = tuple(
            tuple(bool((rows_b[i] >> l) & 1) for l in range(n)) for i in range(r)
        )
        return cls(m, n, r, zeros_a, zeros_b)

    def cols_a_masks(self) -> tuple[int, ...]:
        """Column j of the A-pattern as a bit mask over rows."""
        return tuple(
            sum(1 << i for i in range(self.m) if self.zeros_a[i][j]) for j in range(self.r)
        )

    def rows_b_masks(self) -> tuple[int, ...]:
        """Row i of the B-pattern as a bit mask over columns."""
        return tuple(
            sum(1 << l for l in range(self.n) if self.zeros_b[i][l]) for i in range(self.r)
        )


def pattern_of_factorization(a_rows: list, b_rows: list) -> ZeroPattern:
    """Zero pattern of explicit factor matrices given as row lists."""
    m, r, n = len(a_rows), len(b_rows), len(b_rows[0]) if b_rows else 0
    zeros_a = tuple(tuple(x == 0 for x in row) for row in a_rows)
    zeros_b = tuple(tuple(x == 0 for x in row) for row in b_rows)
    return ZeroPattern(m, n, r, zeros_a, zeros_b)


@dataclass(frozen=True)
class PatternGroupElement:
    """One symmetry of the pattern group.

    Acts by optionally swapping (zeros_a, zeros_b) -> (zeros_b^T, zeros_a^T)
    first, then permuting rows of the A-pattern, columns of the B-pattern
    and the inner index simultaneously on both factors.
    """

    row_perm_a: tuple[int, ...]
    col_perm_b: tuple[int, ...]
    inner_perm: tuple[int, ...]
    transposed: bool = False

    def apply(self, pattern: ZeroPattern) -> ZeroPattern:
        za, zb = pattern.zeros_a, pattern.zeros_b
        m, n, r = pattern.m, pattern.n, pattern.r
        if self.transposed:
            za, zb = (
                tuple(tuple(zb[j][i] for j in range(r)) for i in range(n)),
                tuple(tuple(za[j][i] for j in range(m)) for i in range(r)),
            )
            m, n = n, m
        new_a = tuple(
            tuple(za[self.row_perm_a[i]][self.inner_perm[j]] for j in range(r))
            for i in range(m)
        )
        new_b = tuple(
            tuple(zb[self.inner_perm[i]][self.col_perm_b[l]] for l in range(n))
            for i in range(r)
        )
        return ZeroPattern(m, n, r, new_a, new_b)


# ---------------------------------------------------------------------------
# Necessary-condition checks
# ---------------------------------------------------------------------------

def _pairwise_separating(masks: tuple[int, ...]) -> bool:
    # For every ordered pair i != j some ground element lies in masks[i]
    # but not masks[j]; equivalently no containment between distinct slots.
    r = len(masks)
    for i in range(r):
        for j in range(r):
            if i != j and masks[i] & ~masks[j] == 0:
                return False
    return True


def check_wpoint(pattern: ZeroPattern) -> bool:
    """Zero count at least r^2-r+1 and both factors boundary closed.

    Boundary closed means: for every ordered inner pair (i, j) some row of A
    is zero at i but not at j, and some column of B is zero at i but not at
    j.  In mask terms both sides must be pairwise non-contained.
    """
    r = pattern.r
    if pattern.zero_count < r * r - r + 1:
        return False
    return _pairwise_separating(pattern.cols_a_masks()) and _pairwise_separating(
        pattern.rows_b_masks()
    )


def forces_product_zero(pattern: ZeroPattern) -> bool:
    """True when some product entry is identically zero under the pattern.

    Entry (i, l) of AB vanishes for every realization exactly when the zero
    support of row i of A and the zero support of column l of B together
    cover all r inner indices.  A rigid factorization with the tight zero
    count has a strictly positive product, so such patterns admit no rigid
    realization.
    """
    r = pattern.r
    full = (1 << r) - 1
    row_masks_a = [
        sum(1 << j for j in range(r) if pattern.zeros_a[i][j]) for i in range(pattern.m)
    ]
    col_masks_b = [
        sum(1 << i for i in range(r) if pattern.zeros_b[i][l]) for l in range(pattern.n)
    ]
    return any(sa | tb == full for sa in row_masks_a for tb in col_masks_b)


def _require_tight_count(pattern: ZeroPattern) -> None:
    r = pattern.r
    expected = r * r - r + 1
    if pattern.zero_count != expected:
        raise ValueError(
            f"check applies only at exactly {expected} zeros, pattern has {pattern.zero_count}"
        )


def check_column_bound(pattern: ZeroPattern) -> bool:
    """At a tight zero count, every column of A and row of B has <= r-1 zeros."""
    _require_tight_count(pattern)
    bound = pattern.r - 1
    if any(mask.bit_count() > bound for mask in pattern.cols_a_masks()):
        return False
    return all(mask.bit_count() <= bound for mask in pattern.rows_b_masks())


@dataclass(frozen=True)
class RectangleViolation:
    """A pair of zero blocks too large to coexist in a rigid pattern.

    `alpha` and `beta` are 0-based inner index tuples; `k` rows of the
    A-pattern are zero on all of alpha and `l` columns of the B-pattern are
    zero on all of beta.
    """

    alpha: tuple[int, ...]
    beta: tuple[int, ...]
    k: int
    l: int


def check_zero_rectangles(pattern: ZeroPattern) -> RectangleViolation | None:
    """Search all inner subsets alpha, beta for an oversized zero rectangle.

    At a tight zero count the generators carried by a k x |alpha| zero block
    of A and a |beta| x l zero block of B must fit inside their common
    support, which bounds
    k|alpha| + l|beta| <= (r-|alpha|)|alpha| + (r-|beta|)|beta| - |alpha-beta||beta-alpha|.
    Returns the first violation in increasing (alpha, beta) mask order, or
    None if the pattern passes.
    """
    _require_tight_count(pattern)
    r = pattern.r
    row_masks_a = [
        sum(1 << j for j in range(r) if pattern.zeros_a[i][j]) for i in range(pattern.m)
    ]
    col_masks_b = [
        sum(1 << i for i in range(r) if pattern.zeros_b[i][l]) for l in range(pattern.n)
    ]
    return rectangle_violation_from_masks(r, row_masks_a, col_masks_b)


def rectangle_violation_from_masks(
    r: int, row_masks_a: list[int], col_masks_b: list[int]
) -> RectangleViolation | None:
    """Rectangle search on raw zero supports (rows of A, columns of B)."""
    for alpha in range(1 << r):
        size_a = alpha.bit_count()
        k = sum(1 for mask in row_masks_a if mask & alpha == alpha)
        for beta in range(1 << r):
            size_b = beta.bit_count()
            l = sum(1 for mask in col_masks_b if mask & beta == beta)
            bound = (
                (r - size_a) * size_a
                + (r - size_b) * size_b
                - (alpha & ~beta).bit_count() * (beta & ~alpha).bit_count()
            )
            if k * size_a + l * size_b > bound:
                return RectangleViolation(
                    alpha=tuple(j for j in range(r) if (alpha >> j) & 1),
                    beta=tuple(j for j in range(r) if (beta >> j) & 1),
                    k=k,
                    l=l,
                )
    return None


# ---------------------------------------------------------------------------
# Canonical forms
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def _perms(r: int) -> tuple[tuple[int, ...], ...]:
    return tuple(itertools.permutations(range(r)))


def _enc_a(cols: tuple[int, ...], perm: tuple[int, ...], m: int, r: int) -> tuple[int, ...]:
    # Rows of the A-pattern after applying `perm` to the inner index, each
    # packed into an int with inner slot 0 as the most significant bit,
    # sorted ascending (= the optimal row permutation).
    rows = []
    for i in range(m):
        v = 0
        for j in range(r):
            v = (v << 1) | ((cols[perm[j]] >> i) & 1)
        rows.append(v)
    rows.sort()
    return tuple(rows)


def _enc_b(rows_b: tuple[int, ...], order: tuple[int, ...], n: int, r: int) -> tuple[int, ...]:
    # Sort the columns of the permuted B-pattern (read top to bottom), then
    # emit the row-major reading; sorting columns minimizes that reading
    # over all column permutations.
    cols = []
    for l in range(n):
        v = 0
        for j in range(r):
            v = (v << 1) | ((rows_b[order[j]] >> l) & 1)
        cols.append(v)
    cols.sort()
    out = []
    for j in range(r):
        shift = r - 1 - j
        w = 0
        for cv in cols:
            w = (w << 1) | ((cv >> shift) & 1)
        out.append(w)
    return tuple(out)


def _full_key(
    m: int, n: int, r: int, cols_a: tuple[int, ...], rows_b: tuple[int, ...]
) -> tuple[tuple[int, ...], tuple[int, ...]]:
    best = None
    for perm in _perms(r):
        enc = (_enc_a(cols_a, perm, m, r), _enc_b(rows_b, perm, n, r))
        if best is None or enc < best:
            best = enc
    if m == n:
        # Transposition is an automorphism of the shape only for square
        # products; the A side of the swapped pattern is built from rows_b.
        for perm in _perms(r):
            enc = (_enc_a(rows_b, perm, n, r), _enc_b(cols_a, perm, m, r))
            if enc < best:
                best = enc
    return best


def _pattern_from_key(
    m: int, n: int, r: int, key: tuple[tuple[int, ...], tuple[int, ...]]
) -> ZeroPattern:
    enc_a, enc_b = key
    zeros_a = tuple(
        tuple(bool((enc_a[i] >> (r - 1 - j)) & 1) for j in range(r)) for i in range(m)
    )
    zeros_b = tuple(
        tuple(bool((enc_b[j] >> (n - 1 - l)) & 1) for l in range(n)) for j in range(r)
    )
    return ZeroPattern(m, n, r, zeros_a, zeros_b)


def canonical_form(pattern: ZeroPattern) -> ZeroPattern:
    """Lexicographically least pattern in the symmetry orbit.

    The encoding compared is the row-major bits of the A-pattern followed by
    the row-major bits of the B-pattern; the minimum is taken over all inner
    permutations, the optimal row sort of A, the optimal column sort of B,
    and (for m = n) the transposition swap.  Idempotent by construction.
    """
    key = _full_key(
        pattern.m, pattern.n, pattern.r, pattern.cols_a_masks(), pattern.rows_b_masks()
    )
    return _pattern_from_key(pattern.m, pattern.n, pattern.r, key)


# ---------------------------------------------------------------------------
# Enumeration
# ---------------------------------------------------------------------------

def _side_key(
    masks: tuple[int, ...], ground: int, r: int
) -> tuple[tuple[int, ...], tuple[tuple[int, ...], ...]]:
    # Canonical encoding of one side under ground relabeling x inner
    # permutations, together with every inner permutation achieving it.
    best = None
    argmins: list[tuple[int, ...]] = []
    for perm in _perms(r):
        enc = _enc_a(masks, perm, ground, r)
        if best is None or enc < best:
            best = enc
            argmins = [perm]
        elif enc == best:
            argmins.append(perm)
    return best, tuple(argmins)


def _side_classes(
    ground: int,
    r: int,
    cap: int,
    incomparable: bool,
    cover: bool,
    z_min: int,
    z_max: int,
) -> dict[int, list[tuple[tuple[int, ...], tuple[int, ...], tuple[tuple[int, ...], ...]]]]:
    """Orbit representatives of one side's support multiset, bucketed by zero count.

    A side is an r-tuple of ground subsets (columns of the A-pattern or rows
    of the B-pattern).  With `incomparable` set, slots must be pairwise
    non-contained (the boundary-closed consequence), which also rules out
    duplicates and empties for r >= 2.  The all-ground intersection is
    always rejected: it would be an all-zero row of A or column of B.
    """
    full = (1 << ground) - 1
    masks = sorted(
        (m for m in range(1 << ground) if m.bit_count() <= cap),
        key=lambda m: (m.bit_count(), m),
    )
    counts = [m.bit_count() for m in masks]
    out: dict[int, list] = {}
    seen: dict[int, set] = {}
    chosen: list[int] = []

    def emit(z: int) -> None:
        if not (z_min <= z <= z_max):
            return
        acc_and = full
        acc_or = 0
        for c in chosen:
            acc_and &= c
            acc_or |= c
        if acc_and and r:
            return
        if cover and acc_or != full:
            return
        tup = tuple(chosen)
        key, mins = _side_key(tup, ground, r)
        bucket = seen.setdefault(z, set())
        if key in bucket:
            return
        bucket.add(key)
        out.setdefault(z, []).append((tup, key, mins))

    def rec(start: int, total: int) -> None:
        if len(chosen) == r:
            emit(total)
            return
        remaining = r - len(chosen)
        for idx in range(start, len(masks)):
            pc = counts[idx]
            if total + remaining * pc > z_max:
                break  # masks are sorted by popcount, no later index fits
            if total + pc + (remaining - 1) * cap < z_min:
                continue
            cand = masks[idx]
            if incomparable:
                ok = True
                for prev in chosen:
                    if prev & ~cand == 0 or cand & ~prev == 0:
                        ok = False
                        break
                if not ok:
                    continue
            chosen.append(cand)
            rec(idx, total + pc)
            chosen.pop()

    rec(0, 0)
    return out


def _compose(p: tuple[int, ...], q: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(p[q[j]] for j in range(len(p)))


def _invert(p: tuple[int, ...]) -> tuple[int, ...]:
    inv = [0] * len(p)
    for j, pj in enumerate(p):
        inv[pj] = j
    return tuple(inv)


def _coerce_filters(filters) -> frozenset[PatternFilter]:
    coerced = set()
    for f in filters:
        coerced.add(f if isinstance(f, PatternFilter) else PatternFilter(f))
    return frozenset(coerced)


def enumerate_patterns(m: int, n: int, r: int, zeros: int, filters) -> list[ZeroPattern]:
    """All canonical orbit representatives with the requested zero count.

    Columns of the A-pattern and rows of the B-pattern are chosen as ground
    subsets with the pairwise non-containment and per-slot bounds pruned in
    during generation; the two sides are bucketed by zero count, reduced to
    per-side orbit representatives, paired in every inner alignment, and
    finally deduplicated by the full canonical form.  The cheap
    POSITIVE_PRODUCT test and the expensive zero rectangle filter run last,
    on representatives only (both are invariant under the full group).

    Coverage filters are literal: ROW_COVERAGE_A means every row of A
    contains a zero, COLUMN_COVERAGE_B means every column of B contains a
    zero, each checked in the generated orientation.  For square shapes a
    pattern is kept when any orientation of its orbit passes, since the
    canonical form identifies the two orientations.
    """
    fset = _coerce_filters(filters)
    wpoint = PatternFilter.WPOINT in fset
    if zeros < 0:
        raise ValueError("zero count must be nonnegative")
    if m < 1 or n < 1 or r < 1:
        raise ValueError("dimensions must be positive")
    if wpoint and zeros < r * r - r + 1:
        return []

    colbound = PatternFilter.COLUMN_BOUND in fset
    cap_a = min(m, r - 1 if colbound else m)
    cap_b = min(n, r - 1 if colbound else n)
    cover_a = PatternFilter.ROW_COVERAGE_A in fset
    cover_b = PatternFilter.COLUMN_COVERAGE_B in fset

    side_floor = r if (wpoint and r >= 2) else 0
    a_min = max(side_floor, m if cover_a else 0)
    b_min = max(side_floor, n if cover_b else 0)
    a_sides = _side_classes(m, r, cap_a, wpoint, cover_a, a_min, zeros - b_min)
    b_sides = _side_classes(n, r, cap_b, wpoint, cover_b, b_min, zeros - a_min)

    square = m == n
    perms = _perms(r)
    found: dict = {}
    for z_a, a_list in sorted(a_sides.items()):
        b_list = b_sides.get(zeros - z_a)
        if not b_list:
            continue
        for a_masks, a_key, a_mins in a_list:
            for b_masks, b_key, b_mins in b_list:
                seen_orders = set()
                for pi in perms:
                    ordered = tuple(b_masks[pi[j]] for j in range(r))
                    if ordered in seen_orders:
                        continue
                    seen_orders.add(ordered)
                    enc_b = min(_enc_b(b_masks, _compose(pi, s), n, r) for s in a_mins)
                    key = (a_key, enc_b)
                    if square:
                        inv = _invert(pi)
                        enc_b2 = min(
                            _enc_b(a_masks, _compose(inv, rho), m, r) for rho in b_mins
                        )
                        key2 = (b_key, enc_b2)
                        if key2 < key:
                            key = key2
                    found.setdefault(key)
    reps = [_pattern_from_key(m, n, r, key) for key in sorted(found)]
    if PatternFilter.POSITIVE_PRODUCT in fset:
        reps = [p for p in reps if not forces_product_zero(p)]
    if PatternFilter.ZERO_RECTANGLES in fset:
        reps = [p for p in reps if check_zero_rectangles(p) is None]
    return reps


def table1_filters(m: int, n: int) -> frozenset[PatternFilter]:
    """Filter set reproducing the published shape-by-shape pattern counts.

    All shapes use the zero-count/pair conditions, the per-column bound, the
    positive-product exclusion and row coverage of A.  Column coverage of B
    engages exactly where the published enumeration applied it: whenever B
    was run with six columns, which includes the 6x5 product, evidently
    enumerated in its transposed 5x6 orientation.  The n = 5 runs had no
    B-coverage condition, and indeed some of their published counterparts
    (9x5 among them) contain patterns with a zero-free column of B.
    """
    base = {
        PatternFilter.WPOINT,
        PatternFilter.COLUMN_BOUND,
        PatternFilter.ROW_COVERAGE_A,
        PatternFilter.POSITIVE_PRODUCT,
    }
    if n == 6 or (m, n) == (6, 5):
        base.add(PatternFilter.COLUMN_COVERAGE_B)
    return frozenset(base)
