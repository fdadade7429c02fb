"""Exact rational dense linear algebra.

Everything in the certification path runs on ``fractions.Fraction``: rank and
feasibility verdicts are yes/no facts that floating point can flip, so no
float ever enters these routines.  Matrices are small (a few hundred entries
at most), dense and immutable; elimination uses the first nonzero pivot in
column order so kernels and ranks are bit-identical across runs.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

Rational = Fraction
Vector = tuple[Fraction, ...]


def _coerce(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    raise TypeError(f"cannot build an exact rational from {value!r} of type {type(value).__name__}")


@dataclass(frozen=True)
class RationalMatrix:
    """Dense row-major matrix of exact rationals."""

    rows: int
    cols: int
    data: tuple[Fraction, ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ValueError("matrix dimensions must be nonnegative")
        if len(self.data) != self.rows * self.cols:
            raise ValueError(
                f"matrix data has {len(self.data)} entries, expected {self.rows}x{self.cols}"
            )

    @classmethod
    def from_rows(cls, rows: Sequence[Iterable]) -> "RationalMatrix":
        rows = [tuple(_coerce(x) for x in row) for row in rows]
        n_rows = len(rows)
        n_cols = len(rows[0]) if rows else 0
        if any(len(row) != n_cols for row in rows):
            raise ValueError("ragged rows")
        data = tuple(x for row in rows for x in row)
        return cls(n_rows, n_cols, data)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "RationalMatrix":
        return cls(rows, cols, (Fraction(0),) * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> "RationalMatrix":
        data = [Fraction(0)] * (n * n)
        for i in range(n):
            data[i * n + i] = Fraction(1)
        return cls(n, n, tuple(data))

    @classmethod
    def from_columns(cls, columns: Sequence[Vector], rows: int) -> "RationalMatrix":
        """Assemble a matrix from column vectors; `rows` fixes the height even
        when there are no columns."""
        for col in columns:
            if len(col) != rows:
                raise ValueError("column length does not match row count")
        data = tuple(col[i] for i in range(rows) for col in columns)
        return cls(rows, len(columns), data)

    def __getitem__(self, key: tuple[int, int]) -> Fraction:
        i, j = key
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(f"entry ({i},{j}) outside {self.rows}x{self.cols} matrix")
        return self.data[i * self.cols + j]

    def row(self, i: int) -> Vector:
        return self.data[i * self.cols : (i + 1) * self.cols]

    def column(self, j: int) -> Vector:
        return tuple(self.data[i * self.cols + j] for i in range(self.rows))

    def row_list(self) -> list[Vector]:
        return [self.row(i) for i in range(self.rows)]

    def transpose(self) -> "RationalMatrix":
        data = tuple(self.data[i * self.cols + j] for j in range(self.cols) for i in range(self.rows))
        return RationalMatrix(self.cols, self.rows, data)

    def is_nonnegative(self) -> bool:
        return all(x >= 0 for x in self.data)

    def is_strictly_positive(self) -> bool:
        return all(x > 0 for x in self.data)

    def __str__(self) -> str:
        rendered = [[str(x) for x in self.row(i)] for i in range(self.rows)]
        widths = [max(len(rendered[i][j]) for i in range(self.rows)) if self.rows else 0 for j in range(self.cols)]
        return "\n".join(
            " ".join(cell.rjust(widths[j]) for j, cell in enumerate(row)) for row in rendered
        )


def matmul(a: RationalMatrix, b: RationalMatrix) -> RationalMatrix:
    """Exact matrix product; raises on inner-dimension mismatch."""
    if a.cols != b.rows:
        raise ValueError(f"cannot multiply {a.rows}x{a.cols} by {b.rows}x{b.cols}")
    out = []
    for i in range(a.rows):
        arow = a.row(i)
        for j in range(b.cols):
            s = Fraction(0)
            for k in range(a.cols):
                aik = arow[k]
                if aik:
                    s += aik * b.data[k * b.cols + j]
            out.append(s)
    return RationalMatrix(a.rows, b.cols, tuple(out))


def _echelon(m: RationalMatrix) -> tuple[list[list[Fraction]], list[int]]:
    """Row-reduce a copy of `m`; returns (reduced rows, pivot column list).

    Pivot choice is the first nonzero entry in column order, which makes the
    reduced form and everything derived from it deterministic.
    """
    work = [list(m.row(i)) for i in range(m.rows)]
    pivots: list[int] = []
    piv_row = 0
    for col in range(m.cols):
        found = None
        for i in range(piv_row, m.rows):
            if work[i][col]:
                found = i
                break
        if found is None:
            continue
        if found != piv_row:
            work[piv_row], work[found] = work[found], work[piv_row]
        pivot = work[piv_row][col]
        if pivot != 1:
            work[piv_row] = [x / pivot for x in work[piv_row]]
        for i in range(m.rows):
            if i == piv_row:
                continue
            factor = work[i][col]
            if factor:
                row_i = work[i]
                row_p = work[piv_row]
                for j in range(col, m.cols):
                    row_i[j] -= factor * row_p[j]
        pivots.append(col)
        piv_row += 1
        if piv_row == m.rows:
            break
    return work, pivots


def rank(m: RationalMatrix) -> int:
    """Exact rank over the rationals."""
    _, pivots = _echelon(m)
    return len(pivots)


def nullspace_basis(m: RationalMatrix) -> list[Vector]:
    """Deterministic basis of the right kernel; empty iff rank equals cols."""
    work, pivots = _echelon(m)
    pivot_set = set(pivots)
    free_cols = [j for j in range(m.cols) if j not in pivot_set]
    basis = []
    for free in free_cols:
        vec = [Fraction(0)] * m.cols
        vec[free] = Fraction(1)
        for row_idx, piv_col in enumerate(pivots):
            vec[piv_col] = -work[row_idx][free]
        basis.append(tuple(vec))
    return basis


def vec_add(a: Vector, b: Vector) -> Vector:
    return tuple(x + y for x, y in zip(a, b, strict=True))

def vec_sub(a: Vector, b: Vector) -> Vector:
    return tuple(x - y for x, y in zip(a, b, strict=True))

def vec_scale(c: Fraction, a: Vector) -> Vector:
    return tuple(c * x for x in a)

def vec_neg(a: Vector) -> Vector:
    return tuple(-x for x in a)

def vec_dot(a: Vector, b: Vector) -> Fraction:
    return sum((x * y for x, y in zip(a, b, strict=True)), Fraction(0))

def is_zero_vector(a: Vector) -> bool:
    return all(x == 0 for x in a)

def zero_vector(n: int) -> Vector:
    return (Fraction(0),) * n


def matvec(m: RationalMatrix, v: Vector) -> Vector:
    if len(v) != m.cols:
        raise ValueError(f"vector of length {len(v)} against {m.rows}x{m.cols} matrix")
    return tuple(vec_dot(m.row(i), v) for i in range(m.rows))
