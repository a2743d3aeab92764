"""Exact shifted Hankel determinants over arbitrary precision integers.

The production kernel is fraction-free elimination: every update divides
exactly by the previous pivot, keeping intermediates integral with no
rational arithmetic.  Row pivoting on the first nonzero entry handles the
many exactly-zero determinants that occur here; a fully zero pivot column
short-circuits to 0.  A recursive cofactor expansion is kept as an
independent oracle for small orders.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import InsufficientCoefficientsError, SizeLimitError
from .series import CoeffSeries

NAIVE_DET_MAX_ORDER = 8


@dataclass(frozen=True)
class HankelSpec:
    """Order n and coefficient shift k of one determinant request.

    Entry (i, j) of the matrix is coefficient f_{k+i+j}; the source series
    must cover index k + 2n - 2.  Order 0 is allowed and yields the empty
    determinant 1, which keeps recursive identities uniform.
    """

    n: int
    k: int = 0

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError(f"order must be nonnegative, got {self.n}")
        if self.k < 0:
            raise ValueError(f"shift must be nonnegative, got {self.k}")

    @property
    def highest_index(self) -> int:
        return self.k + 2 * self.n - 2


def det_fraction_free(rows: list[list[int]]) -> int:
    """Determinant by Bareiss-style exact elimination.  Consumes `rows`."""
    n = len(rows)
    if n == 0:
        return 1
    for row in rows:
        if len(row) != n:
            raise ValueError("matrix must be square")
    sign = 1
    prev = 1
    for col in range(n - 1):
        if rows[col][col] == 0:
            for i in range(col + 1, n):
                if rows[i][col]:
                    rows[col], rows[i] = rows[i], rows[col]
                    sign = -sign
                    break
            else:
                return 0
        pivot_row = rows[col][col:]
        pivot = pivot_row[0]
        for i in range(col + 1, n):
            row = rows[i]
            head = row[col]
            if head:
                if prev == 1:
                    row[col + 1:] = [
                        pivot * a - head * b for a, b in zip(row[col + 1:], pivot_row[1:])
                    ]
                else:
                    row[col + 1:] = [
                        (pivot * a - head * b) // prev
                        for a, b in zip(row[col + 1:], pivot_row[1:])
                    ]
            elif pivot != prev:
                if prev == 1:
                    row[col + 1:] = [pivot * a for a in row[col + 1:]]
                else:
                    row[col + 1:] = [(pivot * a) // prev for a in row[col + 1:]]
        prev = pivot
    return sign * rows[n - 1][n - 1]


def hankel_matrix(series: CoeffSeries, spec: HankelSpec) -> list[list[int]]:
    """Materialize the n x n matrix with entry (i, j) = f_{k+i+j}."""
    if spec.n > 0 and spec.highest_index > series.order:
        raise InsufficientCoefficientsError(
            f"need coefficients through index {spec.highest_index}, "
            f"series stops at {series.order}"
        )
    c = series.coeffs
    return [list(c[spec.k + i: spec.k + i + spec.n]) for i in range(spec.n)]


def hankel_det(series: CoeffSeries, spec: HankelSpec) -> int:
    """Exact determinant of the shifted Hankel matrix of the series."""
    return det_fraction_free(hankel_matrix(series, spec))


def naive_det(matrix: list[list[int]]) -> int:
    """Cofactor-expansion determinant, the oracle for orders up to 8."""
    n = len(matrix)
    if n > NAIVE_DET_MAX_ORDER:
        raise SizeLimitError(f"cofactor oracle supports order <= {NAIVE_DET_MAX_ORDER}")
    for row in matrix:
        if len(row) != n:
            raise ValueError("matrix must be square")

    def expand(rows: list[list[int]]) -> int:
        if not rows:
            return 1
        if len(rows) == 1:
            return rows[0][0]
        total = 0
        sign = 1
        for j, top in enumerate(rows[0]):
            if top:
                minor = [row[:j] + row[j + 1:] for row in rows[1:]]
                total += sign * top * expand(minor)
            sign = -sign
        return total

    return expand(matrix)


def hankel_sequence(series: CoeffSeries, N: int) -> list[int]:
    """The unshifted determinants (H_1, ..., H_N)."""
    if N < 1:
        raise ValueError(f"need at least one term, got N={N}")
    needed = 2 * N - 2
    if needed > series.order:
        raise InsufficientCoefficientsError(
            f"need coefficients through index {needed}, series stops at {series.order}"
        )
    return [hankel_det(series, HankelSpec(n)) for n in range(1, N + 1)]
