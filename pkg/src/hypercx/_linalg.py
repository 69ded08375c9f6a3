"""Exact rational linear algebra used by the algebra and CR-derivation code."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

import numpy as np


def bareiss_det(matrix: Sequence[Sequence]) -> Fraction:
    """Fraction-free Gaussian elimination determinant (exact for rationals)."""
    a = [[Fraction(x) for x in row] for row in matrix]
    n = len(a)
    if n == 0:
        return Fraction(1)
    sign = 1
    prev = Fraction(1)
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k] != 0:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return Fraction(0)
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def float_det(matrix) -> float:
    # numpy's det is LU with partial pivoting
    return float(np.linalg.det(np.asarray(matrix, dtype=float)))


def solve_rational(matrix: Sequence[Sequence], rhs: Sequence) -> list[Fraction] | None:
    """Solve ``matrix @ x = rhs`` exactly; ``None`` when the matrix is singular."""
    n = len(matrix)
    aug = [[Fraction(x) for x in row] + [Fraction(b)] for row, b in zip(matrix, rhs)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if pivot is None:
            return None
        aug[col], aug[pivot] = aug[pivot], aug[col]
        p = aug[col][col]
        aug[col] = [x / p for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return [aug[r][n] for r in range(n)]


def rref(rows: list[list[Fraction]]) -> list[list[Fraction]]:
    """Reduced row echelon form with zero rows dropped."""
    m = [list(r) for r in rows]
    if not m:
        return []
    ncols = len(m[0])
    out: list[list[Fraction]] = []
    for col in range(ncols):
        pivot = next((i for i, r in enumerate(m) if r[col] != 0), None)
        if pivot is None:
            continue
        prow = m.pop(pivot)
        p = prow[col]
        prow = [x / p for x in prow]
        for i, r in enumerate(m):
            if r[col] != 0:
                f = r[col]
                m[i] = [x - f * y for x, y in zip(r, prow)]
        for i, r in enumerate(out):
            if r[col] != 0:
                f = r[col]
                out[i] = [x - f * y for x, y in zip(r, prow)]
        out.append(prow)
    out.sort(key=_leading_index)
    return out


def _leading_index(row: list[Fraction]) -> int:
    return next(i for i, x in enumerate(row) if x != 0)


def rank(rows: list[list[Fraction]]) -> int:
    return len(rref(rows))
