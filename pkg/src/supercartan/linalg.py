"""Fraction-free (Bareiss) elimination over int, Fraction or Scalar entries."""

from __future__ import annotations

from itertools import combinations
from typing import Sequence


def _exact_div(x, y):
    if isinstance(x, int) and isinstance(y, int):
        q, r = divmod(x, y)
        assert r == 0, "Bareiss division must be exact"
        return q
    return x / y


def row_echelon(matrix: Sequence[Sequence]) -> tuple[int, list[int]]:
    """Return ``(rank, pivot_columns)`` of ``matrix`` via Bareiss elimination.

    The row space projects isomorphically onto the pivot columns.
    """
    m = [list(r) for r in matrix]
    if not m:
        return 0, []
    nrows, ncols = len(m), len(m[0])
    prev = 1
    r = 0
    pivots = []
    for c in range(ncols):
        if r == nrows:
            break
        piv = next((i for i in range(r, nrows) if m[i][c]), None)
        if piv is None:
            continue
        if piv != r:
            m[r], m[piv] = m[piv], m[r]
        p = m[r][c]
        row_r = m[r]
        for i in range(r + 1, nrows):
            row_i = m[i]
            f = row_i[c]
            if f:
                for j in range(c + 1, ncols):
                    row_i[j] = _exact_div(row_i[j] * p - f * row_r[j], prev)
            else:
                for j in range(c + 1, ncols):
                    if row_i[j]:
                        row_i[j] = _exact_div(row_i[j] * p, prev)
            row_i[c] = 0
        prev = p
        pivots.append(c)
        r += 1
    return r, pivots


def rank(matrix: Sequence[Sequence]) -> int:
    return row_echelon(matrix)[0]


def det(matrix: Sequence[Sequence]):
    """Determinant by Bareiss elimination; exact for every supported entry type."""
    m = [list(r) for r in matrix]
    n = len(m)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if not m[k][k]:
            swap = next((i for i in range(k + 1, n) if m[i][k]), None)
            if swap is None:
                return 0 * m[0][0]
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = _exact_div(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev)
        prev = m[k][k]
    return m[n - 1][n - 1] * sign


def principal_minors(matrix: Sequence[Sequence], proper: bool = False):
    """Yield ``(index_set, minor)`` for every principal minor (optionally proper ones only)."""
    n = len(matrix)
    top = n - 1 if proper else n
    for size in range(1, top + 1):
        for idx in combinations(range(n), size):
            yield idx, det([[matrix[i][j] for j in idx] for i in idx])


def matmul(a, b):
    bt = list(zip(*b))
    return [[sum((x * y for x, y in zip(row, col)), 0 * row[0]) for col in bt] for row in a]


def transpose(a):
    return [list(r) for r in zip(*a)]


def integer_det(a: Sequence[Sequence[int]]) -> int:
    return det([[int(x) for x in row] for row in a])


def independent_rows(matrix: Sequence[Sequence]) -> list[int]:
    """Indices of a maximal independent set of rows, chosen greedily from the top."""
    if not matrix:
        return []
    return row_echelon(transpose(matrix))[1]


def inverse(matrix: Sequence[Sequence]):
    """Inverse of a square matrix by Gauss-Jordan elimination over its entry field."""
    n = len(matrix)
    m = [list(row) + [int(i == j) for j in range(n)] for i, row in enumerate(matrix)]
    for c in range(n):
        piv = next((i for i in range(c, n) if m[i][c]), None)
        if piv is None:
            raise ZeroDivisionError("matrix is singular")
        m[c], m[piv] = m[piv], m[c]
        p = m[c][c]
        m[c] = [x / p for x in m[c]]
        for i in range(n):
            if i != c and m[i][c]:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[c])]
    return [row[n:] for row in m]
