"""Exact Gauss-Jordan elimination over the rationals."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence


class SingularMatrix(ValueError):
    pass


def inverse(matrix: Sequence[Sequence]) -> list[list[Fraction]]:
    n = len(matrix)
    if any(len(row) != n for row in matrix):
        raise ValueError("matrix must be square")
    a = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(matrix)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if a[r][col]), None)
        if pivot is None:
            raise SingularMatrix(f"no pivot in column {col}")
        a[col], a[pivot] = a[pivot], a[col]
        p = a[col][col]
        a[col] = [x / p for x in a[col]]
        for r in range(n):
            if r != col and a[r][col]:
                factor = a[r][col]
                a[r] = [x - factor * y for x, y in zip(a[r], a[col])]
    return [row[n:] for row in a]


def vandermonde(nodes: Sequence[int], rows: int | None = None) -> list[list[Fraction]]:
    """``V[k][i] = nodes[i] ** k`` with ``0 ** 0 = 1``."""
    rows = len(nodes) if rows is None else rows
    return [[Fraction(x) ** k for x in nodes] for k in range(rows)]


def solve_vector_system(matrix, rhs: Sequence, zero):
    """Solve ``matrix @ x = rhs`` where the entries of ``rhs`` are vectors.

    Vectors need ``+`` and ``.scale``; ``zero`` seeds each accumulation.
    """
    inv = inverse(matrix)
    out = []
    for row in inv:
        acc = zero
        for coef, y in zip(row, rhs):
            if coef:
                acc = acc + y.scale(coef)
        out.append(acc)
    return out
