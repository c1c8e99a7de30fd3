"""Exact linear algebra over the rationals, just enough for ranks and solves."""
from __future__ import annotations

from fractions import Fraction
from typing import Optional, Sequence


def row_echelon(rows: Sequence[Sequence]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form of ``rows``; returns ``(nonzero rows, pivot columns)``."""
    m = [[Fraction(x) for x in r] for r in rows]
    pivots: list[int] = []
    if not m:
        return m, pivots
    ncols = len(m[0])
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(rows: Sequence[Sequence]) -> int:
    return len(row_echelon(rows)[1])


def solve(columns: Sequence[Sequence], target: Sequence) -> Optional[list[Fraction]]:
    """Coefficients ``c`` with ``sum_j c_j * columns[j] == target`` exactly, or ``None``.

    ``columns`` must be linearly independent.
    """
    n = len(columns)
    length = len(target)
    augmented = [[columns[j][i] for j in range(n)] + [target[i]] for i in range(length)]
    reduced, pivots = row_echelon(augmented)
    if n in pivots:
        return None
    if len(pivots) != n:
        raise ValueError("columns are linearly dependent")
    return [reduced[i][n] for i in range(n)]
