"""Exact rational simplex for small packing-form linear programs.

Solves ``maximize c.x  subject to  A x <= b, x >= 0`` with ``b >= 0``, so the
all-slack basis is feasible and no phase one is needed. Bland's rule keeps
degenerate pivots from cycling.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Sequence


class Unbounded(ArithmeticError):
    pass


def maximize(
    c: Sequence[Fraction | int],
    A: Sequence[Sequence[Fraction | int]],
    b: Sequence[Fraction | int],
) -> tuple[Fraction, list[Fraction]]:
    """Return ``(optimum, x)``."""
    m, n = len(A), len(c)
    if any(len(row) != n for row in A) or len(b) != m:
        raise ValueError("inconsistent LP dimensions")
    if any(v < 0 for v in b):
        raise ValueError("right-hand side must be non-negative")
    # tableau rows: [A | I | b]; objective row holds reduced costs
    width = n + m
    rows = [
        [Fraction(v) for v in A[i]] + [Fraction(int(i == j)) for j in range(m)] + [Fraction(b[i])]
        for i in range(m)
    ]
    cost = [Fraction(v) for v in c] + [Fraction(0)] * m
    obj = Fraction(0)
    basis = list(range(n, n + m))

    while True:
        entering = next((j for j in range(width) if cost[j] > 0), None)
        if entering is None:
            break
        best = None
        for i in range(m):
            a = rows[i][entering]
            if a > 0:
                ratio = rows[i][-1] / a
                if best is None or ratio < best[0] or (ratio == best[0] and basis[i] < basis[best[1]]):
                    best = (ratio, i)
        if best is None:
            raise Unbounded("objective is unbounded")
        r = best[1]
        piv = rows[r][entering]
        rows[r] = [v / piv for v in rows[r]]
        for i in range(m):
            if i != r and rows[i][entering]:
                f = rows[i][entering]
                rows[i] = [v - f * p for v, p in zip(rows[i], rows[r])]
        f = cost[entering]
        cost = [v - f * p for v, p in zip(cost, rows[r][:-1])]
        obj += f * rows[r][-1]
        basis[r] = entering

    x = [Fraction(0)] * width
    for i, j in enumerate(basis):
        x[j] = rows[i][-1]
    return obj, x[:n]
