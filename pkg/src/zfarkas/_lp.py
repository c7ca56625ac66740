"""Exact phase-one simplex for box-constrained linear systems.

Finds a rational ``x`` with ``sum(x_i v_i) = w`` and ``lower <= x <= upper``,
or reports that none exists.  Bland's rule, Fraction tableau; meant for the
small systems this package handles.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Optional, Sequence


def box_point(vs: Sequence[Sequence[int]], lower: Sequence, upper: Sequence,
              target: Sequence) -> Optional[tuple[Fraction, ...]]:
    m = len(vs)
    n = len(target)
    if m == 0:
        return () if all(t == 0 for t in target) else None
    width = [Fraction(b) - Fraction(a) for a, b in zip(lower, upper)]
    # shift x = lower + y so that 0 <= y <= width
    rhs = [Fraction(target[i]) - sum(Fraction(vs[j][i]) * lower[j] for j in range(m)) for i in range(n)]

    # columns: y_0..y_{m-1}, s_0..s_{m-1}, art_0..art_{n-1}, then rhs
    ncol = 2 * m + n
    T: list[list[Fraction]] = []
    for i in range(n):
        sg = -1 if rhs[i] < 0 else 1
        row = [Fraction(sg * vs[j][i]) for j in range(m)] + [Fraction(0)] * m
        row += [Fraction(int(k == i)) for k in range(n)] + [sg * rhs[i]]
        T.append(row)
    for j in range(m):
        row = [Fraction(0)] * (ncol + 1)
        row[j] = Fraction(1)
        row[m + j] = Fraction(1)
        row[-1] = width[j]
        T.append(row)
    basis = [2 * m + i for i in range(n)] + [m + j for j in range(m)]

    obj = [Fraction(0)] * (ncol + 1)
    for i in range(n):
        for c in range(ncol + 1):
            if not (2 * m <= c < ncol):
                obj[c] -= T[i][c]

    while True:
        enter = next((c for c in range(ncol) if obj[c] < 0), None)
        if enter is None:
            break
        leave = None
        best = None
        for r, row in enumerate(T):
            if row[enter] > 0:
                ratio = row[-1] / row[enter]
                if best is None or ratio < best or (ratio == best and basis[r] < basis[leave]):
                    best, leave = ratio, r
        if leave is None:  # phase one is bounded below by zero; cannot happen
            raise ArithmeticError("unbounded phase-one simplex")
        _pivot(T, obj, leave, enter)
        basis[leave] = enter

    if obj[-1] != 0:
        return None
    y = [Fraction(0)] * m
    for r, b in enumerate(basis):
        if b < m:
            y[b] = T[r][-1]
    return tuple(Fraction(a) + yi for a, yi in zip(lower, y))


def _pivot(T, obj, r, c):
    prow = T[r]
    inv = 1 / prow[c]
    T[r] = prow = [x * inv for x in prow]
    for i, row in enumerate(T):
        if i != r and row[c] != 0:
            f = row[c]
            T[i] = [a - f * b for a, b in zip(row, prow)]
    if obj[c] != 0:
        f = obj[c]
        obj[:] = [a - f * b for a, b in zip(obj, prow)]
