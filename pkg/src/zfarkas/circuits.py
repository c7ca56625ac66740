"""Circuits (elementary integral vectors) of the relation space of a column set.

A circuit is a relation ``sum(c_i v_i) = 0`` whose support is inclusion-minimal,
scaled to coprime integers with the first nonzero coefficient positive.

Enumeration walks independent index sets in increasing order.  A set ``S`` is
minimally dependent exactly when ``S`` minus its largest index is independent
and the unique relation on ``S`` has full support, so every circuit is reached
once, from ``S - {max S}``.  The walk never extends a dependent set.  Cost is
bounded by the number of independent sets, at most ``sum_k C(m, k)`` for
``k <= rank + 1``; fine for ``m`` up to roughly 16.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Optional, Sequence

from .errors import DomainError
from .exactlin import IntVector, combine, is_zero, kernel_basis, IntMatrix, primitive


@dataclass(frozen=True, order=True)
class Circuit:
    support: tuple[int, ...]
    coeffs: IntVector

    def max_abs(self) -> int:
        return max(abs(c) for c in self.coeffs)


def _canonical(coeffs: Sequence) -> IntVector:
    p = primitive(coeffs)
    first = next(x for x in p if x != 0)
    return p if first > 0 else tuple(-x for x in p)


def _make_circuit(coeffs) -> Circuit:
    c = _canonical(coeffs)
    return Circuit(tuple(i for i, x in enumerate(c) if x), c)


class _Echelon:
    """Incrementally maintained echelon basis that remembers how each row was built."""

    __slots__ = ("rows", "combos", "pivots")

    def __init__(self, rows=(), combos=(), pivots=()):
        self.rows = list(rows)
        self.combos = list(combos)
        self.pivots = list(pivots)

    def reduce(self, v, idx, m):
        """Reduce column ``v`` (index ``idx``); return (residual, combination as a length-m dict)."""
        r = [Fraction(x) for x in v]
        combo = {idx: Fraction(1)}
        for row, cmb, p in zip(self.rows, self.combos, self.pivots):
            f = r[p]
            if f:
                r = [a - f * b for a, b in zip(r, row)]
                for k, c in cmb.items():
                    combo[k] = combo.get(k, 0) - f * c
        return r, combo

    def extended(self, r, combo):
        p = next(i for i, x in enumerate(r) if x != 0)
        inv = 1 / r[p]
        row = [x * inv for x in r]
        cmb = {k: c * inv for k, c in combo.items()}
        return _Echelon(self.rows + [row], self.combos + [cmb], self.pivots + [p])


def iter_circuits(vs: Sequence[Sequence[int]], within: Optional[Sequence[int]] = None) -> Iterator[Circuit]:
    """Yield circuits in DFS order (not sorted).  ``within`` restricts to a subset of column indices."""
    m = len(vs)
    idx = sorted(within) if within is not None else list(range(m))

    def walk(ech: _Echelon, start: int, members: list[int]):
        for pos in range(start, len(idx)):
            i = idx[pos]
            r, combo = ech.reduce(vs[i], i, m)
            if is_zero(r):
                # full support of the relation means members + [i] is minimally dependent
                if all(combo.get(j, 0) != 0 for j in members + [i]):
                    yield _make_circuit([combo.get(j, 0) for j in range(m)])
            else:
                yield from walk(ech.extended(r, combo), pos + 1, members + [i])

    yield from walk(_Echelon(), 0, [])


def enumerate_circuits(vs: Sequence[Sequence[int]]) -> list[Circuit]:
    """All circuits of the column set ``vs``, sorted lexicographically by support."""
    seen = {}
    for c in iter_circuits(vs):
        seen.setdefault(c.coeffs, c)
    return sorted(seen.values(), key=lambda c: (c.support, c.coeffs))


def is_support_minimal(x: Sequence, vs: Sequence[Sequence[int]]) -> bool:
    """Whether the kernel vector ``x`` has inclusion-minimal support."""
    if not vs or is_zero(x):
        raise DomainError("need a nonzero kernel vector")
    n = len(vs[0])
    if not is_zero(combine(vs, x, n)):
        raise DomainError("x is not a relation among the columns")
    supp = [i for i, c in enumerate(x) if c != 0]
    sub = IntMatrix.from_columns([vs[i] for i in supp], nrows=n)
    return len(kernel_basis(sub)) == 1
