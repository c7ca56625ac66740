"""Indecomposable points of a column set.

A nonzero ``u`` in ``span(vs)`` is indecomposable when it cannot be split as
``u' + u''`` with both parts off the ray of ``u`` and sign-compatible against
every column.  Equivalently the subspace ``V(I_u)`` of span vectors orthogonal
to the active set ``I_u = {i : <u, v_i> = 0}`` is one-dimensional.

Points are projective rays, stored by their primitive integer representative.
All indices are 0-based.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from .errors import DomainError
from .exactlin import (
    IntVector,
    RatVector,
    kernel_of_rows,
    combine,
    in_span,
    inner,
    is_zero,
    primitive,
    span_basis,
    span_complement_basis,
)


@dataclass(frozen=True, order=True)
class IndecomposablePoint:
    rep: IntVector
    active_set: frozenset = frozenset()

    def __str__(self):
        return "(" + ", ".join(str(x) for x in self.rep) + ")"


def active_set(u: Sequence, vs: Sequence[Sequence[int]]) -> frozenset:
    if is_zero(u):
        raise DomainError("active set of the zero vector is undefined")
    return frozenset(i for i, v in enumerate(vs) if inner(u, v) == 0)


def _check_in_span(u, vs):
    if is_zero(u):
        raise DomainError("u must be nonzero")
    if not in_span(vs, u):
        raise DomainError("u is not in the span of the columns")


def is_indecomposable(u: Sequence, vs: Sequence[Sequence[int]]) -> bool:
    _check_in_span(u, vs)
    return len(span_complement_basis(vs, active_set(u, vs))) == 1


def make_point(u: Sequence, vs: Sequence[Sequence[int]]) -> IndecomposablePoint:
    rep = primitive(u)
    return IndecomposablePoint(rep, active_set(rep, vs))


def enumerate_indecomposables(vs: Sequence[Sequence[int]]) -> list[IndecomposablePoint]:
    """All indecomposable points, both signs, sorted by representative.

    With ``r = rank(vs)``, every point is the generator of ``V(S)`` for some
    ``(r-1)``-subset ``S`` whose Gram rows have rank ``r-1``.  A subset already
    inside a known active set spans the same hyperplane, so it is skipped
    without any linear algebra.
    """
    if not vs or all(is_zero(v) for v in vs):
        raise DomainError("need at least one nonzero column")
    B = span_basis(vs)
    r = len(B)
    n = len(B[0])
    # row i: the linear functional c -> <sum c_j b_j, v_i> on span coordinates
    gram = [[inner(b, v) for b in B] for v in vs]
    m = len(vs)
    found: dict[IntVector, IndecomposablePoint] = {}
    known: list[frozenset] = []
    for S in combinations(range(m), r - 1):
        Sset = frozenset(S)
        if any(Sset <= K for K in known):
            continue
        ker = kernel_of_rows([gram[i] for i in S], r)
        if len(ker) != 1:
            continue
        g = primitive(combine(B, ker[0], n))
        for rep in (g, tuple(-x for x in g)):
            pt = IndecomposablePoint(rep, active_set(rep, vs))
            found[rep] = pt
        known.append(found[g].active_set)
    return sorted(found.values(), key=lambda p: p.rep)


def decompose(u: Sequence, vs: Sequence[Sequence[int]]) -> list[RatVector]:
    """Split ``u`` into indecomposable, sign-compatible parts summing to ``u``.

    Recurses on ``dim V(I_u)``: walk from ``u`` toward a second direction of
    ``V(I_u)`` until the first inner product against a column vanishes, then
    peel off the largest multiple of that boundary vector that keeps signs.
    """
    _check_in_span(u, vs)
    return _decompose(tuple(Fraction(x) for x in u), vs)


def _decompose(u: RatVector, vs) -> list[RatVector]:
    basis = span_complement_basis(vs, active_set(u, vs))
    if len(basis) == 1:
        return [u]
    alpha = next(b for b in basis if not _parallel(u, b))
    pu = [inner(u, v) for v in vs]

    def in_chamber(a):
        pa = [inner(a, v) for v in vs]
        return all((p > 0 and q > 0) or (p < 0 and q < 0) for p, q in zip(pu, pa) if p != 0)

    if in_chamber(alpha):
        alpha = tuple(-x for x in alpha)
    pa = [inner(alpha, v) for v in vs]
    # (1-t) p + t q leaves the open sign region at t = p / (p - q) when q does not share p's sign
    t0 = min(p / (p - q) for p, q in zip(pu, pa) if p != 0 and not (p * q > 0))
    alpha0 = tuple((1 - t0) * x + t0 * y for x, y in zip(u, alpha))
    r0 = min(p / inner(alpha0, v) for p, v in zip(pu, vs) if inner(alpha0, v) != 0)
    head = tuple(r0 * x for x in alpha0)
    tail = tuple(x - y for x, y in zip(u, head))
    return _decompose(head, vs) + _decompose(tail, vs)


def _parallel(u, b) -> bool:
    n = len(u)
    return all(u[i] * b[j] == u[j] * b[i] for i in range(n) for j in range(i + 1, n))
