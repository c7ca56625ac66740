"""Feasibility decisions for ``sum(x_i v_i) = w``, ``lower <= x <= upper``.

Rational feasibility holds iff ``w`` lies in the span of the columns and the
bound inequality

    <u, w>  <=  sum_i lower_i * min(<u, v_i>, 0) + upper_i * max(<u, v_i>, 0)

holds at every indecomposable point ``u``.  For Farkas-related columns (every
circuit has coefficients in {-1, 0, 1}) the same test with lattice membership
in place of span membership decides integer feasibility.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from math import floor, lcm
from typing import Optional, Sequence

from ._lp import box_point
from .circuits import Circuit, iter_circuits
from .errors import DimensionError, PreconditionError
from .exactlin import (
    IntMatrix,
    IntVector,
    combine,
    in_span,
    inner,
    is_zero,
    lattice_certificate,
    rank,
)
from .indecomp import IndecomposablePoint, enumerate_indecomposables


@dataclass(frozen=True)
class FeasibilityProblem:
    """Columns ``vs`` (each of length n), bounds per column, and target ``w``."""

    vs: tuple[IntVector, ...]
    lower: IntVector
    upper: IntVector
    target: IntVector

    def __post_init__(self):
        object.__setattr__(self, "vs", tuple(tuple(int(x) for x in v) for v in self.vs))
        object.__setattr__(self, "lower", tuple(int(x) for x in self.lower))
        object.__setattr__(self, "upper", tuple(int(x) for x in self.upper))
        object.__setattr__(self, "target", tuple(int(x) for x in self.target))
        n = len(self.target)
        if any(len(v) != n for v in self.vs):
            raise DimensionError("every column must have the length of the target")
        if not (len(self.lower) == len(self.upper) == len(self.vs)):
            raise DimensionError("need one lower and one upper bound per column")
        bad = [i for i, (a, b) in enumerate(zip(self.lower, self.upper)) if a > b]
        if bad:
            raise DimensionError(f"lower bound exceeds upper bound at columns {bad}")

    @classmethod
    def from_matrix(cls, M, lower, upper, target) -> "FeasibilityProblem":
        M = M if isinstance(M, IntMatrix) else IntMatrix.from_rows(M)
        return cls(tuple(M.columns), tuple(lower), tuple(upper), tuple(target))

    @property
    def n(self) -> int:
        return len(self.target)

    @property
    def m(self) -> int:
        return len(self.vs)

    @property
    def matrix(self) -> IntMatrix:
        return IntMatrix.from_columns(self.vs, nrows=self.n)

    def satisfied_by(self, x: Sequence) -> bool:
        return (
            len(x) == self.m
            and all(a <= xi <= b for a, xi, b in zip(self.lower, x, self.upper))
            and combine(self.vs, x, self.n) == self.target
        )


class Verdict(enum.Enum):
    FEASIBLE = "Feasible"
    INFEASIBLE_LATTICE = "InfeasibleLattice"
    INFEASIBLE_INEQUALITY = "InfeasibleInequality"


@dataclass
class Decision:
    verdict: Verdict
    solution: Optional[tuple] = None
    witness: Optional[IndecomposablePoint] = None
    lhs: Optional[Fraction] = None
    rhs: Optional[Fraction] = None
    lattice_row: Optional[int] = None
    cut: Optional[tuple] = None
    reason: str = ""
    extra: dict = field(default_factory=dict)

    @property
    def feasible(self) -> bool:
        return self.verdict is Verdict.FEASIBLE


class NotFarkasRelated(PreconditionError):
    def __init__(self, circuit: Circuit):
        super().__init__(f"columns are not Farkas-related: circuit {circuit.coeffs}")
        self.circuit = circuit


def farkas_rhs(u: Sequence, prob: FeasibilityProblem) -> Fraction:
    if len(u) != prob.n:
        raise DimensionError(f"u has length {len(u)}, problem dimension is {prob.n}")
    total = Fraction(0)
    for a, b, v in zip(prob.lower, prob.upper, prob.vs):
        p = inner(u, v)
        total += a * p if p < 0 else b * p
    return total


def check_point(u: Sequence, prob: FeasibilityProblem) -> bool:
    return inner(u, prob.target) <= farkas_rhs(u, prob)


def _first_violation(prob: FeasibilityProblem, points) -> Optional[Decision]:
    # points arrive sorted by representative, so the first hit is the lexicographically smallest
    for p in points:
        lhs, rhs = inner(p.rep, prob.target), farkas_rhs(p.rep, prob)
        if lhs > rhs:
            return Decision(Verdict.INFEASIBLE_INEQUALITY, witness=p, lhs=lhs, rhs=rhs,
                            reason="bound inequality fails at an indecomposable point")
    return None


def _points(prob):
    if all(is_zero(v) for v in prob.vs):
        return []
    return enumerate_indecomposables(prob.vs)


def rational_feasible(prob: FeasibilityProblem) -> Decision:
    if not in_span(prob.vs, prob.target):
        return Decision(Verdict.INFEASIBLE_LATTICE, reason="target is not in the span of the columns")
    bad = _first_violation(prob, _points(prob))
    if bad is not None:
        return bad
    x = box_point(prob.vs, prob.lower, prob.upper, prob.target)
    if x is None:
        raise ArithmeticError("inequalities hold but no rational point was found")
    return Decision(Verdict.FEASIBLE, solution=x)


def is_farkas_related(vs: Sequence[Sequence[int]]) -> tuple[bool, Optional[Circuit]]:
    """Whether every circuit has coefficients in {-1, 0, 1}; otherwise the first offending circuit."""
    for c in iter_circuits(vs):
        if c.max_abs() > 1:
            return False, c
    return True, None


def integer_feasible(prob: FeasibilityProblem) -> Decision:
    ok, circ = is_farkas_related(prob.vs)
    if not ok:
        raise NotFarkasRelated(circ)
    if prob.m == 0:
        x, row = ((), None) if is_zero(prob.target) else (None, 0)
    else:
        x, row = lattice_certificate(prob.matrix, prob.target)
    if x is None:
        return Decision(Verdict.INFEASIBLE_LATTICE, lattice_row=row,
                        reason=f"target leaves the column lattice at Hermite row {row}")
    bad = _first_violation(prob, _points(prob))
    if bad is not None:
        return bad
    sol = integer_solve(prob)
    if sol is None:
        raise ArithmeticError("integer conditions hold but rounding failed; columns not Farkas-related?")
    return Decision(Verdict.FEASIBLE, solution=sol)


def integer_solve(prob: FeasibilityProblem) -> Optional[IntVector]:
    """An integer point of the box system, by rounding a rational one.

    Write ``x = floor(x) + frac``.  With ``k`` the common denominator of the
    fractional parts, ``k * w' = sum(c_i v_i)`` where ``w'`` is the leftover
    target and ``0 <= c_i < k``.  Adding multiples of a {-1,0,1} circuit pushes
    some ``c_i`` to ``0`` or ``k``; those leave the system (the latter adding
    ``v_i`` to the solution) and the support strictly shrinks.
    """
    if prob.m == 0:
        return () if is_zero(prob.target) else None
    if lattice_certificate(prob.matrix, prob.target)[0] is None:
        return None
    x = box_point(prob.vs, prob.lower, prob.upper, prob.target)
    if x is None:
        return None
    base = [floor(xi) for xi in x]
    frac = [xi - bi for xi, bi in zip(x, base)]
    k = lcm(*(f.denominator for f in frac))
    c = [int(f * k) for f in frac]
    rest = [t - s for t, s in zip(prob.target, combine(prob.vs, base, prob.n))]
    y = _round_fraction(prob.vs, rest, c, k)
    if y is None:
        y = _round_exhaustive(prob.vs, rest, c)
    if y is None:
        return None
    sol = tuple(b + yi for b, yi in zip(base, y))
    return sol if prob.satisfied_by(sol) else None


def _round_fraction(vs, rest, c, k) -> Optional[list[int]]:
    m = len(vs)
    c = list(c)
    rest = list(rest)
    y = [0] * m
    live = [i for i in range(m) if c[i] > 0]
    while live:
        circ = next(iter_circuits(vs, within=live), None)
        if circ is None or circ.max_abs() > 1:
            return None
        a = circ.coeffs
        step = min((k - c[i]) if a[i] > 0 else c[i] for i in circ.support)
        for i in circ.support:
            c[i] += step * a[i]
            if c[i] == k:
                y[i] = 1
                rest = [r - x for r, x in zip(rest, vs[i])]
                c[i] = 0
        live = [i for i in live if c[i] > 0]
    return y if is_zero(rest) else None


def _round_exhaustive(vs, rest, c) -> Optional[list[int]]:
    supp = [i for i in range(len(vs)) if c[i] > 0]
    n = len(rest)
    for bits in product((0, 1), repeat=len(supp)):
        y = [0] * len(vs)
        for i, b in zip(supp, bits):
            y[i] = b
        if combine(vs, y, n) == tuple(rest):
            return y
    return None


def block_construct(A, B, C, D) -> IntMatrix:
    """The block matrix ``[[A, B], [C D, C]]``.

    ``C`` must be invertible and ``D`` may carry at most one nonzero entry,
    equal to 1 or -1, per row.
    """
    A, B, C, D = (M if isinstance(M, IntMatrix) else IntMatrix.from_rows(M) for M in (A, B, C, D))
    n, m = A.shape
    if B.shape != (n, m) or C.shape != (m, m) or D.shape != (m, m):
        raise DimensionError("need A, B of shape n x m and C, D of shape m x m")
    if rank(C) != m:
        raise PreconditionError("C is singular")
    for row in D.rows:
        nz = [x for x in row if x != 0]
        if len(nz) > 1 or any(x not in (1, -1) for x in nz):
            raise PreconditionError("each row of D needs at most one nonzero entry, equal to +-1")
    CD = C @ D
    rows = [ra + rb for ra, rb in zip(A.rows, B.rows)] + [r1 + r2 for r1, r2 in zip(CD.rows, C.rows)]
    return IntMatrix.from_rows(rows, ncols=2 * m)
