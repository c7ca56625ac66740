"""Exact integer and rational linear algebra.

Scalars are Python ``int`` and :class:`fractions.Fraction`; vectors are plain
tuples.  Nothing in here ever touches a float.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Optional, Sequence, Union

from .errors import DimensionError, DomainError

Rational = Fraction
IntVector = tuple[int, ...]
RatVector = tuple[Fraction, ...]
Scalar = Union[int, Fraction]


@dataclass(frozen=True)
class IntMatrix:
    """Immutable integer matrix stored row-major.

    ``ncols`` is kept explicitly so that ``n x 0`` and ``0 x m`` matrices
    keep their shape.
    """

    nrows: int
    ncols: int
    rows: tuple[IntVector, ...]

    def __post_init__(self):
        if len(self.rows) != self.nrows or any(len(r) != self.ncols for r in self.rows):
            raise DimensionError("row data does not match the declared shape")

    @classmethod
    def from_rows(cls, rows: Iterable[Sequence[int]], ncols: Optional[int] = None) -> "IntMatrix":
        rows = tuple(tuple(int(x) for x in r) for r in rows)
        if ncols is None:
            if not rows:
                raise DimensionError("cannot infer column count of an empty row list")
            ncols = len(rows[0])
        return cls(len(rows), ncols, rows)

    @classmethod
    def from_columns(cls, cols: Sequence[Sequence[int]], nrows: Optional[int] = None) -> "IntMatrix":
        cols = [tuple(int(x) for x in c) for c in cols]
        if nrows is None:
            if not cols:
                raise DimensionError("cannot infer row count of an empty column list")
            nrows = len(cols[0])
        if any(len(c) != nrows for c in cols):
            raise DimensionError("columns have different lengths")
        rows = tuple(tuple(c[i] for c in cols) for i in range(nrows))
        return cls(nrows, len(cols), rows)

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls.from_rows([[int(i == j) for j in range(n)] for i in range(n)], ncols=n)

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> "IntMatrix":
        return cls.from_rows([[0] * ncols for _ in range(nrows)], ncols=ncols)

    @property
    def shape(self) -> tuple[int, int]:
        return self.nrows, self.ncols

    @property
    def columns(self) -> list[IntVector]:
        return [tuple(r[j] for r in self.rows) for j in range(self.ncols)]

    def transpose(self) -> "IntMatrix":
        return IntMatrix.from_columns(self.rows, nrows=self.ncols)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __matmul__(self, other):
        if isinstance(other, IntMatrix):
            if self.ncols != other.nrows:
                raise DimensionError(f"cannot multiply {self.shape} by {other.shape}")
            cols = other.columns
            return IntMatrix.from_rows(
                [[sum(a * b for a, b in zip(r, c)) for c in cols] for r in self.rows],
                ncols=other.ncols,
            )
        return matvec(self, other)

    def __add__(self, other: "IntMatrix") -> "IntMatrix":
        if self.shape != other.shape:
            raise DimensionError("shape mismatch")
        return IntMatrix.from_rows(
            [[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)], ncols=self.ncols
        )

    def __neg__(self) -> "IntMatrix":
        return IntMatrix.from_rows([[-a for a in r] for r in self.rows], ncols=self.ncols)

    def __sub__(self, other: "IntMatrix") -> "IntMatrix":
        return self + (-other)


MatrixLike = Union[IntMatrix, Sequence[Sequence[int]]]


def as_matrix(M: MatrixLike) -> IntMatrix:
    if isinstance(M, IntMatrix):
        return M
    return IntMatrix.from_rows(M)


def matvec(M: MatrixLike, x: Sequence[Scalar]) -> tuple:
    M = as_matrix(M)
    if len(x) != M.ncols:
        raise DimensionError(f"matrix has {M.ncols} columns, vector has length {len(x)}")
    return tuple(sum((a * b for a, b in zip(r, x)), 0) for r in M.rows)


def combine(vs: Sequence[Sequence[Scalar]], coeffs: Sequence[Scalar], n: int) -> tuple:
    """Return ``sum(coeffs[i] * vs[i])`` as a length-``n`` tuple."""
    if len(vs) != len(coeffs):
        raise DimensionError("need one coefficient per vector")
    acc = [0] * n
    for c, v in zip(coeffs, vs):
        if c:
            for k, x in enumerate(v):
                acc[k] += c * x
    return tuple(acc)


def inner(u: Sequence[Scalar], v: Sequence[Scalar]) -> Fraction:
    if len(u) != len(v):
        raise DimensionError(f"length mismatch: {len(u)} vs {len(v)}")
    return Fraction(sum((a * b for a, b in zip(u, v)), 0))


def is_zero(v: Sequence[Scalar]) -> bool:
    return all(x == 0 for x in v)


def rank(M: MatrixLike) -> int:
    """Rank over Q by fraction-free (Bareiss) elimination."""
    M = as_matrix(M)
    a = [list(r) for r in M.rows]
    nr, nc = M.nrows, M.ncols
    r = 0
    prev = 1
    for c in range(nc):
        if r == nr:
            break
        p = next((i for i in range(r, nr) if a[i][c] != 0), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        piv = a[r][c]
        for i in range(r + 1, nr):
            f = a[i][c]
            row_i, row_r = a[i], a[r]
            for j in range(c, nc):
                # exact by Sylvester's identity
                row_i[j] = (piv * row_i[j] - f * row_r[j]) // prev
        prev = piv
        r += 1
    return r


def rref(rows: Sequence[Sequence[Scalar]], ncols: int) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form over Q.  Returns (nonzero rows, pivot columns)."""
    a = [[Fraction(x) for x in r] for r in rows]
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(a)) if a[i][c] != 0), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        inv = 1 / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(len(a)):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == len(a):
            break
    return a[:r], pivots


def kernel_of_rows(rows: Sequence[Sequence[Scalar]], ncols: int) -> list[RatVector]:
    red, pivots = rref(rows, ncols)
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = []
    for f in free:
        x = [Fraction(0)] * ncols
        x[f] = Fraction(1)
        for row, p in zip(red, pivots):
            x[p] = -row[f]
        basis.append(tuple(x))
    return basis


def kernel_basis(M: MatrixLike) -> list[RatVector]:
    """Basis of the right kernel ``{x : M x = 0}`` over Q."""
    M = as_matrix(M)
    return kernel_of_rows(M.rows, M.ncols)


def solve_rational(M: MatrixLike, w: Sequence[Scalar]) -> Optional[RatVector]:
    """Some rational ``x`` with ``M x = w``, or ``None``."""
    M = as_matrix(M)
    if len(w) != M.nrows:
        raise DimensionError("right-hand side has the wrong length")
    aug = [list(r) + [w[i]] for i, r in enumerate(M.rows)]
    red, pivots = rref(aug, M.ncols + 1)
    if pivots and pivots[-1] == M.ncols:
        return None
    x = [Fraction(0)] * M.ncols
    for row, p in zip(red, pivots):
        x[p] = row[-1]
    return tuple(x)


def independent_subset(vs: Sequence[Sequence[Scalar]]) -> list[int]:
    """Indices of a maximal independent subset of ``vs``, chosen greedily left to right."""
    if not vs:
        return []
    n = len(vs[0])
    _, pivots = rref([list(r) for r in zip(*vs)] if n else [], len(vs))
    return pivots


def primitive(v: Sequence[Scalar]) -> IntVector:
    """Positive multiple of ``v`` with coprime integer entries."""
    fr = [Fraction(x) for x in v]
    if all(x == 0 for x in fr):
        raise DomainError("the zero vector has no primitive representative")
    den = lcm(*(x.denominator for x in fr))
    ints = [int(x * den) for x in fr]
    g = gcd(*ints)
    return tuple(x // g for x in ints)


def span_basis(vs: Sequence[Sequence[int]]) -> list[IntVector]:
    return [tuple(vs[i]) for i in independent_subset(vs)]


def span_complement_basis(vs: Sequence[Sequence[int]], S: Iterable[int]) -> list[RatVector]:
    """Basis of ``V(S)``: vectors of ``span(vs)`` orthogonal to ``vs[i]`` for all ``i`` in ``S``.

    Indices in ``S`` are 0-based.
    """
    S = sorted(set(S))
    m = len(vs)
    if any(i < 0 or i >= m for i in S):
        raise DomainError(f"index set {S} not contained in range({m})")
    B = span_basis(vs)
    if not B:
        return []
    n = len(B[0])
    gram = [[inner(b, vs[i]) for b in B] for i in S]
    out = []
    for c in kernel_of_rows(gram, len(B)):
        out.append(tuple(Fraction(x) for x in combine(B, c, n)))
    return out


def in_span(vs: Sequence[Sequence[int]], u: Sequence[Scalar]) -> bool:
    if not vs:
        return is_zero(u)
    return solve_rational(IntMatrix.from_columns(vs, nrows=len(u)), u) is not None


# --- lattice membership ---------------------------------------------------


def hermite_column_form(M: MatrixLike) -> tuple[IntMatrix, IntMatrix, list[tuple[int, int]]]:
    """Column-style Hermite form ``H = M U`` with ``U`` unimodular.

    ``H`` is lower-triangular in echelon sense: pivot ``k`` sits in row
    ``pivots[k][0]`` of column ``k``, is positive, and every column ``j > k``
    is zero in that row and above.  Returns ``(H, U, pivots)`` with pivots as
    ``(row, col)`` pairs.
    """
    M = as_matrix(M)
    n, m = M.shape
    cols = [list(c) for c in M.columns]
    U = [[int(i == j) for i in range(m)] for j in range(m)]  # U[j] is column j of U

    def axpy(dst, src, f):
        # column dst -= f * column src
        cols[dst] = [a - f * b for a, b in zip(cols[dst], cols[src])]
        U[dst] = [a - f * b for a, b in zip(U[dst], U[src])]

    def swap(i, j):
        cols[i], cols[j] = cols[j], cols[i]
        U[i], U[j] = U[j], U[i]

    pivots = []
    k = 0
    for row in range(n):
        if k == m:
            break
        while True:
            nz = [j for j in range(k, m) if cols[j][row] != 0]
            if not nz:
                break
            j_min = min(nz, key=lambda j: abs(cols[j][row]))
            swap(k, j_min)
            done = True
            for j in range(k + 1, m):
                if cols[j][row] != 0:
                    axpy(j, k, cols[j][row] // cols[k][row])
                    if cols[j][row] != 0:
                        done = False
            if done:
                break
        if cols[k][row] == 0:
            continue
        if cols[k][row] < 0:
            cols[k] = [-a for a in cols[k]]
            U[k] = [-a for a in U[k]]
        # reduce entries left of the pivot into [0, pivot)
        for j in range(k):
            q = cols[j][row] // cols[k][row]
            if q:
                axpy(j, k, q)
        pivots.append((row, k))
        k += 1
    H = IntMatrix.from_columns(cols, nrows=n) if m else IntMatrix.zeros(n, 0)
    Umat = IntMatrix.from_columns(U, nrows=m) if m else IntMatrix.zeros(0, 0)
    return H, Umat, pivots


def lattice_certificate(M: MatrixLike, w: Sequence[int]) -> tuple[Optional[IntVector], Optional[int]]:
    """Solve ``M x = w`` over Z.

    Returns ``(x, None)`` on success and ``(None, row)`` otherwise, where
    ``row`` is the first row of the Hermite form at which forward
    substitution breaks (a non-divisible pivot or a nonzero residual).
    """
    M = as_matrix(M)
    if len(w) != M.nrows:
        raise DimensionError(f"matrix has {M.nrows} rows, target has length {len(w)}")
    H, U, pivots = hermite_column_form(M)
    hcols = H.columns
    residual = [int(x) for x in w]
    y = [0] * M.ncols
    piv_rows = {r: c for r, c in pivots}
    for row in range(M.nrows):
        if row in piv_rows:
            c = piv_rows[row]
            q, rem = divmod(residual[row], hcols[c][row])
            if rem:
                return None, row
            y[c] = q
            if q:
                residual = [a - q * b for a, b in zip(residual, hcols[c])]
        elif residual[row] != 0:
            return None, row
    return matvec(U, y), None


def lattice_solve(M: MatrixLike, w: Sequence[int]) -> Optional[IntVector]:
    """Some integer ``x`` with ``M x = w``, or ``None`` if ``w`` is outside the column lattice."""
    return lattice_certificate(M, w)[0]
