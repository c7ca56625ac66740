"""Brute-force ground truth for testing and ``--verify``.

Nothing here imports the decision engine; problems and graphs are read
duck-typed (``.vs``/``.lower``/``.upper``/``.target``, ``.n``/``.edges``).
Everything is exponential on purpose.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import gcd, prod
from typing import NamedTuple, Optional

from .errors import BudgetExceeded


@dataclass(frozen=True)
class BoxSearchBudget:
    max_points: int = 10**6

    def __post_init__(self):
        if self.max_points <= 0:
            raise ValueError("max_points must be positive")


def _colsum(vs, x, n):
    acc = [0] * n
    for xi, v in zip(x, vs):
        if xi:
            for k in range(n):
                acc[k] += xi * v[k]
    return acc


def brute_force_box(prob, budget: BoxSearchBudget = BoxSearchBudget()) -> Optional[tuple[int, ...]]:
    """First integer point of the box (lexicographic) solving the system, or ``None``."""
    sizes = [b - a + 1 for a, b in zip(prob.lower, prob.upper)]
    if prod(sizes) > budget.max_points:
        raise BudgetExceeded(f"box holds {prod(sizes)} points, budget is {budget.max_points}")
    n = len(prob.target)
    target = list(prob.target)
    ranges = [range(a, b + 1) for a, b in zip(prob.lower, prob.upper)]
    for x in product(*ranges):
        if _colsum(prob.vs, x, n) == target:
            return tuple(x)
    return None


class OrientationSets(NamedTuple):
    scores: set      # out-degree vectors of all 2^m orientations
    signed: set      # out-minus-in vectors of all 3^m oriented subgraphs


def brute_force_orientations(G, budget: BoxSearchBudget = BoxSearchBudget()) -> OrientationSets:
    n, edges = G.n, list(G.edges)
    if 3 ** len(edges) > budget.max_points:
        raise BudgetExceeded(f"3^{len(edges)} states exceed budget {budget.max_points}")
    scores = set()
    for bits in product((0, 1), repeat=len(edges)):
        out = [0] * n
        for (i, j), b in zip(edges, bits):
            out[(i if b == 0 else j) - 1] += 1
        scores.add(tuple(out))
    signed = set()
    for states in product((-1, 0, 1), repeat=len(edges)):
        d = [0] * n
        for (i, j), s in zip(edges, states):
            d[i - 1] += s
            d[j - 1] -= s
        signed.add(tuple(d))
    return OrientationSets(scores, signed)


# --- Fourier-Motzkin ------------------------------------------------------


def _normalize(coeffs, rhs):
    lead = next((abs(c) for c in coeffs if c != 0), None)
    if lead is None:
        return tuple(coeffs), rhs
    return tuple(c / lead for c in coeffs), rhs / lead


def fourier_motzkin_feasible(prob, max_rows: int = 20000) -> bool:
    """Exact rational feasibility of the box system by variable elimination.

    Equalities are used first to substitute variables away, then the
    remaining inequalities ``a . x <= c`` are projected one variable at a time.
    """
    m, n = len(prob.vs), len(prob.target)
    eqs = [([Fraction(prob.vs[j][i]) for j in range(m)], Fraction(prob.target[i])) for i in range(n)]
    ineqs = []
    for j in range(m):
        e = [Fraction(0)] * m
        e[j] = Fraction(1)
        ineqs.append((e, Fraction(prob.upper[j])))
        ineqs.append(([-x for x in e], Fraction(-prob.lower[j])))

    while eqs:
        a, c = eqs.pop()
        piv = next((k for k, x in enumerate(a) if x != 0), None)
        if piv is None:
            if c != 0:
                return False
            continue
        # x_piv = (c - sum_{k != piv} a_k x_k) / a_piv
        def subst(b, d):
            f = b[piv] / a[piv]
            return [bk - f * ak for bk, ak in zip(b, a)], d - f * c
        eqs = [subst(b, d) for b, d in eqs]
        ineqs = [subst(b, d) for b, d in ineqs]

    rows = {}
    for a, c in ineqs:
        key, r = _normalize(a, c)
        rows[key] = min(r, rows.get(key, r))
    for var in range(m):
        pos = [(a, c) for a, c in rows.items() if a[var] > 0]
        neg = [(a, c) for a, c in rows.items() if a[var] < 0]
        new = {a: c for a, c in rows.items() if a[var] == 0}
        for ap, cp in pos:
            for an, cn in neg:
                fp, fn = -an[var], ap[var]
                a = tuple(fp * x + fn * y for x, y in zip(ap, an))
                key, r = _normalize(a, fp * cp + fn * cn)
                new[key] = min(r, new.get(key, r))
        if len(new) > max_rows:
            raise BudgetExceeded(f"elimination produced {len(new)} rows")
        rows = new
    return all(c >= 0 for c in rows.values())


# --- lattice membership and the fractional rounding condition ------------


def _in_lattice(vs, w) -> bool:
    """Whether ``w`` is an integer combination of ``vs``, via a row-style integer echelon basis."""
    rows: dict[int, list[int]] = {}  # pivot coordinate -> basis row, zero before the pivot
    for v in vs:
        v = list(v)
        while any(v):
            p = next(k for k, x in enumerate(v) if x)
            if p not in rows:
                rows[p] = v
                break
            b = rows[p]
            while v[p]:  # Euclid on the pivot coordinate; b ends with the gcd
                q = b[p] // v[p]
                b, v = v, [x - q * y for x, y in zip(b, v)]
            rows[p] = b
    r = list(w)
    for p in sorted(rows):
        b = rows[p]
        if r[p] % b[p]:
            return False
        q = r[p] // b[p]
        r = [x - q * y for x, y in zip(r, b)]
    return not any(r)


def rounding_condition_holds(vs, kmax: int = 6) -> bool:
    """Exhaustive check of the fractional-rounding characterization of Farkas-relatedness.

    For every ``k <= kmax`` and ``0 <= a_i < k`` with ``k w = sum(a_i v_i)``
    and ``w`` in the lattice, some 0/1 vector ``y`` supported inside
    ``supp(a)`` must give ``w = sum(y_i v_i)``.
    """
    m = len(vs)
    if m == 0:
        return True
    n = len(vs[0])
    subset_sums: dict[tuple, list[int]] = {}
    for mask in range(1 << m):
        s = tuple(_colsum(vs, [(mask >> i) & 1 for i in range(m)], n))
        subset_sums.setdefault(s, []).append(mask)
    lattice_cache: dict[tuple, bool] = {}
    for k in range(1, kmax + 1):
        for a in product(range(k), repeat=m):
            if gcd(k, *a) != 1:
                continue  # same w arises for a smaller k
            kw = _colsum(vs, a, n)
            if any(x % k for x in kw):
                continue
            w = tuple(x // k for x in kw)
            if w not in lattice_cache:
                lattice_cache[w] = _in_lattice(vs, w)
            if not lattice_cache[w]:
                continue
            supp = sum(1 << i for i in range(m) if a[i])
            if not any(mask & ~supp == 0 for mask in subset_sums.get(w, ())):
                return False
    return True
