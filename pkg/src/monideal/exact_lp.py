"""Exact rational linear programming helpers.

Fourier-Motzkin elimination (projection and feasibility with a witness) and
a dense-tableau simplex for ``max <c, y>`` subject to ``A y <= w, y >= 0``
with ``w >= 0``. Everything is done over :class:`fractions.Fraction`.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Optional, Sequence

# A row is (coefficients, rhs, history) and encodes  sum(coef_j * z_j) <= rhs.
# history is the frozenset of original row indices that were combined into it
# (Chernikov's rule prunes rows built from too many originals).
Row = tuple[tuple[Fraction, ...], Fraction, frozenset]


def _normalize(coefs, rhs):
    # scale to primitive integer form so duplicate rows compare equal
    nums = [c for c in coefs if c != 0] + ([rhs] if rhs != 0 else [])
    if not nums:
        return tuple(Fraction(0) for _ in coefs), Fraction(rhs)
    den = 1
    for c in nums:
        den = den * Fraction(c).denominator // gcd(den, Fraction(c).denominator)
    ints = [int(Fraction(c) * den) for c in nums]
    g = 0
    for v in ints:
        g = gcd(g, v)
    scale = Fraction(den, g)
    return tuple(Fraction(c) * scale for c in coefs), Fraction(rhs) * scale


def _eliminate(rows: list[Row], k: int, n_eliminated: int) -> list[Row]:
    """Eliminate variable k from the system."""
    pos, neg, rest = [], [], []
    for row in rows:
        c = row[0][k]
        (pos if c > 0 else neg if c < 0 else rest).append(row)
    out: dict[tuple, Row] = {}
    for row in rest:
        out.setdefault((row[0], row[1]), row)
    for pc, pr, ph in pos:
        for nc, nr, nh in neg:
            hist = ph | nh
            if len(hist) > n_eliminated + 1:
                continue
            p, q = pc[k], -nc[k]
            coefs = tuple(q * a + p * b for a, b in zip(pc, nc))
            coefs, rhs = _normalize(coefs, q * pr + p * nr)
            key = (coefs, rhs)
            old = out.get(key)
            if old is None or len(hist) < len(old[2]):
                out[key] = (coefs, rhs, hist)
    return list(out.values())


def make_rows(A: Sequence[Sequence], b: Sequence) -> list[Row]:
    rows = []
    for idx, (coefs, rhs) in enumerate(zip(A, b)):
        c, r = _normalize(tuple(Fraction(v) for v in coefs), Fraction(rhs))
        rows.append((c, r, frozenset([idx])))
    return rows


def project(A, b, eliminate: Sequence[int]) -> list[tuple[tuple[Fraction, ...], Fraction]]:
    """Project {z : A z <= b} onto the variables not listed in ``eliminate``.

    Returns inequalities (coefficients over all variables, with zeros in the
    eliminated positions, and rhs). Constant rows ``0 <= rhs`` that hold are
    dropped; an infeasible constant row is kept as the witness of emptiness.
    """
    rows = make_rows(A, b)
    for count, k in enumerate(eliminate, start=1):
        rows = _eliminate(rows, k, count)
    result = []
    for coefs, rhs, _ in rows:
        if all(c == 0 for c in coefs) and rhs >= 0:
            continue
        result.append((coefs, rhs))
    return result


def feasible_point(A, b) -> Optional[list[Fraction]]:
    """A point of {z : A z <= b}, or None when the system is infeasible.

    Eliminates variables last to first, then back-substitutes choosing for
    each variable the largest lower bound (or the smallest upper bound when
    no lower bound exists, or 0 when unconstrained).
    """
    nvars = len(A[0]) if A else 0
    systems = [make_rows(A, b)]
    for count, k in enumerate(reversed(range(nvars)), start=1):
        systems.append(_eliminate(systems[-1], k, count))
    if any(rhs < 0 for coefs, rhs, _ in systems[-1]):
        return None
    z = [Fraction(0)] * nvars
    # systems[s] still involves variables 0..nvars-s-1, so variable k is
    # pinned down by systems[nvars-1-k] once z[0..k-1] are known
    for k in range(nvars):
        lo = hi = None
        for coefs, rhs, _ in systems[nvars - 1 - k]:
            c = coefs[k]
            if c == 0:
                continue
            rest = rhs - sum(coefs[j] * z[j] for j in range(k))
            bound = rest / c
            if c > 0:
                hi = bound if hi is None else min(hi, bound)
            else:
                lo = bound if lo is None else max(lo, bound)
        if lo is not None:
            z[k] = lo
        elif hi is not None:
            z[k] = min(hi, Fraction(0))
        if lo is not None and hi is not None and lo > hi:
            raise ArithmeticError("Fourier-Motzkin back-substitution failed")
    return z


def simplex_max(A: Sequence[Sequence], w: Sequence, c: Optional[Sequence] = None):
    """Maximize <c, y> over {y >= 0 : A y <= w} for w >= 0.

    Returns (optimum, y). The origin is feasible, so a single phase with
    Bland's rule suffices. Raises ArithmeticError when unbounded.
    """
    m = len(A)
    q = len(A[0])
    if any(Fraction(v) < 0 for v in w):
        raise ValueError("right-hand side must be non-negative")
    if c is None:
        c = [1] * q
    # tableau rows: [A | I | w]; objective row stores reduced costs
    T = [[Fraction(v) for v in A[i]] + [Fraction(int(i == j)) for j in range(m)] + [Fraction(w[i])]
         for i in range(m)]
    obj = [Fraction(-v) for v in c] + [Fraction(0)] * m + [Fraction(0)]
    basis = [q + i for i in range(m)]
    width = q + m
    while True:
        entering = next((j for j in range(width) if obj[j] < 0), None)
        if entering is None:
            break
        best = None
        for i in range(m):
            a = T[i][entering]
            if a > 0:
                ratio = T[i][-1] / a
                if best is None or ratio < best[0] or (ratio == best[0] and basis[i] < basis[best[1]]):
                    best = (ratio, i)
        if best is None:
            raise ArithmeticError("linear program is unbounded")
        r = best[1]
        piv = T[r][entering]
        T[r] = [v / piv for v in T[r]]
        for i in range(m):
            if i != r and T[i][entering] != 0:
                f = T[i][entering]
                T[i] = [u - f * v for u, v in zip(T[i], T[r])]
        f = obj[entering]
        obj = [u - f * v for u, v in zip(obj, T[r])]
        basis[r] = entering
    y = [Fraction(0)] * q
    for i, j in enumerate(basis):
        if j < q:
            y[j] = T[i][-1]
    return obj[-1], y
