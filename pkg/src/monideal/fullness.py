"""m-fullness of two-variable monomial ideals.

Covers the staircase criterion, the monomial content of the colon by x+y,
the m-full monomial closure obtained by iterating that colon, and the split
of an m-full ideal into an x-tight and a y-tight factor.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .core import MonomialIdeal, Staircase, as_ideal, as_staircase, contains, multiply, order
from .errors import DimensionMismatch, MonomialIdealError, NotZeroDimensional


@dataclass(frozen=True)
class MFullVerdict:
    is_m_full: bool
    k: Optional[int]
    witness_order: int
    n: int
    failure: Optional[str] = None


def split_index(S: Staircase) -> int:
    """1 + the number of leading unit gaps b_{n-i} - b_{n-i+1} = 1, i = 1, 2, ...

    This is the only k that can satisfy the first two staircase conditions.
    """
    n = S.n
    k = 1
    while k < n and S.bj(n - k) - S.bj(n - k + 1) == 1:
        k += 1
    return k


def is_m_full(S) -> MFullVerdict:
    S = as_staircase(S)
    n = S.n
    ordr = order(S.ideal)
    k = split_index(S)
    failure = None
    for i in range(k, n):
        if S.ai(i) - S.ai(i + 1) != 1:
            failure = f"a_{i} - a_{i + 1} = {S.ai(i) - S.ai(i + 1)} != 1 with k = {k}"
            break
    full = failure is None
    if full != (ordr == n - 1):
        raise AssertionError(f"staircase criterion and order test disagree on {S}")
    return MFullVerdict(full, k if full else None, ordr, n, failure)


def is_x_tight(S) -> bool:
    S = as_staircase(S)
    return all(S.a[i] - S.a[i + 1] == 1 for i in range(S.n - 1))


def is_y_tight(S) -> bool:
    S = as_staircase(S)
    return all(S.b[i] - S.b[i + 1] == 1 for i in range(S.n - 1))


def _require_2d_zero_dim(J: MonomialIdeal):
    if J.dim != 2:
        raise DimensionMismatch("colon by x+y is implemented in two variables only")
    if not J.is_zero_dimensional():
        raise NotZeroDimensional(f"{J} is not (x,y)-primary")


def colon_by_linear(J) -> MonomialIdeal:
    """Monomials occurring in elements of (J : x+y).

    On the antidiagonal M_0..M_e of degree e (M_t = x^{e-t} y^t), a
    monomial M_t occurs iff some p <= t <= q has x*M_p in J and y*M_q in J:
    the alternating sum M_p - M_{p+1} + ... +- M_q times (x+y) telescopes to
    +-x*M_p +- y*M_q.
    """
    J = as_ideal(J)
    _require_2d_zero_dim(J)
    if J.is_unit():
        return J
    A, B = J.pure_power(0), J.pure_power(1)
    found = []
    # every monomial of degree >= A+B-1 already lies in J
    for e in range(A + B):
        mons = [(e - t, t) for t in range(e + 1)]
        left = [contains(J, (u + 1, v)) for u, v in mons]
        right = [contains(J, (u, v + 1)) for u, v in mons]
        reach_left = False
        prefix = []
        for flag in left:
            reach_left = reach_left or flag
            prefix.append(reach_left)
        reach_right = False
        for t in range(e, -1, -1):
            reach_right = reach_right or right[t]
            if reach_right and prefix[t]:
                found.append(mons[t])
    return MonomialIdeal(2, found or J.gens)


def maximal_times(I: MonomialIdeal) -> MonomialIdeal:
    return multiply(MonomialIdeal.maximal(2), I)


def m_full_closure(I, max_steps: Optional[int] = None, trace: Optional[list] = None) -> MonomialIdeal:
    """Iterate I_{j+1} = M(m I_j : x+y) until it stabilizes.

    ``max_steps`` defaults to the number of lattice points of the integral
    closure missing from I, which bounds the number of strict increases.
    """
    from .polyhedra import integral_closure

    I = as_ideal(I)
    _require_2d_zero_dim(I)
    if max_steps is None:
        bar = integral_closure(I)
        A, B = I.pure_power(0), I.pure_power(1)
        max_steps = sum(1 for u in range(A) for v in range(B)
                        if contains(bar, (u, v)) and not contains(I, (u, v)))
    current = I
    for _ in range(max_steps + 1):
        nxt = colon_by_linear(maximal_times(current))
        if trace is not None:
            trace.append(nxt)
        if nxt == current:
            return current
        current = nxt
    raise RuntimeError(f"m-full closure did not stabilize within {max_steps} steps")


def tight_factorization(S) -> tuple[MonomialIdeal, MonomialIdeal]:
    """Split an m-full staircase as X * Y with X x-tight and Y y-tight.

    With k from the staircase criterion, the first k generators are
    x^{a_i} y^{i-1} and the last n-k+1 are x^{n-i} y^{b_{n-i+1}}. Then
    Y = (x^{a_i - (n-k)} y^{i-1} : i <= k) and
    X = (x^{n-i} y^{b_{n-i+1} - (k-1)} : i >= k). A factor with a single
    generator is the unit ideal.
    """
    S = as_staircase(S)
    verdict = is_m_full(S)
    if not verdict.is_m_full:
        raise MonomialIdealError(f"{S} is not m-full: {verdict.failure}")
    n, k = S.n, verdict.k
    Y = MonomialIdeal(2, [(S.ai(i) - (n - k), i - 1) for i in range(1, k + 1)])
    X = MonomialIdeal(2, [(n - i, S.bj(n - i + 1) - (k - 1)) for i in range(k, n + 1)])
    return X, Y
