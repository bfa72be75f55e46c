"""Normality of two-variable monomial ideals.

Inequality suites on the staircase exponents give evidence in each
direction: necessary conditions (any failure proves the ideal is not normal)
and sufficient conditions (a pass proves it is). The verdict itself comes
from the polyhedral closure: in k[x,y] an ideal is normal exactly when it is
integrally closed.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .core import Staircase, as_staircase, power
from .errors import InconsistencyError
from .fullness import MFullVerdict, is_m_full, m_full_closure, split_index, tight_factorization
from .polyhedra import integral_closure, power_closure

PASS, FAIL, VACUOUS = "pass", "fail", "vacuous"


def _ceil_half(n: int) -> int:
    return -((-n) // 2)


@dataclass(frozen=True)
class Check:
    condition: str
    index: Optional[int]
    status: str
    lhs: Optional[int] = None
    rhs: Optional[int] = None
    note: str = ""

    @property
    def ok(self) -> bool:
        return self.status != FAIL


@dataclass
class ConditionReport:
    checks: list = field(default_factory=list)
    overall_necessary: Optional[bool] = None
    overall_sufficient: Optional[bool] = None
    k: Optional[int] = None

    def failures(self) -> list:
        return [c for c in self.checks if c.status == FAIL]

    def by_condition(self, prefix: str) -> list:
        return [c for c in self.checks if c.condition.startswith(prefix)]


def _gap_one_or(S: Staircase) -> list[Check]:
    """Normal ideals have a_i - a_{i+1} = 1 or b_{n-i} - b_{n-i+1} = 1 at every i."""
    n, out = S.n, []
    for i in range(1, n):
        ga, gb = S.ai(i) - S.ai(i + 1), S.bj(n - i) - S.bj(n - i + 1)
        ok = ga == 1 or gb == 1
        out.append(Check("gap_one", i, PASS if ok else FAIL, ga, gb,
                         "a-gap, b-gap; one of them must be 1"))
    return out


def _big_b_gap(S: Staircase) -> list[Check]:
    # a b-gap > 1 at i forces unit a-gaps at i and i+1 (the second only when i+1 <= n-1)
    n, out = S.n, []
    for i in range(1, n):
        gb = S.bj(n - i) - S.bj(n - i + 1)
        if gb <= 1:
            out.append(Check("big_b_gap", i, VACUOUS, gb, 1))
            continue
        gaps = [S.ai(j) - S.ai(j + 1) for j in (i, i + 1) if j + 1 <= n]
        ok = all(g == 1 for g in gaps)
        out.append(Check("big_b_gap", i, PASS if ok else FAIL, max(gaps), 1,
                         "largest a-gap at i, i+1 must be 1"))
    return out


def _midpoint_triples(S: Staircase) -> list[Check]:
    """Ceiling-midpoint bounds on consecutive points with two unit gaps."""
    n, out = S.n, []
    for i in range(1, n - 1):
        # part (a): unit b-gaps on both sides bound a_{i+1}
        if S.bj(n - i - 1) - S.bj(n - i) == 1 and S.bj(n - i) - S.bj(n - i + 1) == 1:
            lhs, rhs = S.ai(i + 1), _ceil_half(S.ai(i) + S.ai(i + 2))
            out.append(Check("midpoint_a", i, PASS if lhs <= rhs else FAIL, lhs, rhs))
        else:
            out.append(Check("midpoint_a", i, VACUOUS))
        # part (b): unit a-gaps on both sides bound b_{n-i}
        if S.ai(i) - S.ai(i + 1) == 1 and S.ai(i + 1) - S.ai(i + 2) == 1:
            lhs, rhs = S.bj(n - i), _ceil_half(S.bj(n - i - 1) + S.bj(n - i + 1))
            out.append(Check("midpoint_b", i, PASS if lhs <= rhs else FAIL, lhs, rhs))
        else:
            out.append(Check("midpoint_b", i, VACUOUS))
    return out


def _staircase_shape_for(S: Staircase, k: int) -> list[Check]:
    n, out = S.n, []
    # (1) a_{n-1} = 1, ..., a_k = n-k
    for i in range(k, n):
        out.append(Check("shape_a", i, PASS if S.ai(i) == n - i else FAIL, S.ai(i), n - i))
    # (2) b_{n-1} = 1, ..., b_{n-k+1} = k-1
    for j in range(n - k + 1, n):
        out.append(Check("shape_b", j, PASS if S.bj(j) == n - j else FAIL, S.bj(j), n - j))
    # (3) b_j <= ceil((b_{j-1} + b_{j+1}) / 2) for j = 2..n-k
    for j in range(2, n - k + 1):
        lhs, rhs = S.bj(j), _ceil_half(S.bj(j - 1) + S.bj(j + 1))
        out.append(Check("shape_bmid", j, PASS if lhs <= rhs else FAIL, lhs, rhs))
    # (4) a_j <= ceil((a_{j-1} + a_{j+1}) / 2) for j = 2..k-1
    for j in range(2, k):
        lhs, rhs = S.ai(j), _ceil_half(S.ai(j - 1) + S.ai(j + 1))
        out.append(Check("shape_amid", j, PASS if lhs <= rhs else FAIL, lhs, rhs))
    return out


def _staircase_shape(S: Staircase) -> tuple[list[Check], Optional[int]]:
    """Look for a k making the shape conditions hold; report that k's checks.

    Without a witness the checks for the split index are reported, with
    one extra failing summary entry.
    """
    for k in range(1, S.n + 1):
        checks = _staircase_shape_for(S, k)
        if all(c.ok for c in checks):
            return checks, k
    k0 = split_index(S)
    return _staircase_shape_for(S, k0) + [Check("shape_exists", None, FAIL, note="no k works")], None


def necessary_conditions(S) -> ConditionReport:
    S = as_staircase(S)
    shape, k = _staircase_shape(S)
    checks = _gap_one_or(S) + _big_b_gap(S) + _midpoint_triples(S) + shape
    return ConditionReport(checks, overall_necessary=all(c.ok for c in checks), k=k)


def _convex_b(S: Staircase, lo: int, hi: int, name: str) -> list[Check]:
    out = []
    for j in range(lo, hi + 1):
        lhs, rhs = 2 * S.bj(j), S.bj(j - 1) + S.bj(j + 1)
        out.append(Check(name, j, PASS if lhs <= rhs else FAIL, lhs, rhs))
    return out


def _convex_a(S: Staircase, lo: int, hi: int, name: str) -> list[Check]:
    out = []
    for j in range(lo, hi + 1):
        lhs, rhs = 2 * S.ai(j), S.ai(j - 1) + S.ai(j + 1)
        out.append(Check(name, j, PASS if lhs <= rhs else FAIL, lhs, rhs))
    return out


def sufficient_conditions(S) -> ConditionReport:
    """Two sufficient suites: x-tight with convex b, and the m-full split version."""
    S = as_staircase(S)
    n = S.n
    checks = []
    tight = [Check("xtight_gap", i, PASS if S.ai(i) - S.ai(i + 1) == 1 else FAIL,
                   S.ai(i) - S.ai(i + 1), 1) for i in range(1, n)]
    suite1 = tight + _convex_b(S, 2, n - 1, "xtight_convex_b")
    checks += suite1
    suite1_ok = all(c.ok for c in suite1)

    verdict = is_m_full(S)
    suite2_ok = False
    if verdict.is_m_full:
        k = verdict.k
        suite2 = _convex_b(S, 2, n - k, "mfull_convex_b") + _convex_a(S, 2, k - 1, "mfull_convex_a")
        checks += suite2
        suite2_ok = all(c.ok for c in suite2)
    else:
        checks.append(Check("mfull_split", None, VACUOUS, note="not m-full; suite not applicable"))
    return ConditionReport(checks, overall_sufficient=suite1_ok or suite2_ok, k=verdict.k)


def is_normal(S, check_powers: int = 3) -> bool:
    """Integrally closed test; normal ideals are also checked on powers up to ``check_powers``."""
    S = as_staircase(S)
    I = S.ideal
    closed = integral_closure(I) == I
    if closed:
        for m in range(2, check_powers + 1):
            if power_closure(I, m) != power(I, m):
                raise InconsistencyError(f"{I} is integrally closed but its power {m} is not")
    return closed


@dataclass
class Classification:
    staircase: Staircase
    m_full: MFullVerdict
    m_full_closure: object
    integral_closure: object
    necessary: ConditionReport
    sufficient: ConditionReport
    normal: bool
    factorization: Optional[tuple]
    consistency: dict

    @property
    def consistent(self) -> bool:
        return all(self.consistency.values())


def classify(S) -> Classification:
    S = as_staircase(S)
    I = S.ideal
    mf = is_m_full(S)
    star = m_full_closure(I)
    bar = integral_closure(I)
    nec = necessary_conditions(S)
    suf = sufficient_conditions(S)
    normal = is_normal(S)
    fac = tight_factorization(S) if mf.is_m_full else None
    consistency = {
        "normal_implies_m_full": (not normal) or mf.is_m_full,
        "m_full_iff_order": mf.is_m_full == (mf.witness_order == S.n - 1),
        "normal_implies_necessary": (not normal) or nec.overall_necessary,
        "sufficient_implies_normal": (not suf.overall_sufficient) or normal,
        "sandwich": I.issubset(star) and star.issubset(bar),
        "closure_is_m_full": is_m_full(bar).is_m_full,
    }
    if fac is not None:
        from .core import multiply
        consistency["factorization_product"] = multiply(*fac) == I
    return Classification(S, mf, star, bar, nec, suf, normal, fac, consistency)
