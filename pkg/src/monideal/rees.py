"""Rees algebras of two-variable monomial ideals.

The syzygy matrix of a staircase is bidiagonal with monomial entries; from it
we build the Jacobian dual, test the expected-equations criteria, compute the
defining ideal of R[It] by elimination and by colon, count minimal generators
of the powers (the special fiber's Hilbert function) and probe the reduction
number.

Polynomials live in Q[x, y, T1..Tn]; elimination adds t in front and uses a
block order.
"""

from __future__ import annotations

import functools
import random
from dataclasses import dataclass, field
from typing import Optional

from .core import MonomialIdeal, Staircase, as_staircase, multiply, power
from .errors import InconsistencyError
from .polyalg import (
    DEFAULT_LIMITS,
    DEGREVLEX,
    GroebnerBasis,
    Limits,
    Polynomial,
    Ring,
    buchberger,
    eliminate,
    height,
    ideal_colon_ideal,
)


# -- syzygies --------------------------------------------------------------

@dataclass(frozen=True)
class MonomialMatrix:
    """Entries are None (zero) or (sign, (x-exponent, y-exponent))."""

    rows: int
    cols: int
    entries: tuple

    def entry(self, i: int, j: int):
        return self.entries[i][j]

    def to_polynomials(self, ring: Ring) -> list[list[Polynomial]]:
        out = []
        for row in self.entries:
            line = []
            for e in row:
                if e is None:
                    line.append(ring.zero())
                else:
                    sign, (ex, ey) = e
                    exp = [0] * ring.nvars
                    exp[ring.names.index("x")] = ex
                    exp[ring.names.index("y")] = ey
                    line.append(ring.monomial(exp, sign))
            out.append(line)
        return out

    def as_lists(self) -> list:
        return [[None if e is None else [e[0], list(e[1])] for e in row] for row in self.entries]


XY = Ring(("x", "y"))


def syzygy_matrix(S) -> MonomialMatrix:
    """n x (n-1) matrix; column j has y^{b_{n-j} - b_{n-j+1}} in row j and
    -x^{a_j - a_{j+1}} in row j+1 (1-based)."""
    S = as_staircase(S)
    n = S.n
    rows = [[None] * (n - 1) for _ in range(n)]
    for j in range(1, n):
        rows[j - 1][j - 1] = (1, (0, S.bj(n - j) - S.bj(n - j + 1)))
        rows[j][j - 1] = (-1, (S.ai(j) - S.ai(j + 1), 0))
    phi = MonomialMatrix(n, n - 1, tuple(tuple(r) for r in rows))
    gens = [XY.monomial(g) for g in S.gens]
    mat = phi.to_polynomials(XY)
    for j in range(n - 1):
        if sum((gens[i] * mat[i][j] for i in range(n)), XY.zero()):
            raise InconsistencyError(f"column {j + 1} of the syzygy matrix is not a syzygy")
    return phi


def content_ideal(phi: MonomialMatrix) -> tuple[int, int]:
    """(r, s) with I_1(phi) = (x^r, y^s)."""
    xs, ys = [], []
    for row in phi.entries:
        for e in row:
            if e is None:
                continue
            ex, ey = e[1]
            if ex and not ey:
                xs.append(ex)
            elif ey and not ex:
                ys.append(ey)
            else:
                raise ValueError(f"entry {e} is not a pure power")
    return min(xs), min(ys)


def _det(mat, rows: tuple, cols: tuple, memo: dict) -> Polynomial:
    key = (rows, cols)
    if key in memo:
        return memo[key]
    if len(rows) == 1:
        val = mat[rows[0]][cols[0]]
    else:
        r0, rest = rows[0], rows[1:]
        val = None
        for idx, c in enumerate(cols):
            a = mat[r0][c]
            if not a:
                continue
            term = a * _det(mat, rest, cols[:idx] + cols[idx + 1:], memo)
            if idx % 2:
                term = -term
            val = term if val is None else val + term
        if val is None:
            val = XY.zero()
    memo[key] = val
    return val


def all_minors(phi: MonomialMatrix, k: int) -> list[Polynomial]:
    import itertools

    mat = phi.to_polynomials(XY)
    memo: dict = {}
    return [_det(mat, r, c, memo)
            for r in itertools.combinations(range(phi.rows), k)
            for c in itertools.combinations(range(phi.cols), k)]


def minors(phi: MonomialMatrix, k: int) -> MonomialIdeal:
    """Monomial ideal spanned by the monomials of the k x k minors of phi (k = 0 gives (1))."""
    if k == 0:
        return MonomialIdeal.unit(2)
    if k > min(phi.rows, phi.cols):
        raise ValueError(f"no {k} x {k} minors in a {phi.rows} x {phi.cols} matrix")
    mons = set()
    for d in all_minors(phi, k):
        mons.update(d.terms)
    return MonomialIdeal(2, mons)


# -- Jacobian dual --------------------------------------------------------

def rees_ring(n: int) -> Ring:
    return Ring(("x", "y") + tuple(f"T{i}" for i in range(1, n + 1)))


def fiber_ring(n: int) -> Ring:
    return Ring(tuple(f"T{i}" for i in range(1, n + 1)))


@dataclass(frozen=True)
class JacobianDual:
    """T . phi = [x^r, y^s] . B, with B0 the part of B of (x,y)-degree zero."""

    r: int
    s: int
    ring: Ring
    B: tuple
    B0: tuple


def linear_equations(S) -> list[Polynomial]:
    """The n-1 entries of T . phi."""
    S = as_staircase(S)
    n = S.n
    ring = rees_ring(n)
    mat = syzygy_matrix(S).to_polynomials(ring)
    T = ring.gens()[2:]
    return [sum((T[i] * mat[i][j] for i in range(n)), ring.zero()) for j in range(n - 1)]


def jacobian_dual(S) -> JacobianDual:
    S = as_staircase(S)
    n = S.n
    phi = syzygy_matrix(S)
    r, s = content_ideal(phi)
    ring = rees_ring(n)
    x, y = ring.gens()[:2]
    T = ring.gens()[2:]
    top, bottom, top0, bottom0 = [], [], [], []
    for j in range(n - 1):
        _, (_, beta) = phi.entry(j, j)
        _, (alpha, _) = phi.entry(j + 1, j)
        top.append(-(x ** (alpha - r)) * T[j + 1])
        bottom.append((y ** (beta - s)) * T[j])
        top0.append(-T[j + 1] if alpha == r else ring.zero())
        bottom0.append(T[j] if beta == s else ring.zero())
    dual = JacobianDual(r, s, ring, (tuple(top), tuple(bottom)), (tuple(top0), tuple(bottom0)))
    lin = linear_equations(S)
    for j in range(n - 1):
        if lin[j] != x ** r * top[j] + y ** s * bottom[j]:
            raise InconsistencyError(f"Jacobian dual identity fails in column {j + 1}")
    return dual


def two_minors(B) -> list[Polynomial]:
    """All 2 x 2 minors of a 2-row matrix, unreduced and in column-pair order."""
    top, bottom = B
    m = len(top)
    return [top[i] * bottom[j] - top[j] * bottom[i] for i in range(m) for j in range(i + 1, m)]


@dataclass(frozen=True)
class ExpectedEquations:
    expected: bool
    height_route: bool
    height: int
    target_height: int
    cm_hypothesis: str
    routes_agree: Optional[bool]


def expected_equations_check(S, cohen_macaulay: Optional[bool] = None,
                             limits: Limits = DEFAULT_LIMITS) -> ExpectedEquations:
    """Minor route: I_{n-2}(phi) == I_1(phi)^{n-2}. Height route:
    height I_2(B0) == n-2, which is only a criterion when R[It] is
    Cohen-Macaulay. With ``cohen_macaulay=None`` the hypothesis is taken as
    verified exactly when the ideal is integrally closed (complete ideals
    have Cohen-Macaulay Rees algebras)."""
    from .normality import is_normal

    S = as_staircase(S)
    n = S.n
    phi = syzygy_matrix(S)
    r, s = content_ideal(phi)
    content = MonomialIdeal(2, [(r, 0), (0, s)])
    target = MonomialIdeal.unit(2) if n == 2 else power(content, n - 2)
    expected = minors(phi, n - 2) == target

    dual = jacobian_dual(S)
    ring = fiber_ring(n)
    B0 = tuple(tuple(_drop_xy(p, ring) for p in row) for row in dual.B0)
    quads = [q for q in two_minors(B0) if q]
    h = height(quads, ring, limits) if quads else 0
    height_ok = h == n - 2

    if cohen_macaulay is None:
        cohen_macaulay = is_normal(S) or None
    hyp = "verified" if cohen_macaulay else "unverified"
    agree = (expected == height_ok) if cohen_macaulay else None
    return ExpectedEquations(expected, height_ok, h, n - 2, hyp, agree)


def _drop_xy(p: Polynomial, ring: Ring) -> Polynomial:
    out = {}
    for e, c in p.terms.items():
        if e[0] or e[1]:
            raise ValueError(f"{p} is not free of x, y")
        out[e[2:]] = c
    return Polynomial(ring, out)


# -- defining ideal -------------------------------------------------------

def _gen_polys(S: Staircase, ring: Ring) -> list[Polynomial]:
    return [ring.monomial(tuple(g) + (0,) * (ring.nvars - 2)) for g in S.gens]


def rees_ideal(S, route: str = "elimination", limits: Limits = DEFAULT_LIMITS) -> GroebnerBasis:
    """Defining ideal Q of R[It] as a reduced degrevlex basis in Q[x, y, T1..Tn].

    ``elimination`` eliminates t from (T_i - g_i t) and is always valid.
    ``colon`` computes (T . phi) : I, which equals Q when R[It] is
    Cohen-Macaulay.
    """
    S = as_staircase(S)
    n = S.n
    ring = rees_ring(n)
    if route == "elimination":
        big = Ring(("t",) + ring.names)
        t = big.var("t")
        T = big.gens()[3:]
        gens = [T[i] - big.monomial((0,) + tuple(g) + (0,) * n) * t for i, g in enumerate(S.gens)]
        G = eliminate(gens, ["t"], limits, big)
        return GroebnerBasis(ring, DEGREVLEX, G.basis)
    if route == "colon":
        return ideal_colon_ideal(linear_equations(S), _gen_polys(S, ring), limits)
    raise ValueError(f"unknown route {route!r}")


def _t_degree(p: Polynomial) -> int:
    return p.degree_in(range(2, p.ring.nvars))


@dataclass
class ReesPresentation:
    staircase: Staircase
    phi: MonomialMatrix
    dual: JacobianDual
    linear: list
    quadrics: list
    ideals: dict = field(default_factory=dict)
    expected: Optional[ExpectedEquations] = None
    extra_generators: list = field(default_factory=list)
    routes_agree: Optional[bool] = None
    quadrics_in_ideal: Optional[bool] = None
    generated_in_degree_two: Optional[bool] = None
    reduction: Optional["ReductionVerdict"] = None


def _extra_generators(Q: GroebnerBasis, known: list[Polynomial], limits: Limits) -> list[Polynomial]:
    """Elements of Q's basis needed on top of ``known``, each reduced modulo what came before."""
    ring = Q.ring
    current = buchberger(known, DEGREVLEX, limits, ring)
    extras = []
    order = DEGREVLEX
    for g in sorted(Q.basis, key=lambda p: (_t_degree(p), p.degree(), order.key(p.leading_term(order)[0]))):
        if current.contains(g):
            continue
        nf = current.reduce(g).primitive(order)
        extras.append(nf)
        current = buchberger(list(current.basis) + [nf], DEGREVLEX, limits, ring)
    return extras


def rees_presentation(S, routes=("elimination", "colon"), cohen_macaulay: Optional[bool] = None,
                      limits: Limits = DEFAULT_LIMITS) -> ReesPresentation:
    S = as_staircase(S)
    phi = syzygy_matrix(S)
    dual = jacobian_dual(S)
    lin = linear_equations(S)
    quads = two_minors(dual.B)
    pres = ReesPresentation(S, phi, dual, lin, quads)
    pres.expected = expected_equations_check(S, cohen_macaulay, limits)
    for route in routes:
        pres.ideals[route] = rees_ideal(S, route, limits)
    if len(pres.ideals) == 2:
        pres.routes_agree = pres.ideals["elimination"] == pres.ideals["colon"]
    if pres.ideals:
        Q = pres.ideals.get("elimination") or pres.ideals["colon"]
        pres.quadrics_in_ideal = Q.contains_ideal(quads + lin)
        low = [g for g in Q.basis if _t_degree(g) <= 2]
        pres.generated_in_degree_two = buchberger(low, DEGREVLEX, limits, Q.ring) == Q
        pres.extra_generators = _extra_generators(Q, lin + [q for q in quads if q], limits)
    return pres


# -- special fiber and reduction number --------------------------------------

@dataclass(frozen=True)
class FiberHilbert:
    values: tuple[int, ...]
    predicted: Optional[tuple[int, ...]]
    mismatches: tuple[int, ...]


def fiber_hilbert(S, jmax: int) -> FiberHilbert:
    """mu(F_j) = minimal number of generators of I^j for j = 0..jmax.

    For m-full ideals the prediction j(n-1)+1 is compared and any j where it
    fails is listed in ``mismatches``.
    """
    from .fullness import is_m_full

    if jmax < 1:
        raise ValueError("jmax must be at least 1")
    S = as_staircase(S)
    I = S.ideal
    values = [1] + [len(power(I, j)) for j in range(1, jmax + 1)]
    predicted = None
    mismatches = ()
    if is_m_full(S).is_m_full:
        predicted = tuple(j * (S.n - 1) + 1 for j in range(jmax + 1))
        mismatches = tuple(j for j in range(jmax + 1) if values[j] != predicted[j])
    return FiberHilbert(tuple(values), predicted, mismatches)


AT_MOST_ONE, AT_LEAST_TWO = "atMostOne", "atLeastTwo"


@dataclass(frozen=True)
class ReductionVerdict:
    verdict: str
    certified: bool
    trials: int
    seed: int
    coefficient_range: tuple[int, int]
    witness: Optional[tuple[str, str]] = None
    witness_trial: Optional[int] = None
    truncation_degree: Optional[int] = None


def _socle_degree(I: MonomialIdeal) -> int:
    """Least e with every monomial of degree e in I."""
    e = 0
    while not all(any(g[0] <= e - t and g[1] <= t for g in I.gens) for t in range(e + 1)):
        e += 1
    return e


# rank is computed modulo this prime; a full rank there is a full rank over Q
RANK_PRIME = (1 << 61) - 1


def _reduces_locally(f: Polynomial, g: Polynomial, I: MonomialIdeal, I2: MonomialIdeal, D: int) -> bool:
    """I^2 = (f, g) I near the origin, tested as I^2 inside (f, g) I + m^D.

    With m^{D-1} inside I^2, m^D lies in m I^2, so the containment gives
    I^2 = (f, g) I + m I^2 and Nakayama's lemma finishes in the local ring.

    Modulo m^D both sides are finite dimensional and (f, g) I + m^D sits
    inside I^2 + m^D, so the containment holds iff the truncated products
    m*h*v (h in {f, g}, v a generator, m a monomial) span every monomial of
    I^2 below degree D. The span is measured by its rank modulo a large
    prime, which never exceeds the rank over Q: reaching full rank there is
    a proof. A shortfall can in principle come from the prime, which only
    affects the uncertified direction.
    """
    cols = {(u, d - u): None for d in range(D) for u in range(d + 1) if (u, d - u) in I2}
    for i, c in enumerate(cols):
        cols[c] = i
    need = len(cols)
    pivots: dict[int, dict[int, int]] = {}
    low = min(sum(v) for v in I.gens)
    for h in (f, g):
        hterms = [(e, int(c)) for e, c in h.terms.items()]
        for v in I.gens:
            for d in range(D - low - sum(v)):
                for u in range(d + 1):
                    row = {}
                    for (ex, ey), c in hterms:
                        e = (ex + v[0] + u, ey + v[1] + d - u)
                        if sum(e) < D:
                            k = cols[e]
                            row[k] = (row.get(k, 0) + c) % RANK_PRIME
                    row = {k: c for k, c in row.items() if c}
                    while row:
                        k = min(row)
                        piv = pivots.get(k)
                        if piv is None:
                            inv = pow(row[k], -1, RANK_PRIME)
                            pivots[k] = {j: c * inv % RANK_PRIME for j, c in row.items()}
                            if len(pivots) == need:
                                return True
                            break
                        scale = row[k]
                        for j, c in piv.items():
                            nv = (row.get(j, 0) - scale * c) % RANK_PRIME
                            if nv:
                                row[j] = nv
                            else:
                                row.pop(j, None)
    return len(pivots) == need


@functools.lru_cache(maxsize=256)
def _probe_cached(S: Staircase, trials: int, seed: int, bound: int) -> ReductionVerdict:
    I = S.ideal
    I2 = power(I, 2)
    pure = MonomialIdeal(2, [(S.ai(1), 0), (0, S.bj(1))])
    if I2.issubset(multiply(pure, I)):
        return ReductionVerdict(AT_MOST_ONE, True, 0, seed, (-bound, bound),
                                (f"x^{S.ai(1)}", f"y^{S.bj(1)}"), 0)
    D = _socle_degree(I2) + 1
    rng = random.Random(seed)
    choices = [c for c in range(-bound, bound + 1) if c]
    gens = [XY.monomial(v) for v in I.gens]
    for trial in range(1, trials + 1):
        cf = [rng.choice(choices) for _ in gens]
        cg = [rng.choice(choices) for _ in gens]
        f = sum((c * m for c, m in zip(cf, gens)), XY.zero())
        g = sum((c * m for c, m in zip(cg, gens)), XY.zero())
        if _reduces_locally(f, g, I, I2, D):
            return ReductionVerdict(AT_MOST_ONE, True, trial, seed, (-bound, bound),
                                    (str(f), str(g)), trial, D)
    return ReductionVerdict(AT_LEAST_TWO, False, trials, seed, (-bound, bound), None, None, D)


def reduction_number_probe(S, trials: int = 5, seed: int = 7, coefficient_bound: int = 9) -> ReductionVerdict:
    """Look for J = (f, g) with I^2 = J I, f and g random combinations of the generators.

    The pure powers (x^{a_1}, y^{b_1}) are tried first. A success certifies
    reduction number <= 1; failing every trial reports ``atLeastTwo`` with
    ``certified=False``.
    """
    if trials < 1:
        raise ValueError("need at least one trial")
    return _probe_cached(as_staircase(S), trials, seed, coefficient_bound)
