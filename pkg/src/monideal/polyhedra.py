"""Newton polyhedra of monomial ideals, lattice-point closures, Pick's
formula and a bounded desk check of the integer rounding property.

In two variables a zero-dimensional ideal's Newton polyhedron is stored as
its lower-left convex chain and membership is decided with integer cross
products. Otherwise the generator list is kept and membership is decided by
Fourier-Motzkin elimination of the convex weights.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, prod
from typing import Optional, Sequence

from . import exact_lp
from .core import Exponent, MonomialIdeal, power
from .errors import DimensionMismatch, MonomialIdealError, NotZeroDimensional, ResourceExceeded

Point2 = tuple[int, int]


def _cross(o, a, b):
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def _lower_chain(points: Sequence[Point2]) -> tuple[Point2, ...]:
    pts = sorted(set(points))
    hull: list[Point2] = []
    for p in pts:
        while len(hull) >= 2 and _cross(hull[-2], hull[-1], p) <= 0:
            hull.pop()
        hull.append(p)
    return tuple(hull)


@dataclass(frozen=True)
class MembershipCertificate:
    """a = sum(lambdas[i] * generators[i]) + slack with lambdas a probability vector."""

    lambdas: tuple[Fraction, ...]
    slack: tuple[Fraction, ...]

    def verify(self, generators: Sequence[Exponent], a: Sequence, scale: int = 1) -> bool:
        if any(l < 0 for l in self.lambdas) or sum(self.lambdas) != 1:
            return False
        if any(s < 0 for s in self.slack):
            return False
        d = len(a)
        recon = [sum(l * scale * g[j] for l, g in zip(self.lambdas, generators)) + self.slack[j]
                 for j in range(d)]
        return all(recon[j] == Fraction(a[j]) for j in range(d))


@dataclass(frozen=True)
class NewtonPolyhedron:
    """R^d_{>=0} + conv(generators).

    ``chain`` is set for zero-dimensional ideals in two variables: the
    vertices of the lower-left boundary from (0, b_1) to (a_1, 0).
    Otherwise ``halfspaces`` holds (coefficients, rhs) pairs, each meaning
    ``<coefficients, a> <= rhs``, obtained by projecting out the convex
    weights.
    """

    dim: int
    generators: tuple[Exponent, ...]
    chain: Optional[tuple[Point2, ...]] = None
    halfspaces: Optional[tuple] = field(default=None, repr=False)

    def facets(self) -> list[tuple[tuple[Fraction, ...], Fraction]]:
        if self.chain is None:
            return list(self.halfspaces)
        # each chain edge u->v gives <(v_y-u_y, u_x-v_x), a> >= cross term
        out = [((Fraction(-1), Fraction(0)), Fraction(0)), ((Fraction(0), Fraction(-1)), Fraction(0))]
        for u, v in zip(self.chain, self.chain[1:]):
            nx, ny = v[1] - u[1], u[0] - v[0]
            out.append(((Fraction(nx), Fraction(ny)), Fraction(nx * u[0] + ny * u[1])))
        return out

    def is_vertex_generator(self, g) -> bool:
        if self.chain is not None:
            return tuple(g) in self.chain
        raise NotImplementedError("vertex test is only available for two-variable chains")


def newton_polytope(I: MonomialIdeal) -> NewtonPolyhedron:
    if I.dim == 2 and I.is_zero_dimensional() and not I.is_unit():
        return NewtonPolyhedron(2, I.gens, chain=_lower_chain(I.gens))
    q, d = len(I.gens), I.dim
    # variables: lambda_0..lambda_{q-1}, a_0..a_{d-1}
    A, b = [], []
    for i in range(q):
        A.append([-int(k == i) for k in range(q)] + [0] * d)
        b.append(0)
    A.append([1] * q + [0] * d)
    b.append(1)
    A.append([-1] * q + [0] * d)
    b.append(-1)
    for j in range(d):
        A.append([g[j] for g in I.gens] + [-int(k == j) for k in range(d)])
        b.append(0)
    rows = exact_lp.project(A, b, eliminate=range(q))
    halfspaces = tuple((coefs[q:], rhs) for coefs, rhs in rows)
    return NewtonPolyhedron(d, I.gens, halfspaces=halfspaces)


def _chain_height(chain: Sequence[Point2], x: Fraction) -> Fraction:
    """Lowest y with (x, y) in the polyhedron, for 0 <= x."""
    if x >= chain[-1][0]:
        return Fraction(0)
    for u, v in zip(chain, chain[1:]):
        if u[0] <= x <= v[0]:
            return u[1] + Fraction(v[1] - u[1]) * (x - u[0]) / (v[0] - u[0])
    raise AssertionError("x outside chain range")


def _contains(Q: NewtonPolyhedron, a, scale: int = 1) -> bool:
    pt = [Fraction(c) / scale for c in a]
    if any(c < 0 for c in pt):
        return False
    if Q.chain is not None:
        return pt[1] >= _chain_height(Q.chain, pt[0])
    return all(sum(c * p for c, p in zip(coefs, pt)) <= rhs for coefs, rhs in Q.halfspaces)


def _certificate(Q: NewtonPolyhedron, a, scale: int = 1) -> Optional[MembershipCertificate]:
    q, d = len(Q.generators), Q.dim
    pt = [Fraction(c) for c in a]
    lambdas = [Fraction(0)] * q
    if Q.chain is not None:
        if not _contains(Q, a, scale):
            return None
        index = {g: i for i, g in enumerate(Q.generators)}
        x = pt[0] / scale
        if x >= Q.chain[-1][0]:
            lambdas[index[Q.chain[-1]]] = Fraction(1)
        else:
            for u, v in zip(Q.chain, Q.chain[1:]):
                if u[0] <= x <= v[0]:
                    t = (x - u[0]) / (v[0] - u[0])
                    lambdas[index[u]] += 1 - t
                    lambdas[index[v]] += t
                    break
    else:
        A, b = [], []
        for i in range(q):
            A.append([-int(k == i) for k in range(q)])
            b.append(0)
        A.append([1] * q)
        b.append(1)
        A.append([-1] * q)
        b.append(-1)
        for j in range(d):
            A.append([scale * g[j] for g in Q.generators])
            b.append(pt[j])
        z = exact_lp.feasible_point(A, b)
        if z is None:
            return None
        lambdas = z
    slack = tuple(pt[j] - sum(l * scale * g[j] for l, g in zip(lambdas, Q.generators)) for j in range(d))
    return MembershipCertificate(tuple(lambdas), slack)


def in_newton_polyhedron(Q: NewtonPolyhedron, a, scale: int = 1):
    """Decide a in scale*Q. Returns (True, certificate) or (False, None)."""
    if len(a) != Q.dim:
        raise DimensionMismatch(f"point {tuple(a)} vs polyhedron in {Q.dim} variables")
    if not _contains(Q, a, scale):
        return False, None
    cert = _certificate(Q, a, scale)
    if cert is None or not cert.verify(Q.generators, a, scale):
        raise ArithmeticError(f"membership of {tuple(a)} could not be certified")
    return True, cert


def _require_zero_dim(I: MonomialIdeal):
    if not I.is_zero_dimensional():
        raise NotZeroDimensional(f"{I} is not zero-dimensional; the closure box is unbounded")


def closure_by_box(I: MonomialIdeal, m: int = 1, Q: Optional[NewtonPolyhedron] = None) -> MonomialIdeal:
    """Lattice points of m*Q by exhaustive scan of the box [0, m*max]^d."""
    _require_zero_dim(I)
    Q = Q or newton_polytope(I)
    box = [range(m * c + 1) for c in I.max_exponents()]
    return MonomialIdeal(I.dim, (p for p in itertools.product(*box) if _contains(Q, p, m)))


def power_closure(I: MonomialIdeal, m: int) -> MonomialIdeal:
    """Integral closure of I^m: the ideal of lattice points of m*Q."""
    if m < 1:
        raise ValueError(f"power must be a positive integer, got {m}")
    _require_zero_dim(I)
    Q = newton_polytope(I)
    if Q.chain is None:
        return closure_by_box(I, m, Q)
    chain = Q.chain
    width = m * chain[-1][0]
    points = []
    for c in range(width + 1):
        h = _chain_height(chain, Fraction(c, m)) * m
        points.append((c, -((-h.numerator) // h.denominator)))
    return MonomialIdeal(2, points)


def integral_closure(I: MonomialIdeal) -> MonomialIdeal:
    return power_closure(I, 1)


def is_integrally_closed(I: MonomialIdeal) -> bool:
    return integral_closure(I) == I


def normal_up_to(I: MonomialIdeal, bound: int = 3) -> tuple[bool, Optional[int]]:
    """Check closure(I^m) == I^m for m = 1..bound; returns (ok, first failing m)."""
    for m in range(1, bound + 1):
        if power_closure(I, m) != power(I, m):
            return False, m
    return True, None


# -- Pick's formula -------------------------------------------------------

@dataclass(frozen=True)
class LatticePolytope2:
    """Convex lattice polygon; vertices are extreme points in counter-clockwise order."""

    vertices: tuple[Point2, ...]

    @classmethod
    def hull(cls, points) -> "LatticePolytope2":
        pts = sorted(set(tuple(p) for p in points))
        if len(pts) < 3:
            raise MonomialIdealError("a two-dimensional polygon needs three non-collinear points")
        lower, upper = [], []
        for p in pts:
            while len(lower) >= 2 and _cross(lower[-2], lower[-1], p) <= 0:
                lower.pop()
            lower.append(p)
        for p in reversed(pts):
            while len(upper) >= 2 and _cross(upper[-2], upper[-1], p) <= 0:
                upper.pop()
            upper.append(p)
        verts = tuple(lower[:-1] + upper[:-1])
        if len(verts) < 3:
            raise MonomialIdealError("degenerate polygon: all points are collinear")
        return cls(verts)

    def edges(self):
        v = self.vertices
        return [(v[i], v[(i + 1) % len(v)]) for i in range(len(v))]

    def contains(self, p) -> bool:
        return all(_cross(u, v, p) >= 0 for u, v in self.edges())

    def on_boundary(self, p) -> bool:
        if not self.contains(p):
            return False
        return any(_cross(u, v, p) == 0 for u, v in self.edges())


def pick_area(P: LatticePolytope2) -> Fraction:
    """Shoelace area."""
    twice = sum(u[0] * v[1] - v[0] * u[1] for u, v in P.edges())
    return Fraction(abs(twice), 2)


def boundary_points(P: LatticePolytope2) -> int:
    return sum(gcd(abs(v[0] - u[0]), abs(v[1] - u[1])) for u, v in P.edges())


def lattice_points(P: LatticePolytope2) -> int:
    """|Z^2 cap P| by scanning the bounding box."""
    xs = [v[0] for v in P.vertices]
    ys = [v[1] for v in P.vertices]
    return sum(1 for x in range(min(xs), max(xs) + 1) for y in range(min(ys), max(ys) + 1)
               if P.contains((x, y)))


def pick_check(P: LatticePolytope2) -> bool:
    area = pick_area(P)
    total = lattice_points(P)
    boundary = boundary_points(P)
    interior = total - boundary
    return area == total - Fraction(boundary, 2) - 1 == interior + Fraction(boundary, 2) - 1


# -- integer rounding property --------------------------------------------

DEFAULT_WBOX = 8
MAX_BOX_POINTS = 250_000


@dataclass(frozen=True)
class RoundingVerdict:
    holds: bool
    box: tuple[int, ...]
    checked: int
    witness: Optional[tuple[int, ...]] = None
    integer_optimum: Optional[int] = None
    lp_optimum: Optional[Fraction] = None
    lp_solution: Optional[tuple[Fraction, ...]] = None


def integer_optimum_table(generators: Sequence[Exponent], box: Sequence[int]) -> dict:
    """max{sum(y) : A y <= w, y in N^q} for every integer w in the box.

    Exhaustive dynamic programme over the box: the best packing under w
    either is empty or removes one generator v <= w and packs w - v.
    """
    if any(all(c == 0 for c in g) for g in generators):
        raise MonomialIdealError("a zero generator makes the packing unbounded")
    best = {}
    for w in itertools.product(*(range(c + 1) for c in box)):
        val = 0
        for g in generators:
            if all(gi <= wi for gi, wi in zip(g, w)):
                val = max(val, 1 + best[tuple(wi - gi for wi, gi in zip(w, g))])
        best[w] = val
    return best


def integer_rounding_check(I: MonomialIdeal, wbox=None, max_points: int = MAX_BOX_POINTS) -> RoundingVerdict:
    """Compare the integer optimum with the floor of the LP optimum on a box of w.

    Cost: the box has prod(w_j + 1) points; the integer side costs
    points * q comparisons and the LP side one exact simplex per point.
    """
    d = I.dim
    if wbox is None:
        wbox = (DEFAULT_WBOX,) * d
    elif isinstance(wbox, int):
        wbox = (wbox,) * d
    wbox = tuple(wbox)
    if len(wbox) != d:
        raise DimensionMismatch(f"box {wbox} vs {d} variables")
    if any(all(c == 0 for c in g) for g in I.gens):
        raise MonomialIdealError("the unit ideal has an unbounded LP")
    npoints = prod(c + 1 for c in wbox)
    if npoints > max_points:
        raise ResourceExceeded(f"box of {npoints} points exceeds ceiling {max_points}")
    gens = I.gens
    A = [[g[j] for g in gens] for j in range(d)]
    ip = integer_optimum_table(gens, wbox)
    checked = 0
    for w in itertools.product(*(range(c + 1) for c in wbox)):
        checked += 1
        lp, y = exact_lp.simplex_max(A, w)
        if ip[w] != lp.numerator // lp.denominator:
            return RoundingVerdict(False, wbox, checked, w, ip[w], lp, tuple(y))
    return RoundingVerdict(True, wbox, checked)


def rounding_violation_search(I: MonomialIdeal, max_side: int = 12,
                              max_points: int = MAX_BOX_POINTS) -> RoundingVerdict:
    """Grow the square box k = 1, 2, ... up to ``max_side`` until a violation shows up.

    Returns the first failing verdict, or the passing verdict for the largest box.
    """
    verdict = None
    for k in range(1, max_side + 1):
        verdict = integer_rounding_check(I, k, max_points)
        if not verdict.holds:
            return verdict
    return verdict
