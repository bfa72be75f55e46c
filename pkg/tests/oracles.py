"""Brute-force reference implementations used only by the tests."""

from __future__ import annotations

import itertools
from fractions import Fraction


def minimal(vectors):
    vs = set(map(tuple, vectors))
    return sorted((v for v in vs if not any(u != v and all(a <= b for a, b in zip(u, v)) for u in vs)),
                  reverse=True)


def member(gens, a):
    return any(all(g <= c for g, c in zip(gen, a)) for gen in gens)


def product(gens1, gens2):
    return minimal(tuple(p + q for p, q in zip(u, v)) for u in gens1 for v in gens2)


def _interval(g, h, a):
    """t in [0,1] with t*g + (1-t)*h <= a componentwise, as (lo, hi) or None."""
    lo, hi = Fraction(0), Fraction(1)
    for gi, hi_, ai in zip(g, h, a):
        # h + t (g - h) <= a
        slope, rest = gi - hi_, ai - hi_
        if slope == 0:
            if rest < 0:
                return None
        elif slope > 0:
            hi = min(hi, Fraction(rest, slope))
        else:
            lo = max(lo, Fraction(rest, slope))
    return (lo, hi) if lo <= hi else None


def in_newton_2d(gens, a, m=1):
    """a in m * (conv(gens) + R^2_+), via pairs of generators."""
    gens = [tuple(m * c for c in g) for g in gens]
    return any(_interval(g, h, a) is not None for g in gens for h in gens)


def closure_2d(gens, m=1):
    A = m * max(g[0] for g in gens)
    B = m * max(g[1] for g in gens)
    return minimal((u, v) for u in range(A + 1) for v in range(B + 1) if in_newton_2d(gens, (u, v), m))


def lp_max_2d(gens, w):
    """max sum(y) s.t. sum y_i g_i <= w, y >= 0, by enumerating basic solutions."""
    best = Fraction(0)
    q = len(gens)
    for i in range(q):
        g = gens[i]
        caps = [Fraction(w[k], g[k]) for k in range(2) if g[k] > 0]
        if caps:
            best = max(best, min(caps))
    for i, j in itertools.combinations(range(q), 2):
        g, h = gens[i], gens[j]
        det = g[0] * h[1] - g[1] * h[0]
        if det == 0:
            continue
        yi = Fraction(w[0] * h[1] - w[1] * h[0], det)
        yj = Fraction(g[0] * w[1] - g[1] * w[0], det)
        if yi >= 0 and yj >= 0:
            best = max(best, yi + yj)
    return best


def ip_max(gens, w):
    """max number of generators (with repetition) whose sum is <= w."""
    def rec(w, start):
        best = 0
        for i in range(start, len(gens)):
            g = gens[i]
            if all(gi <= wi for gi, wi in zip(g, w)):
                best = max(best, 1 + rec(tuple(wi - gi for wi, gi in zip(w, g)), i))
        return best
    return rec(tuple(w), 0)


def monomial_dim(lms, nvars):
    """Largest set of variables containing no support of a leading monomial."""
    supports = [frozenset(i for i, c in enumerate(m) if c) for m in lms]
    for size in range(nvars, -1, -1):
        for S in itertools.combinations(range(nvars), size):
            S = set(S)
            if not any(s <= S for s in supports):
                return size
    return -1


def pick_lattice_points(vertices):
    """Count lattice points of a convex polygon (CCW vertices) cell by cell."""
    xs = [v[0] for v in vertices]
    ys = [v[1] for v in vertices]
    n = len(vertices)
    inside = boundary = 0
    for x in range(min(xs), max(xs) + 1):
        for y in range(min(ys), max(ys) + 1):
            crosses = [(vertices[(i + 1) % n][0] - vertices[i][0]) * (y - vertices[i][1])
                       - (vertices[(i + 1) % n][1] - vertices[i][1]) * (x - vertices[i][0]) for i in range(n)]
            if all(c >= 0 for c in crosses):
                if any(c == 0 for c in crosses):
                    boundary += 1
                else:
                    inside += 1
    return inside, boundary
