"""A small exact Groebner basis engine over the rationals.

Polynomials are sparse dicts from exponent tuples to Fractions, attached to
a :class:`Ring` (an ordered tuple of variable names). Buchberger's algorithm
uses the normal selection strategy and the Gebauer-Moeller pair criteria;
ideal colon, intersection and elimination are built on top of it.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .core import divides, monomial_str
from .errors import ResourceExceeded


class Ring:
    """Q[names]. Two rings are equal when their variable names agree."""

    __slots__ = ("names",)

    def __init__(self, names: Iterable[str]):
        self.names = tuple(names)
        if len(set(self.names)) != len(self.names):
            raise ValueError(f"duplicate variable names in {self.names}")

    @property
    def nvars(self) -> int:
        return len(self.names)

    def __eq__(self, other):
        return isinstance(other, Ring) and self.names == other.names

    def __hash__(self):
        return hash(self.names)

    def __repr__(self):
        return f"Ring({', '.join(self.names)})"

    def gens(self) -> list["Polynomial"]:
        return [self.var(name) for name in self.names]

    def var(self, name: str) -> "Polynomial":
        i = self.names.index(name)
        return Polynomial(self, {tuple(int(j == i) for j in range(self.nvars)): 1})

    def monomial(self, exp: Sequence[int], coeff=1) -> "Polynomial":
        return Polynomial(self, {tuple(exp): coeff})

    def const(self, c) -> "Polynomial":
        return Polynomial(self, {(0,) * self.nvars: c})

    def zero(self) -> "Polynomial":
        return Polynomial(self, {})


class Polynomial:
    __slots__ = ("ring", "terms")

    def __init__(self, ring: Ring, terms: dict):
        self.ring = ring
        clean = {}
        for e, c in terms.items():
            c = Fraction(c)
            if c:
                if len(e) != ring.nvars:
                    raise ValueError(f"exponent {e} does not fit {ring}")
                clean[tuple(e)] = c
        self.terms = clean

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            if other.ring != self.ring:
                raise ValueError(f"ring mismatch: {self.ring} vs {other.ring}")
            return other
        return self.ring.const(other)

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return Polynomial(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.ring, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            return Polynomial(self.ring, {e: c * other for e, c in self.terms.items()})
        other = self._coerce(other)
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return Polynomial(self.ring, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        result = self.ring.const(1)
        for _ in range(k):
            result = result * self
        return result

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.ring == other.ring and self.terms == other.terms
        return self == self.ring.const(other)

    def __hash__(self):
        return hash((self.ring, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def degree_in(self, indices: Sequence[int]) -> int:
        return max((sum(e[i] for i in indices) for e in self.terms), default=-1)

    def leading_term(self, order: "TermOrder") -> tuple[tuple[int, ...], Fraction]:
        e = max(self.terms, key=order.key)
        return e, self.terms[e]

    def monic(self, order: "TermOrder") -> "Polynomial":
        _, c = self.leading_term(order)
        return self * (1 / c)

    def primitive(self, order: "TermOrder") -> "Polynomial":
        """Scale to coprime integer coefficients with a positive leading coefficient."""
        from math import gcd, lcm
        den = 1
        for c in self.terms.values():
            den = lcm(den, c.denominator)
        ints = [int(c * den) for c in self.terms.values()]
        g = 0
        for v in ints:
            g = gcd(g, v)
        scaled = self * Fraction(den, g)
        if scaled.leading_term(order)[1] < 0:
            scaled = -scaled
        return scaled

    def to_str(self, order: Optional["TermOrder"] = None) -> str:
        if not self.terms:
            return "0"
        order = order or DEGREVLEX
        parts = []
        for e in sorted(self.terms, key=order.key, reverse=True):
            c = self.terms[e]
            mono = monomial_str(e, self.ring.names)
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if mono == "1":
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            parts.append((sign, body))
        head = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        return " ".join([head] + [f"{s} {b}" for s, b in parts[1:]])

    def __str__(self):
        return self.to_str()

    def __repr__(self):
        return f"Polynomial({self.to_str()})"


def _drl(e):
    return (sum(e), tuple(-c for c in reversed(e)))


@dataclass(frozen=True)
class TermOrder:
    """``lex``, ``degrevlex``, or ``block`` (degrevlex on the first ``nelim``
    variables, then degrevlex on the rest) for elimination."""

    kind: str = "degrevlex"
    nelim: int = 0

    def __post_init__(self):
        if self.kind not in ("lex", "degrevlex", "block"):
            raise ValueError(f"unknown term order {self.kind!r}")
        if self.kind == "lex":
            fn = tuple
        elif self.kind == "degrevlex":
            fn = _drl
        else:
            k = self.nelim
            fn = lambda e: (_drl(e[:k]), _drl(e[k:]))  # noqa: E731
        object.__setattr__(self, "_key", functools.lru_cache(maxsize=1 << 16)(fn))

    def key(self, e):
        return self._key(e)


LEX = TermOrder("lex")
DEGREVLEX = TermOrder("degrevlex")


def block_order(nelim: int) -> TermOrder:
    return TermOrder("block", nelim)


@dataclass(frozen=True)
class Limits:
    """Cost ceilings for Buchberger; exceeding one raises ResourceExceeded."""

    max_basis: int = 5000
    max_degree: int = 400
    max_coeff_bits: int = 20000


DEFAULT_LIMITS = Limits()


# -- internal dict-level routines (ring checks done by callers) -----------

def _shift(terms: dict, m) -> dict:
    return {tuple(a + b for a, b in zip(e, m)): c for e, c in terms.items()}


def _quot(m, lm):
    return tuple(a - b for a, b in zip(m, lm))


def _lcm(u, v):
    return tuple(max(a, b) for a, b in zip(u, v))


def _normal_form(p: dict, basis: list, key) -> dict:
    """Full reduction of p by monic basis entries (lm, terms)."""
    p = dict(p)
    rem = {}
    while p:
        m = max(p, key=key)
        c = p[m]
        for lm, g in basis:
            if divides(lm, m):
                q = _quot(m, lm)
                for e, gc in g.items():
                    e2 = tuple(a + b for a, b in zip(e, q))
                    v = p.get(e2, 0) - c * gc
                    if v:
                        p[e2] = v
                    else:
                        p.pop(e2, None)
                break
        else:
            rem[m] = c
            del p[m]
    return rem


def _make_monic(p: dict, key):
    lm = max(p, key=key)
    c = p[lm]
    return lm, {e: v / c for e, v in p.items()}


def _spoly(f, g):
    (lf, tf), (lg, tg) = f, g
    L = _lcm(lf, lg)
    out = dict(_shift(tf, _quot(L, lf)))
    for e, c in _shift(tg, _quot(L, lg)).items():
        v = out.get(e, 0) - c
        if v:
            out[e] = v
        else:
            out.pop(e, None)
    return out


def _gm_update(G, P, h_index, key):
    """Gebauer-Moeller update of the pair set for the new element G[h_index]."""
    lh = G[h_index][0]
    # drop old pairs whose lcm is strictly divisible by lm(h)
    kept = set()
    for i, j in P:
        L = _lcm(G[i][0], G[j][0])
        if not divides(lh, L) or L == _lcm(G[i][0], lh) or L == _lcm(G[j][0], lh):
            kept.add((i, j))
    by_lcm: dict = {}
    for i in range(h_index):
        by_lcm.setdefault(_lcm(G[i][0], lh), []).append(i)
    chosen = []
    for L in sorted(by_lcm, key=lambda L: (sum(L), key(L))):
        if any(divides(L2, L) for L2 in chosen):
            continue
        chosen.append(L)
    for L in chosen:
        idx = by_lcm[L]
        # product criterion: coprime leading monomials give a pair reducing to zero
        if any(L == tuple(a + b for a, b in zip(G[i][0], lh)) for i in idx):
            continue
        kept.add((min(idx), h_index))
    return kept


def _check_limits(G: list, h, limits: Limits):
    if len(G) >= limits.max_basis:
        raise ResourceExceeded(f"Groebner basis grew past {limits.max_basis} elements")
    if max(sum(e) for e in h[1]) > limits.max_degree:
        raise ResourceExceeded(f"Groebner basis degree exceeded {limits.max_degree}")
    bits = max(max(c.numerator.bit_length(), c.denominator.bit_length()) for c in h[1].values())
    if bits > limits.max_coeff_bits:
        raise ResourceExceeded(f"coefficient size exceeded {limits.max_coeff_bits} bits")


def _groebner(polys: list[dict], order: TermOrder, limits: Limits) -> list:
    key = order.key
    G: list = []
    P: set = set()
    for p in polys:
        if not p:
            continue
        r = _normal_form(p, G, key)
        if not r:
            continue
        h = _make_monic(r, key)
        _check_limits(G, h, limits)
        G.append(h)
        P = _gm_update(G, P, len(G) - 1, key)
    while P:
        i, j = min(P, key=lambda pr: (sum(_lcm(G[pr[0]][0], G[pr[1]][0])),
                                      key(_lcm(G[pr[0]][0], G[pr[1]][0])), pr))
        P.discard((i, j))
        r = _normal_form(_spoly(G[i], G[j]), G, key)
        if not r:
            continue
        h = _make_monic(r, key)
        _check_limits(G, h, limits)
        G.append(h)
        P = _gm_update(G, P, len(G) - 1, key)
    return _reduced(G, key)


def _reduced(G: list, key) -> list:
    # minimal basis: drop elements whose leading monomial is divisible by another's
    G = sorted(G, key=lambda g: key(g[0]))
    minimal = []
    for lm, g in G:
        if not any(divides(l2, lm) for l2, _ in minimal):
            minimal.append((lm, g))
    out = []
    for k, (lm, g) in enumerate(minimal):
        others = minimal[:k] + minimal[k + 1:]
        tail = {e: c for e, c in g.items() if e != lm}
        red = _normal_form(tail, others, key)
        red[lm] = Fraction(1)
        out.append((lm, red))
    out.sort(key=lambda g: key(g[0]), reverse=True)
    return out


# -- public API ------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class GroebnerBasis:
    """Reduced Groebner basis: monic, inter-reduced, sorted by leading term (descending)."""

    ring: Ring
    order: TermOrder
    basis: tuple[Polynomial, ...]

    def __eq__(self, other):
        return (isinstance(other, GroebnerBasis) and self.ring == other.ring
                and self.order == other.order and self.basis == other.basis)

    def __hash__(self):
        return hash((self.ring, self.order, self.basis))

    def __iter__(self):
        return iter(self.basis)

    def __len__(self):
        return len(self.basis)

    def _pairs(self):
        return [(p.leading_term(self.order)[0], p.terms) for p in self.basis]

    def reduce(self, p: Polynomial) -> Polynomial:
        if p.ring != self.ring:
            raise ValueError(f"ring mismatch: {p.ring} vs {self.ring}")
        return Polynomial(self.ring, _normal_form(p.terms, self._pairs(), self.order.key))

    def contains(self, p: Polynomial) -> bool:
        return not self.reduce(p)

    def contains_ideal(self, polys: Iterable[Polynomial]) -> bool:
        return all(self.contains(p) for p in polys)

    def leading_monomials(self) -> list[tuple[int, ...]]:
        return [p.leading_term(self.order)[0] for p in self.basis]

    def is_unit(self) -> bool:
        return any(p.degree() == 0 for p in self.basis)


def _check_ring(polys: Sequence[Polynomial], ring: Optional[Ring] = None) -> Ring:
    if not polys and ring is None:
        raise ValueError("need at least one polynomial or an explicit ring")
    ring = ring or polys[0].ring
    for p in polys:
        if p.ring != ring:
            raise ValueError(f"ring mismatch: {p.ring} vs {ring}")
    return ring


def reduce(p: Polynomial, G: Sequence[Polynomial], order: TermOrder = DEGREVLEX) -> Polynomial:
    """Normal form of p modulo the list G (not necessarily a Groebner basis)."""
    _check_ring([p, *G])
    pairs = [(_make_monic(g.terms, order.key)) for g in G if g]
    return Polynomial(p.ring, _normal_form(p.terms, pairs, order.key))


def buchberger(gens: Sequence[Polynomial], order: TermOrder = DEGREVLEX,
               limits: Limits = DEFAULT_LIMITS, ring: Optional[Ring] = None) -> GroebnerBasis:
    ring = _check_ring(list(gens), ring)
    G = _groebner([g.terms for g in gens], order, limits)
    return GroebnerBasis(ring, order, tuple(Polynomial(ring, t) for _, t in G))


def ideal_member(p: Polynomial, G: GroebnerBasis) -> bool:
    return G.contains(p)


def _embed(p: Polynomial, ring: Ring, positions: Sequence[int]) -> Polynomial:
    """Map p into ``ring`` placing its i-th variable at ``positions[i]``."""
    out = {}
    for e, c in p.terms.items():
        new = [0] * ring.nvars
        for i, v in enumerate(e):
            new[positions[i]] += v
        out[tuple(new)] = c
    return Polynomial(ring, out)


def eliminate(gens: Sequence[Polynomial], eliminated: Sequence[str],
              limits: Limits = DEFAULT_LIMITS, ring: Optional[Ring] = None) -> GroebnerBasis:
    """Groebner basis of (gens) intersected with the subring of the other variables.

    The result uses degrevlex on the remaining variables (in their original
    order); it is the reduced basis of the elimination ideal.
    """
    ring = _check_ring(list(gens), ring)
    elim = [n for n in ring.names if n in set(eliminated)]
    missing = set(eliminated) - set(elim)
    if missing:
        raise ValueError(f"unknown variables {sorted(missing)}")
    rest = [n for n in ring.names if n not in set(elim)]
    big = Ring(elim + rest)
    positions = [big.names.index(n) for n in ring.names]
    G = _groebner([_embed(g, big, positions).terms for g in gens], block_order(len(elim)), limits)
    k = len(elim)
    sub = Ring(rest)
    basis = tuple(Polynomial(sub, {e[k:]: c for e, c in t.items()})
                  for lm, t in G if all(v == 0 for v in lm[:k]))
    return GroebnerBasis(sub, DEGREVLEX, basis)


def _fresh(ring: Ring, stem: str = "u") -> str:
    name = stem
    while name in ring.names:
        name += "_"
    return name


def intersect(I: Sequence[Polynomial], J: Sequence[Polynomial],
              limits: Limits = DEFAULT_LIMITS, ring: Optional[Ring] = None) -> GroebnerBasis:
    """I cap J via u*I + (1-u)*J with u eliminated."""
    ring = _check_ring(list(I) + list(J), ring)
    u = _fresh(ring)
    big = Ring((u,) + ring.names)
    positions = list(range(1, big.nvars))
    uu = big.var(u)
    gens = [uu * _embed(f, big, positions) for f in I]
    gens += [(1 - uu) * _embed(g, big, positions) for g in J]
    return eliminate(gens, [u], limits, big)


def divide_exact(h: Polynomial, f: Polynomial) -> Polynomial:
    """h / f, raising ArithmeticError when f does not divide h."""
    order = DEGREVLEX
    lf, cf = f.leading_term(order)
    rem = dict(h.terms)
    quot = {}
    while rem:
        m = max(rem, key=order.key)
        if not divides(lf, m):
            raise ArithmeticError(f"{f} does not divide {h}")
        q = _quot(m, lf)
        c = rem[m] / cf
        quot[q] = c
        for e, v in f.terms.items():
            e2 = tuple(a + b for a, b in zip(e, q))
            nv = rem.get(e2, 0) - c * v
            if nv:
                rem[e2] = nv
            else:
                rem.pop(e2, None)
    return Polynomial(h.ring, quot)


def ideal_colon(J: Sequence[Polynomial], f: Polynomial,
                limits: Limits = DEFAULT_LIMITS) -> GroebnerBasis:
    """(J : f), from J cap (f) divided by f."""
    if not f:
        raise ValueError("colon by the zero polynomial")
    ring = _check_ring([f, *J])
    inter = intersect(J, [f], limits, ring)
    return buchberger([divide_exact(h, f) for h in inter.basis], DEGREVLEX, limits, ring)


def ideal_colon_ideal(J: Sequence[Polynomial], I: Sequence[Polynomial],
                      limits: Limits = DEFAULT_LIMITS) -> GroebnerBasis:
    """(J : I) as the intersection of (J : f) over the generators f of I."""
    result = None
    for f in I:
        col = ideal_colon(J, f, limits)
        result = col if result is None else intersect(result.basis, col.basis, limits, col.ring)
    if result is None:
        raise ValueError("colon by the empty ideal")
    return result


def _min_hitting_set(supports: list[frozenset]) -> int:
    if not supports:
        return 0
    smallest = min(supports, key=len)
    best = None
    for v in smallest:
        left = [s for s in supports if v not in s]
        size = 1 + _min_hitting_set(left)
        if best is None or size < best:
            best = size
    return best


def monomial_dimension(lms: Iterable[Sequence[int]], nvars: int) -> int:
    """Krull dimension of k[x]/(lms): largest variable set containing no generator's support."""
    supports = {frozenset(i for i, c in enumerate(m) if c) for m in lms}
    if frozenset() in supports:
        return -1
    minimal = [s for s in supports if not any(t < s for t in supports)]
    return nvars - _min_hitting_set(minimal)


def dim_quotient(gens: Sequence[Polynomial], ring: Optional[Ring] = None,
                 limits: Limits = DEFAULT_LIMITS) -> int:
    """Krull dimension of ring/(gens), read off the degrevlex initial ideal (-1 for the unit ideal)."""
    ring = _check_ring(list(gens), ring)
    G = buchberger(gens, DEGREVLEX, limits, ring)
    return monomial_dimension(G.leading_monomials(), ring.nvars)


def height(gens: Sequence[Polynomial], ring: Optional[Ring] = None,
           limits: Limits = DEFAULT_LIMITS) -> int:
    ring = _check_ring(list(gens), ring)
    return ring.nvars - dim_quotient(gens, ring, limits)


def monomial_content(polys: Iterable[Polynomial]) -> set[tuple[int, ...]]:
    """All exponents occurring in the given polynomials."""
    out = set()
    for p in polys:
        out.update(p.terms)
    return out
