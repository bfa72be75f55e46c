"""Monomial ideals as antichains of exponent vectors, and the two-variable
staircase normal form.

An exponent vector is a plain tuple of non-negative ints. Generator sets are
always minimalized on construction and stored in descending lexicographic
order, so that two ideals are equal exactly when their ``gens`` are equal.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import DimensionMismatch, MonomialIdealError, NotZeroDimensional

Exponent = tuple[int, ...]


def _check_vector(v, dim: int) -> Exponent:
    v = tuple(v)
    if len(v) != dim:
        raise DimensionMismatch(f"expected {dim} coordinates, got {len(v)}: {v}")
    for c in v:
        if isinstance(c, bool) or not isinstance(c, int):
            raise MonomialIdealError(f"exponents must be integers, got {c!r}")
        if c < 0:
            raise MonomialIdealError(f"negative exponent in {v}")
    return v


def divides(u: Sequence[int], v: Sequence[int]) -> bool:
    """True when x^u divides x^v, i.e. u <= v componentwise."""
    return all(a <= b for a, b in zip(u, v))


def _antichain(vectors: Iterable[Exponent]) -> tuple[Exponent, ...]:
    # sorting by total degree first means no later vector can divide an earlier one
    kept: list[Exponent] = []
    for v in sorted(set(vectors), key=lambda v: (sum(v), v)):
        if not any(divides(g, v) for g in kept):
            kept.append(v)
    return tuple(sorted(kept, reverse=True))


@dataclass(frozen=True)
class MonomialIdeal:
    """Ideal of k[x_1..x_d] generated by monomials.

    ``gens`` holds the minimal generators, sorted lexicographically with
    x_1 > x_2 > ... (so x^3 comes before x^2*y^8).
    """

    dim: int
    gens: tuple[Exponent, ...]

    def __init__(self, dim: int, gens: Iterable[Sequence[int]]):
        if isinstance(dim, bool) or not isinstance(dim, int) or dim < 1:
            raise MonomialIdealError(f"dimension must be a positive integer, got {dim!r}")
        vecs = [_check_vector(g, dim) for g in gens]
        if not vecs:
            raise MonomialIdealError("a monomial ideal needs at least one generator")
        object.__setattr__(self, "dim", dim)
        object.__setattr__(self, "gens", _antichain(vecs))

    @classmethod
    def unit(cls, dim: int = 2) -> "MonomialIdeal":
        return cls(dim, [(0,) * dim])

    @classmethod
    def maximal(cls, dim: int = 2) -> "MonomialIdeal":
        return cls(dim, [tuple(int(i == j) for j in range(dim)) for i in range(dim)])

    def __len__(self) -> int:
        return len(self.gens)

    def __iter__(self):
        return iter(self.gens)

    def __contains__(self, a) -> bool:
        return contains(self, a)

    def is_unit(self) -> bool:
        return self.gens == ((0,) * self.dim,)

    def is_zero_dimensional(self) -> bool:
        """True when every variable has a pure power among the generators."""
        pure = set()
        for g in self.gens:
            support = [i for i, c in enumerate(g) if c]
            if len(support) <= 1:
                pure.update(support if support else range(self.dim))
        return len(pure) == self.dim

    def pure_power(self, i: int) -> int:
        """Exponent of the pure power of the i-th variable among the generators."""
        for g in self.gens:
            if all(c == 0 for j, c in enumerate(g) if j != i):
                return g[i]
        raise NotZeroDimensional(f"no pure power of variable {i} in {self}")

    def max_exponents(self) -> Exponent:
        return tuple(max(g[i] for g in self.gens) for i in range(self.dim))

    def issubset(self, other: "MonomialIdeal") -> bool:
        return all(contains(other, g) for g in self.gens)

    def __str__(self) -> str:
        names = variable_names(self.dim)
        return "(" + ", ".join(monomial_str(g, names) for g in self.gens) + ")"


def variable_names(dim: int) -> tuple[str, ...]:
    if dim == 1:
        return ("x",)
    if dim == 2:
        return ("x", "y")
    return tuple(f"x{i}" for i in range(1, dim + 1))


def monomial_str(v: Sequence[int], names: Sequence[str]) -> str:
    parts = []
    for name, e in zip(names, v):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts) if parts else "1"


def minimalize(dim: int, raw: Iterable[Sequence[int]]) -> MonomialIdeal:
    """Keep the componentwise-minimal vectors of ``raw``."""
    return MonomialIdeal(dim, raw)


def contains(I: MonomialIdeal, a: Sequence[int]) -> bool:
    a = tuple(a)
    if len(a) != I.dim:
        raise DimensionMismatch(f"point {a} does not live in {I.dim} variables")
    return any(divides(g, a) for g in I.gens)


def _same_dim(I: MonomialIdeal, J: MonomialIdeal) -> None:
    if I.dim != J.dim:
        raise DimensionMismatch(f"ideals in {I.dim} and {J.dim} variables")


def multiply(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    _same_dim(I, J)
    return MonomialIdeal(I.dim, (tuple(p + q for p, q in zip(g, h)) for g in I.gens for h in J.gens))


def add(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    _same_dim(I, J)
    return MonomialIdeal(I.dim, I.gens + J.gens)


def power(I: MonomialIdeal, m: int) -> MonomialIdeal:
    if m < 1:
        raise ValueError(f"power must be a positive integer, got {m}")
    # square-and-multiply keeps intermediate generator sets small
    result = None
    base = I
    while m:
        if m & 1:
            result = base if result is None else multiply(result, base)
        m >>= 1
        if m:
            base = multiply(base, base)
    return result


def colon_monomial(I: MonomialIdeal, m: Sequence[int]) -> MonomialIdeal:
    """The ideal quotient (I : x^m)."""
    m = _check_vector(m, I.dim)
    return MonomialIdeal(I.dim, (tuple(max(g - c, 0) for g, c in zip(gen, m)) for gen in I.gens))


def order(I: MonomialIdeal) -> int:
    """Least total degree of a generator."""
    return min(sum(g) for g in I.gens)


@dataclass(frozen=True)
class Staircase:
    """Zero-dimensional monomial ideal of k[x,y] in staircase form.

    ``a = (a_1, ..., a_n)`` and ``b = (b_1, ..., b_n)`` are strictly
    decreasing with ``a_n = b_n = 0``. Generator i (1-based) is
    ``x^{a_i} y^{b_{n-i+1}}``, so generator 1 is ``x^{a_1}`` and generator
    n is ``y^{b_1}``. Use :meth:`ai` and :meth:`bj` for 1-based access; all
    index arithmetic in the inequality suites goes through them.
    """

    a: tuple[int, ...]
    b: tuple[int, ...]

    def __post_init__(self):
        a, b = tuple(self.a), tuple(self.b)
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        if len(a) != len(b) or len(a) < 2:
            raise MonomialIdealError("staircase sequences need equal length n >= 2")
        for seq, name in ((a, "a"), (b, "b")):
            if any(isinstance(c, bool) or not isinstance(c, int) for c in seq):
                raise MonomialIdealError(f"{name} must contain integers")
            if seq[-1] != 0:
                raise MonomialIdealError(f"{name} must end with 0")
            if any(seq[i] <= seq[i + 1] for i in range(len(seq) - 1)):
                raise MonomialIdealError(f"{name} must be strictly decreasing: {seq}")

    @property
    def n(self) -> int:
        return len(self.a)

    def ai(self, i: int) -> int:
        """a_i, 1-based."""
        return self.a[i - 1]

    def bj(self, j: int) -> int:
        """b_j, 1-based."""
        return self.b[j - 1]

    def point(self, i: int) -> tuple[int, int]:
        """P_i = (a_i, b_{n-i+1})."""
        return (self.ai(i), self.bj(self.n - i + 1))

    @property
    def gens(self) -> tuple[tuple[int, int], ...]:
        return tuple(self.point(i) for i in range(1, self.n + 1))

    @property
    def ideal(self) -> MonomialIdeal:
        return MonomialIdeal(2, self.gens)

    @classmethod
    def from_gens(cls, gens: Iterable[Sequence[int]]) -> "Staircase":
        return to_staircase(MonomialIdeal(2, gens))

    def __str__(self) -> str:
        return str(self.ideal)


def to_staircase(I: MonomialIdeal) -> Staircase:
    if I.dim != 2:
        raise DimensionMismatch(f"staircase form needs 2 variables, got {I.dim}")
    if not I.is_zero_dimensional() or I.is_unit():
        raise NotZeroDimensional(f"{I} is not (x,y)-primary")
    gens = I.gens  # descending in x, hence ascending in y
    return Staircase(tuple(g[0] for g in gens), tuple(g[1] for g in reversed(gens)))


def as_ideal(obj) -> MonomialIdeal:
    return obj.ideal if isinstance(obj, Staircase) else obj


def as_staircase(obj) -> Staircase:
    return obj if isinstance(obj, Staircase) else to_staircase(obj)
