"""Exact computations with monomial ideals in k[x, y] (and a little in k[x_1..x_d]).

Closures, m-fullness, normality tests, the integer rounding property, a
Groebner engine over the rationals and Rees algebra equations.
"""

from .core import MonomialIdeal, Staircase, to_staircase
from .fullness import is_m_full, m_full_closure, tight_factorization
from .normality import classify, is_normal, necessary_conditions, sufficient_conditions
from .polyhedra import integer_rounding_check, integral_closure, newton_polytope

__all__ = [
    "MonomialIdeal", "Staircase", "to_staircase",
    "is_m_full", "m_full_closure", "tight_factorization",
    "classify", "is_normal", "necessary_conditions", "sufficient_conditions",
    "integer_rounding_check", "integral_closure", "newton_polytope",
]
