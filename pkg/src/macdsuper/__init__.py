"""Exact nonsymmetric and (anti)symmetric Macdonald superpolynomials.

Polynomials in N commuting variables x_1..x_N and N anti-commuting
variables theta_1..theta_N over the field Q(q,t), together with the type-A
Hecke algebra action, Cherednik and Dunkl operators, closed-form squared
norms, Hecke-(anti)symmetrization, and exact verification of the special
value and singular parameter factorizations.
"""

from .qtfield import (
    LaurentMono,
    QTPoly,
    QTRat,
    normalize,
    pochhammer,
    specialize,
    t_bracket,
    t_factorial,
    u_eval,
)

__all__ = [
    "LaurentMono",
    "QTPoly",
    "QTRat",
    "normalize",
    "pochhammer",
    "specialize",
    "t_bracket",
    "t_factorial",
    "u_eval",
]

__version__ = "0.1.0"
