"""symprod: exact generating-function engine for symmetric-product invariants.

Computes graded dimensions, Poincare/Hodge polynomials and classical genera
of symmetric products Sym^n(X) and of their sector-decomposed refinements
(X^n, S_n), both by brute-force partition sums over super symmetric powers
and by the closed product/exponential formulas, all in exact rational
arithmetic so the identities can be checked coefficient by coefficient.
Also realizes the Heisenberg-superalgebra action on the associated Fock
space with machine-checked commutation relations.
"""

from .graded import BigradedDims, GradedDims
from .orbifold import ManifoldData, SERIES_KINDS, brute_series, closed_series
from .series import Series

__all__ = [
    "BigradedDims",
    "GradedDims",
    "ManifoldData",
    "SERIES_KINDS",
    "Series",
    "brute_series",
    "closed_series",
]

__version__ = "0.1.0"
