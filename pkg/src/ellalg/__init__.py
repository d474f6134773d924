"""Exact and numerical tools for elliptic quadratic algebras.

The package is organized around the rational slope n/k (coprime, n > k >= 1)
and its negative continued fraction [n_1, ..., n_g]:

- ``contfrac``: exact arithmetic of negative continued fractions and the
  integer sequences k_i, l_i, k' attached to a slope.
- ``zlinalg``: exact integer linear algebra (tridiagonal matrices, Smith
  normal form, intersection numbers, weighted-graph divisor invariants).
- ``theta1``: numerical one-variable theta functions and the order-n^3
  Heisenberg action on them.
- ``thetag``: the n-dimensional space of g-variable theta functions, the
  operators S, T, S', T', the distinguished w-basis, and the projective
  morphism built from it.
- ``algebra``: the n^2 quadratic relations, identity verification, and
  point modules.
- ``charvar``: structural classification of the quotient variety attached
  to a slope.
- ``cli``: command-line front end emitting JSON/CSV reports.
"""

from .contfrac import NCF, Slope, SlopeSequences, d, expand, evaluate, sequences

__all__ = [
    "NCF",
    "Slope",
    "SlopeSequences",
    "d",
    "expand",
    "evaluate",
    "sequences",
]
