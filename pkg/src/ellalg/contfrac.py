"""Negative continued fractions and the integer sequences attached to n/k.

A slope is a coprime pair n > k >= 1.  Its negative continued fraction
[n_1, ..., n_g] is the unique expansion

    n/k = n_1 - 1/(n_2 - 1/(... - 1/n_g))

with every entry >= 2.  The basic scalar is ``d``, the determinant of the
tridiagonal integer matrix with the given diagonal and -1 off-diagonals;
all derived sequences (k_i, l_i, k') are values of ``d`` on tails and
reversed heads of the expansion.

Everything here is exact integer arithmetic (Python ints, so no overflow).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence


@dataclass(frozen=True)
class Slope:
    """A reduced fraction n/k with n > k >= 1 and gcd(n, k) = 1."""

    n: int
    k: int

    def __post_init__(self):
        if not (isinstance(self.n, int) and isinstance(self.k, int)):
            raise TypeError("slope entries must be integers")
        if not self.n > self.k >= 1:
            raise ValueError(f"need n > k >= 1, got n={self.n}, k={self.k}")
        if math.gcd(self.n, self.k) != 1:
            raise ValueError(f"n={self.n} and k={self.k} are not coprime")


@dataclass(frozen=True)
class NCF:
    """A negative continued fraction [n_1, ..., n_g], all entries >= 2."""

    entries: tuple[int, ...]

    def __post_init__(self):
        entries = tuple(int(e) for e in self.entries)
        object.__setattr__(self, "entries", entries)
        if len(entries) < 1:
            raise ValueError("continued fraction must have length >= 1")
        if any(e < 2 for e in entries):
            raise ValueError(f"all entries must be >= 2, got {entries}")

    @property
    def g(self) -> int:
        return len(self.entries)

    def reversed(self) -> "NCF":
        return NCF(self.entries[::-1])


@dataclass(frozen=True)
class SlopeSequences:
    """The sequences k_0..k_{g+1}, l_0..l_{g+1} and the inverse k' of k mod n."""

    k_seq: tuple[int, ...]
    l_seq: tuple[int, ...]
    k_prime: int


def d(entries: Sequence[int] | Iterable[int]) -> int:
    """Determinant of the tridiagonal matrix with diagonal ``entries`` and
    -1 on both off-diagonals.

    Conventions: the empty sequence gives 1 (and internally a sequence of
    length -1 gives 0, which makes the three-term recursion uniform).
    Arbitrary integers are allowed; only NCF constructors enforce >= 2.
    """
    prev2, prev = 0, 1  # d of lengths -1 and 0
    for e in entries:
        prev2, prev = prev, e * prev - prev2
    return prev


def expand(s: Slope) -> NCF:
    """The unique all->=2 negative continued fraction of n/k.

    Greedy ceiling recursion: n_1 = ceil(n/k), next pair (k, n_1*k - n).
    Remainders strictly decrease, so this terminates.
    """
    n, k = s.n, s.k
    entries = []
    while True:
        q = -(-n // k)  # ceil(n/k)
        entries.append(q)
        n, k = k, q * k - n
        if k == 0:
            return NCF(tuple(entries))


def evaluate(f: NCF) -> Slope:
    """Inverse of ``expand``: [n_1,...,n_g] -> (d(n_1..n_g), d(n_2..n_g))."""
    return Slope(d(f.entries), d(f.entries[1:]))


def sequences(f: NCF) -> SlopeSequences:
    """The tail/head determinant sequences of ``f``.

    k_i = d(n_{i+1}, ..., n_g) and l_i = d(n_{i-1}, ..., n_1) for
    0 <= i <= g+1, so k_0 = n, k_1 = k, k_g = 1, k_{g+1} = 0 and
    l_0 = 0, l_1 = 1, l_g = k', l_{g+1} = n.
    """
    e = f.entries
    g = f.g
    k_seq = tuple(d(e[i:]) for i in range(g + 1)) + (0,)
    l_seq = (0,) + tuple(d(e[i - 2 :: -1] if i >= 2 else ()) for i in range(1, g + 2))
    return SlopeSequences(k_seq=k_seq, l_seq=l_seq, k_prime=l_seq[g])


def combinatorial_n(f: NCF) -> int:
    """Recover n as the signed sum of products n_{i_1}...n_{i_j} over
    subsequences i_1 < ... < i_j of 1..g that alternate in parity, start
    odd, and end with the parity of g; the sign is (-1)^((g-j)/2).

    An increasing subsequence alternates in parity starting odd exactly
    when i_m = m (mod 2) for every m, so a rolling knapsack over positions
    with the length as state enumerates all qualifying subsequences in
    O(g^2) integer operations.  The test suite cross-checks this against
    literal enumeration for small g.
    """
    e = f.entries
    g = f.g
    # sums[m] = sum of products over qualifying subsequences of length m
    # drawn from the positions processed so far.
    sums = [0] * (g + 1)
    sums[0] = 1
    for i in range(1, g + 1):
        for m in range(i, 0, -1):  # descending: sums[m-1] still excludes i
            if i % 2 == m % 2:
                sums[m] += e[i - 1] * sums[m - 1]
    return sum((-1) ** ((g - j) // 2) * sums[j] for j in range(g % 2, g + 1, 2))


_T = ((1, 1), (0, 1))
_S = ((0, -1), (1, 0))


def _matmul(a, b):
    return (
        (a[0][0] * b[0][0] + a[0][1] * b[1][0], a[0][0] * b[0][1] + a[0][1] * b[1][1]),
        (a[1][0] * b[0][0] + a[1][1] * b[1][0], a[1][0] * b[0][1] + a[1][1] * b[1][1]),
    )


def _matpow(m, p):
    out = ((1, 0), (0, 1))
    for _ in range(p):
        out = _matmul(out, m)
    return out


def slope_via_sl2(f: NCF) -> tuple[Slope, tuple[int, int]]:
    """Recover the slope from the SL(2,Z) word T^{n_1} S T^{n_2} S ... S T^{n_g}.

    Working in the (degree, rank) basis, the word sends the class
    (0, 1) (rank one, degree zero) to (n, k): a rank-k degree-n class.
    Returns (slope, (rank, degree)) with rank = k and degree = n.
    """
    m = ((1, 0), (0, 1))
    for i, e in enumerate(f.entries):
        m = _matmul(m, _matpow(_T, e))
        if i + 1 < f.g:
            m = _matmul(m, _S)
    deg = m[0][1]
    rank = m[1][1]
    return Slope(deg, rank), (rank, deg)
