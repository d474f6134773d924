"""Exact integer linear algebra for the tridiagonal matrices attached to
negative continued fractions: Smith normal form, the explicit inverse,
intersection numbers, and weighted-graph divisor invariants.

Matrices are plain lists of lists of Python ints; all arithmetic is exact.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from itertools import combinations
from typing import Sequence

from .contfrac import NCF, d
from .epoints import EPoint

IntMatrix = list[list[int]]


def _check_square(m: IntMatrix) -> int:
    g = len(m)
    if g < 1 or any(len(row) != g for row in m):
        raise ValueError("matrix must be square with dimension >= 1")
    return g


def dmatrix(entries: Sequence[int]) -> IntMatrix:
    """The tridiagonal matrix with the given diagonal and -1 off-diagonals."""
    g = len(entries)
    if g < 1:
        raise ValueError("need at least one diagonal entry")
    m = [[0] * g for _ in range(g)]
    for i, e in enumerate(entries):
        m[i][i] = int(e)
        if i + 1 < g:
            m[i][i + 1] = -1
            m[i + 1][i] = -1
    return m


def det(m: IntMatrix) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    g = _check_square(m)
    a = [row[:] for row in m]
    sign = 1
    prev = 1
    for t in range(g - 1):
        if a[t][t] == 0:
            for i in range(t + 1, g):
                if a[i][t] != 0:
                    a[t], a[i] = a[i], a[t]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(t + 1, g):
            for j in range(t + 1, g):
                a[i][j] = (a[i][j] * a[t][t] - a[i][t] * a[t][j]) // prev
            a[i][t] = 0
        prev = a[t][t]
    return sign * a[g - 1][g - 1]


def smith_invariants(m: IntMatrix) -> tuple[int, ...]:
    """Invariant factors s_1 | s_2 | ... | s_g (zeros at the end if singular),
    by integer row/column reduction."""
    g = _check_square(m)
    a = [[int(x) for x in row] for row in m]
    out = []
    for t in range(g):
        # locate a nonzero entry of least magnitude in the trailing block
        pivot = None
        for i in range(t, g):
            for j in range(t, g):
                if a[i][j] != 0 and (pivot is None or abs(a[i][j]) < abs(a[pivot[0]][pivot[1]])):
                    pivot = (i, j)
        if pivot is None:
            out.extend([0] * (g - t))
            break
        while True:
            i0, j0 = pivot
            if i0 != t:
                a[t], a[i0] = a[i0], a[t]
            if j0 != t:
                for row in a:
                    row[t], row[j0] = row[j0], row[t]
            p = a[t][t]
            dirty = False
            for i in range(t + 1, g):
                q = a[i][t] // p
                if q:
                    for j in range(t, g):
                        a[i][j] -= q * a[t][j]
                if a[i][t]:
                    dirty = True
            for j in range(t + 1, g):
                q = a[t][j] // p
                if q:
                    for i in range(t, g):
                        a[i][j] -= q * a[i][t]
                if a[t][j]:
                    dirty = True
            if dirty:
                pivot = min(
                    ((i, j) for i in range(t, g) for j in range(t, g) if a[i][j] != 0),
                    key=lambda ij: abs(a[ij[0]][ij[1]]),
                )
                continue
            # pivot must divide everything that remains
            offender = None
            for i in range(t + 1, g):
                for j in range(t + 1, g):
                    if a[i][j] % p != 0:
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            for j in range(t, g):
                a[t][j] += a[offender][j]
            pivot = (t, t)
        out.append(abs(a[t][t]))
    return tuple(out)


def smith_invariants_minors(m: IntMatrix) -> tuple[int, ...]:
    """Invariant factors via gcds of k x k minors: s_k = d_k/d_{k-1}.

    Exponential in the dimension; used as an independent cross-check of
    ``smith_invariants`` on small matrices.
    """
    g = _check_square(m)
    prev = 1
    out = []
    for k in range(1, g + 1):
        gk = 0
        for rows in combinations(range(g), k):
            for cols in combinations(range(g), k):
                minor = [[m[i][j] for j in cols] for i in rows]
                gk = math.gcd(gk, det(minor))
                if gk == 1:
                    break
            if gk == 1:
                break
        if gk == 0:
            out.extend([0] * (g - k + 1))
            break
        out.append(gk // prev)
        prev = gk
    return tuple(out)


def d_inverse(f: NCF) -> tuple[IntMatrix, int]:
    """The exact inverse of the tridiagonal matrix of ``f`` as
    (numerator matrix, denominator): entry [i][j] of the numerator is
    d(n_1..n_{min-1}) * d(n_{max+1}..n_g), and the denominator is
    n = d(n_1..n_g).  The product (tridiagonal) * numerator is n * I.
    """
    e = f.entries
    g = f.g
    denom = d(e)
    if denom == 0:
        raise ZeroDivisionError("tridiagonal determinant is zero")
    heads = [d(e[:i]) for i in range(g + 1)]  # d(n_1..n_i)
    tails = [d(e[i:]) for i in range(g + 1)]  # d(n_{i+1}..n_g)
    num = [
        [heads[min(i, j)] * tails[max(i, j) + 1] for j in range(g)] for i in range(g)
    ]
    return num, denom


def intersection_number(a: Sequence[int], b: Sequence[int]) -> int:
    """Determinant of the symmetric tridiagonal matrix with diagonal
    a_i + b_{i-1} + b_i (b_0 = b_g = 0) and off-diagonals b_i.

    For a divisor written as sum of a_i coordinate slices and b_j shifted
    diagonals this is the g-fold self-intersection number divided by g!.
    """
    g = len(a)
    if g < 1:
        raise ValueError("need g >= 1")
    if len(b) != g - 1:
        raise ValueError(f"need {g - 1} off-diagonal coefficients, got {len(b)}")
    prev2, prev = 0, 1
    for i in range(g):
        left = b[i - 1] if i >= 1 else 0
        right = b[i] if i < g - 1 else 0
        diag = a[i] + left + right
        offsq = left * left
        prev2, prev = prev, diag * prev - offsq * prev2
    return prev


@dataclass(frozen=True)
class WeightedGraph:
    """An undirected graph (loops allowed) with nonzero integer edge labels.

    Vertices are 1-based.  A label of 0 would mean "no edge", so it is
    rejected.  Repeated edges accumulate.
    """

    vertices: int
    edges: tuple[tuple[int, int, int], ...]

    def __post_init__(self):
        if self.vertices < 1:
            raise ValueError("need at least one vertex")
        edges = tuple((int(i), int(j), int(l)) for i, j, l in self.edges)
        object.__setattr__(self, "edges", edges)
        for i, j, label in edges:
            if not (1 <= i <= self.vertices and 1 <= j <= self.vertices):
                raise ValueError(f"edge ({i},{j}) out of range")
            if label == 0:
                raise ValueError("label 0 means the edge is absent; omit it")

    @staticmethod
    def from_json_dict(data: dict) -> "WeightedGraph":
        return WeightedGraph(
            vertices=int(data["vertices"]),
            edges=tuple((e[0], e[1], e[2]) for e in data["edges"]),
        )

    def degree_matrix(self) -> IntMatrix:
        g = self.vertices
        m = [[0] * g for _ in range(g)]
        for i, j, label in self.edges:
            if i != j:
                m[i - 1][i - 1] += label
                m[j - 1][j - 1] += label
        return m

    def adjacency_matrix(self) -> IntMatrix:
        g = self.vertices
        m = [[0] * g for _ in range(g)]
        for i, j, label in self.edges:
            if i == j:
                m[i - 1][i - 1] += label
            else:
                m[i - 1][j - 1] += label
                m[j - 1][i - 1] += label
        return m


@dataclass(frozen=True)
class GraphDivisorReport:
    """Invariants of the divisor encoded by a weighted graph.

    ``kernel_structure`` lists the invariant factors of M_G; the kernel of
    M_G acting on the torus power is the direct sum of the s_i-torsion
    subgroups, of order ``kernel_order`` (squares of the nonzero factors).
    ``full_power_order`` is the order the literal reading "d-torsion to the
    g-th power" would give; the two disagree whenever the dimension exceeds
    one, and ``readings_disagree`` flags that.
    """

    m_matrix: tuple[tuple[int, ...], ...]
    selfint: int
    kernel_structure: tuple[int, ...]
    kernel_order: int | None
    full_power_order: int | None
    readings_disagree: bool


def graph_divisor_invariants(graph: WeightedGraph) -> GraphDivisorReport:
    deg = graph.degree_matrix()
    adj = graph.adjacency_matrix()
    g = graph.vertices
    m = [[deg[i][j] + adj[i][j] for j in range(g)] for i in range(g)]
    selfint = det(m)
    inv = smith_invariants(m)
    if selfint == 0:
        kernel_order = None
        full_power = None
    else:
        kernel_order = 1
        for s in inv:
            kernel_order *= s * s
        full_power = abs(selfint) ** (2 * g)
    return GraphDivisorReport(
        m_matrix=tuple(tuple(row) for row in m),
        selfint=selfint,
        kernel_structure=inv,
        kernel_order=kernel_order,
        full_power_order=full_power,
        readings_disagree=(kernel_order != full_power),
    )


def slope_graph(f: NCF) -> WeightedGraph:
    """The path graph whose divisor is the balanced one of the slope:
    loop labels n_i + 2 - delta_{i,1} - delta_{i,g}, path labels -1."""
    g = f.g
    edges = []
    for i in range(1, g + 1):
        label = f.entries[i - 1] + 2 - (1 if i == 1 else 0) - (1 if i == g else 0)
        edges.append((i, i, label))
    for i in range(1, g):
        edges.append((i, i + 1, -1))
    return WeightedGraph(vertices=g, edges=tuple(edges))


@dataclass(frozen=True)
class StandardDivisor:
    """Data of a standard divisor: per-coordinate point sums (with integer
    multiplicities) and the diagonal shifts z_1..z_{g-1}.

    Points are exact rational pairs on the torus.  The boundary shifts
    z_0 and z_g are 0 by convention.
    """

    components: tuple[tuple[tuple[EPoint, int], ...], ...]
    shifts: tuple[EPoint, ...] = field(default=())

    def __post_init__(self):
        if len(self.shifts) != max(len(self.components) - 1, 0):
            raise ValueError("need exactly g-1 diagonal shifts")

    @property
    def g(self) -> int:
        return len(self.components)

    def degree(self, i: int) -> int:
        """Degree of the i-th component divisor (1-based)."""
        return sum(mult for _, mult in self.components[i - 1])

    def comp_sum(self, i: int) -> EPoint:
        """Sum of the i-th component divisor on the torus (1-based)."""
        total = EPoint.zero()
        for p, mult in self.components[i - 1]:
            total = total + mult * p
        return total

    def shift(self, j: int) -> EPoint:
        """z_j with the convention z_0 = z_g = 0."""
        if j == 0 or j == self.g:
            return EPoint.zero()
        return self.shifts[j - 1]


def balanced_divisor(f: NCF) -> StandardDivisor:
    """The balanced standard divisor of the slope: degree-d_i multiples of 0
    in each slot and zero diagonal shifts."""
    g = f.g
    comps = []
    for i, e in enumerate(f.entries, start=1):
        deg = e - 2 + (1 if i == 1 else 0) + (1 if i == g else 0)
        comps.append(((EPoint.zero(), deg),) if deg else ())
    return StandardDivisor(
        components=tuple(comps), shifts=tuple(EPoint.zero() for _ in range(g - 1))
    )


def std_divisor_equivalent(div_a: StandardDivisor, div_b: StandardDivisor) -> bool:
    """Linear equivalence test for standard divisors: componentwise equal
    degrees and equal sums once the neighbouring shifts are folded in."""
    if div_a.g != div_b.g:
        raise ValueError(f"dimension mismatch: {div_a.g} vs {div_b.g}")
    for i in range(1, div_a.g + 1):
        if div_a.degree(i) != div_b.degree(i):
            return False
        lhs = div_a.comp_sum(i) - div_a.shift(i) + div_a.shift(i - 1)
        rhs = div_b.comp_sum(i) - div_b.shift(i) + div_b.shift(i - 1)
        if lhs != rhs:
            return False
    return True
