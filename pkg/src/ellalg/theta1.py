"""One-variable theta functions and the order-n^3 Heisenberg action.

Conventions: e(x) = exp(2*pi*i*x) throughout (entire, so no branch cuts);
the lattice is Z + Z*eta with Im(eta) > 0, and

    theta(z) = sum_m (-1)^m e(m z + m(m-1)/2 * eta),

which is 1-periodic, satisfies theta(z + eta) = e(-z + 1/2) theta(z), and
has a single simple zero at the lattice points.  The basis functions
theta_alpha are built from it by an n-fold product.

Arguments are reduced to the fundamental cell before summation and the
exact quasi-periodicity factor is reapplied, so evaluation is stable for
arguments far from the cell.  Truncation uses a rigorous geometric tail
bound; the series diverges from tolerance only by reported amounts.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field

TWO_PI_I = 2j * math.pi


def e(x: complex) -> complex:
    """exp(2 pi i x)."""
    return cmath.exp(TWO_PI_I * x)


class ThetaTruncationError(RuntimeError):
    """Raised when the tail bound cannot reach tolerance within max_terms."""


@dataclass(frozen=True)
class LatticeParams:
    """Modular parameter and precision policy.

    ``eta`` must lie in the upper half-plane so the nome e(eta) has
    modulus < 1.  ``tau`` is the translation parameter carried along for
    the relation coefficients; plain theta evaluation ignores it.
    """

    eta: complex
    tau: complex = 0j
    tolerance: float = 1e-12
    max_terms: int = 512

    def __post_init__(self):
        if not complex(self.eta).imag > 0:
            raise ValueError(f"eta must have positive imaginary part, got {self.eta}")
        if self.tolerance <= 0 or self.max_terms < 1:
            raise ValueError("tolerance must be positive and max_terms >= 1")

    @property
    def nome_abs(self) -> float:
        return math.exp(-2 * math.pi * complex(self.eta).imag)


@dataclass(frozen=True)
class ThetaValue:
    value: complex
    truncation_terms_used: int
    tail_bound: float


def reduce_argument(z: complex, eta: complex) -> tuple[complex, int, int]:
    """Split z = z0 + p + q*eta with z0 in the centred fundamental cell."""
    z = complex(z)
    eta = complex(eta)
    v = z.imag / eta.imag
    q = round(v)
    z1 = z - q * eta
    p = round(z1.real)
    return z1 - p, p, q


def _eta_shift_factor(z0: complex, q: int, eta: complex) -> complex:
    """Factor F with theta(z0 + q*eta) = F * theta(z0)."""
    return e(-q * z0 - 0.5 * q * (q - 1) * eta + 0.5 * q)


def theta(z: complex, p: LatticeParams) -> ThetaValue:
    """The basic theta series, with rigorous truncation.

    Fails with ThetaTruncationError when the geometric tail bound cannot
    be brought below tolerance within max_terms summands.
    """
    eta = complex(p.eta)
    z0, _, q = reduce_argument(z, eta)
    factor = _eta_shift_factor(z0, q, eta)
    nome = p.nome_abs
    target = p.tolerance / max(1.0, abs(factor))

    # |term_m| <= nome^(m(m-2)/2) for m >= 0 and <= nome^(m^2/2) for m < 0
    # once |Im z0| <= Im(eta)/2; both tails are geometric with ratio <= nome.
    big_n = 2
    while True:
        bound = 2.0 * nome ** (big_n * (big_n - 2) / 2.0) / (1.0 - nome)
        if bound <= target:
            break
        big_n += 1
        if 2 * big_n + 1 > p.max_terms:
            raise ThetaTruncationError(
                f"cannot reach tolerance {p.tolerance} within {p.max_terms} terms"
            )
    total = 0j
    for m in range(-big_n, big_n + 1):
        term = e(m * z0 + 0.5 * m * (m - 1) * eta)
        if m % 2:
            term = -term
        total += term
    return ThetaValue(
        value=factor * total,
        truncation_terms_used=2 * big_n + 1,
        tail_bound=bound * abs(factor),
    )


def theta_alpha(alpha: int, n: int, z: complex, p: LatticeParams) -> ThetaValue:
    """The alpha-th basis function of the n-dimensional space:

        e(alpha z + alpha/2n + alpha(alpha - n) eta / 2n)
            * prod_{k=0}^{n-1} theta(z + k/n + alpha eta / n).

    The index is NOT reduced mod n before use; periodicity in alpha is an
    identity of the formula and is exercised by the tests.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    eta = complex(p.eta)
    pref = e(alpha * z + alpha / (2 * n) + alpha * (alpha - n) * eta / (2 * n))
    values = []
    tails = []
    terms = 0
    for k in range(n):
        tv = theta(z + k / n + alpha * eta / n, p)
        values.append(tv.value)
        tails.append(tv.tail_bound)
        terms += tv.truncation_terms_used
    prod = pref
    for v in values:
        prod *= v
    # first-order absolute error bound for the product
    tail = 0.0
    for i, t in enumerate(tails):
        other = abs(pref)
        for j, v in enumerate(values):
            if j != i:
                other *= abs(v)
        tail += t * other
    return ThetaValue(value=prod, truncation_terms_used=terms, tail_bound=tail)


def theta_alpha_zeros(alpha: int, n: int) -> list[tuple[float, float]]:
    """Lattice coordinates (a, b) meaning a + b*eta of the zeros of
    theta_alpha in the fundamental cell: (m - alpha*eta)/n for 0 <= m < n."""
    return [((m / n) % 1.0, (-alpha / n) % 1.0) for m in range(n)]


def s_operator(f, n: int):
    """(S f)(z) = f(z + 1/n)."""
    return lambda z: f(z + 1.0 / n)


def t_operator(f, n: int, p: LatticeParams):
    """(T f)(z) = e(z + 1/2n - (n-1) eta/2n) f(z + eta/n)."""
    eta = complex(p.eta)
    return lambda z: e(z + 1 / (2 * n) - (n - 1) * eta / (2 * n)) * f(z + eta / n)


def h1_word_action(word: str, alpha: int, n: int) -> tuple[int, complex]:
    """Symbolic action of a word over {S, T} on the basis index alpha.

    The word is an operator product, so the rightmost letter acts first.
    S fixes the index and contributes the phase e(index/n); T shifts the
    index by one.  Returns (resulting index mod n, accumulated phase).
    """
    if any(ch not in "ST" for ch in word):
        raise ValueError(f"word must use letters S and T only, got {word!r}")
    idx = alpha % n
    phase = 1 + 0j
    for ch in reversed(word):
        if ch == "S":
            phase *= e(idx / n)
        else:
            idx = (idx + 1) % n
    return idx, phase


def h1_word_numeric(word: str, f, n: int, p: LatticeParams):
    """The same word as composed numeric operators acting on a function."""
    if any(ch not in "ST" for ch in word):
        raise ValueError(f"word must use letters S and T only, got {word!r}")
    out = f
    for ch in reversed(word):
        out = s_operator(out, n) if ch == "S" else t_operator(out, n, p)
    return out
