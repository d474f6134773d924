"""Exact points on the torus C/(Z + Z*eta), stored as rational pairs.

A point (a, b) means a + b*eta with a, b rational, taken mod Z^2.  All
group arithmetic is exact, so torsion questions (is m*p = 0?) have exact
answers, independent of any floating-point choice of eta.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


def _frac_mod1(x: Fraction) -> Fraction:
    return x - (x.numerator // x.denominator)


@dataclass(frozen=True)
class EPoint:
    """a + b*eta mod the lattice, with a, b rational in [0, 1)."""

    a: Fraction
    b: Fraction

    def __post_init__(self):
        object.__setattr__(self, "a", _frac_mod1(Fraction(self.a)))
        object.__setattr__(self, "b", _frac_mod1(Fraction(self.b)))

    @staticmethod
    def zero() -> "EPoint":
        return EPoint(Fraction(0), Fraction(0))

    @staticmethod
    def parse(text: str) -> "EPoint":
        """Parse "p/q,r/s" (either component may be a plain integer)."""
        parts = text.split(",")
        if len(parts) != 2:
            raise ValueError(f"expected 'a,b' rational pair, got {text!r}")
        return EPoint(Fraction(parts[0].strip()), Fraction(parts[1].strip()))

    def __add__(self, other: "EPoint") -> "EPoint":
        return EPoint(self.a + other.a, self.b + other.b)

    def __sub__(self, other: "EPoint") -> "EPoint":
        return EPoint(self.a - other.a, self.b - other.b)

    def __neg__(self) -> "EPoint":
        return EPoint(-self.a, -self.b)

    def __rmul__(self, m: int) -> "EPoint":
        return EPoint(m * self.a, m * self.b)

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    def order(self) -> int:
        """Order as a torsion element (both coordinates are rational)."""
        import math

        return math.lcm(self.a.denominator, self.b.denominator)

    def lift(self, eta: complex) -> complex:
        """A complex representative a + b*eta."""
        return float(self.a) + float(self.b) * eta

    def __str__(self) -> str:
        return f"{self.a},{self.b}"
