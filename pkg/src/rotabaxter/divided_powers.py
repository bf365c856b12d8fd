"""The divided-power bridge to rational polynomials.

At weight zero over the rationals the free Rota-Baxter algebra is the
divided power algebra, and sending the degree-m basis monomial to x^m/m!
is a ring isomorphism onto Q[x]: the binomial C(m+n, m) in the weight-zero
product is exactly (m+n)!/(m! n!), so products transport to plain
polynomial multiplication.  The bridge exists for cross-validation."""

from __future__ import annotations

from fractions import Fraction
from math import factorial

from .algebra import RBAlgebra, RBElement
from .rings import CoeffRing

__all__ = ["RatPoly", "to_poly", "from_poly"]


class RatPoly:
    """Dense univariate polynomial over Q, coefficient index = degree."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        coeffs = [Fraction(c) for c in coeffs]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        self.coeffs = tuple(coeffs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def coeff(self, i: int) -> Fraction:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0)

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        return isinstance(other, RatPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        n = max(len(self.coeffs), len(other.coeffs))
        return RatPoly([self.coeff(i) + other.coeff(i) for i in range(n)])

    def __mul__(self, other):
        if not self.coeffs or not other.coeffs:
            return RatPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return RatPoly(out)

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            if i == 0:
                parts.append(str(c))
            else:
                var = "x" if i == 1 else f"x^{i}"
                if c == 1:
                    parts.append(var)
                elif c == -1:
                    parts.append(f"-{var}")
                else:
                    parts.append(f"{c}*{var}")
        out = parts[0]
        for p in parts[1:]:
            out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
        return out

    def __repr__(self):
        return f"RatPoly({self})"


_BRIDGE_ALGEBRA = RBAlgebra(CoeffRing.rationals(), 0)


def to_poly(f: RBElement) -> RatPoly:
    """Divided-power image: the degree-m monomial goes to x^m/m!."""
    algebra = f.algebra
    if not algebra.ring.is_rational or algebra.weight != 0:
        raise ValueError("the polynomial bridge requires the rationals at weight 0")
    if not f:
        return RatPoly()
    coeffs = [Fraction(0)] * (int(f.degree) + 1)
    for d, c in f.support():
        coeffs[d] = Fraction(c) / factorial(d)
    return RatPoly(coeffs)


def from_poly(p: RatPoly, algebra: RBAlgebra | None = None) -> RBElement:
    """Inverse image: x^m goes to m! times the degree-m monomial."""
    if algebra is None:
        algebra = _BRIDGE_ALGEBRA
    if not algebra.ring.is_rational or algebra.weight != 0:
        raise ValueError("the polynomial bridge requires the rationals at weight 0")
    return algebra.element((m, c * factorial(m)) for m, c in enumerate(p.coeffs))
