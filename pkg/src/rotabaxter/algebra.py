"""The free Rota-Baxter algebra on its coefficient ring, at a fixed weight.

As a module the algebra is free on basis monomials a0, a1, a2, ...; the
product is the weight-deformed divided-power product

    a_m * a_n = sum_{i=0}^{min(m,n)} C(m+n-i, m) * C(m, i) * w^i * a_{m+n-i}

where ``w`` is the weight, and the Rota-Baxter operator shifts every basis
index up by one.  Elements are sparse maps degree -> nonzero coefficient;
all arithmetic is exact (big integers, reduced fractions, canonical
residues).  Binomial coefficients are always computed over the integers
and only then reduced into the ring, so modular products never divide by
a non-invertible element.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb

from .rings import CoeffRing

__all__ = ["NEG_INF", "RBAlgebra", "RBElement", "recursive_product"]

NEG_INF = float("-inf")


class RBAlgebra:
    """Context object: the coefficient ring together with the weight."""

    __slots__ = ("ring", "weight")

    def __init__(self, ring: CoeffRing, weight):
        self.ring = ring
        self.weight = ring.coerce(weight)

    def zero(self) -> "RBElement":
        return RBElement(self, {})

    def one(self) -> "RBElement":
        return self.monomial(0)

    def monomial(self, degree: int, coeff=1) -> "RBElement":
        """The element coeff * a_degree."""
        if degree < 0:
            raise ValueError("basis degrees are nonnegative")
        c = self.ring.coerce(coeff)
        return RBElement(self, {degree: c} if c != 0 else {})

    def element(self, terms) -> "RBElement":
        """Build an element from a mapping or iterable of (degree, coeff)."""
        items = terms.items() if hasattr(terms, "items") else terms
        acc: dict = {}
        for degree, coeff in items:
            degree = int(degree)
            if degree < 0:
                raise ValueError("basis degrees are nonnegative")
            c = self.ring.add(acc.get(degree, self.ring.zero), self.ring.coerce(coeff))
            if c == 0:
                acc.pop(degree, None)
            else:
                acc[degree] = c
        return RBElement(self, acc)

    def basis_product(self, m: int, n: int) -> "RBElement":
        """Closed-form product of the basis monomials a_m and a_n."""
        ring = self.ring
        terms: dict = {}
        for i in range(min(m, n) + 1):
            c = ring.mul(ring.coerce(comb(m + n - i, m) * comb(m, i)), ring.pow(self.weight, i))
            if c != 0:
                terms[m + n - i] = c
        return RBElement(self, terms)

    def __eq__(self, other):
        return (
            isinstance(other, RBAlgebra)
            and self.ring == other.ring
            and self.weight == other.weight
        )

    def __hash__(self):
        return hash((self.ring, self.weight))

    def __repr__(self):
        return f"RBAlgebra({self.ring.descriptor!r}, weight={self.weight})"


class RBElement:
    """A finitely supported coefficient map on the monomial basis.

    Treat instances as immutable; every operation returns a fresh element.
    """

    __slots__ = ("algebra", "_terms")

    def __init__(self, algebra: RBAlgebra, terms: dict):
        self.algebra = algebra
        self._terms = terms

    # -- inspection ------------------------------------------------------

    @property
    def degree(self):
        """Highest basis degree, or -inf for the zero element."""
        return max(self._terms) if self._terms else NEG_INF

    @property
    def min_degree(self):
        """Lowest basis degree, or -inf for the zero element."""
        return min(self._terms) if self._terms else NEG_INF

    def coeff(self, degree: int):
        return self._terms.get(degree, self.algebra.ring.zero)

    def initial_term(self):
        """The (degree, coeff) pair of the highest term, or None for zero."""
        if not self._terms:
            return None
        d = max(self._terms)
        return (d, self._terms[d])

    def support(self) -> frozenset:
        return frozenset(self._terms.items())

    def sorted_terms(self) -> list:
        """(degree, coeff) pairs in descending degree order."""
        return sorted(self._terms.items(), reverse=True)

    def to_pairs(self) -> list:
        """JSON form: [[degree, coeff-string], ...], descending degree."""
        coeff_str = self.algebra.ring.coeff_str
        return [[d, coeff_str(c)] for d, c in self.sorted_terms()]

    # -- arithmetic ------------------------------------------------------

    def _check_ctx(self, other: "RBElement"):
        if self.algebra != other.algebra:
            raise ValueError("mismatched algebra contexts")

    def __bool__(self):
        return bool(self._terms)

    def __add__(self, other):
        if not isinstance(other, RBElement):
            return NotImplemented
        self._check_ctx(other)
        ring = self.algebra.ring
        terms = dict(self._terms)
        for d, c in other._terms.items():
            s = ring.add(terms.get(d, ring.zero), c)
            if s == 0:
                terms.pop(d, None)
            else:
                terms[d] = s
        return RBElement(self.algebra, terms)

    def __neg__(self):
        ring = self.algebra.ring
        return RBElement(self.algebra, {d: ring.neg(c) for d, c in self._terms.items()})

    def __sub__(self, other):
        if not isinstance(other, RBElement):
            return NotImplemented
        return self + (-other)

    def _scaled(self, scalar):
        ring = self.algebra.ring
        s = ring.coerce(scalar)
        if s == 0:
            return self.algebra.zero()
        terms = {}
        for d, c in self._terms.items():
            p = ring.mul(s, c)
            if p != 0:
                terms[d] = p
        return RBElement(self.algebra, terms)

    def __mul__(self, other):
        if isinstance(other, RBElement):
            self._check_ctx(other)
            ring = self.algebra.ring
            acc: dict = {}
            for m, cm in self._terms.items():
                for n, cn in other._terms.items():
                    scale = ring.mul(cm, cn)
                    if scale == 0:
                        continue
                    for d, c in self.algebra.basis_product(m, n)._terms.items():
                        s = ring.add(acc.get(d, ring.zero), ring.mul(scale, c))
                        if s == 0:
                            acc.pop(d, None)
                        else:
                            acc[d] = s
            return RBElement(self.algebra, acc)
        if isinstance(other, (int, Fraction)):
            return self._scaled(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self._scaled(other)
        return NotImplemented

    def baxter(self, power: int = 1) -> "RBElement":
        """Apply the Rota-Baxter operator ``power`` times (shift degrees up)."""
        if power < 0:
            raise ValueError("the Rota-Baxter operator has no inverse here")
        if power == 0:
            return self
        return RBElement(self.algebra, {d + power: c for d, c in self._terms.items()})

    # -- comparisons and display ----------------------------------------

    def __eq__(self, other):
        return (
            isinstance(other, RBElement)
            and self.algebra == other.algebra
            and self._terms == other._terms
        )

    def __hash__(self):
        return hash((self.algebra, frozenset(self._terms.items())))

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for d, c in self.sorted_terms():
            s = self.algebra.ring.coeff_str(c)
            if s == "1":
                body = f"a{d}"
            elif s == "-1":
                body = f"-a{d}"
            elif "/" in s:
                body = f"{s}*a{d}"
            else:
                body = f"{s}a{d}"
            parts.append(body)
        out = parts[0]
        for p in parts[1:]:
            out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
        return out

    def __repr__(self):
        return f"<RBElement {self} over {self.algebra.ring.descriptor}>"


def recursive_product(f: RBElement, g: RBElement) -> RBElement:
    """Product computed purely from the Rota-Baxter identity.

    Basis monomials are peeled as a_m = P(a_{m-1}) and products of operator
    images are rewritten with P(x)P(y) = P(xP(y)) + P(P(x)y) + w P(xy)
    until one factor is the unit a0.  Each rewrite strictly lowers m+n, so
    the recursion terminates.  This is deliberately independent of the
    closed-form product and exists as a cross-check of it.
    """
    f._check_ctx(g)
    algebra = f.algebra
    ring = algebra.ring
    memo: dict = {}

    def basis(m: int, n: int) -> dict:
        if m > n:
            m, n = n, m
        if m == 0:
            return {n: ring.one}
        cached = memo.get((m, n))
        if cached is not None:
            return cached
        acc: dict = {}

        def absorb(part: dict, scale):
            for d, c in part.items():
                s = ring.add(acc.get(d + 1, ring.zero), ring.mul(scale, c))
                if s == 0:
                    acc.pop(d + 1, None)
                else:
                    acc[d + 1] = s

        absorb(basis(m - 1, n), ring.one)
        absorb(basis(m, n - 1), ring.one)
        absorb(basis(m - 1, n - 1), algebra.weight)
        memo[(m, n)] = acc
        return acc

    out: dict = {}
    for m, cm in f._terms.items():
        for n, cn in g._terms.items():
            scale = ring.mul(cm, cn)
            if scale == 0:
                continue
            for d, c in basis(m, n).items():
                s = ring.add(out.get(d, ring.zero), ring.mul(scale, c))
                if s == 0:
                    out.pop(d, None)
                else:
                    out[d] = s
    return RBElement(algebra, out)
