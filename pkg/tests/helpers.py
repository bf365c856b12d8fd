"""Shared test utilities: seeded random elements and small oracles."""

from __future__ import annotations

from fractions import Fraction

from rotabaxter import RBAlgebra, RBElement


def random_element(
    algebra: RBAlgebra,
    rng,
    max_degree: int = 8,
    coeff_bound: int = 1000,
    max_terms: int | None = None,
    allow_zero: bool = True,
) -> RBElement:
    """A random sparse element with exact coefficients drawn per ring."""
    ring = algebra.ring
    n_terms = rng.randint(0 if allow_zero else 1, max_terms or max_degree + 1)
    degrees = rng.sample(range(max_degree + 1), min(n_terms, max_degree + 1))
    terms = {}
    for d in degrees:
        if ring.is_rational:
            c = Fraction(rng.randint(-coeff_bound, coeff_bound), rng.randint(1, 12))
        elif ring.is_modular:
            c = rng.randrange(ring.modulus)
        else:
            c = rng.randint(-coeff_bound, coeff_bound)
        terms[d] = c
    f = algebra.element(terms)
    if not allow_zero and not f:
        return algebra.monomial(rng.randint(0, max_degree))
    return f


def rb_identity_holds(f: RBElement, g: RBElement) -> bool:
    """The defining identity, checked through the public operations."""
    algebra = f.algebra
    lhs = f.baxter() * g.baxter()
    rhs = (f * g.baxter()).baxter() + (f.baxter() * g).baxter() + (
        algebra.weight * (f * g).baxter()
    )
    return lhs == rhs
