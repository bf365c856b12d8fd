"""The classification layer built on ascent sets.

Homogeneous Rota-Baxter ideals are classified by their ascent sets: the
ideal determined by an ascent set holds, in each degree, exactly the
coefficients lying in the level ideal at that degree.  Quotients by a
general ideal share their underlying set with the homogeneous case, which
yields canonical residue representatives computed by descending-degree
elimination against an ascent generating set.  Over the integers at weight
zero the prime ideals are completely classified, and over integral domains
of characteristic zero the lowest coefficients of a minimal-degree member
are forced by its initial term.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .algebra import RBAlgebra, RBElement
from .ideals import MEMBER, AscentSet, SaturationState
from .rings import CoeffRing, KIdeal

__all__ = [
    "HomogeneousIdeal",
    "ideal_from_ascent",
    "homogeneous_membership",
    "QuotientShape",
    "quotient_shape",
    "canonical_representative",
    "forced_element",
    "forced_element_residual",
    "SupportReport",
    "weight_zero_support_check",
    "z_ascent_pairs",
    "PrimeResult",
    "classify_prime",
]


class HomogeneousIdeal:
    """The unique homogeneous Rota-Baxter ideal with a given ascent set.

    In degree i the ideal holds exactly the level ideal at i, so membership
    is coefficientwise containment.  Building an ideal from an ascent set
    and taking the ascent set of an ideal are mutually inverse on the
    homogeneous class.
    """

    __slots__ = ("ascent",)

    def __init__(self, ascent: AscentSet):
        self.ascent = ascent

    def level_at(self, degree: int) -> KIdeal:
        return self.ascent.level_at(degree)

    def contains(self, f: RBElement) -> bool:
        if f.algebra.ring != self.ascent.ring:
            raise ValueError("mismatched coefficient rings")
        return all(c in self.ascent.level_at(d) for d, c in f.support())

    def __contains__(self, f: RBElement) -> bool:
        return self.contains(f)

    def generators(self, algebra: RBAlgebra) -> list:
        """One homogeneous generator per ascending point."""
        if algebra.ring != self.ascent.ring:
            raise ValueError("mismatched coefficient rings")
        return [algebra.monomial(s, level.gen) for s, level in self.ascent.pairs]

    def __repr__(self):
        return f"HomogeneousIdeal({self.ascent})"


def ideal_from_ascent(ascent: AscentSet) -> HomogeneousIdeal:
    return HomogeneousIdeal(ascent)


def homogeneous_membership(ascent: AscentSet, f: RBElement) -> bool:
    return HomogeneousIdeal(ascent).contains(f)


def _factor_str(ring: CoeffRing, level: KIdeal) -> str:
    """Quotient of the coefficient ring by a level ideal, as text."""
    if level.is_zero:
        if ring.is_rational:
            return "Q"
        n = ring.modulus
        return f"Z/{n}" if n is not None else "Z"
    if ring.is_rational:
        return "0"
    return f"Z/{level.gen}" if level.gen != 1 else "0"


@dataclass(frozen=True)
class QuotientShape:
    """Degree segments of the quotient and the coefficient factor each one
    carries: the ring itself below the first ascent point, then the ring
    modulo the level of each segment; ``hi`` is None on the final,
    unbounded segment."""

    segments: tuple

    def __str__(self):
        parts = []
        for lo, hi, factor in self.segments:
            span = f"[{lo},{hi})" if hi is not None else f"[{lo},inf)"
            parts.append(f"{span}: {factor}")
        return "; ".join(parts)


def quotient_shape(ascent: AscentSet) -> QuotientShape:
    ring = ascent.ring
    segments = []
    first = ascent.pairs[0][0]
    if first > 0:
        segments.append((0, first, _factor_str(ring, KIdeal.zero(ring))))
    for idx, (s, level) in enumerate(ascent.pairs):
        hi = ascent.pairs[idx + 1][0] if idx + 1 < len(ascent.pairs) else None
        segments.append((s, hi, _factor_str(ring, level)))
    return QuotientShape(tuple(segments))


def _split_by_level(ring: CoeffRing, coeff, level: KIdeal):
    """Write coeff = residue + q * gen with the residue in the canonical
    representative set: {0..gen-1} for Z and Z/n, {0} for the rational unit
    ideal."""
    if ring.is_rational:
        return ring.zero, coeff
    gen = level.gen
    residue = coeff % gen
    return residue, (coeff - residue) // gen


def canonical_representative(f: RBElement, ascent: AscentSet, generators) -> RBElement:
    """The unique representative of f modulo the ideal whose coefficients lie
    in the canonical residue sets.

    ``generators`` is an ascent generating set matching ``ascent``: the
    j-th element has initial term gen_j * a_{s_j} with gen_j the canonical
    level generator (the engine's ascent generating sets qualify).  Works
    by descending-degree elimination and is idempotent.
    """
    algebra = f.algebra
    ring = algebra.ring
    if ring != ascent.ring:
        raise ValueError("mismatched coefficient rings")
    gens = list(generators)
    if len(gens) != len(ascent.pairs):
        raise ValueError("one generator per ascending point expected")
    for g, (s, level) in zip(gens, ascent.pairs):
        if g.algebra != algebra:
            raise ValueError("generators must live in the element's algebra")
        lead = g.initial_term()
        expected = ring.coerce(level.gen)
        if lead is None or lead[0] != s or lead[1] != expected:
            raise ValueError(
                f"generator {g} does not have initial term {level.gen}*a{s}"
            )
    if not f:
        return f
    points = ascent.points
    g = f
    for d in range(int(f.degree), -1, -1):
        if d < points[0]:
            break
        coeff = g.coeff(d)
        if coeff == 0:
            continue
        idx = 0
        for k, s in enumerate(points):
            if s <= d:
                idx = k
            else:
                break
        residue, q = _split_by_level(ring, coeff, ascent.pairs[idx][1])
        if q != 0:
            g = g - q * gens[idx].baxter(d - points[idx])
    return g


def forced_element(algebra: RBAlgebra, top_degree: int, low_degree: int, top_coeff) -> RBElement:
    """The only possible member with the given initial term and lowest term.

    Over an integral domain of characteristic zero, if the ideal starts at
    ``top_degree`` with principal level generated by ``top_coeff``, a member
    with that initial term and support down to ``low_degree`` must have
    coefficients C(t-r, t-i) * w^(t-i) * top_coeff in each degree i."""
    ring = algebra.ring
    if ring.is_modular:
        raise ValueError("forced coefficients require an integral domain of characteristic 0")
    t, r = int(top_degree), int(low_degree)
    if r > t or r < 0:
        raise ValueError("need 0 <= low_degree <= top_degree")
    c_top = ring.coerce(top_coeff)
    if c_top == 0:
        raise ValueError("the top coefficient must be nonzero")
    terms = {}
    for i in range(r, t + 1):
        c = ring.mul(ring.coerce(comb(t - r, t - i)), ring.mul(ring.pow(algebra.weight, t - i), c_top))
        if c != 0:
            terms[i] = c
    return RBElement(algebra, terms)


def forced_element_residual(algebra: RBAlgebra, top_degree: int, low_degree: int, top_coeff) -> RBElement:
    """Residual of the elimination identity behind the forced shape.

    For f with the forced coefficients, (t+1) P(f) - a1 * f + w * r * f
    vanishes identically; a nonzero residual certifies a non-forced shape.
    """
    f = forced_element(algebra, top_degree, low_degree, top_coeff)
    t, r = int(top_degree), int(low_degree)
    g1 = (t + 1) * f.baxter() - algebra.monomial(1) * f
    return g1 + algebra.ring.mul(algebra.weight, algebra.ring.coerce(r)) * f


@dataclass(frozen=True)
class SupportReport:
    passed: bool
    starting_point: int
    counterexample: RBElement | None
    unit_levels_ok: bool | None


def weight_zero_support_check(state: SaturationState) -> SupportReport:
    """At weight zero over Z or Q, no member may have support below the
    starting point; over Q every level from the starting point on is the
    unit ideal.  Checks both against the computed span."""
    algebra = state.algebra
    ring = algebra.ring
    if algebra.weight != ring.zero:
        raise ValueError("the support check applies only at weight zero")
    if ring.is_modular:
        raise ValueError("the support check applies over Z or Q")
    if not state.stable:
        raise ValueError("a stable saturation is required")
    t = state.starting_point()
    for row in state.row_elements():
        if row.min_degree < t:
            return SupportReport(False, t, row, None)
    unit_ok = None
    if ring.is_rational:
        unit_ok = all(state.omegas[j].is_unit for j in range(t, state.bound + 1))
    return SupportReport(unit_ok is not False, t, None, unit_ok)


def z_ascent_pairs(data) -> list:
    """Integer ascent data as (point, positive generator) pairs, with the
    divisibility descent between consecutive generators validated."""
    if isinstance(data, AscentSet):
        if not (data.ring == CoeffRing.integers()):
            raise ValueError("integer ascent data requires the ring Z")
        pairs = [(s, level.gen) for s, level in data.pairs]
    else:
        pairs = [(int(s), int(w)) for s, w in data]
    prev_s, prev_w = -1, 0
    for s, w in pairs:
        if s <= prev_s:
            raise ValueError("ascent points must strictly increase")
        if w <= 0:
            raise ValueError("ascent generators must be positive")
        if prev_w and (w == prev_w or prev_w % w != 0):
            raise ValueError(
                f"corrupted ascent data: {w} must properly divide {prev_w}"
            )
        prev_s, prev_w = s, w
    return pairs


def _is_prime_int(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2 if d > 2 else 1
    return True


@dataclass(frozen=True)
class PrimeResult:
    prime: bool
    quotient: str
    witness: tuple | None


def _zero_divisor_witness(ascent: AscentSet):
    """Search monomial pairs for f, g outside the ideal with f*g inside.

    The ideal is homogeneous, so primality can be decided on homogeneous
    elements alone, and the homogeneous elements here are exactly the
    monomials; degrees up to (last point + largest generator) cover both
    failure modes (composite generator in degree zero; vanishing binomials
    when the starting point is positive or the generator is a prime p,
    where the first vanishing binomial sits at degree p).
    """
    ideal = HomogeneousIdeal(ascent)
    algebra = RBAlgebra(ascent.ring, 0)
    max_deg = ascent.pairs[-1][0] + max(level.gen for _, level in ascent.pairs)
    max_coeff = max(2, max(level.gen for _, level in ascent.pairs))
    for total in range(2 * max_deg + 1):
        for i in range(0, total // 2 + 1):
            j = total - i
            if j > max_deg:
                continue
            for c in range(1, max_coeff + 1):
                f = algebra.monomial(i, c)
                if ideal.contains(f):
                    continue
                for d in range(1, max_coeff + 1):
                    g = algebra.monomial(j, d)
                    if ideal.contains(g):
                        continue
                    if ideal.contains(f * g):
                        return (f, g)
    return None


def classify_prime(ascent: AscentSet, weight=0) -> PrimeResult:
    """Decide primality of the weight-zero Rota-Baxter ideal over Z with the
    given ascent set.

    The proper nonzero primes are exactly the ideal with ascent {(1, Z)}
    (quotient Z) and the ideals {(0, pZ), (1, Z)} for a prime p (quotient
    Z/p).  Non-prime verdicts come with a zero-divisor witness pair.
    """
    ring = ascent.ring
    if ring != CoeffRing.integers():
        raise ValueError("prime classification is only available over Z")
    if CoeffRing.integers().coerce(weight) != 0:
        raise ValueError("prime classification is only available at weight 0")
    pairs = z_ascent_pairs(ascent)
    if pairs == [(0, 1)]:
        raise ValueError("the whole algebra is not a proper ideal")
    if pairs == [(1, 1)]:
        return PrimeResult(True, "Z", None)
    if len(pairs) == 2 and pairs[1] == (1, 1) and pairs[0][0] == 0 and _is_prime_int(pairs[0][1]):
        return PrimeResult(True, f"Z/{pairs[0][1]}", None)
    witness = _zero_divisor_witness(ascent)
    return PrimeResult(False, str(quotient_shape(ascent)), witness)
