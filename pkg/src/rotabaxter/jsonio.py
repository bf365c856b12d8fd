"""JSON forms for elements, ideal inputs, reports and finite rings.

Coefficients and generators travel as strings so arbitrary precision
survives any JSON reader.  Element form: [[degree, "coeff"], ...] in
descending degree.
"""

from __future__ import annotations

from .algebra import RBAlgebra, RBElement
from .classify import PrimeResult
from .finite_rings import FiniteRing, RBOperator
from .ideals import AscentSet, SaturationState
from .rings import CoeffRing, KIdeal

__all__ = [
    "element_pairs",
    "element_from_pairs",
    "ideal_input_to_dict",
    "ideal_input_from_dict",
    "saturation_report",
    "ascent_to_dict",
    "ascent_from_dict",
    "prime_report",
    "finite_ring_from_dict",
]


def element_pairs(f: RBElement) -> list:
    return f.to_pairs()


def element_from_pairs(algebra: RBAlgebra, pairs) -> RBElement:
    return algebra.element((int(d), c) for d, c in pairs)


def ideal_input_to_dict(algebra: RBAlgebra, generators, bound: int) -> dict:
    return {
        "ring": algebra.ring.descriptor,
        "weight": algebra.ring.coeff_str(algebra.weight),
        "generators": [element_pairs(g) for g in generators],
        "bound": int(bound),
    }


def ideal_input_from_dict(data: dict):
    """Returns (algebra, generators, bound)."""
    ring = CoeffRing.from_descriptor(data["ring"])
    algebra = RBAlgebra(ring, data.get("weight", 0))
    generators = [element_from_pairs(algebra, pairs) for pairs in data["generators"]]
    return algebra, generators, int(data["bound"])


def saturation_report(state: SaturationState) -> dict:
    report = {
        "omegas": [str(level.gen) for level in state.omegas],
        "ascent": [[s, str(level.gen)] for s, level in state.ascent_set(allow_unstable=True).pairs],
        "stable": state.stable,
        "slack_used": state.slack_used,
    }
    if state.diagnostic:
        report["diagnostic"] = state.diagnostic
    return report


def ascent_to_dict(ascent: AscentSet) -> dict:
    return {
        "ring": ascent.ring.descriptor,
        "pairs": [[s, str(level.gen)] for s, level in ascent.pairs],
    }


def ascent_from_dict(data: dict) -> AscentSet:
    ring = CoeffRing.from_descriptor(data["ring"])
    return AscentSet(
        ring, tuple((int(s), KIdeal(ring, int(gen))) for s, gen in data["pairs"])
    )


def prime_report(result: PrimeResult) -> dict:
    report = {"prime": result.prime, "quotient": result.quotient}
    if result.witness is not None:
        report["witness"] = [str(result.witness[0]), str(result.witness[1])]
    return report


def finite_ring_from_dict(data: dict):
    """Ring file form: {"orders": [...], "unit": [...], "mult": [[elem...]...],
    "operator": [[int...]...]}; returns (FiniteRing, RBOperator or None)."""
    ring = FiniteRing(data["orders"], data["unit"], data["mult"])
    op = RBOperator(data["operator"]) if "operator" in data else None
    return ring, op
