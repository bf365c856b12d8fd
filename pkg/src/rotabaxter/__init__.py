"""Exact computer algebra for the free Rota-Baxter algebra on its base ring.

The package covers the weight-deformed divided-power product and the
Rota-Baxter operator over Z, Q and Z/n; level ideals, ascent sets and
initial ideals of finitely generated Rota-Baxter ideals; the homogeneous
classification with canonical quotient representatives; prime ideals over
Z at weight zero; characteristics of concrete finite Rota-Baxter rings;
and the divided-power bridge to Q[x].
"""

from .algebra import NEG_INF, RBAlgebra, RBElement, recursive_product
from .classify import (
    HomogeneousIdeal,
    PrimeResult,
    QuotientShape,
    SupportReport,
    canonical_representative,
    classify_prime,
    forced_element,
    forced_element_residual,
    homogeneous_membership,
    ideal_from_ascent,
    quotient_shape,
    weight_zero_support_check,
    z_ascent_pairs,
)
from .divided_powers import RatPoly, from_poly, to_poly
from .finite_rings import (
    CharacteristicResult,
    FiniteRing,
    RBOperator,
    characteristic,
    enumerate_rb_operators,
    structure_map_apply,
    structure_map_images,
    verify_rb_operator,
)
from .ideals import MEMBER, NOT_MEMBER, UNKNOWN, AscentSet, SaturationState, saturate
from .parse import ParseError, parse_ascent_pairs, parse_expression
from .rings import CoeffRing, KIdeal

__all__ = [
    "NEG_INF",
    "MEMBER",
    "NOT_MEMBER",
    "UNKNOWN",
    "CoeffRing",
    "KIdeal",
    "RBAlgebra",
    "RBElement",
    "recursive_product",
    "AscentSet",
    "SaturationState",
    "saturate",
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
    "FiniteRing",
    "RBOperator",
    "verify_rb_operator",
    "enumerate_rb_operators",
    "structure_map_images",
    "structure_map_apply",
    "CharacteristicResult",
    "characteristic",
    "RatPoly",
    "to_poly",
    "from_poly",
    "ParseError",
    "parse_expression",
    "parse_ascent_pairs",
]
