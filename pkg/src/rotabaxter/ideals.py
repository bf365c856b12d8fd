"""Finitely generated Rota-Baxter ideals: saturation, level ideals, ascent sets.

For an ideal I closed under the Rota-Baxter operator, the level ideal at
degree j is the set of degree-j coefficients of members of degree at most
j.  Levels form a non-decreasing chain of coefficient-ring ideals; the
ascent set records the points where the chain strictly jumps, together
with the ideals it jumps to, and is a complete invariant of the
homogeneous case.

No finite procedure is known that certifies the levels of an arbitrary
finitely generated ideal, so the engine works up to a degree horizon:
close the generators under the Rota-Baxter operator and under left
multiplication by basis monomials, discarding anything whose degree
exceeds ``bound + slack``; echelonize exactly; read each level off the
pivot entry at its degree.  The horizon grows until the reported levels
stop changing between two consecutive slacks.  Reported levels are always
sub-ideals of the true ones; ``stable`` records that the heuristic
converged, not a termination proof.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .algebra import RBAlgebra, RBElement
from .lattice import RowEchelon
from .rings import CoeffRing, KIdeal

__all__ = [
    "MEMBER",
    "NOT_MEMBER",
    "UNKNOWN",
    "AscentSet",
    "SaturationState",
    "saturate",
]

MEMBER = "member"
NOT_MEMBER = "not-member-up-to-bound"
UNKNOWN = "unknown"


@dataclass(frozen=True)
class AscentSet:
    """Strictly increasing jump points of the level-ideal chain.

    ``pairs`` lists (point, level) with points strictly increasing and
    levels strictly increasing nonzero ideals; validation enforces both.
    """

    ring: CoeffRing
    pairs: tuple

    def __post_init__(self):
        pairs = tuple((int(s), lvl) for s, lvl in self.pairs)
        object.__setattr__(self, "pairs", pairs)
        if not pairs:
            raise ValueError("an ascent set has at least one pair")
        prev_point = -1
        prev_level = KIdeal.zero(self.ring)
        for s, level in pairs:
            if not isinstance(level, KIdeal) or level.ring != self.ring:
                raise ValueError("ascent levels must be ideals of the ascent ring")
            if s <= prev_point or s < 0:
                raise ValueError("ascent points must be strictly increasing and nonnegative")
            if not (prev_level < level):
                raise ValueError(
                    f"ascent levels must strictly increase ({prev_level} before {level})"
                )
            prev_point, prev_level = s, level

    @classmethod
    def from_gen_pairs(cls, ring: CoeffRing, pairs) -> "AscentSet":
        """Build from (point, generator-value) pairs."""
        return cls(ring, tuple((int(s), KIdeal.of(ring, g)) for s, g in pairs))

    @property
    def points(self) -> tuple:
        return tuple(s for s, _ in self.pairs)

    @property
    def starting_point(self) -> int:
        return self.pairs[0][0]

    def level_at(self, degree: int) -> KIdeal:
        """The level ideal at ``degree``: zero below the first point, then
        the step function determined by the pairs."""
        level = KIdeal.zero(self.ring)
        for s, lvl in self.pairs:
            if s > degree:
                break
            level = lvl
        return level

    def __iter__(self):
        return iter(self.pairs)

    def __len__(self):
        return len(self.pairs)

    def __str__(self):
        inner = ", ".join(f"({s}, {lvl})" for s, lvl in self.pairs)
        return "{" + inner + "}"


def _vector(element: RBElement, top: int) -> list:
    # Column 0 holds the TOP degree so leading terms become pivots.
    vec = [element.algebra.ring.zero] * (top + 1)
    for d, c in element._terms.items():
        vec[top - d] = c
    return vec


def _element(algebra: RBAlgebra, vec, top: int) -> RBElement:
    return algebra.element((top - col, val) for col, val in enumerate(vec[: top + 1]) if val)


def _closed_echelon(algebra: RBAlgebra, generators, top: int, max_candidates: int):
    """Span of the closure of the generators under the Rota-Baxter operator
    and under left multiplication by basis monomials, truncated at degree
    ``top`` (whole elements above the horizon are discarded, never clipped:
    every tracked row is a genuine ideal member)."""
    ring = algebra.ring
    moduli = [ring.modulus] * (top + 1) if ring.is_modular else None
    ech = RowEchelon(top + 1, field=ring.is_field, moduli=moduli)
    queue = deque(generators)
    seen = set()
    pushes = 0
    while queue:
        f = queue.popleft()
        if not f or f.degree > top:
            continue
        key = tuple(f.sorted_terms())
        if key in seen:
            continue
        seen.add(key)
        if not ech.insert(_vector(f, top)):
            continue
        # Images of a vector already in the span are combinations of images
        # of previously processed vectors, so only span-growing candidates
        # need to spawn.
        images = [f.baxter()]
        fdeg = int(f.degree)
        for n in range(1, top + 1):
            if not ring.is_modular and fdeg + n > top:
                break
            images.append(algebra.monomial(n) * f)
        for g in images:
            if g and g.degree <= top:
                queue.append(g)
                pushes += 1
                if pushes > max_candidates:
                    ech.canonicalize()
                    return ech, f"candidate budget exceeded ({max_candidates})"
    ech.canonicalize()
    return ech, None


def _extract_omegas(ring: CoeffRing, ech: RowEchelon, top: int, bound: int) -> tuple:
    out = []
    for j in range(bound + 1):
        pivot = ech.pivot_value(top - j)
        out.append(KIdeal.of(ring, pivot if pivot is not None else 0))
    return tuple(out)


class SaturationState:
    """Echelonized span of a finitely generated Rota-Baxter ideal up to a
    degree horizon, with per-degree level ideals and a stability flag."""

    def __init__(self, algebra, generators, bound, slack_used, stable, omegas, ech, top, diagnostic):
        self.algebra = algebra
        self.generators = generators
        self.bound = bound
        self.slack_used = slack_used
        self.stable = stable
        self.omegas = omegas
        self.diagnostic = diagnostic
        self._ech = ech
        self._top = top

    @property
    def top_degree(self) -> int:
        """Highest degree actually tracked (bound + retained slack)."""
        return self._top

    def omega(self, j: int) -> KIdeal:
        """Level ideal at degree j: exact when stable, otherwise a sub-ideal
        of the true level."""
        if not 0 <= j <= self.bound:
            raise ValueError(f"degree {j} outside the report bound {self.bound}")
        return self.omegas[j]

    def starting_point(self) -> int:
        for j, level in enumerate(self.omegas):
            if not level.is_zero:
                return j
        raise ValueError("no ascent within bound")

    def ascent_set(self, allow_unstable: bool = False) -> AscentSet:
        if not self.stable and not allow_unstable:
            raise ValueError(
                "saturation did not stabilize; pass allow_unstable=True for an "
                "up-to-bound ascent set"
            )
        prev = KIdeal.zero(self.algebra.ring)
        pairs = []
        for j, level in enumerate(self.omegas):
            if not (prev <= level):
                raise RuntimeError("level chain broke: engine invariant violated")
            if level != prev:
                pairs.append((j, level))
                prev = level
        if not pairs:
            raise ValueError("no ascent within bound")
        return AscentSet(self.algebra.ring, tuple(pairs))

    def initial_ideal(self, allow_unstable: bool = False) -> AscentSet:
        """Ascent set of the initial ideal, which equals the ascent set of
        the ideal itself; being homogeneous, the initial ideal is completely
        described by it (degree d carries the level ideal at d)."""
        return self.ascent_set(allow_unstable=allow_unstable)

    def membership(self, f: RBElement) -> str:
        if f.algebra != self.algebra:
            raise ValueError("mismatched algebra contexts")
        if not f:
            return MEMBER
        if f.degree > self.bound:
            raise ValueError(f"degree {f.degree} exceeds the report bound {self.bound}")
        if self._ech.contains(_vector(f, self._top)):
            return MEMBER
        return NOT_MEMBER if self.stable else UNKNOWN

    def ascent_generating_set(self) -> list:
        """One member per ascending point whose initial term generates the
        level there; such a set generates the whole ideal.  All supported
        rings are principal, so one element per point suffices."""
        ascent = self.ascent_set()
        out = []
        for s, level in ascent.pairs:
            row = self._ech.pivot_row(self._top - s)
            f = _element(self.algebra, row, self._top)
            lead = f.initial_term()
            if lead is None or lead[0] != s or KIdeal.of(self.algebra.ring, lead[1]) != level:
                raise RuntimeError("pivot row does not realize its level")
            out.append(f)
        return out

    def row_elements(self) -> list:
        """Every echelon row as an element, ascending pivot degree.  Rows may
        exceed the report bound (they live up to the horizon); each is a
        certified member of the ideal."""
        rows = self._ech.rows()
        return [_element(self.algebra, row, self._top) for _, row in sorted(rows, reverse=True)]

    def __repr__(self):
        flag = "stable" if self.stable else "unstable"
        return f"<SaturationState bound={self.bound} {flag} omegas={[str(o) for o in self.omegas]}>"


def saturate(
    generators,
    bound: int,
    *,
    slack_start: int = 4,
    slack_step: int = 2,
    slack_max: int = 12,
    max_candidates: int = 200_000,
) -> SaturationState:
    """Close, echelonize and stabilize a finitely generated ideal.

    ``bound`` is the report bound: levels and membership are answered for
    degrees up to it.  A bound at least the maximum generator degree is
    recommended (not required; below it the report may show no ascent).
    The horizon runs at bound + slack for slack = start, start+step, ...
    and stops as soon as two consecutive runs report identical levels
    (``slack_used`` is the first slack of the agreeing pair) or gives up at
    ``slack_max`` with ``stable=False`` and a diagnostic.
    """
    gens = tuple(generators)
    if not gens:
        raise ValueError("at least one generator is required")
    algebra = gens[0].algebra
    for g in gens:
        if not isinstance(g, RBElement) or g.algebra != algebra:
            raise ValueError("generators must share one algebra context")
        if not g:
            raise ValueError("generators must be nonzero")
    bound = int(bound)
    if bound < 0:
        raise ValueError("bound must be nonnegative")
    if slack_start < 0 or slack_step <= 0:
        raise ValueError("slack parameters must be positive")

    slacks = list(range(slack_start, slack_max + 1, slack_step)) or [max(slack_max, 0)]
    prev = None  # (omegas, ech, slack, top)
    for slack in slacks:
        top = bound + slack
        ech, diagnostic = _closed_echelon(algebra, gens, top, max_candidates)
        omegas = _extract_omegas(algebra.ring, ech, top, bound)
        if diagnostic is not None:
            return SaturationState(
                algebra, gens, bound, slack, False, omegas, ech, top, diagnostic
            )
        if prev is not None and omegas == prev[0]:
            return SaturationState(
                algebra, gens, bound, prev[2], True, omegas, ech, top, None
            )
        prev = (omegas, ech, slack, top)
    omegas, ech, slack, top = prev
    return SaturationState(
        algebra,
        gens,
        bound,
        slack,
        False,
        omegas,
        ech,
        top,
        f"levels kept changing up to slack {slack}",
    )
