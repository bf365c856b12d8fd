"""Concrete finite Rota-Baxter rings and their characteristics.

A finite ring is presented by the component orders of its additive group
(a product of cyclic groups), a multiplication table on the additive
generators, and a unit; ring laws are checked exhaustively on generators
and spot-checked on random triples at construction.  Operators are integer
matrices acting on the additive generators; the Rota-Baxter identity for a
given weight is verified by brute force over all pairs.

The characteristic of a verified pair is the kernel of the unique
structure map from the free Rota-Baxter ring: the unit maps to the unit
and the operator intertwines.  Its level ideal at degree j is b*Z for the
least b > 0 such that b times the j-th image lies in the subgroup
generated by the earlier images; the ascent set of those levels is exact,
with stabilization certified by the eventual periodicity of the image
orbit plus the ascending chain condition on integer ideals.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from itertools import product

from .algebra import RBAlgebra, RBElement
from .ideals import AscentSet
from .lattice import RowEchelon
from .rings import CoeffRing, KIdeal

__all__ = [
    "FiniteRing",
    "RBOperator",
    "verify_rb_operator",
    "enumerate_rb_operators",
    "structure_map_images",
    "structure_map_apply",
    "CharacteristicResult",
    "characteristic",
]


class FiniteRing:
    """A finite commutative unitary ring on Z_{n_1} x ... x Z_{n_k}."""

    __slots__ = ("orders", "unit", "table")

    def __init__(self, orders, unit, table, *, check: bool = True):
        self.orders = tuple(int(n) for n in orders)
        if not self.orders or any(n < 1 for n in self.orders):
            raise ValueError("component orders must be positive")
        k = len(self.orders)
        self.unit = self._norm(unit)
        rows = tuple(tuple(self._norm(cell) for cell in row) for row in table)
        if len(rows) != k or any(len(row) != k for row in rows):
            raise ValueError("the multiplication table must be k x k")
        self.table = rows
        if check:
            self._validate()

    @classmethod
    def zmod(cls, n: int) -> "FiniteRing":
        return cls((n,), (1,), (((1,),),))

    @classmethod
    def product_of_zmods(cls, orders) -> "FiniteRing":
        """Componentwise product ring Z_{n_1} x ... x Z_{n_k}."""
        orders = tuple(int(n) for n in orders)
        k = len(orders)
        zero = (0,) * k
        table = tuple(
            tuple(tuple(1 if (i == j and t == i) else 0 for t in range(k)) for j in range(k))
            for i in range(k)
        )
        _ = zero
        return cls(orders, (1,) * k, table)

    # -- group and ring arithmetic ----------------------------------------

    def _norm(self, x) -> tuple:
        x = tuple(int(v) for v in x)
        if len(x) != len(self.orders):
            raise ValueError("element arity mismatch")
        return tuple(v % n for v, n in zip(x, self.orders))

    @property
    def zero(self) -> tuple:
        return (0,) * len(self.orders)

    @property
    def size(self) -> int:
        return math.prod(self.orders)

    def elements(self):
        return product(*(range(n) for n in self.orders))

    def add(self, x, y) -> tuple:
        return tuple((a + b) % n for a, b, n in zip(x, y, self.orders))

    def neg(self, x) -> tuple:
        return tuple((-a) % n for a, n in zip(x, self.orders))

    def scale(self, k: int, x) -> tuple:
        return tuple((k * a) % n for a, n in zip(x, self.orders))

    def mul(self, x, y) -> tuple:
        acc = self.zero
        for i, xi in enumerate(x):
            if not xi:
                continue
            for j, yj in enumerate(y):
                if yj:
                    acc = self.add(acc, self.scale(xi * yj, self.table[i][j]))
        return acc

    def _generator(self, i: int) -> tuple:
        return tuple(1 if t == i else 0 for t in range(len(self.orders)))

    def _validate(self):
        k = len(self.orders)
        gens = [self._generator(i) for i in range(k)]
        for i in range(k):
            for j in range(k):
                cell = self.table[i][j]
                # Bilinear well-definedness: the product of torsion generators
                # must have compatible additive order.
                if self.scale(self.orders[i], cell) != self.zero:
                    raise ValueError(f"table entry ({i},{j}) breaks well-definedness")
                if self.scale(self.orders[j], cell) != self.zero:
                    raise ValueError(f"table entry ({i},{j}) breaks well-definedness")
                if cell != self.table[j][i]:
                    raise ValueError("multiplication must be commutative")
        for j in range(k):
            if self.mul(self.unit, gens[j]) != gens[j]:
                raise ValueError("unit law fails on a generator")
        for a in gens:
            for b in gens:
                for c in gens:
                    if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)):
                        raise ValueError("multiplication is not associative")
        rng = random.Random(0)
        pool = [tuple(rng.randrange(n) for n in self.orders) for _ in range(24)]
        for _ in range(200):
            a, b, c = rng.choice(pool), rng.choice(pool), rng.choice(pool)
            if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)):
                raise ValueError("multiplication is not associative")
            if self.mul(a, self.add(b, c)) != self.add(self.mul(a, b), self.mul(a, c)):
                raise ValueError("multiplication is not distributive")

    def __repr__(self):
        return f"FiniteRing(orders={self.orders})"


class RBOperator:
    """An additive endomorphism given by integer images of the generators."""

    __slots__ = ("matrix",)

    def __init__(self, matrix):
        self.matrix = tuple(tuple(int(v) for v in row) for row in matrix)

    @classmethod
    def scaling(cls, c: int) -> "RBOperator":
        """Multiplication by c on a one-component ring."""
        return cls(((c,),))

    def is_well_defined(self, ring: FiniteRing) -> bool:
        k = len(ring.orders)
        if len(self.matrix) != k or any(len(row) != k for row in self.matrix):
            return False
        for i, row in enumerate(self.matrix):
            if ring.scale(ring.orders[i], ring._norm(row)) != ring.zero:
                return False
        return True

    def apply(self, ring: FiniteRing, x) -> tuple:
        acc = ring.zero
        for i, xi in enumerate(x):
            if xi:
                acc = ring.add(acc, ring.scale(xi, ring._norm(self.matrix[i])))
        return acc

    def __repr__(self):
        return f"RBOperator({self.matrix})"


def verify_rb_operator(ring: FiniteRing, op: RBOperator, weight: int) -> bool:
    """Exhaustively check P(x)P(y) = P(xP(y)) + P(P(x)y) + w P(xy)."""
    if not op.is_well_defined(ring):
        raise ValueError("operator is not well defined on the additive group")
    weight = int(weight)
    images = {x: op.apply(ring, x) for x in ring.elements()}
    for x in ring.elements():
        px = images[x]
        for y in ring.elements():
            py = images[y]
            lhs = ring.mul(px, py)
            rhs = ring.add(
                images[ring.mul(x, py)],
                ring.add(images[ring.mul(px, y)], ring.scale(weight, images[ring.mul(x, y)])),
            )
            if lhs != rhs:
                return False
    return True


def enumerate_rb_operators(n: int, weight: int) -> list:
    """All residues c such that multiplication by c is a Rota-Baxter
    operator of the given weight on Z/n."""
    if n < 2:
        raise ValueError("the modulus must be at least 2")
    ring = FiniteRing.zmod(n)
    return [c for c in range(n) if verify_rb_operator(ring, RBOperator.scaling(c), weight)]


def structure_map_images(ring: FiniteRing, op: RBOperator, weight: int, upto: int) -> list:
    """Images of the basis monomials under the unique structure map: the
    unit first, then repeated application of the operator.  Refuses to run
    on an operator that fails the Rota-Baxter identity."""
    if not verify_rb_operator(ring, op, weight):
        raise ValueError("operator fails the Rota-Baxter identity for this weight")
    images = [ring.unit]
    for _ in range(int(upto)):
        images.append(op.apply(ring, images[-1]))
    return images


def structure_map_apply(ring: FiniteRing, images, f: RBElement) -> tuple:
    """Evaluate the structure map on an element, given basis images."""
    acc = ring.zero
    for d, c in f.support():
        acc = ring.add(acc, ring.scale(int(c), images[d]))
    return acc


def _divisors(n: int) -> list:
    out = [d for d in range(1, n + 1) if n % d == 0]
    return out


@dataclass(frozen=True)
class CharacteristicResult:
    """Kernel ascent data of the structure map into a finite ring."""

    ascent: AscentSet
    omegas: tuple
    stable: bool
    images: tuple
    witnesses: tuple

    def __str__(self):
        flag = "stable" if self.stable else "unstable"
        return f"{self.ascent} {flag}"


def characteristic(ring: FiniteRing, op: RBOperator, weight: int, bound: int) -> CharacteristicResult:
    """Ascent set of the kernel of the structure map into (ring, op).

    The level at degree j is b*Z for the least b > 0 with b * image_j in
    the subgroup spanned by earlier images; such b always exists in a
    finite ring.  The image orbit is eventually periodic and the levels
    descend by divisibility, so once the spanned subgroup survives a full
    orbit period unchanged no later level can jump; that certificate sets
    ``stable``.  Each ascent pair carries a witness: an explicit kernel
    element whose initial term realizes the level, reconstructed from the
    elimination.
    """
    bound = int(bound)
    if bound < 0:
        raise ValueError("bound must be nonnegative")
    images = structure_map_images(ring, op, weight, 0)  # verifies the operator
    seen = {images[0]: 0}
    while True:
        nxt = op.apply(ring, images[-1])
        if nxt in seen:
            orbit_start = seen[nxt]
            period = len(images) - orbit_start
            break
        seen[nxt] = len(images)
        images.append(nxt)

    def image(j: int) -> tuple:
        if j < len(images):
            return images[j]
        return images[orbit_start + (j - orbit_start) % period]

    k = len(ring.orders)
    exponent = math.lcm(*ring.orders)
    divisors = _divisors(exponent)
    span = RowEchelon(k, moduli=list(ring.orders))
    betas = []
    last_change = -1
    cap = max(bound, orbit_start + period) + period * (ring.size.bit_length() + 2) + 2
    j = 0
    while True:
        v = image(j)
        beta = next(b for b in divisors if span.contains([b * x for x in v]))
        betas.append(beta)
        if span.insert(list(v)):
            last_change = j
        j += 1
        if j > max(bound, orbit_start + period) and j - 1 - last_change >= period:
            break
        if j > cap:
            break
    quiet = j - 1 - last_change >= period and j > orbit_start + period
    # Once the subgroup is quiet over a full period the levels repeat, and
    # divisibility-monotone periodic levels are constant; a non-constant
    # observed tail would contradict that.
    stable = quiet and len(set(betas[last_change + 1 :])) <= 1

    zring = CoeffRing.integers()
    prev = KIdeal.zero(zring)
    pairs = []
    for jj, beta in enumerate(betas):
        level = KIdeal.of(zring, beta)
        if not (prev <= level):
            raise RuntimeError("kernel level chain broke")
        if level != prev:
            pairs.append((jj, level))
            prev = level
    ascent = AscentSet(zring, tuple(pairs))

    algebra = RBAlgebra(zring, weight)
    witnesses = []
    for s, level in pairs:
        solver = RowEchelon(k, moduli=list(ring.orders), payload=s)
        for i in range(s):
            solver.insert(list(image(i)) + [1 if t == i else 0 for t in range(s)])
        target = [level.gen * x for x in image(s)] + [0] * s
        rem = solver.reduce(target)
        if any(rem[:k]):
            raise RuntimeError("level witness solve failed")
        coeffs = {s: level.gen}
        for i in range(s):
            coeffs[i] = rem[k + i]  # negated combination coefficient
        witness = algebra.element(coeffs)
        if structure_map_apply(ring, [image(i) for i in range(s + 1)], witness) != ring.zero:
            raise RuntimeError("level witness fails to vanish")
        witnesses.append(witness)

    omegas = tuple(KIdeal.of(zring, betas[j]) for j in range(bound + 1))
    return CharacteristicResult(
        ascent=ascent,
        omegas=omegas,
        stable=stable,
        images=tuple(image(i) for i in range(bound + 1)),
        witnesses=tuple(witnesses),
    )
