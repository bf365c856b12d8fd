"""Exact coefficient rings (Z, Q, Z/n) and their ideal lattice.

Every supported ring is a principal ideal ring, so an ideal is identified
by a canonical generator and the whole ideal lattice reduces to gcd
arithmetic on generators.  Ring values are plain ``int`` (Z, and Z/n with
residues kept in ``[0, n)``) or ``Fraction`` (Q); no floating point is
involved anywhere.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

__all__ = ["CoeffRing", "KIdeal"]


class CoeffRing:
    """The integers, the rationals, or the integers modulo n (n >= 2)."""

    __slots__ = ("_modulus", "_rational")

    def __init__(self, *, rational: bool = False, modulus: int | None = None):
        if rational and modulus is not None:
            raise ValueError("a coefficient ring cannot be both rational and modular")
        if modulus is not None:
            modulus = int(modulus)
            if modulus < 2:
                raise ValueError("modulus must be at least 2")
        self._rational = bool(rational)
        self._modulus = modulus

    @classmethod
    def integers(cls) -> "CoeffRing":
        return cls()

    @classmethod
    def rationals(cls) -> "CoeffRing":
        return cls(rational=True)

    @classmethod
    def integers_mod(cls, n: int) -> "CoeffRing":
        return cls(modulus=n)

    @classmethod
    def from_descriptor(cls, text: str) -> "CoeffRing":
        """Parse the ring descriptor grammar: ``z``, ``q`` or ``z:<n>``."""
        text = text.strip().lower()
        if text == "z":
            return cls.integers()
        if text == "q":
            return cls.rationals()
        if text.startswith("z:"):
            try:
                n = int(text[2:])
            except ValueError:
                raise ValueError(f"bad modulus in ring descriptor {text!r}") from None
            return cls.integers_mod(n)
        raise ValueError(f"unknown ring descriptor {text!r} (expected z, q or z:<n>)")

    @property
    def descriptor(self) -> str:
        if self._rational:
            return "q"
        if self._modulus is not None:
            return f"z:{self._modulus}"
        return "z"

    @property
    def modulus(self) -> int | None:
        return self._modulus

    @property
    def is_rational(self) -> bool:
        return self._rational

    @property
    def is_field(self) -> bool:
        return self._rational

    @property
    def is_modular(self) -> bool:
        return self._modulus is not None

    def coerce(self, value):
        """Canonicalize ``value`` as an element of this ring.

        Accepts ints, Fractions (Q, or integer-valued elsewhere) and the
        string forms ``"3"``, ``"-4"``, ``"3/2"`` (Q only).
        """
        if isinstance(value, str):
            value = value.strip()
            if "/" in value:
                value = Fraction(value)
            else:
                value = int(value)
        if isinstance(value, bool):
            value = int(value)
        if isinstance(value, Fraction):
            if self._rational:
                return value
            if value.denominator != 1:
                raise ValueError(f"{value} is not an element of {self!r}")
            value = int(value)
        if not isinstance(value, int):
            raise TypeError(f"cannot coerce {value!r} into {self!r}")
        if self._rational:
            return Fraction(value)
        if self._modulus is not None:
            return value % self._modulus
        return value

    @property
    def zero(self):
        return Fraction(0) if self._rational else 0

    @property
    def one(self):
        return Fraction(1) if self._rational else 1

    def add(self, a, b):
        c = a + b
        return c % self._modulus if self._modulus is not None else c

    def mul(self, a, b):
        c = a * b
        return c % self._modulus if self._modulus is not None else c

    def neg(self, a):
        return (-a) % self._modulus if self._modulus is not None else -a

    def pow(self, a, k: int):
        if k < 0:
            raise ValueError("negative powers are not supported")
        if self._modulus is not None:
            return pow(a, k, self._modulus)
        return a**k

    def coeff_str(self, value) -> str:
        return str(value)

    def __eq__(self, other):
        return (
            isinstance(other, CoeffRing)
            and self._rational == other._rational
            and self._modulus == other._modulus
        )

    def __hash__(self):
        return hash((self._rational, self._modulus))

    def __repr__(self):
        return f"CoeffRing({self.descriptor!r})"


@dataclass(frozen=True)
class KIdeal:
    """An ideal of a coefficient ring, stored by its canonical generator.

    Z: nonnegative generator.  Q: 0 (zero ideal) or 1 (unit ideal).
    Z/n: 0 for the zero ideal, otherwise a positive divisor of n below n.
    Equal ideals always carry equal generators, so structural equality is
    ideal equality.
    """

    ring: CoeffRing
    gen: int

    def __post_init__(self):
        gen = self.gen
        if not isinstance(gen, int) or gen < 0:
            raise ValueError(f"generator must be a nonnegative int, got {gen!r}")
        if self.ring.is_rational and gen not in (0, 1):
            raise ValueError("rational ideals are generated by 0 or 1")
        n = self.ring.modulus
        if n is not None and gen != 0 and (gen >= n or n % gen != 0):
            raise ValueError(f"{gen} is not a canonical ideal generator mod {n}")

    @classmethod
    def zero(cls, ring: CoeffRing) -> "KIdeal":
        return cls(ring, 0)

    @classmethod
    def unit(cls, ring: CoeffRing) -> "KIdeal":
        return cls(ring, 1)

    @classmethod
    def of(cls, ring: CoeffRing, value) -> "KIdeal":
        """The ideal generated by ``value``."""
        value = ring.coerce(value)
        if ring.is_rational:
            return cls(ring, 0 if value == 0 else 1)
        value = int(value)
        n = ring.modulus
        if n is not None:
            g = math.gcd(value % n, n)
            return cls(ring, 0 if g == n else g)
        return cls(ring, abs(value))

    @property
    def is_zero(self) -> bool:
        return self.gen == 0

    @property
    def is_unit(self) -> bool:
        return self.gen == 1

    def _check_ring(self, other: "KIdeal"):
        if self.ring != other.ring:
            raise ValueError("mismatched coefficient rings")

    def __add__(self, other: "KIdeal") -> "KIdeal":
        """The smallest ideal containing both summands (gcd of generators)."""
        self._check_ring(other)
        n = self.ring.modulus
        if n is not None:
            g = math.gcd(self.gen or n, other.gen or n)
            return KIdeal(self.ring, 0 if g == n else g)
        if self.ring.is_rational:
            return KIdeal(self.ring, max(self.gen, other.gen))
        return KIdeal(self.ring, math.gcd(self.gen, other.gen))

    def __le__(self, other: "KIdeal") -> bool:
        """Containment: self is a subset of other."""
        self._check_ring(other)
        if self.gen == 0:
            return True
        if other.gen == 0:
            return False
        return self.gen % other.gen == 0

    def __lt__(self, other: "KIdeal") -> bool:
        return self <= other and self != other

    def __contains__(self, value) -> bool:
        value = self.ring.coerce(value)
        if value == 0:
            return True
        if self.gen == 0:
            return False
        if self.ring.is_rational:
            return True
        return int(value) % self.gen == 0

    def __str__(self):
        if self.gen == 0:
            return "0"
        if self.ring.is_rational:
            return "Q"
        n = self.ring.modulus
        if n is not None:
            return f"({self.gen}) mod {n}"
        return "Z" if self.gen == 1 else f"{self.gen}Z"
