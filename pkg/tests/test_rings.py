"""Coefficient rings and their ideal lattice."""

import math
from fractions import Fraction
from itertools import product

import pytest

from rotabaxter import CoeffRing, KIdeal

Z = CoeffRing.integers()
Q = CoeffRing.rationals()
Z12 = CoeffRing.integers_mod(12)


def zmod_ideal_set(n, gen):
    """Brute-force residue subset of the ideal generated by gen in Z/n."""
    return frozenset((k * gen) % n for k in range(n))


class TestCoeffRing:
    def test_descriptor_roundtrip(self):
        for text in ("z", "q", "z:12", "z:2"):
            assert CoeffRing.from_descriptor(text).descriptor == text

    def test_bad_descriptors(self):
        for text in ("x", "z:1", "z:0", "z:abc", "q:3"):
            with pytest.raises(ValueError):
                CoeffRing.from_descriptor(text)

    def test_coerce(self):
        assert Z.coerce("-7") == -7
        assert Z12.coerce(-1) == 11
        assert Z12.coerce("25") == 1
        assert Q.coerce("3/6") == Fraction(1, 2)
        assert Q.coerce(4) == Fraction(4)
        with pytest.raises(ValueError):
            Z.coerce("3/2")
        with pytest.raises(TypeError):
            Z.coerce(1.5)

    def test_modular_arithmetic(self):
        assert Z12.add(7, 8) == 3
        assert Z12.mul(7, 8) == 8
        assert Z12.neg(5) == 7
        assert Z12.pow(5, 3) == 5

    def test_equality(self):
        assert Z == CoeffRing.integers()
        assert Z != Q and Z != Z12
        assert CoeffRing.integers_mod(12) == Z12


class TestKIdealCanonical:
    def test_of_integers(self):
        assert KIdeal.of(Z, -6).gen == 6
        assert KIdeal.of(Z, 0).gen == 0

    def test_of_rationals(self):
        assert KIdeal.of(Q, Fraction(5, 3)).gen == 1
        assert KIdeal.of(Q, 0).gen == 0

    def test_of_modular(self):
        assert KIdeal.of(Z12, 8).gen == 4
        assert KIdeal.of(Z12, 12).gen == 0
        assert KIdeal.of(Z12, 7).gen == 1

    def test_non_canonical_rejected(self):
        with pytest.raises(ValueError):
            KIdeal(Z12, 5)
        with pytest.raises(ValueError):
            KIdeal(Q, 2)
        with pytest.raises(ValueError):
            KIdeal(Z, -2)


class TestKIdealOps:
    def test_add_examples(self):
        assert KIdeal.of(Z, 4) + KIdeal.of(Z, 6) == KIdeal.of(Z, 2)
        j = KIdeal.of(Z, 9)
        assert KIdeal.zero(Z) + j == j

    def test_add_modular_against_brute_force(self):
        lhs = KIdeal.of(Z12, 4) + KIdeal.of(Z12, 6)
        expected = {(a + b) % 12 for a in zmod_ideal_set(12, 4) for b in zmod_ideal_set(12, 6)}
        assert zmod_ideal_set(12, lhs.gen) == frozenset(expected)
        assert lhs == KIdeal.of(Z12, 2)

    def test_contains_examples(self):
        assert 12 in KIdeal.of(Z, 6)
        assert 4 not in KIdeal.of(Z, 6)
        assert Fraction(7, 3) in KIdeal.unit(Q)
        assert 0 in KIdeal.zero(Z)

    def test_leq_examples(self):
        assert KIdeal.of(Z, 6) <= KIdeal.of(Z, 2)
        assert not (KIdeal.of(Z, 2) <= KIdeal.of(Z, 6))
        assert KIdeal.zero(Z) <= KIdeal.zero(Z)

    def test_mismatched_rings(self):
        with pytest.raises(ValueError):
            KIdeal.of(Z, 2) + KIdeal.of(Z12, 2)
        with pytest.raises(ValueError):
            KIdeal.of(Z, 2) <= KIdeal.of(Q, 1)

    def test_lattice_laws_integers(self):
        ideals = [KIdeal.of(Z, g) for g in range(13)]
        for a, b in product(ideals, repeat=2):
            assert a + b == b + a
            assert a + a == a
            assert a <= a + b
        for a, b, c in product(ideals[:9], repeat=3):
            assert (a + b) + c == a + (b + c)
        for a, b in product(ideals, repeat=2):
            if a <= b and b <= a:
                assert a == b

    @pytest.mark.parametrize("n", range(2, 25))
    def test_modular_ops_match_set_arithmetic(self, n):
        ring = CoeffRing.integers_mod(n)
        gens = [0] + [d for d in range(1, n) if n % d == 0]
        ideals = {g: KIdeal(ring, g) for g in gens}
        sets = {g: zmod_ideal_set(n, g) for g in gens}
        for a in gens:
            for b in gens:
                joined = ideals[a] + ideals[b]
                assert sets[joined.gen] == frozenset(
                    (x + y) % n for x in sets[a] for y in sets[b]
                )
                assert (ideals[a] <= ideals[b]) == (sets[a] <= sets[b])
            for value in range(n):
                assert (value in ideals[a]) == (value in sets[a])

    def test_str(self):
        assert str(KIdeal.of(Z, 2)) == "2Z"
        assert str(KIdeal.unit(Z)) == "Z"
        assert str(KIdeal.zero(Z)) == "0"
        assert str(KIdeal.unit(Q)) == "Q"
        assert str(KIdeal.of(Z12, 4)) == "(4) mod 12"

    def test_gcd_canonical_generator(self):
        for a in range(-20, 21):
            for b in range(-20, 21):
                assert (KIdeal.of(Z, a) + KIdeal.of(Z, b)).gen == math.gcd(a, b)
