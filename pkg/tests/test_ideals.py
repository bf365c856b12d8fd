"""Saturation engine: level ideals, ascent sets, membership, generators."""

import random

import pytest

from helpers import random_element
from rotabaxter import (
    MEMBER,
    NOT_MEMBER,
    UNKNOWN,
    AscentSet,
    CoeffRing,
    KIdeal,
    RBAlgebra,
    ideal_from_ascent,
    saturate,
)

Z = CoeffRing.integers()
Q = CoeffRing.rationals()


@pytest.fixture(scope="module")
def worked_example():
    """Weight 1 over Z, single generator 2a1 + 2a0, bound 8."""
    a = RBAlgebra(Z, 1)
    state = saturate([a.element({1: 2, 0: 2})], 8)
    return a, state


class TestAscentSetType:
    def test_validation(self):
        AscentSet.from_gen_pairs(Z, [(1, 6), (3, 2)])
        with pytest.raises(ValueError):
            AscentSet.from_gen_pairs(Z, [(3, 6), (1, 2)])  # points not increasing
        with pytest.raises(ValueError):
            AscentSet.from_gen_pairs(Z, [(0, 4), (2, 3)])  # 3 does not divide 4
        with pytest.raises(ValueError):
            AscentSet.from_gen_pairs(Z, [(0, 4), (2, 4)])  # no strict increase
        with pytest.raises(ValueError):
            AscentSet.from_gen_pairs(Z, [(1, 0)])  # zero level
        with pytest.raises(ValueError):
            AscentSet(Z, ())

    def test_level_at(self):
        ascent = AscentSet.from_gen_pairs(Z, [(1, 6), (3, 2)])
        assert ascent.level_at(0) == KIdeal.zero(Z)
        assert ascent.level_at(1) == KIdeal.of(Z, 6)
        assert ascent.level_at(2) == KIdeal.of(Z, 6)
        assert ascent.level_at(3) == KIdeal.of(Z, 2)
        assert ascent.level_at(99) == KIdeal.of(Z, 2)

    def test_str(self):
        assert str(AscentSet.from_gen_pairs(Z, [(1, 2)])) == "{(1, 2Z)}"


class TestWorkedExample:
    def test_levels(self, worked_example):
        _, state = worked_example
        assert state.stable
        assert [level.gen for level in state.omegas] == [0] + [2] * 8
        assert state.omega(0) == KIdeal.zero(Z)
        assert state.omega(3) == KIdeal.of(Z, 2)
        with pytest.raises(ValueError):
            state.omega(9)

    def test_starting_point(self, worked_example):
        _, state = worked_example
        assert state.starting_point() == 1

    def test_ascent_set(self, worked_example):
        _, state = worked_example
        assert state.ascent_set() == AscentSet.from_gen_pairs(Z, [(1, 2)])
        assert state.initial_ideal() == state.ascent_set()

    def test_membership(self, worked_example):
        a, state = worked_example
        for m in range(7):
            assert state.membership(a.element({m + 1: 2, m: 2})) == MEMBER
            scale = 2 * (m + 1)
            assert state.membership(a.element({m + 1: scale, m: scale})) == MEMBER
        assert state.membership(a.element({0: -2})) == NOT_MEMBER
        assert state.membership(a.zero()) == MEMBER
        with pytest.raises(ValueError):
            state.membership(a.monomial(9))

    def test_ascent_generating_set(self, worked_example):
        a, state = worked_example
        assert state.ascent_generating_set() == [a.element({1: 2, 0: 2})]

    def test_every_row_is_a_member(self, worked_example):
        a, state = worked_example
        fresh = saturate(state.generators, state.top_degree)
        for row in state.row_elements():
            assert fresh.membership(row) == MEMBER


class TestUnitIdeal:
    def test_levels_and_generators(self):
        a = RBAlgebra(Z, 1)
        state = saturate([a.one()], 5)
        assert state.stable
        assert all(level.is_unit for level in state.omegas)
        assert state.starting_point() == 0
        assert state.ascent_set() == AscentSet.from_gen_pairs(Z, [(0, 1)])
        assert state.ascent_generating_set() == [a.one()]


class TestHomogeneousIdeals:
    def test_single_monomial_weight_zero(self):
        a = RBAlgebra(Z, 0)
        c, t, bound = 5, 2, 6
        state = saturate([a.monomial(t, c)], bound)
        # Independent span: operator powers and monomial multiples of c*a_t
        # all carry coefficients that are multiples of c, and the operator
        # powers provide c itself in every degree >= t.
        span = [a.monomial(t, c).baxter(m) for m in range(bound - t + 1)]
        span += [a.monomial(n) * a.monomial(t, c) for n in range(1, bound - t + 1)]
        expected = []
        for j in range(bound + 1):
            gens = [f.coeff(j) for f in span if f.degree <= j]
            acc = KIdeal.zero(Z)
            for g in gens:
                acc = acc + KIdeal.of(Z, g)
            expected.append(acc)
        assert list(state.omegas) == expected
        assert [level.gen for level in state.omegas] == [0, 0, c, c, c, c, c]

    def test_two_monomials(self):
        a = RBAlgebra(Z, 0)
        state = saturate([a.monomial(1, 6), a.monomial(3, 2)], 6)
        assert state.ascent_set() == AscentSet.from_gen_pairs(Z, [(1, 6), (3, 2)])
        assert state.ascent_generating_set() == [a.monomial(1, 6), a.monomial(3, 2)]

    def test_round_trip_with_classification(self):
        rng = random.Random(5)
        for _ in range(10):
            points = sorted(rng.sample(range(9), rng.randint(1, 3)))
            gen = rng.choice([1, 2, 3, 5])
            gens = []
            for s in reversed(points):
                gens.append((s, gen))
                gen *= rng.choice([2, 3, 4])
            ascent = AscentSet.from_gen_pairs(Z, list(reversed(gens)))
            a = RBAlgebra(Z, rng.choice([0, 1]))
            state = saturate(ideal_from_ascent(ascent).generators(a), max(points))
            assert state.stable
            assert state.ascent_set() == ascent


class TestStartingPoints:
    def test_degree_zero_generator(self):
        a = RBAlgebra(Z, 1)
        assert saturate([a.monomial(0, 5)], 4).starting_point() == 0

    def test_weight_zero_monomial(self):
        a = RBAlgebra(Z, 0)
        assert saturate([a.monomial(3)], 6).starting_point() == 3

    def test_no_ascent_below_bound(self):
        a = RBAlgebra(Z, 0)
        state = saturate([a.monomial(5)], 3)
        with pytest.raises(ValueError, match="no ascent"):
            state.starting_point()
        with pytest.raises(ValueError, match="no ascent"):
            state.ascent_set()


class TestRationalField:
    def test_nonhomogeneous_generator_collapses(self):
        # Weight 0 over a field: the engine discovers the unit ideal from
        # a2 + a0 (squaring and eliminating leaves a pure a2 term).
        a = RBAlgebra(Q, 0)
        state = saturate([a.element({2: 1, 0: 1})], 4)
        assert state.stable
        assert state.ascent_set() == AscentSet(Q, ((0, KIdeal.unit(Q)),))
        assert state.membership(a.one()) == MEMBER

    def test_homogeneous_field_ideal(self):
        a = RBAlgebra(Q, 0)
        state = saturate([a.monomial(2)], 5)
        assert state.ascent_set() == AscentSet(Q, ((2, KIdeal.unit(Q)),))
        assert state.membership(a.monomial(1)) == NOT_MEMBER


class TestModularRing:
    def test_even_ideal_mod_twelve(self):
        ring = CoeffRing.integers_mod(12)
        a = RBAlgebra(ring, 1)
        state = saturate([a.monomial(1, 2)], 5)
        assert state.stable
        assert state.ascent_set() == AscentSet(ring, ((1, KIdeal.of(ring, 2)),))
        assert state.membership(a.monomial(3, 6)) == MEMBER
        assert state.membership(a.monomial(3, 3)) == NOT_MEMBER
        assert state.membership(a.monomial(0, 6)) == NOT_MEMBER

    def test_modulus_relations_enter_levels(self):
        ring = CoeffRing.integers_mod(12)
        a = RBAlgebra(ring, 0)
        state = saturate([a.monomial(1, 8)], 4)
        # (8) = (4) in Z/12
        assert state.omega(1) == KIdeal.of(ring, 4)


class TestEngineInvariants:
    def test_chain_property(self):
        rng = random.Random(17)
        for weight in (0, 1, -2):
            a = RBAlgebra(Z, weight)
            for _ in range(5):
                gens = [
                    random_element(a, rng, max_degree=3, coeff_bound=6, allow_zero=False)
                    for _ in range(rng.randint(1, 2))
                ]
                state = saturate(gens, 6)
                for j in range(state.bound):
                    assert state.omegas[j] <= state.omegas[j + 1]

    def test_closure_soundness(self):
        rng = random.Random(23)
        a = RBAlgebra(Z, 1)
        state = saturate([a.element({1: 2, 0: 2}), a.monomial(3, 6)], 8)
        rows = state.row_elements()
        for _ in range(20):
            f = rng.choice(rows)
            n = rng.randint(1, 4)
            if f.degree + 1 <= state.bound:
                assert state.membership(f.baxter()) == MEMBER
            g = a.monomial(n) * f
            if g.degree <= state.bound:
                assert state.membership(g) == MEMBER

    def test_ascent_matches_homogenized_witnesses(self):
        # The invariant behind initial ideals: the ascent set from the
        # generators equals the ascent set from the initial terms of the
        # ascent generating set.
        rng = random.Random(29)
        a = RBAlgebra(Z, 1)
        for _ in range(5):
            gens = [
                random_element(a, rng, max_degree=3, coeff_bound=4, allow_zero=False)
                for _ in range(rng.randint(1, 2))
            ]
            state = saturate(gens, 7)
            if not state.stable:
                continue
            witnesses = [
                a.monomial(*f.initial_term()) for f in state.ascent_generating_set()
            ]
            homog = saturate(witnesses, 7)
            assert homog.ascent_set() == state.ascent_set()

    def test_monotone_in_slack(self):
        a = RBAlgebra(Z, 1)
        gens = [a.element({2: 3, 1: 1, 0: 2})]
        snapshots = []
        for slack in (2, 4, 6):
            state = saturate(gens, 6, slack_start=slack, slack_max=slack)
            snapshots.append(state.omegas)
        for earlier, later in zip(snapshots, snapshots[1:]):
            for small, large in zip(earlier, later):
                assert small <= large

    def test_unstable_paths(self):
        a = RBAlgebra(Z, 1)
        gens = [a.element({1: 2, 0: 2})]
        state = saturate(gens, 8, slack_start=4, slack_max=4)
        assert not state.stable
        assert state.diagnostic
        with pytest.raises(ValueError):
            state.ascent_set()
        assert state.ascent_set(allow_unstable=True).pairs
        assert state.membership(a.monomial(0, 7)) == UNKNOWN

    def test_candidate_budget_diagnostic(self):
        a = RBAlgebra(Z, 1)
        state = saturate([a.element({1: 2, 0: 2})], 8, max_candidates=3)
        assert not state.stable
        assert "budget" in state.diagnostic

    def test_generator_validation(self):
        a = RBAlgebra(Z, 1)
        with pytest.raises(ValueError):
            saturate([], 4)
        with pytest.raises(ValueError):
            saturate([a.zero()], 4)
        with pytest.raises(ValueError):
            saturate([a.monomial(1), RBAlgebra(Z, 2).monomial(1)], 4)
