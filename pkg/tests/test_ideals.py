import random

import pytest

from pin2k.ideals import (
    NoSuchKError,
    NotSwfLikeError,
    NoWitnessBelowCapError,
    NoWitnessError,
    ideal_from_generators,
    ideal_product,
    ideal_sum,
    unit_ideal,
    z_power_ideal,
)
from pin2k.ring import ONE, W, Z, RingElem, parse, w_pow, z_pow

from oracles import (
    ideal_member_oracle,
    random_combination,
    random_generator_set,
    random_pair,
    wmult_subgroup_oracle,
)

AUG = ideal_from_generators([W, Z])


def gens_to_elems(raw):
    return [RingElem(lam, poly) for poly, lam in raw]


class TestCanonicalForm:
    def test_augmentation_ideal(self):
        assert [str(b) for b in AUG.basis] == ["w", "z"]
        assert (AUG.e, AUG.d) == (2, 1)

    def test_zero_ideal(self):
        empty = ideal_from_generators([])
        assert empty.basis == ()
        assert (empty.e, empty.d) == (0, 0)
        assert empty.contains(RingElem())
        assert not empty.contains(ONE)

    def test_mixed_generators_complete(self):
        form = ideal_from_generators([parse("z^2"), parse("2*z"), parse("4")])
        assert [str(b) for b in form.basis] == ["4*w", "4", "2*z", "z^2"]
        assert (form.e, form.d) == (4, 4)

    def test_generator_order_is_irrelevant(self):
        a = ideal_from_generators([W, Z])
        b = ideal_from_generators([Z, W])
        assert a == b and a.equals(b)

    def test_rearranged_generating_sets_share_the_form(self):
        rng = random.Random(99)
        for _ in range(200):
            raw = random_generator_set(rng)
            gens = gens_to_elems(raw)
            form = ideal_from_generators(gens)
            # rewrite the set: shuffle, duplicate, and mix by ring multiples
            mixed = list(gens)
            rng.shuffle(mixed)
            if len(mixed) >= 2:
                q = RingElem(rng.randint(-2, 2), (rng.randint(-2, 2),))
                mixed[0] = mixed[0] + q * mixed[1]
            if mixed:
                mixed.append(Z * mixed[-1])
            other = ideal_from_generators(mixed)
            assert form == other, (gens, mixed)
            assert form.equals(other)

    def test_subgroup_invariants(self):
        rng = random.Random(5)
        for _ in range(200):
            raw = random_generator_set(rng)
            form = ideal_from_generators(gens_to_elems(raw))
            assert form.e == wmult_subgroup_oracle(raw)
            if form.basis:
                assert form.d != 0 or form.e == 0
                if form.d:
                    assert form.e % form.d == 0
                if form.e:
                    assert (2 * form.d) % form.e == 0


class TestMembership:
    def test_examples(self):
        assert AUG.contains(z_pow(3))
        assert not z_power_ideal(2).contains(2 * W)
        assert z_power_ideal(2).contains(RingElem(4, ()))
        assert AUG.contains(RingElem())

    def test_oracle_agreement_random(self):
        rng = random.Random(123)
        for _ in range(300):
            raw = random_generator_set(rng)
            gens = gens_to_elems(raw)
            form = ideal_from_generators(gens)
            if rng.random() < 0.5 and gens:
                x = random_combination(rng, raw)
            else:
                poly, lam = random_pair(rng)
                x = RingElem(lam, poly)
            expected = ideal_member_oracle(raw, (x.poly, x.wcoef))
            assert form.contains(x) == expected, (raw, x)


class TestEqualsSumProduct:
    def test_equals_examples(self):
        assert ideal_from_generators([W, Z]).equals(ideal_from_generators([Z, W]))
        assert not z_power_ideal(1).equals(AUG)
        square = ideal_product(AUG, AUG)
        assert square.equals(ideal_from_generators([2 * W, z_pow(2)]))

    def test_sum_examples(self):
        assert ideal_sum(z_power_ideal(1), ideal_from_generators([W])).equals(AUG)
        assert ideal_sum(AUG, unit_ideal()).equals(unit_ideal())

    def test_monomial_products(self):
        for a in range(0, 4):
            for b in range(0, 4):
                assert ideal_product(z_power_ideal(a), z_power_ideal(b)) == z_power_ideal(a + b)

    def test_unit_is_neutral(self):
        rng = random.Random(17)
        for _ in range(100):
            form = ideal_from_generators(gens_to_elems(random_generator_set(rng)))
            assert ideal_product(form, unit_ideal()) == form
            assert ideal_sum(form, ideal_from_generators([])) == form

    def test_structural_equality_matches_mutual_containment(self):
        rng = random.Random(31)
        for _ in range(150):
            a = ideal_from_generators(gens_to_elems(random_generator_set(rng)))
            b = ideal_from_generators(gens_to_elems(random_generator_set(rng)))
            assert a.equals(b) == (a == b), (a, b)


class TestKInvariant:
    def test_examples(self):
        for l in range(6):
            assert z_power_ideal(l).k_invariant() == l
        assert AUG.k_invariant() == 1
        assert unit_ideal().k_invariant() == 0

    def test_no_witness(self):
        with pytest.raises(NoWitnessError):
            ideal_from_generators([parse("z - 2")]).k_invariant()

    def test_not_power_of_two(self):
        form = ideal_from_generators([parse("3*z")])
        with pytest.raises(NotSwfLikeError):
            form.k_invariant()
        # brute enumeration: no small multiple of 3z has w-multiplier a power of 2
        rng = random.Random(3)
        for _ in range(500):
            q = RingElem(rng.randint(-4, 4), tuple(rng.randint(-4, 4) for _ in range(4)))
            wm = abs((q * parse("3*z")).w_multiplier())
            assert wm == 0 or (wm & (wm - 1)) != 0  # never a power of two

    def test_monotone_under_inclusion(self):
        rng = random.Random(41)
        for _ in range(200):
            small = ideal_from_generators(gens_to_elems(random_generator_set(rng)))
            extra = gens_to_elems(random_generator_set(rng, max_gens=2))
            big = ideal_from_generators(list(small.basis) + extra)
            try:
                ks = small.k_invariant()
                kb = big.k_invariant()
            except (NoWitnessError, NotSwfLikeError):
                continue
            assert kb <= ks

    def test_suspension_law(self):
        rng = random.Random(43)
        for _ in range(200):
            form = ideal_from_generators(gens_to_elems(random_generator_set(rng)))
            suspended = ideal_product(form, z_power_ideal(1))
            assert suspended.e == 2 * form.e
            try:
                assert suspended.k_invariant() == form.k_invariant() + 1
            except (NoWitnessError, NotSwfLikeError):
                with pytest.raises((NoWitnessError, NotSwfLikeError)):
                    suspended.k_invariant()

    def test_product_subadditive(self):
        rng = random.Random(47)
        for _ in range(150):
            a = ideal_from_generators(gens_to_elems(random_generator_set(rng)))
            b = ideal_from_generators(gens_to_elems(random_generator_set(rng)))
            try:
                ka, kb = a.k_invariant(), b.k_invariant()
            except (NoWitnessError, NotSwfLikeError):
                continue
            assert ideal_product(a, b).k_invariant() <= ka + kb


class TestSplitness:
    def test_examples(self):
        assert z_power_ideal(2).is_kg_split()
        assert not AUG.is_kg_split()
        assert not ideal_product(AUG, z_power_ideal(1)).is_kg_split()
        assert unit_ideal().is_kg_split()
        assert not ideal_from_generators([]).is_kg_split()

    def test_split_implies_zw_exponent_matches_k(self):
        rng = random.Random(53)
        checked = 0
        for _ in range(300):
            form = ideal_from_generators(gens_to_elems(random_generator_set(rng)))
            if form.is_kg_split():
                assert form.zw_exponent(16) == form.k_invariant()
                checked += 1
        assert checked > 10


class TestExponents:
    def test_nilpotence_examples(self):
        assert unit_ideal().nilpotence_exponent() == 0
        assert AUG.nilpotence_exponent() == 1
        # w^k = 2^(k-1) w lands in (z^3) only once 8 | 2^(k-1)
        assert ideal_from_generators([z_pow(3)]).nilpotence_exponent() == 4

    def test_nilpotence_search_by_membership(self):
        form = ideal_from_generators([z_pow(3)])
        hits = [k for k in range(9) if form.contains(w_pow(k)) and form.contains(z_pow(k))]
        assert hits == [4, 5, 6, 7, 8]

    def test_nilpotence_cap(self):
        with pytest.raises(NoWitnessBelowCapError):
            ideal_from_generators([parse("z - 2")]).nilpotence_exponent(5)

    def test_zw_examples(self):
        for k in range(5):
            assert z_power_ideal(k).zw_exponent() == k
            if k:
                two_sided = ideal_from_generators([w_pow(k), z_pow(k)])
                assert two_sided.zw_exponent() == k
        assert unit_ideal().zw_exponent() == 0
        assert AUG.zw_exponent() == 1

    def test_zw_errors(self):
        with pytest.raises(NoSuchKError):
            ideal_from_generators([]).zw_exponent(8)
        with pytest.raises(NoSuchKError):
            ideal_from_generators([parse("z - 2")]).zw_exponent(8)
