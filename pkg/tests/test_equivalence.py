import random

import pytest

from covereq import (
    Rational,
    System,
    are_equivalent,
    are_identical_distinct_moduli,
    choose_prime,
    coefficient_profile,
    covering_table,
    covering_value,
    criterion_sum,
    equivalent_bruteforce,
    is_exact_m_cover,
    least_prime_greater_than,
    period,
    s_set,
    spectral_coefficients,
    spectral_reconstruct,
)
from support import enumerate_unweighted_systems, random_system, split_equivalent

ONE_COVER = System.from_triples([(0, 1)])
HALVES = System.from_triples([(0, 2), (1, 2)])
QUARTERS = System.from_triples([(0, 2), (1, 4), (3, 4)])
CLASSIC_COVER = System.from_triples([(0, 2), (0, 3), (1, 4), (5, 6), (7, 12)])


def test_choose_prime_examples():
    assert choose_prime([2, 3]) == (5, 4)
    assert choose_prime([7]) == (least_prime_greater_than(7), 7) == (11, 7)
    assert choose_prime([2, 3, 4]) == (7, 6)
    with pytest.raises(ValueError):
        choose_prime([])


def test_criterion_sum_examples():
    assert criterion_sum(System(), 5).is_zero()
    assert criterion_sum(ONE_COVER, 2) == Rational(1, 2)
    difference = HALVES.combined(ONE_COVER.negated())
    assert criterion_sum(difference, 3).is_zero()


def test_criterion_sum_errors():
    with pytest.raises(ValueError, match="divides a modulus"):
        criterion_sum(System.from_triples([(0, 6)]), 3)
    with pytest.raises(ValueError, match="not prime"):
        criterion_sum(ONE_COVER, 6)


def test_are_equivalent_examples():
    verdict, witness = are_equivalent(ONE_COVER, HALVES)
    assert verdict and witness.verdict
    assert (witness.prime, witness.s_cardinality) == (3, 2)
    assert witness.combined_sum.is_zero()

    verdict, _ = are_equivalent(ONE_COVER, QUARTERS)
    assert verdict

    verdict, witness = are_equivalent(
        System.from_triples([(0, 2)]), System.from_triples([(1, 2)])
    )
    assert not verdict
    assert not witness.combined_sum.is_zero()


def test_are_equivalent_witness_invariants():
    rng = random.Random(3)
    for _ in range(30):
        a = random_system(rng, max_classes=4, max_modulus=8)
        b = random_system(rng, max_classes=4, max_modulus=8)
        verdict, witness = are_equivalent(a, b)
        assert witness.prime > witness.s_cardinality
        assert witness.verdict == verdict == witness.combined_sum.is_zero()
        assert witness.combined_sum.order == witness.prime
        moduli = a.moduli + b.moduli
        assert witness.s_cardinality == s_set(moduli).cardinality
        assert witness.s_cardinality <= sum(moduli) - len(moduli) + 1


def test_are_equivalent_empty_systems():
    verdict, witness = are_equivalent(System(), System())
    assert verdict
    assert witness.prime == 2 and witness.s_cardinality == 0
    verdict, _ = are_equivalent(System(), ONE_COVER)
    assert not verdict


def test_prime_override():
    verdict, witness = are_equivalent(ONE_COVER, HALVES, prime=7)
    assert verdict and witness.prime == 7
    with pytest.raises(ValueError, match="must exceed"):
        are_equivalent(ONE_COVER, HALVES, prime=2)
    with pytest.raises(ValueError, match="not prime"):
        are_equivalent(ONE_COVER, HALVES, prime=9)


def test_prime_freedom_on_difference_systems():
    rng = random.Random(5)
    for _ in range(20):
        a = random_system(rng, max_classes=4, max_modulus=8)
        b = split_equivalent(rng, a) if rng.random() < 0.5 else random_system(rng, 4, 8)
        difference = a.combined(b.negated())
        _, cardinality = choose_prime(difference.moduli)
        p1 = least_prime_greater_than(cardinality)
        p2 = least_prime_greater_than(p1)
        p3 = least_prime_greater_than(p2)
        verdicts = {criterion_sum(difference, p).is_zero() for p in (p1, p2, p3)}
        assert len(verdicts) == 1


def test_scaling_invariance():
    rng = random.Random(9)
    for _ in range(15):
        a = random_system(rng, max_classes=4, max_modulus=7)
        b = split_equivalent(rng, a) if rng.random() < 0.5 else random_system(rng, 4, 7)
        base, _ = are_equivalent(a, b)
        for factor in (2, -3):
            scaled, _ = are_equivalent(a.scaled(factor), b.scaled(factor))
            assert scaled == base


def test_equivalence_relation_properties():
    rng = random.Random(13)
    for _ in range(10):
        a = random_system(rng, max_classes=3, max_modulus=6)
        b = split_equivalent(rng, a)
        c = split_equivalent(rng, b)
        assert are_equivalent(a, a)[0]
        assert are_equivalent(a, b)[0] == are_equivalent(b, a)[0] is True
        assert are_equivalent(a, c)[0]


def test_oracle_agreement_random_sample():
    rng = random.Random(101)
    for _ in range(200):
        a = random_system(rng, max_classes=4, max_modulus=8)
        b = split_equivalent(rng, a) if rng.random() < 0.4 else random_system(rng, 4, 8)
        assert are_equivalent(a, b)[0] == equivalent_bruteforce(a, b)


def test_is_exact_m_cover_examples():
    assert is_exact_m_cover(HALVES, 1)[0]
    assert is_exact_m_cover(QUARTERS, 1)[0]
    assert not is_exact_m_cover(System.from_triples([(0, 2), (1, 4)]), 1)[0]
    assert is_exact_m_cover(HALVES.combined(HALVES), 2)[0]
    assert not is_exact_m_cover(CLASSIC_COVER, 1)[0]
    with pytest.raises(ValueError, match="unweighted"):
        is_exact_m_cover(System.from_triples([(2, 0, 2)]), 2)
    with pytest.raises(ValueError, match="positive"):
        is_exact_m_cover(HALVES, 0)


def test_is_exact_m_cover_agrees_with_oracle():
    rng = random.Random(17)
    for _ in range(40):
        triples = [(rng.randrange(n), n) for n in (rng.randint(1, 6) for _ in range(rng.randint(1, 5)))]
        system = System.from_triples(triples)
        for m in (1, 2):
            thm, _ = is_exact_m_cover(system, m)
            table = covering_table(system)
            assert thm == all(v == m for v in table.values)


def test_are_identical_distinct_moduli():
    a = System.from_triples([(0, 2), (1, 3)])
    assert are_identical_distinct_moduli(a, System.from_triples([(0, 2), (1, 3)]))
    assert not are_identical_distinct_moduli(a, System.from_triples([(1, 2), (1, 3)]))
    assert not are_identical_distinct_moduli(a, System.from_triples([(0, 2), (2, 3)]))
    # order within the file must not matter
    assert are_identical_distinct_moduli(a, System.from_triples([(1, 3), (0, 2)]))
    with pytest.raises(ValueError, match="distinct"):
        are_identical_distinct_moduli(System.from_triples([(0, 2), (1, 2)]), a)
    with pytest.raises(ValueError, match="unweighted"):
        are_identical_distinct_moduli(System.from_triples([(2, 0, 2)]), a)


def test_coefficient_profile_examples():
    empty = coefficient_profile(System(), 5)
    assert empty.coefficients == (0,) * 5 and empty.common_multiple == 1

    singleton = coefficient_profile(ONE_COVER, 2)
    assert singleton.common_multiple == 1
    assert singleton.coefficients == (1, 0)
    assert not singleton.is_constant

    difference = HALVES.combined(ONE_COVER.negated())
    profile = coefficient_profile(difference, 3)
    assert profile.is_constant and profile.coefficients == (0, 0, 0)


def test_coefficient_profile_requires_coprime_prime():
    with pytest.raises(ValueError, match="shares a factor"):
        coefficient_profile(HALVES, 2)


def test_coefficient_profile_matches_direct_summation():
    rng = random.Random(23)
    for _ in range(25):
        system = random_system(rng, max_classes=4, max_modulus=6)
        for p in (5, 7, 11, 13):
            if period(system) % p == 0:
                continue
            profile = coefficient_profile(system, p)
            n_points = profile.common_multiple
            assert n_points % p == 1
            assert n_points % period(system) == 0
            direct = [0] * p
            for x in range(n_points):
                direct[x % p] += covering_value(system, x)
            assert profile.coefficients == tuple(direct)
            break


def test_profile_constancy_iff_sum_vanishes():
    # constancy of the block sums is exactly the vanishing of the criterion sum
    for system in enumerate_unweighted_systems(6):
        if not system.classes:
            continue
        for p in (2, 3, 5, 7):
            if any(n % p == 0 for n in system.moduli):
                continue
            vanishes = criterion_sum(system, p).is_zero()
            assert coefficient_profile(system, p).is_constant == vanishes


def test_spectral_examples():
    coeffs = spectral_coefficients(ONE_COVER)
    assert set(coeffs.coefficients) == {Rational(0)}
    assert coeffs.coefficients[Rational(0)] == 1
    assert spectral_reconstruct(coeffs, 7) == 1

    halves = spectral_coefficients(HALVES)
    assert halves.coefficients[Rational(0)] == 1
    assert halves.coefficients[Rational(1, 2)].is_zero()

    single = spectral_coefficients(System.from_triples([(0, 2)]))
    assert single.coefficients[Rational(0)] == Rational(1, 2)
    assert single.coefficients[Rational(1, 2)] == Rational(1, 2)
    assert spectral_reconstruct(single, 0) == 1
    assert spectral_reconstruct(single, 1) == 0

    empty = spectral_coefficients(System())
    assert empty.coefficients == {}
    assert spectral_reconstruct(empty, 3) == 0


def test_spectral_identity_random_systems():
    rng = random.Random(29)
    for _ in range(20):
        system = random_system(rng, max_classes=4, max_modulus=6)
        coeffs = spectral_coefficients(system)
        assert set(coeffs.coefficients) == set(s_set(system.moduli).fractions)
        total = sum(Rational(c.weight, c.modulus) for c in system.classes)
        assert coeffs.coefficients[Rational(0)] == total
        for x in range(period(system)):
            assert spectral_reconstruct(coeffs, x) == covering_value(system, x)


def test_spectral_bound_enforced():
    system = System.from_triples([(0, 2), (0, 3)])
    with pytest.raises(ValueError, match="spectral field bound"):
        spectral_coefficients(system, max_order=5)


def test_witness_cost_tracks_s_not_lcm():
    # same |S| whether the moduli are coprime (huge lcm) or not
    coprime = System.from_triples([(0, 5), (0, 7)])
    _, witness = are_equivalent(coprime, System())
    assert witness.prime == 13 and witness.s_cardinality == 11
    assert period(coprime) == 35
