import math
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from mayacal.arith import (
    INT63_MAX,
    Factorization,
    decimal_str,
    euclid_div,
    factorize,
    gcd,
    lcm_many,
    round_nearest,
)

NINE_PERIODS = (116, 584, 365, 780, 399, 378, 177, 178, 148)


def brute_gcd(a, b):
    # Oracle: largest d dividing both, by scan.
    best = 0
    for d in range(1, min(a, b) + 1):
        if a % d == 0 and b % d == 0:
            best = d
    return best


def pairwise_lcm(values):
    # Oracle: repeated a*b // gcd, no factorization involved.
    out = 1
    for v in values:
        out = out * v // math.gcd(out, v)
    return out


class TestFactorize:
    def test_venus_period(self):
        assert factorize(584).as_dict() == {2: 3, 73: 1}

    def test_one_is_empty_product(self):
        assert factorize(1).as_dict() == {}
        assert factorize(1).value == 1

    def test_supernumber(self):
        assert factorize(768039133778280).as_dict() == {
            2: 3, 3: 3, 5: 1, 7: 1, 13: 1, 19: 1, 29: 1, 37: 1, 59: 1, 73: 1, 89: 1,
        }

    def test_all_nine_periods(self):
        expected = {
            116: {2: 2, 29: 1},
            584: {2: 3, 73: 1},
            365: {5: 1, 73: 1},
            780: {2: 2, 3: 1, 5: 1, 13: 1},
            399: {3: 1, 7: 1, 19: 1},
            378: {2: 1, 3: 3, 7: 1},
            177: {3: 1, 59: 1},
            178: {2: 1, 89: 1},
            148: {2: 2, 37: 1},
        }
        for period, facts in expected.items():
            assert factorize(period).as_dict() == facts
            assert factorize(period).value == period

    def test_rejects_zero_and_negative(self):
        with pytest.raises(ValueError):
            factorize(0)
        with pytest.raises(ValueError):
            factorize(-6)

    def test_rejects_beyond_63_bits(self):
        with pytest.raises(ValueError):
            factorize(INT63_MAX + 1)

    def test_reconstruction_exhaustive_small(self):
        for n in range(1, 100001):
            assert factorize(n).value == n

    def test_rendering(self):
        assert str(factorize(3276)) == "2^2 × 3^2 × 7 × 13"
        assert str(factorize(399)) == "3 × 7 × 19"
        assert str(factorize(1)) == "1"


class TestFactorizationInvariants:
    def test_rejects_non_prime(self):
        with pytest.raises(ValueError):
            Factorization(((4, 1),))

    def test_rejects_unsorted_primes(self):
        with pytest.raises(ValueError):
            Factorization(((3, 1), (2, 1)))

    def test_rejects_zero_multiplicity(self):
        with pytest.raises(ValueError):
            Factorization(((2, 0),))


class TestGcd:
    def test_xultun_pair_matches_brute_force(self):
        assert brute_gcd(341640, 1195740) == 170820
        assert gcd(341640, 1195740) == 170820

    def test_all_four_xultun_numbers(self):
        # The common divisor of the whole set is one third of the pairwise one.
        values = (341640, 1195740, 1765140, 2448420)
        acc = 0
        for v in values:
            acc = gcd(acc, v)
        assert acc == 56940

    def test_zero_identity(self):
        assert gcd(0, 7) == 7
        assert gcd(7, 0) == 7

    def test_cycle_pair(self):
        assert brute_gcd(260, 365) == 5
        assert gcd(260, 365) == 5

    def test_rejects_negative(self):
        with pytest.raises(ValueError):
            gcd(-4, 2)


class TestLcm:
    def test_calendar_round(self):
        assert lcm_many([260, 365]) == 18980

    def test_supernumber(self):
        assert lcm_many(NINE_PERIODS) == 768039133778280

    def test_single_element(self):
        assert lcm_many([365]) == 365

    def test_venus_mars(self):
        assert lcm_many([584, 780]) == 113880

    def test_empty_rejected(self):
        with pytest.raises(ValueError):
            lcm_many([])

    def test_zero_rejected(self):
        with pytest.raises(ValueError):
            lcm_many([0, 5])

    def test_overflow_is_distinct_error(self):
        with pytest.raises(OverflowError):
            lcm_many([2**62, 3**39])


class TestEuclidDiv:
    def test_grand_cycle_division(self):
        # Dividend is the supernumber divided by 37, computed exactly.
        n37 = 768039133778280 // 37
        assert n37 == 20757814426440
        assert euclid_div(n37, 956592000) == (21699, 724618440)

    def test_aeon_division(self):
        n37 = 768039133778280 // 37
        assert euclid_div(n37, 136656000) == (151898, 41338440)

    def test_small_dividend(self):
        assert euclid_div(5, 7) == (0, 5)

    def test_zero_divisor_rejected(self):
        with pytest.raises(ZeroDivisionError):
            euclid_div(5, 0)

    def test_negative_rejected(self):
        with pytest.raises(ValueError):
            euclid_div(5, -1)
        with pytest.raises(ValueError):
            euclid_div(-5, 1)


class TestRoundNearest:
    def test_palenque_error(self):
        assert round_nearest(Fraction(104, 81)) == 1

    def test_half_away_from_zero(self):
        assert round_nearest(Fraction(59, 2)) == 30
        assert round_nearest(Fraction(-59, 2)) == -30
        assert round_nearest(Fraction(1, 2)) == 1
        assert round_nearest(Fraction(-1, 2)) == -1

    def test_lunation_count(self):
        # 4429 days at the modern month, compared exactly as a rational.
        assert round_nearest(Fraction(4429 * 1000000, 29530588)) == 150

    def test_integers_pass_through(self):
        assert round_nearest(7) == 7
        assert round_nearest(Fraction(21, 3)) == 7


class TestDecimalStr:
    def test_palenque_ratio(self):
        assert decimal_str(Fraction(2392, 81), 6) == "29.530864"

    def test_rounds_last_digit(self):
        assert decimal_str(Fraction(4429, 150), 6) == "29.526667"

    def test_zero_places(self):
        assert decimal_str(Fraction(104, 81), 0) == "1"

    def test_negative(self):
        assert decimal_str(Fraction(-1, 8), 3) == "-0.125"


@given(st.integers(min_value=1, max_value=10**6), st.integers(min_value=1, max_value=10**6))
def test_lcm_gcd_product_identity(a, b):
    assert lcm_many([a, b]) * gcd(a, b) == a * b


@given(st.integers(min_value=1, max_value=10**6))
def test_factorize_reconstructs(n):
    assert factorize(n).value == n


@given(st.integers(min_value=0, max_value=INT63_MAX), st.integers(min_value=1, max_value=INT63_MAX))
def test_euclid_div_contract(n, d):
    q, r = euclid_div(n, d)
    assert n == d * q + r
    assert 0 <= r < d


@given(st.permutations([116, 584, 365, 780, 399, 378, 177, 178, 148]))
def test_lcm_order_independent(values):
    assert lcm_many(values) == 768039133778280


@given(st.lists(st.integers(min_value=1, max_value=5000), min_size=1, max_size=6))
def test_lcm_matches_pairwise_oracle(values):
    assert lcm_many(values) == pairwise_lcm(values)


@given(
    st.integers(min_value=-10**9, max_value=10**9),
    st.integers(min_value=1, max_value=10**6),
    st.integers(min_value=1, max_value=100),
)
def test_rational_normalization(a, b, k):
    assert Fraction(a, b) == Fraction(k * a, k * b)
    f = Fraction(a, b)
    assert f.denominator > 0
    assert math.gcd(abs(f.numerator), f.denominator) == 1


@given(st.fractions(min_value=-1000, max_value=1000))
def test_round_nearest_is_nearest(r):
    n = round_nearest(r)
    assert abs(r - n) <= Fraction(1, 2)
