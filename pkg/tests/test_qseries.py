import random
from fractions import Fraction

import pytest

from halfsign.errors import NonIntegralOffset, PrecisionExceeded
from halfsign.qseries import (
    EtaRecipe,
    TruncatedSeries,
    eta_power,
    expand_recipe,
    series_mul,
    series_pow,
    theta_series,
)
from naive_oracle import naive_eta_product, naive_mul, naive_theta


def S(values, prec=None):
    return TruncatedSeries.from_coeffs(values, prec)


def test_mul_telescopes():
    a = S([1, 1, 0, 0])  # 1 + q
    b = S([1, -1, 0, 0])  # 1 - q
    assert series_mul(a, b).coeffs == (1, 0, -1, 0)


def test_mul_identity():
    a = S([3, Fraction(1, 2), -7, 0, 2])
    one = TruncatedSeries.one(4)
    assert series_mul(a, one) == a


def test_mul_truncates_to_min_precision():
    a = S([1] * 11)  # prec 10
    b = S([1] * 6)  # prec 5
    assert series_mul(a, b).prec == 5


def test_reading_past_precision_is_an_error():
    a = S([1, 2, 3])
    assert a.coefficient(2) == 3
    with pytest.raises(PrecisionExceeded):
        a.coefficient(3)


def test_eta24_by_repeated_squaring_matches_oracle():
    eta = eta_power(1, 24, 40)
    assert eta.coefficient(2) == -24
    expected = naive_eta_product(1, 24, 40)
    assert list(eta.coeffs) == expected


def test_eta_power_examples():
    e = eta_power(1, 24, 10)
    assert e.coefficient(1) == 1
    assert e.coefficient(2) == -24
    assert e.coefficient(3) == 252
    assert list(e.coeffs) == naive_eta_product(1, 24, 10)

    e2 = eta_power(2, 12, 10)
    assert e2.coefficient(0) == 0
    assert e2.coefficient(1) == 1  # leading exponent 2*12/24 = 1
    assert list(e2.coeffs) == naive_eta_product(2, 12, 10)


def test_eta_power_nonintegral_offset():
    with pytest.raises(NonIntegralOffset):
        eta_power(1, 1, 10)


def test_theta_series_values():
    th = theta_series(16)
    assert th.coefficient(0) == 1
    assert th.coefficient(1) == 2
    assert th.coefficient(2) == 0
    assert th.coefficient(4) == 2
    assert th.coefficient(9) == 2
    assert th.coefficient(16) == 2
    assert list(th.coeffs) == naive_theta(16)


def test_theta_coefficient_characterization():
    th = theta_series(60)
    squares = {n * n for n in range(1, 8)}
    for n in range(61):
        expected = 1 if n == 0 else (2 if n in squares else 0)
        assert th.coefficient(n) == expected


def test_expand_recipe_delta():
    series = expand_recipe(EtaRecipe(factors=((1, 24),), theta_power=0), 10)
    assert series.coefficient(5) == 4830


def test_expand_recipe_flagship_leading_term():
    series = expand_recipe(EtaRecipe(factors=((2, 12),), theta_power=1), 10)
    assert series.coefficient(0) == 0
    assert series.coefficient(1) == 1


def test_expand_recipe_empty_is_one():
    series = expand_recipe(EtaRecipe(factors=(), theta_power=0), 8)
    assert series.coeffs == (1,) + (0,) * 8


def test_recipe_invariant_checked_at_construction():
    with pytest.raises(NonIntegralOffset):
        EtaRecipe(factors=((1, 12), (1, 11)), theta_power=0)
    # per-factor failure propagates even when the total offset is integral
    recipe = EtaRecipe(factors=((1, 12), (3, 4)), theta_power=0)
    with pytest.raises(NonIntegralOffset):
        expand_recipe(recipe, 10)


def _random_series(rng, prec, rational=True):
    if rational:
        vals = [Fraction(rng.randint(-30, 30), rng.randint(1, 9)) for _ in range(prec + 1)]
    else:
        vals = [Fraction(rng.randint(-30, 30)) for _ in range(prec + 1)]
    return TruncatedSeries(prec, tuple(vals))


def test_mul_commutative_associative_random():
    rng = random.Random(1701)
    for _ in range(25):
        rational = rng.random() < 0.5
        a = _random_series(rng, 24, rational)
        b = _random_series(rng, 24, rational)
        c = _random_series(rng, 24, rational)
        assert series_mul(a, b) == series_mul(b, a)
        assert series_mul(series_mul(a, b), c) == series_mul(a, series_mul(b, c))


def test_mul_agrees_with_schoolbook_oracle():
    rng = random.Random(77)
    for _ in range(10):
        a = _random_series(rng, 30, rational=False)
        b = _random_series(rng, 30, rational=False)
        got = series_mul(a, b)  # integer inputs take the packed fast path
        expected = naive_mul(list(a.coeffs), list(b.coeffs), 30)
        assert list(got.coeffs) == expected


def test_eta_power_additivity_in_exponent():
    whole = eta_power(1, 48, 30)
    split = series_mul(eta_power(1, 24, 30), eta_power(1, 24, 30))
    assert whole == split
    whole2 = eta_power(2, 24, 30)
    split2 = series_mul(eta_power(2, 12, 30), eta_power(2, 12, 30))
    assert whole2 == split2


def test_series_pow_matches_repeated_mul():
    rng = random.Random(5)
    a = _random_series(rng, 20, rational=False)
    acc = TruncatedSeries.one(20)
    for e in range(5):
        assert series_pow(a, e) == acc
        acc = series_mul(acc, a)
