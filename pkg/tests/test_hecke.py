import random
from fractions import Fraction

import pytest

from halfsign.arith import is_squarefree, primes_up_to
from halfsign.errors import NotCoprime, PrecisionExceeded, ZeroBase
from halfsign.forms import FormDescriptor, HalfIntegralForm, RealCharacter, coefficient
from halfsign.hecke import (
    deligne_check,
    eigen_consistency,
    extract_trace,
    multiplicativity_check,
    satake_data,
)
from halfsign.qseries import TruncatedSeries
from halfsign.signscan import twisted_sequence


def synthetic_form(trace=10, k=2, p=3, depth=3, a_t=1):
    """Cusp form skeleton whose a(p^(2m)) follow the twisted recurrence.

    Level 4, trivial character; chi1(p) for t = 1, N = 4 is (16|p) = 1 at
    any odd prime, matching the recurrence's chi1_p = 1.
    """
    seq = twisted_sequence(a_t, Fraction(trace), 1, p, k, depth)
    prec = p ** (2 * depth)
    coeffs = [Fraction(0)] * (prec + 1)
    for m, value in enumerate(seq):
        coeffs[p ** (2 * m)] = value  # chi trivial: b_m = a(p^(2m))
    descriptor = FormDescriptor(level=4, k=k, character=RealCharacter.trivial(4))
    return HalfIntegralForm(descriptor, TruncatedSeries(prec, tuple(coeffs)))


def test_extract_trace_inverts_synthetic_construction():
    form = synthetic_form(trace=10)
    assert extract_trace(form, 1, 3) == 10


def test_extract_trace_zero_base():
    form = synthetic_form(a_t=0)
    with pytest.raises(ZeroBase):
        extract_trace(form, 1, 3)


def test_extract_trace_not_coprime(flagship):
    with pytest.raises(NotCoprime):
        extract_trace(flagship, 1, 2)


def test_extract_trace_precision(flagship):
    with pytest.raises(PrecisionExceeded):
        extract_trace(flagship, 1, 101)


def test_extract_trace_flagship_is_tau3(flagship, delta):
    assert extract_trace(flagship, 1, 3) == 252
    assert extract_trace(flagship, 1, 3) == delta.coefficient(3)


def test_extract_trace_independent_of_base(flagship):
    for p in (3, 5):
        values = set()
        for t0 in range(1, 31):
            if not is_squarefree(t0) or coefficient(flagship, t0, 1) == 0:
                continue
            values.add(extract_trace(flagship, t0, p))
        assert len(values) == 1


def test_eigen_consistency_synthetic_zero_residuals():
    form = synthetic_form(trace=10, depth=3)
    report = eigen_consistency(form, 3, 10, [1], 2)
    assert report.consistent
    assert set(report.residuals) == {(1, 0), (1, 1), (1, 2)}


def test_eigen_consistency_detects_perturbation():
    form = synthetic_form(trace=10, depth=3)
    coeffs = list(form.series.coeffs)
    coeffs[81] += 1  # a(3^4), participating in rows m = 1 and m = 2
    broken = HalfIntegralForm(form.descriptor, TruncatedSeries(form.prec, tuple(coeffs)))
    report = eigen_consistency(broken, 3, 10, [1], 2)
    assert not report.consistent
    assert report.failures() == [(1, 1), (1, 2)]


def test_eigen_consistency_flagship(flagship):
    t_set = [
        t
        for t in range(1, 31)
        if is_squarefree(t) and coefficient(flagship, t, 1) != 0
    ]
    for p in (3, 5, 7):
        trace = extract_trace(flagship, 1, p)
        report = eigen_consistency(flagship, p, trace, t_set, 4)
        assert report.consistent
        assert report.residuals  # something was actually checked


def test_eigen_consistency_raises_when_nothing_checkable():
    form = synthetic_form(trace=10, depth=2)  # prec 81
    with pytest.raises(PrecisionExceeded):
        eigen_consistency(form, 11, 10, [1], 4)  # 11^2 = 121 > 81


def test_satake_data_basics():
    local = satake_data(0, 5, 3)
    assert local.norm == 5**5
    assert local.disc == -4 * 5**5
    assert local.root_kind == "complex_pair"

    local = satake_data(6, 2, 2)
    assert local.disc == 4
    assert local.root_kind == "real_distinct"
    # roots of X^2 - 6X + 8 are 4 and 2; their product is the norm 2^3
    assert local.trace == 4 + 2
    assert local.norm == 4 * 2


def test_satake_root_kind_matches_disc_sign_random():
    rng = random.Random(99)
    for _ in range(300):
        p = rng.choice(primes_up_to(30))
        k = rng.randint(2, 6)
        trace = Fraction(rng.randint(-10**6, 10**6), rng.randint(1, 50))
        local = satake_data(trace, p, k)
        if local.disc > 0:
            assert local.root_kind == "real_distinct"
        elif local.disc == 0:
            assert local.root_kind == "real_double"
        else:
            assert local.root_kind == "complex_pair"


def test_deligne_check_examples(flagship):
    assert deligne_check(0, 3, 2) == "strict"
    assert deligne_check(6, 2, 2) == "violated"
    for p in primes_up_to(100):
        if p == 2:
            continue
        assert deligne_check(extract_trace(flagship, 1, p), p, 6) == "strict"


def test_deligne_extremal_requires_irrational_trace():
    # trace^2 = 4 p^(2k-1) has no rational solution (odd prime power is
    # never a rational square), so rational traces are never extremal
    rng = random.Random(4)
    for _ in range(300):
        p = rng.choice(primes_up_to(30))
        k = rng.randint(2, 6)
        trace = Fraction(rng.randint(-10**9, 10**9), rng.randint(1, 100))
        assert deligne_check(trace, p, k) != "extremal"


def test_complex_pair_implies_strict():
    rng = random.Random(12)
    for _ in range(200):
        p = rng.choice(primes_up_to(20))
        k = rng.randint(2, 5)
        trace = Fraction(rng.randint(-10**5, 10**5), rng.randint(1, 20))
        local = satake_data(trace, p, k)
        if local.root_kind == "complex_pair":
            assert deligne_check(trace, p, k) == "strict"


def test_multiplicativity_trivial_and_flagship(flagship):
    assert multiplicativity_check(flagship, 1, 1, 1) == 0
    assert multiplicativity_check(flagship, 1, 3, 5) == 0
    assert multiplicativity_check(flagship, 2, 3, 7) == 0
    with pytest.raises(NotCoprime):
        multiplicativity_check(flagship, 1, 2, 4)
    with pytest.raises(PrecisionExceeded):
        multiplicativity_check(flagship, 1, 11, 10)
