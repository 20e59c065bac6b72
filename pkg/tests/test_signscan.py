import random
from fractions import Fraction

import pytest

from halfsign.characters import ProgressionSpec
from halfsign.errors import ZeroBase
from halfsign.forms import coefficient
from halfsign.genfun import expand, h_n_closed
from halfsign.hecke import extract_trace
from halfsign.shimura import chi1
from halfsign.signscan import (
    count_sign_changes,
    scan,
    subsequence,
    twisted_sequence,
)


def F(*values):
    return [Fraction(v) for v in values]


def test_twisted_sequence_short():
    assert twisted_sequence(7, 5, 1, 3, 2, 0) == [7]
    assert twisted_sequence(1, 0, 0, 2, 2, 6) == F(1, 0, -8, 0, 64, 0, -512)


def test_twisted_sequence_matches_closed_form_random():
    from halfsign.cli import random_instance

    rng = random.Random(606)
    for _ in range(100):
        inst = random_instance(rng)
        seq = twisted_sequence(
            inst["a_t"], inst["trace"], inst["chi1_p"], inst["p"], inst["k"], 60
        )
        gf = h_n_closed(inst["a_t"], inst["trace"], inst["chi1_p"], inst["p"], inst["k"])
        assert seq == expand(gf, 60)


def test_twisted_sequence_reproduces_form_coefficients(flagship):
    for t in (1, 2, 3):
        for p in (3, 5, 7):
            trace = extract_trace(flagship, t, p)
            c1 = chi1(p, t, flagship.k, flagship.level)
            seq = twisted_sequence(coefficient(flagship, t, 1), trace, c1, p, flagship.k, 8)
            chi_p = flagship.chi(p)
            nu = 0
            while t * p ** (2 * nu) <= flagship.prec and nu <= 8:
                assert seq[nu] * chi_p**nu == coefficient(flagship, t, p**nu)
                nu += 1
            assert nu >= 2  # the spot-check actually reached the recurrence


def test_subsequence_modes():
    seq = F(10, 11, 12, 13)
    assert subsequence(seq, "full") == seq
    assert subsequence(seq, "odd") == F(11, 13)
    assert subsequence(seq, "even") == F(10, 12)
    spec = ProgressionSpec.create(3, 2, 5)
    assert subsequence(F(1, 2, 3, 4, 5, 6, 7), spec) == F(2, 4, 6)
    with pytest.raises(ValueError):
        subsequence(seq, "sideways")


def test_subsequence_parity_partition():
    rng = random.Random(3)
    for _ in range(20):
        seq = F(*(rng.randint(-5, 5) for _ in range(rng.randint(0, 17))))
        odd = subsequence(seq, "odd")
        even = subsequence(seq, "even")
        assert len(odd) + len(even) == len(seq)
        rebuilt = []
        for i in range(len(seq)):
            rebuilt.append(even[i // 2] if i % 2 == 0 else odd[i // 2])
        assert rebuilt == seq


def test_count_sign_changes_examples():
    frag = count_sign_changes(F(1, -1))
    assert frag.change_count == 1 and frag.change_positions == ((0, 1),)
    frag = count_sign_changes(F(1, 0, -2))
    assert frag.change_count == 1 and frag.change_positions == ((0, 2),)
    assert frag.first_change_index == 2
    frag = count_sign_changes(F(0, 0, 0))
    assert frag.change_count == 0 and frag.zero_count == 3
    assert frag.first_change_index is None


def test_count_sign_changes_scaling_and_flip():
    rng = random.Random(9)
    for _ in range(30):
        seq = F(*(rng.randint(-4, 4) for _ in range(15)))
        base = count_sign_changes(seq)
        scaled = count_sign_changes([Fraction(7, 3) * v for v in seq])
        flipped = count_sign_changes([-v for v in seq])
        assert scaled == base
        assert flipped.change_count == base.change_count
        assert flipped.change_positions == base.change_positions


def test_scan_flagship_full(flagship):
    reports = scan(flagship, 1, "full", 50, 200)
    assert [r.p for r in reports] == [3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47]
    for r in reports:
        assert r.length == 201
        assert r.change_count >= 1
        assert r.deligne == "strict"
        assert r.change_count == len(r.change_positions)
        for i, j in r.change_positions:
            assert i < j


def test_scan_modes_odd_even(flagship):
    for mode, length in (("odd", 100), ("even", 101)):
        reports = scan(flagship, 1, mode, 50, 200)
        for r in reports:
            assert r.length == length
            assert r.change_count >= 1


def test_scan_progression_skips_inadmissible(flagship):
    reports = scan(flagship, 1, "progression", 50, 200, progression=(5, 2))
    # admissible p: 2 generates (Z/5)* so p must be a primitive root mod 5
    # (p = 2, 3 mod 5), and p = 5 itself is skipped
    assert [r.p for r in reports] == [3, 7, 13, 17, 23, 37, 43, 47]
    assert all(r.mode == "progression(5,2)" for r in reports)
    # at this window length exactly one prime has not flipped sign yet:
    # p = 43 first changes within M = 400; the report records it as an
    # auditable exception rather than hiding it
    assert [r.p for r in reports if r.change_count == 0] == [43]
    assert all(r.change_count >= 1 for r in reports if r.p != 43)


def test_scan_zero_base():
    from halfsign.forms import FormDescriptor, HalfIntegralForm, RealCharacter
    from halfsign.qseries import TruncatedSeries

    descriptor = FormDescriptor(level=4, k=2, character=RealCharacter.trivial(4))
    silent = HalfIntegralForm(descriptor, TruncatedSeries.from_coeffs([0] * 200))
    with pytest.raises(ZeroBase):
        scan(silent, 1, "full", 10, 20)


def test_deligne_violating_synthetic_has_no_sign_changes():
    # trace 6, norm 8 (p = 2, k = 2), chi1_p = 1: the closed form collapses
    # to 1/(1-4X) and the sequence is 4^nu, never changing sign
    seq = twisted_sequence(1, 6, 1, 2, 2, 30)
    assert seq[:4] == F(1, 4, 16, 64)
    assert count_sign_changes(seq).change_count == 0
