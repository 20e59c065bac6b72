"""Twisted coefficient sequences, subsequence selection, sign-change counts.

The twisted sequence b_nu = a(t p^(2 nu))/chi(p^nu) obeys the order-two
linear recurrence b_{nu+1} = trace * b_nu - p^(2k-1) * b_{nu-1}; only its
first two terms come from the q-expansion, so scans can run to any length
regardless of the series precision.

Sign changes are zero-transparent: a change is a pair of indices i < j
with b_i * b_j < 0 and every entry strictly between them zero.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

from . import characters as characters_mod
from . import hecke as hecke_mod
from .arith import Rational, as_fraction, primes_up_to
from .characters import ProgressionSpec
from .errors import NotInSubgroup, ZeroBase
from .forms import HalfIntegralForm, coefficient
from .shimura import chi1

__all__ = [
    "twisted_sequence",
    "subsequence",
    "count_sign_changes",
    "SignChangeCount",
    "SignChangeReport",
    "scan",
]

Mode = Union[str, ProgressionSpec]


def twisted_sequence(
    a_t: Rational,
    trace: Rational,
    chi1_p: int,
    p: int,
    k: int,
    M: int,
) -> list[Fraction]:
    """b_0..b_M with b_0 = a_t, b_1 = (trace - chi1_p p^(k-1)) a_t and the
    order-two recurrence above."""
    if M < 0:
        raise ValueError("M must be nonnegative")
    if k < 2:
        raise ValueError("k must be at least 2")
    if chi1_p not in (-1, 0, 1):
        raise ValueError("chi1_p must be one of -1, 0, 1")
    a_t = as_fraction(a_t)
    trace = as_fraction(trace)
    norm = p ** (2 * k - 1)
    seq = [a_t]
    if M >= 1:
        seq.append((trace - chi1_p * p ** (k - 1)) * a_t)
    for _ in range(1, M):
        seq.append(trace * seq[-1] - norm * seq[-2])
    return seq


def subsequence(seq: Sequence[Fraction], mode: Mode) -> list[Fraction]:
    """Index filter: full, odd (1,3,5,...), even (0,2,4,...), or a progression."""
    if isinstance(mode, ProgressionSpec):
        return characters_mod.progression_extract(seq, mode, route="direct")
    if mode == "full":
        return list(seq)
    if mode == "odd":
        return list(seq[1::2])
    if mode == "even":
        return list(seq[0::2])
    raise ValueError(f"unknown mode {mode!r}")


@dataclass(frozen=True)
class SignChangeCount:
    """Sign-change statistics of a single real sequence."""

    length: int
    change_count: int
    change_positions: tuple[tuple[int, int], ...]
    first_change_index: int | None
    zero_count: int


def count_sign_changes(seq: Sequence[Fraction]) -> SignChangeCount:
    """Count zero-transparent sign changes.

    Records each change as the index pair (i, j) of the two opposite-sign
    entries; first_change_index is the index j at which the first change
    completes.
    """
    positions: list[tuple[int, int]] = []
    zero_count = 0
    last_idx: int | None = None
    last_sign = 0
    for idx, value in enumerate(seq):
        if value == 0:
            zero_count += 1
            continue
        sign = 1 if value > 0 else -1
        if last_sign != 0 and sign != last_sign:
            positions.append((last_idx, idx))
        last_idx, last_sign = idx, sign
    return SignChangeCount(
        length=len(seq),
        change_count=len(positions),
        change_positions=tuple(positions),
        first_change_index=positions[0][1] if positions else None,
        zero_count=zero_count,
    )


@dataclass(frozen=True)
class SignChangeReport:
    """Per-prime scan result for one subsequence mode."""

    p: int
    t: int
    mode: str
    length: int
    change_count: int
    first_change_index: int | None
    change_positions: tuple[tuple[int, int], ...]
    zero_count: int
    deligne: str


def scan(
    form: HalfIntegralForm,
    t: int,
    mode: Mode,
    p_max: int,
    M: int,
    progression: tuple[int, int] | None = None,
) -> list[SignChangeReport]:
    """Sign-change reports for every admissible prime p <= p_max.

    For each prime coprime to the level: extract the twisted trace from
    the q-expansion, run the recurrence to length M+1, filter by mode, and
    count sign changes.  mode="progression" takes the pair (q, h) via the
    progression argument; primes for which h is not a power of p mod q
    (or p = q) do not satisfy the progression hypotheses and are skipped.
    Reports come back sorted by p.
    """
    a_t = coefficient(form, t, 1)
    if a_t == 0:
        raise ZeroBase(f"a({t}) = 0; the twisted sequence is identically zero")
    want_progression = mode == "progression" or isinstance(mode, ProgressionSpec)
    if mode == "progression" and progression is None:
        raise ValueError("mode='progression' needs the (q, h) pair")
    reports: list[SignChangeReport] = []
    for p in primes_up_to(p_max):
        if form.level % p == 0:
            continue
        this_mode: Mode = mode
        if want_progression:
            q, h = (
                (mode.q, mode.h) if isinstance(mode, ProgressionSpec) else progression
            )
            if p == q:
                continue
            try:
                this_mode = ProgressionSpec.create(q=q, h=h, p=p)
            except NotInSubgroup:
                continue
        trace = hecke_mod.extract_trace(form, t, p)
        c1 = chi1(p, t, form.k, form.level)
        seq = twisted_sequence(a_t, trace, c1, p, form.k, M)
        filtered = subsequence(seq, this_mode)
        stats = count_sign_changes(filtered)
        label = this_mode.label if isinstance(this_mode, ProgressionSpec) else str(this_mode)
        reports.append(
            SignChangeReport(
                p=p,
                t=t,
                mode=label,
                length=stats.length,
                change_count=stats.change_count,
                first_change_index=stats.first_change_index,
                change_positions=stats.change_positions,
                zero_count=stats.zero_count,
                deligne=hecke_mod.deligne_check(trace, p, form.k),
            )
        )
    return reports
