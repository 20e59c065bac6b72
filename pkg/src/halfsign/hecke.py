"""Hecke eigenvalue extraction and validation from half-integral coefficients.

The twisted trace tau_p = lambda_p / chi(p) is read off the coefficient
recurrence

    tau_p a(t) = a(p^2 t)/chi(p) + chi1(p) p^(k-1) a(t),          (base)
    tau_p b_m  = b_{m+1} + p^(2k-1) b_{m-1}   for m >= 1,         (step)

where b_m = a(t p^(2m)) / chi(p^m).  Satake data is carried as the exact
pair (trace, norm = p^(2k-1)); the roots alpha, beta of
X^2 - trace*X + norm are never materialized as radicals or floats.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .arith import Rational, as_fraction, is_prime, is_squarefree
from .errors import NotCoprime, NotSquarefree, PrecisionExceeded, ZeroBase
from .forms import HalfIntegralForm, coefficient
from .shimura import chi1

__all__ = [
    "HeckeLocalData",
    "extract_trace",
    "eigen_consistency",
    "ConsistencyReport",
    "satake_data",
    "deligne_check",
    "multiplicativity_check",
]


@dataclass(frozen=True)
class HeckeLocalData:
    """Exact local data at p: trace tau_p, norm p^(2k-1), discriminant."""

    p: int
    trace: Fraction
    norm: Fraction
    disc: Fraction
    root_kind: str  # real_distinct | real_double | complex_pair

    def __post_init__(self) -> None:
        if self.disc != self.trace * self.trace - 4 * self.norm:
            raise ValueError("discriminant does not match trace^2 - 4*norm")
        expected = (
            "real_distinct" if self.disc > 0 else "real_double" if self.disc == 0 else "complex_pair"
        )
        if self.root_kind != expected:
            raise ValueError(f"root_kind {self.root_kind!r} does not match disc sign")


def satake_data(trace: Rational, p: int, k: int) -> HeckeLocalData:
    """Local data for the quadratic X^2 - trace*X + p^(2k-1)."""
    if k < 2:
        raise ValueError("k must be at least 2")
    if not is_prime(p):
        raise ValueError(f"p = {p} is not prime")
    trace = as_fraction(trace)
    norm = Fraction(p ** (2 * k - 1))
    disc = trace * trace - 4 * norm
    kind = "real_distinct" if disc > 0 else "real_double" if disc == 0 else "complex_pair"
    return HeckeLocalData(p=p, trace=trace, norm=norm, disc=disc, root_kind=kind)


def deligne_check(trace: Rational, p: int, k: int) -> str:
    """Compare trace^2 against 4 p^(2k-1) exactly.

    Returns "strict" when trace^2 < 4 p^(2k-1), "extremal" on equality
    (the trace is then +-2 p^(k-1/2), forcing sqrt(p) into the eigenvalue
    field), and "violated" beyond the bound.
    """
    trace = as_fraction(trace)
    bound = 4 * Fraction(p) ** (2 * k - 1)
    square = trace * trace
    if square < bound:
        return "strict"
    if square == bound:
        return "extremal"
    return "violated"


def extract_trace(form: HalfIntegralForm, t0: int, p: int) -> Fraction:
    """Twisted trace tau_p = a(p^2 t0)/(chi(p) a(t0)) + chi1(p) p^(k-1)."""
    if not is_prime(p):
        raise ValueError(f"p = {p} is not prime")
    if form.level % p == 0:
        raise NotCoprime(f"p = {p} divides the level {form.level}")
    if not is_squarefree(t0):
        raise NotSquarefree(f"t0 = {t0} is not squarefree")
    if t0 * p * p > form.prec:
        raise PrecisionExceeded(
            f"a({t0 * p * p}) is beyond precision {form.prec}"
        )
    a_t = coefficient(form, t0, 1)
    if a_t == 0:
        raise ZeroBase(f"a({t0}) = 0; pick a base index with nonzero coefficient")
    chi_p = form.chi(p)  # +-1 since p is coprime to the level
    a_tp2 = coefficient(form, t0, p)
    return chi_p * a_tp2 / a_t + chi1(p, t0, form.k, form.level) * p ** (form.k - 1)


@dataclass(frozen=True)
class ConsistencyReport:
    """Residuals of the eigen recurrence, indexed by (t, m); m = 0 is the base relation."""

    p: int
    residuals: dict[tuple[int, int], Fraction]
    skipped: tuple[tuple[int, int], ...]

    @property
    def consistent(self) -> bool:
        return all(r == 0 for r in self.residuals.values())

    def failures(self) -> list[tuple[int, int]]:
        return sorted(key for key, r in self.residuals.items() if r != 0)


def eigen_consistency(
    form: HalfIntegralForm,
    p: int,
    trace: Rational,
    t_set: list[int],
    m_max: int,
) -> ConsistencyReport:
    """Residuals R(t, m) of the coefficient recurrence for the given trace.

    R(t, 0) = trace*a(t) - b_1 - chi1(p) p^(k-1) a(t)   (only when a(t) != 0)
    R(t, m) = trace*b_m - b_{m+1} - p^(2k-1) b_{m-1}    for 1 <= m <= m_max

    with b_m = a(t p^(2m)) / chi(p^m).  Index pairs whose coefficients lie
    beyond the series precision are skipped and reported as such; the form
    is consistent at p iff every computed residual is exactly zero.
    """
    if not is_prime(p):
        raise ValueError(f"p = {p} is not prime")
    if form.level % p == 0:
        raise NotCoprime(f"p = {p} divides the level {form.level}")
    trace = as_fraction(trace)
    k, N = form.k, form.level
    chi_p = form.chi(p)
    norm = p ** (2 * k - 1)
    residuals: dict[tuple[int, int], Fraction] = {}
    skipped: list[tuple[int, int]] = []

    def b(t: int, m: int) -> Fraction:
        # chi(p^m) is +-1, so dividing equals multiplying
        return (chi_p ** (m % 2)) * coefficient(form, t, p**m)

    for t in t_set:
        if not is_squarefree(t):
            raise NotSquarefree(f"t = {t} is not squarefree")
        if t > form.prec:
            skipped.append((t, 0))
            continue
        a_t = coefficient(form, t, 1)
        for m in range(0, m_max + 1):
            if m == 0 and a_t == 0:
                continue
            if t * p ** (2 * m + 2) > form.prec:
                skipped.append((t, m))
                break
            if m == 0:
                residual = trace * a_t - b(t, 1) - chi1(p, t, k, N) * p ** (k - 1) * a_t
            else:
                residual = trace * b(t, m) - b(t, m + 1) - norm * b(t, m - 1)
            residuals[(t, m)] = residual
    if not residuals:
        raise PrecisionExceeded(
            f"no recurrence index for p = {p} fits within precision {form.prec}"
        )
    return ConsistencyReport(p=p, residuals=residuals, skipped=tuple(skipped))


def multiplicativity_check(form: HalfIntegralForm, t: int, m: int, n: int) -> Fraction:
    """Residual a(t m^2) a(t n^2) - a(t) a(t m^2 n^2); zero for eigenforms."""
    if math.gcd(m, n) != 1:
        raise NotCoprime(f"gcd({m}, {n}) > 1")
    if t * m * m * n * n > form.prec:
        raise PrecisionExceeded(
            f"a({t * m * m * n * n}) is beyond precision {form.prec}"
        )
    return coefficient(form, t, m) * coefficient(form, t, n) - coefficient(
        form, t, 1
    ) * coefficient(form, t, m * n)
