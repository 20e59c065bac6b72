"""Exact polynomial and rational-generating-function engine.

Houses the closed form of the twisted coefficient series

    H(X) = lead * (1 - chi1_p p^(k-1) X) / (1 - trace X + p^(2k-1) X^2),

its even/odd split S0, S1 over the common degree-4 denominator, power
series expansion, the Lucas-normalized companion polynomial of the local
Satake data, and exact real-root counting via Sturm sequences.

All identity checking is done by cross-multiplication into polynomial
identities; nothing in this module touches floating point.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .arith import Rational, as_fraction
from .errors import NotExpandable, ZeroPolynomial
from .hecke import HeckeLocalData

__all__ = [
    "Polynomial",
    "RationalGF",
    "h_n_closed",
    "s_split_closed",
    "expand",
    "remark_polynomial",
    "real_root_count",
    "sturm_chain",
]


@dataclass(frozen=True)
class Polynomial:
    """Dense polynomial over the rationals, coefficients in ascending degree.

    Trailing zeros are stripped; the zero polynomial has an empty
    coefficient tuple and degree -1.
    """

    coeffs: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        coeffs = tuple(as_fraction(c) for c in self.coeffs)
        while coeffs and coeffs[-1] == 0:
            coeffs = coeffs[:-1]
        object.__setattr__(self, "coeffs", coeffs)

    @classmethod
    def of(cls, *coeffs: Rational) -> "Polynomial":
        return cls(tuple(as_fraction(c) for c in coeffs))

    @classmethod
    def from_coeffs(cls, coeffs: Iterable[Rational]) -> "Polynomial":
        return cls(tuple(as_fraction(c) for c in coeffs))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> Fraction:
        if self.is_zero:
            raise ZeroPolynomial("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __call__(self, x: Rational) -> Fraction:
        x = as_fraction(x)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __add__(self, other: "Polynomial") -> "Polynomial":
        n = max(len(self.coeffs), len(other.coeffs))
        return Polynomial(
            tuple(
                (self.coeffs[i] if i < len(self.coeffs) else 0)
                + (other.coeffs[i] if i < len(other.coeffs) else 0)
                for i in range(n)
            )
        )

    def __neg__(self) -> "Polynomial":
        return Polynomial(tuple(-c for c in self.coeffs))

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        if self.is_zero or other.is_zero:
            return Polynomial(())
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                if b:
                    out[i + j] += a * b
        return Polynomial(tuple(out))

    def scale(self, c: Rational) -> "Polynomial":
        c = as_fraction(c)
        return Polynomial(tuple(c * v for v in self.coeffs))

    def divmod(self, other: "Polynomial") -> tuple["Polynomial", "Polynomial"]:
        """Exact euclidean division over the rationals."""
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        quot = [Fraction(0)] * max(len(rem) - len(other.coeffs) + 1, 0)
        d = other.degree
        lead = other.leading
        for i in range(len(rem) - 1, d - 1, -1):
            if rem[i] == 0:
                continue
            c = rem[i] / lead
            quot[i - d] = c
            for j, b in enumerate(other.coeffs):
                rem[i - d + j] -= c * b
        return Polynomial(tuple(quot)), Polynomial(tuple(rem))

    def derivative(self) -> "Polynomial":
        return Polynomial(tuple(i * c for i, c in enumerate(self.coeffs) if i > 0))


def _integer_primitive(poly: Polynomial) -> list[int]:
    """Scale a rational polynomial to a primitive integer coefficient list."""
    lcm = 1
    for c in poly.coeffs:
        lcm = lcm * c.denominator // math.gcd(lcm, c.denominator)
    ints = [int(c * lcm) for c in poly.coeffs]
    content = 0
    for v in ints:
        content = math.gcd(content, abs(v))
    return [v // content for v in ints] if content else ints


def poly_gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    """Greatest common divisor, computed by a content-normalized
    (primitive) pseudo-remainder sequence on integer polynomials.

    Result is primitive with positive leading coefficient; gcd(0, 0) = 0.
    """
    if a.is_zero:
        u = b
    elif b.is_zero:
        u = a
    else:
        fa = _integer_primitive(a)
        fb = _integer_primitive(b)
        if len(fa) < len(fb):
            fa, fb = fb, fa
        while fb:
            # pseudo-remainder: lc(fb)^(deg gap + 1) * fa mod fb, then
            # divide out the content
            lead = fb[-1]
            rem = list(fa)
            d = len(fb) - 1
            for i in range(len(rem) - 1, d - 1, -1):
                if rem[i] == 0:
                    continue
                c = rem[i]
                rem = [v * lead for v in rem]
                for j, bv in enumerate(fb):
                    rem[i - d + j] -= c * bv
            while rem and rem[-1] == 0:
                rem.pop()
            content = 0
            for v in rem:
                content = math.gcd(content, abs(v))
            if content:
                rem = [v // content for v in rem]
            fa, fb = fb, rem
        u = Polynomial(tuple(Fraction(v) for v in fa))
    if u.is_zero:
        return u
    ints = _integer_primitive(u)
    if ints[-1] < 0:
        ints = [-v for v in ints]
    return Polynomial(tuple(Fraction(v) for v in ints))


def squarefree_part(poly: Polynomial) -> Polynomial:
    """poly / gcd(poly, poly'); same distinct roots, all simple."""
    if poly.is_zero:
        raise ZeroPolynomial("squarefree part of the zero polynomial")
    g = poly_gcd(poly, poly.derivative())
    if g.degree < 1:
        return poly
    quotient, remainder = poly.divmod(g)
    assert remainder.is_zero
    return quotient


@dataclass(frozen=True)
class RationalGF:
    """Reduced rational function num/den with den(0) normalized to 1.

    The denominator must not vanish at 0 (the function is expandable as a
    power series there); construction reduces by the polynomial gcd and
    rescales so den(0) = 1, making the representation canonical.
    """

    num: Polynomial
    den: Polynomial

    def __post_init__(self) -> None:
        num, den = self.num, self.den
        if den.is_zero or den.coeffs[0] == 0:
            raise NotExpandable("denominator vanishes at X = 0")
        if num.is_zero:
            num, den = Polynomial(()), Polynomial.of(1)
        else:
            g = poly_gcd(num, den)
            if g.degree >= 1:
                num, _ = num.divmod(g)
                den, _ = den.divmod(g)
            c = den.coeffs[0]
            num = num.scale(1 / c)
            den = den.scale(1 / c)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    @classmethod
    def of(cls, num: Iterable[Rational], den: Iterable[Rational]) -> "RationalGF":
        return cls(Polynomial.from_coeffs(num), Polynomial.from_coeffs(den))

    def __add__(self, other: "RationalGF") -> "RationalGF":
        return RationalGF(
            self.num * other.den + other.num * self.den, self.den * other.den
        )

    def cross_equal(self, other: "RationalGF") -> bool:
        """Equality as rational functions, by cross-multiplied polynomial identity."""
        return self.num * other.den == other.num * self.den


def expand(gf: RationalGF, M: int) -> list[Fraction]:
    """First M+1 power-series coefficients of num/den, exactly.

    Uses the linear recurrence den(0) c_m = num_m - sum_j den_j c_{m-j};
    den(0) = 1 after normalization.
    """
    if M < 0:
        raise ValueError("M must be nonnegative")
    num, den = gf.num.coeffs, gf.den.coeffs
    out: list[Fraction] = []
    for m in range(M + 1):
        c = num[m] if m < len(num) else Fraction(0)
        for j in range(1, min(m, len(den) - 1) + 1):
            c -= den[j] * out[m - j]
        out.append(c)
    return out


def h_n_closed(lead: Rational, trace: Rational, chi1_p: int, p: int, k: int) -> RationalGF:
    """Closed form lead * (1 - chi1_p p^(k-1) X) / (1 - trace X + p^(2k-1) X^2).

    Its expansion coefficients are the twisted values a(t p^(2m) n^2)/chi(p^m n)
    when lead = a(t n^2)/chi(n) and trace is the twisted Hecke trace at p.
    """
    if k < 2:
        raise ValueError("k must be at least 2")
    if chi1_p not in (-1, 0, 1):
        raise ValueError("chi1_p must be one of -1, 0, 1")
    lead = as_fraction(lead)
    trace = as_fraction(trace)
    num = Polynomial.of(lead, -lead * chi1_p * p ** (k - 1))
    den = Polynomial.of(1, -trace, p ** (2 * k - 1))
    return RationalGF(num, den)


def s_split_closed(
    a_t: Rational,
    a_tp2_twisted: Rational,
    trace: Rational,
    chi1_p: int,
    p: int,
    k: int,
) -> tuple[RationalGF, RationalGF]:
    """Even/odd split (S0, S1) of the twisted series over the degree-4 denominator.

        S1 = X (a_tp2_twisted - a_t chi1_p p^(3k-2) X^2) / D
        S0 = a_t (1 + (p^(2k-1) - trace chi1_p p^(k-1)) X^2) / D
        D  = (1 - trace X + p^(2k-1) X^2)(1 + trace X + p^(2k-1) X^2)

    where a_tp2_twisted = a(t p^2)/chi(p).  S0 collects the even-index
    terms of the twisted series and S1 the odd-index terms.
    """
    if k < 2:
        raise ValueError("k must be at least 2")
    if chi1_p not in (-1, 0, 1):
        raise ValueError("chi1_p must be one of -1, 0, 1")
    a_t = as_fraction(a_t)
    a_tp2_twisted = as_fraction(a_tp2_twisted)
    trace = as_fraction(trace)
    norm = Fraction(p ** (2 * k - 1))
    den = Polynomial.of(1, -trace, norm) * Polynomial.of(1, trace, norm)
    s0_num = Polynomial.of(a_t, 0, a_t * (norm - trace * chi1_p * p ** (k - 1)))
    s1_num = Polynomial.of(0, a_tp2_twisted, 0, -a_t * chi1_p * p ** (3 * k - 2))
    return RationalGF(s0_num, den), RationalGF(s1_num, den)


def lucas_sequence(trace: Fraction, norm: Fraction, count: int) -> list[Fraction]:
    """u_0..u_count with u_0 = 0, u_1 = 1, u_{j+1} = trace u_j - norm u_{j-1}.

    u_j = (alpha^j - beta^j)/(alpha - beta) for the roots alpha, beta of
    X^2 - trace X + norm.
    """
    values = [Fraction(0), Fraction(1)]
    while len(values) <= count:
        values.append(trace * values[-1] - norm * values[-2])
    return values[: count + 1]


def remark_polynomial(local: HeckeLocalData, m_p: int) -> Polynomial:
    """Rationalized companion Q(X) = norm u_{m_p - 1} X^m_p - u_{m_p} X^(m_p - 1) + 1.

    The polynomial (beta alpha^m - alpha beta^m) X^m + (beta^m - alpha^m) X^(m-1)
    + (alpha - beta) built from the Satake roots factors as (alpha - beta) Q(X),
    so its real zeros coincide with the real zeros of Q.  For m_p = 1 the
    polynomial vanishes identically.
    """
    if m_p < 1:
        raise ValueError("m_p must be at least 1")
    u = lucas_sequence(local.trace, local.norm, m_p)
    coeffs = [Fraction(0)] * (m_p + 1)
    coeffs[0] = Fraction(1)
    coeffs[m_p - 1] -= u[m_p]
    coeffs[m_p] += local.norm * u[m_p - 1]
    return Polynomial(tuple(coeffs))


def sturm_chain(poly: Polynomial) -> list[Polynomial]:
    """Sturm sequence of a squarefree polynomial."""
    chain = [poly, poly.derivative()]
    while not chain[-1].is_zero and chain[-1].degree >= 1:
        _, rem = chain[-2].divmod(chain[-1])
        if rem.is_zero:
            break
        chain.append(-rem)
    return [c for c in chain if not c.is_zero]


def _sign_variations(signs: Sequence[int]) -> int:
    filtered = [s for s in signs if s != 0]
    return sum(1 for a, b in zip(filtered, filtered[1:]) if a != b)


def real_root_count(poly: Polynomial) -> int:
    """Number of distinct real roots, by Sturm's theorem on (-inf, +inf).

    The polynomial is first reduced to its squarefree part, so multiple
    roots are counted once.
    """
    if poly.is_zero:
        raise ZeroPolynomial("real_root_count of the zero polynomial")
    if poly.degree == 0:
        return 0
    reduced = squarefree_part(poly)
    if reduced.degree == 0:
        return 0
    chain = sturm_chain(reduced)

    def sign_at_inf(c: Polynomial, positive: bool) -> int:
        s = 1 if c.leading > 0 else -1
        if not positive and c.degree % 2 == 1:
            s = -s
        return s

    high = _sign_variations([sign_at_inf(c, True) for c in chain])
    low = _sign_variations([sign_at_inf(c, False) for c in chain])
    return low - high
