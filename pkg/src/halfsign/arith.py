"""Elementary number theory helpers: primes, squarefree parts, Kronecker symbol.

Everything is exact integer arithmetic; these are the primitives the rest
of the package leans on.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Union

Rational = Union[int, Fraction]


def as_fraction(x: Rational) -> Fraction:
    """Coerce an int or Fraction to Fraction; reject floats (exactness contract)."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"expected an exact rational, got {type(x).__name__}")


def primes_up_to(n: int) -> list[int]:
    """All primes <= n, by sieve of Eratosthenes."""
    if n < 2:
        return []
    sieve = bytearray(b"\x01") * (n + 1)
    sieve[0] = sieve[1] = 0
    for p in range(2, math.isqrt(n) + 1):
        if sieve[p]:
            start = p * p
            sieve[start :: p] = b"\x00" * len(range(start, n + 1, p))
    return [i for i, alive in enumerate(sieve) if alive]


def is_prime(n: int) -> bool:
    """Deterministic trial-division primality test (inputs here are small)."""
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def squarefree_decompose(n: int) -> tuple[int, int]:
    """Write n = t * m^2 with t squarefree; returns (t, m).

    The decomposition is unique.  Trial division, fine for indices up to
    the precisions this package works at.
    """
    if n < 1:
        raise ValueError("n must be a positive integer")
    t, m = 1, 1
    p = 2
    while p * p <= n:
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            if e % 2:
                t *= p
            m *= p ** (e // 2)
        p += 1 if p == 2 else 2
    return t * n, m


def is_squarefree(n: int) -> bool:
    return squarefree_decompose(n)[1] == 1


def kronecker(a: int, n: int) -> int:
    """Kronecker symbol (a|n) for arbitrary integers.

    Standard extension of the Jacobi symbol: (a|0) = [|a| = 1],
    (a|-1) = sign(a) (with (0|-1) = 1), (a|2) = 0 for even a and
    +-1 according to a mod 8 otherwise, completely multiplicative
    in the bottom argument.
    """
    if n == 0:
        return 1 if a in (1, -1) else 0
    if a % 2 == 0 and n % 2 == 0:
        return 0
    result = 1
    if n < 0:
        n = -n
        if a < 0:
            result = -1
    # factor of 2 in the bottom: (a|2) depends on a mod 8
    twos = 0
    while n % 2 == 0:
        n //= 2
        twos += 1
    if twos % 2 == 1 and a % 8 in (3, 5):
        result = -result
    # Jacobi loop on the odd positive part, with quadratic reciprocity
    a %= n
    while a != 0:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def multiplicative_order(a: int, q: int) -> int:
    """Order of a in (Z/q)*; raises if gcd(a, q) != 1."""
    a %= q
    if math.gcd(a, q) != 1:
        raise ValueError(f"{a} is not a unit modulo {q}")
    x, k = a, 1
    while x != 1:
        x = x * a % q
        k += 1
    return k


def smallest_primitive_root(q: int) -> int:
    """Smallest primitive root modulo a prime q."""
    if not is_prime(q):
        raise ValueError(f"{q} is not prime")
    if q == 2:
        return 1
    phi = q - 1
    prime_factors = {p for p in primes_up_to(phi) if phi % p == 0}
    for g in range(2, q):
        if all(pow(g, phi // p, q) != 1 for p in prime_factors):
            return g
    raise AssertionError("unreachable: every prime has a primitive root")
