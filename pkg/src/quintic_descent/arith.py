"""Exact integer primitives: gcd, valuations, radicals, integer roots and
recognition of the middle term 2^(2a) 5^(2b) p^(2c).

Everything works on plain Python ints; gmpy2 supplies the root extraction
and the cofactor primality test.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

import gmpy2

# trial division stops here; a surviving cofactor goes to the primality test
SMALL_PRIME_BOUND = 10_000


@lru_cache(maxsize=8)
def small_primes(bound: int = SMALL_PRIME_BOUND) -> tuple[int, ...]:
    """Primes <= bound by a plain sieve of Eratosthenes."""
    if bound < 2:
        return ()
    sieve = bytearray([1]) * (bound + 1)
    sieve[0] = sieve[1] = 0
    for i in range(2, math.isqrt(bound) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(range(i * i, bound + 1, i)))
    return tuple(i for i, flag in enumerate(sieve) if flag)


def is_prime(n: int) -> bool:
    return n >= 2 and bool(gmpy2.is_prime(n, 40))


def gcd(a: int, b: int) -> int:
    if a == 0 and b == 0:
        raise ValueError("gcd(0, 0) is undefined")
    return math.gcd(a, b)


def valuation(q: int, a: int) -> int:
    """Largest e with q**e dividing a."""
    if a == 0:
        raise ValueError("valuation of 0 is infinite")
    if not is_prime(q):
        raise ValueError(f"{q} is not prime")
    a = abs(a)
    e = 0
    while a % q == 0:
        a //= q
        e += 1
    return e


def strip_factor(a: int, q: int) -> tuple[int, int]:
    """Return (e, a / q**e) with e = v_q(a)."""
    e = 0
    while a % q == 0:
        a //= q
        e += 1
    return e, a


def factorize(a: int, bound: int = SMALL_PRIME_BOUND) -> dict[int, int]:
    """Prime factorization for desk-scale inputs.

    Trial division by primes up to ``bound``; a remaining cofactor must be
    prime, otherwise ValueError (no general-purpose factoring here).
    """
    if a < 1:
        raise ValueError("factorize expects a positive integer")
    out: dict[int, int] = {}
    for q in small_primes(bound):
        if q * q > a:
            break
        if a % q == 0:
            e, a = strip_factor(a, q)
            out[q] = e
    if a > 1:
        if not is_prime(a):
            raise ValueError(f"cofactor {a} is composite beyond the trial-division bound")
        out[a] = out.get(a, 0) + 1
    return out


def radical(a: int) -> int:
    if a < 1:
        raise ValueError("radical is defined for a >= 1")
    return math.prod(factorize(a))


def nth_root_floor(a: int, n: int) -> tuple[int, bool]:
    """Return (floor(a ** (1/n)), exact)."""
    if n < 1:
        raise ValueError("root index must be >= 1")
    if a < 0:
        if n % 2 == 0:
            raise ValueError("even root of a negative number")
        r, exact = nth_root_floor(-a, n)
        # floor of a negative real root
        return (-r, True) if exact else (-r - 1, False)
    r, exact = gmpy2.iroot(a, n)
    return int(r), bool(exact)


def is_square(a: int) -> bool:
    return a >= 0 and bool(gmpy2.is_square(a))


def prime_power(s: int, bound: int = SMALL_PRIME_BOUND) -> Optional[tuple[int, int]]:
    """Return (q, e) with s == q**e, q prime, e >= 1; None if s is not a prime power."""
    if s < 2:
        return None
    for q in small_primes(bound):
        if q * q > s:
            break
        if s % q == 0:
            e, rest = strip_factor(s, q)
            return (q, e) if rest == 1 else None
    # every prime factor of s exceeds min(bound, sqrt(s))
    e = 1
    while True:
        r, exact = nth_root_floor(s, e)
        if r < 2:
            return None
        if exact and is_prime(r):
            return r, e
        e += 1


@dataclass(frozen=True)
class PowerShape:
    """y^2 = 2^(2 alpha) 5^(2 beta) p^(2 gamma); p is None exactly when gamma == 0."""

    alpha: int
    beta: int
    gamma: int
    p: Optional[int] = None

    def __post_init__(self):
        if self.alpha < 1 or self.beta < 0 or self.gamma < 0:
            raise ValueError("need alpha >= 1, beta >= 0, gamma >= 0")
        if (self.p is None) != (self.gamma == 0):
            raise ValueError("p must be given iff gamma > 0")
        if self.p is not None and (self.p in (2, 5) or not is_prime(self.p)):
            raise ValueError(f"p = {self.p} must be an odd prime other than 5")

    def value(self) -> int:
        v = 2 ** (2 * self.alpha) * 5 ** (2 * self.beta)
        if self.p is not None:
            v *= self.p ** (2 * self.gamma)
        return v

    def as_dict(self) -> dict:
        return {"alpha": self.alpha, "beta": self.beta, "gamma": self.gamma, "p": self.p}


def power_shape(y2: int, bound: int = SMALL_PRIME_BOUND) -> Optional[PowerShape]:
    """Recognise y2 = 2^(2a) 5^(2b) p^(2c) with a >= 1; None when no such form exists.

    A prime p = 5 is absorbed into beta.
    """
    if y2 < 1:
        raise ValueError("power_shape expects y2 >= 1")
    e2, rest = strip_factor(y2, 2)
    if e2 < 2 or e2 % 2:
        return None
    e5, rest = strip_factor(rest, 5)
    if e5 % 2:
        return None
    if rest == 1:
        return PowerShape(e2 // 2, e5 // 2, 0, None)
    if not is_square(rest):
        return None
    pp = prime_power(math.isqrt(rest), bound)
    if pp is None:
        return None
    p, gamma = pp
    return PowerShape(e2 // 2, e5 // 2, gamma, p)
