"""
Integer primitives: primality, factorization, gcd and p-adic valuation.

All functions accept Python ints or gmpy2 mpz values and return Python ints,
so results pickle cleanly across worker processes and compare with literals.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from itertools import count
from typing import Iterator

import gmpy2
from gmpy2 import mpz

from .config import DEFAULT_TRIAL_BOUND, get_factor_bits
from .errors import SizeGuardExceeded, ZeroValuation

logger = logging.getLogger(__name__)

# The first twelve primes are a deterministic Miller-Rabin witness set for
# every n < 3.3 * 10**24, which covers the whole 64-bit word range.
WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
WORD_LIMIT = 1 << 64


def primes_below(limit: int) -> list[int]:
    """Primes p < limit by a plain sieve of Eratosthenes."""
    if limit < 3:
        return []
    sieve = bytearray([1]) * limit
    sieve[0] = sieve[1] = 0
    for p in range(2, gmpy2.isqrt(limit - 1) + 1):
        if sieve[p]:
            sieve[p * p :: p] = bytearray(len(range(p * p, limit, p)))
    return [i for i, flag in enumerate(sieve) if flag]


_TRIAL_PRIMES = tuple(primes_below(DEFAULT_TRIAL_BOUND))


def is_prime(n: int) -> bool:
    """
    Deterministic primality test.

    Below 2**64 a strong probable prime test to every base in WITNESSES is a
    proof. Above it the strong Baillie-PSW test (strong base-2 plus strong
    Lucas) is used, which has no known counterexample and gives the same
    answer on every run.
    """
    n = int(n)
    if n < 2:
        return False
    for p in WITNESSES:
        if n == p:
            return True
        if n % p == 0:
            return False
    if n < WITNESSES[-1] ** 2:
        return True
    if n < WORD_LIMIT:
        # n is odd and coprime to every witness at this point
        return all(gmpy2.is_strong_prp(n, w) for w in WITNESSES)
    return bool(gmpy2.is_strong_bpsw_prp(n))


def is_composite(n: int) -> bool:
    return int(n) > 1 and not is_prime(n)


def gcd(x: int, y: int) -> int:
    """Greatest common divisor, with gcd(0, y) = y."""
    return int(gmpy2.gcd(x, y))


def nu(p: int, x: int) -> int:
    """
    The p-adic valuation of x: the largest e with p**e dividing x.
    Negative x is valued through |x|.
    """
    if x == 0:
        raise ZeroValuation(int(p))
    _, exponent = gmpy2.remove(abs(mpz(x)), p)
    return int(exponent)


@dataclass(frozen=True)
class PrimeFactorization:
    """Ordered (prime, exponent) pairs; the empty tuple encodes 1."""

    factors: tuple[tuple[int, int], ...] = ()

    def __iter__(self) -> Iterator[tuple[int, int]]:
        return iter(self.factors)

    def __len__(self) -> int:
        return len(self.factors)

    @property
    def primes(self) -> list[int]:
        return [p for p, _ in self.factors]

    @property
    def value(self) -> int:
        result = 1
        for p, e in self.factors:
            result *= p**e
        return result

    def as_dict(self) -> dict[int, int]:
        return dict(self.factors)


def _pollard_brent(n: mpz) -> int:
    """
    Return a nontrivial factor of the odd composite n.

    Brent's cycle finding with batched gcds. The polynomial constant walks
    c = 1, 2, 3, ... instead of being random, so the output is reproducible.
    """
    if gmpy2.is_square(n):
        return int(gmpy2.isqrt(n))

    for c in count(1):
        y, r, q, g = mpz(2), 1, mpz(1), mpz(1)
        x = ys = y
        batch = 128
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(batch, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = gmpy2.gcd(q, n)
                k += batch
            r *= 2

        if g == n:
            # The batch overshot; replay it one step at a time
            g = mpz(1)
            while g == 1:
                ys = (ys * ys + c) % n
                g = gmpy2.gcd(abs(x - ys), n)

        if g != n:
            return int(g)
        logger.debug("rho with c=%d failed on %d, retrying", c, n)


def factorize(n: int, bits: int | None = None) -> PrimeFactorization:
    """
    Complete factorization of n >= 1.

    Trial division by the primes below DEFAULT_TRIAL_BOUND, then Pollard rho on
    whatever composite cofactor remains. The rho stage refuses to start when
    n is wider than the size guard (CHAINCERT_FACTOR_BITS, default 512).
    """
    n = int(n)
    if n < 1:
        raise ValueError(f"factorize() requires n >= 1 (got {n})")
    bits = get_factor_bits() if bits is None else bits

    exponents: dict[int, int] = {}
    m = mpz(n)
    for p in _TRIAL_PRIMES:
        if p * p > m:
            break
        if m % p == 0:
            m, e = gmpy2.remove(m, p)
            exponents[p] = int(e)

    pending = [m] if m > 1 else []
    while pending:
        c = pending.pop()
        if is_prime(c):
            exponents[int(c)] = exponents.get(int(c), 0) + 1
            continue
        if n.bit_length() > bits:
            raise SizeGuardExceeded(int(c), bits)
        d = _pollard_brent(c)
        logger.debug("split %d = %d * %d", c, d, c // d)
        pending.extend([mpz(d), c // d])

    return PrimeFactorization(tuple(sorted(exponents.items())))


def distinct_prime_count(a: int) -> int:
    """Number of distinct primes dividing a (a >= 1)."""
    return len(factorize(a))
