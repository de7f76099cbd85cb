"""
Dynamics of linear maps f(z) = az + b and the chains of primes they produce.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

import gmpy2

from .arith import gcd, is_composite, is_prime
from .config import DEFAULT_MAX_STEPS
from .errors import (
    CoefficientsNotCoprime,
    MultiplierTooSmall,
    NotPrime,
    OffsetNotPositive,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class LinearMap:
    """The map f(z) = az + b with a >= 2, b >= 1 and gcd(a, b) = 1."""

    a: int
    b: int

    def __post_init__(self):
        if self.a < 2:
            raise MultiplierTooSmall(self.a, self.b)
        if self.b < 1:
            raise OffsetNotPositive(self.a, self.b)
        divisor = gcd(self.a, self.b)
        if divisor != 1:
            raise CoefficientsNotCoprime(self.a, self.b, divisor)

    def __str__(self) -> str:
        return f"{self.a}z+{self.b}"

    def __call__(self, z: int) -> int:
        return apply(self, z)


def apply(f: LinearMap, z: int) -> int:
    return f.a * z + f.b


def geometric_sum(a: int, n: int) -> int:
    """1 + a + ... + a**(n-1), exactly."""
    return (a**n - 1) // (a - 1)


def iterate(f: LinearMap, z: int, n: int) -> int:
    """f^n(z) = a^n z + b (a^n - 1)/(a - 1)."""
    if n < 0:
        raise ValueError(f"iterate() requires n >= 0 (got {n})")
    an = f.a**n
    return an * z + f.b * ((an - 1) // (f.a - 1))


def geometric_sum_mod(a: int, n: int, m: int) -> int:
    """
    (1 + a + ... + a**(n-1)) mod m.

    Divides by a - 1 when it is invertible mod m, otherwise walks the bits of
    n with S(2k) = S(k)(1 + a^k) and S(k + 1) = S(k) + a^k.
    """
    if gcd(a - 1, m) == 1:
        numerator = (gmpy2.powmod(a, n, m) - 1) % m
        return int(numerator * gmpy2.invert(a - 1, m) % m)

    total, power = 0, 1 % m  # S(0), a^0
    for bit in bin(n)[2:]:
        total = total * (1 + power) % m
        power = power * power % m
        if bit == "1":
            total = (total + power) % m
            power = power * a % m
    return int(total)


def iterate_mod(f: LinearMap, z: int, n: int, m: int) -> int:
    """f^n(z) mod m without building f^n(z)."""
    if n < 0:
        raise ValueError(f"iterate_mod() requires n >= 0 (got {n})")
    if m < 2:
        raise ValueError(f"iterate_mod() requires m >= 2 (got {m})")
    scaled = gmpy2.powmod(f.a, n, m) * (z % m)
    return int((scaled + f.b * geometric_sum_mod(f.a, n, m)) % m)


def inverse(f: LinearMap, x: int) -> int | None:
    """(x - b)/a when it is a positive integer, otherwise None."""
    if x <= f.b:
        return None
    q, r = divmod(x - f.b, f.a)
    return q if r == 0 else None


def inverse_iterate(f: LinearMap, z: int, n: int) -> int | None:
    """f^-n(z), or None as soon as a preimage leaves the positive integers."""
    x = z
    for _ in range(n):
        x = inverse(f, x)
        if x is None:
            return None
    return x


@dataclass(frozen=True)
class RootedChain:
    """
    The orbit f(z), ..., f^l(z) of a root z, all prime, ended by a composite.
    A truncated chain stopped at max_steps and has no terminator.
    """

    map: LinearMap
    root: int
    elements: tuple[int, ...]
    terminator: int | None
    truncated: bool = False

    @property
    def length(self) -> int:
        return len(self.elements)

    @property
    def first_element(self) -> int | None:
        return self.elements[0] if self.elements else None

    @property
    def last_element(self) -> int | None:
        return self.elements[-1] if self.elements else None


@dataclass(frozen=True)
class CompleteChain:
    """A chain of primes that cannot be extended forwards or backwards."""

    map: LinearMap
    elements: tuple[int, ...]

    @property
    def lambda_(self) -> int:
        return len(self.elements)

    @property
    def head(self) -> int:
        return self.elements[0]

    @property
    def last(self) -> int:
        return self.elements[-1]

    @property
    def fermat_bound(self) -> int | None:
        """
        Upper bound on lambda from the head p alone: p divides f^p(p) when
        p | a - 1 and f^(p-1)(p) otherwise. None when p divides a.
        """
        p, a = self.head, self.map.a
        if a % p == 0:
            return None
        return p if (a - 1) % p == 0 else p - 1


def rooted_chain(
    f: LinearMap, z: int, max_steps: int = DEFAULT_MAX_STEPS
) -> RootedChain:
    """
    Iterate f from the root z until the first composite or max_steps primes.
    A root sharing a factor with b has every iterate composite, so its chain is
    empty and no primality test is run.
    """
    if z < 1:
        raise ValueError(f"rooted_chain() requires z >= 1 (got {z})")
    if max_steps < 1:
        raise ValueError(f"rooted_chain() requires max_steps >= 1 (got {max_steps})")

    if gcd(z, f.b) > 1:
        return RootedChain(f, z, (), apply(f, z))

    elements: list[int] = []
    x = apply(f, z)
    while len(elements) < max_steps:
        if is_composite(x):
            return RootedChain(f, z, tuple(elements), x)
        elements.append(x)
        x = apply(f, x)

    logger.debug("chain of %s from root %d truncated at %d steps", f, z, max_steps)
    return RootedChain(f, z, tuple(elements), None, truncated=True)


def complete_chain(f: LinearMap, p: int) -> CompleteChain:
    """Extend the prime p backwards through prime preimages and forwards through prime images."""
    if not is_prime(p):
        raise NotPrime(p)

    backwards: list[int] = []
    x = p
    while True:
        x = inverse(f, x)
        if x is None or not is_prime(x):
            break
        backwards.append(x)

    elements = backwards[::-1] + [p]
    x = apply(f, p)
    while is_prime(x):
        elements.append(x)
        x = apply(f, x)

    return CompleteChain(f, tuple(elements))


def as_rooted_chain(chain: CompleteChain) -> RootedChain | None:
    """
    View a complete chain as the rooted chain whose root is the preimage of
    its head; None when the head has no positive integer preimage.
    """
    root = inverse(chain.map, chain.head)
    if root is None:
        return None
    return RootedChain(chain.map, root, chain.elements, apply(chain.map, chain.last))
