"""
The backward sequence s_n = z - b(a^n - 1)/(a - 1) and its valuations.

s_n is the numerator of f^-n(z) = s_n / a^n. Its prime divisors that do not
divide a feed the s-term witnesses; its valuations at primes dividing a
decide when such a divisor must exist.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

from .arith import distinct_prime_count, is_prime, nu
from .chain import LinearMap, geometric_sum
from .errors import NotDivisorOfA, NotPrime

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SSequence:
    map: LinearMap
    root: int
    terms: tuple[int, ...]

    def __getitem__(self, n: int) -> int:
        """s_n, 1-based."""
        if n < 1 or n > len(self.terms):
            raise IndexError(f"s_{n} is outside the recorded terms 1..{len(self.terms)}")
        return self.terms[n - 1]

    def __len__(self) -> int:
        return len(self.terms)


def s_term(f: LinearMap, z: int, n: int) -> int:
    """s_n by the closed form."""
    return z - f.b * geometric_sum(f.a, n)


def s_terms(f: LinearMap, z: int, count: int) -> SSequence:
    """s_1 .. s_count by s_1 = z - b, s_{n+1} = s_n - a^n b."""
    if count < 1:
        raise ValueError(f"s_terms() requires count >= 1 (got {count})")
    terms = [z - f.b]
    power = f.a
    while len(terms) < count:
        terms.append(terms[-1] - power * f.b)
        power *= f.a
    return SSequence(f, z, tuple(terms))


def threshold_M(f: LinearMap) -> int:
    """M = b + ab + ... + a^(k+1) b where k counts the distinct primes of a."""
    k = distinct_prime_count(f.a)
    return f.b * geometric_sum(f.a, k + 2)


@dataclass(frozen=True)
class ValuationTrace:
    """
    values[n - 1] is nu_p(s_n), or None where s_n = 0.
    stable_index is the n with nu_p(s_{n+1}) = n nu_p(a), when recorded.
    """

    map: LinearMap
    root: int
    prime: int
    values: tuple[int | None, ...]
    stable_index: int | None

    @property
    def nu_a(self) -> int:
        return nu(self.prime, self.map.a)

    def stable_indices(self) -> list[int]:
        """Every recorded n at which p is n-stable (at most one in a sound trace)."""
        found = []
        for n in range(1, len(self.values)):
            following = self.values[n]
            if following is not None and following == n * self.nu_a:
                found.append(n)
        return found


def stability_trace(f: LinearMap, z: int, p: int, count: int) -> ValuationTrace:
    if not is_prime(p):
        raise NotPrime(p)
    if f.a % p != 0:
        raise NotDivisorOfA(p, f.a)

    terms = s_terms(f, z, count).terms
    values = tuple(nu(p, s) if s != 0 else None for s in terms)
    trace = ValuationTrace(f, z, p, values, None)
    stable = trace.stable_indices()
    if len(stable) > 1:
        logger.warning("%d has several stable indices %s for %s, z=%d", p, stable, f, z)
    return ValuationTrace(f, z, p, values, stable[0] if stable else None)


def dichotomy_violations(trace: ValuationTrace) -> list[str]:
    """
    Check a trace against the valuation dichotomy: when nu_p(s_n) exceeds
    n nu_p(a) the next valuation is exactly n nu_p(a), otherwise it does not
    drop; after a stable index the valuation never changes; at most one
    stable index exists. Pairs touching a zero term are skipped.
    """
    violations = []
    nu_a = trace.nu_a
    values = trace.values

    for n in range(1, len(values)):
        current, following = values[n - 1], values[n]
        if current is None or following is None:
            continue
        if current > n * nu_a:
            if following != n * nu_a:
                violations.append(
                    f"n={n}: nu(s_n)={current} > {n * nu_a} but nu(s_n+1)={following}"
                )
        elif following < current:
            violations.append(f"n={n}: nu(s_n+1)={following} < nu(s_n)={current}")

    stable = trace.stable_indices()
    if len(stable) > 1:
        violations.append(f"several stable indices {stable}")
    if stable:
        level = stable[0] * nu_a
        for n1 in range(stable[0] + 1, len(values) + 1):
            value = values[n1 - 1]
            if value is not None and value != level:
                violations.append(f"n={n1}: nu(s_n)={value} after stability at {level}")

    return violations
