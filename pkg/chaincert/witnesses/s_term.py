"""
s-term witnesses.
Above the threshold M one of s_1 .. s_(k+1) has a prime divisor p not
dividing a, where k counts the distinct primes of a. Since z is congruent to
b(a^i - 1)/(a - 1) modulo p, f^r(z) vanishes mod p for r the residue of -i
modulo p (p | a - 1) or modulo p - 1.
"""

from __future__ import annotations

from ..arith import distinct_prime_count
from ..certificate import Certificate
from ..chain import LinearMap
from ..errors import BelowThreshold, NoEligiblePrime
from ..sequence import s_terms, threshold_M
from .base import BaseWitness, build_certificate, eligible_primes


def lemma_prime(f: LinearMap, z: int) -> tuple[int, int] | None:
    """First (i, p) over i = 1..k+1 with p | s_i prime and p not dividing a."""
    k = distinct_prime_count(f.a)
    for i, s in enumerate(s_terms(f, z, k + 1).terms, start=1):
        primes = eligible_primes(s, f.a)
        if primes:
            return i, primes[0]
    return None


class STermWitness(BaseWitness):
    """Witness from the first eligible divisor among s_1 .. s_(k+1)."""

    name = "s_term"
    description = "prime factor of an early s-term (bound l(z) < z for every z > M)"

    def certify(self, f: LinearMap, z: int) -> Certificate:
        threshold = threshold_M(f)
        if z <= threshold:
            raise BelowThreshold(z, threshold)
        self.require_coprime_root(f, z)

        hit = lemma_prime(f, z)
        if hit is None:
            # Cannot happen above the threshold
            raise NoEligiblePrime(f"no s_i with an eligible prime for {f}, z={z}")
        i, p = hit

        certificate = build_certificate(f, z, p, source_index=i)
        self._log(f"{f}, z={z} > M={threshold}: {p} | s_{i} gives witness {certificate.witness_index}")
        return certificate
