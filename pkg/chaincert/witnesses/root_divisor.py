"""
Root divisor witnesses.
A prime p dividing the root but not a divides f^p(z) when p | a - 1 and
f^(p-1)(z) otherwise, by Fermat's little theorem.
"""

from ..certificate import Certificate
from ..chain import LinearMap
from ..errors import NoEligiblePrime
from .base import BaseWitness, build_certificate, eligible_primes


class RootDivisorWitness(BaseWitness):
    """Witness from the smallest prime factor of z that does not divide a."""

    name = "root_divisor"
    description = "prime factor of the root (bound l(z) < z for z with a factor not dividing a)"

    def certify(self, f: LinearMap, z: int) -> Certificate:
        if z < 2:
            raise NoEligiblePrime(f"root {z} has no prime factor")
        self.require_coprime_root(f, z)

        primes = eligible_primes(z, f.a)
        if not primes:
            raise NoEligiblePrime(
                f"every prime factor of {z} divides a={f.a}; use the s-term witness"
            )

        certificate = build_certificate(f, z, primes[0])
        self._log(f"{f}, z={z}: root divisor {primes[0]} gives witness {certificate.witness_index}")
        return certificate
