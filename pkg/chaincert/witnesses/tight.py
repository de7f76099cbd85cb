"""
Tight witnesses.
Enumerate every root divisor and every divisor of s_i while |s_i| <= z, and
keep the certificate with the smallest witness index.
"""

from __future__ import annotations

from ..certificate import Certificate
from ..chain import LinearMap, apply
from ..errors import NoCandidate
from ..sequence import s_term
from .base import BaseWitness, build_certificate, eligible_primes


class TightWitness(BaseWitness):
    """Best certificate over the whole scan window."""

    name = "tight"
    description = "smallest witness over root divisors and every s-term with |s_i| <= z"

    def candidates(self, f: LinearMap, z: int) -> list[Certificate]:
        found = [build_certificate(f, z, p) for p in eligible_primes(z, f.a)]

        # s_i decreases in i, so the window ends at the first s_i below -z
        i, s = 1, s_term(f, z, 1)
        while s >= -z:
            if abs(s) >= 2:
                for p in eligible_primes(s, f.a):
                    if p < apply(f, z):
                        found.append(build_certificate(f, z, p, source_index=i))
            i += 1
            s = s_term(f, z, i)
        return found

    def certify(self, f: LinearMap, z: int) -> Certificate:
        self.require_coprime_root(f, z)

        found = self.candidates(f, z)
        if not found:
            raise NoCandidate(
                f"no root divisor or s-term divisor outside a={f.a} for {f}, z={z}"
            )

        best = min(
            found, key=lambda c: (c.witness_index, c.prime, c.source_index or 0)
        )
        self._log(f"{f}, z={z}: {len(found)} candidates, best is {best.describe()}")
        return best
