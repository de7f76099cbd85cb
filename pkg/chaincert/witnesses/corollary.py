"""
Image-root witnesses.
f(z) = az + b is always coprime to a, so its smallest prime factor gives a
root divisor certificate for the root f(z), and l(z) <= l(f(z)) + 1.
"""

from ..certificate import Certificate
from ..chain import LinearMap, apply
from .root_divisor import RootDivisorWitness


class CorollaryWitness(RootDivisorWitness):
    """Root divisor certificate for f(z); works for every z >= 1."""

    name = "corollary"
    description = "root divisor witness for f(z) (bound l(z) < az + b + 1 for every z)"

    def certify(self, f: LinearMap, z: int) -> Certificate:
        self.require_coprime_root(f, z)
        return super().certify(f, apply(f, z))
