"""
Base class for compositeness witness strategies.
All strategy implementations should inherit from this class.
"""

from __future__ import annotations

import logging
from abc import ABC, abstractmethod

from ..arith import factorize, gcd
from ..certificate import Certificate, FermatCase, SourceKind, residue_witness
from ..chain import LinearMap
from ..errors import SharedFactor

logger = logging.getLogger(__name__)


def eligible_primes(n: int, a: int) -> list[int]:
    """Primes dividing |n| but not a, ascending."""
    n = abs(n)
    if n < 2:
        return []
    return [p for p in factorize(n).primes if a % p != 0]


def build_certificate(
    f: LinearMap, z: int, p: int, source_index: int | None = None
) -> Certificate:
    """
    Certificate for the prime p dividing z (source_index None) or s_i.
    The witness is the least positive residue of -i in the range the Fermat
    case allows; a root divisor behaves as i = 0.
    """
    fermat_case = FermatCase.for_prime(f.a, p)
    i = 0 if source_index is None else source_index
    return Certificate(
        a=f.a,
        b=f.b,
        z=z,
        prime=p,
        source_kind=(
            SourceKind.ROOT_DIVISOR if source_index is None else SourceKind.S_TERM
        ),
        source_index=source_index,
        fermat_case=fermat_case,
        witness_index=residue_witness(fermat_case, p, i),
    )


class BaseWitness(ABC):
    """Base class for all witness strategies."""

    # Strategy name (e.g., "root_divisor", "s_term")
    name: str = ""
    # One line shown by the command line help
    description: str = ""

    def __init__(self, verbose: bool = False):
        self.verbose = verbose

    def require_coprime_root(self, f: LinearMap, z: int) -> None:
        """Raise SharedFactor when z and b share a factor (length 0, nothing to certify)."""
        divisor = gcd(z, f.b)
        if divisor > 1:
            raise SharedFactor(z, f.b, divisor)

    @abstractmethod
    def certify(self, f: LinearMap, z: int) -> Certificate:
        """Produce a certificate bounding the rooted chain length of z."""
        pass

    def _log(self, message: str) -> None:
        """Log message at INFO when verbose, DEBUG otherwise."""
        logger.log(logging.INFO if self.verbose else logging.DEBUG, message)
