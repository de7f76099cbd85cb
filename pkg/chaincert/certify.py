"""
Certificates bounding the length of rooted chains without iterating them.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

from .arith import gcd
from .certificate import Certificate, Verdict, verify_certificate
from .chain import LinearMap, apply
from .errors import NoEligiblePrime
from .sequence import (
    SSequence,
    ValuationTrace,
    dichotomy_violations,
    s_terms,
    stability_trace,
    threshold_M,
)
from .witnesses import (
    CorollaryWitness,
    RootDivisorWitness,
    STermWitness,
    TightWitness,
    lemma_prime,
)

logger = logging.getLogger(__name__)


def witness_theorem1(f: LinearMap, z: int, verbose: bool = False) -> Certificate:
    return RootDivisorWitness(verbose=verbose).certify(f, z)


def witness_theorem2(f: LinearMap, z: int, verbose: bool = False) -> Certificate:
    return STermWitness(verbose=verbose).certify(f, z)


def tighten(f: LinearMap, z: int, verbose: bool = False) -> Certificate:
    return TightWitness(verbose=verbose).certify(f, z)


def certify_default(f: LinearMap, z: int, verbose: bool = False) -> Certificate:
    """Root divisor witness, falling back to the s-term witness when z has no eligible prime."""
    try:
        return witness_theorem1(f, z, verbose=verbose)
    except NoEligiblePrime as e:
        logger.debug("root divisor path failed (%s), trying s-terms", e)
        return witness_theorem2(f, z, verbose=verbose)


@dataclass(frozen=True)
class CorollaryBound:
    """l(z) < bound, backed by a certificate for the root f(z) when gcd(z, b) = 1."""

    map: LinearMap
    root: int
    certificate: Certificate | None
    bound: int


def corollary_bound(f: LinearMap, z: int, verbose: bool = False) -> CorollaryBound:
    if gcd(z, f.b) > 1:
        return CorollaryBound(f, z, None, 1)
    certificate = CorollaryWitness(verbose=verbose).certify(f, z)
    bound = certificate.witness_index + 1
    logger.debug(
        "%s, z=%d: l(f(z)) < %d so l(z) < %d <= %d",
        f,
        z,
        certificate.witness_index,
        bound,
        apply(f, z) + 1,
    )
    return CorollaryBound(f, z, certificate, bound)


__all__ = [
    "Certificate",
    "CorollaryBound",
    "SSequence",
    "ValuationTrace",
    "Verdict",
    "certify_default",
    "corollary_bound",
    "dichotomy_violations",
    "lemma_prime",
    "s_terms",
    "stability_trace",
    "threshold_M",
    "tighten",
    "verify_certificate",
    "witness_theorem1",
    "witness_theorem2",
]
