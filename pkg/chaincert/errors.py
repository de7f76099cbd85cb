"""
Exception hierarchy for chaincert.

Library code raises these; only the command line front end turns them into
exit codes and messages.
"""

from __future__ import annotations


class ChainCertError(Exception):
    """Base class for every error raised by chaincert."""

    code: str = "error"


# Linear map validation


class InvalidMapError(ChainCertError, ValueError):
    """The coefficients (a, b) do not define a valid map f(z) = az + b."""

    code = "invalid_map"

    def __init__(self, a: int, b: int, message: str):
        super().__init__(message)
        self.a = a
        self.b = b


class MultiplierTooSmall(InvalidMapError):
    code = "multiplier_too_small"

    def __init__(self, a: int, b: int):
        super().__init__(a, b, f"multiplier must satisfy a >= 2 (got a={a})")


class OffsetNotPositive(InvalidMapError):
    code = "offset_not_positive"

    def __init__(self, a: int, b: int):
        super().__init__(a, b, f"offset must satisfy b >= 1 (got b={b})")


class CoefficientsNotCoprime(InvalidMapError):
    code = "coefficients_not_coprime"

    def __init__(self, a: int, b: int, divisor: int):
        super().__init__(
            a, b, f"coefficients must be coprime (gcd({a}, {b}) = {divisor})"
        )
        self.divisor = divisor


# Arithmetic


class SizeGuardExceeded(ChainCertError):
    code = "size_guard_exceeded"

    def __init__(self, n: int, bits: int):
        super().__init__(
            f"refusing to factor a {n.bit_length()}-bit cofactor (guard is {bits} bits)"
        )
        self.n = n
        self.bits = bits


class ZeroValuation(ChainCertError, ArithmeticError):
    code = "zero_valuation"

    def __init__(self, p: int):
        super().__init__(f"the {p}-adic valuation of 0 is undefined")
        self.p = p


class NotPrime(ChainCertError, ValueError):
    code = "not_prime"

    def __init__(self, n: int):
        super().__init__(f"{n} is not prime")
        self.n = n


# Certification


class CertificationError(ChainCertError):
    """No certificate can be produced for the requested root."""

    code = "certification"


class SharedFactor(CertificationError):
    code = "shared_factor"

    def __init__(self, z: int, b: int, divisor: int):
        super().__init__(
            f"gcd(z={z}, b={b}) = {divisor} > 1: every iterate is composite, "
            "length is 0 and no certificate is needed"
        )
        self.divisor = divisor


class NoEligiblePrime(CertificationError):
    code = "no_eligible_prime"


class BelowThreshold(CertificationError):
    code = "below_threshold"

    def __init__(self, z: int, threshold: int):
        super().__init__(f"z={z} does not exceed the threshold M={threshold}")
        self.z = z
        self.threshold = threshold


class NoCandidate(CertificationError):
    code = "no_candidate"


class NotDivisorOfA(CertificationError, ValueError):
    code = "not_divisor_of_a"

    def __init__(self, p: int, a: int):
        super().__init__(f"{p} does not divide a={a}")
        self.p = p
        self.a = a


class CertificateFormatError(ChainCertError, ValueError):
    """A certificate document does not match the schema."""

    code = "format"


# Search


class InvalidTask(ChainCertError, ValueError):
    code = "invalid_task"


class RangeAllTruncated(ChainCertError):
    code = "range_all_truncated"


class UsageError(ChainCertError, ValueError):
    """Arguments that parse but make no sense together."""

    code = "usage"
