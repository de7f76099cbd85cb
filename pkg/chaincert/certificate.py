"""
Compositeness certificates and their independent verification.

A certificate names a prime p with p | f^n(z) and p < f(z) <= f^n(z), so
f^n(z) is composite and the rooted chain from z has length below n. Checking
it costs one primality test, a couple of divisibility tests and one modular
evaluation of f^n(z).
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from enum import Enum

from .arith import is_prime
from .chain import LinearMap, apply, geometric_sum_mod, iterate_mod
from .errors import CertificateFormatError, InvalidMapError


class SourceKind(str, Enum):
    ROOT_DIVISOR = "root_divisor"
    S_TERM = "s_term"


class FermatCase(str, Enum):
    DIVIDES_A_MINUS_1 = "divides_a_minus_1"
    COPRIME_A_MINUS_1 = "coprime_a_minus_1"

    @classmethod
    def for_prime(cls, a: int, p: int) -> "FermatCase":
        return cls.DIVIDES_A_MINUS_1 if (a - 1) % p == 0 else cls.COPRIME_A_MINUS_1


def residue_witness(fermat_case: FermatCase, p: int, i: int) -> int:
    """
    The least positive residue of -i modulo p (when p | a - 1) or modulo p - 1,
    taken in 1..p or 1..p-1 so that i = 0 maps to the modulus itself.
    """
    modulus = p if fermat_case is FermatCase.DIVIDES_A_MINUS_1 else p - 1
    return (-i) % modulus or modulus


@dataclass(frozen=True)
class Certificate:
    a: int
    b: int
    z: int
    prime: int
    source_kind: SourceKind
    source_index: int | None
    fermat_case: FermatCase
    witness_index: int

    @property
    def map(self) -> LinearMap:
        return LinearMap(self.a, self.b)

    @property
    def bound(self) -> int:
        """The certified strict upper bound: l(z) < bound."""
        return self.witness_index

    def describe(self) -> str:
        if self.source_kind is SourceKind.ROOT_DIVISOR:
            source = f"root divisor of {self.z}"
        else:
            source = f"divisor of s_{self.source_index}"
        return (
            f"{self.prime} ({source}, {self.fermat_case.value}) divides "
            f"f^{self.witness_index}({self.z}) for f(z)={self.a}z+{self.b}, "
            f"so l({self.z}) < {self.bound}"
        )


@dataclass(frozen=True)
class Verdict:
    valid: bool
    reason: str | None = None

    def __bool__(self) -> bool:
        return self.valid


VALID = Verdict(True)


def verify_certificate(c: Certificate) -> Verdict:
    """Re-check every claim of a certificate; never raises."""
    try:
        f = c.map
    except InvalidMapError:
        return Verdict(False, "invalid_map")

    if c.witness_index < 1:
        return Verdict(False, "bad_witness_index")
    if not is_prime(c.prime):
        return Verdict(False, "prime_not_prime")
    if f.a % c.prime == 0:
        return Verdict(False, "prime_divides_a")

    if c.source_kind is SourceKind.ROOT_DIVISOR:
        if c.source_index is not None or c.z % c.prime != 0:
            return Verdict(False, "source_mismatch")
    else:
        if c.source_index is None or c.source_index < 1:
            return Verdict(False, "source_mismatch")
        # s_i mod p; source_index may be arbitrarily large
        s_mod = (c.z - f.b * geometric_sum_mod(f.a, c.source_index, c.prime)) % c.prime
        if s_mod != 0:
            return Verdict(False, "source_mismatch")

    if FermatCase.for_prime(f.a, c.prime) is not c.fermat_case:
        return Verdict(False, "case_mismatch")
    if iterate_mod(f, c.z, c.witness_index, c.prime) != 0:
        return Verdict(False, "nonzero_residue")
    if c.prime >= apply(f, c.z):
        return Verdict(False, "prime_too_large")
    return VALID


# Document codec

FIELDS = (
    "a",
    "b",
    "z",
    "prime",
    "source_kind",
    "source_index",
    "fermat_case",
    "witness_index",
)
_DECIMAL = re.compile(r"0|[1-9][0-9]*")


def to_document(c: Certificate) -> str:
    """Serialize as a UTF-8 JSON document; integers are decimal strings."""
    document = {
        "a": str(c.a),
        "b": str(c.b),
        "z": str(c.z),
        "prime": str(c.prime),
        "source_kind": c.source_kind.value,
    }
    if c.source_index is not None:
        document["source_index"] = str(c.source_index)
    document["fermat_case"] = c.fermat_case.value
    document["witness_index"] = str(c.witness_index)
    return json.dumps(document, indent=2) + "\n"


def _decimal(document: dict, key: str) -> int:
    value = document.get(key)
    if not isinstance(value, str) or not _DECIMAL.fullmatch(value):
        raise CertificateFormatError(f"field {key!r} must be a decimal string, got {value!r}")
    return int(value)


def _enum(document: dict, key: str, kind: type[Enum]):
    try:
        return kind(document.get(key))
    except ValueError:
        allowed = ", ".join(member.value for member in kind)
        raise CertificateFormatError(
            f"field {key!r} must be one of {allowed}, got {document.get(key)!r}"
        ) from None


def from_document(text: str) -> Certificate:
    """Parse a certificate document; raises CertificateFormatError on any schema violation."""
    try:
        document = json.loads(text)
    except json.JSONDecodeError as e:
        raise CertificateFormatError(f"not a JSON document: {e}") from None
    if not isinstance(document, dict):
        raise CertificateFormatError("certificate document must be a JSON object")

    unknown = sorted(set(document) - set(FIELDS))
    if unknown:
        raise CertificateFormatError(f"unknown fields: {', '.join(unknown)}")
    missing = [key for key in FIELDS if key != "source_index" and key not in document]
    if missing:
        raise CertificateFormatError(f"missing fields: {', '.join(missing)}")

    source_kind = _enum(document, "source_kind", SourceKind)
    if source_kind is SourceKind.ROOT_DIVISOR:
        if "source_index" in document:
            raise CertificateFormatError("source_index must be absent for root_divisor")
        source_index = None
    else:
        if "source_index" not in document:
            raise CertificateFormatError("source_index is required for s_term")
        source_index = _decimal(document, "source_index")

    return Certificate(
        a=_decimal(document, "a"),
        b=_decimal(document, "b"),
        z=_decimal(document, "z"),
        prime=_decimal(document, "prime"),
        source_kind=source_kind,
        source_index=source_index,
        fermat_case=_enum(document, "fermat_case", FermatCase),
        witness_index=_decimal(document, "witness_index"),
    )
