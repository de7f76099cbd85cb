"""
Defaults and the single environment override.
"""

from __future__ import annotations

import logging
import os
from typing import Mapping

logger = logging.getLogger(__name__)

DEFAULT_MAX_STEPS = 64
DEFAULT_FACTOR_BITS = 512
DEFAULT_TRIAL_BOUND = 1000
DEFAULT_STABILITY_TERMS = 8
DEFAULT_JOBS = 1

# Only the factorization size guard may be set from the environment
ENV_FACTOR_BITS = "CHAINCERT_FACTOR_BITS"


def get_factor_bits(environ: Mapping[str, str] | None = None) -> int:
    """
    Return the factorization size guard in bits.
    Falls back to the default when the variable is unset or unusable.
    """
    environ = os.environ if environ is None else environ
    raw = environ.get(ENV_FACTOR_BITS)
    if raw is None or raw.strip() == "":
        return DEFAULT_FACTOR_BITS

    try:
        bits = int(raw.strip(), 10)
        if bits <= 0:
            raise ValueError(f"must be positive, got {bits}")
    except ValueError as e:
        logger.warning(
            "Note: using default factor guard of %d bits (could not parse %s=%r: %s)",
            DEFAULT_FACTOR_BITS,
            ENV_FACTOR_BITS,
            raw,
            e,
        )
        return DEFAULT_FACTOR_BITS

    return bits
