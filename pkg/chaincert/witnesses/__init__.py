"""
Compositeness witness strategies.

This module provides a unified interface over the different ways of finding
a prime that divides some iterate f^n(z) and thereby bounds the rooted chain
length of z.
"""

from __future__ import annotations

from typing import Type

from .base import BaseWitness, build_certificate, eligible_primes
from .corollary import CorollaryWitness
from .root_divisor import RootDivisorWitness
from .s_term import STermWitness, lemma_prime
from .tight import TightWitness

# Registry of all available strategies
STRATEGIES: list[Type[BaseWitness]] = [
    RootDivisorWitness,
    STermWitness,
    TightWitness,
    CorollaryWitness,
]

# Map of strategy names to classes
STRATEGY_BY_NAME: dict[str, Type[BaseWitness]] = {
    strategy.name: strategy for strategy in STRATEGIES
}
# Aliases matching the theorem each strategy follows
STRATEGY_BY_NAME["theorem1"] = RootDivisorWitness
STRATEGY_BY_NAME["theorem2"] = STermWitness


def get_witness_by_name(name: str, verbose: bool = False) -> BaseWitness | None:
    """
    Get a strategy instance by its name.

    Args:
        name: The strategy name (e.g., "root_divisor", "theorem2", "tight")
        verbose: Whether to log each selection at INFO level

    Returns:
        Strategy instance or None if no strategy has that name
    """
    strategy_class = STRATEGY_BY_NAME.get(name.lower())
    if strategy_class:
        return strategy_class(verbose=verbose)
    return None


__all__ = [
    # Base class
    "BaseWitness",
    # Strategy classes
    "RootDivisorWitness",
    "STermWitness",
    "TightWitness",
    "CorollaryWitness",
    # Registry
    "STRATEGIES",
    "STRATEGY_BY_NAME",
    # Helper functions
    "get_witness_by_name",
    "build_certificate",
    "eligible_primes",
    "lemma_prime",
]
