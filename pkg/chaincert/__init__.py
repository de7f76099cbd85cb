"""
chaincert - Rooted Cunningham chains under f(z) = az + b and checkable
certificates bounding their length
"""

__version__ = "1.0.0"
__version_v__ = f"v{__version__}"
__license__ = "GPL-3.0"

from .__main__ import main

# Import main components
from .arith import distinct_prime_count, factorize, gcd, is_prime, nu
from .certificate import (
    Certificate,
    FermatCase,
    SourceKind,
    from_document,
    to_document,
    verify_certificate,
)
from .certify import (
    certify_default,
    corollary_bound,
    lemma_prime,
    s_terms,
    stability_trace,
    threshold_M,
    tighten,
    witness_theorem1,
    witness_theorem2,
)
from .chain import (
    LinearMap,
    apply,
    complete_chain,
    inverse,
    iterate,
    iterate_mod,
    rooted_chain,
)
from .search import SearchTask, longest_in_range, search_range, verify_bound_range

__all__ = [
    "Certificate",
    "FermatCase",
    "LinearMap",
    "SearchTask",
    "SourceKind",
    "apply",
    "certify_default",
    "complete_chain",
    "corollary_bound",
    "distinct_prime_count",
    "factorize",
    "from_document",
    "gcd",
    "inverse",
    "is_prime",
    "iterate",
    "iterate_mod",
    "lemma_prime",
    "longest_in_range",
    "main",
    "nu",
    "rooted_chain",
    "s_terms",
    "search_range",
    "stability_trace",
    "threshold_M",
    "tighten",
    "to_document",
    "verify_bound_range",
    "verify_certificate",
    "witness_theorem1",
    "witness_theorem2",
    "__version__",
    "__version_v__",
]
