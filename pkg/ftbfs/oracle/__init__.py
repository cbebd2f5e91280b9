"""Verification oracle: the FT definition, forced edges, exact minima."""

from .exact import DEFAULT_FREE_LIMIT, brute_min_ft, necessary_edges
from .models import Requirement, VerifyResult, Violation, format_distance
from .verifier import tight_in_edges, tight_requirements, verify_ft

__all__ = [
    "DEFAULT_FREE_LIMIT",
    "Requirement",
    "VerifyResult",
    "Violation",
    "brute_min_ft",
    "format_distance",
    "necessary_edges",
    "tight_in_edges",
    "tight_requirements",
    "verify_ft",
]
