"""
Suite module for the dendro-segal toolkit: Equivalence

The constructions between 2-Segal truncated simplicial sets and invertible
finite operads, levelwise and operad isomorphism search, and roundtrip
certificates.
"""

__description__ = "2-Segal sets and invertible operads"

from .construct import corolla_inclusions, operad_to_simplicial, simplicial_to_operad
from .certificate import (
    EquivalenceCertificate,
    certify_operad,
    certify_simplicial,
    find_simplicial_isomorphism,
    is_simplicial_isomorphism,
    roundtrip_operad,
    roundtrip_simplicial,
)
from .checks import EquivalenceModule, equivalence_fixtures

__all__ = [
    "corolla_inclusions",
    "operad_to_simplicial",
    "simplicial_to_operad",
    "EquivalenceCertificate",
    "certify_operad",
    "certify_simplicial",
    "find_simplicial_isomorphism",
    "is_simplicial_isomorphism",
    "roundtrip_operad",
    "roundtrip_simplicial",
    "EquivalenceModule",
    "equivalence_fixtures",
]
