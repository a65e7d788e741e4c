"""
Alphabet fixtures and their polynomial identities.
"""

from .fixtures import (
    ALPHABET,
    BRANCH_COMPONENTS,
    RING,
    AlphabetFixture,
    build_fixture,
    build_models,
    model_by_name,
)
from .identities import verify_involutions, verify_sigma, verify_symmetries

__all__ = [
    "ALPHABET",
    "BRANCH_COMPONENTS",
    "RING",
    "AlphabetFixture",
    "build_fixture",
    "build_models",
    "model_by_name",
    "verify_involutions",
    "verify_sigma",
    "verify_symmetries",
]
