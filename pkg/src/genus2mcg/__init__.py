"""Exact computation in the genus-2 mapping class group.

Mapping classes are represented through the Birman-Hilden quotient: an
automorphism of the free group of the 6-punctured sphere together with the
4x4 symplectic action on homology.
"""
from .curves import CurveLibrary, builtin_library
from .equivalence import MoveCertificate, search_equivalence, verify_certificate
from .factorization import Factorization, builtin_factorizations, classify, is_relation
from .mcg import MappingClass, evaluate_word, is_identity_mod2
from .words import Word

__version__ = "0.1.0"

__all__ = [
    "CurveLibrary", "Factorization", "MappingClass", "MoveCertificate", "Word",
    "builtin_factorizations", "builtin_library", "classify", "evaluate_word",
    "is_identity_mod2", "is_relation", "search_equivalence", "verify_certificate",
]
