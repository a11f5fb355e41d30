"""Explicit linear resolution of transversal ideals, its certificate, and the
multiplicative structure in the single-column case."""

from .certify import Certificate, CheckOutcome, certify_resolution
from .complex import (SIGN_CONVENTIONS, BasisLabel, Entry, FreeComplex,
                      InternalConsistencyError, augment, boundary, boundary_terms,
                      build_complex, enumerate_basis)
from .dga import (DGElement, associator_defect, commutator_defect, dg_boundary,
                  dg_multiply, leibniz_defect, random_homogeneous)

__all__ = [
    "BasisLabel", "Certificate", "CheckOutcome", "DGElement", "Entry", "FreeComplex",
    "InternalConsistencyError", "SIGN_CONVENTIONS", "associator_defect", "augment",
    "boundary", "boundary_terms", "build_complex", "certify_resolution",
    "commutator_defect", "dg_boundary", "dg_multiply", "enumerate_basis",
    "leibniz_defect", "random_homogeneous",
]
