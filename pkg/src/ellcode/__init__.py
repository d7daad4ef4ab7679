"""Elliptic-curve evaluation codes with a proper direct-sum decomposition.

Subpackage map:

- fields: finite field towers with deterministic moduli and embeddings
- gflinalg: exact linear algebra over those fields (numpy-backed)
- curve: Weierstrass group law, point counting, enumeration
- kernels: Frobenius trace maps, their kernels, and support divisors
- rrspace: Riemann-Roch spaces L(D) and their vanishing subspaces
- codes: evaluation codes, MDS verification, point-set search, duals
- projectors: pushforward maps and the direct-sum factor projectors
- ecp: error-correcting pairs, decoding, channel simulation
- cli: the `ellcode` command-line driver
"""

from ellcode.fields import FieldElement, FiniteField, Embedding, embed_field, make_field
from ellcode.curve import Curve, Divisor, Point

__all__ = [
    "FieldElement",
    "FiniteField",
    "Embedding",
    "embed_field",
    "make_field",
    "Curve",
    "Divisor",
    "Point",
]
