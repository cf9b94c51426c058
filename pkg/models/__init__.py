"""
Boolean Function Bialgebra Models

Pydantic value types for boolean functions, partitions, formal sums,
polynomials, combinatorial instances, and reports.
"""

from .boolfun import BooleanFunction, QPair
from .partition import SetPartition
from .decomposition import Decomposition
from .sums import FormalSum, FormalTerm, FormalTensorSum, TensorTerm
from .polynomial import Polynomial, BivariatePolynomial
from .instances import Hypergraph, MultiGraph, VectorFamily
from .reports import AxiomCheck, CatalogEntry, Classification, CompatReport
from .errors import BoolFunError

__all__ = [
    "BooleanFunction",
    "QPair",
    "SetPartition",
    "Decomposition",
    "FormalSum",
    "FormalTerm",
    "FormalTensorSum",
    "TensorTerm",
    "Polynomial",
    "BivariatePolynomial",
    "Hypergraph",
    "MultiGraph",
    "VectorFamily",
    "AxiomCheck",
    "CatalogEntry",
    "Classification",
    "CompatReport",
    "BoolFunError",
]
