"""
Boolean Function Bialgebra Systems

Stateless operations on boolean functions: products and transforms,
partitions, decompositions, coproducts, classification, instances,
invariants, and the axiom suite.
"""

from .algebra import AlgebraSystem
from .partitions import PartitionSystem
from .decomposition import DecompositionSystem
from .coalgebra import CoalgebraSystem
from .instances import InstanceSystem
from .classification import ClassificationSystem
from .invariants import InvariantSystem
from .axioms import AxiomSystem

__all__ = [
    "AlgebraSystem",
    "PartitionSystem",
    "DecompositionSystem",
    "CoalgebraSystem",
    "InstanceSystem",
    "ClassificationSystem",
    "InvariantSystem",
    "AxiomSystem",
]
