"""
Subspecies predicates: counitary, rigid, hyper-rigid, and Bool_max
membership, plus the combined classification record.
"""

from functools import lru_cache
from typing import Callable, Optional, TypeVar

from models.boolfun import BooleanFunction
from models.errors import GroundSetTooLargeError
from models.reports import Classification
from systems.algebra import AlgebraSystem, require_cap
from systems.coalgebra import CoalgebraSystem
from systems.decomposition import DecompositionSystem
from systems.instances import InstanceSystem
from systems.masks import popcount, submasks
from systems.partitions import PartitionSystem

T = TypeVar("T")


def _additive_splits(f: BooleanFunction):
    """
    Yield (union, first) for every additive split f(A⊔B) = f(A) + f(B) with
    A, B nonempty inside one indecomposable component; first holds the lowest
    element of the union.
    """
    if f.n == 0:
        return
    values = f.values
    for component in DecompositionSystem.component_partition(f).blocks():
        for union in submasks(component):
            if popcount(union) < 2:
                continue
            lowest = union & -union
            for first in submasks(union):
                if first == union or not first & lowest:
                    continue
                if values[union] == values[first] + values[union ^ first]:
                    yield union, first


@lru_cache(maxsize=1 << 16)
def _in_bool_max(n: int, values: tuple) -> bool:
    if n <= 1:
        return True
    f = BooleanFunction(n=n, values=values)
    weak = CoalgebraSystem.weak_equivalences(f)
    if not all(CoalgebraSystem.is_member(f, p, "S") for p in weak):
        return False
    for i in range(n):
        restricted = AlgebraSystem.canonical_key(AlgebraSystem.restrict(f, f.full ^ (1 << i)))
        if not _in_bool_max(*restricted):
            return False
    for p in weak:
        if p.is_discrete():
            continue
        contracted = AlgebraSystem.canonical_key(PartitionSystem.contract(f, p))
        if not _in_bool_max(*contracted):
            return False
    return True


def _within_caps(check: Callable[[], T]) -> Optional[T]:
    try:
        return check()
    except GroundSetTooLargeError:
        return None


class ClassificationSystem:
    """Membership tests for the subspecies of boolean functions"""

    @staticmethod
    def is_counitary(f: BooleanFunction) -> bool:
        """E^W(f) = E^S(f)"""
        require_cap(f.n, "partitions")
        return all(CoalgebraSystem.is_member(f, p, "S") for p in CoalgebraSystem.weak_equivalences(f))

    @staticmethod
    def is_rigid(f: BooleanFunction) -> bool:
        """
        Every additive split f(A⊔B) = f(A) + f(B) inside an indecomposable
        component extends to the factorization f|A⊔B = f|A ⋆₁ f|B.
        """
        return all(
            DecompositionSystem.is_product_split(f, union, first) for union, first in _additive_splits(f)
        )

    @staticmethod
    def is_hyper_rigid(f: BooleanFunction) -> bool:
        """No additive split with both parts nonempty inside a component"""
        return next(_additive_splits(f), None) is None

    @staticmethod
    def in_bool_max(f: BooleanFunction) -> bool:
        """
        Recursive membership in Bool_max, memoized on canonical forms.

        f belongs when E^W(f) = E^S(f), every restriction to a smaller ground
        set belongs, and every contraction by a non-discrete ∼ ∈ E^W(f) belongs.
        """
        require_cap(f.n, "bool_max")
        return _in_bool_max(*AlgebraSystem.canonical_key(f))

    @staticmethod
    def classify(f: BooleanFunction) -> Classification:
        """
        Evaluate every predicate; those beyond their cap are reported as None.
        """
        return Classification(
            modular=DecompositionSystem.is_modular(f),
            indecomposable=DecompositionSystem.is_indecomposable(f) if f.n else None,
            rigid=ClassificationSystem.is_rigid(f),
            hyper_rigid=ClassificationSystem.is_hyper_rigid(f),
            counitary=_within_caps(lambda: ClassificationSystem.is_counitary(f)),
            in_bool_max=_within_caps(lambda: ClassificationSystem.in_bool_max(f)),
            is_matroid_rank=InstanceSystem.is_matroid_rank(f),
        )
