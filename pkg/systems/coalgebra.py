"""
The restriction coproduct Δ, the equivalence families E^W and E^S, and the
coproducts δ^W and δ^S as isoclass-level tensor sums.
"""

from collections import Counter
from functools import lru_cache
from typing import List, Literal

from models.boolfun import BooleanFunction
from models.partition import SetPartition
from models.sums import FormalSum, FormalTensorSum, FunctionKey
from systems.algebra import AlgebraSystem, require_cap
from systems.decomposition import DecompositionSystem
from systems.partitions import PartitionSystem

Family = Literal["W", "S"]


def _is_weak(f: BooleanFunction, p: SetPartition) -> bool:
    return all(DecompositionSystem.block_is_indecomposable(f, block) for block in p.blocks())


def _is_strong(f: BooleanFunction, p: SetPartition) -> bool:
    if not _is_weak(f, p):
        return False
    return DecompositionSystem.ic(PartitionSystem.contract(f, p)) == DecompositionSystem.ic(f)


@lru_cache(maxsize=1 << 14)
def _delta_counter(key: FunctionKey, family: str) -> Counter:
    f = BooleanFunction(n=key[0], values=key[1])
    counter: Counter = Counter()
    for p in CoalgebraSystem.equivalences(f, family):
        contracted = AlgebraSystem.canonical_key(PartitionSystem.contract(f, p))
        restricted = AlgebraSystem.canonical_key(PartitionSystem.restrict_by(f, p))
        counter[(contracted, restricted)] += 1
    return counter


class CoalgebraSystem:
    """Coproducts and counits on isoclasses of boolean functions"""

    @staticmethod
    def coproduct_delta(f: BooleanFunction) -> FormalTensorSum:
        """Δ(f̄) = Σ over ordered splits X′ ⊔ X″ of f̄|X′ ⊗ f̄|X″"""
        require_cap(f.n, "canonical")
        return FormalTensorSum.from_counter(CoalgebraSystem.delta_counter(f))

    @staticmethod
    def delta_counter(f: BooleanFunction) -> Counter:
        """Δ(f̄) as a Counter over pairs of canonical keys"""
        counter: Counter = Counter()
        full = f.full
        for mask in range(1 << f.n):
            left = AlgebraSystem.canonical_key(AlgebraSystem.restrict(f, mask))
            right = AlgebraSystem.canonical_key(AlgebraSystem.restrict(f, full ^ mask))
            counter[(left, right)] += 1
        return counter

    @staticmethod
    def is_member(f: BooleanFunction, p: SetPartition, family: Family) -> bool:
        """
        Membership of a partition in E^W(f) or E^S(f).

        W asks for indecomposable block restrictions; S additionally keeps
        the number of indecomposable components under contraction.
        """
        if family == "W":
            return _is_weak(f, p)
        return _is_strong(f, p)

    @staticmethod
    def weak_equivalences(f: BooleanFunction) -> List[SetPartition]:
        return [p for p in PartitionSystem.enumerate_partitions(f.n) if _is_weak(f, p)]

    @staticmethod
    def strong_equivalences(f: BooleanFunction) -> List[SetPartition]:
        target = DecompositionSystem.ic(f)
        return [
            p
            for p in CoalgebraSystem.weak_equivalences(f)
            if DecompositionSystem.ic(PartitionSystem.contract(f, p)) == target
        ]

    @staticmethod
    def equivalences(f: BooleanFunction, family: Family) -> List[SetPartition]:
        if family == "W":
            return CoalgebraSystem.weak_equivalences(f)
        return CoalgebraSystem.strong_equivalences(f)

    @staticmethod
    def family_counter(f: BooleanFunction, family: Family) -> Counter:
        """δ(f̄) for a family as a Counter over pairs of canonical keys"""
        require_cap(f.n, "partitions")
        require_cap(f.n, "canonical")
        return Counter(_delta_counter(AlgebraSystem.canonical_key(f), family))

    @staticmethod
    def coproduct_family(f: BooleanFunction, family: Family) -> FormalTensorSum:
        """δ(f̄) = Σ_{∼∈E(f)} (f/∼)‾ ⊗ (f|∼)‾"""
        return FormalTensorSum.from_counter(CoalgebraSystem.family_counter(f, family))

    @staticmethod
    def coproduct_deltaW(f: BooleanFunction) -> FormalTensorSum:
        return CoalgebraSystem.coproduct_family(f, "W")

    @staticmethod
    def coproduct_deltaS(f: BooleanFunction) -> FormalTensorSum:
        return CoalgebraSystem.coproduct_family(f, "S")

    @staticmethod
    def counit_delta(f: BooleanFunction) -> int:
        """ε_δ: 1 on modular functions, else 0"""
        return 1 if DecompositionSystem.is_modular(f) else 0

    @staticmethod
    def counit_Delta(f: BooleanFunction) -> int:
        """ε_Δ: 1 on the unit, else 0"""
        return 1 if f.n == 0 else 0

    @staticmethod
    def apply_right_counit(pairs: Counter) -> FormalSum:
        """(Id ⊗ ε_δ) applied to a tensor Counter"""
        result: Counter = Counter()
        for (left, right), coefficient in pairs.items():
            if DecompositionSystem.is_modular(BooleanFunction(n=right[0], values=right[1])):
                result[left] += coefficient
        return FormalSum.from_counter(result)

    @staticmethod
    def apply_left_counit(pairs: Counter) -> FormalSum:
        """(ε_δ ⊗ Id) applied to a tensor Counter"""
        result: Counter = Counter()
        for (left, right), coefficient in pairs.items():
            if DecompositionSystem.is_modular(BooleanFunction(n=left[0], values=left[1])):
                result[right] += coefficient
        return FormalSum.from_counter(result)
