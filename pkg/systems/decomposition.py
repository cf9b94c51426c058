"""
Indecomposability, decompositions into indecomposable components, the
component partition, and modularity.
"""

from functools import lru_cache
from typing import List, Optional, Tuple

from models.boolfun import BooleanFunction, QPair
from models.decomposition import Decomposition
from models.errors import EmptyGroundSetError
from models.partition import SetPartition
from systems.algebra import AlgebraSystem
from systems.masks import popcount, submasks

Values = Tuple[int, ...]


def _splits(values: Values, support: int, first: int, q1: int, q2: int) -> bool:
    """f|support = f|first ⋆ f|(support∖first), first as the left factor"""
    second = support ^ first
    for mask in submasks(support):
        a = mask & first
        b = mask & second
        if values[mask] != q1 ** popcount(b) * values[a] + q2 ** popcount(a) * values[b]:
            return False
    return True


@lru_cache(maxsize=1 << 16)
def _first_split(values: Values, support: int, q1: int, q2: int) -> Optional[int]:
    """Smallest proper nonempty first block splitting f|support, if any"""
    symmetric = q1 == q2
    lowest = support & -support
    for first in range(1, support):
        if first & ~support:
            continue
        # under a commutative product only one of first, support∖first needs testing
        if symmetric and not first & lowest:
            continue
        if _splits(values, support, first, q1, q2):
            return first
    return None


def _components(values: Values, support: int, q1: int, q2: int) -> List[int]:
    if popcount(support) <= 1:
        return [support] if support else []
    first = _first_split(values, support, q1, q2)
    if first is None:
        return [support]
    return _components(values, first, q1, q2) + _components(values, support ^ first, q1, q2)


class DecompositionSystem:
    """Factorizations of boolean functions under the (q1, q2) products"""

    @staticmethod
    def is_indecomposable(f: BooleanFunction, q: QPair = QPair.one()) -> bool:
        """True iff no ordered bipartition (X∖Y, Y) factors f"""
        if f.n == 0:
            raise EmptyGroundSetError(operation="is_indecomposable")
        return _first_split(f.values, f.full, q.q1, q.q2) is None

    @staticmethod
    def block_is_indecomposable(f: BooleanFunction, block: int) -> bool:
        """Whether f restricted to a nonempty block is ⋆₁-indecomposable"""
        return _first_split(f.values, block, 1, 1) is None

    @staticmethod
    def is_product_split(f: BooleanFunction, support: int, first: int) -> bool:
        """f|support = f|first ⋆₁ f|(support∖first)"""
        return _splits(f.values, support, first, 1, 1)

    @staticmethod
    def decompose(f: BooleanFunction, q: QPair = QPair.one()) -> Decomposition:
        """
        Recursive split into indecomposable factors.

        Ambiguous splits take the first block with the smallest bitmask, and
        both sides are decomposed in turn.
        """
        if f.n == 0:
            raise EmptyGroundSetError(operation="decompose")
        return Decomposition(blocks=tuple(_components(f.values, f.full, q.q1, q.q2)), q=q)

    @staticmethod
    def component_partition(f: BooleanFunction) -> SetPartition:
        """∼_f^i, the partition into ⋆₁-indecomposable components"""
        if f.n == 0:
            raise EmptyGroundSetError(operation="component_partition")
        return SetPartition.from_blocks(f.n, _components(f.values, f.full, 1, 1))

    @staticmethod
    def ic(f: BooleanFunction) -> int:
        """Number of ⋆₁-indecomposable components; 0 for the unit"""
        return len(_components(f.values, f.full, 1, 1))

    @staticmethod
    def is_modular(f: BooleanFunction) -> bool:
        """f(A) = Σ_{x∈A} f({x}) for every A"""
        additive = [0] * len(f.values)
        for mask in range(1, len(f.values)):
            low = mask & -mask
            additive[mask] = additive[mask ^ low] + f.values[low]
            if additive[mask] != f.values[mask]:
                return False
        return True

    @staticmethod
    def commutes(f: BooleanFunction, g: BooleanFunction, q: QPair = QPair.one()) -> bool:
        """f ⋆ g = g ⋆ f once g ⋆ f is relabeled to put f's elements first"""
        left = AlgebraSystem.star_product(f, g, q)
        right = AlgebraSystem.star_product(g, f, q)
        targets = [f.n + i for i in range(g.n)] + list(range(f.n))
        return left.values == AlgebraSystem.permute(right, targets).values
