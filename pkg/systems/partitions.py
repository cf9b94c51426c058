"""
Set partitions of the ground set: enumeration, refinement, and the
contraction f/∼ and restriction f|∼ of a boolean function.
"""

from typing import Iterator, List, Tuple

from models.boolfun import BooleanFunction
from models.errors import MismatchedGroundSetsError, NotARefinementError
from models.partition import SetPartition
from systems.algebra import require_cap
from systems.masks import embed_table, popcount, scatter_table


def _restricted_growth_strings(n: int) -> Iterator[Tuple[int, ...]]:
    """Restricted-growth strings of length n in lexicographic order"""
    if n == 0:
        yield ()
        return
    rgs = [0] * n

    def extend(i: int, top: int) -> Iterator[Tuple[int, ...]]:
        if i == n:
            yield tuple(rgs)
            return
        for label in range(top + 2):
            rgs[i] = label
            yield from extend(i + 1, max(top, label))

    rgs[0] = 0
    yield from extend(1, 0)


class PartitionSystem:
    """Partitions of {1..n} and the operations they induce on functions"""

    @staticmethod
    def enumerate_partitions(n: int) -> List[SetPartition]:
        """All Bell(n) partitions in lexicographic rgs order"""
        require_cap(n, "partitions")
        return [SetPartition(n=n, rgs=rgs) for rgs in _restricted_growth_strings(n)]

    @staticmethod
    def refines(p: SetPartition, q: SetPartition) -> bool:
        """True iff every block of p lies inside a block of q"""
        if p.n != q.n:
            raise MismatchedGroundSetsError(left=p.n, right=q.n)
        image: dict = {}
        for fine, coarse in zip(p.rgs, q.rgs):
            if image.setdefault(fine, coarse) != coarse:
                return False
        return True

    @staticmethod
    def induced_partition(p: SetPartition, q: SetPartition) -> SetPartition:
        """
        The partition of the quotient {blocks of p} grouping p-blocks that
        share a q-block.
        """
        if not PartitionSystem.refines(p, q):
            raise NotARefinementError(fine=list(p.rgs), coarse=list(q.rgs))
        labels = [0] * p.cl
        for fine, coarse in zip(p.rgs, q.rgs):
            labels[fine] = coarse
        return SetPartition.from_labels(labels)

    @staticmethod
    def contract(f: BooleanFunction, p: SetPartition) -> BooleanFunction:
        """(f/∼)(A) = f(union of the blocks in A), blocks ordered by smallest element"""
        if f.n != p.n:
            raise MismatchedGroundSetsError(left=f.n, right=p.n)
        preimages = scatter_table(p.blocks())
        return BooleanFunction(n=p.cl, values=tuple(f.values[m] for m in preimages))

    @staticmethod
    def restrict_by(f: BooleanFunction, p: SetPartition) -> BooleanFunction:
        """(f|∼)(A) = Σ over blocks Y of f(A∩Y)"""
        if f.n != p.n:
            raise MismatchedGroundSetsError(left=f.n, right=p.n)
        blocks = p.blocks()
        values = tuple(sum(f.values[mask & block] for block in blocks) for mask in range(1 << f.n))
        return BooleanFunction(n=f.n, values=values)

    @staticmethod
    def restrict_partition(p: SetPartition, sub: int) -> SetPartition:
        """∼ ∩ sub², re-indexed on popcount(sub) elements"""
        image = embed_table(sub)
        labels = [p.rgs[image[1 << j].bit_length() - 1] for j in range(popcount(sub))]
        return SetPartition.from_labels(labels)

    @staticmethod
    def concatenate(p: SetPartition, q: SetPartition) -> SetPartition:
        """∼_X ⊔ ∼_Y on the concatenated ground set, p on the low positions"""
        return SetPartition.from_labels(list(p.rgs) + [p.cl + label for label in q.rgs])

    @staticmethod
    def is_subordinate(p: SetPartition, sub: int) -> bool:
        """True iff every block lies inside sub or inside its complement"""
        return all(block & sub in (0, block) for block in p.blocks())
