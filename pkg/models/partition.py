"""
Set partitions of a ground set, encoded as restricted-growth strings.
"""

from typing import List, Sequence, Tuple

from pydantic import BaseModel, ConfigDict, Field, model_validator

from .errors import InvalidPartitionError


class SetPartition(BaseModel):
    """Equivalence on {1..n}; element i+1 lies in block rgs[i]"""

    model_config = ConfigDict(frozen=True)

    n: int = Field(ge=0)
    rgs: Tuple[int, ...]

    @model_validator(mode="after")
    def _check_rgs(self) -> "SetPartition":
        if len(self.rgs) != self.n:
            raise InvalidPartitionError(rgs=list(self.rgs), n=self.n)
        top = -1
        for label in self.rgs:
            if label < 0 or label > top + 1:
                raise InvalidPartitionError(rgs=list(self.rgs), n=self.n)
            top = max(top, label)
        return self

    @classmethod
    def discrete(cls, n: int) -> "SetPartition":
        """Every element in its own block"""
        return cls(n=n, rgs=tuple(range(n)))

    @classmethod
    def one_block(cls, n: int) -> "SetPartition":
        """A single block holding the whole ground set"""
        return cls(n=n, rgs=(0,) * n)

    @classmethod
    def from_labels(cls, labels: Sequence[int]) -> "SetPartition":
        """Relabel arbitrary block labels by first occurrence"""
        seen: dict = {}
        rgs = []
        for label in labels:
            if label not in seen:
                seen[label] = len(seen)
            rgs.append(seen[label])
        return cls(n=len(rgs), rgs=tuple(rgs))

    @classmethod
    def from_blocks(cls, n: int, blocks: Sequence[int]) -> "SetPartition":
        """Build from block masks that cover {1..n} exactly once"""
        labels = [-1] * n
        for index, block in enumerate(blocks):
            for i in range(n):
                if block >> i & 1:
                    if labels[i] != -1:
                        raise InvalidPartitionError(rgs=list(blocks), n=n)
                    labels[i] = index
            if block >> n:
                raise InvalidPartitionError(rgs=list(blocks), n=n)
        if -1 in labels:
            raise InvalidPartitionError(rgs=list(blocks), n=n)
        return cls.from_labels(labels)

    @property
    def cl(self) -> int:
        """Number of classes"""
        return max(self.rgs) + 1 if self.rgs else 0

    def blocks(self) -> List[int]:
        """Block masks ordered by smallest element"""
        result = [0] * self.cl
        for i, label in enumerate(self.rgs):
            result[label] |= 1 << i
        return result

    def is_discrete(self) -> bool:
        return self.cl == self.n
