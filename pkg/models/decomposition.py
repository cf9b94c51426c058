"""
Ordered factorizations into indecomposable components.
"""

from typing import List, Tuple

from pydantic import BaseModel, ConfigDict, Field

from .boolfun import QPair


class Decomposition(BaseModel):
    """f as an ordered product of its restrictions to the blocks"""

    model_config = ConfigDict(frozen=True)

    blocks: Tuple[int, ...] = Field(description="Subset bitmasks, in product order")
    q: QPair = Field(default_factory=QPair.one)

    def block_multiset(self) -> List[int]:
        """Blocks without their order"""
        return sorted(self.blocks)

    @property
    def size(self) -> int:
        return len(self.blocks)
