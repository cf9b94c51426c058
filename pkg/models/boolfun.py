"""
Boolean functions on power sets and the product parameters.
"""

from typing import Tuple

from pydantic import BaseModel, ConfigDict, Field, model_validator

from .errors import (
    GroundSetTooLargeError,
    NonzeroEmptySetError,
    ValueOverflowError,
    WrongLengthError,
)


class BooleanFunction(BaseModel):
    """A map f from subsets of {1..n} to integers with f(∅) = 0"""

    model_config = ConfigDict(frozen=True)

    n: int = Field(ge=0, description="Ground-set size; elements are 1..n")
    values: Tuple[int, ...] = Field(description="f(A) indexed by subset bitmask, bit i for element i+1")

    @model_validator(mode="after")
    def _check_table(self) -> "BooleanFunction":
        from config import INT64_MAX, INT64_MIN, ground_set_cap

        cap = ground_set_cap("arithmetic")
        if self.n > cap:
            raise GroundSetTooLargeError(n=self.n, kind="arithmetic", cap=cap)
        expected = 1 << self.n
        if len(self.values) != expected:
            raise WrongLengthError(length=len(self.values), n=self.n, expected=expected)
        if self.values[0] != 0:
            raise NonzeroEmptySetError(value=self.values[0])
        for value in self.values:
            if value < INT64_MIN or value > INT64_MAX:
                raise ValueOverflowError(value=value)
        return self

    @classmethod
    def unit(cls) -> "BooleanFunction":
        """The unit 1 on the empty ground set"""
        return cls(n=0, values=(0,))

    @property
    def full(self) -> int:
        """Mask of the whole ground set"""
        return (1 << self.n) - 1

    def __call__(self, mask: int) -> int:
        return self.values[mask]

    def key(self) -> Tuple[int, Tuple[int, ...]]:
        """Hashable identity used by caches and formal sums"""
        return (self.n, self.values)


class QPair(BaseModel):
    """Parameters (q1, q2) of the product family"""

    model_config = ConfigDict(frozen=True)

    q1: int = 1
    q2: int = 1

    @classmethod
    def one(cls) -> "QPair":
        """The commutative product q1 = q2 = 1"""
        return cls(q1=1, q2=1)

    def shifted(self, q: int) -> "QPair":
        """(q1 + q, q2 + q), the parameters after a theta transform"""
        return QPair(q1=self.q1 + q, q2=self.q2 + q)
