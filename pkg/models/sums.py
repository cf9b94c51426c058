"""
Integer linear combinations of isoclasses of boolean functions.

Keys are (n, values) tuples of canonical forms; the models store terms sorted
by key with zero coefficients dropped, so equal sums compare equal.
"""

from collections import Counter
from typing import Dict, Iterable, Mapping, Tuple

from pydantic import BaseModel, ConfigDict, Field

from .boolfun import BooleanFunction

FunctionKey = Tuple[int, Tuple[int, ...]]
PairKey = Tuple[FunctionKey, FunctionKey]


def _function(key: FunctionKey) -> BooleanFunction:
    return BooleanFunction(n=key[0], values=key[1])


class FormalTerm(BaseModel):
    """coefficient · f̄"""

    model_config = ConfigDict(frozen=True)

    function: BooleanFunction
    coefficient: int


class FormalSum(BaseModel):
    """An element of the isoclass algebra"""

    model_config = ConfigDict(frozen=True)

    terms: Tuple[FormalTerm, ...] = Field(default_factory=tuple)

    @classmethod
    def from_counter(cls, counter: Mapping[FunctionKey, int]) -> "FormalSum":
        terms = tuple(
            FormalTerm(function=_function(key), coefficient=coefficient)
            for key, coefficient in sorted(counter.items())
            if coefficient != 0
        )
        return cls(terms=terms)

    @classmethod
    def single(cls, function: BooleanFunction, coefficient: int = 1) -> "FormalSum":
        return cls.from_counter({function.key(): coefficient})

    def as_counter(self) -> Counter:
        counter: Counter = Counter()
        for term in self.terms:
            counter[term.function.key()] += term.coefficient
        return counter

    def coefficient(self, function: BooleanFunction) -> int:
        """Coefficient of a canonical function, 0 if absent"""
        return self.as_counter().get(function.key(), 0)

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "FormalSum") -> "FormalSum":
        counter = self.as_counter()
        counter.update(other.as_counter())
        return FormalSum.from_counter(counter)


class TensorTerm(BaseModel):
    """coefficient · left ⊗ right"""

    model_config = ConfigDict(frozen=True)

    left: BooleanFunction
    right: BooleanFunction
    coefficient: int


class FormalTensorSum(BaseModel):
    """An element of the tensor square of the isoclass algebra"""

    model_config = ConfigDict(frozen=True)

    terms: Tuple[TensorTerm, ...] = Field(default_factory=tuple)

    @classmethod
    def from_counter(cls, counter: Mapping[PairKey, int]) -> "FormalTensorSum":
        terms = tuple(
            TensorTerm(left=_function(left), right=_function(right), coefficient=coefficient)
            for (left, right), coefficient in sorted(counter.items())
            if coefficient != 0
        )
        return cls(terms=terms)

    @classmethod
    def from_pairs(cls, pairs: Iterable[PairKey]) -> "FormalTensorSum":
        """Sum of left ⊗ right over an iterable of key pairs, with multiplicity"""
        return cls.from_counter(Counter(pairs))

    def as_counter(self) -> Counter:
        counter: Counter = Counter()
        for term in self.terms:
            counter[(term.left.key(), term.right.key())] += term.coefficient
        return counter

    def swapped(self) -> "FormalTensorSum":
        """Exchange the tensor factors"""
        counter: Dict[PairKey, int] = {}
        for (left, right), coefficient in self.as_counter().items():
            counter[(right, left)] = counter.get((right, left), 0) + coefficient
        return FormalTensorSum.from_counter(counter)

    def __len__(self) -> int:
        return len(self.terms)
