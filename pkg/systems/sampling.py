"""
Seeded random boolean functions and vector families, and exhaustive
enumeration of small value tables.
"""

import itertools
from fractions import Fraction
from typing import Iterator, List, Sequence

import numpy as np

from config import DEFAULT_SEED, SAMPLE_VALUE_RANGE
from models.boolfun import BooleanFunction
from models.instances import VectorFamily


def make_rng(seed: int = DEFAULT_SEED) -> np.random.Generator:
    """A PCG64 generator; the same seed always replays the same stream"""
    return np.random.Generator(np.random.PCG64(seed))


def random_function(
    rng: np.random.Generator,
    n: int,
    low: int = SAMPLE_VALUE_RANGE[0],
    high: int = SAMPLE_VALUE_RANGE[1],
) -> BooleanFunction:
    """
    Uniform value table on n elements with entries in low..high.

    Examples:
        random_function(make_rng(1), 2) -> BooleanFunction(n=2, values=(0, ...))
    """
    drawn = rng.integers(low, high + 1, size=(1 << n) - 1)
    return BooleanFunction(n=n, values=(0,) + tuple(int(v) for v in drawn))


def random_sample(count: int, max_n: int, seed: int = DEFAULT_SEED) -> List[BooleanFunction]:
    """count functions, each with n uniform in 1..max_n"""
    rng = make_rng(seed)
    sample = []
    for _ in range(count):
        n = int(rng.integers(1, max_n + 1))
        sample.append(random_function(rng, n))
    return sample


def random_vector_family(
    rng: np.random.Generator,
    n: int,
    dim: int,
    low: int = SAMPLE_VALUE_RANGE[0],
    high: int = SAMPLE_VALUE_RANGE[1],
) -> VectorFamily:
    """n integer columns of length dim with entries in low..high"""
    drawn = rng.integers(low, high + 1, size=(n, dim))
    columns = tuple(tuple(Fraction(int(x)) for x in column) for column in drawn)
    return VectorFamily(dim=dim, columns=columns)


def enumerate_functions(n: int, values: Sequence[int]) -> Iterator[BooleanFunction]:
    """Every table on n elements with nonempty-set values drawn from values"""
    for table in itertools.product(values, repeat=(1 << n) - 1):
        yield BooleanFunction(n=n, values=(0,) + table)
