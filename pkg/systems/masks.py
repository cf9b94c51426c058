"""
Bitmask helpers for subsets of a ground set {1..n}.

Bit i of a mask stands for element i+1.
"""

from typing import Iterator, List, Sequence


def full_mask(n: int) -> int:
    """Mask of the whole ground set"""
    return (1 << n) - 1


def popcount(mask: int) -> int:
    """Cardinality of a subset"""
    return mask.bit_count()


def positions(mask: int) -> List[int]:
    """
    Bit positions present in a mask, ascending.

    Examples:
        positions(0b1010) -> [1, 3]
    """
    result = []
    i = 0
    while mask:
        if mask & 1:
            result.append(i)
        mask >>= 1
        i += 1
    return result


def submasks(mask: int) -> Iterator[int]:
    """All submasks of mask, including 0 and mask itself, in decreasing order"""
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def scatter_table(targets: Sequence[int]) -> List[int]:
    """
    Image of every local mask when local bit j is sent to targets[j].

    Local masks range over 0..2^len(targets)-1; entry m of the result is the
    union of targets[j] over the bits j of m.

    Examples:
        scatter_table([1, 4]) -> [0, 1, 4, 5]
    """
    table = [0] * (1 << len(targets))
    for m in range(1, len(table)):
        low = m & -m
        table[m] = table[m ^ low] | targets[low.bit_length() - 1]
    return table


def embed_table(mask: int) -> List[int]:
    """Image of every local mask of a sub-ground-set inside the parent ground set"""
    return scatter_table([1 << p for p in positions(mask)])


def elements(mask: int) -> List[int]:
    """1-based elements of a subset"""
    return [p + 1 for p in positions(mask)]


def from_elements(items: Sequence[int]) -> int:
    """Mask of a collection of 1-based elements"""
    mask = 0
    for item in items:
        mask |= 1 << (item - 1)
    return mask
