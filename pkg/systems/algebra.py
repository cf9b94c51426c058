"""
Core operations on boolean functions: construction, restriction, the
(q1, q2) product family, theta transforms, and canonical forms.
"""

import itertools
from functools import lru_cache
from typing import Sequence, Tuple

import numpy as np

from models.boolfun import BooleanFunction, QPair
from models.errors import EqualParametersError, GroundSetTooLargeError, SubsetOutOfRangeError
from systems.masks import embed_table, popcount, scatter_table
from config import ground_set_cap

# Permutations compared per numpy batch in canonical_form
_PERMUTATION_BATCH = 5040


def require_cap(n: int, kind: str) -> None:
    """Raise GroundSetTooLarge when n exceeds the effective cap"""
    cap = ground_set_cap(kind)
    if n > cap:
        raise GroundSetTooLargeError(n=n, kind=kind, cap=cap)


@lru_cache(maxsize=1 << 16)
def _canonical_values(n: int, values: Tuple[int, ...]) -> Tuple[int, ...]:
    if n <= 1:
        return values
    size = 1 << n
    masks = np.arange(size, dtype=np.int64)
    bits = (masks[:, None] >> np.arange(n, dtype=np.int64)) & 1
    source = np.asarray(values, dtype=np.int64)
    best = None
    permutations = itertools.permutations(range(n))
    while True:
        batch = np.array(list(itertools.islice(permutations, _PERMUTATION_BATCH)), dtype=np.int64)
        if batch.size == 0:
            break
        images = bits @ np.left_shift(1, batch).T
        tables = np.empty((len(batch), size), dtype=np.int64)
        tables[np.arange(len(batch))[:, None], images.T] = source[None, :]
        winner = tuple(int(v) for v in tables[np.lexsort(tables.T[::-1])[0]])
        if best is None or winner < best:
            best = winner
    return best


class AlgebraSystem:
    """Products, transforms, and relabelings of boolean functions"""

    @staticmethod
    def new_boolean_function(n: int, values: Sequence[int]) -> BooleanFunction:
        """Validate a value table; raises WrongLength or NonzeroEmptySet"""
        return BooleanFunction(n=n, values=tuple(values))

    @staticmethod
    def restrict(f: BooleanFunction, sub: int) -> BooleanFunction:
        """
        Restriction f|sub, re-indexed on popcount(sub) elements.

        Surviving elements keep their relative order.
        """
        if sub < 0 or sub & ~f.full:
            raise SubsetOutOfRangeError(mask=sub, n=f.n)
        return BooleanFunction(n=popcount(sub), values=tuple(f.values[m] for m in embed_table(sub)))

    @staticmethod
    def star_product(f: BooleanFunction, g: BooleanFunction, q: QPair = QPair.one()) -> BooleanFunction:
        """
        f ⋆_q g on the concatenated ground set, f on the low positions.

        (f⋆g)(A) = q1^|A∩Y| f(A∩X) + q2^|A∩X| g(A∩Y)
        """
        nf, ng = f.n, g.n
        q1_powers = [q.q1**k for k in range(ng + 1)]
        q2_powers = [q.q2**k for k in range(nf + 1)]
        values = []
        for b in range(1 << ng):
            weight_f = q1_powers[popcount(b)]
            g_value = g.values[b]
            for a in range(1 << nf):
                values.append(weight_f * f.values[a] + q2_powers[popcount(a)] * g_value)
        return BooleanFunction(n=nf + ng, values=tuple(values))

    @staticmethod
    def theta(f: BooleanFunction, q: int) -> BooleanFunction:
        """θ_q(f)(A) = Σ_{B⊆A} q^{|A|-|B|} f(B), by a weighted subset-sum pass"""
        table = list(f.values)
        for i in range(f.n):
            bit = 1 << i
            for mask in range(len(table)):
                if mask & bit:
                    table[mask] += q * table[mask ^ bit]
        return BooleanFunction(n=f.n, values=tuple(table))

    @staticmethod
    def f_lambda(n: int, lam: int, q: QPair) -> BooleanFunction:
        """
        The function A ↦ λ (q1^|A| - q2^|A|) / (q1 - q2).

        Evaluated through the expansion q1^{k-1} + q1^{k-2} q2 + ... + q2^{k-1},
        so it stays integral.
        """
        if q.q1 == q.q2:
            raise EqualParametersError(q=q.q1)
        sums = [sum(q.q1 ** (k - 1 - i) * q.q2**i for i in range(k)) for k in range(n + 1)]
        return BooleanFunction(n=n, values=tuple(lam * sums[popcount(m)] for m in range(1 << n)))

    @staticmethod
    def permute(f: BooleanFunction, targets: Sequence[int]) -> BooleanFunction:
        """Relabel: element i+1 moves to position targets[i] (0-based)"""
        image = scatter_table([1 << t for t in targets])
        table = [0] * len(f.values)
        for mask, value in enumerate(f.values):
            table[image[mask]] = value
        return BooleanFunction(n=f.n, values=tuple(table))

    @staticmethod
    def canonical_form(f: BooleanFunction) -> BooleanFunction:
        """Lexicographically smallest value table over all relabelings"""
        require_cap(f.n, "canonical")
        return BooleanFunction(n=f.n, values=_canonical_values(f.n, f.values))

    @staticmethod
    def canonical_key(f: BooleanFunction) -> Tuple[int, Tuple[int, ...]]:
        """(n, values) of the canonical form, the key of formal sums"""
        require_cap(f.n, "canonical")
        return (f.n, _canonical_values(f.n, f.values))

    @staticmethod
    def is_unit(f: BooleanFunction) -> bool:
        return f.n == 0
