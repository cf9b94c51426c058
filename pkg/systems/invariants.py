"""
The polynomial invariant Φ, its coloring oracle, the character μ = Φ(·)(-1),
the antipode, and the Φ-compatibility report for the δ coproducts.
"""

import itertools
from collections import Counter
from functools import lru_cache
from typing import List, Tuple

import sympy
from sympy.functions.combinatorial.numbers import stirling

from config import PHI_COUNT_MAX_BITS
from models.boolfun import BooleanFunction
from models.errors import EnumerationTooLargeError, InvalidInputError, NotInBoolMaxError
from models.instances import Hypergraph
from models.polynomial import BivariatePolynomial, Polynomial, T, U
from models.reports import CompatReport
from models.sums import FormalSum
from systems.algebra import AlgebraSystem, require_cap
from systems.classification import ClassificationSystem
from systems.coalgebra import CoalgebraSystem
from systems.instances import InstanceSystem
from systems.partitions import PartitionSystem


def _modular_masks(f: BooleanFunction) -> List[bool]:
    """Entry m says whether f restricted to m is modular"""
    size = len(f.values)
    additive = [0] * size
    modular = [True] * size
    for mask in range(1, size):
        low = mask & -mask
        additive[mask] = additive[mask ^ low] + f.values[low]
        ok = f.values[mask] == additive[mask]
        rest = mask
        while ok and rest:
            bit = rest & -rest
            ok = modular[mask ^ bit]
            rest ^= bit
        modular[mask] = ok
    return modular


@lru_cache(maxsize=1 << 14)
def _phi_coeffs(n: int, values: Tuple[int, ...]) -> Tuple[int, ...]:
    f = BooleanFunction(n=n, values=values)
    if n == 0:
        return (1,)
    modular = _modular_masks(f)
    counts: Counter = Counter()
    for p in PartitionSystem.enumerate_partitions(n):
        if all(modular[block] for block in p.blocks()):
            counts[p.cl] += 1
    coeffs = [0] * (n + 1)
    for k, count in counts.items():
        for j in range(1, k + 1):
            coeffs[j] += count * int(stirling(k, j, kind=1, signed=True))
    return tuple(coeffs)


def _enumerate_colorings(n: int, colors: int):
    if colors < 1:
        raise InvalidInputError(reason=f"colors must be at least 1, got {colors}")
    if colors ** n > 1 << PHI_COUNT_MAX_BITS:
        raise EnumerationTooLargeError(colors=colors, n=n, bits=PHI_COUNT_MAX_BITS)
    return itertools.product(range(colors), repeat=n)


def _fibers(coloring: Tuple[int, ...], colors: int) -> List[int]:
    fibers = [0] * colors
    for i, color in enumerate(coloring):
        fibers[color] |= 1 << i
    return fibers


class InvariantSystem:
    """Polynomial invariants and the antipode"""

    @staticmethod
    def phi(f: BooleanFunction) -> Polynomial:
        """
        Φ(f̄): each partition whose blocks all carry modular restrictions
        contributes the falling factorial T(T-1)...(T-k+1), k its block count.

        Returns:
            Polynomial with integer coefficients, monic of degree n
        """
        require_cap(f.n, "partitions")
        return Polynomial(coeffs=_phi_coeffs(f.n, f.values))

    @staticmethod
    def phi_count(f: BooleanFunction, colors: int) -> int:
        """Brute-force count of maps to [colors] whose fibers carry modular restrictions"""
        modular = _modular_masks(f)
        return sum(
            1
            for coloring in _enumerate_colorings(f.n, colors)
            if all(modular[fiber] for fiber in _fibers(coloring, colors))
        )

    @staticmethod
    def chromatic_polynomial(h: Hypergraph) -> Polynomial:
        return InvariantSystem.phi(InstanceSystem.gamma(h))

    @staticmethod
    def chromatic_count(h: Hypergraph, colors: int) -> int:
        """Colorings with no hyperedge of size at least 2 monochromatic"""
        edges = [edge for edge in h.edges if len(edge) >= 2]
        count = 0
        for coloring in _enumerate_colorings(h.n, colors):
            if all(len({coloring[v - 1] for v in edge}) > 1 for edge in edges):
                count += 1
        return count

    @staticmethod
    def mu(f: BooleanFunction) -> int:
        """μ(f̄) = Φ(f̄)(-1)"""
        return InvariantSystem.phi(f).evaluate(-1)

    @staticmethod
    def antipode(f: BooleanFunction, checked: bool = True) -> FormalSum:
        """
        S(f̄) = Σ_{∼∈E^W(f)} μ(f/∼) · (f|∼)‾

        Checked mode refuses functions outside Bool_max, where this formula
        need not invert the identity.
        """
        require_cap(f.n, "canonical")
        if checked and not ClassificationSystem.in_bool_max(f):
            raise NotInBoolMaxError()
        result: Counter = Counter()
        for p in CoalgebraSystem.weak_equivalences(f):
            weight = InvariantSystem.mu(PartitionSystem.contract(f, p))
            result[AlgebraSystem.canonical_key(PartitionSystem.restrict_by(f, p))] += weight
        return FormalSum.from_counter(result)

    @staticmethod
    def antipode_identity(f: BooleanFunction, checked: bool = True) -> FormalSum:
        """⋆₁ ∘ (S ⊗ Id) ∘ Δ(f̄); the unit for n = 0 and zero otherwise on Bool_max"""
        if checked and not ClassificationSystem.in_bool_max(f):
            raise NotInBoolMaxError()
        result: Counter = Counter()
        for (left, right), multiplicity in CoalgebraSystem.delta_counter(f).items():
            right_function = BooleanFunction(n=right[0], values=right[1])
            image = InvariantSystem.antipode(BooleanFunction(n=left[0], values=left[1]), checked=False)
            for term in image.terms:
                product = AlgebraSystem.star_product(term.function, right_function)
                result[AlgebraSystem.canonical_key(product)] += multiplicity * term.coefficient
        return FormalSum.from_counter(result)

    @staticmethod
    def phi_tensor(pairs: Counter) -> BivariatePolynomial:
        """(Φ ⊗ Φ) of a tensor Counter, as a polynomial in T and T′"""
        total = sympy.Integer(0)
        for (left, right), coefficient in pairs.items():
            left_phi = InvariantSystem.phi(BooleanFunction(n=left[0], values=left[1]))
            right_phi = InvariantSystem.phi(BooleanFunction(n=right[0], values=right[1]))
            total += coefficient * left_phi.as_expr(T) * right_phi.as_expr(U)
        return BivariatePolynomial.from_sympy(sympy.expand(total))

    @staticmethod
    def phi_compat_report(f: BooleanFunction) -> CompatReport:
        """
        Compare (Φ⊗Φ)∘δ^W, (Φ⊗Φ)∘δ^S and δ∘Φ on f̄.

        The first and the last agree exactly when f is counitary.
        """
        weak = InvariantSystem.phi_tensor(CoalgebraSystem.family_counter(f, "W"))
        strong = InvariantSystem.phi_tensor(CoalgebraSystem.family_counter(f, "S"))
        delta = InvariantSystem.phi(f).substitute_product()
        counitary = ClassificationSystem.is_counitary(f)
        return CompatReport(
            phi_tensor_weak=weak,
            phi_tensor_strong=strong,
            delta_of_phi=delta,
            weak_equals_strong=weak == strong,
            weak_equals_delta=weak == delta,
            strong_equals_delta=strong == delta,
            counitary=counitary,
            consistent=(weak == delta) == counitary,
        )
