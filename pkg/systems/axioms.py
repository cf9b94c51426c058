"""
Axiom suite for the equivalence families E^W and E^S.

Each *_failures function returns every witness it finds; verify_axioms
condenses them into one AxiomCheck per axiom and sample element, carrying
the first witness.
"""

from collections import Counter
from typing import Any, Dict, List, Sequence

from config import PRODUCT_CHECK_MAX_N
from models.boolfun import BooleanFunction
from models.partition import SetPartition
from models.reports import AxiomCheck, Family
from models.sums import FormalSum
from systems.algebra import AlgebraSystem
from systems.coalgebra import CoalgebraSystem
from systems.decomposition import DecompositionSystem
from systems.masks import full_mask
from systems.partitions import PartitionSystem

Witness = Dict[str, Any]

# Axioms each family is known to satisfy
EXPECTED_AXIOMS: Dict[str, frozenset] = {
    "W": frozenset({"star1", "Delta_condition", "right_counit", "eps_Delta", "delta_compatibility"}),
    "S": frozenset(
        {
            "star1",
            "delta_condition",
            "epsilon_condition",
            "right_counit",
            "left_counit",
            "eps_Delta",
            "coassociativity",
        }
    ),
}


def _function(key) -> BooleanFunction:
    return BooleanFunction(n=key[0], values=key[1])


def _terms(sum_: FormalSum) -> List[List[Any]]:
    return [[term.function.n, list(term.function.values), term.coefficient] for term in sum_.terms]


def _membership(f: BooleanFunction, family: Family) -> Dict[tuple, bool]:
    return {p.rgs: CoalgebraSystem.is_member(f, p, family) for p in PartitionSystem.enumerate_partitions(f.n)}


class AxiomSystem:
    """Checks of the ⋆₁, Δ, δ and ε conditions and of the coproduct identities"""

    @staticmethod
    def star1_failures(f: BooleanFunction, g: BooleanFunction, family: Family) -> List[Witness]:
        """E(f ⋆₁ g) against {∼_X ⊔ ∼_Y : ∼_X ∈ E(f), ∼_Y ∈ E(g)}"""
        product = AlgebraSystem.star_product(f, g)
        actual = {p.rgs for p in CoalgebraSystem.equivalences(product, family)}
        expected = {
            PartitionSystem.concatenate(p, q).rgs
            for p in CoalgebraSystem.equivalences(f, family)
            for q in CoalgebraSystem.equivalences(g, family)
        }
        witnesses = [{"partition": list(rgs), "missing": True} for rgs in sorted(expected - actual)]
        witnesses += [{"partition": list(rgs), "missing": False} for rgs in sorted(actual - expected)]
        return witnesses

    @staticmethod
    def delta_condition_failures(f: BooleanFunction, family: Family) -> List[Witness]:
        """
        For ∼ refining ∼′:
        [∼ ∈ E(f) and ∼′/∼ ∈ E(f/∼)] ⟺ [∼′ ∈ E(f) and ∼ ∈ E(f|∼′)]
        """
        partitions = PartitionSystem.enumerate_partitions(f.n)
        members = _membership(f, family)
        contractions = {p.rgs: PartitionSystem.contract(f, p) for p in partitions}
        witnesses = []
        for coarse in partitions:
            restricted = PartitionSystem.restrict_by(f, coarse)
            for fine in partitions:
                if not PartitionSystem.refines(fine, coarse):
                    continue
                induced = PartitionSystem.induced_partition(fine, coarse)
                left = members[fine.rgs] and CoalgebraSystem.is_member(contractions[fine.rgs], induced, family)
                right = members[coarse.rgs] and CoalgebraSystem.is_member(restricted, fine, family)
                if left != right:
                    witnesses.append(
                        {"fine": list(fine.rgs), "coarse": list(coarse.rgs), "left": left, "right": right}
                    )
        return witnesses

    @staticmethod
    def split_condition_failures(f: BooleanFunction, family: Family) -> List[Witness]:
        """
        For ∼ with every block inside S or its complement:
        ∼ ∈ E(f) ⟺ ∼|S ∈ E(f|S) and ∼|S^c ∈ E(f|S^c)
        """
        full = full_mask(f.n)
        members = _membership(f, family)
        witnesses = []
        for sub in range(1, full):
            rest = full ^ sub
            inside = AlgebraSystem.restrict(f, sub)
            outside = AlgebraSystem.restrict(f, rest)
            for p in PartitionSystem.enumerate_partitions(f.n):
                if not PartitionSystem.is_subordinate(p, sub):
                    continue
                whole = members[p.rgs]
                parts = CoalgebraSystem.is_member(
                    inside, PartitionSystem.restrict_partition(p, sub), family
                ) and CoalgebraSystem.is_member(outside, PartitionSystem.restrict_partition(p, rest), family)
                if whole != parts:
                    witnesses.append({"subset": sub, "partition": list(p.rgs), "whole": whole, "parts": parts})
        return witnesses

    @staticmethod
    def epsilon_condition_failures(f: BooleanFunction, family: Family) -> List[Witness]:
        """
        ∼_f^i and the discrete partition belong to E(f); for ∼ ∈ E(f), f|∼ is
        modular only for the discrete partition and f/∼ only for ∼_f^i.
        """
        if f.n == 0:
            return []
        components = DecompositionSystem.component_partition(f)
        discrete = SetPartition.discrete(f.n)
        witnesses = []
        for p, name in ((components, "components"), (discrete, "discrete")):
            if not CoalgebraSystem.is_member(f, p, family):
                witnesses.append({"partition": list(p.rgs), "reason": f"{name} partition missing"})
        for p in CoalgebraSystem.equivalences(f, family):
            if DecompositionSystem.is_modular(PartitionSystem.restrict_by(f, p)) != p.is_discrete():
                witnesses.append({"partition": list(p.rgs), "reason": "modular restriction"})
            if DecompositionSystem.is_modular(PartitionSystem.contract(f, p)) != (p == components):
                witnesses.append({"partition": list(p.rgs), "reason": "modular contraction"})
        return witnesses

    @staticmethod
    def right_counit_failures(f: BooleanFunction, family: Family) -> List[Witness]:
        """(Id ⊗ ε_δ) ∘ δ(f̄) = f̄"""
        got = CoalgebraSystem.apply_right_counit(CoalgebraSystem.family_counter(f, family))
        if got == FormalSum.single(AlgebraSystem.canonical_form(f)):
            return []
        return [{"terms": _terms(got)}]

    @staticmethod
    def left_counit_failures(f: BooleanFunction, family: Family) -> List[Witness]:
        """(ε_δ ⊗ Id) ∘ δ(f̄) = f̄"""
        got = CoalgebraSystem.apply_left_counit(CoalgebraSystem.family_counter(f, family))
        if got == FormalSum.single(AlgebraSystem.canonical_form(f)):
            return []
        return [{"terms": _terms(got)}]

    @staticmethod
    def eps_Delta_failures(f: BooleanFunction, family: Family) -> List[Witness]:
        """(ε_Δ ⊗ Id) ∘ δ(f̄) = ε_Δ(f̄) · 1"""
        result: Counter = Counter()
        for (left, right), coefficient in CoalgebraSystem.family_counter(f, family).items():
            if left[0] == 0:
                result[right] += coefficient
        got = FormalSum.from_counter(result)
        want = FormalSum.single(BooleanFunction.unit(), CoalgebraSystem.counit_Delta(f))
        return [] if got == want else [{"terms": _terms(got)}]

    @staticmethod
    def coassociativity_failures(f: BooleanFunction, family: Family) -> List[Witness]:
        """(δ ⊗ Id) ∘ δ = (Id ⊗ δ) ∘ δ, compared as Counters of triples"""
        outer = CoalgebraSystem.family_counter(f, family)
        left: Counter = Counter()
        right: Counter = Counter()
        for (a, b), coefficient in outer.items():
            for (a1, a2), inner in CoalgebraSystem.family_counter(_function(a), family).items():
                left[(a1, a2, b)] += coefficient * inner
            for (b1, b2), inner in CoalgebraSystem.family_counter(_function(b), family).items():
                right[(a, b1, b2)] += coefficient * inner
        difference = sorted({k for k in set(left) | set(right) if left[k] != right[k]})
        return [
            {"triple": [[n, list(values)] for n, values in key], "left": left[key], "right": right[key]}
            for key in difference
        ]

    @staticmethod
    def delta_compatibility_failures(f: BooleanFunction, family: Family) -> List[Witness]:
        """(Δ ⊗ Id) ∘ δ = m_{1,3,24} ∘ (δ ⊗ δ) ∘ Δ, compared as Counters of triples"""
        left: Counter = Counter()
        for (contracted, restricted), coefficient in CoalgebraSystem.family_counter(f, family).items():
            for (c1, c2), split in CoalgebraSystem.delta_counter(_function(contracted)).items():
                left[(c1, c2, restricted)] += coefficient * split
        right: Counter = Counter()
        for (inside, outside), split in CoalgebraSystem.delta_counter(f).items():
            outer = CoalgebraSystem.family_counter(_function(inside), family)
            inner = CoalgebraSystem.family_counter(_function(outside), family)
            for (a, b), x in outer.items():
                for (c, d), y in inner.items():
                    product = AlgebraSystem.star_product(_function(b), _function(d))
                    right[(a, c, AlgebraSystem.canonical_key(product))] += split * x * y
        difference = sorted({k for k in set(left) | set(right) if left[k] != right[k]})
        return [
            {"triple": [[n, list(values)] for n, values in key], "left": left[key], "right": right[key]}
            for key in difference
        ]

    @staticmethod
    def weak_strong_witnesses(f: BooleanFunction) -> List[Witness]:
        """Partitions in E^W(f) but not in E^S(f)"""
        return [
            {"partition": list(p.rgs)}
            for p in CoalgebraSystem.weak_equivalences(f)
            if not CoalgebraSystem.is_member(f, p, "S")
        ]

    @staticmethod
    def product_partner(sample: Sequence[BooleanFunction], index: int) -> BooleanFunction:
        """The next sample element, cut down so the product stays within PRODUCT_CHECK_MAX_N"""
        f = sample[index]
        g = sample[(index + 1) % len(sample)]
        keep = max(0, min(g.n, PRODUCT_CHECK_MAX_N - f.n))
        return AlgebraSystem.restrict(g, full_mask(keep))

    @staticmethod
    def check_element(sample: Sequence[BooleanFunction], index: int, family: Family) -> List[AxiomCheck]:
        """All axioms on one sample element, in a fixed order"""
        f = sample[index]
        expected = EXPECTED_AXIOMS[family]
        results = [
            ("star1", AxiomSystem.star1_failures(f, AxiomSystem.product_partner(sample, index), family)),
            ("delta_condition", AxiomSystem.delta_condition_failures(f, family)),
            ("Delta_condition", AxiomSystem.split_condition_failures(f, family)),
            ("epsilon_condition", AxiomSystem.epsilon_condition_failures(f, family)),
            ("right_counit", AxiomSystem.right_counit_failures(f, family)),
            ("left_counit", AxiomSystem.left_counit_failures(f, family)),
            ("eps_Delta", AxiomSystem.eps_Delta_failures(f, family)),
            ("coassociativity", AxiomSystem.coassociativity_failures(f, family)),
            ("delta_compatibility", AxiomSystem.delta_compatibility_failures(f, family)),
            ("weak_strong_agreement", AxiomSystem.weak_strong_witnesses(f)),
        ]
        return [
            AxiomCheck(
                input=index,
                axiom=axiom,
                family=family,
                passed=not witnesses,
                expected=axiom in expected,
                witness=witnesses[0] if witnesses else None,
            )
            for axiom, witnesses in results
        ]

    @staticmethod
    def verify_axioms(sample: Sequence[BooleanFunction], family: Family) -> List[AxiomCheck]:
        """
        Evaluate the suite on every sample element, in input order.

        Failures are report entries, never exceptions; AxiomCheck.violation
        marks the ones the family is known to satisfy.
        """
        report: List[AxiomCheck] = []
        for index in range(len(sample)):
            report.extend(AxiomSystem.check_element(sample, index, family))
        return report
