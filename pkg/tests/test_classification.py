"""
Test classification system.
"""

import pytest

from models.boolfun import BooleanFunction
from models.errors import GroundSetTooLargeError
from systems.algebra import AlgebraSystem
from systems.classification import ClassificationSystem
from systems.coalgebra import CoalgebraSystem
from systems.decomposition import DecompositionSystem
from systems.partitions import PartitionSystem
from systems.sampling import enumerate_functions, make_rng, random_function


def bf(*values):
    """Build a boolean function from its value table"""
    n = len(values).bit_length() - 1
    return BooleanFunction(n=n, values=tuple(values))


def powers_of_three(n):
    """3^m on the subset with mask m; no value is the sum of two others"""
    return BooleanFunction(n=n, values=(0,) + tuple(3**m for m in range(1, 1 << n)))


def pair_conditions(f):
    """(pair additive, top additive over that pair) for each pair of a 3-set"""
    conditions = []
    for z in range(3):
        x, y = (i for i in range(3) if i != z)
        bx, by, bz = 1 << x, 1 << y, 1 << z
        pair_additive = f(bx | by) == f(bx) + f(by)
        top_additive = f(bx | by | bz) == f(bx | by) + f(bz)
        conditions.append((pair_additive, top_additive))
    return conditions


def test_small_ground_sets_are_everything():
    """Test every function on at most two elements lies in every subspecies"""
    for n in (1, 2):
        for f in enumerate_functions(n, (-1, 0, 1, 2)):
            assert ClassificationSystem.is_hyper_rigid(f)
            assert ClassificationSystem.is_rigid(f)
            assert ClassificationSystem.in_bool_max(f)
            assert ClassificationSystem.is_counitary(f)


def assert_three_element_characterizations(values):
    """Compare the predicates with their pair and top conditions on every 3-element table"""
    for f in enumerate_functions(3, values):
        hyper_rigid = ClassificationSystem.is_hyper_rigid(f)
        rigid = ClassificationSystem.is_rigid(f)
        in_max = ClassificationSystem.in_bool_max(f)
        if not DecompositionSystem.is_indecomposable(f):
            assert hyper_rigid and rigid and in_max
            continue
        conditions = pair_conditions(f)
        assert hyper_rigid == all(not pair and not top for pair, top in conditions)
        assert rigid == all(not top for _, top in conditions)
        assert in_max == all(pair or not top for pair, top in conditions)
        assert in_max == ClassificationSystem.is_counitary(f)


def test_three_element_characterizations():
    """Test the three-element criteria for hyper-rigid, rigid and Bool_max"""
    assert_three_element_characterizations((-1, 0, 1))


@pytest.mark.slow
def test_three_element_characterizations_full_range():
    """Test the three-element criteria on every table with values in -2..2"""
    assert_three_element_characterizations(range(-2, 3))


def test_subspecies_chain():
    """Test hyper-rigid ⊆ rigid ⊆ Bool_max ⊆ counitary"""
    rng = make_rng(37)
    for _ in range(60):
        f = random_function(rng, int(rng.integers(1, 5)))
        record = ClassificationSystem.classify(f)
        assert not record.hyper_rigid or record.rigid
        assert not record.rigid or record.in_bool_max
        assert not record.in_bool_max or record.counitary


def test_inclusions_are_strict():
    """Test one witness for each strict inclusion"""
    rigid_not_hyper = bf(0, 3, 9, 12, 81, 243, 729, 2187)
    assert ClassificationSystem.is_rigid(rigid_not_hyper)
    assert not ClassificationSystem.is_hyper_rigid(rigid_not_hyper)

    max_not_rigid = bf(0, 3, 9, 12, 81, 243, 729, 93)
    assert ClassificationSystem.in_bool_max(max_not_rigid)
    assert not ClassificationSystem.is_rigid(max_not_rigid)

    values = list(powers_of_three(4).values)
    values[0b0111] = values[0b0011] + values[0b0100]
    counitary_not_max = BooleanFunction(n=4, values=tuple(values))
    assert ClassificationSystem.is_counitary(counitary_not_max)
    assert not ClassificationSystem.in_bool_max(counitary_not_max)
    assert not ClassificationSystem.in_bool_max(AlgebraSystem.restrict(counitary_not_max, 0b0111))

    not_counitary = bf(0, 1, 1, 3, 2, 5, 5, 5)
    assert not ClassificationSystem.is_counitary(not_counitary)


def test_hyper_rigid_powers():
    """Test functions with no additive coincidence are hyper-rigid"""
    for n in range(1, 5):
        assert ClassificationSystem.is_hyper_rigid(powers_of_three(n))


def test_modular_is_hyper_rigid():
    """Test that singleton components leave no room for additive splits"""
    assert ClassificationSystem.is_hyper_rigid(bf(0, 1, 1, 2, 1, 2, 2, 3))


def test_rigidity_is_checked_inside_components():
    """Test additive coincidences across components do not count"""
    g = powers_of_three(2)
    f = AlgebraSystem.star_product(g, bf(0, 5))
    assert ClassificationSystem.is_hyper_rigid(f)


def test_classify_record():
    """Test the combined record"""
    record = ClassificationSystem.classify(bf(0, 1, 1, 2, 1, 2, 2, 2))
    assert record.is_matroid_rank
    assert record.rigid
    assert not record.hyper_rigid
    assert record.indecomposable
    assert not record.modular

    unit = ClassificationSystem.classify(BooleanFunction.unit())
    assert unit.indecomposable is None
    assert unit.modular and unit.rigid and unit.in_bool_max


def test_classify_beyond_caps():
    """Test flags past their cap come back as None"""
    cardinality = BooleanFunction(n=6, values=tuple(m.bit_count() for m in range(64)))
    record = ClassificationSystem.classify(cardinality)
    assert record.in_bool_max is None
    assert record.counitary is True
    assert record.hyper_rigid

    with pytest.raises(GroundSetTooLargeError):
        ClassificationSystem.in_bool_max(cardinality)


SUBSPECIES = {
    "rigid": ClassificationSystem.is_rigid,
    "hyper_rigid": ClassificationSystem.is_hyper_rigid,
    "in_bool_max": ClassificationSystem.in_bool_max,
}


def natural_sample(seed, count=40, max_n=4):
    """Seeded ℕ-valued functions together with their θ₁ images"""
    rng = make_rng(seed)
    sample = []
    for _ in range(count):
        f = random_function(rng, int(rng.integers(1, max_n + 1)), low=0, high=3)
        sample += [f, AlgebraSystem.theta(f, 1)]
    return sample


def test_subspecies_closed_under_restriction():
    """Test restrictions stay rigid, hyper-rigid and in Bool_max"""
    for f in natural_sample(41):
        for name, member in SUBSPECIES.items():
            if not member(f):
                continue
            for sub in range(1 << f.n):
                assert member(AlgebraSystem.restrict(f, sub)), (name, f.values, sub)


def test_subspecies_closed_under_products():
    """Test ⋆₁-products of members stay members"""
    sample = natural_sample(43, max_n=3)
    for f, g in zip(sample, sample[1:]):
        if f.n + g.n > 5:
            continue
        product = AlgebraSystem.star_product(f, g)
        for name, member in SUBSPECIES.items():
            if member(f) and member(g):
                assert member(product), (name, f.values, g.values)


def test_subspecies_closed_under_weak_contraction():
    """Test contractions by weak equivalences stay members"""
    for f in natural_sample(47):
        for name, member in SUBSPECIES.items():
            if not member(f):
                continue
            for p in CoalgebraSystem.weak_equivalences(f):
                assert member(PartitionSystem.contract(f, p)), (name, f.values, p.rgs)


def test_theta_one_of_natural_functions_is_rigid():
    """Test θ₁ of a ℕ-valued function is rigid"""
    rng = make_rng(53)
    for _ in range(100):
        f = random_function(rng, int(rng.integers(1, 5)), low=0, high=3)
        assert ClassificationSystem.is_rigid(AlgebraSystem.theta(f, 1))
