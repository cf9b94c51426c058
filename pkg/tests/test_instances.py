"""
Test instance system.
"""

import itertools

import pytest

from models.boolfun import BooleanFunction
from models.errors import (
    EmptyVertexSetError,
    InvalidFieldError,
    InvalidInstanceError,
    NotABasisError,
    NotAMatroidError,
)
from models.instances import Hypergraph, MultiGraph, VectorFamily
from models.partition import SetPartition
from systems.algebra import AlgebraSystem
from systems.classification import ClassificationSystem
from systems.decomposition import DecompositionSystem
from systems.instances import InstanceSystem
from systems.linear import parse_field
from systems.partitions import PartitionSystem
from systems.sampling import make_rng, random_vector_family


TRIANGLE_RANK = (0, 1, 1, 2, 1, 2, 2, 2)


def create_triangle():
    """Three vertices joined pairwise"""
    return MultiGraph(vcount=3, ends=((1, 2), (2, 3), (1, 3)))


def small_multigraphs():
    """Every multigraph on four vertices with at most four edges"""
    pairs = list(itertools.combinations(range(1, 5), 2))
    for count in range(5):
        for ends in itertools.product(pairs, repeat=count):
            yield MultiGraph(vcount=4, ends=ends)


def all_hypergraphs(max_n):
    """Every hypergraph on 1..max_n vertices"""
    for n in range(1, max_n + 1):
        edges = range(1, 1 << n)
        for count in range(len(edges) + 1):
            for masks in itertools.combinations(edges, count):
                yield Hypergraph.from_masks(n, list(masks))


def test_hypergraph_validation():
    """Test hyperedges are normalized and checked"""
    h = Hypergraph(n=3, edges=[[2, 1], [1, 2], [3]])
    assert h.edges == ((1, 2), (3,))

    with pytest.raises(InvalidInstanceError):
        Hypergraph(n=2, edges=[[]])
    with pytest.raises(InvalidInstanceError):
        Hypergraph(n=2, edges=[[1, 3]])


def test_iota():
    """Test the hyperedge indicator"""
    assert InstanceSystem.iota(Hypergraph(n=2)).values == (0, 0, 0, 0)
    assert InstanceSystem.iota(Hypergraph(n=2, edges=[[1, 2]])).values == (0, 0, 0, 1)


def test_gamma():
    """Test γ counts hyperedges inside each subset"""
    h = Hypergraph(n=3, edges=[[1], [2], [3], [1, 2, 3]])
    assert InstanceSystem.gamma(h).values == (0, 1, 1, 2, 1, 2, 2, 4)


def test_gamma_modular_iff_singleton_edges():
    """Test γ(H) is modular exactly when every hyperedge is a singleton"""
    assert DecompositionSystem.is_modular(InstanceSystem.gamma(Hypergraph(n=3, edges=[[1], [3]])))
    assert not DecompositionSystem.is_modular(InstanceSystem.gamma(Hypergraph(n=3, edges=[[1], [2, 3]])))


def test_gamma_morphism():
    """Test γ turns disjoint unions into ⋆₁ and commutes with restriction"""
    g = Hypergraph(n=2, edges=[[1, 2], [2]])
    h = Hypergraph(n=3, edges=[[1, 3], [1, 2, 3]])
    union = InstanceSystem.disjoint_union(g, h)
    assert InstanceSystem.gamma(union) == AlgebraSystem.star_product(InstanceSystem.gamma(g), InstanceSystem.gamma(h))
    for sub in range(1 << union.n):
        assert AlgebraSystem.restrict(InstanceSystem.gamma(union), sub) == InstanceSystem.gamma(
            InstanceSystem.restrict_hypergraph(union, sub)
        )


def test_is_connected():
    """Test hypergraph connectivity"""
    assert InstanceSystem.is_connected(Hypergraph(n=1))
    assert not InstanceSystem.is_connected(Hypergraph(n=2))
    assert InstanceSystem.is_connected(Hypergraph(n=3, edges=[[1, 2, 3]]))
    assert not InstanceSystem.is_connected(Hypergraph(n=3, edges=[[1, 2], [3]]))

    with pytest.raises(EmptyVertexSetError):
        InstanceSystem.is_connected(Hypergraph(n=0))


def test_connected_iff_gamma_indecomposable():
    """Test a hypergraph is connected exactly when γ of it is indecomposable"""
    for h in all_hypergraphs(3):
        assert InstanceSystem.is_connected(h) == DecompositionSystem.is_indecomposable(InstanceSystem.gamma(h))


def test_gamma_is_rigid():
    """Test γ(H) is rigid for every small hypergraph"""
    for h in all_hypergraphs(3):
        assert ClassificationSystem.is_rigid(InstanceSystem.gamma(h))
    rng = make_rng(59)
    for _ in range(60):
        masks = [int(m) for m in rng.choice(range(1, 16), size=int(rng.integers(0, 7)), replace=False)]
        assert ClassificationSystem.is_rigid(InstanceSystem.gamma(Hypergraph.from_masks(4, masks)))


def test_is_matroid_rank():
    """Test the rank axioms"""
    uniform = BooleanFunction(n=4, values=tuple(min(m.bit_count(), 2) for m in range(16)))
    assert InstanceSystem.is_matroid_rank(uniform)
    assert InstanceSystem.is_matroid_rank(BooleanFunction(n=3, values=TRIANGLE_RANK))
    assert not InstanceSystem.is_matroid_rank(BooleanFunction(n=2, values=(0, 1, 1, 3)))
    # decreasing
    assert not InstanceSystem.is_matroid_rank(BooleanFunction(n=2, values=(0, 1, 1, 0)))
    # not submodular
    assert not InstanceSystem.is_matroid_rank(BooleanFunction(n=3, values=(0, 1, 0, 1, 0, 1, 0, 2)))


def test_graphic_rank():
    """Test vertex count minus component count"""
    assert InstanceSystem.graphic_rank(MultiGraph(vcount=2, ends=((1, 2),))).values == (0, 1)
    assert InstanceSystem.graphic_rank(MultiGraph(vcount=2, ends=((1, 2), (2, 1)))).values == (0, 1, 1, 1)
    assert InstanceSystem.graphic_rank(create_triangle()).values == TRIANGLE_RANK


def test_multigraph_validation():
    """Test loops and out-of-range endpoints are rejected"""
    with pytest.raises(InvalidInstanceError):
        MultiGraph(vcount=2, ends=((1, 1),))
    with pytest.raises(InvalidInstanceError):
        MultiGraph(vcount=2, ends=((1, 3),))


def test_graphic_matroids_are_rigid():
    """Test every small graphic rank is a rigid matroid rank, modular exactly on forests"""
    for g in small_multigraphs():
        rank = InstanceSystem.graphic_rank(g)
        assert InstanceSystem.is_matroid_rank(rank)
        assert ClassificationSystem.is_rigid(rank)
        assert DecompositionSystem.is_modular(rank) == InstanceSystem.is_forest(g)


def test_graphic_union_is_product():
    """Test disjoint unions of multigraphs give ⋆₁-products of ranks"""
    g = create_triangle()
    h = MultiGraph(vcount=2, ends=((1, 2), (1, 2)))
    union = InstanceSystem.multigraph_union(g, h)
    assert InstanceSystem.graphic_rank(union) == AlgebraSystem.star_product(
        InstanceSystem.graphic_rank(g), InstanceSystem.graphic_rank(h)
    )


def test_linear_rank():
    """Test exact ranks over the rationals"""
    triangle = VectorFamily(dim=2, columns=[[1, 0], [0, 1], [1, 1]])
    assert InstanceSystem.linear_rank(triangle).values == TRIANGLE_RANK

    zeros = VectorFamily(dim=2, columns=[[0, 0], [0, 0]])
    assert InstanceSystem.linear_rank(zeros).values == (0, 0, 0, 0)

    free = VectorFamily(dim=3, columns=[[1, 0, 0], [["1", "2"], 1, 0], [0, 0, -3]])
    assert DecompositionSystem.is_modular(InstanceSystem.linear_rank(free))


def test_linear_rank_prime_field():
    """Test that rank depends on the field"""
    family = VectorFamily(dim=2, columns=[[1, 1], [1, -1]])
    assert InstanceSystem.linear_rank(family).values == (0, 1, 1, 2)
    assert InstanceSystem.linear_rank(family, "gf:2").values == (0, 1, 1, 1)
    assert InstanceSystem.linear_rank(family, "gf:3").values == (0, 1, 1, 2)

    halves = VectorFamily(dim=1, columns=[[["1", "2"]]])
    with pytest.raises(InvalidInstanceError):
        InstanceSystem.linear_rank(halves, "gf:2")


def test_parse_field():
    """Test field names"""
    assert parse_field("q") is None
    assert parse_field("gf:7") == 7
    for bad in ("gf:4", "gf:", "r", "gf:2147483659"):
        with pytest.raises(InvalidFieldError):
            parse_field(bad)


def test_vector_family_validation():
    """Test columns must match the dimension and rationals must be well formed"""
    with pytest.raises(InvalidInstanceError):
        VectorFamily(dim=2, columns=[[1]])
    with pytest.raises(InvalidInstanceError):
        VectorFamily(dim=1, columns=[[[1, 0]]])


def test_random_linear_matroids_are_rigid():
    """Test seeded rational families give rigid matroid ranks"""
    rng = make_rng(41)
    for _ in range(100):
        n = int(rng.integers(1, 5))
        dim = int(rng.integers(1, 4))
        rank = InstanceSystem.linear_rank(random_vector_family(rng, n, dim))
        assert InstanceSystem.is_matroid_rank(rank)
        assert ClassificationSystem.is_rigid(rank)


def test_vector_union_is_product():
    """Test block-diagonal unions give ⋆₁-products of ranks"""
    v = VectorFamily(dim=2, columns=[[1, 0], [0, 1], [1, 1]])
    w = VectorFamily(dim=1, columns=[[2], [0]])
    assert InstanceSystem.linear_rank(InstanceSystem.vector_union(v, w)) == AlgebraSystem.star_product(
        InstanceSystem.linear_rank(v), InstanceSystem.linear_rank(w)
    )


def test_basis_of():
    """Test greedy bases"""
    triangle = BooleanFunction(n=3, values=TRIANGLE_RANK)
    assert InstanceSystem.basis_of(triangle, 0) == 0
    assert InstanceSystem.basis_of(triangle, 0b111) == 0b011
    assert InstanceSystem.basis_of(triangle, 0b110) == 0b110

    cardinality = BooleanFunction(n=3, values=tuple(m.bit_count() for m in range(8)))
    for sub in range(8):
        assert InstanceSystem.basis_of(cardinality, sub) == sub

    with pytest.raises(NotAMatroidError):
        InstanceSystem.basis_of(BooleanFunction(n=2, values=(0, 1, 1, 3)), 0b11)


def test_extend_basis():
    """Test extending a basis of Z to a basis of Y"""
    triangle = BooleanFunction(n=3, values=TRIANGLE_RANK)
    assert InstanceSystem.extend_basis(triangle, 0b001, 0b001, 0b111) == 0b010
    assert InstanceSystem.extend_basis(triangle, 0b111, 0b011, 0b111) == 0
    assert InstanceSystem.extend_basis(triangle, 0, 0, 0b111) == InstanceSystem.basis_of(triangle, 0b111)

    with pytest.raises(NotABasisError):
        InstanceSystem.extend_basis(triangle, 0b011, 0b001, 0b111)


def test_extension_avoids_sub():
    """Test every extension lies in Y∖Z and completes B_Z to a basis of Y"""
    ranks = [
        BooleanFunction(n=3, values=TRIANGLE_RANK),
        BooleanFunction(n=4, values=tuple(min(m.bit_count(), 2) for m in range(16))),
        InstanceSystem.graphic_rank(MultiGraph(vcount=3, ends=((1, 2), (1, 2), (2, 3), (1, 3)))),
    ]
    for rank in ranks:
        for target in range(1 << rank.n):
            for sub in range(1 << rank.n):
                if sub & ~target:
                    continue
                sub_basis = InstanceSystem.basis_of(rank, sub)
                extension = InstanceSystem.extend_basis(rank, sub, sub_basis, target)
                assert extension & ~(target & ~sub) == 0
                assert InstanceSystem.is_basis(rank, extension | sub_basis, target)


def test_bases_are_hereditarily_free():
    """Test that subsets of a free set are free"""
    rank = InstanceSystem.graphic_rank(create_triangle())
    for sub in range(8):
        basis = InstanceSystem.basis_of(rank, sub)
        assert InstanceSystem.is_basis(rank, basis, sub)
        for smaller in range(8):
            if smaller & ~basis == 0:
                assert rank(smaller) == smaller.bit_count()


def test_admissible_contraction():
    """Test contraction stays a matroid rank exactly when blocks have rank at most one"""
    parallel = MultiGraph(vcount=3, ends=((1, 2), (2, 1), (2, 3)))
    for g in (create_triangle(), parallel):
        rank = InstanceSystem.graphic_rank(g)
        for p in PartitionSystem.enumerate_partitions(3):
            admissible = InstanceSystem.admissible_contraction(rank, p)
            assert admissible == InstanceSystem.is_matroid_rank(PartitionSystem.contract(rank, p))
            assert admissible == InstanceSystem.parallel_classes(g, p)


def test_colinear_classes():
    """Test the linear counterpart of parallel classes"""
    family = VectorFamily(dim=2, columns=[[1, 2], [2, 4], [0, 1]])
    rank = InstanceSystem.linear_rank(family)
    p = SetPartition(n=3, rgs=(0, 0, 1))
    assert InstanceSystem.colinear_classes(family, p)
    assert InstanceSystem.admissible_contraction(rank, p)
    assert not InstanceSystem.colinear_classes(family, SetPartition(n=3, rgs=(0, 1, 0)))
