"""
Boolean functions from hypergraphs, multigraphs, and vector families,
the matroid rank axioms, and greedy bases.
"""

from typing import List

import networkx as nx
import numpy as np

from models.boolfun import BooleanFunction
from models.errors import EmptyVertexSetError, NotABasisError, NotAMatroidError, SubsetOutOfRangeError
from models.instances import Hypergraph, MultiGraph, VectorFamily
from models.partition import SetPartition
from systems.algebra import AlgebraSystem
from systems.linear import matrix_rank, parse_field
from systems.masks import embed_table, popcount, positions


def _check_subset(f: BooleanFunction, mask: int) -> None:
    if mask < 0 or mask & ~f.full:
        raise SubsetOutOfRangeError(mask=mask, n=f.n)


def _greedy_extend(f: BooleanFunction, start: int, candidates: int) -> int:
    """Add candidates in increasing index while each one raises the rank by 1"""
    basis = start
    for p in positions(candidates):
        bit = 1 << p
        if f.values[basis | bit] == f.values[basis] + 1:
            basis |= bit
    return basis


class InstanceSystem:
    """Constructors and matroid utilities"""

    @staticmethod
    def iota(h: Hypergraph) -> BooleanFunction:
        """Indicator of the hyperedges"""
        values = [0] * (1 << h.n)
        for mask in h.edge_masks:
            values[mask] = 1
        return BooleanFunction(n=h.n, values=tuple(values))

    @staticmethod
    def gamma(h: Hypergraph) -> BooleanFunction:
        """γ(H)(A) = number of hyperedges contained in A"""
        return AlgebraSystem.theta(InstanceSystem.iota(h), 1)

    @staticmethod
    def is_connected(h: Hypergraph) -> bool:
        """No bipartition of the vertices leaves every hyperedge on one side"""
        if h.n == 0:
            raise EmptyVertexSetError(operation="is_connected")
        graph = nx.Graph()
        graph.add_nodes_from(range(1, h.n + 1))
        for edge in h.edges:
            nx.add_path(graph, edge)
        return nx.is_connected(graph)

    @staticmethod
    def restrict_hypergraph(h: Hypergraph, sub: int) -> Hypergraph:
        """H|Y: hyperedges inside Y, vertices re-indexed in order"""
        image = embed_table(sub)
        local = {mask: index for index, mask in enumerate(image)}
        kept = [local[mask] for mask in h.edge_masks if mask & ~sub == 0]
        return Hypergraph.from_masks(popcount(sub), kept)

    @staticmethod
    def disjoint_union(g: Hypergraph, h: Hypergraph) -> Hypergraph:
        """GH on vertices 1..n_g followed by n_g+1..n_g+n_h"""
        shifted = [tuple(v + g.n for v in edge) for edge in h.edges]
        return Hypergraph(n=g.n + h.n, edges=g.edges + tuple(shifted))

    @staticmethod
    def is_matroid_rank(f: BooleanFunction) -> bool:
        """Bounded by cardinality, increasing, and submodular"""
        for mask, value in enumerate(f.values):
            if value < 0 or value > popcount(mask):
                return False
            for p in positions(mask):
                if f.values[mask ^ (1 << p)] > value:
                    return False
        values = np.asarray(f.values, dtype=np.int64)
        others = np.arange(len(values))
        for mask in range(len(values)):
            if np.any(values[mask | others] + values[mask & others] > values[mask] + values):
                return False
        return True

    @staticmethod
    def graphic_rank(g: MultiGraph) -> BooleanFunction:
        """rk(Y) = |V(G|Y)| - cc(G|Y), G|Y holding the edges of Y and their endpoints"""
        values = []
        for mask in range(1 << g.n):
            graph = nx.MultiGraph()
            graph.add_edges_from(g.ends[p] for p in positions(mask))
            values.append(graph.number_of_nodes() - nx.number_connected_components(graph))
        return BooleanFunction(n=g.n, values=tuple(values))

    @staticmethod
    def is_forest(g: MultiGraph) -> bool:
        """Cycle-free, parallel edges counting as a cycle"""
        if g.vcount == 0:
            return True
        graph = nx.MultiGraph()
        graph.add_nodes_from(range(1, g.vcount + 1))
        graph.add_edges_from(g.ends)
        return nx.is_forest(graph)

    @staticmethod
    def multigraph_union(g: MultiGraph, h: MultiGraph) -> MultiGraph:
        shifted = tuple((u + g.vcount, v + g.vcount) for u, v in h.ends)
        return MultiGraph(vcount=g.vcount + h.vcount, ends=g.ends + shifted)

    @staticmethod
    def linear_rank(v: VectorFamily, field: str = "q") -> BooleanFunction:
        """rk(Y) = rank of the columns indexed by Y over the chosen field"""
        prime = parse_field(field)
        values = [matrix_rank([v.columns[p] for p in positions(mask)], prime) for mask in range(1 << v.n)]
        return BooleanFunction(n=v.n, values=tuple(values))

    @staticmethod
    def vector_union(v: VectorFamily, w: VectorFamily) -> VectorFamily:
        """Block-diagonal family: v padded below, w padded above"""
        left = [tuple(column) + (0,) * w.dim for column in v.columns]
        right = [(0,) * v.dim + tuple(column) for column in w.columns]
        return VectorFamily(dim=v.dim + w.dim, columns=tuple(left + right))

    @staticmethod
    def basis_of(f: BooleanFunction, sub: int) -> int:
        """Greedy basis of sub, smallest element first"""
        if not InstanceSystem.is_matroid_rank(f):
            raise NotAMatroidError()
        _check_subset(f, sub)
        return _greedy_extend(f, 0, sub)

    @staticmethod
    def extend_basis(f: BooleanFunction, sub: int, sub_basis: int, target: int) -> int:
        """
        B_Y ⊆ Y∖Z such that B_Z ⊔ B_Y is a basis of Y.

        Args:
            sub: Z, contained in target
            sub_basis: B_Z, a basis of Z
            target: Y
        """
        if not InstanceSystem.is_matroid_rank(f):
            raise NotAMatroidError()
        for mask in (sub, sub_basis, target):
            _check_subset(f, mask)
        if sub & ~target:
            raise SubsetOutOfRangeError(mask=sub, n=f.n)
        if not InstanceSystem.is_basis(f, sub_basis, sub):
            raise NotABasisError(basis=sub_basis, subset=sub)
        return _greedy_extend(f, sub_basis, target & ~sub) & ~sub_basis

    @staticmethod
    def is_basis(f: BooleanFunction, basis: int, sub: int) -> bool:
        """B ⊆ Y with f(B) = |B| = f(Y)"""
        return basis & ~sub == 0 and f.values[basis] == popcount(basis) == f.values[sub]

    @staticmethod
    def admissible_contraction(f: BooleanFunction, p: SetPartition) -> bool:
        """f/∼ stays a matroid rank exactly when every block has rank at most 1"""
        return all(f.values[block] <= 1 for block in p.blocks())

    @staticmethod
    def parallel_classes(g: MultiGraph, p: SetPartition) -> bool:
        """Every block consists of edges sharing the same pair of endpoints"""
        for block in p.blocks():
            ends = {frozenset(g.ends[i]) for i in positions(block)}
            if len(ends) > 1:
                return False
        return True

    @staticmethod
    def colinear_classes(v: VectorFamily, p: SetPartition, field: str = "q") -> bool:
        """Every block consists of pairwise colinear vectors"""
        prime = parse_field(field)
        for block in p.blocks():
            members: List = [v.columns[i] for i in positions(block)]
            for i in range(len(members)):
                for j in range(i + 1, len(members)):
                    if matrix_rank([members[i], members[j]], prime) > 1:
                        return False
        return True
