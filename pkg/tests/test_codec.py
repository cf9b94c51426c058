"""
Test JSON ingestion and emission.
"""

import pytest

from models.boolfun import BooleanFunction, QPair
from models.errors import (
    InvalidInputError,
    InvalidInstanceError,
    MismatchedGroundSetsError,
    NonzeroEmptySetError,
    SubsetOutOfRangeError,
)
from models.instances import Hypergraph, VectorFamily
from models.partition import SetPartition
from systems.algebra import AlgebraSystem
from systems.codec import (
    decomposition_json,
    parse_function,
    parse_instance,
    parse_partition,
    parse_sample,
    parse_subset,
    partitions_json,
)
from systems.decomposition import DecompositionSystem


def test_parse_function():
    """Test objects and bare value tables"""
    assert parse_function({"n": 1, "values": [0, 2]}) == BooleanFunction(n=1, values=(0, 2))
    assert parse_function([0, 1, 1, 3]).n == 2
    assert parse_function([0]) == BooleanFunction.unit()

    with pytest.raises(NonzeroEmptySetError):
        parse_function([1, 2])
    with pytest.raises(InvalidInputError):
        parse_function({"n": 1, "values": [0, "x"]})
    with pytest.raises(InvalidInputError):
        parse_function("0,1")


def test_parse_sample():
    """Test bare and wrapped samples"""
    assert len(parse_sample([[0, 1], {"n": 1, "values": [0, 2]}])) == 2
    assert len(parse_sample({"functions": [[0, 1]]})) == 1
    with pytest.raises(InvalidInputError):
        parse_sample({"items": []})


def test_parse_subset():
    """Test element lists and comma-separated strings"""
    assert parse_subset([1, 3], 3) == 0b101
    assert parse_subset("2, 3", 3) == 0b110
    assert parse_subset([], 2) == 0
    with pytest.raises(SubsetOutOfRangeError):
        parse_subset([4], 3)
    with pytest.raises(InvalidInputError):
        parse_subset([0], 3)
    with pytest.raises(InvalidInputError):
        parse_subset("a,b", 3)


def test_parse_partition():
    """Test partitions from objects and bare strings"""
    assert parse_partition([0, 1, 0], 3).blocks() == [0b101, 0b010]
    assert parse_partition({"n": 2, "rgs": [0, 0]}, 2).cl == 1
    with pytest.raises(MismatchedGroundSetsError):
        parse_partition([0, 1], 3)


def test_parse_instance():
    """Test the three instance kinds"""
    assert isinstance(parse_instance("hypergraph", {"n": 2, "edges": [[1, 2]]}), Hypergraph)
    vectors = parse_instance("vectors", {"dim": 1, "columns": [[["3", "4"]]]})
    assert isinstance(vectors, VectorFamily)
    assert vectors.model_dump()["columns"] == [[["3", "4"]]]
    with pytest.raises(InvalidInstanceError):
        parse_instance("multigraph", {"vcount": 1, "ends": [[1, 1]]})
    with pytest.raises(InvalidInputError):
        parse_instance("matrix", {})


def test_decomposition_json():
    """Test blocks and factors in product order"""
    f = AlgebraSystem.star_product(BooleanFunction(n=1, values=(0, 5)), BooleanFunction(n=2, values=(0, 1, 1, 3)))
    payload = decomposition_json(f, DecompositionSystem.decompose(f))
    assert payload["q"] == QPair.one().model_dump()
    assert payload["blocks"] == [[1], [2, 3]]
    assert payload["factors"] == [{"n": 1, "values": (0, 5)}, {"n": 2, "values": (0, 1, 1, 3)}]


def test_partitions_json_reads_back():
    """Test emitted partitions are {"n", "rgs"} objects parse_partition accepts"""
    partitions = [SetPartition.discrete(3), SetPartition(n=3, rgs=(0, 1, 0))]
    payload = partitions_json(partitions)
    assert payload == [{"n": 3, "rgs": [0, 1, 2]}, {"n": 3, "rgs": [0, 1, 0]}]
    assert [parse_partition(item, 3) for item in payload] == partitions
