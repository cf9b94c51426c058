"""
JSON ingestion and emission shared by the CLI and the MCP server.
"""

from typing import Any, Dict, List, Sequence

from pydantic import BaseModel, ValidationError

from models.boolfun import BooleanFunction
from models.decomposition import Decomposition
from models.errors import InvalidInputError, MismatchedGroundSetsError, SubsetOutOfRangeError
from models.instances import Hypergraph, MultiGraph, VectorFamily
from models.partition import SetPartition
from models.reports import AxiomCheck
from systems.algebra import AlgebraSystem
from systems.masks import elements, from_elements


def _validated(model: type, data: Any) -> Any:
    if isinstance(data, model):
        return data
    if not isinstance(data, dict):
        raise InvalidInputError(reason=f"Expected a JSON object for {model.__name__}, got {type(data).__name__}")
    try:
        return model(**data)
    except ValidationError as e:
        raise InvalidInputError(reason=f"Invalid {model.__name__}: {e.errors()[0]['msg']}")


def parse_function(data: Any) -> BooleanFunction:
    """
    A boolean function from {"n", "values"} or from a bare value table.

    Examples:
        parse_function({"n": 1, "values": [0, 2]})
        parse_function([0, 1, 1, 3])
    """
    if isinstance(data, list):
        data = {"n": max(len(data), 1).bit_length() - 1, "values": data}
    return _validated(BooleanFunction, data)


def parse_sample(data: Any) -> List[BooleanFunction]:
    """A list of functions, optionally wrapped as {"functions": [...]}"""
    if isinstance(data, dict):
        data = data.get("functions")
    if not isinstance(data, list):
        raise InvalidInputError(reason="A sample is a JSON list of boolean functions")
    return [parse_function(item) for item in data]


def parse_subset(data: Any, n: int) -> int:
    """Subset mask from a list of 1-based elements or a comma-separated string"""
    if isinstance(data, str):
        items = [part.strip() for part in data.split(",") if part.strip()]
        try:
            data = [int(item) for item in items]
        except ValueError:
            raise InvalidInputError(reason=f"Bad subset '{data}'")
    if not isinstance(data, list) or not all(isinstance(item, int) for item in data):
        raise InvalidInputError(reason="A subset is a list of elements")
    if any(item < 1 for item in data):
        raise InvalidInputError(reason="Subset elements are numbered from 1")
    mask = from_elements(data)
    if mask >> n:
        raise SubsetOutOfRangeError(mask=mask, n=n)
    return mask


def parse_partition(data: Any, n: int) -> SetPartition:
    """Partition from {"n", "rgs"} or a bare restricted-growth string"""
    if isinstance(data, list):
        data = {"n": len(data), "rgs": data}
    partition = _validated(SetPartition, data)
    if partition.n != n:
        raise MismatchedGroundSetsError(left=n, right=partition.n)
    return partition


def parse_instance(kind: str, data: Any) -> BaseModel:
    models = {"hypergraph": Hypergraph, "multigraph": MultiGraph, "vectors": VectorFamily}
    if kind not in models:
        raise InvalidInputError(reason=f"Unknown instance kind '{kind}'")
    return _validated(models[kind], data)


def subset_json(mask: int) -> List[int]:
    return elements(mask)


def partitions_json(partitions: Sequence[SetPartition]) -> List[Dict[str, Any]]:
    """Partitions as {"n", "rgs"} objects, readable back by parse_partition"""
    return [{"n": p.n, "rgs": list(p.rgs)} for p in partitions]


def decomposition_json(f: BooleanFunction, decomposition: Decomposition) -> Dict[str, Any]:
    """Blocks as element lists, with the restriction of f to each"""
    return {
        "q": decomposition.q.model_dump(),
        "blocks": [subset_json(block) for block in decomposition.blocks],
        "factors": [AlgebraSystem.restrict(f, block).model_dump() for block in decomposition.blocks],
    }


def report_json(header: Dict[str, Any], checks: Sequence[AxiomCheck]) -> Dict[str, Any]:
    return {"header": header, "report": [check.model_dump(by_alias=True) for check in checks]}
