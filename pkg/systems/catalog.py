"""
Named worked examples with their expected classification, loaded from
data/catalog.json.
"""

import json
from functools import lru_cache
from pathlib import Path
from typing import Dict, List, Optional, Tuple

from models.errors import InvalidInputError
from models.reports import CatalogEntry
from systems.classification import ClassificationSystem


@lru_cache
def load_catalog() -> Tuple[CatalogEntry, ...]:
    """Read every entry of the bundled catalog"""
    data_dir = Path(__file__).parent.parent / "data"
    with open(data_dir / "catalog.json", "r", encoding="utf-8") as f:
        data = json.load(f)
    return tuple(CatalogEntry(**entry) for entry in data["entries"])


def catalog_names() -> List[str]:
    return [entry.name for entry in load_catalog()]


def get_entry(name: str) -> CatalogEntry:
    for entry in load_catalog():
        if entry.name == name:
            return entry
    raise InvalidInputError(reason=f"No catalog entry named '{name}'; known: {', '.join(catalog_names())}")


def check_entry(entry: CatalogEntry) -> Dict[str, Dict[str, Optional[bool]]]:
    """
    Recompute the classification and compare it with the stored flags.

    Returns:
        Mapping of mismatched flag -> {"expected", "actual"}; empty when all agree
    """
    actual = ClassificationSystem.classify(entry.function).model_dump()
    return {
        flag: {"expected": expected, "actual": actual.get(flag)}
        for flag, expected in entry.expected.items()
        if actual.get(flag) != expected
    }
