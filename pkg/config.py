"""
Boolean Function Bialgebra Configuration

Ground-set caps, sampling defaults, exit codes, and error message templates.
"""

from functools import lru_cache
from typing import Dict, Optional, Tuple

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict

# Checked 64-bit range for function values
INT64_MIN = -(2**63)
INT64_MAX = 2**63 - 1

# Largest ground set accepted per kind of operation
GROUND_SET_CAPS: Dict[str, int] = {
    "arithmetic": 16,
    "canonical": 8,
    "partitions": 10,
    "bool_max": 5,
}

# phi_count enumerates colors**n maps; n * log2(colors) must stay below this
PHI_COUNT_MAX_BITS = 24

# Random sampling for verify-axioms
SAMPLE_VALUE_RANGE: Tuple[int, int] = (-2, 2)
PRNG_ALGORITHM = "PCG64"
DEFAULT_SEED = 0

# Largest f*g ground set built for the product-splitting axiom
PRODUCT_CHECK_MAX_N = 6

# Primes accepted by the GF(p) rank mode
GF_PRIME_LIMIT = 2**31

# CLI exit codes
EXIT_OK = 0
EXIT_INVALID = 1
EXIT_VERIFICATION_FAILED = 2

# Error messages
ERRORS: Dict[str, str] = {
    "WrongLength": "Value table has {length} entries; a ground set of size {n} needs {expected}.",
    "NonzeroEmptySet": "f(∅) must be 0, got {value}.",
    "SubsetOutOfRange": "Subset mask {mask} is not contained in the ground set of size {n}.",
    "Overflow": "Value {value} does not fit in 64 signed bits.",
    "EqualParameters": "f_lambda needs q1 != q2, got q1 = q2 = {q}.",
    "GroundSetTooLarge": "Ground set of size {n} exceeds the {kind} cap of {cap}.",
    "MismatchedGroundSets": "Ground sets differ: {left} vs {right}.",
    "NotARefinement": "Partition {fine} does not refine {coarse}.",
    "InvalidPartition": "{rgs} is not a restricted-growth string of length {n}.",
    "EmptyGroundSet": "{operation} needs a nonempty ground set.",
    "EmptyVertexSet": "{operation} needs at least one vertex.",
    "InvalidInstance": "Invalid {kind}: {reason}.",
    "InvalidField": "Unsupported field '{field}': use 'q' or 'gf:<prime below 2^31>'.",
    "NotAMatroid": "The boolean function is not a matroid rank function.",
    "NotABasis": "Subset {basis} is not a basis of {subset}.",
    "EnumerationTooLarge": "{colors}^{n} colorings exceed the enumeration limit of 2^{bits}.",
    "NotInBoolMax": "The boolean function is outside Bool_max; pass unchecked mode to compute anyway.",
    "InvalidInput": "{reason}",
}


class Settings(BaseSettings):
    """Environment overrides (BOOLFUN_MAX_N, BOOLFUN_DEBUG)"""

    model_config = SettingsConfigDict(env_prefix="BOOLFUN_")

    max_n: Optional[int] = Field(default=None, ge=0, description="Lowers every ground-set cap")
    debug: bool = Field(default=False, description="Progress lines on stderr")


@lru_cache
def get_settings() -> Settings:
    """Load settings once per process"""
    return Settings()


def ground_set_cap(kind: str) -> int:
    """Effective cap for a kind of operation; the environment only lowers it"""
    cap = GROUND_SET_CAPS[kind]
    override = get_settings().max_n
    if override is None:
        return cap
    return min(cap, override)
