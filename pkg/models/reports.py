"""
Structured results: classification records, axiom-suite entries, the
Φ-compatibility report, and catalog entries.
"""

from typing import Any, Dict, Literal, Optional

from pydantic import BaseModel, ConfigDict, Field

from .boolfun import BooleanFunction
from .polynomial import BivariatePolynomial

Family = Literal["W", "S"]


class Classification(BaseModel):
    """Membership of a boolean function in the named subspecies"""
    modular: bool
    indecomposable: Optional[bool] = Field(default=None, description="None on the empty ground set")
    rigid: bool
    hyper_rigid: bool
    counitary: Optional[bool] = Field(default=None, description="None beyond the partition cap")
    in_bool_max: Optional[bool] = Field(default=None, description="None beyond the Bool_max cap")
    is_matroid_rank: bool


class AxiomCheck(BaseModel):
    """One axiom evaluated on one sample element"""
    input: int = Field(description="Index of the sample element")
    axiom: str
    family: Family
    passed: bool = Field(alias="pass")
    expected: bool = Field(description="Whether the family is known to satisfy the axiom")
    witness: Optional[Dict[str, Any]] = None

    model_config = ConfigDict(populate_by_name=True)

    @property
    def violation(self) -> bool:
        """An axiom the family is known to satisfy failed"""
        return self.expected and not self.passed


class CompatReport(BaseModel):
    """Φ against the two δ coproducts and the polynomial coproduct"""
    phi_tensor_weak: BivariatePolynomial
    phi_tensor_strong: BivariatePolynomial
    delta_of_phi: BivariatePolynomial
    weak_equals_strong: bool
    weak_equals_delta: bool
    strong_equals_delta: bool
    counitary: bool
    consistent: bool = Field(description="weak_equals_delta holds exactly when the function is counitary")


class CatalogEntry(BaseModel):
    """A named worked example with its expected classification"""
    name: str
    description: str
    function: BooleanFunction
    expected: Dict[str, Optional[bool]] = Field(default_factory=dict)
