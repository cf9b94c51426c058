"""
Boolean Function Bialgebra
FastMCP Server Implementation

Exposes the kernel on boolean functions (products, decompositions,
coproducts, classification, invariants, and the axiom suite) as MCP tools.
"""

import sys
from typing import Any, Callable, Dict, List, Literal, Optional

# Debug logging to stderr
print("boolfun-bialgebra: Starting server initialization...", file=sys.stderr)

from fastmcp import FastMCP

print("boolfun-bialgebra: FastMCP imported successfully", file=sys.stderr)

# Import models
from models.boolfun import QPair
from models.errors import BoolFunError

# Import systems
from systems.algebra import AlgebraSystem
from systems.axioms import AxiomSystem
from systems.catalog import check_entry, get_entry, load_catalog
from systems.classification import ClassificationSystem
from systems.coalgebra import CoalgebraSystem
from systems.codec import (
    decomposition_json,
    parse_function,
    parse_instance,
    parse_sample,
    parse_subset,
    partitions_json,
    report_json,
    subset_json,
)
from systems.decomposition import DecompositionSystem
from systems.instances import InstanceSystem
from systems.invariants import InvariantSystem
from systems.sampling import random_sample

# Import config
from config import DEFAULT_SEED, PRNG_ALGORITHM

print("boolfun-bialgebra: All imports successful", file=sys.stderr)

# Initialize FastMCP server
mcp = FastMCP("boolfun-bialgebra")

print("boolfun-bialgebra: FastMCP server created", file=sys.stderr)


def _respond(compute: Callable[[], Dict[str, Any]]) -> Dict[str, Any]:
    """Run a tool body, turning kernel errors into {"error", "detail"}"""
    try:
        return compute()
    except BoolFunError as e:
        return e.to_dict()


@mcp.tool()
def classify(function: dict) -> dict:
    """
    Classify a boolean function.

    Args:
        function: {"n": size, "values": table indexed by subset bitmask}

    Returns:
        modular, indecomposable, rigid, hyper_rigid, counitary, in_bool_max,
        is_matroid_rank; flags beyond their size cap are null
    """
    return _respond(lambda: ClassificationSystem.classify(parse_function(function)).model_dump())


@mcp.tool()
def star_product(left: dict, right: dict, q1: int = 1, q2: int = 1) -> dict:
    """
    The (q1, q2) product of two boolean functions; left takes the low elements.
    """
    q = QPair(q1=q1, q2=q2)
    return _respond(lambda: AlgebraSystem.star_product(parse_function(left), parse_function(right), q).model_dump())


@mcp.tool()
def theta(function: dict, q: int) -> dict:
    """θ_q(f)(A) = Σ_{B⊆A} q^{|A|-|B|} f(B)"""
    return _respond(lambda: AlgebraSystem.theta(parse_function(function), q).model_dump())


@mcp.tool()
def decompose(function: dict, q1: int = 1, q2: int = 1) -> dict:
    """
    Split a boolean function into indecomposable factors.

    Returns:
        Blocks (element lists, in product order) and the factor on each block
    """

    def compute() -> Dict[str, Any]:
        f = parse_function(function)
        decomposition = DecompositionSystem.decompose(f, QPair(q1=q1, q2=q2))
        return decomposition_json(f, decomposition)

    return _respond(compute)


@mcp.tool()
def equivalences(function: dict, family: Literal["W", "S"] = "W") -> dict:
    """
    The weak (W) or strong (S) equivalences of a boolean function.

    Returns:
        Partitions as restricted-growth strings, in lexicographic order
    """

    def compute() -> Dict[str, Any]:
        f = parse_function(function)
        return {"family": family, "partitions": partitions_json(CoalgebraSystem.equivalences(f, family))}

    return _respond(compute)


@mcp.tool()
def coproduct(function: dict, family: Literal["W", "S", "D"] = "W") -> dict:
    """
    δ^W, δ^S, or the restriction coproduct Δ (family "D") of the isoclass.

    Returns:
        Terms {left, right, coefficient} over canonical forms
    """

    def compute() -> Dict[str, Any]:
        f = parse_function(function)
        if family == "D":
            return CoalgebraSystem.coproduct_delta(f).model_dump()
        return CoalgebraSystem.coproduct_family(f, family).model_dump()

    return _respond(compute)


@mcp.tool()
def phi(function: dict) -> dict:
    """The polynomial invariant Φ, coefficients ascending as decimal strings"""
    return _respond(lambda: InvariantSystem.phi(parse_function(function)).model_dump())


@mcp.tool()
def phi_count(function: dict, colors: int) -> dict:
    """Brute-force count of colorings whose fibers carry modular restrictions"""
    return _respond(lambda: {"count": InvariantSystem.phi_count(parse_function(function), colors)})


@mcp.tool()
def antipode(function: dict, unchecked: bool = False) -> dict:
    """
    The antipode S(f̄) = Σ_{∼∈E^W(f)} μ(f/∼) (f|∼)‾.

    Args:
        function: the boolean function
        unchecked: skip the Bool_max membership test
    """
    return _respond(lambda: InvariantSystem.antipode(parse_function(function), checked=not unchecked).model_dump())


@mcp.tool()
def chromatic_polynomial(hypergraph: dict) -> dict:
    """Chromatic polynomial of a hypergraph {"n", "edges"}"""
    return _respond(lambda: InvariantSystem.chromatic_polynomial(parse_instance("hypergraph", hypergraph)).model_dump())


@mcp.tool()
def from_instance(
    kind: Literal["hypergraph", "multigraph", "vectors"],
    instance: dict,
    mapping: Literal["iota", "gamma"] = "gamma",
    field: str = "q",
) -> dict:
    """
    Build a boolean function from a combinatorial instance.

    Args:
        kind: hypergraph {"n", "edges"}, multigraph {"vcount", "ends"}, or
            vectors {"dim", "columns"}
        mapping: iota or gamma, for hypergraphs
        field: "q" or "gf:<prime>", for vectors
    """

    def compute() -> Dict[str, Any]:
        parsed = parse_instance(kind, instance)
        if kind == "hypergraph":
            build = InstanceSystem.iota if mapping == "iota" else InstanceSystem.gamma
            return build(parsed).model_dump()
        if kind == "multigraph":
            return InstanceSystem.graphic_rank(parsed).model_dump()
        return InstanceSystem.linear_rank(parsed, field).model_dump()

    return _respond(compute)


@mcp.tool()
def matroid_basis(
    function: dict,
    subset: List[int],
    from_subset: Optional[List[int]] = None,
    from_basis: Optional[List[int]] = None,
) -> dict:
    """
    Greedy basis of a subset under a matroid rank function, or the extension
    of a basis of from_subset to a basis of subset.
    """

    def compute() -> Dict[str, Any]:
        f = parse_function(function)
        target = parse_subset(subset, f.n)
        if from_subset is None:
            return {"basis": subset_json(InstanceSystem.basis_of(f, target))}
        sub = parse_subset(from_subset, f.n)
        sub_basis = parse_subset(from_basis or [], f.n)
        extension = InstanceSystem.extend_basis(f, sub, sub_basis, target)
        return {"extension": subset_json(extension), "basis": subset_json(extension | sub_basis)}

    return _respond(compute)


@mcp.tool()
def verify_axioms(
    family: Literal["W", "S"],
    sample: Optional[list] = None,
    count: int = 20,
    max_n: int = 3,
    seed: int = DEFAULT_SEED,
) -> dict:
    """
    Run the axiom suite on a sample, given or drawn from a seeded PCG64.

    Returns:
        header, report entries in input order, and the number of violations
        of axioms the family is known to satisfy
    """

    def compute() -> Dict[str, Any]:
        if sample is not None:
            functions = parse_sample(sample)
            header = {"prng": None, "seed": None, "family": family, "count": len(functions), "max_n": None}
        else:
            functions = random_sample(count, max_n, seed)
            header = {"prng": PRNG_ALGORITHM, "seed": seed, "family": family, "count": count, "max_n": max_n}
        checks = AxiomSystem.verify_axioms(functions, family)
        payload = report_json(header, checks)
        payload["violations"] = sum(1 for check in checks if check.violation)
        return payload

    return _respond(compute)


@mcp.tool()
def compat_report(function: dict) -> dict:
    """(Φ⊗Φ)∘δ^W, (Φ⊗Φ)∘δ^S and δ∘Φ as polynomials in T and T′, with their agreements"""
    return _respond(lambda: InvariantSystem.phi_compat_report(parse_function(function)).model_dump())


@mcp.tool()
def catalog_entry(name: Optional[str] = None) -> dict:
    """
    Worked examples with expected classifications.

    Args:
        name: one entry to fetch and re-check; omit to list every name
    """

    def compute() -> Dict[str, Any]:
        if name is None:
            return {"entries": [entry.name for entry in load_catalog()]}
        entry = get_entry(name)
        return {**entry.model_dump(), "mismatches": check_entry(entry)}

    return _respond(compute)


if __name__ == "__main__":
    # Run the MCP server
    print("boolfun-bialgebra: Starting mcp.run()...", file=sys.stderr)
    try:
        mcp.run()
    except Exception as e:
        print(f"boolfun-bialgebra: Error in mcp.run(): {e}", file=sys.stderr)
        import traceback
        traceback.print_exc(file=sys.stderr)
        raise
