"""
Test MCP server tools.
"""

from fastmcp import Client

import server


def get_function(tool):
    """Extract the actual function from a FastMCP tool"""
    if hasattr(tool, "fn"):
        return tool.fn
    elif callable(tool):
        return tool
    else:
        raise ValueError(f"Cannot extract function from {tool}")


classify = get_function(server.classify)
star_product = get_function(server.star_product)
decompose = get_function(server.decompose)
equivalences = get_function(server.equivalences)
coproduct = get_function(server.coproduct)
phi = get_function(server.phi)
antipode = get_function(server.antipode)
from_instance = get_function(server.from_instance)
matroid_basis = get_function(server.matroid_basis)
verify_axioms = get_function(server.verify_axioms)
compat_report = get_function(server.compat_report)
catalog_entry = get_function(server.catalog_entry)

WEAK_NOT_STRONG = {"n": 3, "values": [0, 1, 1, 3, 2, 5, 5, 5]}


def test_classify_tool():
    """Test the classification record"""
    result = classify({"n": 3, "values": [0, 1, 1, 2, 1, 2, 2, 2]})
    assert result["is_matroid_rank"] is True
    assert result["hyper_rigid"] is False


def test_errors_become_dicts():
    """Test kernel errors are returned, not raised"""
    result = classify({"n": 1, "values": [3, 0]})
    assert result["error"] == "NonzeroEmptySet"
    assert "detail" in result


def test_star_product_tool():
    """Test the parameterized product"""
    assert star_product({"n": 1, "values": [0, 1]}, {"n": 1, "values": [0, 0]}, q1=2)["values"] == (0, 1, 0, 2)


def test_decompose_tool():
    """Test blocks and factors"""
    result = decompose({"n": 2, "values": [0, 1, 2, 3]})
    assert result["blocks"] == [[1], [2]]


def test_equivalences_and_coproduct_tools():
    """Test the W and S families"""
    partitions = equivalences(WEAK_NOT_STRONG, "S")["partitions"]
    assert partitions == [{"n": 3, "rgs": rgs} for rgs in ([0, 0, 0], [0, 1, 0], [0, 1, 1], [0, 1, 2])]
    terms = coproduct(WEAK_NOT_STRONG, "W")["terms"]
    assert sum(term["coefficient"] for term in terms) == 5


def test_phi_and_antipode_tools():
    """Test Φ and the checked antipode"""
    assert phi({"n": 3, "values": [0, 1, 1, 2, 1, 2, 2, 0]})["coeffs"] == ["0", "-1", "0", "1"]
    assert antipode(WEAK_NOT_STRONG)["error"] == "NotInBoolMax"
    assert "terms" in antipode(WEAK_NOT_STRONG, unchecked=True)


def test_from_instance_tool():
    """Test the three instance kinds"""
    triangle = (0, 1, 1, 2, 1, 2, 2, 2)
    assert from_instance("multigraph", {"vcount": 3, "ends": [[1, 2], [2, 3], [1, 3]]})["values"] == triangle
    assert from_instance("vectors", {"dim": 2, "columns": [[1, 0], [0, 1], [1, 1]]})["values"] == triangle
    assert from_instance("hypergraph", {"n": 2, "edges": [[1, 2]]}, mapping="iota")["values"] == (0, 0, 0, 1)
    assert from_instance("vectors", {"dim": 1, "columns": [[1]]}, field="gf:4")["error"] == "InvalidField"


def test_matroid_basis_tool():
    """Test greedy bases and extensions"""
    triangle = {"n": 3, "values": [0, 1, 1, 2, 1, 2, 2, 2]}
    assert matroid_basis(triangle, [1, 2, 3]) == {"basis": [1, 2]}
    assert matroid_basis(triangle, [1, 2, 3], from_subset=[1], from_basis=[1]) == {"extension": [2], "basis": [1, 2]}


def test_verify_axioms_tool():
    """Test a seeded run and a given sample"""
    result = verify_axioms("S", count=4, max_n=2, seed=3)
    assert result["header"]["prng"] == "PCG64"
    assert result["violations"] == 0
    given = verify_axioms("W", sample=[WEAK_NOT_STRONG])
    assert given["header"]["count"] == 1
    assert len(given["report"]) == 10


def test_compat_report_tool():
    """Test the report flags"""
    result = compat_report(WEAK_NOT_STRONG)
    assert result["consistent"] is True
    assert result["weak_equals_delta"] is False


def test_catalog_entry_tool():
    """Test listing and fetching entries"""
    assert "weak-not-strong" in catalog_entry()["entries"]
    entry = catalog_entry("weak-not-strong")
    assert entry["mismatches"] == {}
    assert catalog_entry("missing")["error"] == "InvalidInput"


async def test_tools_are_registered():
    """Test the server advertises its tools"""
    async with Client(server.mcp) as client:
        tools = await client.list_tools()
    names = {tool.name for tool in tools}
    assert {"classify", "decompose", "verify_axioms", "compat_report", "catalog_entry"} <= names
