"""
Boolean Function Bialgebra
Command-Line Front End

Every subcommand reads JSON (a file path, inline JSON, or - for stdin) and
writes JSON to stdout. Errors go to stderr as {"error", "detail"}.

Exit codes: 0 on success, 1 on invalid input, 2 on a failed verification.
"""

import argparse
import json
import sys
from pathlib import Path
from typing import Any, Callable, Optional, Sequence, Tuple

from config import (
    DEFAULT_SEED,
    EXIT_INVALID,
    EXIT_OK,
    EXIT_VERIFICATION_FAILED,
    PRNG_ALGORITHM,
    get_settings,
)
from models.boolfun import QPair
from models.errors import BoolFunError, InvalidInputError
from systems.algebra import AlgebraSystem
from systems.axioms import AxiomSystem
from systems.catalog import check_entry, get_entry, load_catalog
from systems.classification import ClassificationSystem
from systems.coalgebra import CoalgebraSystem
from systems.codec import (
    decomposition_json,
    parse_function,
    parse_instance,
    parse_partition,
    parse_sample,
    parse_subset,
    partitions_json,
    report_json,
    subset_json,
)
from systems.decomposition import DecompositionSystem
from systems.instances import InstanceSystem
from systems.invariants import InvariantSystem
from systems.partitions import PartitionSystem
from systems.sampling import random_sample


Outcome = Tuple[int, Any]


def log(message: str, verbose: bool) -> None:
    """Progress line on stderr when --verbose or BOOLFUN_DEBUG is set"""
    if verbose or get_settings().debug:
        print(f"boolfun-bialgebra: {message}", file=sys.stderr)


def read_json(source: str) -> Any:
    """Load JSON from a path, inline text starting with { or [, or - for stdin"""
    if source == "-":
        text = sys.stdin.read()
    elif source.lstrip().startswith(("{", "[")):
        text = source
    else:
        try:
            text = Path(source).read_text(encoding="utf-8")
        except OSError as e:
            raise InvalidInputError(reason=f"Cannot read {source}: {e.strerror}")
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise InvalidInputError(reason=f"Malformed JSON: {e.msg}")


def _function(args: argparse.Namespace, attribute: str = "input"):
    return parse_function(read_json(getattr(args, attribute)))


def _subset_argument(text: str, n: int) -> int:
    """--subset values are a JSON list or comma-separated elements"""
    stripped = text.strip()
    if not stripped.startswith("["):
        return parse_subset(stripped, n)
    try:
        data = json.loads(stripped)
    except json.JSONDecodeError as e:
        raise InvalidInputError(reason=f"Malformed subset: {e.msg}")
    return parse_subset(data, n)


def cmd_product(args: argparse.Namespace) -> Outcome:
    f, g = _function(args, "left"), _function(args, "right")
    return EXIT_OK, AlgebraSystem.star_product(f, g, QPair(q1=args.q1, q2=args.q2)).model_dump()


def cmd_theta(args: argparse.Namespace) -> Outcome:
    return EXIT_OK, AlgebraSystem.theta(_function(args), args.q).model_dump()


def cmd_restrict(args: argparse.Namespace) -> Outcome:
    f = _function(args)
    return EXIT_OK, AlgebraSystem.restrict(f, _subset_argument(args.subset, f.n)).model_dump()


def cmd_contract(args: argparse.Namespace) -> Outcome:
    f = _function(args)
    p = parse_partition(read_json(args.partition), f.n)
    return EXIT_OK, PartitionSystem.contract(f, p).model_dump()


def cmd_restrict_by(args: argparse.Namespace) -> Outcome:
    f = _function(args)
    p = parse_partition(read_json(args.partition), f.n)
    return EXIT_OK, PartitionSystem.restrict_by(f, p).model_dump()


def cmd_decompose(args: argparse.Namespace) -> Outcome:
    f = _function(args)
    decomposition = DecompositionSystem.decompose(f, QPair(q1=args.q1, q2=args.q2))
    return EXIT_OK, decomposition_json(f, decomposition)


def cmd_classify(args: argparse.Namespace) -> Outcome:
    return EXIT_OK, ClassificationSystem.classify(_function(args)).model_dump()


def cmd_weak_equivs(args: argparse.Namespace) -> Outcome:
    return EXIT_OK, partitions_json(CoalgebraSystem.weak_equivalences(_function(args)))


def cmd_strong_equivs(args: argparse.Namespace) -> Outcome:
    return EXIT_OK, partitions_json(CoalgebraSystem.strong_equivalences(_function(args)))


def cmd_delta(args: argparse.Namespace) -> Outcome:
    f = _function(args)
    if args.family == "D":
        return EXIT_OK, CoalgebraSystem.coproduct_delta(f).model_dump()
    return EXIT_OK, CoalgebraSystem.coproduct_family(f, args.family).model_dump()


def cmd_phi(args: argparse.Namespace) -> Outcome:
    return EXIT_OK, InvariantSystem.phi(_function(args)).model_dump()


def cmd_phi_count(args: argparse.Namespace) -> Outcome:
    return EXIT_OK, {"count": InvariantSystem.phi_count(_function(args), args.colors)}


def cmd_antipode(args: argparse.Namespace) -> Outcome:
    return EXIT_OK, InvariantSystem.antipode(_function(args), checked=not args.unchecked).model_dump()


def cmd_from_hypergraph(args: argparse.Namespace) -> Outcome:
    h = parse_instance("hypergraph", read_json(args.input))
    build = InstanceSystem.iota if args.map == "iota" else InstanceSystem.gamma
    return EXIT_OK, build(h).model_dump()


def cmd_from_graph(args: argparse.Namespace) -> Outcome:
    return EXIT_OK, InstanceSystem.graphic_rank(parse_instance("multigraph", read_json(args.input))).model_dump()


def cmd_from_vectors(args: argparse.Namespace) -> Outcome:
    v = parse_instance("vectors", read_json(args.input))
    return EXIT_OK, InstanceSystem.linear_rank(v, args.field).model_dump()


def cmd_chromatic(args: argparse.Namespace) -> Outcome:
    h = parse_instance("hypergraph", read_json(args.input))
    return EXIT_OK, InvariantSystem.chromatic_polynomial(h).model_dump()


def cmd_basis(args: argparse.Namespace) -> Outcome:
    f = _function(args)
    target = _subset_argument(args.subset, f.n)
    if args.from_subset is None:
        return EXIT_OK, {"basis": subset_json(InstanceSystem.basis_of(f, target))}
    sub = _subset_argument(args.from_subset, f.n)
    sub_basis = _subset_argument(args.from_basis or "", f.n)
    extension = InstanceSystem.extend_basis(f, sub, sub_basis, target)
    return EXIT_OK, {"extension": subset_json(extension), "basis": subset_json(extension | sub_basis)}


def cmd_verify_axioms(args: argparse.Namespace) -> Outcome:
    if (args.sample is None) == (args.random is None):
        raise InvalidInputError(reason="verify-axioms takes exactly one of --sample and --random")
    if args.sample is not None:
        sample = parse_sample(read_json(args.sample))
        header = {"prng": None, "seed": None, "family": args.family, "count": len(sample), "max_n": None}
    else:
        if args.random < 0 or args.max_n < 1:
            raise InvalidInputError(reason="--random must be non-negative and --max-n positive")
        sample = random_sample(args.random, args.max_n, args.seed)
        header = {
            "prng": PRNG_ALGORITHM,
            "seed": args.seed,
            "family": args.family,
            "count": args.random,
            "max_n": args.max_n,
        }
    log(f"verifying {header}", args.verbose)
    checks = AxiomSystem.verify_axioms(sample, args.family)
    code = EXIT_VERIFICATION_FAILED if any(check.violation for check in checks) else EXIT_OK
    return code, report_json(header, checks)


def cmd_compat_report(args: argparse.Namespace) -> Outcome:
    return EXIT_OK, InvariantSystem.phi_compat_report(_function(args)).model_dump()


def cmd_catalog(args: argparse.Namespace) -> Outcome:
    if args.name is None:
        return EXIT_OK, [entry.model_dump() for entry in load_catalog()]
    return EXIT_OK, get_entry(args.name).model_dump()


def cmd_check_catalog(args: argparse.Namespace) -> Outcome:
    results = {entry.name: check_entry(entry) for entry in load_catalog()}
    failed = any(results.values())
    return (EXIT_VERIFICATION_FAILED if failed else EXIT_OK), {"mismatches": results, "ok": not failed}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="boolfun", description="Exact kernel for boolean functions on power sets")
    parser.add_argument("--pretty", action="store_true", help="Indent the JSON output")
    parser.add_argument("--verbose", action="store_true", help="Progress lines on stderr")
    commands = parser.add_subparsers(dest="command", required=True)

    def command(name: str, handler: Callable, help_text: str, source: bool = True) -> argparse.ArgumentParser:
        sub = commands.add_parser(name, help=help_text)
        if source:
            sub.add_argument("input", help="JSON file, inline JSON, or - for stdin")
        sub.set_defaults(handler=handler)
        return sub

    sub = command("product", cmd_product, "(q1, q2) product of two functions", source=False)
    sub.add_argument("left")
    sub.add_argument("right")
    sub.add_argument("--q1", type=int, default=1)
    sub.add_argument("--q2", type=int, default=1)

    command("theta", cmd_theta, "theta transform").add_argument("--q", type=int, required=True)
    command("restrict", cmd_restrict, "restriction to a subset").add_argument("--subset", required=True)
    command("contract", cmd_contract, "contraction by a partition").add_argument("--partition", required=True)
    command("restrict-by", cmd_restrict_by, "restriction by a partition").add_argument("--partition", required=True)

    sub = command("decompose", cmd_decompose, "indecomposable factors")
    sub.add_argument("--q1", type=int, default=1)
    sub.add_argument("--q2", type=int, default=1)

    command("classify", cmd_classify, "subspecies membership")
    command("weak-equivs", cmd_weak_equivs, "E^W")
    command("strong-equivs", cmd_strong_equivs, "E^S")
    command("delta", cmd_delta, "coproducts").add_argument("--family", choices=["W", "S", "D"], default="W")
    command("phi", cmd_phi, "polynomial invariant")
    command("phi-count", cmd_phi_count, "coloring count").add_argument("--colors", type=int, required=True)
    command("antipode", cmd_antipode, "antipode").add_argument("--unchecked", action="store_true")
    command("from-hypergraph", cmd_from_hypergraph, "iota or gamma of a hypergraph").add_argument(
        "--map", choices=["iota", "gamma"], default="gamma"
    )
    command("from-graph", cmd_from_graph, "graphic matroid rank")
    command("from-vectors", cmd_from_vectors, "linear matroid rank").add_argument("--field", default="q")
    command("chromatic", cmd_chromatic, "chromatic polynomial of a hypergraph")

    sub = command("basis", cmd_basis, "greedy matroid basis")
    sub.add_argument("--subset", required=True)
    sub.add_argument("--from-subset")
    sub.add_argument("--from-basis")

    sub = command("verify-axioms", cmd_verify_axioms, "axiom suite", source=False)
    sub.add_argument("--family", choices=["W", "S"], required=True)
    sub.add_argument("--sample")
    sub.add_argument("--random", type=int)
    sub.add_argument("--max-n", type=int, default=3)
    sub.add_argument("--seed", type=int, default=DEFAULT_SEED)

    command("compat-report", cmd_compat_report, "Φ against the δ coproducts")
    command("catalog", cmd_catalog, "worked examples", source=False).add_argument("--name")
    command("check-catalog", cmd_check_catalog, "re-check every worked example", source=False)
    return parser


def run(argv: Optional[Sequence[str]] = None) -> int:
    """Parse arguments, dispatch, and print; returns the exit code"""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code == 0 else EXIT_INVALID
    log(f"dispatching {args.command}", args.verbose)
    try:
        code, payload = args.handler(args)
    except BoolFunError as e:
        print(json.dumps(e.to_dict()), file=sys.stderr)
        return EXIT_INVALID
    print(json.dumps(payload, indent=2 if args.pretty else None, ensure_ascii=False))
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
