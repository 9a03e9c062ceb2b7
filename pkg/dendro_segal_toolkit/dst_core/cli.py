"""
Command-line interface for dst_core.

Every subcommand reads its inputs as JSON documents (a path or an inline
document) and prints either a short human-readable summary or, with
``--json``, a machine-readable document. Exit codes: 0 when every check or
certificate holds, 1 when one is false, 2 for usage errors and malformed
input.
"""

import argparse
import importlib
import importlib.metadata
import logging
import sys
from typing import Any, Callable, Dict, List, Optional

from dendro_segal_toolkit.dendro_segal.cli_utils import bound_overrides, bounds_arg_parser, output_arg_parser
from dendro_segal_toolkit.dendro_segal.file_utils import dumps, read_json_argument, write_json
from dendro_segal_toolkit.modules.equivalence import (
    certify_operad,
    certify_simplicial,
    roundtrip_operad,
    roundtrip_simplicial,
)
from dendro_segal_toolkit.modules.localization import (
    as_cyclic,
    as_rootable,
    as_symmetric,
    bp_factorizations,
    build_tf,
    factor_through_tf,
    functor_name,
    localize,
    lpl_map,
)
from dendro_segal_toolkit.modules.operads import (
    FiniteOperad,
    OperadNerve,
    characterize_invertible,
    dendroidal_nerve,
    validate_operad,
)
from dendro_segal_toolkit.modules.presheaves import (
    TruncatedSimplicialSet,
    check_1segal,
    check_2segal,
    check_covariantly_fibrant,
    check_dendroidal_segal,
    check_invertible,
    check_reduced_segal,
    encode_label,
    restrict_along_lpl,
    validate_presheaf,
)
from dendro_segal_toolkit.modules.simplex_targets import DeltaMap
from dendro_segal_toolkit.modules.tree_hom import (
    CycTreeMorphism,
    TreeMorphism,
    hom,
    morphism_from_json,
)
from dendro_segal_toolkit.modules.trees import (
    EdgeRef,
    Tree,
    canonicalize,
    decode,
    enumerate_trees,
    graft,
    plane_of,
    variant_from_json,
)

from .config import ToolkitConfig, load_user_config
from .exceptions import DSTError, SerializationError
from .module_sequencer import ModuleSequencer
from .suite import run_suite
from .verdict import CheckResult

logger = logging.getLogger(__name__)

REPORT_FILENAME = "dst-suite-report.json"
TREE_KINDS = ("pl", "sym", "cyc", "rootable")
LOCALIZE_KINDS = {"pl": "pl", "sym": "sym", "cyc": "cyc", "abs": "rootable"}

EXIT_OK = 0
EXIT_FALSE = 1
EXIT_USAGE = 2


def setup_logging(verbose: bool = False) -> None:
    """Configure stderr logging; DEBUG with --verbose, WARNING otherwise."""
    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.WARNING,
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        stream=sys.stderr,
        force=True,
    )


def get_version() -> str:
    try:
        return importlib.metadata.version("dendro-segal-toolkit")
    except importlib.metadata.PackageNotFoundError:
        from . import __version__

        return __version__


def emit(args: argparse.Namespace, human: str, machine: Any) -> None:
    print(dumps(machine) if args.json else human)


# =============================================================================
# INPUT DOCUMENTS
# =============================================================================


def load_tree(argument: str):
    """A tree from its compact encoding, or from a JSON document of any variant."""
    try:
        return decode(argument)
    except DSTError:
        return variant_from_json(read_json_argument(argument))


def load_plane_tree(argument: str) -> Tree:
    tree = load_tree(argument)
    if not isinstance(tree, Tree):
        raise SerializationError(f"Expected a plane tree, got a {tree.kind} tree")
    return tree


def load_morphism(argument: str, kind: str = "pl"):
    """
    Decode a morphism document and carry it into ``kind``.

    Plane documents are accepted for every kind and sent through the
    forgetful functors; other documents must already be of that kind.
    """
    morphism = morphism_from_json(read_json_argument(argument))
    if morphism.kind == kind:
        return morphism
    if isinstance(morphism, TreeMorphism) and morphism.kind == "pl":
        if kind == "sym":
            return as_symmetric(morphism)
        if kind == "cyc":
            return as_cyclic(morphism)
        if kind == "rootable":
            return as_rootable(as_cyclic(morphism))
    if isinstance(morphism, CycTreeMorphism) and morphism.kind == "cyc" and kind == "rootable":
        return as_rootable(morphism)
    raise SerializationError(f"A {morphism.kind} morphism cannot be read as a {kind} morphism")


def is_operad_document(data: Any) -> bool:
    return isinstance(data, dict) and "ops" in data


def load_operad(argument: str) -> FiniteOperad:
    data = read_json_argument(argument)
    if not is_operad_document(data):
        raise SerializationError("Expected an operad document with 'ops'")
    return FiniteOperad.from_json(data)


def load_simplicial(argument: str) -> TruncatedSimplicialSet:
    data = read_json_argument(argument)
    if not isinstance(data, dict) or "levels" not in data:
        raise SerializationError("Expected a simplicial set document with 'levels'")
    return TruncatedSimplicialSet.from_json(data)


def load_either(argument: str):
    data = read_json_argument(argument)
    if is_operad_document(data):
        return FiniteOperad.from_json(data)
    return TruncatedSimplicialSet.from_json(data)


def verdict_code(holds: bool) -> int:
    return EXIT_OK if holds else EXIT_FALSE


# =============================================================================
# SUBCOMMANDS
# =============================================================================


def cmd_tree(args: argparse.Namespace, config: ToolkitConfig) -> int:
    if args.tree_command == "enum":
        bounds = config.tree_bounds
        trees = enumerate_trees(bounds["max_vertices"], bounds["max_arity"])
        logger.debug(f"Enumerated {len(trees)} plane trees within {bounds}")
        if args.kind != "pl":
            seen = {}
            for tree in trees:
                seen.setdefault(canonicalize(tree, args.kind), None)
            values = list(seen)
        else:
            values = trees
        emit(
            args,
            "\n".join(v.encoding if isinstance(v, Tree) else v.tree.encoding for v in values)
            + f"\n{len(values)} trees",
            {"kind": args.kind, "bounds": bounds, "count": len(values), "trees": [v.to_json() for v in values]},
        )
        return EXIT_OK

    if args.tree_command == "canon":
        tree = load_plane_tree(args.tree)
        canonical = canonicalize(tree, args.kind)
        emit(args, canonical.tree.encoding, canonical.to_json())
        return EXIT_OK

    base, top = load_plane_tree(args.base), load_plane_tree(args.top)
    grafted = graft(base, EdgeRef.parse(args.leaf), top)
    emit(args, f"{grafted.encoding}\n{grafted.pretty()}", grafted.to_json())
    return EXIT_OK


def cmd_hom(args: argparse.Namespace, config: ToolkitConfig) -> int:
    source, target = load_tree(args.source), load_tree(args.target)
    if args.kind != "pl":
        source = canonicalize(plane_of(source), args.kind)
        target = canonicalize(plane_of(target), args.kind)
    morphisms = hom(source, target)
    logger.debug(f"|hom| = {len(morphisms)}")
    emit(
        args,
        "\n".join(dumps(m.to_json()["edges"], pretty=False) for m in morphisms) + f"\n{len(morphisms)} morphisms",
        {"count": len(morphisms), "morphisms": [m.to_json() for m in morphisms]},
    )
    return EXIT_OK


def cmd_localize(args: argparse.Namespace, config: ToolkitConfig) -> int:
    alpha = load_morphism(args.morphism, LOCALIZE_KINDS[args.functor])
    image = localize(alpha)
    name = functor_name(alpha)
    emit(args, f"L_{name}: {image}", {"functor": name, "map": image.to_json()})
    return EXIT_OK


def cmd_adjoint(args: argparse.Namespace, config: ToolkitConfig) -> int:
    """T_f, the unit T → T_f and the boundary-preserving factorization of α."""
    alpha = load_morphism(args.morphism)
    f = DeltaMap.from_json(read_json_argument(args.map)) if args.map else lpl_map(alpha)
    tf, unit = build_tf(alpha.source_tree, f)
    beta = factor_through_tf(alpha, f)
    found = bp_factorizations(alpha, f)
    unique = found == [beta]
    emit(
        args,
        "\n".join(
            [
                f"f = {f}",
                f"T_f = {tf.encoding}",
                f"unit: {dumps(unit.to_json()['edges'], pretty=False)}",
                f"factorization: {dumps(beta.to_json()['edges'], pretty=False)}",
                f"unique among {len(found)} boundary-preserving candidates: {unique}",
            ]
        ),
        {
            "map": f.to_json(),
            "tf": tf.to_json(),
            "unit": unit.to_json(),
            "factorization": beta.to_json(),
            "candidates": len(found),
            "unique": unique,
        },
    )
    return verdict_code(unique)


SIMPLICIAL_CHECKS: Dict[str, Callable] = {
    "1segal": check_1segal,
    "2segal": check_2segal,
    "reduced": check_reduced_segal,
}
DENDROIDAL_CHECKS: Dict[str, Callable] = {
    "dsegal": check_dendroidal_segal,
    "invertible": check_invertible,
    "covfib": check_covariantly_fibrant,
}


def cmd_check(args: argparse.Namespace, config: ToolkitConfig) -> int:
    """
    Run one predicate on a document.

    The dendroidal predicates take either an operad document, checked on
    its dendroidal nerve, or a simplicial set, checked on its restriction
    along L_pl. ``presheaf`` and ``operad`` validate the document itself.
    """
    value = load_either(args.document)
    bounds = config.tree_bounds
    extra: Dict[str, Any] = {}

    if args.predicate == "presheaf":
        if not isinstance(value, TruncatedSimplicialSet):
            raise DSTError("check presheaf expects a simplicial set document")
        result = validate_presheaf(value)
    elif args.predicate == "operad":
        if not isinstance(value, FiniteOperad):
            raise DSTError("check operad expects an operad document")
        result = validate_operad(value)
    elif args.predicate in SIMPLICIAL_CHECKS:
        if not isinstance(value, TruncatedSimplicialSet):
            raise DSTError(f"check {args.predicate} expects a simplicial set document")
        result = SIMPLICIAL_CHECKS[args.predicate](value)
    elif isinstance(value, FiniteOperad):
        max_vertices = config.operad_bounds["nerve_max_vertices"]
        if args.predicate == "invertible":
            criteria = characterize_invertible(value, max_vertices=max_vertices)
            extra = {"criteria": {key: bool(value) for key, value in criteria._asdict().items()}}
            result = DENDROIDAL_CHECKS["invertible"](OperadNerve(value, max_vertices=max_vertices))
            if not criteria.agree() and result:
                result = CheckResult.fail(f"the invertibility criteria disagree: {criteria}", result.scope)
        else:
            result = DENDROIDAL_CHECKS[args.predicate](OperadNerve(value, max_vertices=max_vertices))
    else:
        D = restrict_along_lpl(value, max_vertices=bounds["max_vertices"], max_arity=bounds["max_arity"])
        result = DENDROIDAL_CHECKS[args.predicate](D)

    human = f"{args.predicate}: {bool(result)} ({result.scope})"
    if not result:
        human += f"\ncounterexample: {result.counterexample}"
    for key, criteria in extra.items():
        human += f"\n{key}: {criteria}"
    emit(
        args,
        human,
        {
            "check": args.predicate,
            "scope": result.scope,
            "result": bool(result),
            "counterexample": result.counterexample,
            **extra,
        },
    )
    return verdict_code(bool(result))


def cmd_nerve(args: argparse.Namespace, config: ToolkitConfig) -> int:
    operad = load_operad(args.operad)
    tree = load_plane_tree(args.tree)
    elements = dendroidal_nerve(operad, tree)
    emit(
        args,
        "\n".join(repr(x) for x in elements) + f"\n{len(elements)} elements at {tree.encoding}",
        {"tree": tree.to_json(), "count": len(elements), "elements": [encode_label(x) for x in elements]},
    )
    return EXIT_OK


def _certificate_output(args: argparse.Namespace, certificate) -> int:
    human = [f"{certificate.direction}: {'verified' if certificate else 'FAILED'}"]
    if certificate.counterexample:
        human.append(f"counterexample: {certificate.counterexample}")
    if args.verbose_log:
        human.extend(certificate.log)
    emit(args, "\n".join(human), certificate.to_json())
    return verdict_code(bool(certificate))


def cmd_to_operad(args: argparse.Namespace, config: ToolkitConfig) -> int:
    return _certificate_output(args, certify_operad(load_simplicial(args.simplicial)))


def cmd_to_simplicial(args: argparse.Namespace, config: ToolkitConfig) -> int:
    operad = load_operad(args.operad)
    truncation = args.trunc if args.trunc is not None else min(config.truncation, operad.arity_bound)
    logger.info(f"Truncating at N = {truncation}")
    return _certificate_output(args, certify_simplicial(operad, truncation))


def cmd_roundtrip(args: argparse.Namespace, config: ToolkitConfig) -> int:
    value = load_either(args.document)
    if isinstance(value, FiniteOperad):
        certificate = roundtrip_operad(value)
    else:
        certificate = roundtrip_simplicial(value)
    return _certificate_output(args, certificate)


def cmd_suite(args: argparse.Namespace, config: ToolkitConfig) -> int:
    """Run the acceptance suite and write the report."""
    overrides = None
    if args.only:
        names = [m["name"] for m in config.modules]
        unknown = sorted(set(args.only) - set(names))
        if unknown:
            raise DSTError(f"Unknown suite modules: {', '.join(unknown)}")
        overrides = {name: name in args.only for name in names}

    print(f"seed: {config.seed}", file=sys.stderr if args.json else sys.stdout)
    verdicts, errors = run_suite(config.module_config(), config.suite_context(), load_user_config(), overrides)
    passed = sum(v.result for v in verdicts)
    report = {
        "seed": config.seed,
        "bounds": config.bounds,
        "passed": passed,
        "failed": len(verdicts) - passed,
        "errors": errors,
        "verdicts": [v.to_dict() for v in verdicts],
    }
    path = write_json(REPORT_FILENAME, report)

    lines = []
    for v in verdicts:
        status = "PASS" if v.result else "FAIL"
        lines.append(f"{status}  {v.check}  [{v.scope}]  {v.wall_time:.2f}s")
        if not v.result:
            lines.append(f"      counterexample: {v.counterexample}")
    lines.extend(f"ERROR {error}" for error in errors)
    lines.append(f"{passed}/{len(verdicts)} checks passed; report written to {path}")
    emit(args, "\n".join(lines), report)
    return verdict_code(passed == len(verdicts) and not errors and bool(verdicts))


def cmd_list(args: argparse.Namespace, config: ToolkitConfig) -> int:
    """Sequenced suite modules with their state and description."""
    sequencer = ModuleSequencer()
    sequencer.load_configurations(config.module_config(), load_user_config())
    sequencer.discover_modules()
    status = sequencer.get_module_status()
    for entry in status["modules"]:
        entry["description"] = _module_description(sequencer, entry["name"])
    lines = []
    for entry in status["modules"]:
        lines.append(f"  {entry['name']:<16} {entry['state']:<9} {entry['description']}")
    lines.extend(f"ERROR {error}" for error in status["errors"])
    emit(args, "Suite modules:\n" + "\n".join(lines), status)
    return EXIT_OK if not status["errors"] else EXIT_FALSE


def _module_description(sequencer: ModuleSequencer, name: str) -> str:
    try:
        module = sequencer.get_module(name)
    except DSTError:
        return ""
    package = importlib.import_module(type(module).__module__.rsplit(".", 1)[0])
    return getattr(package, "__description__", "")


# =============================================================================
# PARSER
# =============================================================================


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    bounds_arg_parser(common)
    output_arg_parser(common)

    parser = argparse.ArgumentParser(
        prog="dst",
        description="Dendroidal and 2-Segal combinatorics at desk scale.",
        epilog="JSON arguments may be file paths or inline documents.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {get_version()}")
    sub = parser.add_subparsers(dest="command", metavar="<command>")
    sub.required = True

    tree = sub.add_parser("tree", help="Enumerate, canonicalize and graft trees")
    tree_sub = tree.add_subparsers(dest="tree_command", metavar="<action>")
    tree_sub.required = True
    enum = tree_sub.add_parser("enum", parents=[common], help="List trees within the bounds")
    enum.add_argument("--kind", choices=TREE_KINDS, default="pl", help="List isomorphism classes of this kind")
    canon = tree_sub.add_parser("canon", parents=[common], help="Canonical representative of a tree")
    canon.add_argument("tree", help="Compact encoding or JSON tree")
    canon.add_argument("--kind", choices=TREE_KINDS[1:], default="sym")
    graft_parser = tree_sub.add_parser("graft", parents=[common], help="Graft TOP onto a leaf of BASE")
    graft_parser.add_argument("base")
    graft_parser.add_argument("leaf", help='Leaf of BASE as a dot-joined path, e.g. "0.1"')
    graft_parser.add_argument("top")

    hom_parser = sub.add_parser("hom", parents=[common], help="All morphisms between two trees")
    hom_parser.add_argument("source")
    hom_parser.add_argument("target")
    hom_parser.add_argument("--kind", choices=TREE_KINDS, default="pl")

    loc = sub.add_parser("localize", parents=[common], help="Apply a boundary functor to a tree morphism")
    loc.add_argument("functor", choices=sorted(LOCALIZE_KINDS))
    loc.add_argument("morphism", help="Morphism document")

    adj = sub.add_parser("adjoint", parents=[common], help="Build T_f and factor a plane morphism through it")
    adj.add_argument("morphism", help="Plane morphism document")
    adj.add_argument("--map", help="DeltaMap document f; defaults to L_pl of the morphism")

    check = sub.add_parser("check", parents=[common], help="Run a presheaf or operad predicate")
    check.add_argument(
        "predicate",
        choices=["1segal", "2segal", "reduced", "dsegal", "invertible", "covfib", "presheaf", "operad"],
    )
    check.add_argument("document", help="Simplicial set or operad document")

    nerve = sub.add_parser("nerve", parents=[common], help="The dendroidal nerve of an operad at a tree")
    nerve.add_argument("operad")
    nerve.add_argument("tree")

    for name, target, help_text in (
        ("to-operad", "simplicial", "Operad of a 2-Segal simplicial set"),
        ("to-simplicial", "operad", "2-Segal simplicial set of an invertible operad"),
        ("roundtrip", "document", "Roundtrip an operad or a simplicial set through the equivalence"),
    ):
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.add_argument(target)
        p.add_argument("--log", dest="verbose_log", action="store_true", help="Print the uniqueness log")

    suite = sub.add_parser("suite", parents=[common], help="Run the acceptance suite")
    suite.add_argument("--only", nargs="+", metavar="NAME", help="Run only the named suite modules")

    sub.add_parser("list", parents=[common], help="List suite modules")
    return parser


COMMANDS = {
    "tree": cmd_tree,
    "hom": cmd_hom,
    "localize": cmd_localize,
    "adjoint": cmd_adjoint,
    "check": cmd_check,
    "nerve": cmd_nerve,
    "to-operad": cmd_to_operad,
    "to-simplicial": cmd_to_simplicial,
    "roundtrip": cmd_roundtrip,
    "suite": cmd_suite,
    "list": cmd_list,
}


def run(argv: Optional[List[str]] = None) -> int:
    """Parse ``argv`` and dispatch; returns the exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code in (0, None) else EXIT_USAGE

    setup_logging(args.verbose)
    try:
        config = ToolkitConfig(args.config)
        config.apply_overrides(bound_overrides(args), args.seed)
        return COMMANDS[args.command](args, config)
    except DSTError as e:
        print(f"Error: {e}", file=sys.stderr)
        return EXIT_USAGE


def main(args: Optional[List[str]] = None) -> None:
    """Console-script entry point."""
    sys.exit(run(args))


if __name__ == "__main__":
    main()
