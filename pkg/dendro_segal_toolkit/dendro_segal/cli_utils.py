"""
cli_utils.py - Shared CLI options.

Example usage:
    parser = argparse.ArgumentParser()
    bounds_arg_parser(parser)
    args = parser.parse_args()
"""

import argparse
from typing import Any, Dict


def bounds_arg_parser(parser: argparse.ArgumentParser) -> None:
    """
    Add the bound overrides shared by every subcommand:
    --max-vertices / --max-arity: tree enumeration bounds
    --trunc: simplicial truncation N
    --seed: seed for randomized fixtures
    """
    parser.add_argument("--max-vertices", type=int, help="Largest number of vertices in enumerated trees")
    parser.add_argument("--max-arity", type=int, help="Largest vertex arity in enumerated trees")
    parser.add_argument("--trunc", type=int, metavar="N", help="Simplicial truncation")
    parser.add_argument("--seed", type=int, help="Seed for randomized fixtures")


def output_arg_parser(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--json", action="store_true", help="Print machine-readable output")
    parser.add_argument("-v", "--verbose", action="store_true", help="Enable verbose output")
    parser.add_argument("--config", help="Path to a dst-config.yaml file")


def bound_overrides(args: argparse.Namespace) -> Dict[str, Any]:
    """The bounds section implied by the flags that were given."""
    overrides: Dict[str, Any] = {}
    trees = {}
    if getattr(args, "max_vertices", None) is not None:
        trees["max_vertices"] = args.max_vertices
    if getattr(args, "max_arity", None) is not None:
        trees["max_arity"] = args.max_arity
    if trees:
        overrides["trees"] = trees
    if getattr(args, "trunc", None) is not None:
        overrides["truncation"] = args.trunc
    return overrides
