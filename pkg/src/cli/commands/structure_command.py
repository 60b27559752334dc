"""
decompose: structural decompositions of kernel vectors of H0
"""

from typing import Any, Dict, List, Tuple

from ...common import system_logger
from ...common.enums import ExitCode
from ...common.exceptions import DimensionMismatchError, PreconditionViolationError
from ...handler.verification_handler import VerificationHandler
from ...models.brick_vector import BrickVector
from ...parsers import instance_parser, vectors_parser
from ...structure import (
    decompose_bounded,
    decompose_same_orthant,
    is_witness,
    sign_compatible_witness,
)
from .output import emit_result, add_output_argument

MODES = ["bounded", "orthant", "witness"]


def register(subparsers):
    parser = subparsers.add_parser(
        "decompose", help="Decompose kernel vectors of the 3-block matrix"
    )
    parser.add_argument("instance_file", help="Instance document carrying the blocks")
    parser.add_argument("vectors_file", help="Vectors document, one flat kernel vector each")
    parser.add_argument("--mode", choices=MODES, default="bounded")
    parser.add_argument("--xi", type=int, default=None, help="Fixed summand norm cap")
    parser.add_argument("--dp-budget", type=int, default=None, help="DP state budget")
    add_output_argument(parser)
    parser.set_defaults(handler=run)


def _decompose_one(
    g: BrickVector, spec, args
) -> Tuple[Dict[str, Any], Dict[str, bool]]:
    if args.mode == "bounded":
        dec = decompose_bounded(g, spec, args.xi, args.dp_budget)
        return dec.to_dict(), VerificationHandler.decomposition_checks(g, spec, dec)
    if args.mode == "orthant":
        sod = decompose_same_orthant(g, spec, args.xi, args.dp_budget)
        parts = sod.principals + sod.addons
        return sod.to_dict(), VerificationHandler.kernel_parts_checks(g, spec, parts)
    z = sign_compatible_witness(g, spec, state_budget=args.dp_budget)
    if z is None:
        return {"witness": None}, {}
    return {"witness": z.to_dict()}, {"witness": is_witness(z, g, spec)}


def run(args) -> ExitCode:
    inst = instance_parser.read(args.instance_file)
    if inst.is_explicit:
        raise PreconditionViolationError("decompose needs an instance given by blocks")
    spec = inst.block_spec
    vectors = vectors_parser.read(args.vectors_file)

    results: List[Dict[str, Any]] = []
    checks: Dict[str, bool] = {}
    for index, flat in enumerate(vectors):
        if len(flat) != spec.cols:
            raise DimensionMismatchError(
                f"vector {index} has length {len(flat)}, the matrix has {spec.cols} columns"
            )
        g = BrickVector.from_flat(flat, spec.t_B, spec.t_A, spec.n)
        payload, verdicts = _decompose_one(g, spec, args)
        results.append(payload)
        for name, ok in verdicts.items():
            checks[f"{index}.{name}"] = ok

    system_logger.cli_info(f"decompose ({args.mode}): {len(vectors)} vectors")
    return emit_result("decompose", {"mode": args.mode, "results": results}, checks, args.output)
