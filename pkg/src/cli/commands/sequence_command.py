"""
steinitz / merge: rearrange or partition a vectors file
"""

from ...common import system_logger
from ...common.enums import ExitCode, MergeMode, SteinitzMethod
from ...common.exceptions import PreconditionViolationError
from ...handler.verification_handler import VerificationHandler
from ...merging import merge_1d, merge_kd
from ...parsers import vectors_parser
from ...steinitz import steinitz_permute
from .output import emit_result, add_output_argument


def register(subparsers):
    parser = subparsers.add_parser("steinitz", help="Reorder vectors with bounded prefix sums")
    parser.add_argument("vectors_file", help="Vectors document")
    parser.add_argument(
        "--method", choices=[m.value for m in SteinitzMethod], default=SteinitzMethod.EXACT.value
    )
    add_output_argument(parser)
    parser.set_defaults(handler=run_steinitz)

    parser = subparsers.add_parser("merge", help="Partition vectors into conformal subsets")
    parser.add_argument("vectors_file", help="Vectors document")
    parser.add_argument(
        "--mode", choices=[m.value for m in MergeMode], default=MergeMode.MULTI_DIM.value
    )
    add_output_argument(parser)
    parser.set_defaults(handler=run_merge)


def run_steinitz(args) -> ExitCode:
    vectors = vectors_parser.read(args.vectors_file)
    result = steinitz_permute(vectors, SteinitzMethod(args.method))
    system_logger.cli_info(
        f"steinitz: {len(vectors)} vectors, deviation {result.achieved_bound} "
        f"<= {result.certified_bound}"
    )
    checks = VerificationHandler.steinitz_checks(vectors, result)
    return emit_result("steinitz", result.to_dict(), checks, args.output)


def run_merge(args) -> ExitCode:
    vectors = vectors_parser.read(args.vectors_file)
    mode = MergeMode(args.mode)
    if mode == MergeMode.ONE_DIM:
        if any(len(v) != 1 for v in vectors):
            raise PreconditionViolationError("--mode 1d needs vectors of length 1")
        partition = merge_1d([v[0] for v in vectors])
    else:
        partition = merge_kd(vectors)
    system_logger.cli_info(
        f"merge ({mode.value}): {len(partition.subsets)} subsets, max size {partition.max_size}"
    )
    checks = VerificationHandler.merge_checks(vectors, partition)
    return emit_result("merge", partition.to_dict(), checks, args.output)
