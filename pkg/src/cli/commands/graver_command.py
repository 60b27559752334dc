"""
graver: Graver basis of a matrix file
"""

from ...common import system_logger
from ...common.enums import ExitCode
from ...common.exceptions import PreconditionViolationError
from ...graver import graver_complete, graver_enumerate
from ...handler.verification_handler import VerificationHandler
from ...parsers import basis_parser, matrix_parser
from .output import emit_result, add_output_argument


def register(subparsers):
    parser = subparsers.add_parser("graver", help="Compute a Graver basis")
    parser.add_argument("matrix_file", help="Matrix document")
    parser.add_argument("--method", choices=["enum", "complete"], default="complete")
    parser.add_argument(
        "--radius", type=int, default=None, help="Box radius for --method enum"
    )
    parser.add_argument("--basis-out", default=None, help="Write the basis document here")
    add_output_argument(parser)
    parser.set_defaults(handler=run)


def run(args) -> ExitCode:
    M = matrix_parser.read(args.matrix_file)
    if args.method == "enum":
        if args.radius is None:
            raise PreconditionViolationError("--method enum needs --radius")
        basis = graver_enumerate(M, args.radius, threads=args.threads)
    else:
        basis = graver_complete(M)

    if args.basis_out:
        basis_parser.write(basis, args.basis_out)
    summary = {
        "count": len(basis),
        "max_norm": basis.max_norm,
        "method": basis.method.value,
        "certified_complete": basis.certified_complete,
        "radius": basis.radius,
    }
    if not args.basis_out:
        summary["elements"] = [list(g) for g in basis.sorted_elements()]
    system_logger.cli_info(f"graver: {len(basis)} elements, max norm {basis.max_norm}")
    checks = VerificationHandler.graver_checks(basis)
    return emit_result("graver", summary, checks, args.output)
