"""
solve / brute: optimize an instance file
"""

from ...common.enums import ExitCode, SolveStatus
from ...handler.verification_handler import VerificationHandler
from ...models.solve_models import SolverCaps
from ...parsers import instance_parser
from ...solver import brute_solve, solve
from .output import emit_result, add_output_argument


def register(subparsers):
    parser = subparsers.add_parser("solve", help="Solve an instance by augmentation")
    parser.add_argument("instance_file", help="Instance document")
    parser.add_argument("--xi", type=int, default=None, help="Step infinity-norm cap")
    parser.add_argument("--guess-radius", type=int, default=None, help="Brick-0 guess radius")
    parser.add_argument("--max-rho-exponent", type=int, default=None)
    parser.add_argument("--dp-budget", type=int, default=None, help="DP state budget")
    parser.add_argument("--step-budget", type=int, default=None, help="Augmentation step budget")
    add_output_argument(parser)
    parser.set_defaults(handler=run_solve)

    parser = subparsers.add_parser("brute", help="Solve an instance by full enumeration")
    parser.add_argument("instance_file", help="Instance document")
    parser.add_argument(
        "--radius", type=int, default=None, help="Clamp every variable to [-radius, radius]"
    )
    parser.add_argument("--node-budget", type=int, default=None)
    add_output_argument(parser)
    parser.set_defaults(handler=run_brute)


def _finish(command: str, inst, result, output) -> ExitCode:
    code = emit_result(
        command, result.to_dict(), VerificationHandler.solve_checks(inst, result), output
    )
    if result.status == SolveStatus.BUDGET_EXCEEDED:
        return ExitCode.BUDGET
    return code


def run_solve(args) -> ExitCode:
    inst = instance_parser.read(args.instance_file)
    caps = SolverCaps(
        xi=args.xi,
        guess_radius=args.guess_radius,
        max_rho_exponent=args.max_rho_exponent,
        dp_state_budget=args.dp_budget,
        augmentation_step_budget=args.step_budget,
        threads=args.threads,
    )
    result = solve(inst, caps)
    return _finish("solve", inst, result, args.output)


def _default_radius(inst) -> int:
    finite = [abs(v) for v in inst.lower + inst.upper if v is not None]
    return max(finite, default=3)


def run_brute(args) -> ExitCode:
    inst = instance_parser.read(args.instance_file)
    radius = args.radius if args.radius is not None else _default_radius(inst)
    result = brute_solve(inst, radius, args.node_budget)
    return _finish("brute", inst, result, args.output)
