"""
Command-line entry point
Registers the subcommands and maps toolkit errors to process exit codes
"""

import argparse
import sys
from typing import List, Optional

from ..common import system_logger
from ..common.enums import ExitCode
from ..common.exceptions import (
    BlockIPError,
    BudgetExceededError,
    CounterexampleFoundError,
    DimensionMismatchError,
    InstanceParseError,
    InvariantViolationError,
    NotInKernelError,
    PreconditionViolationError,
)
from ..config.settings import config_manager
from .commands import COMMAND_MODULES

# first match wins; InstanceParseError is also a ValueError
EXIT_CODES = [
    (InstanceParseError, ExitCode.PARSE_ERROR),
    (BudgetExceededError, ExitCode.BUDGET),
    (InvariantViolationError, ExitCode.INVARIANT_VIOLATION),
    (CounterexampleFoundError, ExitCode.INVARIANT_VIOLATION),
    (PreconditionViolationError, ExitCode.PARSE_ERROR),
    (DimensionMismatchError, ExitCode.PARSE_ERROR),
    (NotInKernelError, ExitCode.PARSE_ERROR),
]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="blockip",
        description="Graver bases, augmentation and structure tools for block-structured IPs",
    )
    parser.add_argument(
        "--threads",
        type=int,
        default=config_manager.config.solver.threads,
        help="Worker threads for box enumeration",
    )
    parser.add_argument(
        "--log-level",
        default=None,
        choices=["DEBUG", "INFO", "WARNING", "ERROR"],
        help="Console log level",
    )
    subparsers = parser.add_subparsers(dest="command", required=True)
    for module in COMMAND_MODULES:
        module.register(subparsers)
    return parser


def exit_code_for(error: BaseException) -> ExitCode:
    for error_type, code in EXIT_CODES:
        if isinstance(error, error_type):
            return code
    return ExitCode.INVARIANT_VIOLATION


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    if args.log_level:
        system_logger.set_level(args.log_level)

    try:
        code = args.handler(args)
    except BlockIPError as e:
        code = exit_code_for(e)
        extra = {"command": args.command, "exit_code": code.value}
        system_logger.cli_error(f"{type(e).__name__}: {e}", extra)
    return code.value
