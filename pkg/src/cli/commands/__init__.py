"""
Subcommands; each module registers its parsers and a handler returning an ExitCode
"""

from . import (
    graver_command,
    instances_command,
    sequence_command,
    solve_command,
    structure_command,
)

COMMAND_MODULES = [
    graver_command,
    solve_command,
    structure_command,
    sequence_command,
    instances_command,
]

__all__ = ["COMMAND_MODULES"]
