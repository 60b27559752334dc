"""
Result output shared by the commands
"""

import sys
from typing import Any, Dict, Optional

from ...common import system_logger
from ...common.enums import ExitCode
from ...models.file_models import ResultDocument
from ...parsers import result_parser


def emit_result(
    command: str,
    payload: Dict[str, Any],
    checks: Dict[str, bool],
    output: Optional[str] = None,
) -> ExitCode:
    """Write the result document to output (stdout when None); failed checks exit 1"""
    document = ResultDocument(command=command, payload=payload, checks=checks)
    if output:
        result_parser.write(document, output)
        system_logger.cli_info(f"{command}: wrote {output}", {"checks": checks})
    else:
        sys.stdout.write(result_parser.dumps(document))
    if not document.all_checks_passed:
        failed = [name for name, ok in checks.items() if not ok]
        system_logger.cli_error(f"{command}: invariant checks failed", {"failed": failed})
        return ExitCode.INVARIANT_VIOLATION
    return ExitCode.OK


def add_output_argument(parser):
    parser.add_argument(
        "-o", "--output", default=None, help="Result file (default: stdout)"
    )
