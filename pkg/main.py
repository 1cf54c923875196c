"""Command-line entry point: ``python main.py <command> ...``.

Every command writes a single JSON document to standard output; diagnostics
go to standard error. Outcome indices are 0-based in files and outputs.
"""

import argparse
import sys
from typing import Optional, Sequence

from pydantic import ValidationError

from commands import (
    check_command,
    cond_exp_command,
    minimize_command,
    total_prob_command,
)
from utils.common_constants import ExitCode
from utils.exceptions import ProbVarError
from utils.json_output import render
from utils.logger import logger


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="probvar",
        description="Conditional expectations and probabilities on finite spaces, "
        "in closed form and by energy minimization.",
    )
    subparsers = parser.add_subparsers(dest="command", required=True)

    # Include the commands here
    for command in (total_prob_command, cond_exp_command, minimize_command, check_command):
        command.register(subparsers)
    return parser


def run(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return ExitCode.VALIDATION_ERROR if e.code else ExitCode.SUCCESS

    try:
        document, code = args.handler(args)
    except ProbVarError as e:
        logger.error(f"{type(e).__name__}: {e.message}")
        return e.exit_code
    except ValidationError as e:
        logger.error(f"Invalid input: {e}")
        return ExitCode.VALIDATION_ERROR

    sys.stdout.write(render(document) + "\n")
    return code


if __name__ == "__main__":
    sys.exit(int(run()))
