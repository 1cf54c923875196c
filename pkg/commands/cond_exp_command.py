from argparse import Namespace
from pathlib import Path

from commands.problem_loader import load_problem
from services.conditional import cond_expectation, verify_properties
from services.lp import indicator
from utils.common_constants import ExitCode


def register(subparsers) -> None:
    parser = subparsers.add_parser(
        "cond-exp", help="closed-form E(X | sigma(B)) with its property audit"
    )
    parser.add_argument("-i", "--input", type=Path, required=True)
    parser.set_defaults(handler=handle)


def handle(args: Namespace) -> tuple[dict, ExitCode]:
    problem = load_problem(args.input)
    space, partition = problem.space, problem.partition
    x = problem.target if problem.event is None else indicator(space, problem.event)

    xi = cond_expectation(space, x, partition)
    report = verify_properties(space, x, partition, xi)
    document = {
        "coefficients": list(xi.coefficients),
        "verified": {
            "measurable": report.measurable,
            "integrable": report.integrable,
            "property_iii_max_violation": report.property_iii_max_violation,
            "partial": report.partial,
        },
    }
    return document, ExitCode.SUCCESS
