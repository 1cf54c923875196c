from argparse import Namespace

from config.config import get_settings
from services.property_suites import run_suite
from utils.common_constants import ExitCode, SuiteName


def register(subparsers) -> None:
    parser = subparsers.add_parser("check", help="run a seeded property suite")
    parser.add_argument(
        "--suite", choices=[s.value for s in SuiteName], required=True
    )
    parser.add_argument("--trials", type=int, default=1000)
    parser.add_argument(
        "--seed",
        type=int,
        default=get_settings().SEED,
        help="base seed (CLI > env:PROBVAR_SEED > 0)",
    )
    parser.add_argument("--p", type=float, default=None)
    parser.add_argument("--workers", type=int, default=None)
    parser.set_defaults(handler=handle)


def handle(args: Namespace) -> tuple[dict, ExitCode]:
    report = run_suite(
        SuiteName(args.suite), args.trials, args.seed, p=args.p, workers=args.workers
    )
    document = {
        "suite": report.suite.value,
        "seed": report.seed,
        "trials": report.trials,
        "failures": report.failures,
        "worst_slack": report.worst_slack,
        "first_failure": report.first_failure,
    }
    return document, ExitCode.SUCCESS if report.passed else ExitCode.PROPERTY_FAILURE
