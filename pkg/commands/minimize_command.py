from argparse import Namespace
from pathlib import Path

import numpy as np

from commands.problem_loader import load_problem
from models.variational import SolverConfig
from services.conditional import cond_expectation
from services.variational import make_problem, minimize
from utils.common_constants import ExitCode, SolverMethod


def register(subparsers) -> None:
    parser = subparsers.add_parser(
        "minimize", help="minimize the energy functional over sigma(B)-measurable variables"
    )
    parser.add_argument("-i", "--input", type=Path, required=True)
    parser.add_argument(
        "--method",
        choices=[m.value for m in SolverMethod],
        default=SolverMethod.EXACT.value,
    )
    parser.add_argument("--tol", type=float, default=None)
    parser.add_argument("--max-iters", type=int, default=None)
    parser.add_argument("--step", type=float, default=None)
    parser.add_argument("--trace", action="store_true")
    parser.set_defaults(handler=handle)


def handle(args: Namespace) -> tuple[dict, ExitCode]:
    loaded = load_problem(args.input)
    problem = make_problem(
        loaded.space, loaded.partition, event=loaded.event, target=loaded.target
    )

    overrides = {"tol": args.tol, "max_iters": args.max_iters, "step": args.step}
    config = SolverConfig(
        method=SolverMethod(args.method),
        record_trace=args.trace,
        **{k: v for k, v in overrides.items() if v is not None},
    )
    result = minimize(problem, config)
    closed_form = cond_expectation(problem.space, problem.target, problem.partition)

    document = result.model_dump(mode="json")
    document["closed_form_max_abs_diff"] = float(
        np.max(np.abs(result.array - closed_form.array))
    )
    code = ExitCode.SUCCESS if result.converged else ExitCode.NON_CONVERGENCE
    return document, code
