from argparse import Namespace
from pathlib import Path

from commands.problem_loader import load_problem
from services.conditional import total_probability, total_probability_terms
from services.space import prob
from utils.common_constants import ExitCode


def register(subparsers) -> None:
    parser = subparsers.add_parser(
        "total-prob", help="P(A) next to sum_j P(A|B_j) P(B_j)"
    )
    parser.add_argument("-i", "--input", type=Path, required=True)
    parser.set_defaults(handler=handle)


def handle(args: Namespace) -> tuple[dict, ExitCode]:
    problem = load_problem(args.input)
    event = problem.require_event()
    space, partition = problem.space, problem.partition

    document = {
        "p_event": prob(space, event),
        "total_probability": total_probability(space, event, partition),
        "per_block": [
            {
                "outcomes": [space.label(i) for i in block.sorted_members()],
                "p_block": p_block,
                "cond_prob": p_cond,
            }
            for block, (p_block, p_cond) in zip(
                partition.blocks, total_probability_terms(space, event, partition)
            )
        ],
    }
    return document, ExitCode.SUCCESS
