import json
from pathlib import Path
from typing import Optional

from models.problem_file import ProblemFile
from models.random_variable import RandomVariable
from models.sigma import Partition
from models.space import Event, ProbabilitySpace
from services.sigma import make_partition
from services.space import make_event, make_space
from utils.common_model_pydantics import BaseModelPy
from utils.exceptions import ProblemFileError


class LoadedProblem(BaseModelPy):
    space: ProbabilitySpace
    partition: Partition
    event: Optional[Event]
    target: Optional[RandomVariable]

    def require_event(self) -> Event:
        if self.event is None:
            raise ProblemFileError("this command needs an 'event' field")
        return self.event


def read_problem_file(path: Path) -> ProblemFile:
    try:
        raw = json.loads(Path(path).read_text(encoding="utf-8"))
    except OSError as e:
        raise ProblemFileError(f"cannot read {path}: {e.strerror}")
    except json.JSONDecodeError as e:
        raise ProblemFileError(f"{path} is not valid JSON: {e.msg} (line {e.lineno})")
    return ProblemFile.model_validate(raw)


def load_problem(path: Path) -> LoadedProblem:
    """Read a problem file and build the validated domain objects."""
    problem = read_problem_file(path)
    problem.require_target_source()
    space = make_space(problem.weights, problem.labels)
    partition = make_partition(space, [make_event(space, block) for block in problem.partition])
    event = None if problem.event is None else make_event(space, problem.event)
    target = None if problem.target is None else RandomVariable(space=space, values=tuple(problem.target))
    return LoadedProblem(space=space, partition=partition, event=event, target=target)
