"""Replayable transcripts of moves and center rebases."""

from dataclasses import dataclass
from typing import Any, Dict, Iterable, List, Tuple, Union

from src.normalize.basis import BasisChange, rebase
from src.normalize.moves import GeneratorMove, apply_move
from src.presentation import GroupPresentation


@dataclass(frozen=True)
class Rebase:
    change: BasisChange


@dataclass(frozen=True)
class Restrict:
    """Drop every center factor except ``names`` (a split-off direct factor)."""

    names: Tuple[str, ...]


Step = Union[GeneratorMove, Rebase, Restrict]


def replay(pres: GroupPresentation, steps: Iterable[Step]) -> GroupPresentation:
    for step in steps:
        if isinstance(step, GeneratorMove):
            pres = apply_move(pres, step)
        elif isinstance(step, Rebase):
            pres = rebase(pres, step.change)
        else:
            pres = pres.restrict(list(step.names))
    return pres


def step_to_json(step: Step) -> Dict[str, Any]:
    if isinstance(step, GeneratorMove):
        return step.to_json()
    if isinstance(step, Rebase):
        return {"rebase": step.change.to_json()}
    return {"restrict": list(step.names)}


def steps_to_json(steps: Iterable[Step]) -> List[Dict[str, Any]]:
    return [step_to_json(s) for s in steps]
