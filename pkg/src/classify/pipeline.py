"""Top-level classification: decompose, then run the rank machines until a family is reached."""

import logging
from dataclasses import dataclass
from typing import Any, Dict, Tuple

from src.abelian import FgAbelian
from src.classify.canonical import CanonicalForm, ComplementInvariants
from src.classify.machines import Canonical, classify_core
from src.decompose import decompose
from src.errors import ClassificationError
from src.normalize import Restrict, Step, steps_to_json
from src.presentation import GroupPresentation

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ClassifyReport:
    """
    Result of ``classify``.

    Replaying ``steps`` on the input yields ``presentation`` exactly.
    """

    form: CanonicalForm
    presentation: GroupPresentation
    complement: FgAbelian
    steps: Tuple[Step, ...]

    def to_json(self) -> Dict[str, Any]:
        return self.form.to_json(moves=steps_to_json(self.steps))

    def __iter__(self):
        yield self.form
        yield self.steps


def classify(pres: GroupPresentation) -> ClassifyReport:
    """
    Classify any valid presentation into one of the nine families plus a complement.

    Args:
        pres: Valid presentation

    Returns:
        ClassifyReport with the canonical form and a replayable transcript
    """
    result = decompose(pres)
    core = result.d
    complement = result.a
    steps = list(result.steps) + [Restrict(core.center.names)]

    # Each split strictly lowers the core rank.
    for _ in range(core.center.rank):
        outcome = classify_core(core)
        steps.extend(outcome.steps)
        if isinstance(outcome, Canonical):
            form = outcome.form.model_copy(
                update={"complement": ComplementInvariants.of(complement)}
            )
            logger.info(f"Classified as {form}")
            return ClassifyReport(form, outcome.presentation, complement, tuple(steps))
        complement = complement.extend(outcome.factor)
        core = outcome.reduced
    raise ClassificationError(f"Core of {pres} kept splitting")
