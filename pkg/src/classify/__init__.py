"""Classification module."""

from src.classify.canonical import (
    FAMILY_NAMES,
    FAMILY_SHAPES,
    CanonicalForm,
    ComplementInvariants,
    canonical_iso,
    canonical_presentation,
    describe_difference,
)
from src.classify.machines import (
    Canonical,
    ClassifyOutcome,
    SplitFound,
    classify_core,
    classify_rank1,
    classify_rank2,
    classify_rank3,
)
from src.classify.pipeline import ClassifyReport, classify
from src.classify.scramble import random_automorphism, random_move, scramble, scramble_with_steps

__all__ = [
    "FAMILY_NAMES",
    "FAMILY_SHAPES",
    "Canonical",
    "CanonicalForm",
    "ClassifyOutcome",
    "ClassifyReport",
    "ComplementInvariants",
    "SplitFound",
    "canonical_iso",
    "canonical_presentation",
    "classify",
    "classify_core",
    "classify_rank1",
    "classify_rank2",
    "classify_rank3",
    "describe_difference",
    "random_automorphism",
    "random_move",
    "scramble",
    "scramble_with_steps",
]
