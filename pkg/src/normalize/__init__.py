"""Normalization moves module."""

from src.normalize.basis import (
    BasisChange,
    compose_all,
    rebase,
    rename,
    reorder,
    replace_factor,
    scale_factor,
    split_primary,
    transform_free,
)
from src.normalize.locate import first_factor_height, locate_t1, locate_t1_change
from src.normalize.moves import (
    GeneratorMove,
    MoveKind,
    apply_move,
    change_generators,
    gl2_moves,
    inverse_move,
)
from src.normalize.transcript import Rebase, Restrict, Step, replay, step_to_json, steps_to_json
from src.normalize.reduction import (
    reduce_pth_powers,
    reduce_pth_powers_with_moves,
    reduction_moves,
)

__all__ = [
    "BasisChange",
    "GeneratorMove",
    "MoveKind",
    "Rebase",
    "Restrict",
    "Step",
    "apply_move",
    "change_generators",
    "compose_all",
    "first_factor_height",
    "gl2_moves",
    "inverse_move",
    "locate_t1",
    "locate_t1_change",
    "rebase",
    "reduce_pth_powers",
    "reduce_pth_powers_with_moves",
    "reduction_moves",
    "rename",
    "reorder",
    "replace_factor",
    "replay",
    "scale_factor",
    "split_primary",
    "step_to_json",
    "steps_to_json",
    "transform_free",
]
