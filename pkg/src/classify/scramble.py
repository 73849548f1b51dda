"""Random generator moves and center automorphisms that leave the group unchanged."""

import logging
import random
from math import gcd
from typing import List, Optional, Tuple

from src.abelian import CentralVector, FgAbelian
from src.normalize import (
    BasisChange,
    GeneratorMove,
    MoveKind,
    Rebase,
    Step,
    apply_move,
    rebase,
    reorder,
    replace_factor,
    scale_factor,
)
from src.presentation import GroupPresentation

logger = logging.getLogger(__name__)

_SPREAD = 3


def random_move(pres: GroupPresentation, rng: random.Random) -> GeneratorMove:
    p = pres.p
    kind = rng.choice(list(MoveKind))
    if kind in (MoveKind.X_TIMES_CENTRAL, MoveKind.Y_TIMES_CENTRAL):
        vector = CentralVector.of(
            {n: rng.randint(-_SPREAD, _SPREAD) for n in pres.center.names}
        )
        return GeneratorMove(kind, vector=vector)
    if kind in (MoveKind.X_POW, MoveKind.Y_POW):
        return GeneratorMove(kind, exponent=rng.randint(1, p - 1))
    if kind is MoveKind.SWAP:
        return GeneratorMove.swap()
    return GeneratorMove(kind, exponent=rng.randint(1, p - 1))


def _unit(order: Optional[int], rng: random.Random) -> int:
    if order is None:
        return rng.choice((1, -1))
    units = [u for u in range(1, order) if gcd(u, order) == 1] or [1]
    return rng.choice(units)


def random_automorphism(center: FgAbelian, rng: random.Random) -> BasisChange:
    """
    One random basis change of the center.

    Unit rescaling, a transvection t -> t + c*e that respects orders (free targets
    take anything), or a permutation of the factors.
    """
    names = list(center.names)
    choice = rng.randrange(3)
    if choice == 0:
        name = rng.choice(names)
        return scale_factor(center, name, _unit(center.order_of(name).n, rng))
    if choice == 1 and len(names) > 1:
        target = rng.choice(names)
        target_order = center.order_of(target)
        fitting = [
            n for n in names
            if n != target
            and (
                not target_order.is_finite
                or (center.order_of(n).is_finite and target_order.n % center.order_of(n).n == 0)
            )
        ]
        if fitting:
            other = rng.choice(fitting)
            c = rng.randint(1, _SPREAD)
            return replace_factor(center, target, CentralVector.of({target: 1, other: c}))
    shuffled = names[:]
    rng.shuffle(shuffled)
    return reorder(center, shuffled)


def scramble_with_steps(
    pres: GroupPresentation, rng: random.Random, moves: int = 12
) -> Tuple[GroupPresentation, List[Step]]:
    """
    Present the same group over randomly changed generators and center basis.

    Args:
        pres: Valid presentation
        rng: Seeded random source
        moves: Number of random steps

    Returns:
        (presentation of an isomorphic group, steps replaying the change)
    """
    steps: List[Step] = []
    for _ in range(moves):
        if rng.random() < 0.5:
            move = random_move(pres, rng)
            pres = apply_move(pres, move)
            steps.append(move)
        else:
            change = random_automorphism(pres.center, rng)
            pres = rebase(pres, change)
            steps.append(Rebase(change))
    logger.debug(f"Scrambled to {pres}")
    return pres, steps


def scramble(pres: GroupPresentation, rng: random.Random, moves: int = 12) -> GroupPresentation:
    return scramble_with_steps(pres, rng, moves)[0]
