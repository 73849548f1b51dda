"""Reduces the central values of x^p and y^p to exponents in [0, p)."""

import logging
from typing import List, Tuple

from src.abelian import CentralVector, FgAbelian
from src.normalize.moves import GeneratorMove, apply_move
from src.presentation import GroupPresentation
from src.utils.modular import inv_mod

logger = logging.getLogger(__name__)


def _shift(center: FgAbelian, value: CentralVector, p: int) -> CentralVector:
    """
    Central c with value + p*c reduced.

    Factors of order divisible by p (and free factors) keep value mod p; factors of
    order prime to p are cleared, since p is invertible there.
    """
    shift = {}
    for name, a in value.coords:
        order = center.order_of(name)
        if order.is_finite and order.n % p:
            shift[name] = -(a * inv_mod(p, order.n))
        else:
            shift[name] = -(a // p)
    return center.reduce(CentralVector.of(shift))


def reduction_moves(pres: GroupPresentation) -> List[GeneratorMove]:
    moves = []
    x_shift = _shift(pres.center, pres.xp, pres.p)
    if not x_shift.is_zero:
        moves.append(GeneratorMove.x_times_central(x_shift))
    y_shift = _shift(pres.center, pres.yp, pres.p)
    if not y_shift.is_zero:
        moves.append(GeneratorMove.y_times_central(y_shift))
    return moves


def reduce_pth_powers_with_moves(
    pres: GroupPresentation,
) -> Tuple[GroupPresentation, List[GeneratorMove]]:
    moves = reduction_moves(pres)
    for move in moves:
        pres = apply_move(pres, move)
    return pres, moves


def reduce_pth_powers(pres: GroupPresentation) -> GroupPresentation:
    """
    Replace x by x*c and y by y*c' so every coordinate of x^p and y^p lies in [0, p).

    x^p becomes x^p * c^p; s is untouched since c is central.

    Args:
        pres: Presentation in located form

    Returns:
        Presentation with reduced p-th powers
    """
    reduced, moves = reduce_pth_powers_with_moves(pres)
    if moves:
        logger.debug(f"Reduced p-th powers with {', '.join(str(m) for m in moves)}")
    return reduced
