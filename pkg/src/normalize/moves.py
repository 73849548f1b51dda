"""Generator moves: replacing x and y by other representatives of G/Z."""

import logging
from dataclasses import dataclass, field
from enum import Enum
from math import gcd
from typing import Any, Dict, List, Sequence, Tuple

from src.abelian import CentralVector
from src.engine import collector_for
from src.errors import InvalidMoveError
from src.normalize.locate import locate_t1
from src.presentation import GroupPresentation
from src.utils.modular import det2, inv_mod

logger = logging.getLogger(__name__)


class MoveKind(str, Enum):
    X_TIMES_CENTRAL = "XTimesCentral"
    Y_TIMES_CENTRAL = "YTimesCentral"
    X_TIMES_Y_POW = "XTimesYPow"
    Y_TIMES_X_POW = "YTimesXPow"
    X_POW = "XPow"
    Y_POW = "YPow"
    SWAP = "Swap"


@dataclass(frozen=True)
class GeneratorMove:
    """One of the seven generator changes; ``vector`` or ``exponent`` depending on kind."""

    kind: MoveKind
    vector: CentralVector = field(default_factory=CentralVector.zero)
    exponent: int = 0

    @classmethod
    def x_times_central(cls, v: CentralVector) -> "GeneratorMove":
        return cls(MoveKind.X_TIMES_CENTRAL, vector=v)

    @classmethod
    def y_times_central(cls, v: CentralVector) -> "GeneratorMove":
        return cls(MoveKind.Y_TIMES_CENTRAL, vector=v)

    @classmethod
    def x_times_y_pow(cls, n: int) -> "GeneratorMove":
        return cls(MoveKind.X_TIMES_Y_POW, exponent=n)

    @classmethod
    def y_times_x_pow(cls, m: int) -> "GeneratorMove":
        return cls(MoveKind.Y_TIMES_X_POW, exponent=m)

    @classmethod
    def x_pow(cls, c: int) -> "GeneratorMove":
        return cls(MoveKind.X_POW, exponent=c)

    @classmethod
    def y_pow(cls, c: int) -> "GeneratorMove":
        return cls(MoveKind.Y_POW, exponent=c)

    @classmethod
    def swap(cls) -> "GeneratorMove":
        return cls(MoveKind.SWAP)

    def to_json(self) -> Dict[str, Any]:
        if self.kind in (MoveKind.X_TIMES_CENTRAL, MoveKind.Y_TIMES_CENTRAL):
            return {"move": self.kind.value, "v": self.vector.as_dict()}
        if self.kind is MoveKind.SWAP:
            return {"move": self.kind.value}
        return {"move": self.kind.value, "n": self.exponent}

    def __str__(self) -> str:
        if self.kind in (MoveKind.X_TIMES_CENTRAL, MoveKind.Y_TIMES_CENTRAL):
            return f"{self.kind.value}({self.vector})"
        if self.kind is MoveKind.SWAP:
            return "Swap"
        return f"{self.kind.value}({self.exponent})"


def inverse_move(move: GeneratorMove, p: int) -> GeneratorMove:
    """Move undoing ``move`` modulo the center."""
    kind = move.kind
    if kind in (MoveKind.X_TIMES_CENTRAL, MoveKind.Y_TIMES_CENTRAL):
        return GeneratorMove(kind, vector=-move.vector)
    if kind in (MoveKind.X_TIMES_Y_POW, MoveKind.Y_TIMES_X_POW):
        return GeneratorMove(kind, exponent=-move.exponent)
    if kind in (MoveKind.X_POW, MoveKind.Y_POW):
        return GeneratorMove(kind, exponent=inv_mod(move.exponent, p))
    return move


def apply_move(pres: GroupPresentation, move: GeneratorMove) -> GroupPresentation:
    """
    Replace the generators per ``move`` and recompute s, x^p and y^p with the engine.

    The result presents the same group; t1 is relocated afterwards so that
    s = t1^(p^(m1-1)) still holds.

    Raises:
        InvalidMoveError: if an XPow/YPow exponent is not coprime to p
    """
    p = pres.p
    if move.kind in (MoveKind.X_POW, MoveKind.Y_POW) and gcd(move.exponent, p) != 1:
        raise InvalidMoveError(f"{move} is not invertible for p = {p}")
    stray = [n for n in move.vector.support if n not in pres.center]
    if stray:
        raise InvalidMoveError(f"{move} uses unknown center factors {stray}")

    c = collector_for(pres)
    zero = c.identity()[2]
    x, y = (1, 0, zero), (0, 1, zero)
    central = (0, 0, c.reduce([move.vector.get(n) for n in pres.center.names]))

    kind = move.kind
    if kind is MoveKind.X_TIMES_CENTRAL:
        x = c.multiply(x, central)
    elif kind is MoveKind.Y_TIMES_CENTRAL:
        y = c.multiply(y, central)
    elif kind is MoveKind.X_TIMES_Y_POW:
        x = c.multiply(x, c.power(y, move.exponent))
    elif kind is MoveKind.Y_TIMES_X_POW:
        y = c.multiply(c.power(x, move.exponent), y)
    elif kind is MoveKind.X_POW:
        x = c.power(x, move.exponent)
    elif kind is MoveKind.Y_POW:
        y = c.power(y, move.exponent)
    else:
        x, y = y, x

    names = pres.center.names
    moved = GroupPresentation(
        p,
        pres.center,
        CentralVector(tuple(zip(names, c.commutator(x, y)))),
        CentralVector(tuple(zip(names, c.power(x, p)[2]))),
        CentralVector(tuple(zip(names, c.power(y, p)[2]))),
    )
    logger.debug(f"Applied {move}")
    return locate_t1(moved)


def gl2_moves(g: Sequence[Sequence[int]], p: int) -> List[GeneratorMove]:
    """
    Moves taking (x, y) to generators whose cosets are the rows of g.

    g is reduced to the identity by row operations; the inverse operations,
    applied in reverse, rebuild it.
    """
    a = [[v % p for v in row] for row in g]
    if det2(a, p) == 0:
        raise InvalidMoveError(f"Matrix {a} is singular mod {p}")

    ops: List[GeneratorMove] = []
    if a[0][0] == 0:
        ops.append(GeneratorMove.swap())
        a = [a[1], a[0]]
    scale = inv_mod(a[0][0], p)
    if scale != 1:
        ops.append(GeneratorMove.x_pow(scale))
        a[0] = [(scale * v) % p for v in a[0]]
    m = (-a[1][0]) % p
    if m:
        ops.append(GeneratorMove.y_times_x_pow(m))
        a[1] = [(v + m * w) % p for v, w in zip(a[1], a[0])]
    scale = inv_mod(a[1][1], p)
    if scale != 1:
        ops.append(GeneratorMove.y_pow(scale))
        a[1] = [(scale * v) % p for v in a[1]]
    n = (-a[0][1]) % p
    if n:
        ops.append(GeneratorMove.x_times_y_pow(n))

    moves = []
    for op in reversed(ops):
        inverse = inverse_move(op, p)
        if inverse.kind in (MoveKind.X_TIMES_Y_POW, MoveKind.Y_TIMES_X_POW):
            inverse = GeneratorMove(inverse.kind, exponent=inverse.exponent % p)
        moves.append(inverse)
    return moves


def change_generators(
    pres: GroupPresentation, g: Sequence[Sequence[int]]
) -> Tuple[GroupPresentation, List[GeneratorMove]]:
    """
    Realise g in GL2(F_p) acting on (x, y) modulo Z as a sequence of moves.

    Returns:
        (presentation over the new generators, moves applied)
    """
    moves = gl2_moves(g, pres.p)
    for move in moves:
        pres = apply_move(pres, move)
    return pres, moves
