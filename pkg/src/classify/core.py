"""Shared state for the rank machines: the p-th power map modulo p and the minimal summand."""

import logging
from dataclasses import dataclass
from typing import List, Sequence, Tuple

from src.abelian import CentralVector, CyclicOrder
from src.errors import ClassificationError
from src.normalize import (
    BasisChange,
    Rebase,
    Restrict,
    Step,
    change_generators,
    first_factor_height,
    rebase,
    reduce_pth_powers_with_moves,
    replace_factor,
)
from src.presentation import GroupPresentation
from src.utils.modular import rref_mod_p

logger = logging.getLogger(__name__)

COSETS: Tuple[Tuple[int, int], ...] = ((1, 0), (0, 1), (1, 1))


@dataclass(frozen=True)
class CoreData:
    """
    Coordinates mod p of x^p and y^p over a located core center.

    ``quadratic`` marks p = 2, m1 = 1, where (x^i y^j)^2 = x^2i y^2j s^ij
    picks up the commutator and the power map stops being linear.
    """

    p: int
    m1: int
    names: Tuple[str, ...]
    orders: Tuple[CyclicOrder, ...]
    a: Tuple[int, ...]
    b: Tuple[int, ...]

    @classmethod
    def read(cls, pres: GroupPresentation) -> "CoreData":
        p = pres.p
        names = pres.center.names
        return cls(
            p=p,
            m1=first_factor_height(pres),
            names=names,
            orders=tuple(f.order for f in pres.center.factors),
            a=tuple(pres.xp.get(n) % p for n in names),
            b=tuple(pres.yp.get(n) % p for n in names),
        )

    @property
    def rank(self) -> int:
        return len(self.names)

    @property
    def quadratic(self) -> bool:
        return self.p == 2 and self.m1 == 1

    @property
    def column_order(self) -> List[int]:
        """Free factors first, then finite ones by descending order, t1 last among equals."""

        def key(index: int):
            order = self.orders[index]
            return (order.is_finite, -(order.n or 0), index == 0, index)

        return sorted(range(self.rank), key=key)

    def unit(self, index: int) -> List[int]:
        return [1 if k == index else 0 for k in range(self.rank)]

    def value(self, coset: Sequence[int]) -> List[int]:
        """(x^i y^j)^p modulo p for the coset (i, j)."""
        i, j = coset
        extra = i * j if self.quadratic else 0
        return [
            (i * a + j * b + (extra if k == 0 else 0)) % self.p
            for k, (a, b) in enumerate(zip(self.a, self.b))
        ]

    def rref(self, rows: Sequence[Sequence[int]]) -> Tuple[List[List[int]], List[int]]:
        return rref_mod_p(rows, self.p, self.column_order)

    def minimal_summand(self) -> Tuple[List[List[int]], List[int]]:
        """
        Reduced basis of the smallest summand that must stay in the core, mod p.

        It is spanned by the p-th power values together with the class of t1,
        except in the linear case when those values already reach a t1-pivot.
        """
        e1 = self.unit(0)
        if self.quadratic:
            return self.rref([e1, list(self.a), list(self.b)])
        _, pivots = self.rref([list(self.a), list(self.b)])
        gens = [list(self.a), list(self.b)]
        if 0 not in pivots:
            gens.append(e1)
        return self.rref(gens)


class CoreWorkspace:
    """A core presentation together with the transcript that produced it."""

    def __init__(self, pres: GroupPresentation):
        self.pres = pres
        self.steps: List[Step] = []

    def data(self) -> CoreData:
        return CoreData.read(self.pres)

    def rebase(self, change: BasisChange) -> None:
        if change.is_identity:
            return
        self.pres = rebase(self.pres, change)
        self.steps.append(Rebase(change))

    def generators(self, g: Sequence[Sequence[int]]) -> None:
        """Move to generators whose cosets are the rows of g."""
        self.pres, moves = change_generators(self.pres, g)
        self.steps.extend(moves)

    def reduce(self) -> None:
        self.pres, moves = reduce_pth_powers_with_moves(self.pres)
        self.steps.extend(moves)

    def restrict(self, names: Sequence[str]) -> None:
        self.pres = self.pres.restrict(list(names))
        self.steps.append(Restrict(tuple(names)))

    def absorb(self, attr: str, target: str) -> None:
        """
        Rebase ``target`` onto the value of x^p (``attr="xp"``) or y^p mod p.

        Afterwards that power equals ``target`` exactly.
        """
        p = self.pres.p
        center = self.pres.center
        value = getattr(self.pres, attr)
        coeffs = {n: value.get(n) % p for n in center.names if value.get(n) % p}
        u = coeffs.get(target, 0)
        if not u:
            raise ClassificationError(f"{attr} has no unit coordinate on {target}")
        if not center.order_of(target).is_finite and u != 1:
            if u != p - 1:
                raise ClassificationError(f"{attr} meets free factor {target} in {u}, not +-1")
            coeffs[target] = -1
        combination = CentralVector.of(coeffs)
        if combination != CentralVector.of({target: 1}):
            self.rebase(replace_factor(center, target, combination))
        self.reduce()
        logger.debug(f"Absorbed {attr} into {target}")
