"""Splits a presentation as G = D x A with Z(D) of rank at most three."""

import logging
from dataclasses import dataclass
from typing import List, Optional, Set, Tuple

from src.abelian import CentralVector, FgAbelian, adapted_basis
from src.errors import ClassificationError
from src.normalize import (
    BasisChange,
    Rebase,
    Step,
    compose_all,
    locate_t1_change,
    rebase,
    reduce_pth_powers_with_moves,
    reorder,
    replace_factor,
    transform_free,
)
from src.presentation import GroupPresentation
from src.utils.modular import inv_mod

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class DecompositionResult:
    """
    D with center <t1> x <z2> x <z3> (rank <= 3) and the abelian complement A.

    ``witness`` maps the input center basis onto Z(D)'s factors followed by A's.
    """

    d: GroupPresentation
    a: FgAbelian
    witness: BasisChange
    steps: Tuple[Step, ...] = ()

    def product(self) -> GroupPresentation:
        """Presentation of D x A: the same group as the input, over the new basis."""
        center = self.d.center.extend(self.a)
        return GroupPresentation(self.d.p, center, self.d.s, self.d.xp, self.d.yp)


class _Decomposer:
    """Tracks the presentation together with every basis change and move applied to it."""

    def __init__(self, pres: GroupPresentation):
        self.start = pres.center
        self.pres = pres
        self.changes: List[BasisChange] = []
        self.steps: List[Step] = []

    def rebase(self, change: BasisChange) -> None:
        if change.is_identity:
            return
        self.changes.append(change)
        self.steps.append(Rebase(change))
        self.pres = rebase(self.pres, change)

    def reduce(self) -> None:
        center = self.pres.center
        self.pres, moves = reduce_pth_powers_with_moves(self.pres)
        if self.pres.center != center:
            raise ClassificationError("p-th power reduction moved the center basis")
        self.steps.extend(moves)

    def merge(self, attr: str, exclude: Set[str]) -> Optional[str]:
        """
        Gather the part of x^p (``attr="xp"``) or y^p outside ``exclude`` into one factor.

        Free coordinates are rotated onto one free factor u with an adapted basis
        (the value then reads alpha*u), and any torsion is folded into u. With no
        free coordinates, the torsion factor of largest order absorbs the rest.
        """
        p = self.pres.p
        center = self.pres.center
        value = getattr(self.pres, attr)
        torsion = [
            n for n in center.names
            if n not in exclude and center.order_of(n).is_finite and value.get(n)
        ]
        free = [n for n in center.names if n not in exclude and not center.order_of(n).is_finite]
        free_coords = [value.get(n) for n in free]

        if any(free_coords):
            basis, alpha = adapted_basis(len(free), free_coords)
            self.rebase(transform_free(center, free, basis))
            self.reduce()
            target = free[0]
            value = getattr(self.pres, attr)
            folded = CentralVector.of({n: value.get(n) for n in torsion})
            if not folded.is_zero:
                k = inv_mod(value.get(target), p)
                fold = CentralVector.of({target: 1}) + k * folded
                self.rebase(replace_factor(self.pres.center, target, fold))
                self.reduce()
            logger.debug(f"Merged free part of {attr} into {target} (alpha = {alpha})")
            return target

        if torsion:
            index = {n: i for i, n in enumerate(center.names)}
            pivot = min(torsion, key=lambda n: (-center.order_of(n).n, index[n]))
            combination = CentralVector.of({n: value.get(n) for n in torsion})
            self.rebase(replace_factor(center, pivot, combination))
            self.reduce()
            logger.debug(f"Merged torsion {torsion} of {attr} into {pivot}")
            return pivot
        return None

    def run(self) -> DecompositionResult:
        self.rebase(locate_t1_change(self.pres))
        self.reduce()
        t1 = self.pres.center.names[0]

        z2 = self.merge("xp", {t1})
        z3 = self.merge("yp", {t1} | ({z2} if z2 else set()))

        core = [t1] + [z for z in (z2, z3) if z]
        rest = [n for n in self.pres.center.names if n not in core]
        self.rebase(reorder(self.pres.center, core + rest))

        for label, vector in (("x^p", self.pres.xp), ("y^p", self.pres.yp)):
            stray = [n for n in vector.support if n not in core]
            if stray:
                raise ClassificationError(f"{label} still uses complement factors {stray}")
        if z3 and self.pres.xp.get(z3):
            raise ClassificationError("x^p has a coordinate on z3")

        witness = compose_all(self.start, self.changes)
        d = self.pres.restrict(core)
        a = self.pres.center.restrict(rest)
        logger.info(f"Decomposed: Z(D) = {d.center}, A = {a}")
        return DecompositionResult(d, a, witness, tuple(self.steps))


def decompose(pres: GroupPresentation) -> DecompositionResult:
    """
    Constructive G = D x A.

    After locating t1 and reducing p-th powers, the part of x^p outside <t1> is
    merged into one factor z2 and the part of y^p outside <t1> x <z2> into z3.
    Everything else, including the coprime torsion, forms A.

    Args:
        pres: Valid presentation of any center rank

    Returns:
        DecompositionResult with Z(D) = <t1> x <z2> x <z3> (z2, z3 possibly absent)
    """
    return _Decomposer(pres).run()
