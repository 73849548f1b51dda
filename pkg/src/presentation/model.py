"""Central-extension presentations and their structural validation."""

import dataclasses
import logging
from dataclasses import dataclass
from enum import Enum
from typing import List, Optional

from src.abelian import CentralVector, FgAbelian, central_order
from src.utils.modular import is_prime

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class GroupPresentation:
    """
    G = <x, y, Z> with Z central, [x, y] = s, x^p = xp and y^p = yp.

    Every element has the normal form x^i y^j c with 0 <= i, j < p and c in Z.
    """

    p: int
    center: FgAbelian
    s: CentralVector
    xp: CentralVector
    yp: CentralVector

    def order(self) -> Optional[int]:
        """p^2 * |Z|, or None when the center is infinite."""
        size = self.center.cardinality()
        return None if size is None else self.p * self.p * size

    @property
    def is_finite(self) -> bool:
        return self.center.is_finite

    def reduced(self) -> "GroupPresentation":
        return dataclasses.replace(
            self,
            s=self.center.reduce(self.s),
            xp=self.center.reduce(self.xp),
            yp=self.center.reduce(self.yp),
        )

    def with_center(
        self,
        center: FgAbelian,
        s: CentralVector,
        xp: CentralVector,
        yp: CentralVector,
    ) -> "GroupPresentation":
        return GroupPresentation(
            self.p, center, center.reduce(s), center.reduce(xp), center.reduce(yp)
        )

    def restrict(self, names: List[str]) -> "GroupPresentation":
        """Drop every center factor not in ``names``; s, xp, yp must not use them."""
        center = self.center.restrict(names)
        for vector in (self.s, self.xp, self.yp):
            stray = [n for n in vector.support if n not in center]
            if stray:
                raise ValueError(f"Cannot drop factors {stray} still used by the relations")
        return GroupPresentation(self.p, center, self.s, self.xp, self.yp)

    def __str__(self) -> str:
        return f"G(p={self.p}; Z={self.center}; s={self.s}; x^p={self.xp}; y^p={self.yp})"


class ViolationKind(str, Enum):
    NON_PRIME_P = "NonPrimeP"
    TRIVIAL_COMMUTATOR = "TrivialCommutator"
    COMMUTATOR_ORDER_NOT_P = "CommutatorOrderNotP"
    UNREDUCED_EXPONENT = "UnreducedExponent"
    UNKNOWN_FACTOR_NAME = "UnknownFactorName"


@dataclass(frozen=True)
class Violation:
    kind: ViolationKind
    detail: str

    def __str__(self) -> str:
        return f"{self.kind.value}: {self.detail}"


def validate(pres: GroupPresentation) -> List[Violation]:
    """
    Check a presentation against the invariants of the G/Z = C_p x C_p shape.

    Args:
        pres: Structurally well-formed presentation

    Returns:
        List of violations, empty when the presentation is valid
    """
    violations: List[Violation] = []
    if not is_prime(pres.p):
        violations.append(Violation(ViolationKind.NON_PRIME_P, f"p = {pres.p} is not prime"))

    unknown_found = False
    for label, vector in (("comm", pres.s), ("xp", pres.xp), ("yp", pres.yp)):
        for name, value in vector.coords:
            if name not in pres.center:
                unknown_found = True
                violations.append(
                    Violation(
                        ViolationKind.UNKNOWN_FACTOR_NAME,
                        f"{label} uses undeclared factor {name!r}",
                    )
                )
                continue
            order = pres.center.order_of(name)
            if order.is_finite and not 0 <= value < order.n:
                violations.append(
                    Violation(
                        ViolationKind.UNREDUCED_EXPONENT,
                        f"{label} exponent {value} on {name} is outside [0, {order.n})",
                    )
                )

    if not unknown_found:
        s = pres.center.reduce(pres.s)
        if s.is_zero:
            violations.append(Violation(ViolationKind.TRIVIAL_COMMUTATOR, "comm is the identity"))
        else:
            order = central_order(pres.center, s)
            if order.n != pres.p:
                violations.append(
                    Violation(
                        ViolationKind.COMMUTATOR_ORDER_NOT_P,
                        f"comm has order {order}, expected {pres.p}",
                    )
                )

    if violations:
        logger.debug(f"Presentation has {len(violations)} violation(s)")
    return violations
