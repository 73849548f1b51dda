"""Recovers standard generators from any non-commuting pair."""

import logging
from typing import Tuple

from src.engine import Element, multiply, power
from src.errors import CommutingPairError
from src.presentation import GroupPresentation
from src.utils.modular import inv_mod

logger = logging.getLogger(__name__)


def recover_generators(
    pres: GroupPresentation, g1: Element, g2: Element
) -> Tuple[Element, Element]:
    """
    Words x1 = g1^a' g2^b' in xZ and y1 = g1^a g2^b in yZ.

    With g1 = x^a y^b c1 and g2 = x^n y^m c2 the exponents solve
    (a', b') M = (1, 0) and (a, b) M = (0, 1) for M = [[a, b], [n, m]] over F_p,
    which works exactly when am - bn is a unit mod p.

    Raises:
        CommutingPairError: if g1 and g2 commute
    """
    p = pres.p
    a, b = g1.xe, g1.ye
    n, m = g2.xe, g2.ye
    det = (a * m - b * n) % p
    if det == 0:
        raise CommutingPairError(f"{g1} and {g2} commute")
    d = inv_mod(det, p)

    alpha_x, beta_x = (d * m) % p, (-d * b) % p
    alpha_y, beta_y = (-d * n) % p, (d * a) % p
    x1 = multiply(pres, power(pres, g1, alpha_x), power(pres, g2, beta_x))
    y1 = multiply(pres, power(pres, g1, alpha_y), power(pres, g2, beta_y))
    logger.debug(f"Recovered x1 = g1^{alpha_x} g2^{beta_x}, y1 = g1^{alpha_y} g2^{beta_y}")
    return x1, y1
