"""Exact element arithmetic in a presented group."""

import logging
from dataclasses import dataclass
from typing import Optional

from src.abelian import CentralVector, CyclicOrder, central_order
from src.engine.collector import Raw, collector_for
from src.errors import MixedPresentationsError
from src.presentation import GroupPresentation

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Element:
    """Normal form x^xe y^ye z tagged with the presentation it belongs to."""

    xe: int
    ye: int
    z: CentralVector
    group: int

    def __str__(self) -> str:
        parts = []
        if self.xe:
            parts.append("x" if self.xe == 1 else f"x^{self.xe}")
        if self.ye:
            parts.append("y" if self.ye == 1 else f"y^{self.ye}")
        if not self.z.is_zero or not parts:
            parts.append(str(self.z))
        return " ".join(parts)


def _fingerprint(pres: GroupPresentation) -> int:
    return hash(pres)


def _to_raw(pres: GroupPresentation, g: Element) -> Raw:
    if g.group != _fingerprint(pres):
        raise MixedPresentationsError(f"Element {g} does not belong to {pres}")
    return g.xe, g.ye, tuple(g.z.get(n) for n in pres.center.names)


def _from_raw(pres: GroupPresentation, raw: Raw) -> Element:
    i, j, z = raw
    return Element(i, j, CentralVector(tuple(zip(pres.center.names, z))), _fingerprint(pres))


def make_element(
    pres: GroupPresentation, i: int = 0, j: int = 0, z: Optional[CentralVector] = None
) -> Element:
    """The element x^i y^j z for arbitrary integers i, j, collected to normal form."""
    z = z or CentralVector.zero()
    stray = [n for n in z.support if n not in pres.center]
    if stray:
        raise KeyError(f"Unknown center factors {stray}")
    c = collector_for(pres)
    zero = c.identity()[2]
    x_part = c.power((1, 0, zero), i)
    y_part = c.power((0, 1, zero), j)
    central = (0, 0, c.reduce([z.get(n) for n in pres.center.names]))
    return _from_raw(pres, c.multiply(c.multiply(x_part, y_part), central))


def identity(pres: GroupPresentation) -> Element:
    return make_element(pres)


def generator_x(pres: GroupPresentation) -> Element:
    return make_element(pres, 1, 0)


def generator_y(pres: GroupPresentation) -> Element:
    return make_element(pres, 0, 1)


def central_element(pres: GroupPresentation, z: CentralVector) -> Element:
    return make_element(pres, 0, 0, z)


def multiply(pres: GroupPresentation, g: Element, h: Element) -> Element:
    c = collector_for(pres)
    return _from_raw(pres, c.multiply(_to_raw(pres, g), _to_raw(pres, h)))


def inverse(pres: GroupPresentation, g: Element) -> Element:
    c = collector_for(pres)
    return _from_raw(pres, c.inverse(_to_raw(pres, g)))


def power(pres: GroupPresentation, g: Element, n: int) -> Element:
    c = collector_for(pres)
    return _from_raw(pres, c.power(_to_raw(pres, g), n))


def commutator(pres: GroupPresentation, g: Element, h: Element) -> CentralVector:
    """[g, h] = g^-1 h^-1 g h = s^(i_g j_h - j_g i_h)."""
    c = collector_for(pres)
    z = c.commutator(_to_raw(pres, g), _to_raw(pres, h))
    return CentralVector(tuple(zip(pres.center.names, z)))


def is_central(pres: GroupPresentation, g: Element) -> bool:
    _to_raw(pres, g)
    return g.xe == 0 and g.ye == 0


def element_order(pres: GroupPresentation, g: Element) -> CyclicOrder:
    """
    Order of g.

    Central elements have their order in Z. A non-central g has g^p central and
    g^k non-central for 0 < k < p, so its order is p times the order of g^p.
    """
    if is_central(pres, g):
        return central_order(pres.center, g.z)
    w = power(pres, g, pres.p)
    inner = central_order(pres.center, w.z)
    if not inner.is_finite:
        return inner
    return CyclicOrder(pres.p * inner.n)
