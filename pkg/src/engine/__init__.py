"""Element arithmetic module."""

from src.engine.arithmetic import (
    Element,
    central_element,
    commutator,
    element_order,
    generator_x,
    generator_y,
    identity,
    inverse,
    is_central,
    make_element,
    multiply,
    power,
)
from src.engine.collector import Collector, collector_for

__all__ = [
    "Collector",
    "Element",
    "central_element",
    "collector_for",
    "commutator",
    "element_order",
    "generator_x",
    "generator_y",
    "identity",
    "inverse",
    "is_central",
    "make_element",
    "multiply",
    "power",
]
