"""Renders presentations as DSL text or JSON."""

from typing import Literal

from src.abelian import CentralVector, FgAbelian
from src.presentation.document import to_json
from src.presentation.model import GroupPresentation


def format_word(center: FgAbelian, v: CentralVector) -> str:
    """Product of center generators in declaration order, ``1`` when empty."""
    terms = []
    for name in center.names:
        e = v.get(name)
        if e:
            terms.append(name if e == 1 else f"{name}^{e}")
    return " ".join(terms) if terms else "1"


def to_dsl(pres: GroupPresentation) -> str:
    factors = ", ".join(f"{f.name}:{f.order}" for f in pres.center.factors)
    return "\n".join(
        [
            "group {",
            f"  prime {pres.p};",
            f"  center {factors};",
            f"  comm {format_word(pres.center, pres.s)};",
            f"  xp {format_word(pres.center, pres.xp)};",
            f"  yp {format_word(pres.center, pres.yp)}",
            "}",
        ]
    )


def emit(pres: GroupPresentation, fmt: Literal["dsl", "json"] = "dsl") -> str:
    """
    Emit a presentation so that parsing the output gives it back.

    Args:
        pres: Valid presentation
        fmt: ``dsl`` or ``json``

    Returns:
        Rendered text
    """
    if fmt == "json":
        return to_json(pres)
    if fmt == "dsl":
        return to_dsl(pres)
    raise ValueError(f"Unknown format {fmt!r}")
