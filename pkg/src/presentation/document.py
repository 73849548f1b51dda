"""JSON wire format for presentations."""

import json
import logging
from typing import Dict, List, Literal, Union

from pydantic import BaseModel, ConfigDict
from pydantic import ValidationError as SchemaError

from src.abelian import CentralVector, FgAbelian
from src.errors import PresentationSyntaxError
from src.presentation.model import GroupPresentation
from src.presentation.parser import build_presentation

logger = logging.getLogger(__name__)


class FactorDocument(BaseModel):
    model_config = ConfigDict(frozen=True)

    name: str
    order: Union[int, Literal["inf"]]


class PresentationDocument(BaseModel):
    """Schema: {"p", "center": [{"name", "order"}], "s", "xp", "yp"}."""

    model_config = ConfigDict(frozen=True)

    p: int
    center: List[FactorDocument]
    s: Dict[str, int]
    xp: Dict[str, int]
    yp: Dict[str, int]

    @classmethod
    def from_presentation(cls, pres: GroupPresentation) -> "PresentationDocument":
        return cls(
            p=pres.p,
            center=[
                FactorDocument(name=f.name, order=f.order.to_json()) for f in pres.center.factors
            ],
            s=pres.s.as_dict(),
            xp=pres.xp.as_dict(),
            yp=pres.yp.as_dict(),
        )

    def to_presentation(self) -> GroupPresentation:
        """Raw presentation; callers reduce and validate."""
        trivial = {f.name for f in self.center if f.order == 1}

        def vector(mapping: Dict[str, int]) -> CentralVector:
            return CentralVector.of({k: v for k, v in mapping.items() if k not in trivial})

        return GroupPresentation(
            p=self.p,
            center=FgAbelian.of((f.name, f.order) for f in self.center),
            s=vector(self.s),
            xp=vector(self.xp),
            yp=vector(self.yp),
        )


def to_json(pres: GroupPresentation) -> str:
    """Compact JSON with sorted keys, so equal presentations give identical bytes."""
    document = PresentationDocument.from_presentation(pres)
    return json.dumps(document.model_dump(), sort_keys=True)


def from_json(text: str) -> GroupPresentation:
    """Parse and validate a JSON presentation document."""
    try:
        document = PresentationDocument.model_validate_json(text)
    except SchemaError as exc:
        message = exc.errors()[0]["msg"]
        raise PresentationSyntaxError(f"Invalid presentation document: {message}") from exc
    if any(f.order != "inf" and f.order < 1 for f in document.center):
        raise PresentationSyntaxError("Factor order must be positive")
    try:
        raw = document.to_presentation()
    except ValueError as exc:
        raise PresentationSyntaxError(str(exc)) from exc
    return build_presentation(raw)
