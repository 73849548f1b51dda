"""Canonical forms of the nine families and their presentations."""

from typing import Any, Dict, List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, model_validator

from src.abelian import CentralVector, FgAbelian, invariant_factors
from src.presentation import GroupPresentation

# family -> (number of p-power parameters, number of infinite core factors)
FAMILY_SHAPES: Dict[int, Tuple[int, int]] = {
    1: (1, 0),
    2: (1, 0),
    3: (2, 0),
    4: (2, 0),
    5: (1, 1),
    6: (1, 1),
    7: (3, 0),
    8: (2, 1),
    9: (1, 2),
}

# Core factor names, in canonical order.
FAMILY_NAMES: Dict[int, Tuple[str, ...]] = {
    1: ("t1",),
    2: ("t1",),
    3: ("t1", "t2"),
    4: ("t1", "t2"),
    5: ("t1", "u1"),
    6: ("t1", "u1"),
    7: ("t1", "t2", "t3"),
    8: ("t1", "t2", "u1"),
    9: ("t1", "u1", "u2"),
}


class ComplementInvariants(BaseModel):
    """Invariant factors and free rank of the abelian complement A."""

    model_config = ConfigDict(frozen=True)

    torsion: Tuple[int, ...] = ()
    free_rank: int = Field(default=0, ge=0)

    @classmethod
    def of(cls, group: FgAbelian) -> "ComplementInvariants":
        torsion, free = invariant_factors(group)
        return cls(torsion=tuple(torsion), free_rank=free)

    @property
    def is_trivial(self) -> bool:
        return not self.torsion and not self.free_rank

    def group(self) -> FgAbelian:
        pairs: List[Tuple[str, Any]] = [(f"a{i + 1}", d) for i, d in enumerate(self.torsion)]
        pairs += [(f"f{i + 1}", "inf") for i in range(self.free_rank)]
        return FgAbelian.of(pairs)


class CanonicalForm(BaseModel):
    """Family tag, parameters and complement: a complete isomorphism invariant."""

    model_config = ConfigDict(frozen=True)

    family: int = Field(ge=1, le=9)
    p: int = Field(ge=2)
    m: Tuple[int, ...]
    twist: int = Field(default=1, ge=1)
    complement: ComplementInvariants = Field(default_factory=ComplementInvariants)

    @model_validator(mode="after")
    def _check_arity(self) -> "CanonicalForm":
        arity, _ = FAMILY_SHAPES[self.family]
        if len(self.m) != arity:
            raise ValueError(f"Family {self.family} takes {arity} parameter(s), got {list(self.m)}")
        if any(m < 1 for m in self.m):
            raise ValueError(f"Parameters must be >= 1, got {list(self.m)}")
        if self.family == 7 and self.m[1] < self.m[2]:
            raise ValueError(f"Family 7 reports m2 >= m3, got {list(self.m)}")
        if self.family != 6 and self.twist != 1:
            raise ValueError(f"Only family 6 carries a twist, got {self.twist}")
        if self.family == 6 and self.twist > max(1, (self.p - 1) // 2):
            raise ValueError(f"Twist {self.twist} outside 1..{(self.p - 1) // 2}")
        return self

    @property
    def infinite_rank(self) -> int:
        return FAMILY_SHAPES[self.family][1]

    @property
    def m1(self) -> int:
        return self.m[0]

    @property
    def m2(self) -> Optional[int]:
        return self.m[1] if len(self.m) > 1 else None

    @property
    def m3(self) -> Optional[int]:
        return self.m[2] if len(self.m) > 2 else None

    def without_complement(self) -> "CanonicalForm":
        return self.model_copy(update={"complement": ComplementInvariants()})

    def to_json(self, moves: Optional[List[Dict[str, Any]]] = None) -> Dict[str, Any]:
        data: Dict[str, Any] = {
            "family": self.family,
            "p": self.p,
            "m": list(self.m),
            "infinite_rank": self.infinite_rank,
            "complement": {
                "torsion": list(self.complement.torsion),
                "free_rank": self.complement.free_rank,
            },
        }
        if self.family == 6:
            data["twist"] = self.twist
        if moves is not None:
            data["moves"] = moves
        return data

    def __str__(self) -> str:
        params = ",".join(str(m) for m in self.m)
        text = f"G{self.family}(p={self.p}; m={params}"
        if self.family == 6 and self.twist != 1:
            text += f"; twist={self.twist}"
        if not self.complement.is_trivial:
            text += f"; A={list(self.complement.torsion)}+Z^{self.complement.free_rank}"
        return text + ")"


def canonical_presentation(form: CanonicalForm, with_complement: bool = True) -> GroupPresentation:
    """
    The table row of ``form``: s = t1^(p^(m1-1)) and the family's x^p, y^p.

    Args:
        form: Canonical form
        with_complement: Append the complement as factors a1, a2, ... and f1, f2, ...

    Returns:
        Presentation whose center lists the core factors first
    """
    p = form.p
    names = FAMILY_NAMES[form.family]
    finite = iter(form.m)
    orders: List[Tuple[str, Any]] = []
    for name in names:
        orders.append((name, "inf" if name.startswith("u") else p ** next(finite)))
    center = FgAbelian.of(orders)

    def unit(name: str, k: int = 1) -> CentralVector:
        return CentralVector.of({name: k})

    family = form.family
    one = CentralVector.zero()
    if family == 1:
        xp, yp = one, one
    elif family == 2:
        xp, yp = unit("t1"), unit("t1")
    elif family in (3, 4, 5, 6):
        xp = one if family in (3, 5) else unit("t1", form.twist)
        yp = unit(names[1])
    else:
        xp, yp = unit(names[1]), unit(names[2])

    if with_complement:
        center = center.extend(form.complement.group())
    s = unit("t1", p ** (form.m1 - 1))
    return GroupPresentation(p, center, s, xp, yp)


def canonical_iso(c1: CanonicalForm, c2: CanonicalForm) -> bool:
    """Isomorphism of the groups behind two canonical forms."""
    return c1 == c2


def describe_difference(c1: CanonicalForm, c2: CanonicalForm) -> Optional[str]:
    """
    First invariant separating two canonical forms, or None when they agree.

    Checked in order: family, p, m-vector, twist, free rank, complement.
    """
    if c1.family != c2.family:
        pair = {c1.family, c2.family}
        if c1.p == c2.p and c1.m == c2.m:
            if pair in ({3, 4}, {5, 6}):
                return "non-central order-p element count differs"
            if pair == {1, 2}:
                if c1.p == 2 and c1.m == (1,):
                    return "order-2 element count differs"
                return "exponent differs"
        if c1.infinite_rank != c2.infinite_rank:
            return f"free rank of the center differs ({c1.infinite_rank} vs {c2.infinite_rank})"
        return f"family differs ({c1.family} vs {c2.family})"
    if c1.p != c2.p:
        return f"p differs ({c1.p} vs {c2.p})"
    if c1.m != c2.m:
        return f"m-vector differs ({list(c1.m)} vs {list(c2.m)})"
    if c1.twist != c2.twist:
        return f"twist differs ({c1.twist} vs {c2.twist})"
    if c1.complement.free_rank != c2.complement.free_rank:
        return (
            f"complement free rank differs "
            f"({c1.complement.free_rank} vs {c2.complement.free_rank})"
        )
    if c1.complement != c2.complement:
        return (
            f"complement differs ({list(c1.complement.torsion)} vs {list(c2.complement.torsion)})"
        )
    return None

