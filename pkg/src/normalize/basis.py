"""Automorphisms of the center written as explicit basis changes."""

import logging
from dataclasses import dataclass
from math import gcd
from typing import Any, Dict, Iterable, List, Mapping, Sequence, Tuple

from sympy import Matrix

from src.abelian import CentralVector, Factor, FgAbelian, central_order
from src.errors import BasisChangeError
from src.presentation import GroupPresentation
from src.utils.modular import inv_mod, split_order

logger = logging.getLogger(__name__)


def _unit(name: str) -> CentralVector:
    return CentralVector.of({name: 1})


@dataclass(frozen=True)
class BasisChange:
    """
    Isomorphism between two named bases of the same abelian group.

    ``images[k]`` is the k-th factor of ``old`` written over ``new``.
    """

    old: FgAbelian
    new: FgAbelian
    images: Tuple[CentralVector, ...]

    @classmethod
    def identity(cls, group: FgAbelian) -> "BasisChange":
        return cls(group, group, tuple(_unit(n) for n in group.names))

    @property
    def is_identity(self) -> bool:
        return self == BasisChange.identity(self.old)

    def apply(self, v: CentralVector) -> CentralVector:
        total = CentralVector.zero()
        for name, e in v.coords:
            total = total + e * self.images[self.old.index(name)]
        return self.new.reduce(total)

    def compose(self, then: "BasisChange") -> "BasisChange":
        """This change followed by ``then``."""
        if then.old != self.new:
            raise BasisChangeError("Cannot compose basis changes over different groups")
        return BasisChange(self.old, then.new, tuple(then.apply(img) for img in self.images))

    def to_json(self) -> Dict[str, Any]:
        return {
            "old": [[f.name, f.order.to_json()] for f in self.old.factors],
            "new": [[f.name, f.order.to_json()] for f in self.new.factors],
            "images": {n: img.as_dict() for n, img in zip(self.old.names, self.images)},
        }


def compose_all(start: FgAbelian, changes: Iterable[BasisChange]) -> BasisChange:
    total = BasisChange.identity(start)
    for change in changes:
        total = total.compose(change)
    return total


def rebase(pres: GroupPresentation, change: BasisChange) -> GroupPresentation:
    """Rewrite s, x^p and y^p over the new basis; the group is unchanged."""
    if change.old != pres.center:
        raise BasisChangeError("Basis change does not start from this presentation's center")
    return GroupPresentation(
        pres.p, change.new, change.apply(pres.s), change.apply(pres.xp), change.apply(pres.yp)
    )


def _fresh_name(base: str, taken: Iterable[str]) -> str:
    taken = set(taken)
    name = base
    while name in taken:
        name += "_"
    return name


def split_primary(group: FgAbelian, p: int) -> BasisChange:
    """
    Split every factor of order p^k * m (k >= 1, m > 1, p not dividing m) into two.

    The p-part keeps the name and sits in place; the coprime part follows it as
    ``<name>_c``. A generator e maps to a*e_p + b*e_c with a*m + b*p^k = 1 (mod p^k m).
    """
    factors: List[Factor] = []
    images: List[CentralVector] = []
    for f in group.factors:
        if not f.order.is_finite:
            factors.append(f)
            images.append(_unit(f.name))
            continue
        p_order, coprime = split_order(f.order.n, p)
        if p_order == 1 or coprime == 1:
            factors.append(f)
            images.append(_unit(f.name))
            continue
        c_name = _fresh_name(f"{f.name}_c", list(group.names) + [g.name for g in factors])
        factors.append(Factor(f.name, f.order.finite(p_order)))
        factors.append(Factor(c_name, f.order.finite(coprime)))
        alpha = inv_mod(coprime, p_order)
        beta = inv_mod(p_order, coprime)
        images.append(CentralVector.of({f.name: alpha, c_name: beta}))
    new = FgAbelian(tuple(factors))
    return BasisChange(group, new, tuple(new.reduce(img) for img in images))


def replace_factor(group: FgAbelian, target: str, combination: CentralVector) -> BasisChange:
    """
    Replace the generator ``target`` by ``combination`` = u*target + sum c_j e_j.

    Valid when u is a unit modulo the target's order (+-1 if infinite) and, for a
    finite target, every c_j e_j has order dividing the target's order.

    Raises:
        BasisChangeError: if the replacement is not an automorphism
    """
    order = group.order_of(target)
    u = combination.get(target)
    if order.is_finite:
        if gcd(u, order.n) != 1:
            raise BasisChangeError(f"Coefficient {u} of {target} is not a unit mod {order.n}")
        u_inv = inv_mod(u, order.n)
        for name, c in combination.coords:
            if name == target:
                continue
            part = central_order(group, CentralVector.of({name: c}))
            if not part.is_finite or order.n % part.n:
                raise BasisChangeError(
                    f"{name}^{c} does not fit inside <{target}> of order {order.n}"
                )
    else:
        if u not in (1, -1):
            raise BasisChangeError(f"Coefficient {u} of free factor {target} is not +-1")
        u_inv = u

    stray = [n for n in combination.support if n not in group]
    if stray:
        raise BasisChangeError(f"Unknown factors {stray}")

    rest = combination - CentralVector.of({target: u})
    old_target_image = u_inv * _unit(target) - u_inv * rest
    images = tuple(
        group.reduce(old_target_image) if name == target else _unit(name) for name in group.names
    )
    logger.debug(f"Replacing {target} by {combination}")
    return BasisChange(group, group, images)


def scale_factor(group: FgAbelian, name: str, u: int) -> BasisChange:
    return replace_factor(group, name, CentralVector.of({name: u}))


def reorder(group: FgAbelian, names: Sequence[str]) -> BasisChange:
    if sorted(names) != sorted(group.names):
        raise BasisChangeError(f"{list(names)} is not a permutation of {list(group.names)}")
    new = group.restrict(names)
    return BasisChange(group, new, tuple(_unit(n) for n in group.names))


def rename(group: FgAbelian, mapping: Mapping[str, str]) -> BasisChange:
    new_names = [mapping.get(n, n) for n in group.names]
    if len(set(new_names)) != len(new_names):
        raise BasisChangeError(f"Renaming {dict(mapping)} collides")
    new = FgAbelian(tuple(Factor(m, f.order) for m, f in zip(new_names, group.factors)))
    return BasisChange(group, new, tuple(_unit(m) for m in new_names))


def transform_free(
    group: FgAbelian, names: Sequence[str], rows: Sequence[Sequence[int]]
) -> BasisChange:
    """
    Change basis on free factors: the k-th new generator is sum_j rows[k][j] * names[j].

    The new generators reuse ``names`` in order.

    Raises:
        BasisChangeError: if a factor is finite or the matrix is not unimodular
    """
    if any(group.order_of(n).is_finite for n in names):
        raise BasisChangeError(f"transform_free needs free factors, got {list(names)}")
    matrix = Matrix(rows)
    det = matrix.det()
    if det not in (1, -1):
        raise BasisChangeError(f"Matrix {rows} is not unimodular")
    inverse = matrix.adjugate() * det
    images = []
    for name in group.names:
        if name in names:
            j = list(names).index(name)
            images.append(
                CentralVector.of({names[k]: int(inverse[j, k]) for k in range(len(names))})
            )
        else:
            images.append(_unit(name))
    return BasisChange(group, group, tuple(images))
