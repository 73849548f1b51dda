"""Finitely generated abelian groups with named cyclic factors."""

import logging
from dataclasses import dataclass, field
from math import gcd, lcm
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

from sympy import Matrix

from src.abelian.smith_form import smith_normal_form
from src.errors import ZeroVectorError
from src.utils.modular import split_order

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CyclicOrder:
    """Order of a cyclic group or element: a positive integer, or infinite when ``n`` is None."""

    n: Optional[int] = None

    def __post_init__(self):
        if self.n is not None and self.n < 1:
            raise ValueError(f"Cyclic order must be positive, got {self.n}")

    @classmethod
    def finite(cls, n: int) -> "CyclicOrder":
        return cls(int(n))

    @classmethod
    def infinite(cls) -> "CyclicOrder":
        return cls(None)

    @classmethod
    def parse(cls, token: Union[str, int, None, "CyclicOrder"]) -> "CyclicOrder":
        if isinstance(token, CyclicOrder):
            return token
        if token is None or (isinstance(token, str) and token.strip().lower() == "inf"):
            return cls(None)
        return cls(int(token))

    @property
    def is_finite(self) -> bool:
        return self.n is not None

    def to_json(self) -> Union[int, str]:
        return "inf" if self.n is None else self.n

    def __str__(self) -> str:
        return "inf" if self.n is None else str(self.n)


INFINITE = CyclicOrder(None)

OrderLike = Union[int, str, None, CyclicOrder]


@dataclass(frozen=True)
class Factor:
    name: str
    order: CyclicOrder


def _normalize_coords(items: Iterable[Tuple[str, int]]) -> Tuple[Tuple[str, int], ...]:
    merged: Dict[str, int] = {}
    for name, value in items:
        merged[name] = merged.get(name, 0) + int(value)
    return tuple(sorted((k, v) for k, v in merged.items() if v))


@dataclass(frozen=True)
class CentralVector:
    """
    Exponent vector over a named center basis.

    Stored as sorted (name, exponent) pairs with zeros dropped, so two vectors are
    equal exactly when they agree on every name. Reduction modulo factor orders is
    the owning group's job (see ``FgAbelian.reduce``).
    """

    coords: Tuple[Tuple[str, int], ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "coords", _normalize_coords(self.coords))

    @classmethod
    def of(cls, mapping: Optional[Mapping[str, int]] = None, **exponents: int) -> "CentralVector":
        items = list((mapping or {}).items()) + list(exponents.items())
        return cls(tuple(items))

    @classmethod
    def zero(cls) -> "CentralVector":
        return cls(())

    def get(self, name: str) -> int:
        for key, value in self.coords:
            if key == name:
                return value
        return 0

    @property
    def support(self) -> Tuple[str, ...]:
        return tuple(name for name, _ in self.coords)

    @property
    def is_zero(self) -> bool:
        return not self.coords

    def as_dict(self) -> Dict[str, int]:
        return dict(self.coords)

    def __add__(self, other: "CentralVector") -> "CentralVector":
        return CentralVector(self.coords + other.coords)

    def __neg__(self) -> "CentralVector":
        return CentralVector(tuple((k, -v) for k, v in self.coords))

    def __sub__(self, other: "CentralVector") -> "CentralVector":
        return self + (-other)

    def __mul__(self, k: int) -> "CentralVector":
        return CentralVector(tuple((name, k * v) for name, v in self.coords))

    __rmul__ = __mul__

    def __str__(self) -> str:
        if not self.coords:
            return "1"
        return " ".join(name if v == 1 else f"{name}^{v}" for name, v in self.coords)


@dataclass(frozen=True)
class FgAbelian:
    """Finitely generated abelian group as an ordered list of named cyclic factors."""

    factors: Tuple[Factor, ...] = field(default_factory=tuple)

    def __post_init__(self):
        kept = tuple(f for f in self.factors if f.order.n != 1)
        names = [f.name for f in kept]
        if len(set(names)) != len(names):
            raise ValueError(f"Duplicate factor names in {names}")
        object.__setattr__(self, "factors", kept)

    @classmethod
    def of(cls, pairs: Iterable[Tuple[str, OrderLike]] = ()) -> "FgAbelian":
        return cls(tuple(Factor(name, CyclicOrder.parse(order)) for name, order in pairs))

    @classmethod
    def from_orders(cls, orders: Iterable[OrderLike], prefix: str = "e") -> "FgAbelian":
        return cls.of((f"{prefix}{i + 1}", order) for i, order in enumerate(orders))

    @property
    def names(self) -> Tuple[str, ...]:
        return tuple(f.name for f in self.factors)

    @property
    def rank(self) -> int:
        return len(self.factors)

    @property
    def free_rank(self) -> int:
        return sum(1 for f in self.factors if not f.order.is_finite)

    @property
    def is_finite(self) -> bool:
        return self.free_rank == 0

    def __contains__(self, name: str) -> bool:
        return any(f.name == name for f in self.factors)

    def index(self, name: str) -> int:
        for i, f in enumerate(self.factors):
            if f.name == name:
                return i
        raise KeyError(f"Unknown factor {name!r}")

    def order_of(self, name: str) -> CyclicOrder:
        return self.factors[self.index(name)].order

    def cardinality(self) -> Optional[int]:
        """Number of elements, or None when a factor is infinite."""
        if not self.is_finite:
            return None
        size = 1
        for f in self.factors:
            size *= f.order.n
        return size

    def reduce(self, v: CentralVector) -> CentralVector:
        """Reduce finite coordinates into [0, n); unknown names raise KeyError."""
        items = []
        for name, value in v.coords:
            order = self.order_of(name)
            items.append((name, value % order.n if order.is_finite else value))
        return CentralVector(tuple(items))

    def is_reduced(self, v: CentralVector) -> bool:
        return all(name in self for name in v.support) and self.reduce(v) == v

    def coordinates(self, v: CentralVector) -> List[int]:
        return [v.get(name) for name in self.names]

    def vector(self, coords: Sequence[int]) -> CentralVector:
        return self.reduce(CentralVector(tuple(zip(self.names, coords))))

    def restrict(self, names: Iterable[str]) -> "FgAbelian":
        wanted = list(names)
        return FgAbelian(tuple(self.factors[self.index(n)] for n in wanted))

    def extend(self, other: "FgAbelian") -> "FgAbelian":
        return FgAbelian(self.factors + other.factors)

    def __str__(self) -> str:
        if not self.factors:
            return "1"
        return " x ".join(f"{f.name}:{f.order}" for f in self.factors)


def invariant_factors(group: FgAbelian) -> Tuple[List[int], int]:
    """
    Invariant factors of the torsion part and the free rank.

    Args:
        group: Abelian group

    Returns:
        (d_1 | d_2 | ... with every d_i >= 2, free rank)
    """
    orders = [f.order.n for f in group.factors if f.order.is_finite]
    size = len(orders)
    relation = [[orders[i] if i == j else 0 for j in range(size)] for i in range(size)]
    diagonal = [row[i] for i, row in enumerate(smith_normal_form(relation)[0])] if orders else []
    return [d for d in diagonal if d > 1], group.free_rank


def abelian_iso(a: FgAbelian, b: FgAbelian) -> bool:
    return invariant_factors(a) == invariant_factors(b)


def primary_split(group: FgAbelian, p: int) -> Tuple[FgAbelian, FgAbelian, FgAbelian]:
    """
    Split each factor into its p-part, coprime part and free part.

    A factor whose order has both parts keeps its name on the p-part; the coprime
    part is named ``<name>_c``.

    Returns:
        (B p-torsion, C coprime torsion, F free)
    """
    b_part, c_part, f_part = [], [], []
    for f in group.factors:
        if not f.order.is_finite:
            f_part.append((f.name, f.order))
            continue
        p_order, coprime = split_order(f.order.n, p)
        if p_order > 1:
            b_part.append((f.name, p_order))
        if coprime > 1:
            c_part.append((f.name if p_order == 1 else f"{f.name}_c", coprime))
    return FgAbelian.of(b_part), FgAbelian.of(c_part), FgAbelian.of(f_part)


def adapted_basis(rank: int, w: Sequence[int]) -> Tuple[List[List[int]], int]:
    """
    Basis of Z^rank whose first vector spans the pure closure of w.

    Args:
        rank: Rank of the free group
        w: Nonzero integer vector of length ``rank``

    Returns:
        (unimodular basis rows u_1..u_r, alpha) with w = alpha * u_1 and alpha = gcd(w)
    """
    if len(w) != rank or rank < 1:
        raise ValueError(f"Vector {list(w)} does not have length {rank}")
    if not any(w):
        raise ZeroVectorError("Cannot adapt a basis to the zero vector")

    alpha = 0
    for x in w:
        alpha = gcd(alpha, x)
    u1 = [x // alpha for x in w]

    _, _, v = smith_normal_form([list(w)])
    v_matrix = Matrix(v)
    inverse = v_matrix.adjugate() * v_matrix.det()
    basis = [[int(inverse[i, j]) for j in range(rank)] for i in range(rank)]
    # The first row of V^-1 is u_1 up to sign.
    basis[0] = u1
    return basis, alpha


def central_order(group: FgAbelian, v: CentralVector) -> CyclicOrder:
    """Order of v in the group: infinite on any nonzero free coordinate, else an lcm."""
    order = 1
    for name, value in v.coords:
        factor_order = group.order_of(name)
        if not factor_order.is_finite:
            return INFINITE
        n = factor_order.n
        order = lcm(order, n // gcd(value % n, n))
    return CyclicOrder(order)
