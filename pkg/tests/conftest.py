"""Shared fixtures: small presentations and hand-built reference tables."""

import random
from itertools import product

import pytest

from src.abelian import FgAbelian
from src.classify import CanonicalForm, canonical_presentation
from src.oracle import MulTable
from src.presentation import GroupPresentation, parse
from src.utils import load_config

DIHEDRAL_TEXT = "group { prime 2; center t1:2; comm t1; xp 1; yp 1 }"
QUATERNION_TEXT = "group { prime 2; center t1:2; comm t1; xp t1; yp t1 }"


def dihedral_table(n: int = 4) -> MulTable:
    """Symmetries of the n-gon as pairs (rotation, flip)."""

    def op(a, b):
        r1, f1 = a
        r2, f2 = b
        return ((r1 + (-r2 if f1 else r2)) % n, f1 ^ f2)

    return MulTable.from_cayley(list(product(range(n), (0, 1))), op)


def quaternion_table() -> MulTable:
    """The eight unit quaternions +-1, +-i, +-j, +-k."""

    def op(a, b):
        a1, b1, c1, d1 = a
        a2, b2, c2, d2 = b
        return (
            a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
            a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
            a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
            a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
        )

    units = []
    for k in range(4):
        for sign in (1, -1):
            units.append(tuple(sign if i == k else 0 for i in range(4)))
    return MulTable.from_cayley(units, op)


def canonical(family: int, p: int, *m: int, twist: int = 1, torsion=(), free_rank: int = 0):
    complement = {"torsion": tuple(torsion), "free_rank": free_rank}
    form = CanonicalForm(family=family, p=p, m=m, twist=twist, complement=complement)
    return canonical_presentation(form)


def random_presentation(
    rng: random.Random, p: int, max_order: int = 512, max_rank: int = 5, free_rank: int = 0
) -> GroupPresentation:
    """A valid presentation over g0, g1, ... with |Z| p^2 <= max_order on the finite part."""
    budget = max_order // (p * p)
    orders = [rng.choice([n for n in (p, 2 * p, 3 * p, p * p) if n <= budget])]
    size = orders[0]
    while len(orders) + free_rank < max_rank and rng.random() < 0.7:
        fitting = [n for n in (2, 3, 4, 5, 6, 8, 9) if size * n <= budget]
        if not fitting:
            break
        orders.append(rng.choice(fitting))
        size *= orders[-1]
    pairs = [(f"g{i}", n) for i, n in enumerate(orders)]
    pairs += [(f"g{len(orders) + k}", "inf") for k in range(free_rank)]
    center = FgAbelian.of(pairs)

    s = [rng.randrange(p) * (n // p) if n % p == 0 else 0 for n in orders]
    s[0] = rng.randrange(1, p) * (orders[0] // p)
    s += [0] * free_rank
    xp = [rng.randrange(n) for n in orders] + [rng.randint(-5, 5) for _ in range(free_rank)]
    yp = [rng.randrange(n) for n in orders] + [rng.randint(-5, 5) for _ in range(free_rank)]
    return GroupPresentation(p, center, center.vector(s), center.vector(xp), center.vector(yp))


@pytest.fixture
def config():
    cfg = load_config()
    cfg["scramble"]["rounds"] = 5
    return cfg


@pytest.fixture
def dihedral():
    return parse(DIHEDRAL_TEXT)


@pytest.fixture
def quaternion():
    return parse(QUATERNION_TEXT)


@pytest.fixture
def heisenberg():
    """Upper unitriangular 3x3 matrices over F_3."""
    return canonical(1, 3, 1)


@pytest.fixture
def dihedral_cayley():
    return dihedral_table(4)


@pytest.fixture
def quaternion_cayley():
    return quaternion_table()


@pytest.fixture
def make_canonical():
    return canonical


@pytest.fixture
def make_random():
    return random_presentation
