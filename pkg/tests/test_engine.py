"""Tests for element arithmetic."""

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from src.abelian import CentralVector, CyclicOrder
from src.classify import canonical_presentation
from src.cli import enumerate_forms
from src.engine import (
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
from src.errors import MixedPresentationsError
from src.oracle import TableBuilder, build_table
from src.presentation import parse

# Rank-2 core over p = 3 with x^3 = t1 and y^3 = t2.
CORE = parse("group { prime 3; center t1:9, t2:3; comm t1^3; xp t1; yp t2 }")

elements = st.builds(
    lambda i, j, a, b: make_element(CORE, i, j, CentralVector.of(t1=a, t2=b)),
    st.integers(0, 2),
    st.integers(0, 2),
    st.integers(0, 8),
    st.integers(0, 2),
)

ALL_FORMS = list(enumerate_forms(2, 2, range(1, 10))) + list(enumerate_forms(3, 2, range(1, 10)))
SMALL_FORMS = [
    f for f in ALL_FORMS if f.family in (1, 2, 3, 4, 7) and canonical_presentation(f).order() <= 81
]


def test_generators_commute_up_to_s(dihedral):
    """Test that [x, y] is the commutator relation."""
    x, y = generator_x(dihedral), generator_y(dihedral)
    assert commutator(dihedral, x, y) == dihedral.s
    assert commutator(dihedral, x, x).is_zero


def test_dihedral_orders(dihedral):
    """Test element orders in the dihedral group."""
    x, y = generator_x(dihedral), generator_y(dihedral)
    assert element_order(dihedral, x) == CyclicOrder(2)
    assert element_order(dihedral, multiply(dihedral, x, y)) == CyclicOrder(4)
    assert element_order(dihedral, identity(dihedral)) == CyclicOrder(1)


def test_quaternion_orders(quaternion):
    """Test that x and y have order 4 in the quaternion group."""
    assert element_order(quaternion, generator_x(quaternion)) == CyclicOrder(4)
    assert element_order(quaternion, generator_y(quaternion)) == CyclicOrder(4)


def test_pth_power_lands_in_center():
    """Test that x^p and y^p are the presented central values."""
    assert make_element(CORE, 3, 0) == central_element(CORE, CentralVector.of(t1=1))
    assert power(CORE, generator_y(CORE), 3) == central_element(CORE, CentralVector.of(t2=1))
    assert is_central(CORE, power(CORE, generator_x(CORE), 3))
    assert not is_central(CORE, generator_x(CORE))


def test_infinite_element_order(make_canonical):
    """Test that x has infinite order when x^p is a free generator."""
    pres = make_canonical(8, 2, 1, 1)
    assert element_order(pres, generator_x(pres)) == CyclicOrder(4)
    assert not element_order(pres, generator_y(pres)).is_finite


def test_mixed_presentations(dihedral, quaternion):
    """Test combining elements of different presentations."""
    with pytest.raises(MixedPresentationsError):
        multiply(dihedral, generator_x(dihedral), generator_x(quaternion))


def test_unknown_central_factor(dihedral):
    """Test building an element over an undeclared factor."""
    with pytest.raises(KeyError):
        central_element(dihedral, CentralVector.of(w=1))


@settings(max_examples=60, deadline=None)
@given(elements, elements, elements)
def test_associativity(a, b, c):
    """Test (ab)c = a(bc)."""
    assert multiply(CORE, multiply(CORE, a, b), c) == multiply(CORE, a, multiply(CORE, b, c))


@settings(max_examples=60, deadline=None)
@given(elements)
def test_inverse(g):
    """Test g g^-1 = g^-1 g = 1."""
    one = identity(CORE)
    assert multiply(CORE, g, inverse(CORE, g)) == one
    assert multiply(CORE, inverse(CORE, g), g) == one


@settings(max_examples=40, deadline=None)
@given(elements, st.integers(-5, 20))
def test_power_matches_repeated_product(g, n):
    """Test g^n against |n| multiplications by g or its inverse."""
    step = g if n >= 0 else inverse(CORE, g)
    expected = identity(CORE)
    for _ in range(abs(n)):
        expected = multiply(CORE, expected, step)
    assert power(CORE, g, n) == expected


@settings(max_examples=60, deadline=None)
@given(elements, elements)
def test_commutator_formula(g, h):
    """Test [g, h] = s^(i_g j_h - j_g i_h)."""
    det = g.xe * h.ye - g.ye * h.xe
    expected = CORE.center.reduce(det * CORE.s)
    assert commutator(CORE, g, h) == expected
    left = multiply(CORE, multiply(CORE, inverse(CORE, g), inverse(CORE, h)), multiply(CORE, g, h))
    assert left == central_element(CORE, expected)


def _random_element(pres, rng):
    coords = {
        f.name: rng.randrange(f.order.n) if f.order.is_finite else rng.randint(-5, 5)
        for f in pres.center.factors
    }
    i, j = rng.randrange(pres.p), rng.randrange(pres.p)
    return make_element(pres, i, j, CentralVector.of(coords))


@pytest.mark.parametrize("form", SMALL_FORMS, ids=str)
def test_table_matches_multiply(form):
    """Test that every small canonical table is associative and agrees with multiply."""
    pres = canonical_presentation(form)
    table = build_table(pres)
    assert table.is_associative()
    rows = TableBuilder(pres).elements()
    elements = [
        make_element(pres, int(r[0]), int(r[1]), pres.center.vector([int(v) for v in r[2:]]))
        for r in rows
    ]
    index = {g: k for k, g in enumerate(elements)}
    for a, g in enumerate(elements):
        assert [index[multiply(pres, g, h)] for h in elements] == table.table[a].tolist()


@pytest.mark.parametrize("form", ALL_FORMS, ids=str)
def test_commutator_formula_on_random_pairs(form):
    """Test [g, h] = s^(i_g j_h - j_g i_h) on 1000 seeded pairs of every canonical instance."""
    pres = canonical_presentation(form)
    rng = random.Random(str(form))
    for _ in range(1000):
        g, h = _random_element(pres, rng), _random_element(pres, rng)
        det = g.xe * h.ye - g.ye * h.xe
        expected = pres.center.reduce(det * pres.s)
        assert commutator(pres, g, h) == expected
        left = multiply(pres, inverse(pres, g), inverse(pres, h))
        assert multiply(pres, left, multiply(pres, g, h)) == central_element(pres, expected)
