"""Tests for the brute-force oracle on small finite groups."""

import random
import time
from collections import Counter
from itertools import combinations

import numpy as np
import pytest

from src.classify import canonical_presentation, classify, scramble
from src.cli import enumerate_forms
from src.errors import InfiniteGroupError, TooLargeError
from src.oracle import (
    MulTable,
    brute_iso,
    build_table,
    center_and_quotient,
    center_of,
    central_generators,
    conjugacy_representatives,
    derived_subgroup,
    direct_factor_search,
    exponent_of,
    export_table,
    fingerprints,
    generating_set,
    import_table,
    is_homomorphism,
    order_profile,
    subgroup_closure,
)
from src.presentation import parse

MIXED_CENTER_TEXT = (
    "group { prime 3; center g0:3, g1:3, g2:6; comm g0 g1 g2^4; xp g0^2 g2^2; yp g0 g1 g2 }"
)

FINITE_FORMS = [
    f
    for p in (2, 3)
    for f in enumerate_forms(p, 2, (1, 2, 3, 4, 7))
    if canonical_presentation(f).order() <= 729
]
SMALL_FORMS = [f for f in FINITE_FORMS if canonical_presentation(f).order() <= 256]


@pytest.fixture(scope="module")
def canonical_table():
    cache = {}

    def get(form):
        key = str(form)
        if key not in cache:
            cache[key] = build_table(canonical_presentation(form))
        return cache[key]

    return get


def test_dihedral_profile(dihedral):
    """Test the element order census of D4."""
    profile = order_profile(build_table(dihedral))
    assert profile.as_dict() == {1: 1, 2: 5, 4: 2}
    assert profile.noncentral_count(2) == 4


def test_quaternion_profile(quaternion):
    """Test the element order census of Q8."""
    assert order_profile(build_table(quaternion)).as_dict() == {1: 1, 2: 1, 4: 6}


def test_table_is_a_group(make_canonical):
    """Test latin square and associativity on a table with a mixed center."""
    table = build_table(make_canonical(3, 2, 2, 1, torsion=(3,)))
    assert table.n == 96
    assert table.is_latin()
    assert table.is_associative()
    assert table.is_associative(samples=5000, seed=3)


def test_generator_indices(dihedral):
    """Test that gens lists x, y and the center generators."""
    table = build_table(dihedral)
    x, y, t1 = table.gens
    assert table.labels[x] == "x"
    assert table.labels[y] == "y"
    assert table.labels[t1] == "t1"
    assert table.labels[0] == "1"


def test_bounds(dihedral, make_canonical):
    """Test the size and finiteness guards."""
    with pytest.raises(TooLargeError):
        build_table(dihedral, max_order=4)
    with pytest.raises(InfiniteGroupError):
        build_table(make_canonical(5, 3, 1))


def test_center_and_quotient(dihedral, heisenberg):
    """Test G/Z = C_q x C_q detection."""
    center, ok = center_and_quotient(build_table(dihedral))
    assert len(center) == 2 and ok
    center, ok = center_and_quotient(build_table(heisenberg))
    assert len(center) == 3 and ok
    cyclic = MulTable.from_cayley(range(6), lambda a, b: (a + b) % 6)
    center, ok = center_and_quotient(cyclic)
    assert len(center) == 6 and not ok


def test_exponent(heisenberg, make_canonical, quaternion):
    """Test exponents of the Heisenberg group, its twisted sibling and Q8."""
    assert exponent_of(build_table(heisenberg)) == 3
    assert exponent_of(build_table(make_canonical(2, 3, 1))) == 9
    assert exponent_of(build_table(quaternion)) == 4


def test_subgroups(dihedral):
    """Test the derived subgroup and generating sets."""
    table = build_table(dihedral)
    assert len(derived_subgroup(table)) == 2
    assert len(subgroup_closure(table, generating_set(table))) == table.n
    assert list(center_of(table)) == list(derived_subgroup(table))


def test_iso_with_hand_built_tables(dihedral, quaternion, dihedral_cayley, quaternion_cayley):
    """Test isomorphisms to the symmetry and quaternion tables."""
    d4 = build_table(dihedral)
    q8 = build_table(quaternion)
    mapping = brute_iso(d4, dihedral_cayley)
    assert mapping is not None
    assert sorted(mapping) == list(range(8))
    assert is_homomorphism(d4, dihedral_cayley, mapping)
    assert brute_iso(q8, quaternion_cayley) is not None
    assert brute_iso(d4, q8) is None
    assert brute_iso(dihedral_cayley, quaternion_cayley) is None


def test_iso_bound(dihedral):
    """Test the isomorphism size bound."""
    table = build_table(dihedral)
    with pytest.raises(TooLargeError):
        brute_iso(table, table, max_order=4)


def test_families_three_and_four_differ(make_canonical):
    """Test that the non-central order-p census separates families 3 and 4."""
    g3 = build_table(make_canonical(3, 3, 1, 1))
    g4 = build_table(make_canonical(4, 3, 1, 1))
    assert order_profile(g3).noncentral_count(3) != order_profile(g4).noncentral_count(3)
    assert brute_iso(g3, g4) is None


@pytest.mark.parametrize(
    "family, p, m",
    [(2, 2, (2,)), (4, 3, (1, 1)), (7, 2, (1, 1, 1)), (3, 2, (2, 1))],
)
def test_scrambled_tables_are_isomorphic(make_canonical, family, p, m):
    """Test that a scrambled presentation tabulates to an isomorphic group."""
    pres = make_canonical(family, p, *m)
    scrambled = scramble(pres, random.Random(11), 12)
    first, second = build_table(pres), build_table(scrambled)
    assert Counter(fingerprints(first)) == Counter(fingerprints(second))
    assert brute_iso(first, second) is not None


def test_direct_factor_search(dihedral, make_canonical):
    """Test direct factor detection with and without a complement."""
    assert direct_factor_search(build_table(dihedral)) is None
    for pres in (make_canonical(1, 2, 1, torsion=(3,)), make_canonical(1, 3, 1, torsion=(3,))):
        table = build_table(pres)
        found = direct_factor_search(table)
        assert found is not None
        h, k = found
        assert len(h) * len(k) == table.n
        assert len(np.intersect1d(h, k)) == 1


def test_direct_factor_bound(make_canonical):
    """Test the direct factor size bound."""
    table = build_table(make_canonical(1, 2, 1, torsion=(3,)))
    with pytest.raises(TooLargeError):
        direct_factor_search(table, max_order=16)


def test_export_import(quaternion):
    """Test the text table format."""
    table = build_table(quaternion)
    text = export_table(table)
    assert text.startswith("order 8\n")
    again = import_table(text)
    assert (again.table == table.table).all()


@pytest.mark.parametrize(
    "text",
    ["size 2\n0 1\n1 0\n", "order 2\n0 1\n", "order 2\n0 1\n1 2\n"],
)
def test_import_rejects_malformed(text):
    """Test malformed table text."""
    with pytest.raises(ValueError):
        import_table(text)


def test_conjugacy_representatives(dihedral):
    """Test the five conjugacy classes of D4."""
    table = build_table(dihedral)
    reps = conjugacy_representatives(table)
    assert len(set(reps.tolist())) == 5
    assert reps[0] == 0
    assert all(reps[g] <= g for g in range(table.n))


def test_central_generators(heisenberg, make_canonical):
    """Test completing a non-commuting pair to a generating set with central elements."""
    table = build_table(heisenberg)
    assert central_generators(table, list(table.gens[:2])) == []
    table = build_table(make_canonical(3, 3, 1, 1, torsion=(3,)))
    pair = list(table.gens[:2])
    extra = central_generators(table, pair)
    assert len(extra) == 1
    assert set(extra) <= set(center_of(table).tolist())
    assert len(subgroup_closure(table, pair + extra)) == table.n


@pytest.mark.parametrize("case", ["mixed_center", "scrambled_family_four", "family_seven_torsion"])
def test_iso_is_fast_near_the_bound(make_canonical, case):
    """Test matching a scrambled table of order 486 or 729 to its canonical form."""
    if case == "mixed_center":
        pres = parse(MIXED_CENTER_TEXT)
    elif case == "scrambled_family_four":
        pres = scramble(make_canonical(4, 3, 2, 2), random.Random(5), 12)
    else:
        pres = scramble(make_canonical(7, 3, 1, 1, 1, torsion=(3,)), random.Random(9), 12)
    table = build_table(pres)
    reference = build_table(canonical_presentation(classify(pres).form))
    assert table.n in (486, 729)

    start = time.perf_counter()
    mapping = brute_iso(table, reference)
    elapsed = time.perf_counter() - start
    assert mapping is not None
    assert is_homomorphism(table, reference, mapping)
    assert elapsed < 60


@pytest.mark.parametrize("p, m1", [(3, 1), (3, 2), (2, 2), (2, 3)])
def test_exponent_of_families_one_and_two(make_canonical, p, m1):
    """Test exponents p^m1 for family 1 and p^(m1+1) for family 2."""
    assert exponent_of(build_table(make_canonical(1, p, m1))) == p**m1
    assert exponent_of(build_table(make_canonical(2, p, m1))) == p ** (m1 + 1)


def test_dihedral_and_quaternion_share_an_exponent(dihedral, quaternion):
    """Test that D4 and Q8 both have exponent 4 and differ in their involutions."""
    d4, q8 = build_table(dihedral), build_table(quaternion)
    assert exponent_of(d4) == exponent_of(q8) == 4
    assert order_profile(d4).as_dict()[2] == 5
    assert order_profile(q8).as_dict()[2] == 1


@pytest.mark.parametrize("first, second", list(combinations(FINITE_FORMS, 2)), ids=str)
def test_distinct_canonical_forms_are_not_isomorphic(canonical_table, first, second):
    """Test that two different canonical instances never tabulate to the same group."""
    assert brute_iso(canonical_table(first), canonical_table(second)) is None


@pytest.mark.parametrize("form", SMALL_FORMS, ids=str)
def test_canonical_instances_are_indecomposable(canonical_table, form):
    """Test that no canonical instance has a direct factor."""
    assert direct_factor_search(canonical_table(form)) is None


@pytest.mark.parametrize(
    "family, p, m, torsion",
    [
        (2, 2, (1,), (3,)),
        (3, 3, (1, 1), (2,)),
        (4, 2, (1, 1), (2,)),
        (7, 2, (1, 1, 1), (3,)),
        (1, 3, (2,), (3,)),
    ],
)
def test_core_times_complement_splits(make_canonical, family, p, m, torsion):
    """Test that D x A with a nontrivial A has a direct factor of the right size."""
    pres = make_canonical(family, p, *m, torsion=torsion)
    core = canonical_presentation(classify(pres).form, with_complement=False)
    table = build_table(pres)
    found = direct_factor_search(table)
    assert found is not None
    h, k = found
    assert len(h) * len(k) == table.n
    assert len(np.intersect1d(h, k)) == 1
    assert core.order() * torsion[0] == table.n
