"""Tests for generator moves, basis changes and transcripts."""

import random

import pytest

from src.abelian import CentralVector, FgAbelian
from src.classify import scramble_with_steps
from src.errors import (
    BasisChangeError,
    CpxcpError,
    InvalidMoveError,
    PresentationValidationError,
)
from src.normalize import (
    BasisChange,
    GeneratorMove,
    MoveKind,
    Rebase,
    Restrict,
    apply_move,
    change_generators,
    gl2_moves,
    inverse_move,
    locate_t1,
    rebase,
    reduce_pth_powers,
    reorder,
    replace_factor,
    replay,
    scale_factor,
    split_primary,
    step_to_json,
    transform_free,
)
from src.oracle import brute_iso, build_table
from src.presentation import GroupPresentation, ViolationKind, parse

ALL_MOVES = [
    GeneratorMove.x_times_central(CentralVector.of(t1=1)),
    GeneratorMove.y_times_central(CentralVector.of(t1=1)),
    GeneratorMove.x_times_y_pow(1),
    GeneratorMove.y_times_x_pow(1),
    GeneratorMove.x_pow(1),
    GeneratorMove.y_pow(1),
    GeneratorMove.swap(),
]


@pytest.mark.parametrize("move", ALL_MOVES, ids=lambda m: m.kind.value)
def test_moves_preserve_the_group(quaternion, move):
    """Test that every move presents an isomorphic group."""
    moved = apply_move(quaternion, move)
    assert brute_iso(build_table(quaternion), build_table(moved)) is not None


@pytest.mark.parametrize("seed", range(40))
def test_random_steps_preserve_the_group(make_random, seed):
    """Test that random moves and center automorphisms keep the isomorphism class."""
    rng = random.Random(seed)
    pres = make_random(rng, rng.choice((2, 3)), max_order=256)
    moved, steps = scramble_with_steps(pres, rng, 8)
    assert len(steps) == 8
    assert brute_iso(build_table(pres), build_table(moved)) is not None


def test_swap_inverts_the_commutator(heisenberg):
    """Test that swapping x and y replaces s by s^-1 before relocation."""
    swapped = apply_move(heisenberg, GeneratorMove.swap())
    assert swapped.s == CentralVector.of(t1=1)
    assert swapped.center.names == ("t1",)


def test_x_times_y_changes_the_square(dihedral):
    """Test that x -> xy turns the dihedral x^2 = 1 into x^2 = t1."""
    moved = apply_move(dihedral, GeneratorMove.x_times_y_pow(1))
    assert moved.xp == CentralVector.of(t1=1)
    assert moved.yp.is_zero


def test_inverse_move():
    """Test inverses of exponent moves."""
    assert inverse_move(GeneratorMove.x_pow(2), 5) == GeneratorMove.x_pow(3)
    assert inverse_move(GeneratorMove.y_times_x_pow(2), 5) == GeneratorMove.y_times_x_pow(-2)
    assert inverse_move(GeneratorMove.swap(), 5) == GeneratorMove.swap()


def test_non_invertible_power(heisenberg):
    """Test XPow with an exponent divisible by p."""
    with pytest.raises(InvalidMoveError):
        apply_move(heisenberg, GeneratorMove.x_pow(3))


def test_move_with_unknown_factor(heisenberg):
    """Test a central move over an undeclared factor."""
    with pytest.raises(InvalidMoveError):
        apply_move(heisenberg, GeneratorMove.x_times_central(CentralVector.of(w=1)))


def test_gl2_moves():
    """Test decomposition of GL2 matrices into moves."""
    assert gl2_moves([[1, 0], [0, 1]], 3) == []
    assert gl2_moves([[0, 1], [1, 0]], 3)[0].kind is MoveKind.SWAP
    with pytest.raises(InvalidMoveError):
        gl2_moves([[1, 2], [2, 4]], 3)


def test_change_generators_reaches_the_cosets(heisenberg):
    """Test that the new x lies in the coset of the first row."""
    _, moves = change_generators(heisenberg, [[1, 1], [0, 2]])
    assert all(m.kind is not MoveKind.X_TIMES_CENTRAL for m in moves)
    assert moves


def test_move_json():
    """Test the move wire format."""
    assert GeneratorMove.swap().to_json() == {"move": "Swap"}
    assert GeneratorMove.x_pow(2).to_json() == {"move": "XPow", "n": 2}
    assert GeneratorMove.y_times_central(CentralVector.of(a=1)).to_json() == {
        "move": "YTimesCentral",
        "v": {"a": 1},
    }


def test_locate_t1_reorders():
    """Test that the factor carrying the commutator moves to the front."""
    pres = parse("group { prime 2; center a:2, b:4; comm b^2; xp 1; yp 1 }")
    located = locate_t1(pres)
    assert located.center.names == ("b", "a")
    assert located.s == CentralVector.of(b=2)


def test_locate_t1_splits_mixed_orders():
    """Test that a factor of order 12 splits before t1 is located for p = 2."""
    pres = parse("group { prime 2; center a:12; comm a^6; xp 1; yp 1 }")
    located = locate_t1(pres)
    assert located.center.names == ("a", "a_c")
    assert located.center.order_of("a").n == 4
    assert located.s == CentralVector.of(a=2)


def test_locate_t1_combines_factors():
    """Test a commutator spread over two factors of different height."""
    pres = parse("group { prime 3; center a:3, b:9; comm a b^3; xp 1; yp 1 }")
    located = locate_t1(pres)
    assert located.center.names[0] == "a"
    assert located.s == CentralVector.of(a=1)


def test_locate_t1_rejects_bad_commutators():
    """Test typed errors for a commutator of the wrong order or the identity."""
    center = FgAbelian.of([("a", 4)])
    zero = CentralVector.zero()
    wrong_order = GroupPresentation(2, center, CentralVector.of(a=1), zero, zero)
    with pytest.raises(PresentationValidationError) as info:
        locate_t1(wrong_order)
    assert info.value.violations[0].kind is ViolationKind.COMMUTATOR_ORDER_NOT_P
    with pytest.raises(CpxcpError):
        locate_t1(GroupPresentation(2, center, zero, zero, zero))


def test_reduce_pth_powers():
    """Test that p-th power coordinates end up in [0, p)."""
    pres = parse("group { prime 3; center t1:9; comm t1^3; xp t1^5; yp t1^7 }")
    reduced = reduce_pth_powers(pres)
    assert reduced.xp == CentralVector.of(t1=2)
    assert reduced.yp == CentralVector.of(t1=1)
    assert reduced.s == pres.s


def test_reduce_clears_coprime_torsion():
    """Test that a coprime factor is cleared from x^p."""
    pres = parse("group { prime 2; center t1:2, c:3; comm t1; xp c; yp 1 }")
    assert reduce_pth_powers(pres).xp.is_zero


def test_split_primary():
    """Test the p-part/coprime split of a single factor."""
    group = FgAbelian.of([("a", 12)])
    change = split_primary(group, 2)
    assert change.new == FgAbelian.of([("a", 4), ("a_c", 3)])
    assert change.apply(CentralVector.of(a=6)) == CentralVector.of(a=2)
    assert change.apply(CentralVector.of(a=4)) == CentralVector.of(a_c=1)


def test_replace_factor_rules():
    """Test automorphism checks on factor replacement."""
    group = FgAbelian.of([("a", 4), ("b", 2), ("u", "inf")])
    change = replace_factor(group, "a", CentralVector.of(a=1, b=1))
    assert change.apply(CentralVector.of(a=1)) == CentralVector.of(a=1, b=1)
    with pytest.raises(BasisChangeError):
        replace_factor(group, "a", CentralVector.of(a=2))
    with pytest.raises(BasisChangeError):
        replace_factor(group, "b", CentralVector.of(a=1, b=1))
    with pytest.raises(BasisChangeError):
        replace_factor(group, "u", CentralVector.of(u=2))
    assert replace_factor(group, "u", CentralVector.of(u=-1, a=3)).new == group


def test_basis_change_composition():
    """Test that composing a change with its inverse gives the identity."""
    group = FgAbelian.of([("a", 5)])
    there = scale_factor(group, "a", 2)
    back = scale_factor(group, "a", 3)
    assert there.compose(back).is_identity
    with pytest.raises(BasisChangeError):
        there.compose(reorder(FgAbelian.of([("b", 2)]), ["b"]))


def test_reorder_and_transform_free():
    """Test permutation and unimodular changes."""
    group = FgAbelian.of([("u", "inf"), ("v", "inf")])
    assert reorder(group, ["v", "u"]).new.names == ("v", "u")
    with pytest.raises(BasisChangeError):
        reorder(group, ["u"])
    with pytest.raises(BasisChangeError):
        transform_free(group, ["u", "v"], [[2, 0], [0, 1]])
    change = transform_free(group, ["u", "v"], [[1, 1], [0, 1]])
    assert change.apply(CentralVector.of(u=1, v=1)) == CentralVector.of(u=1)


def test_rebase_requires_matching_center(dihedral):
    """Test that a rebase must start from the presentation's center."""
    with pytest.raises(BasisChangeError):
        rebase(dihedral, BasisChange.identity(FgAbelian.of([("z", 2)])))


@pytest.mark.parametrize("seed", [0, 1, 2, 3])
def test_replay_reproduces_scrambles(make_canonical, seed):
    """Test that replaying a scramble's steps gives the scrambled presentation."""
    pres = make_canonical(7, 3, 2, 1, 1, torsion=(2,))
    scrambled, steps = scramble_with_steps(pres, random.Random(seed), 10)
    assert replay(pres, steps) == scrambled


def test_step_json(dihedral):
    """Test the wire format of every step kind."""
    assert step_to_json(Restrict(("t1",))) == {"restrict": ["t1"]}
    change = BasisChange.identity(dihedral.center)
    assert step_to_json(Rebase(change))["rebase"]["images"] == {"t1": {"t1": 1}}
    assert step_to_json(GeneratorMove.swap()) == {"move": "Swap"}
