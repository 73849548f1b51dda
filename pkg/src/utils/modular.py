"""Modular arithmetic and linear algebra over F_p."""

from typing import Iterable, List, Optional, Sequence, Tuple

from sympy import isprime, multiplicity


def ext_gcd(a: int, b: int) -> Tuple[int, int, int]:
    """
    Extended Euclid.

    Returns:
        (g, u, v) with g = gcd(a, b) >= 0 and u*a + v*b = g
    """
    old_r, r = a, b
    old_u, u = 1, 0
    old_v, v = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_u, u = u, old_u - q * u
        old_v, v = v, old_v - q * v
    if old_r < 0:
        old_r, old_u, old_v = -old_r, -old_u, -old_v
    return old_r, old_u, old_v


def inv_mod(a: int, n: int) -> int:
    """Inverse of a modulo n, as the representative in [1, n-1]."""
    g, u, _ = ext_gcd(a % n, n)
    if g != 1:
        raise ValueError(f"{a} is not invertible modulo {n}")
    return u % n


def is_prime(p: int) -> bool:
    return p >= 2 and bool(isprime(p))


def p_valuation(n: int, p: int) -> int:
    """Exponent of p in n (n != 0)."""
    return int(multiplicity(p, n))


def split_order(n: int, p: int) -> Tuple[int, int]:
    """Split a finite order into (p-part, coprime part)."""
    k = p_valuation(n, p)
    return p**k, n // p**k


def rref_mod_p(
    rows: Iterable[Sequence[int]],
    p: int,
    column_order: Optional[Sequence[int]] = None,
) -> Tuple[List[List[int]], List[int]]:
    """
    Reduced row echelon form over F_p with a custom column priority.

    Pivots are searched in ``column_order`` (default: natural order), so the
    leading entry of each row is the first nonzero coordinate in that order.

    Args:
        rows: Vectors spanning the subspace
        p: Prime modulus
        column_order: Permutation of column indices giving pivot priority

    Returns:
        (basis rows with pivot entry 1, pivot column of each row)
    """
    matrix = [[x % p for x in row] for row in rows]
    if not matrix:
        return [], []
    width = len(matrix[0])
    order = list(column_order) if column_order is not None else list(range(width))

    basis: List[List[int]] = []
    pivots: List[int] = []
    for col in order:
        pivot_row = next((r for r in matrix if r[col] % p), None)
        if pivot_row is None:
            continue
        matrix.remove(pivot_row)
        scale = inv_mod(pivot_row[col], p)
        pivot_row = [(x * scale) % p for x in pivot_row]
        matrix = [[(x - r[col] * y) % p for x, y in zip(r, pivot_row)] for r in matrix]
        basis = [[(x - b[col] * y) % p for x, y in zip(b, pivot_row)] for b in basis]
        basis.append(pivot_row)
        pivots.append(col)
    return basis, pivots


def rank_mod_p(rows: Iterable[Sequence[int]], p: int) -> int:
    return len(rref_mod_p(rows, p)[1])


def solve_combination(
    vectors: Sequence[Sequence[int]], target: Sequence[int], p: int
) -> Optional[List[int]]:
    """
    Find coefficients c with sum(c_k * vectors[k]) = target over F_p.

    Returns:
        One solution (free coefficients set to 0), or None if target is not in the span
    """
    k = len(vectors)
    width = len(target)
    # Augmented system: rows are coordinates, columns are the unknowns then the target.
    system = [[vectors[j][i] % p for j in range(k)] + [target[i] % p] for i in range(width)]
    reduced, pivots = rref_mod_p(system, p, column_order=list(range(k + 1)))
    if k in pivots:
        return None
    solution = [0] * k
    for row, col in zip(reduced, pivots):
        solution[col] = row[k]
    return solution


def det2(m: Sequence[Sequence[int]], p: int) -> int:
    return (m[0][0] * m[1][1] - m[0][1] * m[1][0]) % p
