"""Structural invariants of tabulated groups: center, orders, derived subgroup, direct factors."""

import logging
from dataclasses import dataclass
from math import isqrt, lcm
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np
from sympy import factorint

from src.abelian.smith_form import smith_normal_form
from src.errors import TooLargeError
from src.oracle.table import MulTable
from src.utils.modular import is_prime

logger = logging.getLogger(__name__)

DEFAULT_DIRECT_FACTOR_MAX_ORDER = 512
# Pairs tried for normal subgroups when the central quotient is not C_q x C_q.
PAIR_CLOSURE_LIMIT = 4096


def center_of(table: MulTable) -> np.ndarray:
    t = table.table
    return np.flatnonzero((t == t.T).all(axis=1))


def power_map(table: MulTable, k: int) -> np.ndarray:
    """g -> g^k for every element, k >= 0."""
    t = table.table
    result = np.zeros(table.n, dtype=np.int64)
    base = np.arange(table.n, dtype=np.int64)
    while k:
        if k & 1:
            result = t[result, base]
        base = t[base, base]
        k >>= 1
    return result


def element_orders(table: MulTable) -> np.ndarray:
    t = table.table
    index = np.arange(table.n)
    orders = np.zeros(table.n, dtype=np.int64)
    current = index.copy()
    for k in range(1, table.n + 1):
        hit = (current == 0) & (orders == 0)
        orders[hit] = k
        if (orders > 0).all():
            break
        current = t[current, index]
    return orders


def exponent_of(table: MulTable) -> int:
    """Least common multiple of the element orders."""
    return lcm(*(int(o) for o in np.unique(element_orders(table))))


def center_and_quotient(table: MulTable) -> Tuple[np.ndarray, bool]:
    """
    Center indices and whether G/Z is C_q x C_q for a prime q.

    The quotient has order q^2 and exponent q exactly when [G:Z] = q^2 and
    w^q lies in Z for every w.
    """
    center = center_of(table)
    index = table.n // len(center)
    q = isqrt(index)
    if q * q != index or not is_prime(q):
        return center, False
    powers = power_map(table, q)
    return center, bool(np.isin(powers, center).all())


@dataclass(frozen=True)
class OrderProfile:
    """Census of element orders, overall and among non-central elements."""

    counts: Tuple[Tuple[int, int], ...]
    noncentral: Tuple[Tuple[int, int], ...]

    def as_dict(self) -> Dict[int, int]:
        return dict(self.counts)

    def noncentral_dict(self) -> Dict[int, int]:
        return dict(self.noncentral)

    def count(self, order: int) -> int:
        return self.as_dict().get(order, 0)

    def noncentral_count(self, order: int) -> int:
        return self.noncentral_dict().get(order, 0)


def _census(orders: np.ndarray) -> Tuple[Tuple[int, int], ...]:
    values, counts = np.unique(orders, return_counts=True)
    return tuple((int(v), int(c)) for v, c in zip(values, counts))


def order_profile(table: MulTable) -> OrderProfile:
    orders = element_orders(table)
    central = np.zeros(table.n, dtype=bool)
    central[center_of(table)] = True
    return OrderProfile(_census(orders), _census(orders[~central]))


def subgroup_closure(table: MulTable, gens: Iterable[int]) -> np.ndarray:
    """Sorted indices of the subgroup generated by ``gens``."""
    t = table.table
    gens = [int(g) for g in gens if g]
    member = np.zeros(table.n, dtype=bool)
    member[0] = True
    frontier = np.array([0], dtype=np.int64)
    while frontier.size:
        reached = np.unique(t[frontier][:, gens].ravel()) if gens else np.array([], dtype=np.int64)
        fresh = reached[~member[reached]]
        member[fresh] = True
        frontier = fresh
    return np.flatnonzero(member)


def normal_closure(table: MulTable, gens: Iterable[int]) -> np.ndarray:
    t = table.table
    inv = table.inverses
    members = subgroup_closure(table, gens)
    while True:
        # g^-1 h g for every h in the subgroup and g in G
        conjugates = np.unique(t[t[inv][:, members], np.arange(table.n)[:, None]].ravel())
        if np.isin(conjugates, members).all():
            return members
        members = subgroup_closure(table, np.union1d(members, conjugates))


def commutator_table(table: MulTable) -> np.ndarray:
    """[a, b] = a^-1 b^-1 a b for all pairs."""
    t = table.table
    inv = table.inverses
    return t[t[inv[:, None], inv[None, :]], t]


def derived_subgroup(table: MulTable) -> np.ndarray:
    return subgroup_closure(table, np.unique(commutator_table(table)))


def generating_set(table: MulTable) -> List[int]:
    """Greedy generating set: repeatedly add the largest-order element not yet reached."""
    orders = element_orders(table)
    by_order = sorted(range(table.n), key=lambda g: (-orders[g], g))
    gens: List[int] = []
    member = np.zeros(table.n, dtype=bool)
    member[0] = True
    for g in by_order:
        if member[g]:
            continue
        gens.append(g)
        member[:] = False
        member[subgroup_closure(table, gens)] = True
        if member.all():
            break
    return gens


def central_generators(table: MulTable, start: Sequence[int]) -> List[int]:
    """
    Central elements that generate the group together with ``start``.

    Each step takes the central element whose order modulo the subgroup reached so
    far is largest, so the list stays as short as the center allows.
    """
    t = table.table
    center = [int(z) for z in center_of(table)]
    orders = element_orders(table)
    gens: List[int] = []
    member = np.zeros(table.n, dtype=bool)
    member[subgroup_closure(table, start)] = True
    while not member.all():
        best: Optional[Tuple[Tuple[int, int, int], int]] = None
        for z in center:
            if member[z]:
                continue
            k, w = 1, z
            while not member[w]:
                w = int(t[w, z])
                k += 1
            key = (-k, int(orders[z]), z)
            if best is None or key < best[0]:
                best = (key, z)
        if best is None:
            break
        gens.append(best[1])
        member[subgroup_closure(table, list(start) + gens)] = True
    return gens


class _Abelianization:
    """
    Coordinates on G/G' from a generating set and the Cayley graph.

    Every element gets a word vector by breadth-first search; each Cayley edge
    a -> a*g_i yields the relation v(a) + e_i - v(a g_i). After a Smith form
    U R V = diag(d) the image of g in G/G' reads (v(g) V)_i mod d_i.
    """

    def __init__(self, table: MulTable):
        t = table.table
        self.gens = generating_set(table)
        k = len(self.gens)
        self.words = np.zeros((table.n, k), dtype=np.int64)
        seen = np.zeros(table.n, dtype=bool)
        seen[0] = True
        queue = [0]
        for a in queue:
            for i, g in enumerate(self.gens):
                b = int(t[a, g])
                if not seen[b]:
                    seen[b] = True
                    self.words[b] = self.words[a]
                    self.words[b, i] += 1
                    queue.append(b)

        echelon: Dict[int, List[int]] = {}
        for i, g in enumerate(self.gens):
            relations = self.words.copy()
            relations[:, i] += 1
            relations -= self.words[t[:, g]]
            for row in np.unique(relations, axis=0):
                _insert(echelon, [int(v) for v in row])

        matrix = [echelon.get(c, [0] * k) for c in range(k)]
        smith, _, v = smith_normal_form(matrix)
        self.moduli = [abs(int(smith[i][i])) for i in range(k)]
        self.v = [[int(x) for x in row] for row in v]

    def coordinates(self, g: int) -> List[int]:
        word = [int(x) for x in self.words[g]]
        k = len(word)
        row = [sum(word[j] * self.v[j][i] for j in range(k)) for i in range(k)]
        return [x % d if d else x for x, d in zip(row, self.moduli)]


def _insert(echelon: Dict[int, List[int]], row: List[int]) -> None:
    """Add ``row`` to an integer echelon basis keyed by leading column."""
    for col in range(len(row)):
        if row[col] == 0:
            continue
        if col not in echelon:
            echelon[col] = row
            return
        b = echelon[col]
        # Euclid on the leading column; both rows vanish before col.
        while row[col]:
            q = b[col] // row[col]
            b = [x - q * y for x, y in zip(b, row)]
            b, row = row, b
        echelon[col] = b


def _abelian_direct_factor(table: MulTable) -> Optional[Tuple[np.ndarray, np.ndarray]]:
    """
    A central cyclic factor <c> of prime-power order with a normal complement.

    A complement exists exactly when some character G -> C_(l^e) sends c to a
    generator, which reads off one invariant-factor coordinate of G/G'.
    """
    orders = element_orders(table)
    quotient = _Abelianization(table)
    for c in center_of(table):
        order = int(orders[c])
        primes = factorint(order)
        if len(primes) != 1 or order == table.n:
            continue
        ell, e = next(iter(primes.items()))
        coords = quotient.coordinates(int(c))
        for i, d in enumerate(quotient.moduli):
            if d == 0 or d % order or (d // order) % ell == 0:
                continue
            if coords[i] % ell == 0:
                continue
            kernel = [g for g in range(table.n) if quotient.coordinates(g)[i] % order == 0]
            logger.debug(f"Central element {c} of order {order} splits off")
            return np.array(kernel, dtype=np.int64), subgroup_closure(table, [int(c)])
    return None


def _normal_subgroups(table: MulTable) -> List[np.ndarray]:
    singles: Dict[bytes, np.ndarray] = {}
    for g in range(1, table.n):
        closure = normal_closure(table, [g])
        singles.setdefault(closure.tobytes(), closure)
    found = dict(singles)
    pool = list(singles.values())
    tried = 0
    for a in range(len(pool)):
        for b in range(a + 1, len(pool)):
            if tried >= PAIR_CLOSURE_LIMIT:
                return list(found.values())
            tried += 1
            joined = normal_closure(table, np.union1d(pool[a], pool[b]))
            found.setdefault(joined.tobytes(), joined)
    return list(found.values())


def direct_factor_search(
    table: MulTable, max_order: int = DEFAULT_DIRECT_FACTOR_MAX_ORDER
) -> Optional[Tuple[np.ndarray, np.ndarray]]:
    """
    Nontrivial normal H, K with H n K = 1 and |H||K| = n, if any exist.

    Abelian direct factors are found exactly. A group with G/Z = C_q x C_q has
    no splitting into two non-abelian factors, so the search stops there; other
    tables also try normal closures of elements and pairs of them.

    Raises:
        TooLargeError: above ``max_order``
    """
    if table.n > max_order:
        raise TooLargeError(table.n, max_order, "direct factor search")
    if table.n == 1:
        return None

    found = _abelian_direct_factor(table)
    if found is not None:
        return found
    _, quotient_ok = center_and_quotient(table)
    if quotient_ok:
        return None

    normals = [h for h in _normal_subgroups(table) if 1 < len(h) < table.n]
    for h in normals:
        for k in normals:
            if len(h) * len(k) == table.n and np.intersect1d(h, k).size == 1:
                return h, k
    return None
