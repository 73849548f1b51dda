"""Exhaustive isomorphism search between multiplication tables."""

import logging
from collections import Counter
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np
from sympy import primefactors

from src.errors import TooLargeError
from src.oracle.structure import (
    center_and_quotient,
    center_of,
    central_generators,
    commutator_table,
    element_orders,
    generating_set,
    order_profile,
    power_map,
    subgroup_closure,
)
from src.oracle.table import MulTable

logger = logging.getLogger(__name__)

DEFAULT_ISO_MAX_ORDER = 729

Mapping = Tuple[int, ...]


def fingerprints(table: MulTable) -> List[Tuple[int, ...]]:
    """
    Per-element isomorphism invariants.

    Order, centrality, centralizer size, and for each prime l dividing n the
    number of l-th roots and the order of the l-th power.
    """
    t = table.table
    orders = element_orders(table)
    central = np.zeros(table.n, dtype=bool)
    central[center_of(table)] = True
    centralizer = (t == t.T).sum(axis=1)
    columns = [orders, central.astype(np.int64), centralizer]
    for ell in primefactors(table.n):
        powers = power_map(table, ell)
        columns.append(np.bincount(powers, minlength=table.n))
        columns.append(orders[powers])
    stacked = np.stack(columns, axis=1)
    return [tuple(int(v) for v in row) for row in stacked]


def is_homomorphism(source: MulTable, target: MulTable, mapping: Sequence[int]) -> bool:
    """phi(ab) = phi(a) phi(b) for all a, b."""
    phi = np.asarray(mapping, dtype=np.int64)
    if phi.shape != (source.n,):
        return False
    return bool((phi[source.table] == target.table[phi[:, None], phi[None, :]]).all())


def conjugacy_representatives(table: MulTable) -> np.ndarray:
    """Smallest index in the conjugacy class of each element."""
    t = table.table
    left = t[table.inverses]
    conjugates = t[left, np.arange(table.n)[:, None]]
    return conjugates.min(axis=0)


class _IsoSearch:
    """
    Backtracking over images of generators, pruned by element fingerprints.

    When G/Z is C_q x C_q the generators are a non-commuting pair x, y followed
    by central elements. Images of the pair must agree with x, y on a few short
    words, and only one image per conjugacy class is tried: inner automorphisms
    of the target move any solution onto it.
    """

    def __init__(self, source: MulTable, target: MulTable):
        self.source = source
        self.target = target
        source_prints = fingerprints(source)
        target_prints = fingerprints(target)
        self.compatible = Counter(source_prints) == Counter(target_prints)
        ids: Dict[Tuple[int, ...], int] = {}
        for fp in source_prints + target_prints:
            ids.setdefault(fp, len(ids))
        self.source_ids = np.array([ids[fp] for fp in source_prints], dtype=np.int64)
        self.target_ids = np.array([ids[fp] for fp in target_prints], dtype=np.int64)
        self.source_rows = source.table.tolist()
        self.target_rows = target.table.tolist()

        self.pair = self._choose_pair() if self.compatible else None
        if self.pair is None:
            self.gens = generating_set(source)
        else:
            self.gens = list(self.pair) + central_generators(source, self.pair)
        self.candidates = [
            np.flatnonzero(self.target_ids == self.source_ids[g]) for g in self.gens
        ]
        if self.pair is not None:
            self._prepare_pair()
        logger.debug(f"Searching images of {len(self.gens)} generators")

    def _choose_pair(self) -> Optional[Tuple[int, int]]:
        center, quotient_ok = center_and_quotient(self.source)
        if not quotient_ok:
            return None
        t = self.source.table
        central = np.zeros(self.source.n, dtype=bool)
        central[center] = True
        sizes = np.bincount(self.source_ids)[self.source_ids]
        noncentral = np.flatnonzero(~central)
        x = int(min(noncentral, key=lambda g: (sizes[g], g)))
        partners = noncentral[t[x, noncentral] != t[noncentral, x]]
        y = int(min(partners, key=lambda g: (sizes[g], g)))
        return x, y

    def _words(self, table: MulTable, comm: np.ndarray, a: int, b: np.ndarray) -> List[np.ndarray]:
        t = table.table
        ab = t[a, b]
        return [comm[a, b], ab, t[a, table.inverses[b]], t[ab, b], t[ab, a]]

    def _prepare_pair(self) -> None:
        x, y = self.pair
        self.target_comm = commutator_table(self.target)
        words = self._words(self.source, commutator_table(self.source), x, np.array([y]))
        self.signature = [int(self.source_ids[w[0]]) for w in words]
        reps = conjugacy_representatives(self.target)
        self.candidates[0] = self.candidates[0][reps[self.candidates[0]] == self.candidates[0]]

    def _partners(self, x_image: int) -> np.ndarray:
        """Images for y: same words as (x, y), one per class under the centralizer of x_image."""
        ys = self.candidates[1]
        words = self._words(self.target, self.target_comm, x_image, ys)
        mask = np.ones(ys.size, dtype=bool)
        for word, expected in zip(words, self.signature):
            mask &= self.target_ids[word] == expected
        ys = ys[mask]
        if ys.size == 0:
            return ys
        t = self.target.table
        centralizer = np.flatnonzero(t[x_image] == t[:, x_image])
        inverses = self.target.inverses[centralizer]
        conjugates = t[t[inverses[:, None], ys[None, :]], centralizer[:, None]]
        return ys[conjugates.min(axis=0) == ys]

    def extend(self, images: Sequence[int]) -> Optional[np.ndarray]:
        """
        Extend gens[:k] -> images over the generated subgroup.

        Returns the partial map (-1 off the subgroup), or None if it is
        inconsistent or not injective.
        """
        s, t = self.source_rows, self.target_rows
        pairs = list(zip(self.gens, images))
        phi = [-1] * self.source.n
        used = [False] * self.target.n
        phi[0] = 0
        used[0] = True
        queue = [0]
        for a in queue:
            source_row = s[a]
            target_row = t[phi[a]]
            for g, h in pairs:
                b = source_row[g]
                image = target_row[h]
                if phi[b] < 0:
                    if used[image]:
                        return None
                    phi[b] = image
                    used[image] = True
                    queue.append(b)
                elif phi[b] != image:
                    return None
        return np.array(phi, dtype=np.int64)

    def search(self, images: List[int]) -> Optional[np.ndarray]:
        level = len(images)
        if level == len(self.gens):
            return self.extend(images)
        if self.pair is not None and level == 1:
            candidates = self._partners(images[0])
        else:
            candidates = self.candidates[level]
        reached = subgroup_closure(self.target, images) if images else np.array([0])
        outside = np.ones(self.target.n, dtype=bool)
        outside[reached] = False
        for h in candidates:
            h = int(h)
            if not outside[h]:
                continue
            attempt = images + [h]
            if self.extend(attempt) is None:
                continue
            found = self.search(attempt)
            if found is not None:
                return found
        return None


def brute_iso(
    first: MulTable, second: MulTable, max_order: int = DEFAULT_ISO_MAX_ORDER
) -> Optional[Mapping]:
    """
    An isomorphism first -> second as an index map, or None.

    Candidates are rejected early by order profiles and element fingerprints;
    the first isomorphism in a fixed branch order is returned.

    Raises:
        TooLargeError: if either table exceeds ``max_order``
    """
    for table in (first, second):
        if table.n > max_order:
            raise TooLargeError(table.n, max_order, "isomorphism search")
    if first.n != second.n:
        return None
    if order_profile(first) != order_profile(second):
        logger.debug("Order profiles differ")
        return None

    search = _IsoSearch(first, second)
    if not search.compatible:
        logger.debug("Element fingerprints differ")
        return None
    phi = search.search([])
    if phi is None or (phi < 0).any():
        return None
    mapping = tuple(int(v) for v in phi)
    if not is_homomorphism(first, second, mapping):
        raise RuntimeError("Isomorphism search produced a non-homomorphism")
    return mapping
