"""Explicit multiplication tables of finite groups."""

import logging
from dataclasses import dataclass, field
from typing import Any, Callable, Hashable, List, Optional, Sequence, Tuple

import numpy as np

from src.engine import collector_for
from src.errors import InfiniteGroupError, TooLargeError
from src.presentation import GroupPresentation

logger = logging.getLogger(__name__)

DEFAULT_MAX_ORDER = 4096


@dataclass(frozen=True, eq=False)
class MulTable:
    """
    Cayley table on indices 0..n-1 with index 0 the identity.

    ``gens`` lists the indices of x, y and the center generators when the table
    comes from a presentation.
    """

    n: int
    table: np.ndarray
    gens: Tuple[int, ...] = ()
    labels: Tuple[str, ...] = field(default_factory=tuple)

    def mul(self, a: int, b: int) -> int:
        return int(self.table[a, b])

    @property
    def inverses(self) -> np.ndarray:
        return np.argmax(self.table == 0, axis=1)

    def is_latin(self) -> bool:
        expected = np.arange(self.n)
        rows = np.sort(self.table, axis=1)
        cols = np.sort(self.table, axis=0)
        return bool((rows == expected).all() and (cols == expected[:, None]).all())

    def is_associative(self, samples: Optional[int] = None, seed: int = 0) -> bool:
        """
        Check (ab)c = a(bc), over all triples or ``samples`` random ones.
        """
        t = self.table
        if samples is None:
            for a in range(self.n):
                left = t[t[a], :]
                right = t[a][t]
                if not (left == right).all():
                    return False
            return True
        rng = np.random.default_rng(seed)
        a, b, c = rng.integers(0, self.n, size=(3, samples))
        return bool((t[t[a, b], c] == t[a, t[b, c]]).all())

    @classmethod
    def from_cayley(
        cls,
        elements: Sequence[Hashable],
        op: Callable[[Any, Any], Hashable],
        labels: Optional[Sequence[str]] = None,
    ) -> "MulTable":
        """
        Table of a finite group given by its elements and operation.

        The identity is moved to index 0; the other elements keep their order.
        """
        elements = list(elements)
        identity = next(
            (e for e in elements if all(op(e, g) == g for g in elements)), None
        )
        if identity is None:
            raise ValueError("Elements have no identity under op")
        start = elements.index(identity)
        order = [start] + [k for k in range(len(elements)) if k != start]
        ordered = [elements[k] for k in order]
        position = {e: k for k, e in enumerate(ordered)}
        n = len(ordered)
        table = np.empty((n, n), dtype=np.int64)
        for a, ea in enumerate(ordered):
            for b, eb in enumerate(ordered):
                table[a, b] = position[op(ea, eb)]
        names = tuple(labels[k] for k in order) if labels else tuple(str(e) for e in ordered)
        return cls(n, table, (), names)


class TableBuilder:
    """Enumerates the normal forms x^i y^j z of a finite presentation and tabulates products."""

    def __init__(self, pres: GroupPresentation, max_order: int = DEFAULT_MAX_ORDER):
        if not pres.is_finite:
            raise InfiniteGroupError(f"{pres} has an infinite center")
        n = pres.order()
        if n > max_order:
            raise TooLargeError(n, max_order, "multiplication table")
        self.pres = pres
        self.n = n
        self.p = pres.p
        self.orders = [f.order.n for f in pres.center.factors]
        self.z_size = n // (self.p * self.p)
        strides = []
        step = 1
        for order in reversed(self.orders):
            strides.append(step)
            step *= order
        self.strides = np.array(list(reversed(strides)), dtype=np.int64)

    def elements(self) -> np.ndarray:
        """(n, 2 + rank) array of [i, j, z...] rows in index order."""
        index = np.arange(self.n, dtype=np.int64)
        coset, z_index = divmod(index, self.z_size)
        rows = np.empty((self.n, 2 + len(self.orders)), dtype=np.int64)
        rows[:, 0], rows[:, 1] = divmod(coset, self.p)
        for c, (order, stride) in enumerate(zip(self.orders, self.strides)):
            rows[:, 2 + c] = (z_index // stride) % order
        return rows

    def encode(self, rows: np.ndarray) -> np.ndarray:
        coset = rows[:, 0] * self.p + rows[:, 1]
        return coset * self.z_size + rows[:, 2:] @ self.strides

    def build(self) -> MulTable:
        collector = collector_for(self.pres)
        elements = self.elements()
        table = np.empty((self.n, self.n), dtype=np.int64)
        for a in range(self.n):
            left = np.repeat(elements[a : a + 1], self.n, axis=0)
            table[a] = self.encode(collector.multiply_batch(left, elements))

        unit_rows = []
        for i, j in ((1, 0), (0, 1)):
            row = np.zeros(2 + len(self.orders), dtype=np.int64)
            row[0], row[1] = i, j
            unit_rows.append(row)
        for c in range(len(self.orders)):
            row = np.zeros(2 + len(self.orders), dtype=np.int64)
            row[2 + c] = 1
            unit_rows.append(row)
        gens = tuple(int(g) for g in self.encode(np.array(unit_rows)))

        labels = tuple(self._label(row) for row in elements)
        logger.debug(f"Built table of order {self.n} for {self.pres}")
        return MulTable(self.n, table, gens, labels)

    def _label(self, row: np.ndarray) -> str:
        parts: List[str] = []
        for name, e in zip(("x", "y"), row[:2]):
            if e:
                parts.append(name if e == 1 else f"{name}^{e}")
        for name, e in zip(self.pres.center.names, row[2:]):
            if e:
                parts.append(name if e == 1 else f"{name}^{e}")
        return " ".join(parts) or "1"


def build_table(pres: GroupPresentation, max_order: int = DEFAULT_MAX_ORDER) -> MulTable:
    """
    Multiplication table of a finite presentation.

    Args:
        pres: Presentation with a finite center
        max_order: Largest group order accepted

    Returns:
        MulTable whose index 0 is the identity

    Raises:
        InfiniteGroupError: if a center factor is infinite
        TooLargeError: if p^2 |Z| exceeds ``max_order``
    """
    return TableBuilder(pres, max_order).build()


def export_table(table: MulTable) -> str:
    lines = [f"order {table.n}"]
    lines.extend(" ".join(str(int(v)) for v in row) for row in table.table)
    return "\n".join(lines) + "\n"


def import_table(text: str) -> MulTable:
    """
    Parse the ``order n`` text format back into a table.

    Raises:
        ValueError: on a malformed header, row count or entry
    """
    lines = [line for line in text.splitlines() if line.strip()]
    if not lines or not lines[0].startswith("order "):
        raise ValueError("Table text must start with 'order n'")
    n = int(lines[0].split()[1])
    rows = [[int(v) for v in line.split()] for line in lines[1:]]
    if len(rows) != n or any(len(r) != n for r in rows):
        raise ValueError(f"Expected {n} rows of {n} entries")
    table = np.array(rows, dtype=np.int64)
    if (table < 0).any() or (table >= n).any():
        raise ValueError(f"Entries must lie in [0, {n})")
    return MulTable(n, table)
