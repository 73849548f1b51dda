"""Collection in G on integer tuples: the arithmetic core shared by the engine and oracle."""

from functools import lru_cache
from typing import Sequence, Tuple

import numpy as np

from src.presentation import GroupPresentation

Raw = Tuple[int, int, Tuple[int, ...]]


class Collector:
    """
    Multiplies normal forms x^i y^j c of one presentation.

    With [x, y] = s we collect using y x = x y s^-1, so moving y^j1 past x^i2
    contributes s^(-i2*j1). Carries from x^p and y^p are applied x first.
    Infinite factors are stored with order 0.
    """

    def __init__(self, pres: GroupPresentation):
        self.p = pres.p
        self.names = pres.center.names
        self.orders = tuple(f.order.n or 0 for f in pres.center.factors)
        self.s = tuple(pres.s.get(n) for n in self.names)
        self.xp = tuple(pres.xp.get(n) for n in self.names)
        self.yp = tuple(pres.yp.get(n) for n in self.names)

    def reduce(self, z: Sequence[int]) -> Tuple[int, ...]:
        return tuple(v % n if n else v for v, n in zip(z, self.orders))

    def identity(self) -> Raw:
        return 0, 0, (0,) * len(self.names)

    def multiply(self, g: Raw, h: Raw) -> Raw:
        i1, j1, z1 = g
        i2, j2, z2 = h
        cx, i = divmod(i1 + i2, self.p)
        cy, j = divmod(j1 + j2, self.p)
        k = -i2 * j1
        z = [
            a + b + cx * x + cy * y + k * s
            for a, b, x, y, s in zip(z1, z2, self.xp, self.yp, self.s)
        ]
        return i, j, self.reduce(z)

    def power(self, g: Raw, n: int) -> Raw:
        """(x^i y^j c)^n = x^(ni) y^(nj) c^n s^(-ij n(n-1)/2), valid for every integer n."""
        i, j, z = g
        cx, i_n = divmod(n * i, self.p)
        cy, j_n = divmod(n * j, self.p)
        k = -i * j * (n * (n - 1) // 2)
        out = [
            n * a + cx * x + cy * y + k * s for a, x, y, s in zip(z, self.xp, self.yp, self.s)
        ]
        return i_n, j_n, self.reduce(out)

    def inverse(self, g: Raw) -> Raw:
        return self.power(g, -1)

    def commutator(self, g: Raw, h: Raw) -> Tuple[int, ...]:
        det = g[0] * h[1] - g[1] * h[0]
        return self.reduce([det * s for s in self.s])

    def multiply_batch(self, left: np.ndarray, right: np.ndarray) -> np.ndarray:
        """
        Row-wise product of two arrays of normal forms.

        Args:
            left: (m, 2 + rank) array of [i, j, z...] rows
            right: Array of the same shape

        Returns:
            (m, 2 + rank) array of products, central part reduced
        """
        i_sum = left[:, 0] + right[:, 0]
        j_sum = left[:, 1] + right[:, 1]
        cx, cy = i_sum // self.p, j_sum // self.p
        k = -right[:, 0] * left[:, 1]
        out = np.empty_like(left)
        out[:, 0] = i_sum % self.p
        out[:, 1] = j_sum % self.p
        for c, n in enumerate(self.orders):
            col = left[:, 2 + c] + right[:, 2 + c]
            col = col + cx * self.xp[c] + cy * self.yp[c] + k * self.s[c]
            out[:, 2 + c] = col % n if n else col
        return out


@lru_cache(maxsize=128)
def collector_for(pres: GroupPresentation) -> Collector:
    return Collector(pres)
