"""Smith normal form over the integers with tracked unimodular transforms."""

import logging
from typing import List, Optional, Sequence, Tuple

logger = logging.getLogger(__name__)

Matrix = List[List[int]]


def _identity(n: int) -> Matrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


class SmithNormalForm:
    """
    Computes U, V unimodular with U * M * V = S diagonal.

    The pivot at every stage is the nonzero entry of smallest absolute value in the
    remaining block, scanning rows then columns, so results are reproducible.
    Python integers are arbitrary precision, so coefficient growth is harmless.
    """

    def __init__(self, matrix: Sequence[Sequence[int]]):
        """
        Initialize and run the reduction.

        Args:
            matrix: Integer matrix as a list of rows (may be empty)
        """
        self.rows = len(matrix)
        self.cols = len(matrix[0]) if self.rows else 0
        self.S: Matrix = [[int(x) for x in row] for row in matrix]
        self.U: Matrix = _identity(self.rows)
        self.V: Matrix = _identity(self.cols)
        self._reduce()

    # Row operations act on S and U, column operations on S and V.

    def _swap_rows(self, i: int, j: int) -> None:
        if i != j:
            self.S[i], self.S[j] = self.S[j], self.S[i]
            self.U[i], self.U[j] = self.U[j], self.U[i]

    def _add_row(self, target: int, source: int, k: int) -> None:
        if k:
            self.S[target] = [a + k * b for a, b in zip(self.S[target], self.S[source])]
            self.U[target] = [a + k * b for a, b in zip(self.U[target], self.U[source])]

    def _negate_row(self, i: int) -> None:
        self.S[i] = [-a for a in self.S[i]]
        self.U[i] = [-a for a in self.U[i]]

    def _swap_cols(self, i: int, j: int) -> None:
        if i != j:
            for row in self.S:
                row[i], row[j] = row[j], row[i]
            for row in self.V:
                row[i], row[j] = row[j], row[i]

    def _add_col(self, target: int, source: int, k: int) -> None:
        if k:
            for row in self.S:
                row[target] += k * row[source]
            for row in self.V:
                row[target] += k * row[source]

    def _min_entry(self, t: int) -> Optional[Tuple[int, int]]:
        best: Optional[Tuple[int, int]] = None
        for i in range(t, self.rows):
            for j in range(t, self.cols):
                value = self.S[i][j]
                if value and (best is None or abs(value) < abs(self.S[best[0]][best[1]])):
                    best = (i, j)
        return best

    def _non_divisible(self, t: int) -> Optional[int]:
        pivot = self.S[t][t]
        for i in range(t + 1, self.rows):
            for j in range(t + 1, self.cols):
                if self.S[i][j] % pivot:
                    return i
        return None

    def _reduce(self) -> None:
        for t in range(min(self.rows, self.cols)):
            while True:
                entry = self._min_entry(t)
                if entry is None:
                    return
                self._swap_rows(t, entry[0])
                self._swap_cols(t, entry[1])
                pivot = self.S[t][t]

                leftover = False
                for i in range(t + 1, self.rows):
                    self._add_row(i, t, -(self.S[i][t] // pivot))
                    leftover = leftover or self.S[i][t] != 0
                for j in range(t + 1, self.cols):
                    self._add_col(j, t, -(self.S[t][j] // pivot))
                    leftover = leftover or self.S[t][j] != 0
                if leftover:
                    continue

                bad_row = self._non_divisible(t)
                if bad_row is None:
                    break
                self._add_row(t, bad_row, 1)

            if self.S[t][t] < 0:
                self._negate_row(t)

    def diagonal(self) -> List[int]:
        return [self.S[i][i] for i in range(min(self.rows, self.cols))]


def smith_normal_form(matrix: Sequence[Sequence[int]]) -> Tuple[Matrix, Matrix, Matrix]:
    """
    Smith normal form of an integer matrix.

    Args:
        matrix: r x c integer matrix

    Returns:
        (S, U, V) with U * matrix * V = S, S diagonal with d_i | d_{i+1}, det U = det V = +-1
    """
    snf = SmithNormalForm(matrix)
    logger.debug(f"Smith form of {snf.rows}x{snf.cols} matrix: diagonal {snf.diagonal()}")
    return snf.S, snf.U, snf.V
