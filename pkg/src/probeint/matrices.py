"""Labeled symbol matrices.

A LabeledMatrix is a rectangular matrix over the alphabet {1, 0, R, C, X}
whose rows and columns carry vertex labels.  Plain 0/1 matrices are the
degenerate case; the extra symbols appear in zero partitions (R, C) and in
padded square forms (X, before resolution).

All values are immutable; every operation returns a new matrix.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

ONE = "1"
ZERO = "0"
R = "R"
C = "C"
X = "X"

SYMBOLS = (ONE, ZERO, R, C, X)


@dataclass(frozen=True)
class LabeledMatrix:
    """Immutable rows x cols matrix over the five-symbol alphabet."""

    rows: tuple
    cols: tuple
    entries: tuple  # tuple of row tuples, entries[i][j] over SYMBOLS

    def __post_init__(self):
        if len(set(self.rows)) != len(self.rows):
            raise ValueError("duplicate row labels")
        if len(set(self.cols)) != len(self.cols):
            raise ValueError("duplicate column labels")
        if len(self.entries) != len(self.rows):
            raise ValueError("row count mismatch")
        for row in self.entries:
            if len(row) != len(self.cols):
                raise ValueError("column count mismatch")
            for e in row:
                if e not in SYMBOLS:
                    raise ValueError(f"bad entry {e!r}")

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), len(self.cols)

    def row_index(self, label) -> int:
        return self.rows.index(label)

    def col_index(self, label) -> int:
        return self.cols.index(label)

    def entry(self, row_label, col_label) -> str:
        return self.entries[self.row_index(row_label)][self.col_index(col_label)]

    def is_zero_one(self) -> bool:
        return all(e in (ZERO, ONE) for row in self.entries for e in row)

    def is_square(self) -> bool:
        return len(self.rows) == len(self.cols)

    def is_symmetric(self) -> bool:
        if not self.is_square():
            return False
        n = len(self.rows)
        return all(
            self.entries[i][j] == self.entries[j][i]
            for i in range(n)
            for j in range(i + 1, n)
        )

    def transpose(self) -> "LabeledMatrix":
        r, c = self.shape
        return LabeledMatrix(
            rows=self.cols,
            cols=self.rows,
            entries=tuple(tuple(self.entries[i][j] for i in range(r)) for j in range(c)),
        )

    def permuted(self, row_order: Sequence, col_order: Sequence) -> "LabeledMatrix":
        """Reorder rows and columns to the given label sequences."""
        if len(row_order) != len(self.rows) or set(row_order) != set(self.rows):
            raise ValueError("row_order is not a permutation of the row labels")
        if len(col_order) != len(self.cols) or set(col_order) != set(self.cols):
            raise ValueError("col_order is not a permutation of the column labels")
        ri = [self.row_index(r_) for r_ in row_order]
        ci = [self.col_index(c_) for c_ in col_order]
        return LabeledMatrix(
            rows=tuple(row_order),
            cols=tuple(col_order),
            entries=tuple(tuple(self.entries[i][j] for j in ci) for i in ri),
        )

    def submatrix(self, row_labels: Iterable, col_labels: Iterable) -> "LabeledMatrix":
        row_labels = tuple(row_labels)
        col_labels = tuple(col_labels)
        ri = [self.row_index(r_) for r_ in row_labels]
        ci = [self.col_index(c_) for c_ in col_labels]
        return LabeledMatrix(
            rows=row_labels,
            cols=col_labels,
            entries=tuple(tuple(self.entries[i][j] for j in ci) for i in ri),
        )

    def with_entry(self, i: int, j: int, value: str) -> "LabeledMatrix":
        row = self.entries[i][:j] + (value,) + self.entries[i][j + 1 :]
        return LabeledMatrix(
            rows=self.rows,
            cols=self.cols,
            entries=self.entries[:i] + (row,) + self.entries[i + 1 :],
        )

    def zero_positions(self) -> list[tuple[int, int]]:
        """Index pairs of entries that are 0, R or C (anything but 1 and X)."""
        return [
            (i, j)
            for i, row in enumerate(self.entries)
            for j, e in enumerate(row)
            if e in (ZERO, R, C)
        ]

    def relabeled(self, zeros: dict) -> "LabeledMatrix":
        """Replace entries at the given (i, j) index positions."""
        entries = [list(row) for row in self.entries]
        for (i, j), value in zeros.items():
            entries[i][j] = value
        return LabeledMatrix(
            rows=self.rows, cols=self.cols, entries=tuple(tuple(r_) for r_ in entries)
        )


def from_rows(rows: Sequence, cols: Sequence, data: Sequence[Sequence[str]]) -> LabeledMatrix:
    return LabeledMatrix(
        rows=tuple(rows), cols=tuple(cols), entries=tuple(tuple(r_) for r_ in data)
    )


def from_zero_one(data: Sequence[Sequence[int]], rows=None, cols=None) -> LabeledMatrix:
    """Build a 0/1 matrix from nested ints; labels default to r0.., c0.."""
    nrows = len(data)
    ncols = len(data[0]) if nrows else 0
    if rows is None:
        rows = tuple(f"r{i}" for i in range(nrows))
    if cols is None:
        cols = tuple(f"c{j}" for j in range(ncols))
    entries = tuple(tuple(ONE if v else ZERO for v in row) for row in data)
    return LabeledMatrix(rows=tuple(rows), cols=tuple(cols), entries=entries)


def strip_to(m: LabeledMatrix, row_labels: Sequence, col_labels: Sequence) -> LabeledMatrix:
    """Delete all rows/columns not in the given label sets, keeping m's order."""
    keep_r = [r_ for r_ in m.rows if r_ in set(row_labels)]
    keep_c = [c_ for c_ in m.cols if c_ in set(col_labels)]
    return m.submatrix(keep_r, keep_c)
