"""Exact integer matrices and Smith normal form diagonals.

Everything here runs in arbitrary-precision Python integers.  Only the
diagonal of the Smith normal form is ever needed (the elementary divisor
chain), so no transformation matrices are computed.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence


@dataclass(frozen=True)
class IntMatrix:
    """An m x n integer matrix stored row-major as a flat tuple."""

    rows: int
    cols: int
    entries: tuple

    def __post_init__(self):
        if self.rows < 1 or self.cols < 1:
            raise ValueError("matrix must have at least one row and column")
        if len(self.entries) != self.rows * self.cols:
            raise ValueError("entry count does not match shape")
        for v in self.entries:
            if not isinstance(v, int) or isinstance(v, bool):
                raise ValueError(f"non-integer entry {v!r}")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "IntMatrix":
        m = len(rows)
        n = len(rows[0]) if m else 0
        flat = []
        for r in rows:
            if len(r) != n:
                raise ValueError("ragged rows")
            flat.extend(int(v) for v in r)
        return cls(m, n, tuple(flat))

    def at(self, i: int, j: int) -> int:
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def column(self, j: int) -> tuple:
        return tuple(self.entries[i * self.cols + j] for i in range(self.rows))

    def to_rows(self) -> list[list[int]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def columns_submatrix(self, col_indices: Iterable[int]) -> "IntMatrix":
        """Submatrix keeping the given 0-based columns, in the given order."""
        idx = list(col_indices)
        flat = []
        for i in range(self.rows):
            base = i * self.cols
            flat.extend(self.entries[base + j] for j in idx)
        return IntMatrix(self.rows, len(idx), tuple(flat))

    def max_abs_entry(self) -> int:
        return max(abs(v) for v in self.entries)


@dataclass(frozen=True)
class SmithProfile:
    """Rank and elementary divisor chain e_1 | e_2 | ... | e_rank."""

    rank: int
    divisors: tuple

    def __post_init__(self):
        if len(self.divisors) != self.rank:
            raise ValueError("divisor count must equal rank")
        for a, b in zip(self.divisors, self.divisors[1:]):
            if b % a != 0:
                raise ValueError(f"divisor chain broken: {a} does not divide {b}")
        if any(d < 1 for d in self.divisors):
            raise ValueError("divisors must be positive")


def smith_diagonal(rows: list[list[int]]) -> list[int]:
    """Destructively reduce `rows` and return the positive SNF diagonal.

    Pivoting on a smallest-magnitude nonzero entry keeps intermediate
    entries small; the off-diagonal divisibility repair guarantees the
    chain condition on the way out.
    """
    m = len(rows)
    n = len(rows[0]) if m else 0
    t = 0
    limit = min(m, n)
    while t < limit:
        # locate a smallest-magnitude nonzero pivot in the trailing block
        pi = pj = -1
        best = 0
        for i in range(t, m):
            ri = rows[i]
            for j in range(t, n):
                v = ri[j]
                if v and (best == 0 or abs(v) < best):
                    best = abs(v)
                    pi, pj = i, j
        if best == 0:
            break
        rows[t], rows[pi] = rows[pi], rows[t]
        if pj != t:
            for r in rows:
                r[t], r[pj] = r[pj], r[t]
        while True:
            pivot = rows[t][t]
            for i in range(t + 1, m):
                v = rows[i][t]
                if v:
                    q = v // pivot
                    if q:
                        ri, rt = rows[i], rows[t]
                        for j in range(t, n):
                            ri[j] -= q * rt[j]
            swapped = False
            for i in range(t + 1, m):
                if rows[i][t]:
                    rows[t], rows[i] = rows[i], rows[t]
                    swapped = True
                    break
            if swapped:
                continue
            pivot = rows[t][t]
            rt = rows[t]
            for j in range(t + 1, n):
                v = rt[j]
                if v:
                    q = v // pivot
                    if q:
                        for r in rows:
                            r[j] -= q * r[t]
            cswapped = False
            for j in range(t + 1, n):
                if rt[j]:
                    for r in rows:
                        r[t], r[j] = r[j], r[t]
                    cswapped = True
                    break
            if cswapped:
                continue
            # divisibility repair: pivot must divide every trailing entry
            pivot = rows[t][t]
            bad = -1
            for i in range(t + 1, m):
                ri = rows[i]
                for j in range(t + 1, n):
                    if ri[j] % pivot:
                        bad = i
                        break
                if bad >= 0:
                    break
            if bad >= 0:
                rb, rt = rows[bad], rows[t]
                for j in range(t, n):
                    rt[j] += rb[j]
                continue
            break
        t += 1
    return [abs(rows[i][i]) for i in range(t)]


def smith_profile(matrix: IntMatrix) -> SmithProfile:
    """Elementary divisors of an integer matrix, in divisibility order."""
    diag = smith_diagonal(matrix.to_rows())
    return SmithProfile(len(diag), tuple(diag))


def rank(matrix: IntMatrix) -> int:
    """Rank over the rationals (= number of nonzero elementary divisors)."""
    return smith_profile(matrix).rank
