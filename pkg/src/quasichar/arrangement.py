"""Integral arrangements: column subsets, elementary divisors, lcm period.

Column subsets are indexed 1-based to match the natural numbering of the
matrix file format; internal helpers use 0-based indices.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb, gcd, lcm
from typing import Iterable

from . import _fast
from .errors import InputError, ResourceError
from .intmat import IntMatrix, smith_profile

DEFAULT_SUBSET_BUDGET = 1 << 30


@dataclass(frozen=True)
class Arrangement:
    """An integral coefficient matrix without zero columns."""

    matrix: IntMatrix
    label: str | None = None

    def __post_init__(self):
        for j in range(self.matrix.cols):
            if all(v == 0 for v in self.matrix.column(j)):
                raise InputError(f"column {j + 1} is the zero vector")

    @property
    def dim(self) -> int:
        return self.matrix.rows

    @property
    def num_columns(self) -> int:
        return self.matrix.cols


@dataclass(frozen=True)
class SubsetProfile:
    """Smith data of one column subset J (1-based indices)."""

    subset: tuple
    rank: int
    divisors: tuple

    @property
    def top(self) -> int:
        """e(J): the largest elementary divisor, 1 for the empty subset."""
        return self.divisors[-1] if self.divisors else 1


def subset_profile(arrangement: Arrangement, subset: Iterable[int]) -> SubsetProfile:
    """Smith profile of the columns indexed by `subset` (1-based, may be empty)."""
    idx = sorted(set(subset))
    n = arrangement.num_columns
    for j in idx:
        if not 1 <= j <= n:
            raise InputError(f"column index {j} out of range 1..{n}")
    if not idx:
        return SubsetProfile((), 0, ())
    sub = arrangement.matrix.columns_submatrix(j - 1 for j in idx)
    prof = smith_profile(sub)
    return SubsetProfile(tuple(idx), prof.rank, prof.divisors)


def e_of_J_d(profile: SubsetProfile, d: int) -> int:
    """e(J, d): product of gcd(e_j, d) over the divisor chain."""
    if d < 1:
        raise InputError(f"d must be positive, got {d}")
    p = 1
    for e in profile.divisors:
        p *= gcd(e, d)
    return p


def _planned_subsets(n: int, s_max: int) -> int:
    return sum(comb(n, k) for k in range(1, s_max + 1))


def _top_divisors_by_size(arrangement: Arrangement, s_max: int,
                          budget: int) -> dict[int, list[int]]:
    """e(J) of every nonempty subset with |J| <= s_max, grouped by size.

    Lexicographic order within each size; sizes ascending.
    """
    mat = arrangement.matrix
    n = mat.cols
    planned = _planned_subsets(n, s_max)
    if planned > budget:
        raise ResourceError("subset enumeration refused", planned=planned,
                            budget=budget)
    rows = mat.to_rows()
    use_fast = _fast.fast_path_safe(rows, 1)
    out: dict[int, list[int]] = {}
    for size in range(1, s_max + 1):
        if use_fast:
            out[size] = [int(v) for v in _fast.subset_top_divisors(rows, size)]
        else:
            tops = []
            for js in combinations(range(n), size):
                prof = smith_profile(mat.columns_submatrix(js))
                tops.append(prof.divisors[-1] if prof.rank else 1)
            out[size] = tops
    return out


def lcm_period(arrangement: Arrangement,
               budget: int = DEFAULT_SUBSET_BUDGET) -> int:
    """lcm of e(J) over nonempty subsets with |J| <= min(m, n)."""
    s_max = min(arrangement.dim, arrangement.num_columns)
    by_size = _top_divisors_by_size(arrangement, s_max, budget)
    period = 1
    for size in sorted(by_size):
        for e in by_size[size]:
            period = lcm(period, e)
    return period


def e_sets_by_size(arrangement: Arrangement, s_max: int,
                   budget: int = DEFAULT_SUBSET_BUDGET) -> dict[int, frozenset]:
    """For each s <= s_max, the distinct e(J) over nonempty |J| <= s."""
    if s_max > min(arrangement.dim, arrangement.num_columns):
        raise InputError("s_max exceeds min(rows, columns)")
    by_size = _top_divisors_by_size(arrangement, s_max, budget)
    out: dict[int, frozenset] = {}
    seen: set[int] = set()
    for size in range(1, s_max + 1):
        seen.update(by_size[size])
        out[size] = frozenset(seen)
    return out


def dedup_columns(arrangement: Arrangement) -> Arrangement:
    """Drop columns that repeat an earlier column up to sign.

    |M_q| is unchanged for every q; the original column count is recorded
    in the label.
    """
    mat = arrangement.matrix
    keep = []
    seen = set()
    for j in range(mat.cols):
        col = mat.column(j)
        lead = next(v for v in col if v)
        canon = col if lead > 0 else tuple(-v for v in col)
        if canon not in seen:
            seen.add(canon)
            keep.append(j)
    if len(keep) == mat.cols:
        return arrangement
    base = arrangement.label or "arrangement"
    return Arrangement(mat.columns_submatrix(keep),
                       label=f"{base} (dedup from {mat.cols} columns)")


def parse_matrix_text(text: str) -> IntMatrix:
    """Parse the matrix file format: '# comment' lines, then 'm n', then
    m lines of n space-separated integers."""
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise InputError("empty matrix file")
    header = lines[0].split()
    if len(header) != 2:
        raise InputError(f"bad header line {lines[0]!r}, expected 'm n'")
    try:
        m, n = int(header[0]), int(header[1])
    except ValueError:
        raise InputError(f"bad header line {lines[0]!r}") from None
    if m < 1 or n < 1:
        raise InputError("matrix dimensions must be positive")
    if len(lines) != m + 1:
        raise InputError(f"expected {m} data lines, found {len(lines) - 1}")
    rows = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != n:
            raise InputError(f"expected {n} entries on line {ln!r}")
        try:
            rows.append([int(p) for p in parts])
        except ValueError:
            raise InputError(f"non-integer entry on line {ln!r}") from None
    return IntMatrix.from_rows(rows)


def load_matrix(path: str) -> IntMatrix:
    try:
        with open(path, encoding="utf-8") as fh:
            return parse_matrix_text(fh.read())
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc


def format_matrix(matrix: IntMatrix) -> str:
    lines = [f"{matrix.rows} {matrix.cols}"]
    for i in range(matrix.rows):
        lines.append(" ".join(str(v) for v in matrix.row(i)))
    return "\n".join(lines) + "\n"
