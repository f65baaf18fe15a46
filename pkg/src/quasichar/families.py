"""Built-in arrangement generators.

Root systems are built from explicit coordinate root sets (integral after
doubling where half-integer coordinates occur), validated for reflection
closure, then re-expressed in the simple-root basis.  The E6 coefficient
matrix is a fixed data table and the generated system is checked against
it column-for-column.  Mid-hyperplane arrangements are generated directly
from their index sets.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, product
from math import comb, factorial, lcm

from .arrangement import Arrangement
from .errors import InputError, IntegrityError
from .genfunc import RationalGF, quasipoly_from_gf
from .intmat import IntMatrix
from .quasipoly import IntPolynomial, QuasiPolynomial

# Paper-order 6 x 36 coefficient matrix of the positive roots of E6.
_E6_MATRIX_ROWS = [
    [1, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 1, 0, 0, 0,
     1, 1, 0, 0, 1, 1, 0, 1, 1, 0, 1, 1, 1, 1, 1],
    [0, 1, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 1, 0, 0, 1, 0, 1, 1, 0,
     1, 0, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 2],
    [0, 0, 1, 0, 0, 0, 1, 0, 1, 0, 0, 1, 1, 0, 1, 0, 1, 1, 1, 0, 1,
     1, 1, 1, 1, 1, 1, 1, 2, 1, 1, 2, 1, 2, 2, 2],
    [0, 0, 0, 1, 0, 0, 0, 1, 1, 1, 0, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1,
     1, 1, 1, 2, 2, 1, 2, 2, 2, 2, 2, 2, 2, 3, 3],
    [0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 1, 0, 0, 1, 1, 1, 0, 1, 1, 1, 1,
     1, 1, 1, 1, 1, 1, 1, 1, 1, 2, 1, 2, 2, 2, 2],
    [0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 1, 1,
     0, 1, 1, 0, 0, 1, 1, 0, 1, 1, 1, 1, 1, 1, 1],
]

_POSITIVE_ROOT_COUNT = {
    "A": lambda m: m * (m + 1) // 2,
    "B": lambda m: m * m,
    "C": lambda m: m * m,
    "D": lambda m: m * (m - 1),
    "E": {6: 36, 7: 63, 8: 120},
    "F": {4: 24},
    "G": {2: 6},
}


@dataclass(frozen=True)
class RootSystemSpec:
    family: str
    rank: int
    marks: tuple
    coxeter: int
    matrix: IntMatrix

    @property
    def label(self) -> str:
        return f"{self.family}{self.rank}"


def _dot(a, b) -> int:
    return sum(x * y for x, y in zip(a, b))


def _check_reflection_closure(roots: frozenset) -> None:
    """The full root set must be closed under all of its reflections."""
    for alpha in roots:
        aa = _dot(alpha, alpha)
        for beta in roots:
            n = 2 * _dot(beta, alpha)
            if n % aa:
                raise IntegrityError("non-crystallographic reflection")
            c = n // aa
            image = tuple(b - c * a for a, b in zip(alpha, beta))
            if image not in roots:
                raise IntegrityError("root set not closed under reflection")


def _solve_in_basis(gram, rhs, simples, beta):
    """Coefficients of beta in the simple basis, or None if beta is outside
    the span.  Exact Gaussian elimination over the rationals."""
    k = len(gram)
    aug = [[Fraction(gram[i][j]) for j in range(k)] + [Fraction(rhs[i])]
           for i in range(k)]
    for col in range(k):
        piv = next(r for r in range(col, k) if aug[r][col] != 0)
        aug[col], aug[piv] = aug[piv], aug[col]
        pv = aug[col][col]
        aug[col] = [v / pv for v in aug[col]]
        for r in range(k):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [v - f * w for v, w in zip(aug[r], aug[col])]
    coeffs = [aug[i][k] for i in range(k)]
    recomposed = [Fraction(0)] * len(beta)
    for c, s in zip(coeffs, simples):
        for i, v in enumerate(s):
            recomposed[i] += c * v
    if any(r != b for r, b in zip(recomposed, beta)):
        return None
    return coeffs


def _coordinate_roots(family: str, rank: int):
    """Full root set and simple roots, in integer coordinates (doubled for
    E and F so half-integer roots become integral)."""
    m = rank

    def e(i, dim, scale=1):
        v = [0] * dim
        v[i] = scale
        return v

    if family == "A":
        dim = m + 1
        roots = {tuple(a - b for a, b in zip(e(i, dim), e(j, dim)))
                 for i in range(dim) for j in range(dim) if i != j}
        simples = [tuple(a - b for a, b in zip(e(i, dim), e(i + 1, dim)))
                   for i in range(m)]
    elif family in ("B", "C", "D"):
        dim = m
        roots = set()
        for i, j in combinations(range(m), 2):
            for si, sj in product((1, -1), repeat=2):
                v = [0] * m
                v[i], v[j] = si, sj
                roots.add(tuple(v))
        if family == "B":
            for i in range(m):
                for s in (1, -1):
                    roots.add(tuple(e(i, m, s)))
        elif family == "C":
            for i in range(m):
                for s in (2, -2):
                    roots.add(tuple(e(i, m, s)))
        simples = [tuple(a - b for a, b in zip(e(i, m), e(i + 1, m)))
                   for i in range(m - 1)]
        if family == "B":
            simples.append(tuple(e(m - 1, m)))
        elif family == "C":
            simples.append(tuple(e(m - 1, m, 2)))
        else:
            last = [0] * m
            last[m - 2] = last[m - 1] = 1
            simples.append(tuple(last))
    elif family == "G":
        roots = set()
        for i, j in combinations(range(3), 2):
            for s in (1, -1):
                v = [0] * 3
                v[i], v[j] = s, -s
                roots.add(tuple(v))
        for i in range(3):
            j, k = [x for x in range(3) if x != i]
            for s in (1, -1):
                v = [0] * 3
                v[i], v[j], v[k] = 2 * s, -s, -s
                roots.add(tuple(v))
        # long simple first so the marks come out as (2, 3)
        simples = [(-2, 1, 1), (1, -1, 0)]
    elif family == "F":
        # doubled coordinates
        roots = set()
        for i in range(4):
            for s in (2, -2):
                roots.add(tuple(e(i, 4, s)))
        for i, j in combinations(range(4), 2):
            for si, sj in product((2, -2), repeat=2):
                v = [0] * 4
                v[i], v[j] = si, sj
                roots.add(tuple(v))
        for signs in product((1, -1), repeat=4):
            roots.add(signs)
        simples = [(0, 2, -2, 0), (0, 0, 2, -2), (0, 0, 0, 2), (1, -1, -1, -1)]
    elif family == "E":
        # doubled coordinates of E8; E7/E6 are the sub-systems spanned by
        # the first 7/6 Bourbaki simple roots
        roots = set()
        for i, j in combinations(range(8), 2):
            for si, sj in product((2, -2), repeat=2):
                v = [0] * 8
                v[i], v[j] = si, sj
                roots.add(tuple(v))
        for signs in product((1, -1), repeat=8):
            if signs.count(-1) % 2 == 0:
                roots.add(signs)
        simples8 = [(1, -1, -1, -1, -1, -1, -1, 1),
                    (2, 2, 0, 0, 0, 0, 0, 0),
                    (-2, 2, 0, 0, 0, 0, 0, 0)]
        for i in range(1, 6):
            v = [0] * 8
            v[i], v[i + 1] = -2, 2
            simples8.append(tuple(v))
        simples = simples8[:rank]
    else:
        raise InputError(f"unknown root system family {family!r}")
    return frozenset(roots), simples


def _positive_root_columns(family: str, rank: int):
    roots, simples = _coordinate_roots(family, rank)
    _check_reflection_closure(roots)
    gram = [[_dot(a, b) for b in simples] for a in simples]
    columns = []
    for beta in roots:
        rhs = [_dot(beta, s) for s in simples]
        coeffs = _solve_in_basis(gram, rhs, simples, beta)
        if coeffs is None:
            continue  # outside the span (E6/E7 inside E8)
        if any(c.denominator != 1 for c in coeffs):
            raise IntegrityError("root has non-integer simple coordinates")
        ints = tuple(int(c) for c in coeffs)
        if all(c >= 0 for c in ints) and any(ints):
            columns.append(ints)
    # fixed documented order: by height, then reverse-lexicographic, which
    # puts alpha_1, ..., alpha_m first
    columns.sort(key=lambda c: (sum(c), tuple(-v for v in c)))
    return columns


def _expected_count(family: str, rank: int) -> int:
    spec = _POSITIVE_ROOT_COUNT[family]
    return spec[rank] if isinstance(spec, dict) else spec(rank)


def _valid_rank(family: str, rank: int) -> bool:
    return {"A": rank >= 1, "B": rank >= 2, "C": rank >= 3, "D": rank >= 4,
            "E": rank in (6, 7, 8), "F": rank == 4, "G": rank == 2,
            }.get(family, False)


@lru_cache(maxsize=None)
def root_system_spec(family: str, rank: int) -> RootSystemSpec:
    """Positive-root coefficient matrix, marks and Coxeter number."""
    family = family.upper()
    if not _valid_rank(family, rank):
        raise InputError(f"invalid root system {family}{rank}")
    columns = _positive_root_columns(family, rank)
    if len(columns) != _expected_count(family, rank):
        raise IntegrityError(
            f"{family}{rank}: generated {len(columns)} positive roots, "
            f"expected {_expected_count(family, rank)}")
    if family == "E" and rank == 6:
        table_cols = [tuple(_E6_MATRIX_ROWS[i][j] for i in range(6))
                      for j in range(36)]
        if sorted(table_cols) != sorted(columns):
            raise IntegrityError("generated E6 disagrees with the data table")
        columns = table_cols
    highest = max(columns, key=sum)
    marks = tuple(highest)
    coxeter = 1 + sum(marks)
    rows = [[col[i] for col in columns] for i in range(rank)]
    return RootSystemSpec(family, rank, marks, coxeter,
                          IntMatrix.from_rows(rows))


def root_system_arrangement(spec: RootSystemSpec) -> Arrangement:
    return Arrangement(spec.matrix, label=spec.label)


def root_system_gf(spec: RootSystemSpec) -> RationalGF:
    """Closed form (n_1...n_m) m! t^h / ((1-t) prod (1-t^n_i))."""
    coeff = factorial(spec.rank)
    for n in spec.marks:
        coeff *= n
    counts: dict[int, int] = {1: 1}
    for n in spec.marks:
        counts[n] = counts.get(n, 0) + 1
    num = IntPolynomial.monomial(coeff, spec.coxeter)
    return RationalGF(num, tuple(sorted(counts.items())))


def root_system_quasipoly(spec: RootSystemSpec) -> QuasiPolynomial:
    """Constituents from the closed-form generating function.

    The period is seeded as lcm of the marks; a wrong seed surfaces as an
    interpolation integrity failure.
    """
    rho = lcm(*spec.marks)
    return quasipoly_from_gf(root_system_gf(spec), rho, spec.rank)


def midhyperplane(m: int) -> Arrangement:
    """Mid-hyperplane arrangement: a_i = a_j and a_i + a_j = a_k + a_l.

    Columns: all e_i - e_j for i < j in lexicographic order, then
    e_i + e_j - e_k - e_l for (i, j, k, l) with i < j, i < k < l, j not in
    {k, l}, lexicographically by (i, j, k, l).
    """
    if m < 4:
        raise InputError(f"mid-hyperplane arrangement needs m >= 4, got {m}")
    columns = []
    for i, j in combinations(range(m), 2):
        v = [0] * m
        v[i], v[j] = 1, -1
        columns.append(v)
    for i in range(m):
        for j in range(i + 1, m):
            for k, l in combinations(range(i + 1, m), 2):
                if j in (k, l):
                    continue
                v = [0] * m
                v[i] += 1
                v[j] += 1
                v[k] -= 1
                v[l] -= 1
                columns.append(v)
    expected = comb(m, 2) + 3 * comb(m, 4)
    if len(columns) != expected:
        raise IntegrityError(
            f"mid-hyperplane column count {len(columns)} != {expected}")
    rows = [[col[i] for col in columns] for i in range(m)]
    return Arrangement(IntMatrix.from_rows(rows), label=f"mid:{m}")


def family_from_id(family_id: str) -> Arrangement:
    """Resolve CLI family ids like 'B:4', 'E:6', 'mid:5'."""
    parts = family_id.split(":")
    if len(parts) != 2:
        raise InputError(f"bad family id {family_id!r}, expected NAME:RANK")
    name, rank_s = parts
    try:
        rank = int(rank_s)
    except ValueError:
        raise InputError(f"bad rank in family id {family_id!r}") from None
    if name == "mid":
        return midhyperplane(rank)
    return root_system_arrangement(root_system_spec(name, rank))
