"""Characteristic quasi-polynomials and their constituents.

A quasi-polynomial of period rho is stored as one monic integer polynomial
per divisor d of rho; evaluation at q selects the constituent for
gcd(rho, q).
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import gcd
from typing import Callable, Iterable, Sequence

from . import _fast
from .arrangement import Arrangement, lcm_period
from .errors import InputError, IntegrityError, ResourceError
from .intmat import smith_profile

NEG_INF = float("-inf")


@dataclass(frozen=True)
class IntPolynomial:
    """Integer polynomial, coefficients ascending, trailing zeros stripped."""

    coeffs: tuple

    @classmethod
    def from_coeffs(cls, coeffs: Iterable[int]) -> "IntPolynomial":
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        return cls(tuple(int(c) for c in cs))

    @classmethod
    def zero(cls) -> "IntPolynomial":
        return cls(())

    @classmethod
    def monomial(cls, coeff: int, power: int) -> "IntPolynomial":
        if coeff == 0:
            return cls(())
        return cls(tuple([0] * power + [coeff]))

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, power: int) -> int:
        return self.coeffs[power] if 0 <= power < len(self.coeffs) else 0

    def __call__(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        cs = list(a)
        for i, v in enumerate(b):
            cs[i] += v
        return IntPolynomial.from_coeffs(cs)

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial(tuple(-c for c in self.coeffs))

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        return self + (-other)

    def __mul__(self, other: "IntPolynomial") -> "IntPolynomial":
        if self.is_zero() or other.is_zero():
            return IntPolynomial(())
        a, b = self.coeffs, other.coeffs
        cs = [0] * (len(a) + len(b) - 1)
        for i, va in enumerate(a):
            if va:
                for j, vb in enumerate(b):
                    cs[i + j] += va * vb
        return IntPolynomial.from_coeffs(cs)

    def scale(self, k: int) -> "IntPolynomial":
        if k == 0:
            return IntPolynomial(())
        return IntPolynomial(tuple(k * c for c in self.coeffs))

    def shift_argument(self, a: int) -> "IntPolynomial":
        """p(t + a), computed by Horner in the polynomial ring."""
        acc = IntPolynomial(())
        base = IntPolynomial((a, 1))
        for c in reversed(self.coeffs):
            acc = acc * base + IntPolynomial.from_coeffs([c])
        return acc


def format_poly(p: IntPolynomial, var: str = "q") -> str:
    """Descending-power display, e.g. 'q^4 - 9q^3 + 23q^2 - 15q'."""
    if p.is_zero():
        return "0"
    parts = []
    for power in range(len(p.coeffs) - 1, -1, -1):
        c = p.coeffs[power]
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        if power == 0:
            body = str(mag)
        else:
            t = var if power == 1 else f"{var}^{power}"
            body = t if mag == 1 else f"{mag}{t}"
        parts.append((sign, body))
    first_sign, first_body = parts[0]
    out = ("-" if first_sign == "-" else "") + first_body
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


def poly_from_roots(roots: Sequence[int]) -> IntPolynomial:
    """Monic polynomial with the given integer roots."""
    p = IntPolynomial((1,))
    for r in roots:
        p = p * IntPolynomial((-r, 1))
    return p


def _divisors(n: int) -> list[int]:
    out = [d for d in range(1, n + 1) if n % d == 0]
    return out


@dataclass(frozen=True)
class QuasiPolynomial:
    """Degree-m quasi-polynomial: one monic constituent per divisor of rho."""

    m: int
    period: int
    constituents: dict

    def __post_init__(self):
        divs = set(_divisors(self.period))
        if set(self.constituents) != divs:
            raise IntegrityError(
                f"constituent keys {sorted(self.constituents)} are not the "
                f"divisors of {self.period}")
        for d, p in self.constituents.items():
            if p.degree != self.m or p.coeffs[-1] != 1:
                raise IntegrityError(
                    f"constituent for d={d} is not monic of degree {self.m}")

    def constituent_for(self, q: int) -> IntPolynomial:
        return self.constituents[gcd(self.period, q)]

    def evaluate(self, q: int) -> int:
        if q < 1:
            raise InputError(f"q must be positive, got {q}")
        return self.constituent_for(q)(q)


def evaluate(chi: QuasiPolynomial, q: int) -> int:
    return chi.evaluate(q)


def _sweep_python(rows: list[list[int]], divisors: Sequence[int]):
    from .intmat import IntMatrix

    mat = IntMatrix.from_rows(rows)
    m, n = mat.rows, mat.cols
    acc = [[0] * (m + 1) for _ in divisors]
    for size in range(n + 1):
        sign = -1 if size & 1 else 1
        for js in combinations(range(n), size):
            if js:
                prof = smith_profile(mat.columns_submatrix(js))
                r, es = prof.rank, prof.divisors
            else:
                r, es = 0, ()
            for di, d in enumerate(divisors):
                p = 1
                for e in es:
                    p *= gcd(e, d)
                acc[di][r] += sign * p
    return acc


def _subset_sweep(arrangement: Arrangement, divisors: Sequence[int],
                  budget: int):
    """acc[d][rank] = sum over all J of (-1)^|J| e(J, d), computed once for
    every requested divisor in a single pass over the 2^n subsets."""
    n = arrangement.num_columns
    planned = 1 << n
    if planned > budget:
        raise ResourceError(
            "full subset sum refused; raise --budget-subsets or use the "
            "generating-function interpolation path",
            planned=planned, budget=budget)
    rows = arrangement.matrix.to_rows()
    if _fast.fast_path_safe(rows, planned):
        return _fast.sweep_subset_sums(rows, list(divisors))
    return _sweep_python(rows, divisors)


def _polys_from_sweep(acc, m: int, divisors: Sequence[int]):
    polys = []
    for di, d in enumerate(divisors):
        cs = [0] * (m + 1)
        for r in range(m + 1):
            cs[m - r] += acc[di][r]
        p = IntPolynomial.from_coeffs(cs)
        if p.degree != m or p.coeffs[-1] != 1:
            raise IntegrityError(
                f"subset sum for d={d} is not monic of degree {m}")
        polys.append(p)
    return polys


def constituent_via_subsets(arrangement: Arrangement, d: int,
                            budget: int = 1 << 30) -> IntPolynomial:
    """P_d as the alternating subset sum of e(J, d) t^(m - rank)."""
    rho = lcm_period(arrangement, budget=budget)
    if d < 1 or rho % d != 0:
        raise InputError(f"d={d} does not divide the lcm period {rho}")
    acc = _subset_sweep(arrangement, [d], budget)
    return _polys_from_sweep(acc, arrangement.dim, [d])[0]


def characteristic_quasipolynomial(arrangement: Arrangement,
                                   budget: int = 1 << 30) -> QuasiPolynomial:
    """All constituents from one sweep: each subset's Smith profile is
    computed once and e(J, d) derived for every divisor d of the period."""
    rho = lcm_period(arrangement, budget=budget)
    divs = _divisors(rho)
    acc = _subset_sweep(arrangement, divs, budget)
    polys = _polys_from_sweep(acc, arrangement.dim, divs)
    return QuasiPolynomial(arrangement.dim, rho, dict(zip(divs, polys)))


def constituent_via_interpolation(point_source: Callable[[int], int], d: int,
                                  rho: int, m: int) -> IntPolynomial:
    """Monic integer polynomial through (q, point_source(q)) at
    q = d, d+rho, ..., d+m*rho, by exact rational Newton interpolation.

    A non-integer coefficient or a non-monic result means the period or the
    point source is wrong, and raises IntegrityError rather than rounding.
    """
    xs = [d + i * rho for i in range(m + 1)]
    ys = [Fraction(point_source(x)) for x in xs]
    # Newton divided differences
    table = list(ys)
    for level in range(1, m + 1):
        for i in range(m, level - 1, -1):
            table[i] = (table[i] - table[i - 1]) / (xs[i] - xs[i - level])
    poly = [Fraction(0)] * (m + 1)
    poly[0] = table[0]
    basis = [Fraction(1)] + [Fraction(0)] * m
    for level in range(1, m + 1):
        # basis *= (t - xs[level-1])
        new = [Fraction(0)] * (m + 1)
        for i in range(level):
            new[i] -= basis[i] * xs[level - 1]
            new[i + 1] += basis[i]
        basis = new
        for i in range(level + 1):
            poly[i] += table[level] * basis[i]
    for c in poly:
        if c.denominator != 1:
            raise IntegrityError(
                f"interpolation for d={d}, rho={rho} gave non-integer "
                f"coefficient {c}; wrong period or point source")
    if poly[m] != 1:
        raise IntegrityError(
            f"interpolation for d={d}, rho={rho} is not monic of degree {m} "
            f"(leading coefficient {poly[m]})")
    return IntPolynomial.from_coeffs(int(c) for c in poly)


def minimum_period(chi: QuasiPolynomial) -> int:
    """Smallest divisor rho' of the stored period that still explains the
    constituent map."""
    rho = chi.period
    for rp in _divisors(rho):
        if all(chi.constituent_for(q) == chi.constituent_for(q + rp)
               for q in range(1, rho + 1)):
            return rp
    return rho


def reduce_to_minimum_period(chi: QuasiPolynomial) -> QuasiPolynomial:
    """Collapse the constituent map onto the minimum period's divisors."""
    rp = minimum_period(chi)
    cons = {d: chi.constituent_for(d) for d in _divisors(rp)}
    return QuasiPolynomial(chi.m, rp, cons)


def combine(plus: Sequence[IntPolynomial],
            minus: Sequence[IntPolynomial]) -> IntPolynomial:
    acc = IntPolynomial(())
    for p in plus:
        acc = acc + p
    for p in minus:
        acc = acc - p
    return acc


def degree_defect(plus: Sequence[IntPolynomial],
                  minus: Sequence[IntPolynomial]):
    """Degree of sum(plus) - sum(minus); -inf for the zero polynomial.

    Drives the Corollary-style checks deg(P_d - P_d') < m - s and the
    prime-power identity P_dd' = P_d + P_d' - P_1.
    """
    return combine(plus, minus).degree
