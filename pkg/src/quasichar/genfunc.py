"""Exact rational generating functions Phi(t) = sum chi(q) t^q.

The canonical form keeps the denominator as (1 - t^rho)^(m+1); residue
slicing works by filtering numerator exponents mod rho, which is exactly
equivalent to the complex Fourier extraction because multiplying by
(1 - t^rho)^(m+1) preserves exponent residues.  All arithmetic is integer.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb, perm

from .errors import ContractError, IntegrityError
from .quasipoly import IntPolynomial, QuasiPolynomial, _divisors, \
    constituent_via_interpolation


@dataclass(frozen=True)
class RationalGF:
    """numerator / product of (1 - t^a)^b factors."""

    numerator: IntPolynomial
    denominator: tuple  # ((a, b), ...) with a ascending

    def __post_init__(self):
        for a, b in self.denominator:
            if a < 1 or b < 1:
                raise ContractError(f"bad denominator factor (1 - t^{a})^{b}")


@dataclass(frozen=True)
class FactoredGF:
    """Simplified form: numerator over a product of cyclotomic factors.

    Factors are (n, exponent) pairs meaning the n-th cyclotomic polynomial
    normalized to constant term +1 (so n=1 is 1-t, n=2 is 1+t, ...).
    """

    numerator: IntPolynomial
    factors: tuple  # ((n, exponent), ...) with n ascending

    def denominator_poly(self) -> IntPolynomial:
        p = IntPolynomial((1,))
        for n, b in self.factors:
            c = cyclotomic_normalized(n)
            for _ in range(b):
                p = p * c
        return p


@lru_cache(maxsize=None)
def cyclotomic_normalized(n: int) -> IntPolynomial:
    """The n-th cyclotomic polynomial with constant term +1.

    For n = 1 this is 1 - t; for n > 1 it equals the usual cyclotomic
    polynomial.  Computed by exact division of t^n - 1 by the proper
    cyclotomic factors, so (1 - t^a) = prod over n | a of this family.
    """
    if n == 1:
        return IntPolynomial((1, -1))
    num = IntPolynomial.from_coeffs([-1] + [0] * (n - 1) + [1])  # t^n - 1
    for d in range(1, n):
        if n % d == 0:
            phi = cyclotomic_normalized(d)
            if d == 1:
                phi = -phi  # back to the monic t - 1
            q = exact_divide(num, phi)
            if q is None:
                raise IntegrityError("cyclotomic division failed")
            num = q
    return num


def exact_divide(num: IntPolynomial, den: IntPolynomial):
    """num / den when den has unit constant term and divides exactly,
    else None.  Ascending synthetic division keeps everything integral."""
    if den.is_zero() or abs(den.coeffs[0]) != 1:
        raise ContractError("divisor must have constant term +-1")
    if num.is_zero():
        return num
    if num.degree < den.degree:
        return None
    u = list(num.coeffs)
    d = den.coeffs
    qlen = len(u) - len(d) + 1
    q = [0] * qlen
    for i in range(qlen):
        qi = u[i] * d[0]  # d[0] is +-1, so this is exact division
        q[i] = qi
        if qi:
            for j, dv in enumerate(d):
                u[i + j] -= qi * dv
    if any(u[qlen:]) or any(u[:qlen]):
        return None
    return IntPolynomial.from_coeffs(q)


def series_expand(gf: RationalGF, nterms: int) -> list[int]:
    """Exact coefficients of t^1 .. t^nterms of the formal power series."""
    c = [0] * (nterms + 1)
    for i, v in enumerate(gf.numerator.coeffs):
        if i <= nterms:
            c[i] = v
    for a, b in gf.denominator:
        for _ in range(b):
            for i in range(a, nterms + 1):
                c[i] += c[i - a]
    return c[1:]


def _one_minus_tpow(a: int, b: int) -> IntPolynomial:
    """(1 - t^a)^b expanded."""
    cs = [0] * (a * b + 1)
    for k in range(b + 1):
        cs[a * k] = (-1) ** k * comb(b, k)
    return IntPolynomial.from_coeffs(cs)


def gf_from_quasipoly(chi: QuasiPolynomial) -> RationalGF:
    """Canonical Phi(t) = Q(t) / (1 - t^rho)^(m+1) with deg Q <= (m+1) rho.

    Beyond that degree every coefficient of the product is an order-(m+1)
    finite difference of a degree-m polynomial along its residue class,
    hence zero.  Q comes from exact truncated multiplication of the series
    by the denominator; the result is verified by re-expansion.
    """
    rho, m = chi.period, chi.m
    bound = (m + 1) * rho
    series = [0] + [chi.evaluate(q) for q in range(1, bound + 1)]
    den = _one_minus_tpow(rho, m + 1)
    q_coeffs = [0] * (bound + 1)
    for i, dv in enumerate(den.coeffs):
        if dv:
            for j in range(bound + 1 - i):
                q_coeffs[i + j] += dv * series[j]
    gf = RationalGF(IntPolynomial.from_coeffs(q_coeffs), ((rho, m + 1),))
    check = series_expand(gf, 2 * bound)
    for q in range(1, 2 * bound + 1):
        if check[q - 1] != chi.evaluate(q):
            raise IntegrityError("generating function re-expansion mismatch")
    return gf


def to_canonical(gf: RationalGF, rho: int, m: int) -> RationalGF:
    """Rewrite over the common denominator (1 - t^rho)^(m+1)."""
    if gf.denominator == ((rho, m + 1),):
        return gf
    total = sum(b for _, b in gf.denominator)
    if total > m + 1:
        raise ContractError("denominator has more than m+1 factors")
    num = gf.numerator
    for a, b in gf.denominator:
        if rho % a != 0:
            raise ContractError(f"factor exponent {a} does not divide {rho}")
        if a != rho:
            # (1 - t^rho)/(1 - t^a) = 1 + t^a + ... + t^(rho - a)
            quot = IntPolynomial.from_coeffs(
                [1 if i % a == 0 else 0 for i in range(rho - a + 1)])
            for _ in range(b):
                num = num * quot
    for _ in range(m + 1 - total):
        num = num * _one_minus_tpow(rho, 1)
    return RationalGF(num, ((rho, m + 1),))


def residue_slice(gf: RationalGF, d: int) -> RationalGF:
    """Q_d: the monomials of the canonical numerator with exponent = d mod rho."""
    if len(gf.denominator) != 1:
        raise ContractError("residue_slice requires the canonical form")
    rho, _ = gf.denominator[0]
    if not 1 <= d <= rho:
        raise ContractError(f"residue d={d} outside 1..{rho}")
    cs = [v if i % rho == d % rho else 0
          for i, v in enumerate(gf.numerator.coeffs)]
    return RationalGF(IntPolynomial.from_coeffs(cs), gf.denominator)


def q_polynomial(d: int, k: int, rho: int) -> IntPolynomial:
    """The unique q_{d,k} with sum_s (d + rho s)^k t^(d + rho s)
    = q_{d,k}(t) / (1 - t^rho)^(k+1)."""
    if not 1 <= d <= rho:
        raise ContractError(f"residue d={d} outside 1..{rho}")
    if k < 0:
        raise ContractError("k must be nonnegative")
    bound = d + (k + 1) * rho
    series = [0] * (bound + 1)
    x = d
    while x <= bound:
        series[x] = x ** k
        x += rho
    den = _one_minus_tpow(rho, k + 1)
    cs = [0] * (bound + 1)
    for i, dv in enumerate(den.coeffs):
        if dv:
            for j in range(bound + 1 - i):
                cs[i + j] += dv * series[j]
    # the true polynomial degree is at most d + k*rho; anything above is a
    # truncation artifact and must be zero
    for i in range(d + k * rho + 1, bound + 1):
        if cs[i]:
            raise IntegrityError("q_polynomial truncation produced junk")
    return IntPolynomial.from_coeffs(cs[:d + k * rho + 1])


def derivative_at_one(p: IntPolynomial, j: int) -> int:
    """Exact j-th derivative at t = 1: sum_i c_i * i!/(i-j)!."""
    if j < 0:
        raise ContractError("derivative order must be nonnegative")
    return sum(c * perm(i, j) for i, c in enumerate(p.coeffs) if i >= j)


def simplify(gf: RationalGF) -> FactoredGF:
    """Cancel every common cyclotomic factor between numerator and
    denominator; the series expansion is unchanged."""
    mult: dict[int, int] = {}
    for a, b in gf.denominator:
        for n in range(1, a + 1):
            if a % n == 0:
                mult[n] = mult.get(n, 0) + b
    num = gf.numerator
    factors = []
    for n in sorted(mult):
        c = cyclotomic_normalized(n)
        b = mult[n]
        while b > 0:
            q = exact_divide(num, c)
            if q is None:
                break
            num = q
            b -= 1
        if b > 0:
            factors.append((n, b))
    return FactoredGF(num, tuple(factors))


def series_expand_factored(gf: FactoredGF, nterms: int) -> list[int]:
    """Coefficients t^1..t^nterms of a simplified generating function."""
    den = gf.denominator_poly()
    d0 = den.coeffs[0]
    if d0 != 1:
        raise ContractError("denominator constant term must be 1")
    c = [0] * (nterms + 1)
    for i in range(nterms + 1):
        v = gf.numerator.coeff(i)
        for j in range(1, min(i, den.degree if den.coeffs else 0) + 1):
            v -= den.coeff(j) * c[i - j]
        c[i] = v
    return c[1:]


def quasipoly_from_gf(gf: RationalGF, rho: int, m: int) -> QuasiPolynomial:
    """Constituents by residue slicing plus exact interpolation.

    The period must be correct: a wrong seed surfaces as a non-integral or
    non-monic interpolant (IntegrityError), never as a silently wrong
    polynomial.
    """
    canon = to_canonical(gf, rho, m)
    nterms = rho + m * rho
    cons = {}
    for d in _divisors(rho):
        sl = residue_slice(canon, d)
        coeffs = series_expand(sl, nterms)
        values = {d + s * rho: coeffs[d + s * rho - 1] for s in range(m + 1)}
        cons[d] = constituent_via_interpolation(values.__getitem__, d, rho, m)
    return QuasiPolynomial(m, rho, cons)


def format_factored_gf(gf: FactoredGF, var: str = "t") -> str:
    """Paper-style display: constant * t^k (rest) / product of factors."""
    from math import gcd as _g

    num = gf.numerator
    if num.is_zero():
        return "0"
    shift = next(i for i, c in enumerate(num.coeffs) if c)
    body = IntPolynomial(num.coeffs[shift:])
    content = 0
    for c in body.coeffs:
        content = _g(content, abs(c))
    if body.coeffs[-1] < 0:
        content = -content
    body = IntPolynomial(tuple(c // content for c in body.coeffs))
    parts = []
    if content == -1:
        parts.append("-")
    elif content != 1:
        parts.append(str(content))
    if shift == 1:
        parts.append(var)
    elif shift > 1:
        parts.append(f"{var}^{shift}")
    if body.degree > 0:
        parts.append(f"({format_poly_ascending(body, var)})")
    elif not parts or parts == ["-"]:
        parts.append("1")
    num_str = " ".join(parts)
    if not gf.factors:
        return num_str
    den_parts = []
    for n, b in gf.factors:
        fs = format_poly_ascending(cyclotomic_normalized(n), var)
        den_parts.append(f"({fs})" + (f"^{b}" if b > 1 else ""))
    return f"{num_str} / {''.join(den_parts)}"


def format_poly_ascending(p: IntPolynomial, var: str = "t") -> str:
    if p.is_zero():
        return "0"
    parts = []
    for power, c in enumerate(p.coeffs):
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


def format_rational_gf(gf: RationalGF, var: str = "t") -> str:
    from .quasipoly import format_poly

    den = "".join(
        f"(1 - {var}^{a})" + (f"^{b}" if b > 1 else "")
        if a > 1 else f"(1 - {var})" + (f"^{b}" if b > 1 else "")
        for a, b in gf.denominator)
    return f"({format_poly(gf.numerator, var)}) / {den}"
