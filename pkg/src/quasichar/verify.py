"""Built-in verification suites, shared by the CLI and the test suite.

Each suite returns a list of (check name, passed, detail) triples.
"""
from __future__ import annotations

import random
from math import gcd

from .arrangement import Arrangement
from .families import (
    midhyperplane,
    root_system_arrangement,
    root_system_gf,
    root_system_quasipoly,
    root_system_spec,
)
from .genfunc import derivative_at_one, q_polynomial, series_expand
from .intmat import IntMatrix
from .oracle import count_complement
from .quasipoly import (
    IntPolynomial,
    characteristic_quasipolynomial,
    combine,
    minimum_period,
)

Check = tuple[str, bool, str]

# marks, Coxeter number, minimum period for every irreducible type
ROOT_SYSTEM_TABLE = {
    ("A", 1): ((1,), 2, 1),
    ("A", 2): ((1, 1), 3, 1),
    ("A", 3): ((1, 1, 1), 4, 1),
    ("A", 4): ((1, 1, 1, 1), 5, 1),
    ("A", 5): ((1, 1, 1, 1, 1), 6, 1),
    ("B", 2): ((1, 2), 4, 2),
    ("B", 3): ((1, 2, 2), 6, 2),
    ("B", 4): ((1, 2, 2, 2), 8, 2),
    ("B", 5): ((1, 2, 2, 2, 2), 10, 2),
    ("C", 3): ((2, 2, 1), 6, 2),
    ("C", 4): ((2, 2, 2, 1), 8, 2),
    ("C", 5): ((2, 2, 2, 2, 1), 10, 2),
    ("D", 4): ((1, 2, 1, 1), 6, 2),
    ("D", 5): ((1, 2, 2, 1, 1), 8, 2),
    ("E", 6): ((1, 2, 2, 3, 2, 1), 12, 6),
    ("E", 7): ((2, 2, 3, 4, 3, 2, 1), 18, 12),
    ("E", 8): ((2, 3, 4, 6, 5, 4, 3, 2), 30, 60),
    ("F", 4): ((2, 3, 4, 2), 12, 12),
    ("G", 2): ((2, 3), 6, 6),
}

M5_ZERO_PAIRS = [(2, 5), (3, 5), (4, 5), (5, 6), (5, 12)]
M5_LINEAR_PAIRS = [(2, 3), (2, 15), (3, 4), (3, 10), (3, 20), (4, 15)]


def suite_root_systems() -> list[Check]:
    checks = []
    for (family, rank), (marks, h, minp) in sorted(ROOT_SYSTEM_TABLE.items()):
        label = f"{family}{rank}"
        spec = root_system_spec(family, rank)
        checks.append((f"{label} marks", spec.marks == marks,
                       f"got {spec.marks}, table {marks}"))
        checks.append((f"{label} coxeter", spec.coxeter == h,
                       f"got {spec.coxeter}, table {h}"))
        chi = root_system_quasipoly(spec)
        mp = minimum_period(chi)
        checks.append((f"{label} minimum period", mp == minp,
                       f"got {mp}, table {minp}"))
        coeffs = series_expand(root_system_gf(spec), 3 * h)
        below = all(coeffs[q - 1] == 0 for q in range(1, h))
        above = all(coeffs[q - 1] > 0 for q in range(h, 3 * h + 1))
        checks.append((f"{label} positivity threshold", below and above,
                       f"chi > 0 exactly from q = {h}"))
    return checks


def suite_bcd_identities() -> list[Check]:
    checks = []
    for m in (3, 4):
        chi_b = root_system_quasipoly(root_system_spec("B", m))
        chi_c = root_system_quasipoly(root_system_spec("C", m))
        same = chi_b.constituents == chi_c.constituents
        checks.append((f"chi_B{m} = chi_C{m}", same, "constituent maps equal"))
    for m in (4, 5):
        chi_b = root_system_quasipoly(root_system_spec("B", m))
        chi_d = root_system_quasipoly(root_system_spec("D", m))
        p2 = chi_b.constituents[2]
        q1 = chi_d.constituents[1]
        shifted = q1.shift_argument(-1)  # Q_1(q - 1)
        checks.append((f"B{m}/D{m}: P_2(q) = Q_1(q-1)", p2 == shifted,
                       "even B constituent vs shifted odd D constituent"))
        ok = all(chi_b.evaluate(2 * q) == chi_d.evaluate(2 * q - 1)
                 for q in range(1, 31))
        checks.append((f"chi_B{m}(2q) = chi_D{m}(2q-1), q <= 30", ok, ""))
    return checks


def suite_m5_relations(budget: int = 1 << 30) -> list[Check]:
    chi = characteristic_quasipolynomial(midhyperplane(5), budget=budget)
    checks = [("M5 lcm period", chi.period == 60, f"got {chi.period}")]
    minus_120t = IntPolynomial((0, -120))
    for d, dp in M5_ZERO_PAIRS:
        rel = combine([chi.constituents[d], chi.constituents[dp]],
                      [chi.constituents[d * dp], chi.constituents[1]])
        checks.append((f"M5 relation ({d},{dp}) = 0", rel.is_zero(),
                       f"got {rel.coeffs}"))
    for d, dp in M5_LINEAR_PAIRS:
        rel = combine([chi.constituents[d], chi.constituents[dp]],
                      [chi.constituents[d * dp], chi.constituents[1]])
        checks.append((f"M5 relation ({d},{dp}) = -120t", rel == minus_120t,
                       f"got {rel.coeffs}"))
    return checks


def random_small_arrangement(rng: random.Random, max_m: int = 3,
                             max_n: int = 5, span: int = 3) -> Arrangement:
    m = rng.randint(1, max_m)
    n = rng.randint(1, max_n)
    cols = []
    while len(cols) < n:
        col = [rng.randint(-span, span) for _ in range(m)]
        if any(col):
            cols.append(col)
    rows = [[c[i] for c in cols] for i in range(m)]
    return Arrangement(IntMatrix.from_rows(rows))


def suite_oracle_grid(instances: int = 200, q_max: int = 20,
                      seed: int = 20070901) -> list[Check]:
    rng = random.Random(seed)
    failures = []
    for case in range(instances):
        arr = random_small_arrangement(rng)
        chi = characteristic_quasipolynomial(arr)
        for q in range(1, q_max + 1):
            if chi.evaluate(q) != count_complement(arr, q):
                failures.append((case, q))
    return [(f"oracle grid ({instances} matrices, q <= {q_max})",
             not failures, f"mismatches: {failures[:5]}")]


def suite_properties() -> list[Check]:
    checks = []
    # equal nonzero derivatives of the q_{d,k} family at t = 1
    for rho in (2, 6):
        ok = True
        for k in range(5):
            for j in range(k + 1):
                vals = {derivative_at_one(q_polynomial(d, k, rho), j)
                        for d in range(1, rho + 1)}
                if len(vals) != 1 or 0 in vals:
                    ok = False
        checks.append((f"q_(d,k) derivative equalities, rho={rho}", ok, ""))
    # prime-power collapse: P_dd' = P_d + P_d' - P_1 for coprime d, d'
    targets = [midhyperplane(4)]
    for family, rank in (("B", 3), ("B", 4), ("C", 3), ("D", 4)):
        targets.append(root_system_arrangement(root_system_spec(family, rank)))
    targets.append(Arrangement(IntMatrix.from_rows([[2, 3, 4, 9]]),
                               label="prime-power line"))
    for arr in targets:
        chi = characteristic_quasipolynomial(arr)
        ok = True
        for d in chi.constituents:
            for dp in chi.constituents:
                if gcd(d, dp) == 1 and chi.period % (d * dp) == 0:
                    rel = combine([chi.constituents[d * dp],
                                   chi.constituents[1]],
                                  [chi.constituents[d], chi.constituents[dp]])
                    ok = ok and rel.is_zero()
        checks.append((f"prime-power identity on {arr.label}", ok, ""))
    # the d = 1 constituent is the ordinary characteristic polynomial:
    # the subset sum with every multiplicity forced to 1
    from itertools import combinations

    from .intmat import smith_profile

    for arr in [midhyperplane(4),
                root_system_arrangement(root_system_spec("B", 2))]:
        chi = characteristic_quasipolynomial(arr)
        m, n = arr.dim, arr.num_columns
        coeffs = [0] * (m + 1)
        for size in range(n + 1):
            sign = -1 if size & 1 else 1
            for js in combinations(range(n), size):
                r = smith_profile(arr.matrix.columns_submatrix(js)).rank \
                    if js else 0
                coeffs[m - r] += sign
        ordinary = IntPolynomial.from_coeffs(coeffs)
        checks.append((f"P_1 is the ordinary char poly on {arr.label}",
                       chi.constituents[1] == ordinary, ""))
    return checks


def suite_e6() -> list[Check]:
    from .arrangement import e_sets_by_size

    arr = root_system_arrangement(root_system_spec("E", 6))
    ladder = e_sets_by_size(arr, 6)
    expected = {1: {1}, 2: {1}, 3: {1}, 4: {1, 2}, 5: {1, 2}, 6: {1, 2, 3}}
    checks = []
    for s, want in expected.items():
        checks.append((f"E6 e-set |J| <= {s}", set(ladder[s]) == want,
                       f"got {sorted(ladder[s])}, expected {sorted(want)}"))
    return checks


SUITES = {
    "root-systems": suite_root_systems,
    "bcd-identities": suite_bcd_identities,
    "m5-relations": suite_m5_relations,
    "oracle-grid": suite_oracle_grid,
    "properties": suite_properties,
    "e6-ladder": suite_e6,
}


def run_suites(names: list[str]) -> list[Check]:
    checks = []
    for name in names:
        if name not in SUITES:
            from .errors import InputError
            raise InputError(
                f"unknown suite {name!r}; available: {', '.join(SUITES)}")
        checks.extend(SUITES[name]())
    return checks
