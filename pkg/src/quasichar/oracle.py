"""Brute-force ground truth: count points of (Z_q)^m off every hyperplane.

Deliberately independent of the Smith-profile machinery so it can serve
as the oracle behind every derived expected value.
"""
from __future__ import annotations

import numpy as np

from .arrangement import Arrangement
from .errors import InputError, ResourceError

DEFAULT_ORACLE_BUDGET = 10 ** 9

_CHUNK = 1 << 18


def count_complement(arrangement: Arrangement, q: int,
                     budget: int = DEFAULT_ORACLE_BUDGET) -> int:
    """|M_q|: the number of z in (Z_q)^m with every coordinate of zS
    nonzero mod q."""
    if q < 1:
        raise InputError(f"q must be positive, got {q}")
    if q == 1:
        return 0  # Z_1 has no nonzero residues
    m = arrangement.dim
    total = q ** m
    if total > budget:
        raise ResourceError("oracle enumeration refused", planned=total,
                            budget=budget)
    S = np.array(arrangement.matrix.to_rows(), dtype=np.int64) % q
    powers = q ** np.arange(m - 1, -1, -1, dtype=np.int64)
    count = 0
    for start in range(0, total, _CHUNK):
        idx = np.arange(start, min(start + _CHUNK, total), dtype=np.int64)
        z = (idx[:, None] // powers[None, :]) % q
        prods = (z @ S) % q
        count += int(np.count_nonzero(prods.all(axis=1)))
    return count
