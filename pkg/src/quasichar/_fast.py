"""Compiled int64 kernels for the mass subset/Smith-profile sweeps.

These kernels are a speed layer only: the pure-Python arbitrary-precision
path in `intmat`/`quasipoly` is authoritative, and `fast_path_safe` gates
the kernels behind a Hadamard-style overflow bound so int64 can never
silently wrap.  Both paths are cross-checked in the test suite.
"""
from __future__ import annotations

import math

import numpy as np

try:
    import numba
    from numba import njit, prange

    HAVE_NUMBA = True

    def set_num_threads(n: int) -> None:
        """Request n worker threads, clamped to what the host offers.

        Thread count never affects results (the sweep accumulates per
        chunk and sums deterministically), only wall time.
        """
        numba.set_num_threads(max(1, min(n, numba.config.NUMBA_NUM_THREADS)))
except ImportError:  # pragma: no cover - numba is a declared dependency
    HAVE_NUMBA = False

    def njit(*args, **kwargs):
        def wrap(f):
            return f
        if args and callable(args[0]):
            return args[0]
        return wrap

    prange = range

    def set_num_threads(n):
        pass


_INT64_SAFE = 1 << 61


def minor_bound(matrix_rows: list[list[int]]) -> int:
    """Hadamard-style upper bound on any minor of the matrix (over all
    column subsets): product over rows of the full-row euclidean norm."""
    bound = 1.0
    for row in matrix_rows:
        s = math.sqrt(sum(v * v for v in row))
        if s > 1.0:
            bound *= s
        if bound > 1e30:
            return 1 << 100
    return int(bound) + 1


def fast_path_safe(matrix_rows: list[list[int]], n_subsets: int) -> bool:
    """True when the int64 kernels cannot overflow for this matrix.

    Elimination entries stay within ~bound^2 for smallest-pivot SNF, and
    the per-divisor accumulators stay within n_subsets * bound.
    """
    if not HAVE_NUMBA:
        return False
    b = minor_bound(matrix_rows)
    return b * b < _INT64_SAFE and n_subsets * b < _INT64_SAFE


@njit(cache=True)
def _gcd64(a, b):
    while b:
        a, b = b, a % b
    return a


@njit(cache=True)
def _snf_divisors64(buf, m, k, out):
    """In-place SNF diagonal of the m x k block of `buf`; returns rank."""
    t = 0
    limit = min(m, k)
    while t < limit:
        pi = -1
        pj = -1
        best = 0
        for i in range(t, m):
            for j in range(t, k):
                v = buf[i, j]
                av = -v if v < 0 else v
                if av != 0 and (best == 0 or av < best):
                    best = av
                    pi = i
                    pj = j
        if best == 0:
            break
        if pi != t:
            for j in range(t, k):
                tmp = buf[t, j]
                buf[t, j] = buf[pi, j]
                buf[pi, j] = tmp
        if pj != t:
            for i in range(t, m):
                tmp = buf[i, t]
                buf[i, t] = buf[i, pj]
                buf[i, pj] = tmp
        while True:
            pivot = buf[t, t]
            for i in range(t + 1, m):
                v = buf[i, t]
                if v != 0:
                    q = v // pivot
                    if q != 0:
                        for j in range(t, k):
                            buf[i, j] -= q * buf[t, j]
            swapped = False
            for i in range(t + 1, m):
                if buf[i, t] != 0:
                    for j in range(t, k):
                        tmp = buf[t, j]
                        buf[t, j] = buf[i, j]
                        buf[i, j] = tmp
                    swapped = True
                    break
            if swapped:
                continue
            pivot = buf[t, t]
            for j in range(t + 1, k):
                v = buf[t, j]
                if v != 0:
                    q = v // pivot
                    if q != 0:
                        for i in range(t, m):
                            buf[i, j] -= q * buf[i, t]
            cswapped = False
            for j in range(t + 1, k):
                if buf[t, j] != 0:
                    for i in range(t, m):
                        tmp = buf[i, t]
                        buf[i, t] = buf[i, j]
                        buf[i, j] = tmp
                    cswapped = True
                    break
            if cswapped:
                continue
            pivot = buf[t, t]
            bad = -1
            for i in range(t + 1, m):
                for j in range(t + 1, k):
                    if buf[i, j] % pivot != 0:
                        bad = i
                        break
                if bad >= 0:
                    break
            if bad >= 0:
                for j in range(t, k):
                    buf[t, j] += buf[bad, j]
                continue
            break
        t += 1
    for i in range(t):
        v = buf[i, i]
        out[i] = -v if v < 0 else v
    return t


@njit(cache=True, parallel=True)
def _sweep_kernel(S, divs, high_bits):
    m, n = S.shape
    nd = divs.shape[0]
    low = n - high_bits
    nchunks = 1 << high_bits
    acc = np.zeros((nchunks, nd, m + 1), np.int64)
    for c in prange(nchunks):
        buf = np.empty((m, n), np.int64)
        e = np.empty(m, np.int64)
        base = c << low
        nlow = 1 << low
        for lo in range(nlow):
            mask = base | lo
            k = 0
            for j in range(n):
                if (mask >> j) & 1:
                    for i in range(m):
                        buf[i, k] = S[i, j]
                    k += 1
            r = _snf_divisors64(buf, m, k, e)
            sign = -1 if (k & 1) else 1
            for di in range(nd):
                d = divs[di]
                p = 1
                for j2 in range(r):
                    p *= _gcd64(e[j2], d)
                acc[c, di, r] += sign * p
    return acc.sum(axis=0)


@njit(cache=True)
def _combos_top_divisor_kernel(S, size, total):
    m, n = S.shape
    out = np.empty(total, np.int64)
    idx = np.empty(size, np.int64)
    for i in range(size):
        idx[i] = i
    buf = np.empty((m, size), np.int64)
    e = np.empty(m, np.int64)
    c = 0
    while True:
        for jj in range(size):
            j = idx[jj]
            for i in range(m):
                buf[i, jj] = S[i, j]
        r = _snf_divisors64(buf, m, size, e)
        out[c] = e[r - 1] if r > 0 else 1
        c += 1
        # next lexicographic combination
        pos = size - 1
        while pos >= 0 and idx[pos] == n - size + pos:
            pos -= 1
        if pos < 0:
            break
        idx[pos] += 1
        for j2 in range(pos + 1, size):
            idx[j2] = idx[j2 - 1] + 1
    return out


def sweep_subset_sums(matrix_rows: list[list[int]], divisors: list[int]):
    """acc[d_index][rank] = sum over all column subsets J with that rank of
    (-1)^|J| e(J, d).  Deterministic for any thread count."""
    S = np.array(matrix_rows, dtype=np.int64)
    n = S.shape[1]
    high_bits = min(10, max(0, n - 4))
    acc = _sweep_kernel(S, np.array(divisors, dtype=np.int64), high_bits)
    return acc.tolist()


def subset_top_divisors(matrix_rows: list[list[int]], size: int) -> np.ndarray:
    """e(J) for every size-`size` column subset, in lexicographic order."""
    S = np.array(matrix_rows, dtype=np.int64)
    total = math.comb(S.shape[1], size)
    return _combos_top_divisor_kernel(S, size, total)


def snf_divisors_int64(matrix_rows: list[list[int]]) -> list[int]:
    """Fast-path SNF diagonal; used by tests to cross-check the pure path."""
    S = np.array(matrix_rows, dtype=np.int64)
    m, k = S.shape
    out = np.empty(min(m, k), np.int64)
    r = _snf_divisors64(S.copy(), m, k, out)
    return [int(v) for v in out[:r]]
