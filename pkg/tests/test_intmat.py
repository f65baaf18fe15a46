import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from quasichar.intmat import IntMatrix, SmithProfile, rank, smith_profile

from oracles import minor_gcd_divisors, rational_rank


def test_from_rows_roundtrip():
    rows = [[1, 2, 3], [4, 5, 6]]
    m = IntMatrix.from_rows(rows)
    assert m.to_rows() == rows
    assert m.rows == 2 and m.cols == 3
    assert m.at(1, 2) == 6
    assert m.row(0) == (1, 2, 3)
    assert m.column(1) == (2, 5)


def test_from_rows_rejects_ragged():
    with pytest.raises(ValueError):
        IntMatrix.from_rows([[1, 2], [3]])


def test_columns_submatrix():
    m = IntMatrix.from_rows([[1, 2, 3], [4, 5, 6]])
    sub = m.columns_submatrix((2, 0))
    assert sub.to_rows() == [[3, 1], [6, 4]]


def test_smith_profile_diagonal():
    m = IntMatrix.from_rows([[2, 0], [0, 6]])
    p = smith_profile(m)
    assert p.rank == 2
    assert p.divisors == (2, 6)


def test_smith_profile_divisibility_repair():
    # diag(2, 3) is not in normal form; divisors must become (1, 6)
    m = IntMatrix.from_rows([[2, 0], [0, 3]])
    assert smith_profile(m).divisors == (1, 6)


def test_smith_profile_zero_matrix():
    m = IntMatrix.from_rows([[0, 0], [0, 0]])
    p = smith_profile(m)
    assert p.rank == 0
    assert p.divisors == ()


def test_smith_profile_known_values():
    # columns of B2: e1, e2, e1+e2, e1+2e2
    m = IntMatrix.from_rows([[1, 0, 1, 1], [0, 1, 1, 2]])
    assert smith_profile(m).divisors == (1, 1)
    assert smith_profile(m.columns_submatrix((2, 3))).divisors == (1, 1)
    # the {e1+e2, e1-e2} pair has index 2
    m2 = IntMatrix.from_rows([[1, 1], [1, -1]])
    assert smith_profile(m2).divisors == (1, 2)


def test_smith_profile_chain_validation():
    with pytest.raises(ValueError):
        SmithProfile(rank=2, divisors=(2, 3))
    with pytest.raises(ValueError):
        SmithProfile(rank=1, divisors=(0,))


small_matrices = st.integers(1, 4).flatmap(
    lambda m: st.integers(1, 4).flatmap(
        lambda n: st.lists(
            st.lists(st.integers(-9, 9), min_size=n, max_size=n),
            min_size=m, max_size=m)))


@settings(max_examples=150, deadline=None)
@given(small_matrices)
def test_smith_matches_minor_gcds(rows):
    p = smith_profile(IntMatrix.from_rows(rows))
    expected = minor_gcd_divisors(rows)
    assert list(p.divisors) == expected
    assert p.rank == rational_rank(rows)


@settings(max_examples=100, deadline=None)
@given(small_matrices, st.randoms(use_true_random=False))
def test_smith_invariant_under_permutation_and_negation(rows, rnd):
    base = smith_profile(IntMatrix.from_rows(rows))
    cols = list(zip(*rows))
    rnd.shuffle(cols)
    cols = [tuple(-x for x in c) if rnd.random() < 0.5 else c for c in cols]
    shuffled = [list(r) for r in zip(*cols)]
    assert smith_profile(IntMatrix.from_rows(shuffled)) == base


def test_rank_helper():
    m = IntMatrix.from_rows([[1, 2], [2, 4], [3, 6]])
    assert rank(m) == 1


def test_max_abs_entry():
    m = IntMatrix.from_rows([[1, -7], [3, 5]])
    assert m.max_abs_entry() == 7
