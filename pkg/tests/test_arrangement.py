import pytest

from quasichar.arrangement import (
    Arrangement,
    dedup_columns,
    e_of_J_d,
    e_sets_by_size,
    format_matrix,
    lcm_period,
    load_matrix,
    parse_matrix_text,
    subset_profile,
)
from quasichar.errors import InputError, ResourceError
from quasichar.intmat import IntMatrix


def b2_arrangement():
    return Arrangement(IntMatrix.from_rows([[1, 0, 1, 1], [0, 1, 1, 2]]))


def test_rejects_zero_column():
    with pytest.raises(InputError):
        Arrangement(IntMatrix.from_rows([[1, 0], [0, 0]]))


def test_subset_profile_one_based():
    arr = b2_arrangement()
    p = subset_profile(arr, (3, 4))
    assert p.subset == (3, 4)
    assert p.rank == 2
    assert p.top == 1
    empty = subset_profile(arr, ())
    assert empty.top == 1 and empty.rank == 0


def test_subset_profile_validates_indices():
    arr = b2_arrangement()
    with pytest.raises(InputError):
        subset_profile(arr, (0,))
    with pytest.raises(InputError):
        subset_profile(arr, (5,))


def test_e_of_J_d():
    arr = Arrangement(IntMatrix.from_rows([[1, 1], [1, -1]]))
    p = subset_profile(arr, (1, 2))
    assert p.divisors == (1, 2)
    assert e_of_J_d(p, 1) == 1
    assert e_of_J_d(p, 2) == 2
    assert e_of_J_d(p, 3) == 1
    assert e_of_J_d(p, 6) == 2


def test_lcm_period_b2():
    assert lcm_period(b2_arrangement()) == 2


def test_lcm_period_single_row():
    arr = Arrangement(IntMatrix.from_rows([[2, 3, 4, 9]]))
    # only |J| = 1 matters for a 1 x n matrix
    assert lcm_period(arr) == 36


def test_e_sets_by_size_cumulative():
    arr = b2_arrangement()
    ladder = e_sets_by_size(arr, 2)
    assert ladder[1] == frozenset({1})
    assert ladder[2] == frozenset({1, 2})


def test_budget_refusal():
    arr = b2_arrangement()
    with pytest.raises(ResourceError) as info:
        lcm_period(arr, budget=2)
    assert info.value.planned > info.value.budget


def test_dedup_columns():
    arr = Arrangement(IntMatrix.from_rows([[1, -1, 0, 2], [2, -2, 1, 4]]))
    # column 2 is the negation of column 1; column 4 is NOT a duplicate
    # of column 1 (scalar multiple, not sign flip)
    deduped = dedup_columns(arr)
    assert deduped.num_columns == 3
    assert "dedup" in deduped.label


def test_parse_and_format_roundtrip():
    text = "# comment\n2 3\n1 2 3\n4 -5 6\n"
    m = parse_matrix_text(text)
    assert m.to_rows() == [[1, 2, 3], [4, -5, 6]]
    assert parse_matrix_text(format_matrix(m)).to_rows() == m.to_rows()


def test_parse_errors():
    with pytest.raises(InputError):
        parse_matrix_text("2 2\n1 2\n")  # missing a row
    with pytest.raises(InputError):
        parse_matrix_text("2 2\n1 2\n3\n")  # short row
    with pytest.raises(InputError):
        parse_matrix_text("")


def test_load_matrix(tmp_path):
    path = tmp_path / "mat.txt"
    path.write_text("1 2\n3 7\n")
    assert load_matrix(str(path)).to_rows() == [[3, 7]]
