import pytest

from kirillov.errors import InvalidRankSequence
from kirillov.fields import make_prime_field, rank_sequence
from kirillov.partitions import (
    EMPTY,
    Partition,
    jordan_type_from_ranks,
    partitions_of,
)

from conftest import jordan_block_matrix, oracle_count_syt, oracle_partitions, oracle_removable_cells


def test_dual_examples():
    assert Partition((3, 1)).dual() == Partition((2, 1, 1))
    assert Partition((4,)).dual() == Partition((1, 1, 1, 1))
    assert Partition((2, 2)).dual() == Partition((2, 2))


def test_dual_involution_and_size():
    for n in range(13):
        for lam in partitions_of(n):
            dual = lam.dual()
            assert dual.dual() == lam
            assert dual.n == n


def test_removable_cells_against_oracle():
    for n in range(1, 11):
        for lam in partitions_of(n):
            got = [(c.row, c.col) for c in lam.removable_cells()]
            assert got == oracle_removable_cells(lam.parts)


def test_removable_cells_examples():
    # oracle gives [(2, 1), (1, 3)] for (3,1) and [(2, 2)] for (2,2)
    assert oracle_removable_cells((3, 1)) == [(2, 1), (1, 3)]
    cells = Partition((3, 1)).removable_cells()
    assert [(c.row, c.col) for c in cells] == [(2, 1), (1, 3)]
    assert [(c.row, c.col) for c in Partition((1,)).removable_cells()] == [(1, 1)]
    assert oracle_removable_cells((2, 2)) == [(2, 2)]
    assert [(c.row, c.col) for c in Partition((2, 2)).removable_cells()] == [(2, 2)]


def test_removable_cell_sits_at_bottom_of_column():
    for n in range(1, 11):
        for lam in partitions_of(n):
            dual = lam.dual().parts
            for cell in lam.removable_cells():
                assert cell.row == dual[cell.col - 1]


def test_cell_count_is_number_of_distinct_parts():
    for n in range(1, 13):
        for lam in partitions_of(n):
            assert len(lam.removable_cells()) == len(set(lam.parts))


def test_remove_cell():
    lam = Partition((3, 1))
    by_col = {c.col: c.index for c in lam.removable_cells()}
    assert lam.remove_cell(by_col[3]) == Partition((2, 1))
    assert lam.remove_cell(by_col[1]) == Partition((3,))
    assert Partition((1,)).remove_cell(0) == EMPTY
    with pytest.raises(IndexError):
        lam.remove_cell(5)


def test_jordan_type_from_ranks_examples():
    assert jordan_type_from_ranks((6, 5, 4, 3, 2, 1), 7) == Partition((7,))
    assert jordan_type_from_ranks((4, 1, 0, 0, 0, 0), 7) == Partition((3, 2, 2))
    assert jordan_type_from_ranks((0, 0, 0, 0, 0, 0), 7) == Partition((1,) * 7)
    assert jordan_type_from_ranks((4, 2, 0, 0, 0, 0), 7) == Partition((3, 3, 1))
    assert jordan_type_from_ranks((2, 0, 0, 0, 0, 0), 7) == Partition((2, 2, 1, 1, 1))


def test_jordan_type_from_ranks_rejects_bad_input():
    # negative multiplicity
    with pytest.raises(InvalidRankSequence):
        jordan_type_from_ranks((5, 5, 0, 0, 0, 0), 7)
    # ranks never decay to zero: block sizes cannot sum to n
    with pytest.raises(InvalidRankSequence):
        jordan_type_from_ranks((6, 6, 6, 6, 6, 6), 7)
    # short sequences are fine (trailing zeros implied)
    assert jordan_type_from_ranks((1,), 7) == Partition((2, 1, 1, 1, 1, 1))


def test_jordan_type_round_trip_through_matrices():
    ctx = make_prime_field(5)
    for n in range(1, 8):
        for lam in partitions_of(n):
            mat = jordan_block_matrix(ctx, lam.parts)
            ranks = rank_sequence(mat)
            assert jordan_type_from_ranks(ranks, n) == lam


def test_hook_dimension_examples():
    for n in range(1, 8):
        assert Partition((n,)).hook_dimension() == 1
    assert oracle_count_syt((3, 1)) == 3
    assert Partition((3, 1)).hook_dimension() == 3
    assert Partition((3, 2, 1, 1)).hook_dimension() == 35


def test_hook_dimension_against_syt_oracle():
    for n in range(1, 8):
        for lam in partitions_of(n):
            assert lam.hook_dimension() == oracle_count_syt(lam.parts)


def test_sum_of_squares_is_factorial():
    from math import factorial

    for n in range(1, 11):
        total = sum(lam.hook_dimension() ** 2 for lam in partitions_of(n))
        assert total == factorial(n)


def test_partitions_of_counts_and_order():
    assert [lam.parts for lam in partitions_of(4)] == [
        (4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    assert len(partitions_of(7)) == 15
    assert partitions_of(0) == (EMPTY,)
    for n in range(11):
        got = {lam.parts for lam in partitions_of(n)}
        assert got == oracle_partitions(n)
        # reverse-lexicographic order
        listed = [lam.parts for lam in partitions_of(n)]
        assert listed == sorted(listed, reverse=True)


def test_text_round_trip():
    lam = Partition((3, 2, 1, 1))
    assert lam.text() == "3,2,1,1"
    assert Partition.from_text("3,2,1,1") == lam
    with pytest.raises(ValueError):
        Partition((1, 2))
    with pytest.raises(ValueError):
        Partition((0,))
