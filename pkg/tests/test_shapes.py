import pytest

from hecke_strip.shapes import (
    Box,
    SkewShape,
    SkewTableau,
    all_partitions,
    all_skew_shapes,
    axial_distance,
    check_partition,
    contains,
    content,
    enumerate_skew_tableaux,
    format_partition,
    is_horizontal_strip,
    parse_partition,
    partitions_of,
    sub_partitions,
    swap_entries,
    young_successors,
)
from oracle_fillings import brute_force_tableau_count, hook_length_count


def test_check_partition():
    assert check_partition([3, 1, 0, 0]) == (3, 1)
    assert check_partition([]) == ()
    with pytest.raises(ValueError):
        check_partition([1, 2])
    with pytest.raises(ValueError):
        check_partition([2, -1])


def test_parse_and_format():
    assert parse_partition("") == ()
    assert parse_partition("0") == ()
    assert parse_partition("2,1") == (2, 1)
    assert format_partition((3, 1)) == "3,1"
    with pytest.raises(ValueError):
        parse_partition("1,2")
    with pytest.raises(ValueError):
        parse_partition("x")


def test_contains():
    assert contains((), (3, 1))
    assert not contains((2, 2), (3, 1))
    assert contains((1,), (2, 1))
    assert not contains((1, 1, 1), (2, 1))


def test_horizontal_strip():
    assert is_horizontal_strip(SkewShape((), (3,)))
    assert not is_horizontal_strip(SkewShape((), (1, 1)))
    assert is_horizontal_strip(SkewShape((1,), (2, 1)))
    assert is_horizontal_strip(SkewShape((2, 1), (2, 1)))  # empty shape


def test_horizontal_strip_matches_column_multiplicity():
    # the one-line criterion outer_{i+1} <= inner_i must agree with "no
    # column holds two skew boxes" on every shape in range
    for shape in all_skew_shapes(8):
        columns = [b.col for b in shape.boxes()]
        multiplicity_ok = len(columns) == len(set(columns))
        assert is_horizontal_strip(shape) == multiplicity_ok, shape


def test_young_successors_examples():
    assert young_successors(()) == [(1,)]
    assert young_successors((1,)) == [(2,), (1, 1)]
    assert young_successors((2, 1)) == [(3, 1), (2, 2), (2, 1, 1)]


def test_young_successors_properties():
    for n in range(9):
        for p in partitions_of(n):
            succ = young_successors(p)
            assert len(succ) == len(set(succ))
            for q in succ:
                assert contains(p, q)
                assert sum(q) == sum(p) + 1


def test_partitions_of_order():
    assert list(partitions_of(3)) == [(3,), (2, 1), (1, 1, 1)]
    assert list(partitions_of(4))[0] == (4,)
    assert list(all_partitions(2)) == [(), (1,), (2,), (1, 1)]


def test_sub_partitions():
    assert set(sub_partitions((2, 1))) == {(2, 1), (2,), (1, 1), (1,), ()}
    assert sub_partitions(()) == [()]
    for lam in sub_partitions((3, 2, 2)):
        assert contains(lam, (3, 2, 2))


def test_box_content_and_axial_distance():
    assert content(Box(1, 1)) == 0
    assert content(Box(1, 3)) == 2
    assert content(Box(3, 1)) == -2
    assert axial_distance(Box(1, 2), Box(2, 1)) == 2
    assert axial_distance(Box(1, 1), Box(1, 3)) == 2
    assert axial_distance(Box(1, 1), Box(2, 1)) == 1
    with pytest.raises(ValueError):
        axial_distance(Box(2, 2), Box(2, 2))


def test_skew_shape_boxes():
    shape = SkewShape((1,), (2, 1))
    assert shape.boxes() == [Box(1, 2), Box(2, 1)]
    assert shape.size == 2
    with pytest.raises(ValueError):
        SkewShape((2, 2), (3, 1))


def test_enumeration_counts():
    assert len(enumerate_skew_tableaux(SkewShape((), (2, 1)))) == 2
    assert len(enumerate_skew_tableaux(SkewShape((1,), (2, 2)))) == 2
    for n in range(7):
        assert len(enumerate_skew_tableaux(SkewShape((), (n,) if n else ()))) == 1
    assert len(enumerate_skew_tableaux(SkewShape((2,), (2,)))) == 1  # empty tableau


def test_enumeration_order_is_lex_on_row_sequences():
    for shape in all_skew_shapes(6):
        seqs = [t.row_sequence() for t in enumerate_skew_tableaux(shape)]
        assert seqs == sorted(seqs)
        assert len(seqs) == len(set(seqs))


def test_tableaux_are_standard_fillings():
    # derived grid must increase along rows and columns
    for shape in all_skew_shapes(6):
        for t in enumerate_skew_tableaux(shape):
            grid = t.grid()
            assert set(grid.keys()) == set(shape.boxes())
            for (r, c), v in grid.items():
                if (r, c + 1) in grid:
                    assert grid[(r, c + 1)] > v
                if (r + 1, c) in grid:
                    assert grid[(r + 1, c)] > v


def test_straight_counts_match_hook_length_and_brute_force():
    for n in range(7):
        for p in partitions_of(n):
            count = len(enumerate_skew_tableaux(SkewShape((), p)))
            assert count == hook_length_count(p)
            assert count == brute_force_tableau_count((), p)


def test_skew_counts_match_brute_force_small():
    for shape in all_skew_shapes(5):
        assert len(enumerate_skew_tableaux(shape)) == brute_force_tableau_count(
            shape.inner, shape.outer
        ), shape


def test_path_count_recursion():
    # |SYT(mu/lam)| equals the sum of |SYT(mu/nu)| over nu covering lam inside mu
    for shape in all_skew_shapes(7, min_boxes=1):
        total = 0
        for nu in young_successors(shape.inner):
            if contains(nu, shape.outer):
                total += len(enumerate_skew_tableaux(SkewShape(nu, shape.outer)))
        assert total == len(enumerate_skew_tableaux(shape)), shape


def test_tableau_chain_validation():
    with pytest.raises(ValueError):
        SkewTableau(((), (2,)))  # two boxes in one step
    with pytest.raises(ValueError):
        SkewTableau(((1,), (1,)))  # no box added
    t = SkewTableau(((), (1,), (2,), (2, 1)))
    assert t.size == 3
    assert t.box_of(3) == Box(2, 1)
    with pytest.raises(IndexError):
        t.box_of(4)


def test_swap_entries():
    t = SkewTableau(((), (1,), (2,), (2, 1)))
    swapped = swap_entries(t, 2)
    assert swapped.box_of(2) == Box(2, 1)
    assert swapped.box_of(3) == Box(1, 2)
    assert swap_entries(swapped, 2) == t
    with pytest.raises(ValueError):
        swap_entries(t, 1)  # entries 1,2 share a row


def test_swap_entries_sweeps_back_to_basis():
    for shape in all_skew_shapes(5, min_boxes=2):
        basis = set(enumerate_skew_tableaux(shape))
        for t in basis:
            for k in range(1, shape.size):
                b1, b2 = t.box_of(k), t.box_of(k + 1)
                if b1.row == b2.row or b1.col == b2.col:
                    continue
                partner = swap_entries(t, k)
                assert partner in basis
                assert swap_entries(partner, k) == t


def test_json_round_trips():
    shape = SkewShape((1,), (3, 2))
    assert SkewShape.from_json(shape.to_json()) == shape
    for t in enumerate_skew_tableaux(shape):
        assert SkewTableau.from_json(t.to_json()) == t
