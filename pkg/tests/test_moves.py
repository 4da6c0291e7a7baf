"""Move families pinned against every worked example, plus set-level laws."""

import pytest

from orbitposet import (
    IndexOutOfRange,
    Involution,
    all_involutions,
    ancestors,
    brute_covers,
    cover,
    cover_moves,
    cross_down,
    cross_up,
    descendant_moves,
    descendants,
    dimension,
    leq,
    move_down,
    move_left,
    move_right,
    move_up,
    sigma_o,
    swap_down,
    swap_up,
)


def inv(text, n):
    return Involution.parse(text, n)


def at(e, pair):
    return e.pairs.index(pair) + 1


VH = inv("(2,6)(3,5)(7,9)(8,10)", 11)  # vertical/horizontal example
CR = inv("(1,3)(2,4)(5,9)(6,10)(7,8)", 10)  # cross example
SW = inv("(1,7)(2,5)(3,8)(4,6)", 8)  # swap example


@pytest.mark.parametrize(
    "pair,expected",
    [
        ((2, 6), "(1,6)(3,5)(7,9)(8,10)"),
        ((3, 5), None),
        ((7, 9), "(2,6)(3,5)(4,9)(8,10)"),
        # the last value follows from the rule itself (the printed version
        # garbles two unrelated pairs)
        ((8, 10), "(2,6)(3,5)(4,10)(7,9)"),
    ],
)
def test_move_down_examples(pair, expected):
    got = move_down(VH, at(VH, pair))
    assert got == (None if expected is None else inv(expected, 11))


@pytest.mark.parametrize(
    "pair,expected",
    [
        ((2, 6), "(3,5)(4,6)(7,9)(8,10)"),
        ((3, 5), "(2,6)(4,5)(7,9)(8,10)"),
        ((7, 9), None),
        ((8, 10), None),
    ],
)
def test_move_up_examples(pair, expected):
    got = move_up(VH, at(VH, pair))
    assert got == (None if expected is None else inv(expected, 11))


@pytest.mark.parametrize(
    "pair,expected",
    [
        ((2, 6), "(2,11)(3,5)(7,9)(8,10)"),
        ((3, 5), None),
        ((7, 9), "(2,6)(3,5)(7,11)(8,10)"),
        ((8, 10), "(2,6)(3,5)(7,9)(8,11)"),
    ],
)
def test_move_right_examples(pair, expected):
    got = move_right(VH, at(VH, pair))
    assert got == (None if expected is None else inv(expected, 11))


@pytest.mark.parametrize(
    "pair,expected",
    [
        ((2, 6), "(2,4)(3,5)(7,9)(8,10)"),
        ((3, 5), "(2,6)(3,4)(7,9)(8,10)"),
        ((7, 9), None),
        ((8, 10), None),
    ],
)
def test_move_left_examples(pair, expected):
    got = move_left(VH, at(VH, pair))
    assert got == (None if expected is None else inv(expected, 11))


def test_move_index_bounds():
    with pytest.raises(IndexOutOfRange):
        move_down(VH, 5)
    with pytest.raises(IndexOutOfRange):
        cross_down(VH, 0)


@pytest.mark.parametrize(
    "pair,expected",
    [
        ((1, 3), set()),
        ((2, 4), set()),
        ((5, 9), {"(1,3)(2,5)(4,9)(6,10)(7,8)", "(1,5)(2,4)(3,9)(6,10)(7,8)"}),
        ((6, 10), {"(1,3)(2,6)(4,10)(5,9)(7,8)", "(1,6)(2,4)(3,10)(5,9)(7,8)"}),
        ((7, 8), set()),
    ],
)
def test_cross_down_examples(pair, expected):
    got = {str(x) for x in cross_down(CR, at(CR, pair))}
    assert got == expected


@pytest.mark.parametrize(
    "pair,expected",
    [
        ((1, 3), set()),
        ((2, 4), {"(1,2)(3,4)(5,9)(6,10)(7,8)"}),
        ((5, 9), set()),
        ((6, 10), {"(1,3)(2,4)(5,6)(7,8)(9,10)"}),
        ((7, 8), set()),
    ],
)
def test_cross_up_examples(pair, expected):
    got = {str(x) for x in cross_up(CR, at(CR, pair))}
    assert got == expected


@pytest.mark.parametrize(
    "pair,expected",
    [
        ((1, 7), {"(1,5)(2,7)(3,8)(4,6)", "(1,6)(2,5)(3,8)(4,7)"}),
        ((2, 5), set()),
        ((3, 8), {"(1,7)(2,5)(3,6)(4,8)"}),
        ((4, 6), set()),
    ],
)
def test_swap_down_examples(pair, expected):
    got = {str(x) for x in swap_down(SW, at(SW, pair))}
    assert got == expected


@pytest.mark.parametrize(
    "pair,expected",
    [
        ((1, 7), {"(1,8)(2,5)(3,7)(4,6)"}),
        ((2, 5), {"(1,7)(2,8)(3,5)(4,6)", "(1,7)(2,6)(3,8)(4,5)"}),
        ((3, 8), set()),
        ((4, 6), set()),
    ],
)
def test_swap_up_examples(pair, expected):
    got = {str(x) for x in swap_up(SW, at(SW, pair))}
    assert got == expected


def test_cross_up_sees_through_straddling_pairs():
    # a pair may cover part of the gap while starting outside the span of the
    # two exchanged pairs; the inverse relation must still find the ascent
    lower = inv("(1,6)(3,5)(4,8)", 8)
    upper = inv("(1,4)(3,5)(6,8)", 8)
    assert upper in cross_up(lower, at(lower, (4, 8)))
    assert lower in cross_down(upper, at(upper, (6, 8)))
    assert upper in ancestors(lower)


def test_vertical_moves_invert():
    down = move_down(VH, at(VH, (2, 6)))
    assert move_up(down, at(down, (1, 6))) == VH
    up = move_up(VH, at(VH, (2, 6)))
    assert move_down(up, at(up, (4, 6))) == VH


def test_descendants_of_minimal_orbit_empty():
    for n in range(1, 9):
        for k in range(n // 2 + 1):
            assert descendants(sigma_o(n, k)) == set()
    assert descendants(Involution.identity(5)) == set()


def test_descendants_example_n4():
    assert descendants(inv("(1,4)(2,3)", 4)) == {inv("(1,3)(2,4)", 4)}


def test_ancestors_examples():
    assert ancestors(inv("(1,3)(2,4)", 4)) == {
        inv("(1,4)(2,3)", 4),
        inv("(1,2)(3,4)", 4),
    }
    assert ancestors(Involution.identity(3)) == set()


def test_ancestors_of_maximal_orbits_empty():
    from orbitposet import enumerate_tableaux, sigma_T

    for n in range(1, 9):
        for k in range(n // 2 + 1):
            for tab in enumerate_tableaux(n, k):
                assert ancestors(sigma_T(tab)) == set()


def test_ancestors_equal_inverse_descendants():
    for n in range(1, 6):
        for k in range(n // 2 + 1):
            els = list(all_involutions(n, k))
            for e in els:
                expected = {x for x in els if e in descendants(x)}
                assert ancestors(e) == expected


def test_direction_law():
    for n in range(1, 7):
        for e in all_involutions(n):
            for m in descendant_moves(e):
                assert m.target != e and leq(m.target, e)
                assert m.target.length == e.length
                assert dimension(e) - dimension(m.target) == 1


def test_family_disjointness():
    for n in range(1, 7):
        for e in all_involutions(n):
            moves = descendant_moves(e)
            assert len({m.target for m in moves}) == len(moves)


def test_cover_examples():
    assert cover(inv("(1,2)", 2)) == {Involution.identity(2)}
    assert cover(Involution.identity(4)) == set()
    assert {(str(m.target), m.kind) for m in cover_moves(inv("(1,3)", 3))} == {
        ("id", "delete")
    }


def test_cover_matches_brute_force():
    for n in range(1, 7):
        truth = brute_covers(n)
        for e in all_involutions(n):
            assert cover(e) == truth[e]


def test_cover_dimension_drop():
    for n in range(1, 7):
        for e in all_involutions(n):
            for lower in cover(e):
                assert dimension(e) - dimension(lower) == 1
