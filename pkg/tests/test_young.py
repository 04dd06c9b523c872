import pytest

from dubrovnik.coeffring import ONE, ZERO, alpha, svar
from dubrovnik.young import (
    BoundExceededError,
    UpDownTableau,
    YoungDiagram,
    c_lambda,
    contents,
    corner_moves,
    double_factorial,
    enumerate_updown,
    parse_partition,
    updown_counts,
)

EMPTY = YoungDiagram()
BOX = YoungDiagram((1,))


def test_diagram_validation():
    with pytest.raises(ValueError):
        YoungDiagram((1, 2))
    with pytest.raises(ValueError):
        YoungDiagram((2, 0))
    assert YoungDiagram((3, 1)).size == 4


def test_contents():
    assert contents(EMPTY) == []
    assert contents(BOX) == [0]
    assert contents(YoungDiagram((2, 1))) == [-1, 0, 1]
    assert contents(YoungDiagram((2,))) == [0, 1]


def test_c_lambda_values():
    z = svar() - svar(-1)
    assert c_lambda(EMPTY) == ZERO
    assert c_lambda(BOX) == z * (alpha() - alpha(-1))
    expected = z * (alpha() * (ONE + svar(2)) - alpha(-1) * (ONE + svar(-2)))
    assert c_lambda(YoungDiagram((2,))) == expected


def test_c_lambda_transpose_symmetry():
    # contents of the transpose are negated, so c flips sign under s -> s^-1
    diagrams = [d for n in range(5) for d in _all_partitions(n)]
    for d in diagrams:
        assert c_lambda(d.transpose()) == -(c_lambda(d).substitute_s_inverse())


def test_c_lambda_separates_small_diagrams():
    seen = {}
    for n in range(5):
        for d in _all_partitions(n):
            val = c_lambda(d)
            for other, v in seen.items():
                assert v != val, (d, other)
            seen[d] = val


def _all_partitions(n):
    if n == 0:
        return [EMPTY]
    out = set()
    for d in _all_partitions(n - 1):
        for (i, _) in d.addable_corners():
            out.add(d.add_cell(i))
    return sorted(out)


def test_corner_moves():
    assert corner_moves(EMPTY) == [BOX]
    assert corner_moves(BOX) == sorted([YoungDiagram((2,)), YoungDiagram((1, 1)), EMPTY])
    got = corner_moves(YoungDiagram((2, 1)))
    expected = sorted(
        [
            YoungDiagram((3, 1)),
            YoungDiagram((2, 2)),
            YoungDiagram((2, 1, 1)),
            YoungDiagram((1, 1)),
            YoungDiagram((2,)),
        ]
    )
    assert got == expected


def test_enumerate_updown_small():
    assert len(enumerate_updown(1)) == 1
    twos = enumerate_updown(2)
    assert len(twos) == 3
    assert {t.final for t in twos} == {YoungDiagram((2,)), YoungDiagram((1, 1)), EMPTY}
    assert all(m == 1 for m in updown_counts(2).values())


def test_updown_square_sum_matches_double_factorial():
    for n in range(1, 6):
        counts = updown_counts(n)
        assert sum(m * m for m in counts.values()) == double_factorial(2 * n - 1)


def test_updown_bound():
    with pytest.raises(BoundExceededError):
        enumerate_updown(9)
    assert enumerate_updown(9, bound=9)


def test_tableau_validation():
    with pytest.raises(ValueError):
        UpDownTableau((YoungDiagram((2,)),))
    with pytest.raises(ValueError):
        UpDownTableau((BOX, YoungDiagram((3,))))


def test_parse_partition():
    assert parse_partition("2,1") == YoungDiagram((2, 1))
    assert parse_partition("-") == EMPTY
    with pytest.raises(ValueError):
        parse_partition("1,2")
