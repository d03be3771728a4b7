import pytest

from hermicode.curve import (
    Divisor,
    DivisorError,
    enumerate_points,
    points_on_horizontal_line,
    points_on_line,
    points_on_vertical_line,
)
from hermicode.field import field_for_q

from naive import NaiveHermitian


@pytest.mark.parametrize("p,k", [(2, 1), (3, 1), (2, 2), (5, 1)])
def test_points_match_naive(p, k):
    ctx = field_for_q(p ** k)
    pts = enumerate_points(ctx)
    assert list(pts) == NaiveHermitian(p, k).points()
    assert len(pts) == (p ** k) ** 3


def test_vertical_line_x0_q4():
    ctx = field_for_q(4)
    line = points_on_vertical_line(ctx, 0)
    assert sorted(y for _, y in line) == [y for y in range(16) if ctx.trace(y) == 0]
    assert len(line) == 4


def test_vertical_lines_q3_norm_one():
    ctx = field_for_q(3)
    for x0 in range(9):
        if ctx.norm(x0) == 1:
            assert len(points_on_vertical_line(ctx, x0)) == 3


def test_horizontal_lines():
    ctx4, ctx3 = field_for_q(4), field_for_q(3)
    for y0 in range(16):
        if ctx4.trace(y0) == 1:
            assert len(points_on_horizontal_line(ctx4, y0)) == 5
    for y0 in range(9):
        if ctx3.trace(y0) == 2:
            assert len(points_on_horizontal_line(ctx3, y0)) == 4
    assert len(points_on_horizontal_line(ctx4, 0)) == 1


@pytest.mark.parametrize("q", [2, 3, 4])
def test_lines_partition_the_curve(q):
    ctx = field_for_q(q)
    cover = set()
    for x0 in range(ctx.order):
        fibre = set(points_on_vertical_line(ctx, x0))
        assert not cover & fibre
        cover |= fibre
    assert cover == set(enumerate_points(ctx))


def test_nonvertical_line_meets_in_one_or_q_plus_1():
    ctx = field_for_q(3)
    sizes = {len(points_on_line(ctx, u, v)) for u in range(9) for v in range(9)}
    assert sizes <= {1, 4}


def test_divisor_validation_and_roundtrip():
    ctx = field_for_q(3)
    pts = enumerate_points(ctx)
    d = Divisor.from_indices(ctx, [5, 1, 9])
    assert d.indices() == [1, 5, 9]
    assert Divisor.from_json(ctx, d.as_json()) == d
    assert d == Divisor(ctx, [pts[9], pts[5], pts[1]])
    with pytest.raises(DivisorError):
        Divisor(ctx, [pts[0], pts[0]])
    bad = next((x, y) for x in range(9) for y in range(9) if ctx.norm(x) != ctx.trace(y))
    with pytest.raises(DivisorError):
        Divisor(ctx, [bad])
