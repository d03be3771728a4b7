"""Affine rational points of the Hermitian curve x^(q+1) = y^q + y over GF(q^2).

Points carry integer element codes (see :mod:`hermicode.field`).  The q^3
points are listed once in a canonical order, lexicographic on ``(x, y)``
codes; that order labels the coordinates of every codeword and every index
in an export, so it is part of the wire format.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Iterator, NamedTuple, Sequence

from .field import FieldContext


class CurvePoint(NamedTuple):
    x: int
    y: int

    def as_json(self) -> dict[str, str]:
        return {"x": str(self.x), "y": str(self.y)}


def on_curve(ctx: FieldContext, pt: tuple[int, int]) -> bool:
    return ctx.norm(pt[0]) == ctx.trace(pt[1])


class DivisorError(ValueError):
    pass


class Divisor:
    """A duplicate-free sequence of rational points of the curve.

    Equality ignores the order of the points.
    """

    __slots__ = ("ctx", "points", "_set")

    def __init__(self, ctx: FieldContext, points: Iterable[tuple[int, int]]):
        pts = tuple(CurvePoint(int(x), int(y)) for x, y in points)
        seen = frozenset(pts)
        if len(seen) != len(pts):
            raise DivisorError("divisor has repeated points")
        for pt in pts:
            if not on_curve(ctx, pt):
                raise DivisorError(f"{pt} is not on the Hermitian curve over GF({ctx.order})")
        self.ctx = ctx
        self.points = pts
        self._set = seen

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self) -> Iterator[CurvePoint]:
        return iter(self.points)

    def __contains__(self, pt: object) -> bool:
        return pt in self._set

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Divisor):
            return NotImplemented
        return self.ctx == other.ctx and self._set == other._set

    def __hash__(self) -> int:
        return hash(self._set)

    def __repr__(self) -> str:
        return f"Divisor({len(self)} points over GF({self.ctx.order}))"

    @property
    def degree(self) -> int:
        return len(self.points)

    def canonical(self) -> Divisor:
        return Divisor(self.ctx, sorted(self.points))

    def indices(self) -> list[int]:
        """Positions in the canonical point order, ascending."""
        index = point_index(self.ctx)
        return sorted(index[pt] for pt in self.points)

    def union(self, other: Divisor) -> Divisor:
        return Divisor(self.ctx, list(self.points) + [pt for pt in other.points if pt not in self._set])

    def issubset(self, other: Divisor) -> bool:
        return self._set <= other._set

    def as_json(self) -> list[dict[str, str]]:
        return [pt.as_json() for pt in sorted(self.points)]

    @classmethod
    def from_indices(cls, ctx: FieldContext, indices: Iterable[int]) -> Divisor:
        pts = enumerate_points(ctx)
        return cls(ctx, [pts[i] for i in indices])

    @classmethod
    def from_json(cls, ctx: FieldContext, data: Sequence[dict[str, str]]) -> Divisor:
        return cls(ctx, [(int(d["x"]), int(d["y"])) for d in data])


@lru_cache(maxsize=None)
def enumerate_points(ctx: FieldContext) -> tuple[CurvePoint, ...]:
    """All q^3 affine points, lexicographic on (x, y) codes."""
    by_trace: dict[int, list[int]] = {}
    for y in range(ctx.order):
        by_trace.setdefault(ctx.trace(y), []).append(y)
    pts = [CurvePoint(x, y) for x in range(ctx.order) for y in by_trace.get(ctx.norm(x), [])]
    assert len(pts) == ctx.q ** 3
    return tuple(pts)


@lru_cache(maxsize=None)
def point_index(ctx: FieldContext) -> dict[CurvePoint, int]:
    return {pt: i for i, pt in enumerate(enumerate_points(ctx))}


def all_points(ctx: FieldContext) -> Divisor:
    return Divisor(ctx, enumerate_points(ctx))


def points_on_vertical_line(ctx: FieldContext, x0: int) -> Divisor:
    """The q points with x = x0 (solutions of Tr(y) = N(x0))."""
    x0 = int(x0)
    c = ctx.norm(x0)
    return Divisor(ctx, [(x0, y) for y in range(ctx.order) if ctx.trace(y) == c])


def points_on_horizontal_line(ctx: FieldContext, y0: int) -> Divisor:
    """Points with y = y0: q+1 of them if Tr(y0) != 0, else only (0, y0)."""
    y0 = int(y0)
    c = ctx.trace(y0)
    return Divisor(ctx, [(x, y0) for x in range(ctx.order) if ctx.norm(x) == c])


def points_on_line(ctx: FieldContext, u: int, v: int) -> Divisor:
    """Points on the non-vertical line y = u*x + v."""
    mul, add = ctx.mul_table, ctx.add_table
    pts = []
    for x in range(ctx.order):
        y = add[mul[u][x]][v]
        if ctx.norm(x) == ctx.trace(y):
            pts.append((x, y))
    return Divisor(ctx, pts)
