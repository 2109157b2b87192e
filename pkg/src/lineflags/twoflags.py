"""Rank tables and the degeneration order for pairs of partial flags.

Forgetting the line, an orbit of two partial flags with margins
``(b, c)`` is a transport matrix ``M``.  Its *rank table* is

    ``r[i][j] = sum of m[k][l] for k <= i, l <= j``

over the bordered index range ``0..q`` by ``0..r`` (row/column 0 are
zero).  Geometrically ``r[i][j] = dim(B_i ∩ C_j)``, so degeneration,
which can only grow intersections elsewhere, is the *reverse* entrywise
order: ``M <= M'`` iff ``r[i][j] >= r'[i][j]`` everywhere.  The minimum
of the order is the generic orbit, the maximum the most special one.

This module also provides the simple moves on transport matrices
(southwest corner flips across a rectangle empty in between), which
generate exactly the cover relations of the order, and a deterministic
procedure producing, for any strict comparison, one move of progress
toward the larger element.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .flagcore import (
    FlagError,
    PreconditionFailed,
    ShapeMismatch,
    TransportMatrix,
    ValidationError,
    sort_key,
    validate_composition,
)

__all__ = [
    "NotStrictlyLess",
    "RankTable",
    "rank_table",
    "matrix_from_rank_table",
    "rk_leq",
    "Rectangle",
    "simple_moves",
    "apply_simple_move",
    "progress_move",
    "enumerate_transport_matrices",
    "TwoFlagReport",
    "verify_two_flag_theorem",
]


class NotStrictlyLess(FlagError):
    """progress_move requires source < target strictly."""


@dataclass(frozen=True)
class RankTable:
    """Bordered table of running sums, indexed ``values[i][j]`` for
    ``0 <= i <= q``, ``0 <= j <= r``."""

    values: tuple[tuple[int, ...], ...]

    @property
    def q(self) -> int:
        return len(self.values) - 1

    @property
    def r(self) -> int:
        return len(self.values[0]) - 1

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.values[i][j]


def rank_table(tm: TransportMatrix) -> RankTable:
    """Running northwest sums of the matrix, with a zero border."""
    q, r = tm.q, tm.r
    values = [[0] * (r + 1) for _ in range(q + 1)]
    for i in range(1, q + 1):
        row_sum = 0
        for j in range(1, r + 1):
            row_sum += tm.m[i - 1][j - 1]
            values[i][j] = values[i - 1][j] + row_sum
    return RankTable(tuple(tuple(row) for row in values))


def matrix_from_rank_table(rt: RankTable) -> TransportMatrix:
    """Recover the matrix by second differences; validates the result."""
    q, r = rt.q, rt.r
    v = rt.values
    rows = [
        [v[i][j] - v[i - 1][j] - v[i][j - 1] + v[i - 1][j - 1] for j in range(1, r + 1)]
        for i in range(1, q + 1)
    ]
    return TransportMatrix.from_rows(rows)


def _check_same_shape(x: TransportMatrix, y: TransportMatrix) -> None:
    if x.b != y.b or x.c != y.c:
        raise ShapeMismatch(f"margins {x.b} x {x.c} vs {y.b} x {y.c}")


def rk_leq(x: TransportMatrix, y: TransportMatrix) -> bool:
    """Degeneration order: every rank of ``x`` >= the rank of ``y``."""
    _check_same_shape(x, y)
    rx, ry = rank_table(x), rank_table(y)
    return all(
        rx.values[i][j] >= ry.values[i][j]
        for i in range(x.q + 1)
        for j in range(x.r + 1)
    )


@dataclass(frozen=True)
class Rectangle:
    """Corners of an axis-parallel rectangle, ``i0 <= i1`` and ``j0 <= j1``."""

    i0: int
    j0: int
    i1: int
    j1: int


def _corner_flip(tm: TransportMatrix, rect: Rectangle) -> TransportMatrix:
    rows = [list(row) for row in tm.m]
    rows[rect.i0 - 1][rect.j0 - 1] -= 1
    rows[rect.i1 - 1][rect.j1 - 1] -= 1
    rows[rect.i0 - 1][rect.j1 - 1] += 1
    rows[rect.i1 - 1][rect.j0 - 1] += 1
    return TransportMatrix(tuple(tuple(row) for row in rows), tm.b, tm.c)


def _simple_move_clause(tm: TransportMatrix, rect: Rectangle) -> str | None:
    """First violated condition of the simple move on ``rect``, if any."""
    i0, j0, i1, j1 = rect.i0, rect.j0, rect.i1, rect.j1
    if not (1 <= i0 < i1 <= tm.q and 1 <= j0 < j1 <= tm.r):
        return "corners must satisfy i0 < i1 and j0 < j1 inside the grid"
    if tm.entry(i0, j0) <= 0:
        return "entry (i0,j0) must be positive"
    if tm.entry(i1, j1) <= 0:
        return "entry (i1,j1) must be positive"
    for i in range(i0, i1 + 1):
        for j in range(j0, j1 + 1):
            if (i, j) in ((i0, j0), (i1, j1), (i0, j1), (i1, j0)):
                continue
            if tm.entry(i, j) != 0:
                return f"nonzero entry at ({i},{j}) strictly between the corners"
    return None


def simple_moves(tm: TransportMatrix) -> list[Rectangle]:
    """All rectangles supporting a simple move, in lexicographic order.

    A simple move takes one unit off the NW and SE corners of a
    rectangle and adds it to the NE and SW corners; it requires both
    diagonal corners positive and every other cell of the closed
    rectangle, apart from the four corners, zero.  Each move lowers
    exactly the ranks strictly inside the rectangle's NW quadrant span,
    producing a cover of the degeneration order.
    """
    out = []
    for i0 in range(1, tm.q):
        for j0 in range(1, tm.r):
            if tm.entry(i0, j0) <= 0:
                continue
            for i1 in range(i0 + 1, tm.q + 1):
                for j1 in range(j0 + 1, tm.r + 1):
                    rect = Rectangle(i0, j0, i1, j1)
                    if _simple_move_clause(tm, rect) is None:
                        out.append(rect)
    return out


def apply_simple_move(tm: TransportMatrix, rect: Rectangle) -> TransportMatrix:
    """Apply the corner flip after re-checking the conditions."""
    clause = _simple_move_clause(tm, rect)
    if clause is not None:
        raise PreconditionFailed("simple", clause)
    return _corner_flip(tm, rect)


def progress_move(x: TransportMatrix, y: TransportMatrix) -> Rectangle:
    """A simple move from ``x`` strictly toward ``y``, given ``x < y``.

    Deterministic: scan the rank difference in row-major order; the
    first position ``(k0, l0)`` where the tables differ carries a
    positive entry of ``x``.  Grow the strictly-larger region downward
    then rightward, pick the first positive entry ``(i1, j1)`` of ``x``
    southeast of it inside that region, and close the rectangle with
    the nearest positive entry west of ``(k0, j1)`` on row ``k0``, else
    south of ``(i1, l0)`` on column ``l0``, else ``(k0, l0)`` itself.
    The result of the move still satisfies ``result <= y``.
    """
    _check_same_shape(x, y)
    rx, ry = rank_table(x), rank_table(y)
    if rx.values == ry.values:
        raise NotStrictlyLess("elements are equal")
    diff = None
    for i in range(x.q + 1):
        for j in range(x.r + 1):
            if rx.values[i][j] != ry.values[i][j]:
                diff = (i, j)
                break
        if diff:
            break
    k0, l0 = diff
    if rx.values[k0][l0] < ry.values[k0][l0]:
        raise NotStrictlyLess("source is not below target")
    # The first rank difference is a positive entry of x exceeding y.
    k1 = k0 + 1
    while k1 <= x.q and rx.values[k1][l0] > ry.values[k1][l0]:
        k1 += 1
    if k1 > x.q:
        raise NotStrictlyLess("source is not below target")
    l1 = l0 + 1
    while l1 <= x.r and all(
        rx.values[i][l1] > ry.values[i][l1] for i in range(k0, k1)
    ):
        l1 += 1
    if l1 > x.r:
        raise NotStrictlyLess("source is not below target")
    target = None
    for i in range(k0 + 1, k1 + 1):
        for j in range(l0 + 1, l1 + 1):
            if x.entry(i, j) > 0:
                target = (i, j)
                break
        if target:
            break
    if target is None:
        raise NotStrictlyLess("source is not below target")
    i1, j1 = target
    source = None
    for j in range(j1 - 1, l0, -1):
        if x.entry(k0, j) > 0:
            source = (k0, j)
            break
    if source is None:
        for i in range(i1 - 1, k0, -1):
            if x.entry(i, l0) > 0:
                source = (i, l0)
                break
    if source is None:
        source = (k0, l0)
    rect = Rectangle(source[0], source[1], i1, j1)
    assert _simple_move_clause(x, rect) is None
    assert rk_leq(_corner_flip(x, rect), y)
    return rect


def enumerate_transport_matrices(
    b: tuple[int, ...], c: tuple[int, ...]
) -> list[TransportMatrix]:
    """All matrices with the given margins, sorted canonically."""
    b = tuple(int(x) for x in b)
    c = tuple(int(x) for x in c)
    for parts in (b, c):
        code = validate_composition(parts)
        if code is not None:
            raise ValidationError(code)
    if sum(b) != sum(c):
        raise ValidationError("BadShape")
    q, r = len(b), len(c)
    out: list[TransportMatrix] = []
    rows: list[tuple[int, ...]] = []

    def fill(i: int, remaining_cols: tuple[int, ...]) -> None:
        if i == q:
            if all(x == 0 for x in remaining_cols):
                m = tuple(rows)
                out.append(TransportMatrix(m, b, c))
            return
        for row in _compositions_bounded(b[i], remaining_cols):
            rows.append(row)
            fill(i + 1, tuple(x - y for x, y in zip(remaining_cols, row)))
            rows.pop()

    fill(0, c)
    out.sort(key=sort_key)
    return out


def _compositions_bounded(total: int, bounds: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
    """Nonnegative integer rows summing to ``total`` with entrywise bounds."""
    if len(bounds) == 1:
        if 0 <= total <= bounds[0]:
            yield (total,)
        return
    for first in range(min(total, bounds[0]) + 1):
        for rest in _compositions_bounded(total - first, bounds[1:]):
            yield (first,) + rest


@dataclass(frozen=True)
class TwoFlagReport:
    """Outcome of the exhaustive two-flag verification for one margin pair."""

    b: tuple[int, ...]
    c: tuple[int, ...]
    element_count: int
    cover_count: int
    order_equivalent: bool
    moves_are_covers: bool
    counterexamples: tuple[str, ...]

    @property
    def passed(self) -> bool:
        return self.order_equivalent and self.moves_are_covers


def verify_two_flag_theorem(b: tuple[int, ...], c: tuple[int, ...]) -> TwoFlagReport:
    """Check, exhaustively, that simple moves generate the rank order.

    For every matrix with margins ``(b, c)``: the reflexive-transitive
    closure of the simple moves must equal the rank-table order, and
    every simple move must be a cover (no third element strictly
    between its endpoints).
    """
    elements = enumerate_transport_matrices(b, c)
    index = {tm.m: k for k, tm in enumerate(elements)}
    count = len(elements)
    edges: list[set[int]] = [set() for _ in range(count)]
    for k, tm in enumerate(elements):
        for rect in simple_moves(tm):
            edges[k].add(index[_corner_flip(tm, rect).m])
    # Transitive closure over the move DAG by memoized DFS.
    reach = [0] * count
    done = [False] * count
    def close(k: int) -> int:
        if not done[k]:
            mask = 1 << k
            for t in edges[k]:
                mask |= close(t)
            reach[k] = mask
            done[k] = True
        return reach[k]
    for k in range(count):
        close(k)
    leq = [0] * count
    tables = [rank_table(tm).values for tm in elements]
    for a in range(count):
        mask = 0
        for bidx in range(count):
            ta, tb = tables[a], tables[bidx]
            if all(
                ta[i][j] >= tb[i][j]
                for i in range(len(ta))
                for j in range(len(ta[0]))
            ):
                mask |= 1 << bidx
        leq[a] = mask
    counterexamples: list[str] = []
    order_equivalent = True
    for a in range(count):
        if reach[a] != leq[a]:
            order_equivalent = False
            onlymove = reach[a] & ~leq[a]
            onlyrank = leq[a] & ~reach[a]
            counterexamples.append(
                f"element {a}: moves-only {bin(onlymove)}, rank-only {bin(onlyrank)}"
            )
    moves_are_covers = True
    for a in range(count):
        for t in edges[a]:
            strictly_between = [
                z
                for z in range(count)
                if z != a and z != t and (leq[a] >> z) & 1 and (leq[z] >> t) & 1
            ]
            if strictly_between:
                moves_are_covers = False
                counterexamples.append(
                    f"move {a} -> {t} is not a cover (via {strictly_between[0]})"
                )
    cover_count = 0
    for a in range(count):
        for t in range(count):
            if t == a or not ((leq[a] >> t) & 1):
                continue
            if not any(
                z != a and z != t and (leq[a] >> z) & 1 and (leq[z] >> t) & 1
                for z in range(count)
            ):
                cover_count += 1
    return TwoFlagReport(
        b=b,
        c=c,
        element_count=count,
        cover_count=cover_count,
        order_equivalent=order_equivalent,
        moves_are_covers=moves_are_covers,
        counterexamples=tuple(counterexamples),
    )
