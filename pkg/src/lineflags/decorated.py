"""The degeneration order for a line together with two partial flags.

Adding a line ``A`` to a pair of flags refines each two-flag orbit: the
orbit of ``(A, B, C)`` is a transport matrix plus a decoration, and the
new invariant is the *augmented rank table*

    ``rbar[i][j] = dim(A + (B_i ∩ C_j)) = r[i][j] + delta[i][j]``,

where ``delta[i][j]`` is 1 exactly when the line already lies inside
``B_i + C_j``; in matrix terms, when every decorated position ``(a, b)``
satisfies ``a <= i`` or ``b <= j``.  Degeneration is again the reverse
entrywise order, now on the pair of tables ``(r, rbar)`` jointly.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .flagcore import (
    DecoratedMatrix,
    FlagError,
    NotFullFlag,
    Position,
    ShapeMismatch,
    TransportMatrix,
    from_permutation,
    normalize_decoration,
    sort_key,
    to_permutation,
    validate,
)
from .twoflags import RankTable, enumerate_transport_matrices, matrix_from_rank_table, rank_table

__all__ = [
    "NotAnOrbitInvariant",
    "RBarTable",
    "delta_table",
    "rbar_table",
    "rk_leq_dec",
    "rk_compare_witness",
    "rk_first_difference",
    "enumerate_decorations",
    "enumerate_orbits",
    "decorated_from_tables",
    "dimension_full_flags",
    "dimension_of",
]


class NotAnOrbitInvariant(FlagError):
    """The given tables do not arise from any decorated matrix."""


@dataclass(frozen=True)
class RBarTable:
    """Augmented ranks and their 0/1 increments over the bordered grid.

    ``values[i][j] = r[i][j] + delta_values[i][j]`` for
    ``0 <= i <= q``, ``0 <= j <= r``.
    """

    values: tuple[tuple[int, ...], ...]
    delta_values: tuple[tuple[int, ...], ...]

    @property
    def q(self) -> int:
        return len(self.values) - 1

    @property
    def r(self) -> int:
        return len(self.values[0]) - 1

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.values[i][j]


def delta_table(dm: DecoratedMatrix) -> tuple[tuple[int, ...], ...]:
    """The 0/1 table of line membership, ``delta[i][j]`` over the border.

    ``delta[i][j] = 1`` iff every decorated ``(a, b)`` has ``a <= i`` or
    ``b <= j`` — equivalently, iff no decorated position lies weakly
    southeast of ``(i+1, j+1)``.  Both characterizations are computed
    and compared when assertions are enabled.
    """
    q, r = dm.q, dm.r
    out = []
    for i in range(q + 1):
        row = []
        for j in range(r + 1):
            v = 1 if all(a <= i or b <= j for (a, b) in dm.delta) else 0
            assert v == (0 if any(a >= i + 1 and b >= j + 1 for (a, b) in dm.delta) else 1)
            row.append(v)
        out.append(tuple(row))
    return tuple(out)


def rbar_table(dm: DecoratedMatrix) -> RBarTable:
    """Augmented rank table ``r + delta`` of a decorated matrix."""
    rt = rank_table(dm.matrix)
    dt = delta_table(dm)
    values = tuple(
        tuple(rt.values[i][j] + dt[i][j] for j in range(dm.r + 1))
        for i in range(dm.q + 1)
    )
    return RBarTable(values, dt)


def _check_same_shape(x: DecoratedMatrix, y: DecoratedMatrix) -> None:
    if x.matrix.b != y.matrix.b or x.matrix.c != y.matrix.c:
        raise ShapeMismatch(
            f"margins {x.matrix.b} x {x.matrix.c} vs {y.matrix.b} x {y.matrix.c}"
        )


def rk_leq_dec(x: DecoratedMatrix, y: DecoratedMatrix) -> bool:
    """Degeneration order: both tables of ``x`` >= those of ``y`` entrywise."""
    return rk_compare_witness(x, y) is None


def rk_compare_witness(
    x: DecoratedMatrix, y: DecoratedMatrix
) -> tuple[str, tuple[int, int], int, int] | None:
    """First witness against ``x <= y``, or None if the comparison holds.

    Scans the bordered grid in row-major order, checking ``r`` before
    ``rbar`` at each position; returns ``(table, (i, j), xval, yval)``
    with ``table`` one of ``"r"``, ``"rbar"`` where ``xval < yval``.
    """
    _check_same_shape(x, y)
    rx, ry = rank_table(x.matrix), rank_table(y.matrix)
    bx, by = rbar_table(x), rbar_table(y)
    for i in range(x.q + 1):
        for j in range(x.r + 1):
            if rx.values[i][j] < ry.values[i][j]:
                return ("r", (i, j), rx.values[i][j], ry.values[i][j])
            if bx.values[i][j] < by.values[i][j]:
                return ("rbar", (i, j), bx.values[i][j], by.values[i][j])
    return None


def rk_first_difference(
    x: DecoratedMatrix, y: DecoratedMatrix
) -> tuple[str, tuple[int, int], int, int] | None:
    """First position where the invariants of ``x`` and ``y`` differ.

    Same scan order as :func:`rk_compare_witness`; None iff ``x`` and
    ``y`` have identical tables (hence are the same orbit).
    """
    _check_same_shape(x, y)
    rx, ry = rank_table(x.matrix), rank_table(y.matrix)
    bx, by = rbar_table(x), rbar_table(y)
    for i in range(x.q + 1):
        for j in range(x.r + 1):
            if rx.values[i][j] != ry.values[i][j]:
                return ("r", (i, j), rx.values[i][j], ry.values[i][j])
            if bx.values[i][j] != by.values[i][j]:
                return ("rbar", (i, j), bx.values[i][j], by.values[i][j])
    return None


def enumerate_decorations(tm: TransportMatrix) -> list[tuple[Position, ...]]:
    """All NE-to-SW staircases on the positive entries of ``tm``.

    Each staircase is a nonempty antichain, returned sorted by row; the
    list is in lexicographic order of the sorted staircases.
    """
    pts = sorted(tm.positive_positions(), key=lambda p: (p[0], -p[1]))
    out: list[tuple[Position, ...]] = []
    prefix: list[Position] = []

    def extend(start: int) -> None:
        for idx in range(start, len(pts)):
            (i, j) = pts[idx]
            if prefix and not (i > prefix[-1][0] and j < prefix[-1][1]):
                continue
            prefix.append((i, j))
            out.append(tuple(prefix))
            extend(idx + 1)
            prefix.pop()

    extend(0)
    return out


def enumerate_orbits(b: tuple[int, ...], c: tuple[int, ...]) -> list[DecoratedMatrix]:
    """All decorated matrices with margins ``(b, c)``, sorted canonically."""
    out = [
        DecoratedMatrix(tm, delta)
        for tm in enumerate_transport_matrices(b, c)
        for delta in enumerate_decorations(tm)
    ]
    out.sort(key=sort_key)
    return out


def decorated_from_tables(
    rank_values: Sequence[Sequence[int]],
    delta_values: Sequence[Sequence[int]],
) -> DecoratedMatrix:
    """Reconstruct the orbit from its two tables.

    Inverts :func:`rank_table` by second differences and reads the
    decoration off the zero set of the delta table; raises
    :class:`NotAnOrbitInvariant` unless the tables round-trip exactly.
    """
    rv = tuple(tuple(int(x) for x in row) for row in rank_values)
    dv = tuple(tuple(int(x) for x in row) for row in delta_values)
    if len(rv) < 2 or len(rv[0]) < 2 or len(dv) != len(rv) or any(
        len(a) != len(b) for a, b in zip(dv, rv)
    ):
        raise NotAnOrbitInvariant("table shapes")
    try:
        tm = matrix_from_rank_table(RankTable(rv))
    except FlagError as exc:
        raise NotAnOrbitInvariant(f"rank table: {exc}") from exc
    candidates = {
        (i + 1, j + 1)
        for i in range(len(dv))
        for j in range(len(dv[0]))
        if dv[i][j] == 0
    }
    if not candidates:
        raise NotAnOrbitInvariant("delta table has no zero")
    delta = normalize_decoration(candidates)
    code = validate(tm, delta)
    if code is not None:
        raise NotAnOrbitInvariant(code)
    dm = DecoratedMatrix(tm, delta)
    if rank_table(tm).values != rv or delta_table(dm) != dv:
        raise NotAnOrbitInvariant("tables do not round-trip")
    return dm


def dimension_full_flags(w: Iterable[int], delta_cols: Iterable[int]) -> int:
    """Orbit dimension in the full-flag case ``b = c = (1, ..., 1)``.

    For a permutation ``w`` and descending index set ``K`` this is
    ``C(n,2) + (n-1) + inv(w) - #{j : every k in K has k < j or w(k) < w(j)}``,
    where ``inv`` counts inversions.  The minimum over a fixed ``n`` is
    ``C(n,2)`` and the maximum ``(n-1) + 2*C(n,2)``.
    """
    dm = from_permutation(w, delta_cols)
    wt, cols = to_permutation(dm)
    n = len(wt)
    inversions = sum(
        1 for a in range(n) for bidx in range(a + 1, n) if wt[a] > wt[bidx]
    )
    free = sum(
        1
        for j in range(1, n + 1)
        if all(k < j or wt[k - 1] < wt[j - 1] for k in cols)
    )
    return n * (n - 1) // 2 + (n - 1) + inversions - free


def dimension_of(dm: DecoratedMatrix) -> int:
    """Dimension of a full-flag orbit given as a decorated matrix."""
    w, cols = to_permutation(dm)
    return dimension_full_flags(w, cols)
