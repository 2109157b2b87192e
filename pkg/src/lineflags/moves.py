"""The simple moves on decorated matrices and the cover structure they span.

Each move rearranges one unit of mass and/or the decoration of a
decorated transport matrix, producing the immediately more generic
orbits: the moves are exactly the covers of the degeneration order.
There are five families (the third and fourth come in mirror variants):

* ``I`` — decorate an existing positive entry whose northwest region is
  already accounted for.
* ``II`` — flip a unit from the NW/SE corners of an empty rectangle to
  its NE/SW corners, keeping the decoration.
* ``IIIa``/``IIIb`` — the same flip when the NW corner is decorated
  with a bare unit; the decoration slides to the NE (resp. SW) corner.
* ``IVa``/``IVb``/``IVc`` — flips interacting with one or two interior
  decorated cells.
* ``V`` — a cascade: a unit leaves a pivot northwest of a consecutive
  run of decorated cells, shifting each circle one step along the run.

``apply_move`` re-checks every stated condition and raises
:class:`PreconditionFailed` naming the first violated clause.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from .flagcore import (
    DecoratedMatrix,
    FlagError,
    Position,
    PreconditionFailed,
    ShapeMismatch,
    TransportMatrix,
    dominated,
    normalize_decoration,
    pos_lt,
    raise_if_invalid,
)
from .decorated import (
    enumerate_orbits,
    rbar_table,
    rk_first_difference,
    rk_leq_dec,
)
from .twoflags import rank_table

__all__ = [
    "KIND_ORDER",
    "Move",
    "applicable_moves",
    "iter_moves",
    "apply_move",
    "Poset",
    "build_poset",
    "find_chain",
    "EquivalenceReport",
    "verify_equivalence",
]

KIND_ORDER = ("I", "II", "IIIa", "IIIb", "IVa", "IVb", "IVc", "V")


@dataclass(frozen=True)
class Move:
    """A move kind together with its anchor positions.

    Anchor layout by kind:  ``I``: ``((i1,j1),)``.  ``II``, ``IIIa``,
    ``IIIb``: ``((i0,j0), (i1,j1))``.  ``IVa``: ``((i0,j0), (i1,j1),
    (i2,j2))``.  ``IVb``: ``((i0,j0), (i1,j1), (i2,j0))``.  ``IVc``:
    ``((i0,j0), (i1,j1), (i0,j2))``.  ``V``: the pivot followed by the
    decorated chain, ``((i0,j0), c_1, ..., c_t)``.
    """

    kind: str
    anchors: tuple[Position, ...]

    def __str__(self) -> str:
        cells = " ".join(f"({i},{j})" for (i, j) in self.anchors)
        return f"{self.kind} {cells}"

    def sort_index(self) -> tuple[int, tuple[Position, ...]]:
        return (KIND_ORDER.index(self.kind), self.anchors)


def _in_grid(tm: TransportMatrix, p: Position) -> bool:
    return 1 <= p[0] <= tm.q and 1 <= p[1] <= tm.r


def _shift(
    tm: TransportMatrix, changes: dict[Position, int]
) -> tuple[tuple[int, ...], ...]:
    rows = [list(row) for row in tm.m]
    for (i, j), d in changes.items():
        rows[i - 1][j - 1] += d
    return tuple(tuple(row) for row in rows)


def _rect_changes(i0: int, j0: int, i1: int, j1: int) -> dict[Position, int]:
    return {(i0, j0): -1, (i1, j1): -1, (i0, j1): +1, (i1, j0): +1}


def _nonzero_in_rect(
    tm: TransportMatrix,
    i0: int,
    j0: int,
    i1: int,
    j1: int,
    exempt: frozenset[Position],
) -> Position | None:
    """First nonzero cell of the closed rectangle outside the diagonal
    corners and ``exempt``, in row-major order; None if all are zero."""
    skip = exempt | {(i0, j0), (i1, j1)}
    for i in range(i0, i1 + 1):
        for j in range(j0, j1 + 1):
            if (i, j) not in skip and tm.entry(i, j) != 0:
                return (i, j)
    return None


# ---------------------------------------------------------------------------
# Per-kind condition checks.  Each returns (new_rows, new_delta) on
# success and the first violated clause as a string on failure.

_TryResult = "tuple[tuple[tuple[int, ...], ...], tuple[Position, ...]] | str"


def _try_I(dm: DecoratedMatrix, anchors: tuple[Position, ...]):
    if len(anchors) != 1:
        return "expected a single anchor (i1,j1)"
    (p,) = anchors
    tm, delta = dm.matrix, dm.delta
    if not _in_grid(tm, p):
        return "anchor outside the grid"
    i1, j1 = p
    if tm.entry(i1, j1) <= 0:
        return "entry at (i1,j1) must be positive"
    if dominated(p, delta):
        return "(i1,j1) must not lie weakly northwest of a decorated cell"
    for i in range(1, i1 + 1):
        for j in range(1, j1 + 1):
            if (i, j) == p:
                continue
            if tm.entry(i, j) != 0 and not dominated((i, j), delta):
                return f"nonzero undominated entry at ({i},{j}) northwest of (i1,j1)"
    return (tm.m, normalize_decoration(set(delta) | {p}))


def _try_II(dm: DecoratedMatrix, anchors: tuple[Position, ...]):
    if len(anchors) != 2:
        return "expected anchors ((i0,j0), (i1,j1))"
    (i0, j0), (i1, j1) = anchors
    tm, delta = dm.matrix, dm.delta
    if not (_in_grid(tm, (i0, j0)) and _in_grid(tm, (i1, j1))):
        return "anchor outside the grid"
    if not (i0 < i1 and j0 < j1):
        return "corners must satisfy i0 < i1 and j0 < j1"
    if tm.entry(i0, j0) <= 0:
        return "entry at (i0,j0) must be positive"
    if tm.entry(i1, j1) <= 0:
        return "entry at (i1,j1) must be positive"
    bad = _nonzero_in_rect(tm, i0, j0, i1, j1, frozenset({(i0, j1), (i1, j0)}))
    if bad is not None:
        return f"nonzero entry at {bad} strictly between the corners"
    if (i1, j1) in delta:
        return "(i1,j1) must not be decorated"
    if (i0, j1) in delta and (i1, j0) in delta:
        return "(i0,j1) and (i1,j0) must not both be decorated"
    if (i0, j0) in delta and tm.entry(i0, j0) < 2:
        return "a decorated (i0,j0) needs at least two units"
    if _ii_factors_through_corner(tm, delta, i0, j0, i1, j1):
        return "decorating (i1,j1) first gives a strictly intermediate orbit"
    return (_shift(tm, _rect_changes(i0, j0, i1, j1)), delta)


def _ii_factors_through_corner(
    tm: TransportMatrix,
    delta: tuple[Position, ...],
    i0: int,
    j0: int,
    i1: int,
    j1: int,
) -> bool:
    """Whether the flip strictly contains the orbit decorated at (i1,j1).

    When (i1,j1) can itself be decorated (the kind-I conditions hold
    there) and every bordered position northwest of (i1,j1) whose
    decorated cells all lie weakly northwest sits inside the rectangle,
    the decorated orbit lies strictly between source and target, so the
    flip skips a level and is rejected.
    """
    if dominated((i1, j1), delta):
        return False
    for i in range(1, i1 + 1):
        for j in range(1, j1 + 1):
            if (i, j) == (i1, j1):
                continue
            if tm.entry(i, j) != 0 and not dominated((i, j), delta):
                return False
    for i in range(0, i1):
        for j in range(0, j1):
            if i >= i0 and j >= j0:
                continue
            if all(a <= i or b <= j for (a, b) in delta):
                return False
    return True


def _try_IIIa(dm: DecoratedMatrix, anchors: tuple[Position, ...]):
    if len(anchors) != 2:
        return "expected anchors ((i0,j0), (i1,j1))"
    (i0, j0), (i1, j1) = anchors
    tm, delta = dm.matrix, dm.delta
    if not (_in_grid(tm, (i0, j0)) and _in_grid(tm, (i1, j1))):
        return "anchor outside the grid"
    if not (i0 < i1 and j0 < j1):
        return "corners must satisfy i0 < i1 and j0 < j1"
    if (i0, j0) not in delta:
        return "(i0,j0) must be decorated"
    if tm.entry(i0, j0) != 1:
        return "entry at (i0,j0) must be exactly 1"
    if tm.entry(i1, j1) <= 0:
        return "entry at (i1,j1) must be positive"
    bad = _nonzero_in_rect(tm, i0, j0, i1, j1, frozenset({(i1, j0)}))
    if bad is not None:
        return f"nonzero entry at {bad} strictly between the corners"
    for i in range(1, i0 + 1):
        for j in range(1, j1 + 1):
            if (i, j) == (i0, j0):
                continue
            if tm.entry(i, j) != 0 and not dominated((i, j), delta):
                return f"nonzero undominated entry at ({i},{j}) northwest of (i0,j1)"
    return (
        _shift(tm, _rect_changes(i0, j0, i1, j1)),
        normalize_decoration(set(delta) | {(i0, j1)}),
    )


def _try_IIIb(dm: DecoratedMatrix, anchors: tuple[Position, ...]):
    if len(anchors) != 2:
        return "expected anchors ((i0,j0), (i1,j1))"
    (i0, j0), (i1, j1) = anchors
    tm, delta = dm.matrix, dm.delta
    if not (_in_grid(tm, (i0, j0)) and _in_grid(tm, (i1, j1))):
        return "anchor outside the grid"
    if not (i0 < i1 and j0 < j1):
        return "corners must satisfy i0 < i1 and j0 < j1"
    if (i0, j0) not in delta:
        return "(i0,j0) must be decorated"
    if tm.entry(i0, j0) != 1:
        return "entry at (i0,j0) must be exactly 1"
    if tm.entry(i1, j1) <= 0:
        return "entry at (i1,j1) must be positive"
    bad = _nonzero_in_rect(tm, i0, j0, i1, j1, frozenset({(i0, j1)}))
    if bad is not None:
        return f"nonzero entry at {bad} strictly between the corners"
    for i in range(1, i1 + 1):
        for j in range(1, j0 + 1):
            if (i, j) == (i0, j0):
                continue
            if tm.entry(i, j) != 0 and not dominated((i, j), delta):
                return f"nonzero undominated entry at ({i},{j}) northwest of (i1,j0)"
    return (
        _shift(tm, _rect_changes(i0, j0, i1, j1)),
        normalize_decoration(set(delta) | {(i1, j0)}),
    )


def _try_IVa(dm: DecoratedMatrix, anchors: tuple[Position, ...]):
    if len(anchors) != 3:
        return "expected anchors ((i0,j0), (i1,j1), (i2,j2))"
    (i0, j0), (i1, j1), (i2, j2) = anchors
    tm, delta = dm.matrix, dm.delta
    if not all(_in_grid(tm, p) for p in anchors):
        return "anchor outside the grid"
    if not (i0 < i2 < i1 and j2 < j0 < j1):
        return "anchors must satisfy i0 < i2 < i1 and j2 < j0 < j1"
    if (i0, j0) not in delta:
        return "(i0,j0) must be decorated"
    if tm.entry(i0, j0) != 1:
        return "entry at (i0,j0) must be exactly 1"
    if (i2, j2) not in delta:
        return "(i2,j2) must be decorated"
    if tm.entry(i2, j2) != 1:
        return "entry at (i2,j2) must be exactly 1"
    if tm.entry(i1, j1) <= 0:
        return "entry at (i1,j1) must be positive"
    exempt = {(i0, j1), (i1, j2)}
    for i in range(i0, i1 + 1):
        for j in range(j2, j1 + 1):
            p = (i, j)
            if p in ((i0, j2), (i1, j1)) or p in exempt:
                continue
            if not pos_lt((i0, j2), p) or not pos_lt(p, (i1, j1)):
                continue
            if tm.entry(i, j) != 0 and not dominated(p, delta):
                return f"nonzero undominated entry at ({i},{j}) inside the frame"
    changes = {
        (i0, j0): -1,
        (i1, j1): -1,
        (i2, j2): -1,
        (i1, j2): +1,
        (i2, j0): +1,
        (i0, j1): +1,
    }
    return (
        _shift(tm, changes),
        normalize_decoration(set(delta) | {(i2, j0)}),
    )


def _try_IVb(dm: DecoratedMatrix, anchors: tuple[Position, ...]):
    if len(anchors) != 3:
        return "expected anchors ((i0,j0), (i1,j1), (i2,j0))"
    (i0, j0), (i1, j1), (i2, j0b) = anchors
    tm, delta = dm.matrix, dm.delta
    if not all(_in_grid(tm, p) for p in anchors):
        return "anchor outside the grid"
    if j0b != j0:
        return "third anchor must sit in column j0"
    if not (i0 < i2 < i1 and j0 < j1):
        return "anchors must satisfy i0 < i2 < i1 and j0 < j1"
    if (i2, j0) not in delta:
        return "(i2,j0) must be decorated"
    if tm.entry(i2, j0) != 1:
        return "entry at (i2,j0) must be exactly 1"
    if tm.entry(i0, j0) <= 0:
        return "entry at (i0,j0) must be positive"
    if tm.entry(i1, j1) <= 0:
        return "entry at (i1,j1) must be positive"
    if dominated((i0, j1), delta):
        return "(i0,j1) must not lie weakly northwest of a decorated cell"
    bad = _nonzero_in_rect(
        tm, i0, j0, i1, j1, frozenset({(i0, j1), (i1, j0), (i2, j0)})
    )
    if bad is not None:
        return f"nonzero entry at {bad} strictly between the corners"
    return (_shift(tm, _rect_changes(i0, j0, i1, j1)), delta)


def _try_IVc(dm: DecoratedMatrix, anchors: tuple[Position, ...]):
    if len(anchors) != 3:
        return "expected anchors ((i0,j0), (i1,j1), (i0,j2))"
    (i0, j0), (i1, j1), (i0b, j2) = anchors
    tm, delta = dm.matrix, dm.delta
    if not all(_in_grid(tm, p) for p in anchors):
        return "anchor outside the grid"
    if i0b != i0:
        return "third anchor must sit in row i0"
    if not (j0 < j2 < j1 and i0 < i1):
        return "anchors must satisfy j0 < j2 < j1 and i0 < i1"
    if (i0, j2) not in delta:
        return "(i0,j2) must be decorated"
    if tm.entry(i0, j2) != 1:
        return "entry at (i0,j2) must be exactly 1"
    if tm.entry(i0, j0) <= 0:
        return "entry at (i0,j0) must be positive"
    if tm.entry(i1, j1) <= 0:
        return "entry at (i1,j1) must be positive"
    if dominated((i1, j0), delta):
        return "(i1,j0) must not lie weakly northwest of a decorated cell"
    bad = _nonzero_in_rect(
        tm, i0, j0, i1, j1, frozenset({(i0, j1), (i1, j0), (i0, j2)})
    )
    if bad is not None:
        return f"nonzero entry at {bad} strictly between the corners"
    return (_shift(tm, _rect_changes(i0, j0, i1, j1)), delta)


def _try_V(dm: DecoratedMatrix, anchors: tuple[Position, ...]):
    if len(anchors) < 2:
        return "expected a pivot followed by a nonempty chain"
    pivot, chain = anchors[0], anchors[1:]
    tm, delta = dm.matrix, dm.delta
    if not all(_in_grid(tm, p) for p in anchors):
        return "anchor outside the grid"
    if chain[0] not in delta:
        return "chain must consist of decorated positions"
    start = delta.index(chain[0])
    if delta[start : start + len(chain)] != chain:
        return "chain must be a consecutive run of the decoration"
    i0, j0 = pivot
    if not (i0 < chain[0][0] and j0 < chain[-1][1]):
        return "pivot must satisfy i0 < i_1 and j0 < j_t"
    if tm.entry(i0, j0) <= 0:
        return "entry at (i0,j0) must be positive"
    for (cs_i, cs_j) in chain:
        for i in range(i0, cs_i):
            for j in range(j0, cs_j):
                if (i, j) != pivot and tm.entry(i, j) != 0:
                    return f"nonzero entry at ({i},{j}) between the pivot and the chain"
    others = set(delta) - set(chain)
    head_i, head_j = chain[0]
    a = next(
        (i for i in range(i0 + 1, head_i) if tm.entry(i, head_j) > 0), None
    )
    if a is not None and any(c >= a and d > head_j for (c, d) in others):
        return (
            f"flipping into ({a},{head_j}) first gives a strictly"
            " intermediate orbit"
        )
    tail_i, tail_j = chain[-1]
    b = next(
        (j for j in range(j0 + 1, tail_j) if tm.entry(tail_i, j) > 0), None
    )
    if b is not None and any(c > tail_i and d >= b for (c, d) in others):
        return (
            f"flipping into ({tail_i},{b}) first gives a strictly"
            " intermediate orbit"
        )
    changes: dict[Position, int] = {pivot: -1}
    for p in chain:
        changes[p] = changes.get(p, 0) - 1
    changes[(i0, chain[0][1])] = changes.get((i0, chain[0][1]), 0) + 1
    changes[(chain[-1][0], j0)] = changes.get((chain[-1][0], j0), 0) + 1
    for (a, b) in zip(chain, chain[1:]):
        key = (a[0], b[1])
        changes[key] = changes.get(key, 0) + 1
    new_delta = normalize_decoration(
        (set(delta) - set(chain)) | {(i0, chain[0][1]), (chain[-1][0], j0)}
    )
    return (_shift(tm, changes), new_delta)


_TRY = {
    "I": _try_I,
    "II": _try_II,
    "IIIa": _try_IIIa,
    "IIIb": _try_IIIb,
    "IVa": _try_IVa,
    "IVb": _try_IVb,
    "IVc": _try_IVc,
    "V": _try_V,
}


def apply_move(dm: DecoratedMatrix, move: Move) -> DecoratedMatrix:
    """Apply ``move`` to ``dm``; raise :class:`PreconditionFailed` if any
    stated condition fails."""
    try_fn = _TRY.get(move.kind)
    if try_fn is None:
        raise PreconditionFailed(move.kind, "unknown move kind")
    result = try_fn(dm, move.anchors)
    if isinstance(result, str):
        raise PreconditionFailed(move.kind, result)
    rows, delta = result
    tm = TransportMatrix(rows, dm.matrix.b, dm.matrix.c)
    raise_if_invalid(tm, delta)
    return DecoratedMatrix(tm, delta)


def iter_moves(dm: DecoratedMatrix) -> Iterator[Move]:
    """All applicable moves, lazily, in canonical order.

    Canonical order: kinds in ``KIND_ORDER``, anchors lexicographically
    within each kind.
    """
    tm, delta = dm.matrix, dm.delta
    q, r = tm.q, tm.r

    def ok(kind: str, anchors: tuple[Position, ...]) -> Move | None:
        if not isinstance(_TRY[kind](dm, anchors), str):
            return Move(kind, anchors)
        return None

    for i1 in range(1, q + 1):
        for j1 in range(1, r + 1):
            mv = ok("I", ((i1, j1),))
            if mv:
                yield mv
    for i0 in range(1, q):
        for j0 in range(1, r):
            for i1 in range(i0 + 1, q + 1):
                for j1 in range(j0 + 1, r + 1):
                    mv = ok("II", ((i0, j0), (i1, j1)))
                    if mv:
                        yield mv
    for kind in ("IIIa", "IIIb"):
        for (i0, j0) in delta:
            for i1 in range(i0 + 1, q + 1):
                for j1 in range(j0 + 1, r + 1):
                    mv = ok(kind, ((i0, j0), (i1, j1)))
                    if mv:
                        yield mv
    for (i0, j0) in delta:
        for i1 in range(i0 + 2, q + 1):
            for j1 in range(j0 + 1, r + 1):
                for (i2, j2) in delta:
                    if i0 < i2 < i1 and j2 < j0:
                        mv = ok("IVa", ((i0, j0), (i1, j1), (i2, j2)))
                        if mv:
                            yield mv
    for i0 in range(1, q):
        for j0 in range(1, r):
            for i1 in range(i0 + 2, q + 1):
                for j1 in range(j0 + 1, r + 1):
                    for i2 in range(i0 + 1, i1):
                        if (i2, j0) in delta:
                            mv = ok("IVb", ((i0, j0), (i1, j1), (i2, j0)))
                            if mv:
                                yield mv
    for i0 in range(1, q):
        for j0 in range(1, r):
            for i1 in range(i0 + 1, q + 1):
                for j1 in range(j0 + 2, r + 1):
                    for j2 in range(j0 + 1, j1):
                        if (i0, j2) in delta:
                            mv = ok("IVc", ((i0, j0), (i1, j1), (i0, j2)))
                            if mv:
                                yield mv
    for i0 in range(1, q + 1):
        for j0 in range(1, r + 1):
            for start in range(len(delta)):
                for stop in range(start + 1, len(delta) + 1):
                    chain = delta[start:stop]
                    mv = ok("V", ((i0, j0),) + chain)
                    if mv:
                        yield mv


def applicable_moves(dm: DecoratedMatrix) -> list[Move]:
    """All applicable moves in canonical order (see :func:`iter_moves`)."""
    out = list(iter_moves(dm))
    out.sort(key=Move.sort_index)
    return out


# ---------------------------------------------------------------------------
# The cover poset


@dataclass(frozen=True, eq=False)
class Poset:
    """Elements and cover relations of the degeneration order.

    ``covers`` holds index pairs ``(a, b)`` meaning element ``a`` is
    covered by element ``b`` (``a < b`` with nothing strictly between);
    ``cover_kinds[k]`` lists the kinds of the moves realizing
    ``covers[k]``.
    """

    elements: tuple[DecoratedMatrix, ...]
    covers: tuple[tuple[int, int], ...]
    cover_kinds: tuple[tuple[str, ...], ...]

    def index_of(self, dm: DecoratedMatrix) -> int:
        return self._index[(dm.matrix.m, dm.delta)]

    def __post_init__(self):
        object.__setattr__(
            self,
            "_index",
            {(el.matrix.m, el.delta): k for k, el in enumerate(self.elements)},
        )


def _leq_masks(elements: Sequence[DecoratedMatrix]) -> list[int]:
    """Bitmask of the rank order: bit ``t`` of ``leq[a]`` iff ``a <= t``."""
    keys = []
    for el in elements:
        rt = rank_table(el.matrix)
        bt = rbar_table(el)
        keys.append(
            tuple(v for row in rt.values for v in row)
            + tuple(v for row in bt.values for v in row)
        )
    count = len(elements)
    leq = [0] * count
    for a in range(count):
        ka = keys[a]
        mask = 0
        for t in range(count):
            kt = keys[t]
            if all(x >= y for x, y in zip(ka, kt)):
                mask |= 1 << t
        leq[a] = mask
    return leq


def _move_edges(
    elements: Sequence[DecoratedMatrix],
) -> tuple[list[list[Move]], list[list[int]]]:
    """Canonical move lists and their target indices for each element."""
    index = {(el.matrix.m, el.delta): k for k, el in enumerate(elements)}
    moves_of: list[list[Move]] = []
    targets_of: list[list[int]] = []
    for el in elements:
        moves = applicable_moves(el)
        moves_of.append(moves)
        targets_of.append(
            [index[(res.matrix.m, res.delta)] for res in (apply_move(el, mv) for mv in moves)]
        )
    return moves_of, targets_of


def _reach_masks(count: int, targets_of: Sequence[Sequence[int]]) -> list[int]:
    """Reflexive-transitive closure of the move graph, as bitmasks."""
    reach = [0] * count
    done = [False] * count

    def close(k: int) -> int:
        if not done[k]:
            mask = 1 << k
            for t in targets_of[k]:
                mask |= close(t)
            reach[k] = mask
            done[k] = True
        return reach[k]

    for k in range(count):
        close(k)
    return reach


def build_poset(
    b: tuple[int, ...], c: tuple[int, ...], check_reduction: bool = True
) -> Poset:
    """Enumerate all orbits with margins ``(b, c)`` and their covers.

    The covers are the deduplicated move edges.  With
    ``check_reduction`` (the default) the construction additionally
    asserts that the move graph's closure equals the rank order and
    that every edge is a genuine cover.
    """
    elements = tuple(enumerate_orbits(b, c))
    count = len(elements)
    moves_of, targets_of = _move_edges(elements)
    edge_kinds: dict[tuple[int, int], list[str]] = {}
    for a in range(count):
        for mv, t in zip(moves_of[a], targets_of[a]):
            kinds = edge_kinds.setdefault((a, t), [])
            if mv.kind not in kinds:
                kinds.append(mv.kind)
    covers = tuple(sorted(edge_kinds))
    cover_kinds = tuple(tuple(edge_kinds[e]) for e in covers)
    if check_reduction:
        leq = _leq_masks(elements)
        reach = _reach_masks(count, targets_of)
        assert reach == leq, "move closure differs from the rank order"
        for (a, t) in covers:
            assert not any(
                z != a and z != t and (leq[a] >> z) & 1 and (leq[z] >> t) & 1
                for z in range(count)
            ), f"edge {a}->{t} is not a cover"
    return Poset(elements, covers, cover_kinds)


def find_chain(x: DecoratedMatrix, y: DecoratedMatrix) -> list[Move] | None:
    """A chain of moves from ``x`` up to ``y``.

    Returns ``[]`` when the orbits are equal, ``None`` when ``x <= y``
    fails, and otherwise a list of moves whose successive application
    transforms ``x`` into ``y``.  Deterministic: each step takes the
    canonically first applicable move whose result stays below ``y``.
    """
    if x.matrix.b != y.matrix.b or x.matrix.c != y.matrix.c:
        raise ShapeMismatch(
            f"margins {x.matrix.b} x {x.matrix.c} vs {y.matrix.b} x {y.matrix.c}"
        )
    if rk_first_difference(x, y) is None:
        return []
    if not rk_leq_dec(x, y):
        return None
    chain: list[Move] = []
    z = x
    while rk_first_difference(z, y) is not None:
        step = None
        for mv in iter_moves(z):
            res = apply_move(z, mv)
            if rk_leq_dec(res, y):
                step = (mv, res)
                break
        if step is None:
            raise FlagError(f"no progressing move below the target from {z}")
        chain.append(step[0])
        z = step[1]
    return chain


@dataclass(frozen=True)
class EquivalenceReport:
    """Outcome of the exhaustive move/order equivalence check."""

    b: tuple[int, ...]
    c: tuple[int, ...]
    element_count: int
    cover_count: int
    order_equivalent: bool
    moves_are_covers: bool
    covers_are_moves: bool
    chains_ok: bool
    counterexamples: tuple[str, ...]

    @property
    def passed(self) -> bool:
        return (
            self.order_equivalent
            and self.moves_are_covers
            and self.covers_are_moves
            and self.chains_ok
        )


def verify_equivalence(b: tuple[int, ...], c: tuple[int, ...]) -> EquivalenceReport:
    """Check move generation against the rank order on all ``(b, c)`` orbits.

    Verifies four statements over the full orbit list: the
    reflexive-transitive closure of the moves equals the rank order;
    every move edge is a cover; every cover arises from a move; and the
    greedy chain construction reaches every comparable target.
    """
    elements = tuple(enumerate_orbits(b, c))
    count = len(elements)
    moves_of, targets_of = _move_edges(elements)
    leq = _leq_masks(elements)
    reach = _reach_masks(count, targets_of)
    counterexamples: list[str] = []
    order_equivalent = reach == leq
    if not order_equivalent:
        for a in range(count):
            if reach[a] != leq[a]:
                counterexamples.append(
                    f"element {a}: move closure and rank order disagree"
                )
    edge_set = {(a, t) for a in range(count) for t in targets_of[a]}
    moves_are_covers = True
    covers = set()
    for a in range(count):
        mask = leq[a]
        for t in range(count):
            if t == a or not ((mask >> t) & 1):
                continue
            if not any(
                z != a and z != t and (mask >> z) & 1 and (leq[z] >> t) & 1
                for z in range(count)
            ):
                covers.add((a, t))
    for (a, t) in sorted(edge_set):
        if (a, t) not in covers:
            moves_are_covers = False
            counterexamples.append(f"move edge {a}->{t} is not a cover")
    covers_are_moves = True
    for (a, t) in sorted(covers):
        if (a, t) not in edge_set:
            covers_are_moves = False
            counterexamples.append(f"cover {a}->{t} is not realized by a move")
    chains_ok = True
    for a in range(count):
        mask = leq[a]
        for t in range(count):
            if t == a or not ((mask >> t) & 1):
                continue
            z = a
            steps = 0
            while z != t and steps <= count:
                nxt = None
                for tgt in targets_of[z]:
                    if (leq[tgt] >> t) & 1:
                        nxt = tgt
                        break
                if nxt is None:
                    break
                z = nxt
                steps += 1
            if z != t:
                chains_ok = False
                counterexamples.append(f"no greedy chain from {a} to {t}")
    return EquivalenceReport(
        b=tuple(b),
        c=tuple(c),
        element_count=count,
        cover_count=len(covers),
        order_equivalent=order_equivalent,
        moves_are_covers=moves_are_covers,
        covers_are_moves=covers_are_moves,
        chains_ok=chains_ok,
        counterexamples=tuple(counterexamples),
    )
