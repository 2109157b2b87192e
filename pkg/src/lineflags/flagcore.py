"""Core domain types: transport matrices, decorations, and the position order.

A configuration of one line and two partial flags in an n-dimensional
space is encoded, up to change of basis, by a *decorated transport
matrix*: a q-by-r matrix of nonnegative integers with prescribed row
sums ``b`` and column sums ``c``, together with a nonempty staircase of
*decorated* positions running from northeast to southwest, each sitting
on a positive entry.

Positions are 1-based pairs ``(i, j)``.  The componentwise order puts
northwest positions low: ``(i, j) <= (i', j')`` iff ``i <= i'`` and
``j <= j'``.  Rank tables carry an explicit 0 border, but a Position is
always inside the grid.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

Position = tuple[int, int]

__all__ = [
    "Position",
    "FlagError",
    "ValidationError",
    "ShapeMismatch",
    "NotFullFlag",
    "PreconditionFailed",
    "pos_leq",
    "pos_lt",
    "dominated",
    "set_leq",
    "normalize_decoration",
    "validate_composition",
    "TransportMatrix",
    "DecoratedMatrix",
    "validate",
    "raise_if_invalid",
    "from_permutation",
    "to_permutation",
    "element_to_obj",
    "element_from_obj",
    "render",
    "sort_key",
]


class FlagError(Exception):
    """Base class for every error raised by this package."""


class ValidationError(FlagError, ValueError):
    """A value violates a structural invariant.

    ``code`` names the first violated rule and the offending index,
    e.g. ``"BadRowSum(2)"`` or ``"NotStaircase(3)"``.
    """

    def __init__(self, code: str):
        super().__init__(code)
        self.code = code


class ShapeMismatch(FlagError):
    """Two elements do not share the same margins (b, c)."""


class NotFullFlag(FlagError):
    """Operation is defined only for b = c = (1, ..., 1)."""


class PreconditionFailed(FlagError):
    """A move was applied whose stated conditions do not hold.

    ``kind`` is the move kind, ``clause`` describes the first violated
    condition.
    """

    def __init__(self, kind: str, clause: str):
        super().__init__(f"{kind}: {clause}")
        self.kind = kind
        self.clause = clause


# ---------------------------------------------------------------------------
# The position order and decoration normalization


def pos_leq(p: Position, p2: Position) -> bool:
    """Componentwise order on positions: northwest is small."""
    return p[0] <= p2[0] and p[1] <= p2[1]


def pos_lt(p: Position, p2: Position) -> bool:
    """Strict componentwise order: ``pos_leq`` and not equal."""
    return p != p2 and pos_leq(p, p2)


def dominated(p: Position, positions: Iterable[Position]) -> bool:
    """True iff ``p <= d`` for some ``d`` in ``positions``."""
    return any(pos_leq(p, d) for d in positions)


def set_leq(delta: Iterable[Position], delta2: Iterable[Position]) -> bool:
    """Domination order on position sets.

    True iff every element of ``delta`` lies under some element of
    ``delta2``.  Reflexive and transitive; antisymmetric on antichains.
    """
    targets = tuple(delta2)
    return all(dominated(p, targets) for p in delta)


def normalize_decoration(positions: Iterable[Position]) -> tuple[Position, ...]:
    """Return the componentwise-maximal elements of a nonempty set.

    The result is an antichain, sorted by increasing row (hence, being
    an antichain, by decreasing column).  Idempotent; the identity on
    antichains.
    """
    pts = set(positions)
    if not pts:
        raise ValidationError("EmptyInput")
    maximal = [p for p in pts if not any(pos_lt(p, d) for d in pts)]
    return tuple(sorted(maximal))


# ---------------------------------------------------------------------------
# Compositions (margins)


def validate_composition(parts: tuple[int, ...]) -> str | None:
    """Return an error code unless every part is an integer >= 1."""
    if len(parts) == 0:
        return "EmptyComposition"
    for k, part in enumerate(parts, start=1):
        if not isinstance(part, int) or isinstance(part, bool) or part < 1:
            return f"BadPart({k})"
    return None


# ---------------------------------------------------------------------------
# Transport matrices and decorations


@dataclass(frozen=True)
class TransportMatrix:
    """A q x r matrix of nonnegative integers with margins b and c.

    ``m`` is stored as a tuple of row tuples; ``b`` and ``c`` are the
    prescribed row and column sums.  Instances are immutable values and
    may be freely shared; use :func:`validate` to check the invariants.
    """

    m: tuple[tuple[int, ...], ...]
    b: tuple[int, ...]
    c: tuple[int, ...]

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[int]]) -> "TransportMatrix":
        """Build a matrix whose margins are read off from the rows."""
        m = tuple(tuple(int(x) for x in row) for row in rows)
        b = tuple(sum(row) for row in m)
        c = tuple(sum(col) for col in zip(*m)) if m else ()
        tm = cls(m, b, c)
        raise_if_invalid(tm)
        return tm

    @property
    def q(self) -> int:
        return len(self.b)

    @property
    def r(self) -> int:
        return len(self.c)

    @property
    def n(self) -> int:
        return sum(self.b)

    def entry(self, i: int, j: int) -> int:
        """The entry at 1-based position (i, j)."""
        return self.m[i - 1][j - 1]

    def positive_positions(self) -> list[Position]:
        """All positions carrying a positive entry, in row-major order."""
        return [
            (i, j)
            for i in range(1, self.q + 1)
            for j in range(1, self.r + 1)
            if self.m[i - 1][j - 1] > 0
        ]


@dataclass(frozen=True)
class DecoratedMatrix:
    """A transport matrix with a NE-to-SW staircase of decorated positions.

    ``delta`` is stored sorted by increasing row; every decorated
    position must carry a positive entry.
    """

    matrix: TransportMatrix
    delta: tuple[Position, ...]

    @classmethod
    def make(cls, matrix: TransportMatrix, delta: Iterable[Position]) -> "DecoratedMatrix":
        """Build and validate, sorting the decoration canonically."""
        dm = cls(matrix, tuple(sorted((int(i), int(j)) for (i, j) in delta)))
        raise_if_invalid(dm.matrix, dm.delta)
        return dm

    @property
    def q(self) -> int:
        return self.matrix.q

    @property
    def r(self) -> int:
        return self.matrix.r

    @property
    def n(self) -> int:
        return self.matrix.n


def validate(matrix: TransportMatrix, delta: Iterable[Position] | None = None) -> str | None:
    """Check all invariants; return the first violated rule's code, or None.

    Matrix codes: ``EmptyComposition``, ``BadPart(k)``, ``BadShape``,
    ``NegativeEntry(i,j)``, ``BadRowSum(i)``, ``BadColSum(j)``.
    Decoration codes: ``EmptyDecoration``, ``BadPosition(k)``,
    ``NotStaircase(k)``, ``ZeroEntryDecorated(i,j)``.
    """
    code = validate_composition(matrix.b)
    if code is not None:
        return code
    code = validate_composition(matrix.c)
    if code is not None:
        return code
    if sum(matrix.b) != sum(matrix.c):
        return "BadShape"
    q, r = len(matrix.b), len(matrix.c)
    if len(matrix.m) != q or any(len(row) != r for row in matrix.m):
        return "BadShape"
    for i in range(1, q + 1):
        for j in range(1, r + 1):
            x = matrix.m[i - 1][j - 1]
            if not isinstance(x, int) or isinstance(x, bool) or x < 0:
                return f"NegativeEntry({i},{j})"
    for i in range(1, q + 1):
        if sum(matrix.m[i - 1]) != matrix.b[i - 1]:
            return f"BadRowSum({i})"
    for j in range(1, r + 1):
        if sum(matrix.m[i][j - 1] for i in range(q)) != matrix.c[j - 1]:
            return f"BadColSum({j})"
    if delta is None:
        return None
    pts = list(delta)
    if not pts:
        return "EmptyDecoration"
    for k, (i, j) in enumerate(pts, start=1):
        if not (1 <= i <= q and 1 <= j <= r):
            return f"BadPosition({k})"
    pts.sort()
    for k in range(1, len(pts)):
        (i0, j0), (i1, j1) = pts[k - 1], pts[k]
        if not (i0 < i1 and j0 > j1):
            return f"NotStaircase({k + 1})"
    for (i, j) in pts:
        if matrix.m[i - 1][j - 1] <= 0:
            return f"ZeroEntryDecorated({i},{j})"
    return None


def raise_if_invalid(matrix: TransportMatrix, delta: Iterable[Position] | None = None) -> None:
    """Raise :class:`ValidationError` with the first violated rule, if any."""
    code = validate(matrix, delta)
    if code is not None:
        raise ValidationError(code)


# ---------------------------------------------------------------------------
# Permutation dictionary (full flags)


def from_permutation(w: Iterable[int], delta_cols: Iterable[int]) -> DecoratedMatrix:
    """Full-flag element for a permutation and a descending index set.

    ``w`` is one-line notation ``(w(1), ..., w(n))``, a permutation of
    ``1..n``.  ``delta_cols`` is a nonempty set of indices ``k``; the
    decorated cells are ``(k, w(k))``, so ``w`` must be strictly
    decreasing along the chosen indices.  The matrix is the permutation
    matrix with ``m[k][w(k)] = 1`` and margins ``b = c = (1, ..., 1)``.
    """
    wt = tuple(int(x) for x in w)
    n = len(wt)
    if sorted(wt) != list(range(1, n + 1)):
        raise ValidationError("NotAPermutation")
    cols = sorted(set(int(k) for k in delta_cols))
    if not cols:
        raise ValidationError("EmptyDecoration")
    for k, col in enumerate(cols, start=1):
        if not 1 <= col <= n:
            raise ValidationError(f"BadPosition({k})")
    for a, b in zip(cols, cols[1:]):
        if wt[a - 1] <= wt[b - 1]:
            raise ValidationError("NotDescending")
    rows = [[0] * n for _ in range(n)]
    for k in range(1, n + 1):
        rows[k - 1][wt[k - 1] - 1] = 1
    matrix = TransportMatrix.from_rows(rows)
    delta = tuple((k, wt[k - 1]) for k in cols)
    return DecoratedMatrix.make(matrix, delta)


def to_permutation(dm: DecoratedMatrix) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Inverse of :func:`from_permutation`; requires b = c = (1, ..., 1)."""
    tm = dm.matrix
    n = tm.n
    if tm.b != (1,) * n or tm.c != (1,) * n:
        raise NotFullFlag(f"margins {tm.b} x {tm.c}")
    w = tuple(row.index(1) + 1 for row in tm.m)
    cols = tuple(i for (i, _) in dm.delta)
    return w, cols


# ---------------------------------------------------------------------------
# Serialization and rendering


def element_to_obj(x: TransportMatrix | DecoratedMatrix) -> dict:
    """JSON-ready dict ``{"b", "c", "m"[, "delta"]}`` with 1-based positions."""
    if isinstance(x, DecoratedMatrix):
        obj = element_to_obj(x.matrix)
        obj["delta"] = [[i, j] for (i, j) in x.delta]
        return obj
    return {"b": list(x.b), "c": list(x.c), "m": [list(row) for row in x.m]}


def element_from_obj(obj: object) -> TransportMatrix | DecoratedMatrix:
    """Parse ``{"b","c","m"[,"delta"]}``; the matrix is validated.

    ``b`` and ``c`` default to the margins read off ``m``.  With a
    ``delta`` field the result is a :class:`DecoratedMatrix`, otherwise
    a plain :class:`TransportMatrix`.
    """
    if not isinstance(obj, dict) or "m" not in obj:
        raise ValidationError("BadShape")
    try:
        m = tuple(tuple(int(x) for x in row) for row in obj["m"])
        b = tuple(int(x) for x in obj["b"]) if "b" in obj else tuple(sum(row) for row in m)
        if "c" in obj:
            c = tuple(int(x) for x in obj["c"])
        else:
            c = tuple(sum(col) for col in zip(*m)) if m else ()
        delta_obj = obj.get("delta")
        delta = (
            None
            if delta_obj is None
            else tuple(sorted((int(i), int(j)) for (i, j) in delta_obj))
        )
    except (TypeError, ValueError, KeyError):
        raise ValidationError("BadShape") from None
    tm = TransportMatrix(m, b, c)
    if delta is None:
        raise_if_invalid(tm)
        return tm
    raise_if_invalid(tm, delta)
    return DecoratedMatrix(tm, delta)


def render(x: TransportMatrix | DecoratedMatrix) -> str:
    """Compact one-line form: rows joined by ' / ', '.' for zero entries,
    parentheses around decorated entries, e.g. ``"(1) . . / . . 1 / . 1 ."``.
    """
    if isinstance(x, DecoratedMatrix):
        tm, marked = x.matrix, set(x.delta)
    else:
        tm, marked = x, set()
    rows = []
    for i in range(1, tm.q + 1):
        cells = []
        for j in range(1, tm.r + 1):
            v = tm.entry(i, j)
            cell = f"({v})" if (i, j) in marked else ("." if v == 0 else str(v))
            cells.append(cell)
        rows.append(" ".join(cells))
    return " / ".join(rows)


def sort_key(x: TransportMatrix | DecoratedMatrix):
    """Canonical total order: flattened matrix entries, then the decoration."""
    if isinstance(x, DecoratedMatrix):
        return (tuple(v for row in x.matrix.m for v in row), x.delta)
    return (tuple(v for row in x.m for v in row), ())
