"""Exact geometric oracle: configurations, rank tables, and degenerations.

Everything combinatorial in this package has a geometric counterpart: a
*configuration* is an actual line ``A`` and two partial flags ``B``,
``C`` in ``Q^n``, given by rational generator vectors.  This module
computes their rank invariants exactly (no floating point, no modular
tricks), recovers the orbit of a configuration, and builds the explicit
one-parameter families that realize each move as a degeneration:
evaluating a family at ``tau != 0`` gives the more generic orbit, and
its limit at ``tau = 0`` — computed exactly by saturating the family's
polynomial rows — lands in the more special one.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from itertools import accumulate
from math import gcd, lcm
from typing import Iterable, Sequence

from .flagcore import (
    DecoratedMatrix,
    FlagError,
    Position,
    TransportMatrix,
    ValidationError,
    normalize_decoration,
    pos_lt,
    raise_if_invalid,
    render,
)
from .twoflags import RankTable
from .decorated import NotAnOrbitInvariant, RBarTable, decorated_from_tables
from .moves import Move, apply_move

__all__ = [
    "ZeroEntryPosition",
    "IntEchelon",
    "Configuration",
    "standard_configuration",
    "geometric_rank_tables",
    "identify_orbit",
    "uncircling_check",
    "apply_basis_change",
    "random_int_invertible",
    "degeneration_family",
    "MoveDegenerationReport",
    "verify_move_degeneration",
    "configuration_to_obj",
    "configuration_from_obj",
]


class ZeroEntryPosition(FlagError):
    """A marked position of a standard configuration has a zero entry."""


# ---------------------------------------------------------------------------
# Exact incremental rank computation


class IntEchelon:
    """Incremental exact echelon form over the rationals.

    Rows are stored as integer vectors, fully reduced against one
    another (each stored row vanishes at every other row's pivot),
    gcd-normalized with positive pivots.  ``add`` either absorbs a
    vector already in the span (returning False) or extends the span by
    it (returning True).  ``copy`` is cheap, enabling rank sweeps.
    """

    def __init__(self) -> None:
        self._rows: dict[int, list[int]] = {}

    def copy(self) -> "IntEchelon":
        new = IntEchelon()
        new._rows = {k: row[:] for k, row in self._rows.items()}
        return new

    @property
    def rank(self) -> int:
        return len(self._rows)

    def add(self, vec: Sequence[Fraction | int]) -> bool:
        fracs = [Fraction(x) for x in vec]
        den = reduce(lcm, (f.denominator for f in fracs), 1)
        v = [int(f * den) for f in fracs]
        for col, row in self._rows.items():
            f = v[col]
            if f:
                lead = row[col]
                v = [a * lead - b * f for a, b in zip(v, row)]
        k = next((idx for idx, x in enumerate(v) if x != 0), None)
        if k is None:
            return False
        v = _int_normalize(v, k)
        for col, row in list(self._rows.items()):
            f = row[k]
            if f:
                lead = v[k]
                merged = [a * lead - b * f for a, b in zip(row, v)]
                self._rows[col] = _int_normalize(merged, col)
        self._rows[k] = v
        return True


def _int_normalize(row: list[int], pivot: int) -> list[int]:
    g = reduce(gcd, (abs(x) for x in row), 0)
    if g > 1:
        row = [x // g for x in row]
    if row[pivot] < 0:
        row = [-x for x in row]
    return row


def _dependency(
    rows: Sequence[Sequence[Fraction]],
) -> tuple[int, list[Fraction]] | None:
    """First row lying in the span of the previous ones.

    Returns ``(p, coeffs)`` with ``rows[p] = sum(coeffs[k] * rows[k]
    for k < p)``, or None when the rows are independent.
    """
    reduced: list[tuple[list[Fraction], int, list[Fraction]]] = []
    count = len(rows)
    for p in range(count):
        vec = [Fraction(x) for x in rows[p]]
        combo = [Fraction(0)] * count
        combo[p] = Fraction(1)
        for pvec, pcol, pcombo in reduced:
            f = vec[pcol]
            if f:
                vec = [a - f * b for a, b in zip(vec, pvec)]
                combo = [a - f * b for a, b in zip(combo, pcombo)]
        pivot = next((k for k, x in enumerate(vec) if x != 0), None)
        if pivot is None:
            return p, [-combo[k] for k in range(p)]
        inv = vec[pivot]
        vec = [x / inv for x in vec]
        combo = [x / inv for x in combo]
        reduced.append((vec, pivot, combo))
    return None


# ---------------------------------------------------------------------------
# Configurations


@dataclass(frozen=True)
class Configuration:
    """A line and two partial flags in ``Q^n``, by rational generators.

    ``a`` lists generators of the line.  ``b_levels[i]`` lists vectors
    that, together with all earlier levels, span ``B_{i+1}``; likewise
    ``c_levels`` for the second flag.
    """

    n: int
    a: tuple[tuple[Fraction, ...], ...]
    b_levels: tuple[tuple[tuple[Fraction, ...], ...], ...]
    c_levels: tuple[tuple[tuple[Fraction, ...], ...], ...]


def _source_slots(tm: TransportMatrix) -> list[tuple[int, int, int]]:
    """Coordinate slots ``(i, j, k)`` of a matrix, in row-major order."""
    return [
        (i, j, k)
        for i in range(1, tm.q + 1)
        for j in range(1, tm.r + 1)
        for k in range(1, tm.entry(i, j) + 1)
    ]


def standard_configuration(
    tm: TransportMatrix, positions: Iterable[Position]
) -> Configuration:
    """The coordinate configuration of a matrix with marked positions.

    Coordinates are indexed by slots ``(i, j, k)`` with ``1 <= k <=
    m[i][j]`` in row-major order.  ``B_i`` is spanned by the slots in
    rows ``<= i``, ``C_j`` by the slots in columns ``<= j``, and the
    line by the sum of the ``k = 1`` unit vectors over ``positions``
    (which must be nonempty and sit on positive entries, but need not
    form a staircase).
    """
    raise_if_invalid(tm)
    pts = sorted(set((int(i), int(j)) for (i, j) in positions))
    if not pts:
        raise ValidationError("EmptyInput")
    for k, (i, j) in enumerate(pts, start=1):
        if not (1 <= i <= tm.q and 1 <= j <= tm.r):
            raise ValidationError(f"BadPosition({k})")
        if tm.entry(i, j) <= 0:
            raise ZeroEntryPosition(f"({i},{j})")
    slots = _source_slots(tm)
    index = {s: k for k, s in enumerate(slots)}
    n = tm.n

    def unit(slot: tuple[int, int, int]) -> tuple[Fraction, ...]:
        vec = [Fraction(0)] * n
        vec[index[slot]] = Fraction(1)
        return tuple(vec)

    b_levels = tuple(
        tuple(unit(s) for s in slots if s[0] <= i) for i in range(1, tm.q + 1)
    )
    c_slots = sorted(slots, key=lambda s: (s[1], s[0], s[2]))
    c_levels = tuple(
        tuple(unit(s) for s in c_slots if s[1] <= j) for j in range(1, tm.r + 1)
    )
    a_vec = [Fraction(0)] * n
    for (i, j) in pts:
        a_vec[index[(i, j, 1)]] += 1
    return Configuration(n, (tuple(a_vec),), b_levels, c_levels)


def geometric_rank_tables(config: Configuration) -> tuple[RankTable, RBarTable]:
    """Exact rank invariants of a configuration.

    ``r[i][j] = dim(B_i) + dim(C_j) - rank[B_i | C_j]`` is the
    intersection dimension, and the 0/1 increment is ``delta[i][j] =
    dim(A) + rank[B_i | C_j] - rank[A | B_i | C_j]``, i.e. whether the
    line lies in ``B_i + C_j``.  Computed by incremental exact echelon
    sweeps, two per row of the grid.
    """
    q, r = len(config.b_levels), len(config.c_levels)
    eb = IntEchelon()
    dim_b = [0]
    for level in config.b_levels:
        for g in level:
            eb.add(g)
        dim_b.append(eb.rank)
    ec = IntEchelon()
    dim_c = [0]
    for level in config.c_levels:
        for g in level:
            ec.add(g)
        dim_c.append(ec.rank)
    ea = IntEchelon()
    for g in config.a:
        ea.add(g)
    dim_a = ea.rank
    r_values = [[0] * (r + 1) for _ in range(q + 1)]
    d_values = [[0] * (r + 1) for _ in range(q + 1)]
    base_b = IntEchelon()
    base_ab = ea.copy()
    for i in range(q + 1):
        if i > 0:
            for g in config.b_levels[i - 1]:
                base_b.add(g)
                base_ab.add(g)
        sweep_b = base_b.copy()
        sweep_ab = base_ab.copy()
        d_values[i][0] = dim_a + sweep_b.rank - sweep_ab.rank
        for j in range(1, r + 1):
            for g in config.c_levels[j - 1]:
                sweep_b.add(g)
                sweep_ab.add(g)
            rank_bc = sweep_b.rank
            r_values[i][j] = dim_b[i] + dim_c[j] - rank_bc
            d_values[i][j] = dim_a + rank_bc - sweep_ab.rank
    rank = RankTable(tuple(tuple(row) for row in r_values))
    rbar_values = tuple(
        tuple(r_values[i][j] + d_values[i][j] for j in range(r + 1))
        for i in range(q + 1)
    )
    return rank, RBarTable(rbar_values, tuple(tuple(row) for row in d_values))


def identify_orbit(config: Configuration) -> DecoratedMatrix:
    """The decorated matrix whose invariants match the configuration.

    Raises :class:`NotAnOrbitInvariant` when the computed tables do not
    come from any decorated matrix (e.g. the input is not a genuine
    flag pair with a line in general position over the grid).
    """
    rank, rbar = geometric_rank_tables(config)
    return decorated_from_tables(rank.values, rbar.delta_values)


def uncircling_check(tm: TransportMatrix, positions: Iterable[Position]) -> bool:
    """Does marking ``positions`` land in the orbit of their staircase hull?

    Builds the standard configuration with an arbitrary set of marked
    positive cells and tests that its orbit is the decorated matrix
    whose decoration is the set of componentwise-maximal marked cells.
    """
    pts = normalize_decoration(positions)
    config = standard_configuration(tm, positions)
    try:
        dm = identify_orbit(config)
    except NotAnOrbitInvariant:
        return False
    return dm.matrix.m == tm.m and dm.delta == pts


def apply_basis_change(
    config: Configuration, g: Sequence[Sequence[Fraction | int]]
) -> Configuration:
    """Transform every generator by the invertible matrix ``g`` (vectors
    are rows; the new vector is ``vec @ g``)."""
    n = config.n
    rows = [[Fraction(x) for x in row] for row in g]
    if len(rows) != n or any(len(row) != n for row in rows):
        raise ValidationError("BadShape")
    probe = IntEchelon()
    for row in rows:
        probe.add(row)
    if probe.rank != n:
        raise FlagError("basis change matrix is singular")

    def act(vec: tuple[Fraction, ...]) -> tuple[Fraction, ...]:
        return tuple(
            sum((vec[k] * rows[k][l] for k in range(n)), Fraction(0))
            for l in range(n)
        )

    return Configuration(
        n,
        tuple(act(v) for v in config.a),
        tuple(tuple(act(v) for v in level) for level in config.b_levels),
        tuple(tuple(act(v) for v in level) for level in config.c_levels),
    )


def random_int_invertible(n: int, rng) -> tuple[tuple[int, ...], ...]:
    """A random integer matrix of determinant ±1 (row operations on the
    identity), for exercising basis invariance."""
    rows = [[1 if a == b else 0 for b in range(n)] for a in range(n)]
    for _ in range(3 * n * n):
        a, b = rng.randrange(n), rng.randrange(n)
        if a == b:
            continue
        k = rng.choice((-2, -1, 1, 2))
        rows[b] = [x + k * y for x, y in zip(rows[b], rows[a])]
        if rng.random() < 0.25:
            rows[a], rows[b] = rows[b], rows[a]
    return tuple(tuple(row) for row in rows)


# ---------------------------------------------------------------------------
# Polynomial vectors in the degeneration parameter

_Poly = tuple[Fraction, ...]


def _p_trim(p: Sequence[Fraction]) -> _Poly:
    coeffs = list(p)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


def _p_add(a: _Poly, b: _Poly) -> _Poly:
    size = max(len(a), len(b))
    pa = list(a) + [Fraction(0)] * (size - len(a))
    for k, x in enumerate(b):
        pa[k] += x
    return _p_trim(pa)


def _p_scale(a: _Poly, c: Fraction) -> _Poly:
    if c == 0:
        return ()
    return tuple(x * c for x in a)


def _p_shift(a: _Poly, k: int) -> _Poly:
    if not a:
        return ()
    return (Fraction(0),) * k + tuple(a)


def _p_eval(a: _Poly, x: Fraction) -> Fraction:
    out = Fraction(0)
    for coeff in reversed(a):
        out = out * x + coeff
    return out


def _p_val(a: _Poly) -> int | None:
    for k, x in enumerate(a):
        if x != 0:
            return k
    return None


_PolyVec = tuple[_Poly, ...]


def _v_unit(n: int, idx: int) -> _PolyVec:
    return tuple((Fraction(1),) if k == idx else () for k in range(n))


def _v_add(u: _PolyVec, v: _PolyVec) -> _PolyVec:
    return tuple(_p_add(a, b) for a, b in zip(u, v))


def _v_scale(u: _PolyVec, c: Fraction) -> _PolyVec:
    return tuple(_p_scale(a, c) for a in u)


def _v_shift(u: _PolyVec, k: int) -> _PolyVec:
    return tuple(_p_shift(a, k) for a in u)


def _v_sum(vectors: Sequence[_PolyVec]) -> _PolyVec:
    return reduce(_v_add, vectors)


def _saturate_limit(rows: Sequence[_PolyVec]) -> list[list[Fraction]]:
    """Exact limit of the row flag as the parameter goes to 0.

    Repeatedly replaces a row whose value at 0 depends on the earlier
    rows by the dependency combination divided by its parameter
    content; this changes no prefix span at nonzero parameter values
    and strictly lowers the determinant's vanishing order, so it
    terminates with a nonsingular value at 0, whose prefix spans are
    the limit flag.
    """
    work = [list(row) for row in rows]
    for _ in range(10000):
        numeric = [[_p_eval(p, Fraction(0)) for p in row] for row in work]
        dep = _dependency(numeric)
        if dep is None:
            return numeric
        p, coeffs = dep
        comb: _PolyVec = tuple(work[p])
        for k, ck in enumerate(coeffs):
            if ck:
                comb = _v_add(comb, _v_scale(tuple(work[k]), -ck))
        vals = [v for v in (_p_val(x) for x in comb) if v is not None]
        if not vals:
            raise FlagError("family rows are dependent for all parameter values")
        e = min(vals)
        work[p] = [x[e:] if x else () for x in comb]
    raise FlagError("limit computation did not terminate")


# ---------------------------------------------------------------------------
# Degeneration families


def _family_vectors(
    dm: DecoratedMatrix, move: Move
) -> tuple[DecoratedMatrix, dict[tuple[int, int, int], _PolyVec], _PolyVec]:
    """Symbolic family rows for a move: the target orbit, the map from
    target slots to polynomial vectors in source coordinates, and the
    line generator."""
    target = apply_move(dm, move)
    tm, tgt = dm.matrix, target.matrix
    n = tm.n
    src_index = {s: k for k, s in enumerate(_source_slots(tm))}

    def e(i: int, j: int, k: int) -> _PolyVec:
        return _v_unit(n, src_index[(i, j, k)])

    delta = dm.delta
    specials: dict[tuple[int, int, int], _PolyVec] = {}
    kind, anchors = move.kind, move.anchors
    if kind == "I":
        ((i1, j1),) = anchors
        below = [d for d in delta if pos_lt(d, (i1, j1))]
        specials[(i1, j1, 1)] = _v_sum(
            [_v_shift(e(i1, j1, 1), 1)] + [e(d[0], d[1], 1) for d in below]
        )
        a_set = target.delta
    elif kind in ("II", "IVb", "IVc"):
        (i0, j0), (i1, j1) = anchors[0], anchors[1]
        nw_top = e(i0, j0, tm.entry(i0, j0))
        specials[(i0, j1, tgt.entry(i0, j1))] = _v_add(
            nw_top, _v_shift(e(i1, j1, tm.entry(i1, j1)), 1)
        )
        specials[(i1, j0, tgt.entry(i1, j0))] = nw_top
        a_set = delta
    elif kind == "IIIa":
        (i0, j0), (i1, j1) = anchors
        below = [d for d in delta if pos_lt(d, (i0, j1))]
        specials[(i1, j0, tgt.entry(i1, j0))] = e(i0, j0, 1)
        specials[(i0, j1, 1)] = _v_sum(
            [_v_shift(e(i1, j1, tm.entry(i1, j1)), 1)]
            + [e(d[0], d[1], 1) for d in below]
        )
        a_set = target.delta
    elif kind == "IIIb":
        (i0, j0), (i1, j1) = anchors
        below = [d for d in delta if pos_lt(d, (i1, j0))]
        specials[(i0, j1, tgt.entry(i0, j1))] = e(i0, j0, 1)
        specials[(i1, j0, 1)] = _v_sum(
            [_v_shift(e(i1, j1, tm.entry(i1, j1)), 1)]
            + [e(d[0], d[1], 1) for d in below]
        )
        a_set = target.delta
    elif kind == "IVa":
        (i0, j0), (i1, j1), (i2, j2) = anchors
        below = [d for d in delta if pos_lt(d, (i2, j0))]
        se_top = _v_shift(e(i1, j1, tm.entry(i1, j1)), 1)
        specials[(i1, j2, tgt.entry(i1, j2))] = _v_add(e(i2, j2, 1), se_top)
        specials[(i0, j1, tgt.entry(i0, j1))] = _v_add(e(i0, j0, 1), se_top)
        specials[(i2, j0, 1)] = _v_sum([e(d[0], d[1], 1) for d in below])
        a_set = target.delta
    else:  # kind V
        (i0, j0), chain = anchors[0], anchors[1:]
        rest = [d for d in delta if d not in chain]
        for d in rest:
            specials[(d[0], d[1], 1)] = _v_shift(e(d[0], d[1], 1), 1)
        for (ci, cj) in chain:
            for k in range(1, tgt.entry(ci, cj) + 1):
                specials[(ci, cj, k)] = e(ci, cj, k + 1)
        pivot_top = e(i0, j0, tm.entry(i0, j0))
        heads = [e(ci, cj, 1) for (ci, cj) in chain]
        j_first = chain[0][1]
        i_last = chain[-1][0]
        specials[(i0, j_first, 1)] = _v_sum(
            [pivot_top] + [_v_shift(h, 1) for h in heads]
        )
        for k in range(2, tgt.entry(i0, j_first) + 1):
            specials[(i0, j_first, k)] = e(i0, j_first, k - 1)
        specials[(i_last, j0, 1)] = _v_scale(pivot_top, Fraction(-1))
        for k in range(2, tgt.entry(i_last, j0) + 1):
            specials[(i_last, j0, k)] = e(i_last, j0, k - 1)
        for s in range(1, len(chain)):
            pos = (chain[s - 1][0], chain[s][1])
            # Early chain heads fade at second order; the (1 + tau)
            # factor keeps the family a basis at every nonzero
            # rational parameter (the determinant's other roots are
            # irrational), while leaving all lowest-order terms, and
            # hence the limit, untouched.
            terms = [pivot_top]
            for u, h in enumerate(heads, start=1):
                if u <= s:
                    terms.append(_v_add(_v_shift(h, 2), _v_shift(h, 3)))
                else:
                    terms.append(_v_shift(h, 1))
            specials[(pos[0], pos[1], tgt.entry(pos[0], pos[1]))] = _v_sum(terms)
        a_set = tuple(rest) + ((i0, j_first), (i_last, j0))
    vmap: dict[tuple[int, int, int], _PolyVec] = {}
    for slot in _source_slots(tgt):
        vmap[slot] = specials.get(slot) or e(*slot)
    a_vec = _v_sum([vmap[(i, j, 1)] for (i, j) in a_set])
    return target, vmap, a_vec


def degeneration_family(
    dm: DecoratedMatrix, move: Move, tau: Fraction | int
) -> Configuration:
    """The configuration of the move's one-parameter family at ``tau``.

    For ``tau != 0`` the configuration lies in the orbit of
    ``apply_move(dm, move)``; at ``tau = 0`` it is the exact limit,
    lying in the orbit of ``dm`` itself.  The family is a basis for
    every nonzero rational ``tau``; a singular evaluation raises
    :class:`FlagError` rather than returning a degenerate flag.
    """
    tau = Fraction(tau)
    target, vmap, a_vec = _family_vectors(dm, move)
    tgt = target.matrix
    n = tgt.n
    b_slots = _source_slots(tgt)
    c_slots = sorted(b_slots, key=lambda s: (s[1], s[0], s[2]))
    b_bounds = list(accumulate(tgt.b))
    c_bounds = list(accumulate(tgt.c))
    if tau != 0:
        numeric = {
            slot: tuple(_p_eval(p, tau) for p in vec) for slot, vec in vmap.items()
        }
        probe = IntEchelon()
        for slot in b_slots:
            probe.add(numeric[slot])
        if probe.rank != n:
            raise FlagError(f"family is singular at tau={tau}")
        b_rows = [numeric[s] for s in b_slots]
        c_rows = [numeric[s] for s in c_slots]
        a_row = tuple(_p_eval(p, tau) for p in a_vec)
    else:
        b_rows = [tuple(r) for r in _saturate_limit([vmap[s] for s in b_slots])]
        c_rows = [tuple(r) for r in _saturate_limit([vmap[s] for s in c_slots])]
        vals = [v for v in (_p_val(p) for p in a_vec) if v is not None]
        if not vals:
            raise FlagError("family line vanishes identically")
        content = min(vals)
        a_row = tuple(_p_eval(p[content:] if p else (), Fraction(0)) for p in a_vec)
    b_levels = tuple(tuple(b_rows[:bound]) for bound in b_bounds)
    c_levels = tuple(tuple(c_rows[:bound]) for bound in c_bounds)
    return Configuration(n, (a_row,), b_levels, c_levels)


@dataclass(frozen=True)
class MoveDegenerationReport:
    """Geometric verification of one move as a degeneration."""

    move: Move
    failures: tuple[str, ...]

    @property
    def passed(self) -> bool:
        return not self.failures


def verify_move_degeneration(dm: DecoratedMatrix, move: Move) -> MoveDegenerationReport:
    """Check the move's family at ``tau in {1, 2, 1/3}`` and at ``tau = 0``.

    Every nonzero sample must identify as the move's target orbit and
    the limit must identify as the source orbit.
    """
    target = apply_move(dm, move)
    failures: list[str] = []
    for tau in (Fraction(1), Fraction(2), Fraction(1, 3)):
        got = identify_orbit(degeneration_family(dm, move, tau))
        if got != target:
            failures.append(
                f"tau={tau}: family lies in [{render(got)}], not [{render(target)}]"
            )
    got = identify_orbit(degeneration_family(dm, move, 0))
    if got != dm:
        failures.append(f"tau=0: limit lies in [{render(got)}], not [{render(dm)}]")
    return MoveDegenerationReport(move=move, failures=tuple(failures))


# ---------------------------------------------------------------------------
# Serialization


def configuration_to_obj(config: Configuration) -> dict:
    """JSON-ready dict with rational entries rendered as strings."""

    def num(x: Fraction) -> str:
        return str(x)

    return {
        "n": config.n,
        "A": [[num(x) for x in vec] for vec in config.a],
        "B": [[[num(x) for x in vec] for vec in level] for level in config.b_levels],
        "C": [[[num(x) for x in vec] for vec in level] for level in config.c_levels],
    }


def configuration_from_obj(obj: object) -> Configuration:
    """Parse the ``{"n", "A", "B", "C"}`` form; entries may be numbers
    or strings like ``"2/3"``."""
    if not isinstance(obj, dict) or not all(k in obj for k in ("n", "A", "B", "C")):
        raise ValidationError("BadShape")

    def num(x) -> Fraction:
        if isinstance(x, str):
            return Fraction(x)
        if isinstance(x, int):
            return Fraction(x)
        raise ValidationError("BadShape")

    try:
        n = int(obj["n"])
        a = tuple(tuple(num(x) for x in vec) for vec in obj["A"])
        b_levels = tuple(
            tuple(tuple(num(x) for x in vec) for vec in level) for level in obj["B"]
        )
        c_levels = tuple(
            tuple(tuple(num(x) for x in vec) for vec in level) for level in obj["C"]
        )
    except (TypeError, ValueError):
        raise ValidationError("BadShape") from None
    for group in (a, *b_levels, *c_levels):
        for vec in group:
            if len(vec) != n:
                raise ValidationError("BadShape")
    return Configuration(n, a, b_levels, c_levels)
