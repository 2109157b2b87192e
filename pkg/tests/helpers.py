"""Brute-force oracles and golden data shared across the test modules.

Everything in this file is deliberately independent of the package
internals: counts come from direct enumeration, order relations from
their definitions, and reductions from cubic-time closures, so the fast
implementations are measured against something honest.
"""

from itertools import combinations, permutations


def compositions(n):
    """All ordered tuples of positive integers summing to ``n``."""
    if n == 0:
        return [()]
    return [(first,) + rest for first in range(1, n + 1) for rest in compositions(n - first)]


def margin_pairs(lo, hi):
    """All margin pairs ``(b, c)`` with total mass between ``lo`` and ``hi``."""
    return [
        (b, c)
        for n in range(lo, hi + 1)
        for b in compositions(n)
        for c in compositions(n)
    ]


def brute_force_matrices(b, c):
    """All nonnegative integer matrices with row sums ``b``, column sums ``c``."""
    q, r = len(b), len(c)
    out = []

    def rows_from(done, col_left):
        if len(done) == q:
            if all(x == 0 for x in col_left):
                out.append(tuple(done))
            return
        budget = b[len(done)]

        def cells(row, left):
            k = len(row)
            if k == r:
                if left == 0:
                    rows_from(
                        done + [tuple(row)],
                        [cl - x for cl, x in zip(col_left, row)],
                    )
                return
            for x in range(min(left, col_left[k]) + 1):
                cells(row + [x], left - x)

        cells([], budget)

    rows_from([], list(c))
    return out


def brute_force_staircases(points):
    """All nonempty NE-to-SW staircases within ``points``, sorted by row.

    A staircase is a set whose members are pairwise strictly ordered
    one way in rows and the other way in columns.
    """
    pts = sorted(points)
    out = []
    for size in range(1, len(pts) + 1):
        for sub in combinations(pts, size):
            if all(
                p[0] < s[0] and p[1] > s[1]
                for p, s in combinations(sub, 2)
            ):
                out.append(tuple(sub))
    return out


def prefix_rank_table(m, q, r):
    """Bordered table of northwest prefix sums, straight from the definition."""
    return [
        [
            sum(m[a][bb] for a in range(i) for bb in range(j))
            for j in range(r + 1)
        ]
        for i in range(q + 1)
    ]


def transitive_reduction(count, leq):
    """Cover pairs of a finite order given by a ``leq(a, t)`` predicate."""
    covers = []
    for a in range(count):
        for t in range(count):
            if a == t or not leq(a, t):
                continue
            if not any(
                z != a and z != t and leq(a, z) and leq(z, t)
                for z in range(count)
            ):
                covers.append((a, t))
    return covers


def inversions(w):
    """Number of inversions of a permutation in one-line notation."""
    return sum(1 for a, b in combinations(range(len(w)), 2) if w[a] > w[b])


def bruhat_covers(n):
    """Covers of the strong order on permutations of ``1..n``.

    ``w`` is covered by ``v`` exactly when ``v`` arises from ``w`` by one
    transposition that raises the inversion count by exactly one.
    """
    out = set()
    for w in permutations(range(1, n + 1)):
        base = inversions(w)
        for a, b in combinations(range(n), 2):
            v = list(w)
            v[a], v[b] = v[b], v[a]
            v = tuple(v)
            if inversions(v) == base + 1:
                out.add((w, v))
    return out


# ---------------------------------------------------------------------------
# Golden data for the 28-element order on decorated permutation matrices
# with margins (1,1,1) x (1,1,1).  Each label names the element built by
# ``from_permutation(w, rows)``; the cover list below was cross-checked
# against an independent construction of the order and is exact.

GOLDEN_N3_LABELS = {
    "min": ((1, 2, 3), (1,)),
    "a": ((1, 2, 3), (2,)),
    "b": ((1, 3, 2), (1,)),
    "c": ((2, 1, 3), (2,)),
    "d": ((2, 1, 3), (1,)),
    "e": ((1, 2, 3), (3,)),
    "f": ((1, 3, 2), (2,)),
    "g": ((1, 3, 2), (3,)),
    "h": ((2, 1, 3), (1, 2)),
    "i": ((3, 1, 2), (2,)),
    "j": ((3, 1, 2), (1,)),
    "k": ((2, 3, 1), (1,)),
    "l": ((2, 3, 1), (3,)),
    "m": ((2, 1, 3), (3,)),
    "n": ((1, 3, 2), (2, 3)),
    "o": ((3, 1, 2), (1, 2)),
    "p": ((2, 3, 1), (1, 3)),
    "q": ((2, 3, 1), (2,)),
    "r": ((3, 1, 2), (3,)),
    "s": ((3, 2, 1), (2,)),
    "t": ((3, 2, 1), (1,)),
    "u": ((3, 2, 1), (3,)),
    "v": ((3, 1, 2), (1, 3)),
    "w": ((2, 3, 1), (2, 3)),
    "x": ((3, 2, 1), (1, 2)),
    "y": ((3, 2, 1), (1, 3)),
    "z": ((3, 2, 1), (2, 3)),
    "max": ((3, 2, 1), (1, 2, 3)),
}

_GOLDEN_N3_COVER_TEXT = """
min a, min b, min c, min d, a e, a f, a g, a h, b f, b g, b i, b j, b k,
b l, c h, c i, c l, d h, d j, d k, e m, e n, f n, f o, f q, g n, g p,
g r, h m, h o, h p, h q, h r, h s, i o, i r, i s, i u, j o, j t, k p,
k q, k s, k t, l p, l u, m v, m w, n v, n w, n y, o v, o x, o y, p w,
p y, p z, q w, q x, r v, r z, s x, s z, t x, t y, u y, u z, v max,
w max, x max, y max, z max
"""

GOLDEN_N3_COVERS = tuple(
    tuple(token.split()) for token in _GOLDEN_N3_COVER_TEXT.replace("\n", " ").split(",")
)
