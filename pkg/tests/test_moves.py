"""The five move families, their preconditions, and the cover structure."""

import pytest

from lineflags import (
    KIND_ORDER,
    DecoratedMatrix,
    Move,
    PreconditionFailed,
    ShapeMismatch,
    TransportMatrix,
    applicable_moves,
    apply_move,
    build_poset,
    enumerate_orbits,
    find_chain,
    from_permutation,
    iter_moves,
    normalize_decoration,
    rk_leq_dec,
    verify_equivalence,
)
from helpers import GOLDEN_N3_COVERS, GOLDEN_N3_LABELS, transitive_reduction


def raw_flip_target(dm, lo, hi):
    """The decorated matrix a rectangle flip would produce, bypassing
    the move preconditions (decoration kept)."""
    (i0, j0), (i1, j1) = lo, hi
    rows = [list(r) for r in dm.matrix.m]
    rows[i0 - 1][j0 - 1] -= 1
    rows[i1 - 1][j1 - 1] -= 1
    rows[i0 - 1][j1 - 1] += 1
    rows[i1 - 1][j0 - 1] += 1
    tm = TransportMatrix(tuple(tuple(r) for r in rows), dm.matrix.b, dm.matrix.c)
    return DecoratedMatrix.make(tm, dm.delta)


def raw_cascade_target(dm, pivot, chain):
    """The decorated matrix a pivot-and-chain cascade would produce,
    bypassing the move preconditions."""
    rows = [list(r) for r in dm.matrix.m]

    def bump(p, d):
        rows[p[0] - 1][p[1] - 1] += d

    bump(pivot, -1)
    for p in chain:
        bump(p, -1)
    bump((pivot[0], chain[0][1]), +1)
    bump((chain[-1][0], pivot[1]), +1)
    for a, b in zip(chain, chain[1:]):
        bump((a[0], b[1]), +1)
    delta = normalize_decoration(
        (set(dm.delta) - set(chain))
        | {(pivot[0], chain[0][1]), (chain[-1][0], pivot[1])}
    )
    tm = TransportMatrix(tuple(tuple(r) for r in rows), dm.matrix.b, dm.matrix.c)
    return DecoratedMatrix.make(tm, delta)


def assert_skips_a_level(dm, target):
    """The relation dm < target holds but is not a cover."""
    assert rk_leq_dec(dm, target) and dm != target
    orbits = enumerate_orbits(dm.matrix.b, dm.matrix.c)
    assert any(
        z != dm
        and z != target
        and rk_leq_dec(dm, z)
        and rk_leq_dec(z, target)
        for z in orbits
    )


class TestMoveEnumeration:
    def test_canonical_order(self):
        for dm in enumerate_orbits((1, 1, 1), (1, 1, 1)):
            moves = applicable_moves(dm)
            assert moves == sorted(moves, key=Move.sort_index)
            assert set(moves) == set(iter_moves(dm))

    def test_smallest_element_moves(self):
        dm = from_permutation((1, 2), (1,))
        assert [str(mv) for mv in applicable_moves(dm)] == [
            "I (2,2)",
            "IIIa (1,1) (2,2)",
            "IIIb (1,1) (2,2)",
        ]

    def test_maximum_has_no_moves(self):
        assert applicable_moves(from_permutation((2, 1), (1, 2))) == []

    def test_every_move_strictly_increases(self):
        for dm in enumerate_orbits((1, 1, 1), (1, 1, 1)):
            for mv in applicable_moves(dm):
                out = apply_move(dm, mv)
                assert rk_leq_dec(dm, out) and out != dm
                assert mv.kind in KIND_ORDER


class TestPreconditions:
    def test_unknown_kind(self):
        dm = from_permutation((1, 2), (1,))
        with pytest.raises(PreconditionFailed, match="unknown move kind"):
            apply_move(dm, Move("VI", ((1, 1),)))

    def test_clause_and_kind_attributes(self):
        dm = from_permutation((1, 2), (1,))
        with pytest.raises(PreconditionFailed) as info:
            apply_move(dm, Move("I", ((1, 1),)))
        assert info.value.kind == "I"
        assert info.value.clause == (
            "(i1,j1) must not lie weakly northwest of a decorated cell"
        )

    def test_decorated_pivot_needs_two_units(self):
        dm = from_permutation((1, 2), (1,))
        with pytest.raises(PreconditionFailed) as info:
            apply_move(dm, Move("II", ((1, 1), (2, 2))))
        assert str(info.value) == "II: a decorated (i0,j0) needs at least two units"

    def test_rectangle_must_be_nondegenerate(self):
        dm = from_permutation((2, 1), (1,))
        with pytest.raises(
            PreconditionFailed, match="i0 < i1 and j0 < j1"
        ):
            apply_move(dm, Move("II", ((1, 2), (2, 1))))

    def test_rectangle_interior_must_be_empty(self):
        tm = TransportMatrix.from_rows([[1, 0, 0], [0, 1, 0], [0, 0, 1]])
        dm = DecoratedMatrix.make(tm, [(1, 1)])
        with pytest.raises(
            PreconditionFailed, match=r"nonzero entry at \(2, 2\)"
        ):
            apply_move(dm, Move("II", ((1, 1), (3, 3))))

    def test_cascade_chain_must_be_consecutive(self):
        dm = from_permutation((3, 4, 2, 1), (2, 3, 4))
        mv = Move("V", ((1, 1), (2, 4), (4, 1)))
        with pytest.raises(PreconditionFailed, match="consecutive run"):
            apply_move(dm, mv)

    def test_result_is_validated(self):
        # Decorating (2,2) supersedes the old (1,1) circle: the
        # decoration stays a staircase, and the result is the cover
        # with the second diagonal cell decorated instead.
        dm = from_permutation((1, 2), (1,))
        out = apply_move(dm, Move("I", ((2, 2),)))
        assert out.delta == ((2, 2),)
        assert out == from_permutation((1, 2), (2,))


# Sources on which a rectangle flip satisfies every local zero-pattern
# and decoration condition yet skips a level: decorating the far corner
# first gives a strictly intermediate orbit, so the flip is rejected.
FLIP_SKIP_CASES = [
    (((1, 0, 0, 0), (0, 0, 0, 1), (0, 0, 1, 0), (0, 1, 0, 0)),
     ((2, 4), (4, 2)), ((1, 1), (3, 3))),
    (((1, 0, 0), (0, 0, 1), (0, 1, 0), (1, 0, 0)),
     ((2, 3), (4, 1)), ((1, 1), (3, 2))),
    (((1, 0, 0), (0, 0, 1), (1, 1, 0)),
     ((2, 3), (3, 1)), ((1, 1), (3, 2))),
    (((1, 0, 0, 1), (0, 0, 1, 0), (0, 1, 0, 0)),
     ((1, 4), (3, 2)), ((1, 1), (2, 3))),
    (((1, 0, 1), (0, 0, 1), (0, 1, 0)),
     ((1, 3), (3, 2)), ((1, 1), (2, 3))),
    (((1, 0, 1), (0, 1, 0), (1, 0, 0)),
     ((1, 3), (3, 1)), ((1, 1), (2, 2))),
    (((1, 1), (0, 1), (1, 0)),
     ((1, 2), (3, 1)), ((1, 1), (2, 2))),
    (((1, 0, 1), (1, 1, 0)),
     ((1, 3), (2, 1)), ((1, 1), (2, 2))),
]

# Sources on which a cascade satisfies every local condition yet skips a
# level: a rectangle flip into a positive cell next to the chain comes
# first, so the cascade is rejected.
CASCADE_SKIP_CASES = [
    (((1, 0, 0), (0, 1, 0), (0, 0, 1), (0, 1, 0)),
     ((3, 3), (4, 2)), (1, 1), ((4, 2),)),
    (((1, 0, 0, 0), (0, 1, 0, 1), (0, 0, 1, 0)),
     ((2, 4), (3, 3)), (1, 1), ((2, 4),)),
    (((1, 0, 0), (0, 1, 1), (0, 1, 0)),
     ((2, 3), (3, 2)), (1, 1), ((2, 3),)),
    (((1, 0, 0), (0, 1, 1), (0, 1, 0)),
     ((2, 3), (3, 2)), (1, 1), ((3, 2),)),
]


class TestMinimalityGuards:
    @pytest.mark.parametrize("rows,delta,rect", FLIP_SKIP_CASES)
    def test_level_skipping_flips_are_rejected(self, rows, delta, rect):
        dm = DecoratedMatrix.make(TransportMatrix.from_rows(rows), delta)
        with pytest.raises(PreconditionFailed) as info:
            apply_move(dm, Move("II", rect))
        assert info.value.clause == (
            "decorating (i1,j1) first gives a strictly intermediate orbit"
        )
        assert_skips_a_level(dm, raw_flip_target(dm, *rect))

    @pytest.mark.parametrize("rows,delta,pivot,chain", CASCADE_SKIP_CASES)
    def test_level_skipping_cascades_are_rejected(self, rows, delta, pivot, chain):
        dm = DecoratedMatrix.make(TransportMatrix.from_rows(rows), delta)
        with pytest.raises(PreconditionFailed) as info:
            apply_move(dm, Move("V", (pivot,) + chain))
        assert info.value.clause == (
            "flipping into (2,2) first gives a strictly intermediate orbit"
        )
        assert_skips_a_level(dm, raw_cascade_target(dm, pivot, chain))


class TestPoset:
    def test_counts(self, poset2, poset3):
        assert (len(poset2.elements), len(poset2.covers)) == (5, 6)
        assert (len(poset3.elements), len(poset3.covers)) == (28, 72)

    def test_cover_kinds_parallel_and_known(self, poset3):
        assert len(poset3.cover_kinds) == len(poset3.covers)
        for kinds in poset3.cover_kinds:
            assert kinds
            assert all(k in KIND_ORDER for k in kinds)

    def test_index_of_round_trips(self, poset3):
        for k, el in enumerate(poset3.elements):
            assert poset3.index_of(el) == k

    def test_covers_match_brute_force_reduction(self, poset3):
        els = poset3.elements
        oracle = transitive_reduction(
            len(els), lambda a, t: a != t and rk_leq_dec(els[a], els[t])
        )
        assert sorted(poset3.covers) == sorted(oracle)

    def test_golden_labels_and_cover_list(self, poset3):
        elements = {
            name: from_permutation(w, rows)
            for name, (w, rows) in GOLDEN_N3_LABELS.items()
        }
        assert len({(x.matrix.m, x.delta) for x in elements.values()}) == 28
        index = {name: poset3.index_of(el) for name, el in elements.items()}
        name_of = {v: k for k, v in index.items()}
        got = {(name_of[a], name_of[t]) for (a, t) in poset3.covers}
        assert got == set(GOLDEN_N3_COVERS)

    def test_transpose_is_an_order_isomorphism(self, poset3):
        def transpose(dm):
            tm = TransportMatrix.from_rows(list(zip(*dm.matrix.m)))
            return DecoratedMatrix.make(tm, [(j, i) for (i, j) in dm.delta])

        covers = {
            (poset3.elements[a], poset3.elements[t]) for (a, t) in poset3.covers
        }
        assert {(transpose(a), transpose(t)) for (a, t) in covers} == covers

    def test_unit_margin_counts_scale(self):
        poset = build_poset((1,) * 5, (1,) * 5, check_reduction=False)
        assert (len(poset.elements), len(poset.covers)) == (1426, 8329)


class TestFindChain:
    def test_golden_two_step_chain(self):
        lo = from_permutation((1, 2), (1,))
        hi = from_permutation((2, 1), (1, 2))
        chain = find_chain(lo, hi)
        assert [str(mv) for mv in chain] == ["I (2,2)", "V (1,1) (2,2)"]

    def test_equal_gives_empty_chain(self):
        dm = from_permutation((1, 2, 3), (2,))
        assert find_chain(dm, dm) == []

    def test_incomparable_gives_none(self):
        x = from_permutation((1, 2, 3), (3,))
        y = from_permutation((3, 2, 1), (1, 2))
        assert find_chain(x, y) is None
        assert find_chain(y, x) is None

    def test_mismatched_margins_raise(self):
        x = from_permutation((1, 2), (1,))
        y = from_permutation((1, 2, 3), (1,))
        with pytest.raises(ShapeMismatch):
            find_chain(x, y)

    def test_every_comparable_pair_gets_a_valid_chain(self, poset3):
        els = poset3.elements
        for x in els:
            for y in els:
                chain = find_chain(x, y)
                if not rk_leq_dec(x, y):
                    assert chain is None
                    continue
                z = x
                for mv in chain:
                    z = apply_move(z, mv)
                assert z == y


class TestEquivalenceReport:
    def test_passes_on_margins_with_multiplicities(self):
        for b, c in (((2, 1), (1, 2)), ((1, 2, 1), (1, 2, 1)), ((2, 2), (1, 2, 1))):
            report = verify_equivalence(b, c)
            assert report.passed, report.counterexamples
            assert report.counterexamples == ()

    def test_report_counts_match_poset(self, poset2):
        report = verify_equivalence((1, 1), (1, 1))
        assert report.element_count == len(poset2.elements)
        assert report.cover_count == len(poset2.covers)
        assert report.order_equivalent
        assert report.moves_are_covers
        assert report.covers_are_moves
        assert report.chains_ok
