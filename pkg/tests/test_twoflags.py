"""Plain transport matrices: rank tables, the rank order, simple moves."""

import pytest

from lineflags import (
    FlagError,
    NotStrictlyLess,
    RankTable,
    TransportMatrix,
    apply_simple_move,
    enumerate_transport_matrices,
    matrix_from_rank_table,
    progress_move,
    rank_table,
    rk_leq,
    simple_moves,
    verify_two_flag_theorem,
)
from helpers import (
    bruhat_covers,
    brute_force_matrices,
    margin_pairs,
    prefix_rank_table,
    transitive_reduction,
)


def perm_matrix(w):
    n = len(w)
    return TransportMatrix.from_rows(
        [[1 if w[i] == j + 1 else 0 for j in range(n)] for i in range(n)]
    )


class TestRankTable:
    def test_golden_small(self):
        tm = TransportMatrix.from_rows([[0, 1], [1, 0]])
        assert rank_table(tm).values == ((0, 0, 0), (0, 0, 1), (0, 1, 2))

    def test_matches_prefix_sums_everywhere(self):
        for b, c in margin_pairs(2, 3):
            for tm in enumerate_transport_matrices(b, c):
                expected = prefix_rank_table(tm.m, tm.q, tm.r)
                assert [list(row) for row in rank_table(tm).values] == expected

    def test_corner_is_total_mass(self):
        tm = TransportMatrix.from_rows([[1, 2], [0, 1]])
        assert rank_table(tm).values[-1][-1] == tm.n


class TestMatrixFromRankTable:
    def test_round_trip_everywhere(self):
        for b, c in margin_pairs(2, 3):
            for tm in enumerate_transport_matrices(b, c):
                assert matrix_from_rank_table(rank_table(tm)) == tm

    def test_rejects_tables_with_no_matrix(self):
        with pytest.raises(FlagError):
            matrix_from_rank_table(RankTable(((0, 0), (0, -1))))


class TestEnumeration:
    def test_matches_brute_force(self):
        for b, c in margin_pairs(2, 3):
            got = {tm.m for tm in enumerate_transport_matrices(b, c)}
            assert got == set(brute_force_matrices(b, c))

    def test_full_flag_count_is_factorial(self):
        assert len(enumerate_transport_matrices((1, 1, 1), (1, 1, 1))) == 6
        assert len(enumerate_transport_matrices((1,) * 4, (1,) * 4)) == 24


class TestRankOrder:
    def test_smaller_means_larger_table(self):
        mats = enumerate_transport_matrices((1, 1, 1), (1, 1, 1))
        for x in mats:
            rx = rank_table(x).values
            for y in mats:
                ry = rank_table(y).values
                expected = all(
                    rx[i][j] >= ry[i][j]
                    for i in range(4)
                    for j in range(4)
                )
                assert rk_leq(x, y) == expected

    def test_identity_is_minimum_reversal_is_maximum(self):
        mats = enumerate_transport_matrices((1, 1, 1), (1, 1, 1))
        lo = perm_matrix((1, 2, 3))
        hi = perm_matrix((3, 2, 1))
        assert all(rk_leq(lo, x) and rk_leq(x, hi) for x in mats)


class TestSimpleMoves:
    def test_moves_strictly_increase(self):
        for b, c in margin_pairs(2, 3):
            for tm in enumerate_transport_matrices(b, c):
                for rect in simple_moves(tm):
                    out = apply_simple_move(tm, rect)
                    assert rk_leq(tm, out) and out != tm

    def test_move_shifts_exactly_four_corners(self):
        tm = perm_matrix((1, 2))
        (rect,) = simple_moves(tm)
        out = apply_simple_move(tm, rect)
        assert out.m == ((0, 1), (1, 0))
        assert (rect.i0, rect.j0, rect.i1, rect.j1) == (1, 1, 2, 2)

    def test_progress_move_walks_to_the_target(self):
        mats = enumerate_transport_matrices((1, 1, 1), (1, 1, 1))
        for x in mats:
            for y in mats:
                if x == y or not rk_leq(x, y):
                    continue
                z, steps = x, 0
                while z != y:
                    rect = progress_move(z, y)
                    z = apply_simple_move(z, rect)
                    assert rk_leq(z, y)
                    steps += 1
                    assert steps <= 16
                assert z == y

    def test_progress_move_rejects_equal_and_incomparable(self):
        lo = perm_matrix((1, 2))
        hi = perm_matrix((2, 1))
        with pytest.raises(NotStrictlyLess):
            progress_move(lo, lo)
        with pytest.raises(NotStrictlyLess):
            progress_move(hi, lo)


class TestTwoFlagTheorem:
    def test_report_on_unit_margins(self):
        report = verify_two_flag_theorem((1, 1, 1), (1, 1, 1))
        assert report.passed
        assert report.element_count == 6
        assert report.cover_count == 8
        assert report.counterexamples == ()

    def test_report_with_multiplicities(self):
        for b, c in (((2, 1), (1, 2)), ((1, 2, 1), (2, 2))):
            report = verify_two_flag_theorem(b, c)
            assert report.passed, report.counterexamples

    def test_unit_margin_covers_match_transposition_oracle(self):
        for n in (2, 3):
            mats = enumerate_transport_matrices((1,) * n, (1,) * n)
            covers = transitive_reduction(
                len(mats), lambda a, t: rk_leq(mats[a], mats[t])
            )
            got = {(mats[a].m, mats[t].m) for a, t in covers}
            expected = {
                (perm_matrix(w).m, perm_matrix(v).m) for w, v in bruhat_covers(n)
            }
            assert got == expected
