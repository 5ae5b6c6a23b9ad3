import pytest

from strquiv import (
    Arrow,
    BoundQuiver,
    ForbiddenCycle,
    NotForbiddenCycle,
    forbidden_cycles,
    is_perfect,
    left_forbidden_arrows,
    perfect_index,
)


class TestLeftForbidden:
    def test_fig5_all_arrows(self, fig5):
        assert left_forbidden_arrows(fig5) == {a.id for a in fig5.arrows}

    def test_no_relations_empty(self):
        bq = BoundQuiver.build(["1", "2"], [Arrow("a", "1", "2")])
        assert left_forbidden_arrows(bq) == set()

    def test_fig1_contains_a(self, fig1):
        assert "a" in left_forbidden_arrows(fig1)

    def test_final_arrow_of_long_relation_not_member(self):
        bq = BoundQuiver.build(
            ["1", "2", "3", "4"],
            [Arrow("a", "1", "2"), Arrow("b", "2", "3"), Arrow("c", "3", "4")],
            [("a", "b", "c")],
        )
        # abc in I does not put any length-2 product in I
        assert left_forbidden_arrows(bq) == set()


class TestForbiddenCycles:
    def test_fig5(self, fig5):
        assert [c.arrows for c in forbidden_cycles(fig5)] == [
            ("a", "b", "c"),
            ("a'", "b'", "c'"),
        ]

    def test_fig1(self, fig1):
        assert [c.arrows for c in forbidden_cycles(fig1)] == [
            ("a", "b", "c"),
            ("a'", "b'", "c'"),
        ]

    def test_no_relations_no_cycles(self):
        bq = BoundQuiver.build(
            ["1", "2"], [Arrow("a", "1", "2"), Arrow("b", "2", "1")]
        )
        assert forbidden_cycles(bq) == []

    def test_chordal_relation_cycle_excluded(self, fig5):
        # d d' e e' f f' has all consecutive products in the ideal and
        # distinct vertices, but arrow a joins the nonconsecutive cycle
        # vertices 1 and 2, so it is not a cycle on its six vertices.
        candidate = ForbiddenCycle(("d", "d'", "e", "e'", "f", "f'"))
        with pytest.raises(NotForbiddenCycle):
            is_perfect(fig5, candidate)


class TestIsPerfect:
    def test_fig5_abc_perfect(self, fig5):
        abc, apbpcp = forbidden_cycles(fig5)
        assert is_perfect(fig5, abc)
        # witness: d' ends at 5 and d'b' lies in the ideal
        assert not is_perfect(fig5, apbpcp)

    def test_rotation_invariant(self, fig5):
        assert is_perfect(fig5, ForbiddenCycle(("b", "c", "a")))
        assert not is_perfect(fig5, ForbiddenCycle(("b'", "c'", "a'")))

    def test_isolated_cycle_vacuously_perfect(self):
        bq = BoundQuiver.build(
            ["1", "2"],
            [Arrow("a", "1", "2"), Arrow("b", "2", "1")],
            [("a", "b"), ("b", "a")],
        )
        (cycle,) = forbidden_cycles(bq)
        assert is_perfect(bq, cycle)

    def test_not_a_forbidden_cycle_rejected(self, fig5):
        with pytest.raises(NotForbiddenCycle):
            is_perfect(fig5, ForbiddenCycle(("a", "e'")))


class TestPerfectIndex:
    def test_fig5(self, fig5):
        idx = perfect_index(fig5)
        assert idx.arrows == frozenset({"a", "b", "c"})
        assert [c.arrows for c in idx.cycles] == [("a", "b", "c")]

    def test_no_relations(self):
        bq = BoundQuiver.build(["1", "2"], [Arrow("a", "1", "2")])
        assert perfect_index(bq).arrows == frozenset()

    def test_subset_of_left_forbidden(self, fig1, fig5):
        for bq in (fig1, fig5):
            assert perfect_index(bq).arrows <= left_forbidden_arrows(bq)

    def test_cycle_arrows_left_forbidden(self, fig5):
        lf = left_forbidden_arrows(fig5)
        for cycle in forbidden_cycles(fig5):
            assert set(cycle.arrows) <= lf
