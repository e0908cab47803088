"""Restricted digraphs, the parity condition, and the duality identity."""

import itertools

import pytest

from cdindex.alexander import (
    PreconditionFailed,
    alexander_check,
    parity_condition,
    restrict,
    signed_path_sums,
)
from cdindex.ncpoly import IntPoly

from conftest import chain

S_FIG3 = {"1", "13"}
T_FIG3 = {"2", "3", "12", "23"}


def count_rising_paths(g, x, y):
    return sum(1 for p in g.paths(x, y) if g.is_rising(p))


class TestRestrict:
    def test_fig3_g_s(self, graph_b3):
        gs = restrict(graph_b3, S_FIG3).graph
        assert set(gs.vertices) == {"0", "1", "13", "123"}
        got = sorted((e.tail, e.head, "".join(e.label)) for e in gs.edges)
        assert got == [
            ("0", "1", "1"),
            ("1", "123", "23"),
            ("1", "13", "3"),
            ("13", "123", "2"),
        ]

    def test_fig3_g_t(self, graph_b3):
        gt = restrict(graph_b3, T_FIG3).graph
        assert set(gt.vertices) == {"0", "2", "3", "12", "23", "123"}
        got = sorted((e.tail, e.head, "".join(e.label)) for e in gt.edges)
        assert got == [
            ("0", "12", "12"),
            ("0", "2", "2"),
            ("0", "3", "3"),
            ("12", "123", "3"),
            ("2", "12", "1"),
            ("2", "23", "3"),
            ("23", "123", "1"),
            ("3", "123", "12"),
            ("3", "23", "2"),
        ]

    def test_full_interior_gives_back_graph(self, graph_b3):
        interior = set(graph_b3.vertices) - {"0", "123"}
        gs = restrict(graph_b3, interior).graph
        assert set(gs.vertices) == set(graph_b3.vertices)
        assert sorted((e.tail, e.head, e.label) for e in gs.edges) == sorted(
            (e.tail, e.head, (e.label,)) for e in graph_b3.edges
        )

    def test_rejects_endpoints(self, graph_b3):
        with pytest.raises(ValueError):
            restrict(graph_b3, {"0"})
        with pytest.raises(ValueError):
            restrict(graph_b3, {"nope"})

    def test_rising_path_counts_preserved(self, graph_b3):
        interior = sorted(set(graph_b3.vertices) - {"0", "123"})
        for k in range(len(interior) + 1):
            for subset in itertools.combinations(interior, k):
                gs = restrict(graph_b3, subset).graph
                for x in gs.vertices:
                    for y in gs.vertices:
                        if x == y:
                            continue
                        assert count_rising_paths(gs, x, y) == count_rising_paths(
                            graph_b3, x, y
                        )

    def test_falling_polynomials_fig3(self, graph_b3):
        gs = restrict(graph_b3, S_FIG3).graph
        gt = restrict(graph_b3, T_FIG3).graph
        _, f_s = gs.rising_falling("0", "123")
        _, f_t = gt.rising_falling("0", "123")
        assert f_s == IntPoly.zero()
        assert f_t == IntPoly((0, 1, 1))  # falling paths of lengths 2 and 3

    def test_concatenation_bijection(self, graph_b3):
        # falling paths of G_S correspond to base paths with ascents in T
        # and descents in S
        gs = restrict(graph_b3, S_FIG3).graph
        falling_restricted = [
            p for p in gs.paths("0", "123") if gs.is_falling(p)
        ]
        rel = graph_b3.relation.related
        matching_base = []
        for p in graph_b3.paths("0", "123"):
            asc = {e.head for e, f in zip(p, p[1:]) if rel(e.label, f.label)}
            des = {e.head for e, f in zip(p, p[1:]) if not rel(e.label, f.label)}
            if asc <= T_FIG3 and des <= S_FIG3:
                matching_base.append(p)
        assert len(falling_restricted) == len(matching_base)


class TestParity:
    def test_b3(self, graph_b3):
        assert parity_condition(graph_b3) == (True, 3)

    def test_fig1_left(self, graph_fig1_left):
        result = parity_condition(graph_fig1_left)
        assert not result.uniform
        assert result.longest == 2

    def test_single_edge(self):
        assert parity_condition(chain(["1"])) == (True, 1)


class TestAlexanderCheck:
    def test_fig3_partition(self, graph_b3):
        result = alexander_check(graph_b3, S_FIG3)
        assert result == (0, 0, True)

    def test_empty_subset(self, graph_b3):
        result = alexander_check(graph_b3, set())
        assert result.equal
        # empty-side restriction collapses to the alternating sums on g itself
        rel = graph_b3.relation.related
        rising = sum(
            (-1) ** len(p)
            for p in graph_b3.paths("0", "123")
            if graph_b3.is_rising(p)
        )
        falling = sum(
            (-1) ** len(p)
            for p in graph_b3.paths("0", "123")
            if graph_b3.is_falling(p)
        )
        assert rising == falling

    def test_all_bipartitions_of_b3(self, graph_b3):
        interior = sorted(set(graph_b3.vertices) - {"0", "123"})
        for k in range(len(interior) + 1):
            for subset in itertools.combinations(interior, k):
                result = alexander_check(graph_b3, subset)
                assert result.equal, (subset, result)

    def test_other_parity_fixtures(self, graph_fig1_right, graph_fig2_i, graph_fig2_ii):
        # the second figure-1 graph: singletons plus a seeded subset sample
        import random

        g = graph_fig1_right
        interior = sorted(set(g.vertices) - {"0", "1"})
        subsets = [frozenset()] + [frozenset({v}) for v in interior]
        rng = random.Random(5)
        for _ in range(40):
            k = rng.randint(2, len(interior))
            subsets.append(frozenset(rng.sample(interior, k)))
        for subset in subsets:
            assert alexander_check(g, subset).equal, subset
        # the stem-diamond graph under both relations has a 2-vertex interior
        for h in (graph_fig2_i, graph_fig2_ii):
            for subset in ([], ["x"], ["y"], ["x", "y"]):
                assert alexander_check(h, subset).equal, subset

    def test_unbalanced_rejected(self):
        with pytest.raises(PreconditionFailed, match="balanced"):
            alexander_check(chain(["2", "1"]), set())

    def test_parity_violation_rejected(self, graph_fig1_left):
        with pytest.raises(PreconditionFailed, match="parity"):
            alexander_check(graph_fig1_left, set())


class TestSignedPathSums:
    def test_empty_subset_counts_rising_and_falling(self, graph_b3):
        first, second = signed_path_sums(graph_b3, set())
        rising = sum(1 for p in graph_b3.paths("0", "123") if graph_b3.is_rising(p))
        falling = sum(1 for p in graph_b3.paths("0", "123") if graph_b3.is_falling(p))
        assert first == rising == 1
        assert second == falling == 1

    def test_full_interior(self, graph_b3):
        # T empty: the sums become the alternating rising/falling sums
        interior = set(graph_b3.vertices) - {"0", "123"}
        first, second = signed_path_sums(graph_b3, interior)
        rising_alt = sum(
            (-1) ** (len(p) - 1)
            for p in graph_b3.paths("0", "123")
            if graph_b3.is_rising(p)
        )
        falling_alt = sum(
            (-1) ** (len(p) - 1)
            for p in graph_b3.paths("0", "123")
            if graph_b3.is_falling(p)
        )
        assert second == rising_alt
        assert first == falling_alt
        assert first == second

    def test_fig3_subset_agreement(self, graph_b3):
        first, second = signed_path_sums(graph_b3, S_FIG3)
        assert first == second

    def test_all_subsets_agree(self, graph_b3, graph_fig1_left, graph_fig1_right):
        for g in (graph_b3, graph_fig1_left, graph_fig1_right):
            interior = sorted(
                set(g.vertices) - {g.zero_hat(), g.one_hat()}
            )
            for k in range(len(interior) + 1):
                for subset in itertools.combinations(interior, k):
                    first, second = signed_path_sums(g, subset)
                    assert first == second, (g, subset)
