"""Graph loading, interval structure, DP-computed indexes and balance."""

import pytest

from cdindex.digraph import (
    CycleDetected,
    DanglingVertex,
    LabeledDigraph,
    LinearRelation,
    NoPath,
    PairsRelation,
    Unbounded,
    UnknownLabel,
    cartesian_product,
    dual,
    from_json_dict,
    stanley_product,
    to_json_dict,
)
from cdindex.ncpoly import (
    AbPoly,
    CdPoly,
    IntPoly,
    TensorPoly,
    ab_to_cd,
    coproduct,
    parse_ab,
    parse_cd,
    star,
)

from conftest import brute_force_ab_index, chain


class TestLoadAndValidate:
    def test_fig1_left_shape(self, graph_fig1_left):
        assert len(graph_fig1_left.vertices) == 6
        assert len(graph_fig1_left.edges) == 11

    def test_self_loop_rejected(self):
        with pytest.raises(CycleDetected):
            LabeledDigraph(["x"], [("x", "x", "1")], LinearRelation(["1"]))

    def test_cycle_witness(self):
        with pytest.raises(CycleDetected) as exc:
            LabeledDigraph(
                ["x", "y", "z"],
                [("x", "y", "1"), ("y", "z", "1"), ("z", "x", "1")],
                LinearRelation(["1"]),
            )
        cyc = exc.value.cycle
        assert cyc[0] == cyc[-1] and len(set(cyc)) == 3

    def test_parallel_edges(self):
        g = LabeledDigraph(
            ["x", "y"], [("x", "y", "1"), ("x", "y", "1")], LinearRelation(["1"])
        )
        assert len(g.edges) == 2
        assert g.ab_index("x", "y") == AbPoly({"": 2})

    def test_dangling(self):
        with pytest.raises(DanglingVertex):
            LabeledDigraph(["x"], [("x", "y", "1")], LinearRelation(["1"]))

    def test_unknown_label_linear(self):
        with pytest.raises(UnknownLabel):
            LabeledDigraph(["x", "y"], [("x", "y", "9")], LinearRelation(["1"]))

    def test_unknown_label_in_pairs_json(self):
        data = {
            "vertices": ["x", "y"],
            "edges": [{"tail": "x", "head": "y", "label": "1"}],
            "relation": {"mode": "pairs", "pairs": [["1", "7"]]},
        }
        with pytest.raises(UnknownLabel):
            from_json_dict(data)

    def test_json_roundtrip(self, graph_b3):
        again = from_json_dict(to_json_dict(graph_b3))
        assert again.vertices == graph_b3.vertices
        assert [(e.tail, e.head, e.label) for e in again.edges] == [
            (e.tail, e.head, e.label) for e in graph_b3.edges
        ]
        assert again.relation.to_json() == graph_b3.relation.to_json()


class TestInterval:
    def test_whole_graph(self, graph_fig1_left):
        sub = graph_fig1_left.interval("0", "1")
        assert set(sub.vertices) == set(graph_fig1_left.vertices)
        assert len(sub.edges) == 11

    def test_single_vertex(self, graph_b3):
        sub = graph_b3.interval("2", "2")
        assert sub.vertices == ("2",)
        assert sub.edges == ()

    def test_unreachable_pair_is_empty(self, graph_b3):
        # the two restricted-graph vertices 13 and 1 satisfy 13 </= 1
        sub = graph_b3.interval("13", "1")
        assert sub.vertices == ()

    def test_incomparable_interior(self, graph_b3):
        sub = graph_b3.interval("1", "23")
        assert sub.vertices == ()

    def test_proper_interval(self, graph_b3):
        sub = graph_b3.interval("1", "123")
        assert set(sub.vertices) == {"1", "12", "13", "123"}
        assert len(sub.edges) == 4


class TestDescentWord:
    def test_single_edge(self, graph_fig1_left):
        (path,) = [p for p in graph_fig1_left.paths("0", "1") if len(p) == 1 and p[0].label == "3"]
        assert graph_fig1_left.descent_word(path) == ""

    def test_classical_chain(self, graph_b3):
        path = next(
            p
            for p in graph_b3.paths("0", "123")
            if [e.head for e in p] == ["1", "12", "123"]
        )
        assert [e.label for e in path] == ["1", "2", "3"]
        assert graph_b3.descent_word(path) == "aa"

    def test_descent(self):
        g = chain(["2", "1"])
        (path,) = g.paths("v0", "v2")
        assert g.descent_word(path) == "b"


class TestAbIndex:
    def test_fig1_left(self, graph_fig1_left):
        assert graph_fig1_left.ab_index("0", "1") == parse_ab("2*a + 2*b + 3")

    def test_fig1_right(self, graph_fig1_right):
        assert graph_fig1_right.ab_index("0", "1") == parse_ab("5*ab + 5*ba")

    def test_single_edge(self):
        g = chain(["1"])
        assert g.ab_index("v0", "v1") == AbPoly.one()

    def test_no_path(self, graph_b3):
        with pytest.raises(NoPath):
            graph_b3.ab_index("123", "0")

    def test_same_vertex_empty_sum(self, graph_b3):
        assert graph_b3.ab_index("1", "1").is_zero()

    def test_matches_brute_force_on_fixtures(self, all_fixture_graphs):
        for g in all_fixture_graphs.values():
            for x in g.vertices:
                for y in g.vertices:
                    if x != y and g.leq(x, y):
                        assert g.ab_index(x, y) == brute_force_ab_index(g, x, y)


class TestRisingFalling:
    def test_fig1_left(self, graph_fig1_left):
        r, f = graph_fig1_left.rising_falling("0", "1")
        assert r == IntPoly((3, 2))
        assert f == IntPoly((3, 2))

    def test_specialization_cross_check(self, all_fixture_graphs):
        # rising counts are the pure-a coefficients of the ab-index, falling the pure-b
        for g in all_fixture_graphs.values():
            for x in g.vertices:
                for y in g.vertices:
                    if x == y or not g.leq(x, y):
                        continue
                    psi = g.ab_index(x, y)
                    r, f = g.rising_falling(x, y)
                    assert r == IntPoly(
                        [psi.coefficient("a" * k) for k in range(psi.degree() + 1)]
                    )
                    assert f == IntPoly(
                        [psi.coefficient("b" * k) for k in range(psi.degree() + 1)]
                    )

    def test_capital_versions(self, graph_fig1_left):
        R, F = graph_fig1_left.capital_rising_falling("0", "1")
        assert R == IntPoly((0, 3, 2))
        assert F == IntPoly((0, 3, 2))
        assert graph_fig1_left.capital_rising_falling("0", "0") == (
            IntPoly.one(),
            IntPoly.one(),
        )

    def test_single_edge_capitals(self):
        g = chain(["1"])
        assert g.capital_rising_falling("v0", "v1") == (IntPoly.q(), IntPoly.q())


class TestBalance:
    def test_fig1_graphs(self, graph_fig1_left, graph_fig1_right):
        rep = graph_fig1_left.is_balanced()
        assert rep.balanced and rep.cd_index == parse_cd("2*c + 3")
        rep = graph_fig1_right.is_balanced()
        assert rep.balanced and rep.cd_index == parse_cd("5*d")

    def test_fig2_both_relations(self, graph_fig2_i, graph_fig2_ii):
        rep_i = graph_fig2_i.is_balanced()
        assert rep_i.balanced and rep_i.cd_index == parse_cd("d")
        rep_ii = graph_fig2_ii.is_balanced()
        assert rep_ii.balanced and rep_ii.cd_index == parse_cd("cc - d")

    def test_unbalanced_chain_witness(self):
        g = chain(["2", "1"])
        rep = g.is_balanced()
        assert not rep.balanced
        assert rep.witness == ("v0", "v2", 2, 0, 1)
        assert rep.cd_index is None

    def test_b3_balanced(self, graph_b3):
        rep = graph_b3.is_balanced()
        assert rep.balanced
        # one rising and one falling chain in a boolean lattice labeling
        r, f = graph_b3.rising_falling("0", "123")
        assert r == f == IntPoly((0, 0, 1))

    def test_equivalence_report(self, graph_fig1_left):
        rep = graph_fig1_left.check_balance_equivalence()
        assert rep.per_length and rep.even_length and rep.cd_span

    def test_equivalence_unbalanced(self):
        rep = chain(["2", "1"]).check_balance_equivalence()
        assert not rep.per_length and not rep.even_length and not rep.cd_span


class TestCoalgebraHomomorphism:
    def test_all_fixture_intervals(self, all_fixture_graphs):
        for g in all_fixture_graphs.values():
            for x in g.vertices:
                for y in g.vertices:
                    if x == y or not g.leq(x, y):
                        continue
                    lhs = coproduct(g.ab_index(x, y))
                    rhs = TensorPoly.zero()
                    for z in g.vertices:
                        if z != x and z != y and g.leq(x, z) and g.leq(z, y):
                            rhs = rhs + TensorPoly.tensor(
                                g.ab_index(x, z), g.ab_index(z, y)
                            )
                    assert lhs == rhs


class TestStanleyProduct:
    def test_single_edges(self):
        g = stanley_product(chain(["1"]), chain(["1"]))
        assert len(g.vertices) == 2
        assert len(g.edges) == 1
        assert g.ab_index(g.zero_hat(), g.one_hat()) == AbPoly.one()

    def test_identity_factor(self, graph_fig1_left):
        g = stanley_product(graph_fig1_left, chain(["1"]))
        psi = g.ab_index(g.zero_hat(), g.one_hat())
        assert psi == graph_fig1_left.ab_index("0", "1")

    def test_fig1_pair(self, graph_fig1_left, graph_fig1_right):
        g = stanley_product(graph_fig1_left, graph_fig1_right)
        psi = g.ab_index(g.zero_hat(), g.one_hat())
        expected = graph_fig1_left.ab_index("0", "1") * graph_fig1_right.ab_index(
            "0", "1"
        )
        assert psi == expected
        assert psi == brute_force_ab_index(g, g.zero_hat(), g.one_hat())

    def test_multiplicative_on_fixture_pairs(self, all_fixture_graphs):
        graphs = list(all_fixture_graphs.values())
        for g in graphs:
            for h in graphs:
                prod = stanley_product(g, h)
                assert prod.ab_index(prod.zero_hat(), prod.one_hat()) == g.ab_index(
                    g.zero_hat(), g.one_hat()
                ) * h.ab_index(h.zero_hat(), h.one_hat())

    def test_requires_bounded(self, graph_fig1_left):
        g = LabeledDigraph(
            ["x", "y", "z"],
            [("x", "z", "1"), ("y", "z", "1")],
            LinearRelation(["1"]),
        )
        with pytest.raises(Unbounded):
            stanley_product(g, graph_fig1_left)

    def test_requires_nontrivial(self, graph_fig1_left):
        point = LabeledDigraph(["x"], [], LinearRelation([]))
        with pytest.raises(Unbounded):
            stanley_product(point, graph_fig1_left)


class TestCartesianProduct:
    def test_capital_r_multiplicative(self, graph_fig1_left, graph_b3):
        g, h = graph_fig1_left, graph_b3
        prod = cartesian_product(g, h)
        for (x, z) in [("0", "0"), ("0", "1")]:
            for (y, w) in [("1", "123"), ("m1", "123")]:
                Rg, Fg = g.capital_rising_falling(x, y)
                Rh, Fh = h.capital_rising_falling(z, w)
                Rp, Fp = prod.capital_rising_falling((x, z), (y, w))
                assert Rp == Rg * Rh
                assert Fp == Fg * Fh

    def test_one_vertex_factor_isomorphic(self, graph_fig1_left):
        point = LabeledDigraph(["pt"], [], LinearRelation([]))
        prod = cartesian_product(graph_fig1_left, point)
        assert sorted(prod.vertices) == sorted(
            (v, "pt") for v in graph_fig1_left.vertices
        )
        stripped = sorted(
            (e.tail[0], e.head[0], e.label[1]) for e in prod.edges
        )
        assert stripped == sorted(
            (e.tail, e.head, e.label) for e in graph_fig1_left.edges
        )

    def test_acyclic_and_balanced_product(self, graph_fig2_i):
        prod = cartesian_product(graph_fig2_i, graph_fig2_i)
        assert prod.is_balanced().balanced


class TestDual:
    def test_involution(self, graph_fig1_left):
        g = dual(dual(graph_fig1_left))
        assert set(g.vertices) == set(graph_fig1_left.vertices)
        assert sorted((e.tail, e.head, e.label) for e in g.edges) == sorted(
            (e.tail, e.head, e.label) for e in graph_fig1_left.edges
        )

    def test_fig1_star(self, graph_fig1_left):
        g = dual(graph_fig1_left)
        psi = graph_fig1_left.ab_index("0", "1")
        assert g.ab_index("1", "0") == star(psi)

    def test_star_on_all_fixture_intervals(self, all_fixture_graphs):
        for g in all_fixture_graphs.values():
            gd = dual(g)
            for x in g.vertices:
                for y in g.vertices:
                    if x != y and g.leq(x, y):
                        assert gd.ab_index(y, x) == star(g.ab_index(x, y))

    def test_two_edge_chain(self):
        g = chain(["1", "2"])
        assert g.ab_index("v0", "v2") == AbPoly.monomial("a")
        gd = dual(g)
        # reversing both the arrows and the order relation preserves ascents
        assert gd.ab_index("v2", "v0") == AbPoly.monomial("a")


class TestDpOracle:
    def test_dp_equals_brute_force_small_random(self, rng):
        from cdindex.construct import random_labeled_dag

        for _ in range(60):
            g = random_labeled_dag(rng, max_vertices=9)
            x, y = g.zero_hat(), g.one_hat()
            assert g.ab_index(x, y) == brute_force_ab_index(g, x, y)

    def test_equivalence_on_random_graphs(self, rng):
        from cdindex.construct import random_labeled_dag

        verdicts = set()
        for _ in range(50):
            g = random_labeled_dag(rng, max_vertices=8)
            rep = g.check_balance_equivalence()
            verdicts.add(rep.verdict)
            assert rep.per_length == rep.even_length == rep.cd_span
        assert verdicts  # at least evaluated
