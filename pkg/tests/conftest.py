"""Shared fixtures and independent oracles for the test suite."""

import random

import pytest

from cdindex.digraph import LabeledDigraph, LinearRelation
from cdindex.fixtures import (
    fig1_left,
    fig1_right,
    fig2_relation_i,
    fig2_relation_ii,
    fig3_b3,
)
from cdindex.ncpoly import AbPoly


def brute_force_ab_index(graph, x, y) -> AbPoly:
    """Oracle: sum descent words over explicitly enumerated paths."""
    total = AbPoly.zero()
    for path in graph.paths(x, y):
        total = total + AbPoly.monomial(graph.descent_word(path))
    return total


def chain(labels, order=None) -> LabeledDigraph:
    """A path graph v0 -> v1 -> ... with the given edge labels."""
    n = len(labels)
    vertices = [f"v{i}" for i in range(n + 1)]
    edges = [(f"v{i}", f"v{i+1}", lab) for i, lab in enumerate(labels)]
    if order is None:
        order = sorted(set(labels))
    return LabeledDigraph(vertices, edges, LinearRelation(order))


@pytest.fixture
def graph_fig1_left():
    return fig1_left()


@pytest.fixture
def graph_fig1_right():
    return fig1_right()


@pytest.fixture
def graph_fig2_i():
    return fig2_relation_i()


@pytest.fixture
def graph_fig2_ii():
    return fig2_relation_ii()


@pytest.fixture
def graph_b3():
    return fig3_b3()


@pytest.fixture
def all_fixture_graphs(
    graph_fig1_left, graph_fig1_right, graph_fig2_i, graph_fig2_ii, graph_b3
):
    return {
        "fig1_left": graph_fig1_left,
        "fig1_right": graph_fig1_right,
        "fig2_relation_i": graph_fig2_i,
        "fig2_relation_ii": graph_fig2_ii,
        "fig3_b3": graph_b3,
    }


@pytest.fixture
def rng():
    return random.Random(20240811)
