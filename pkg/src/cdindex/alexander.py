"""Restricted digraphs and Alexander duality for balanced digraphs.

Given a bounded labeled digraph and a subset S of its interior vertices,
the restricted digraph G_S keeps the vertices S together with the source
and sink, and has one edge for every rising path of the base graph that
starts and ends inside that vertex set without touching S in between.
Such an edge is labeled by the whole sequence of base labels it traverses,
and two sequence labels are related exactly when the last label of the
first relates to the first label of the second.

For a balanced graph in which every source-to-sink path length has the
same parity, the falling paths of G_S and of the complementary restriction
G_T satisfy a duality: evaluating each falling-path generating polynomial
at -1 gives values that agree up to the sign (-1)^(longest length - 1).
The module checks this identity and also evaluates the underlying signed
path sums directly on the base graph.
"""

from __future__ import annotations

from typing import Hashable, Iterable, NamedTuple

from .digraph import LabeledDigraph, NoPath, PairsRelation
from .ncpoly import IntPoly

__all__ = [
    "AlexanderResult",
    "ParityResult",
    "PreconditionFailed",
    "RestrictedDigraph",
    "alexander_check",
    "parity_condition",
    "restrict",
    "signed_path_sums",
]

SignedPathSum = int


class PreconditionFailed(ValueError):
    """A hypothesis of the duality statement does not hold; names which one."""


class ParityResult(NamedTuple):
    uniform: bool
    longest: int


class AlexanderResult(NamedTuple):
    lhs: int
    rhs: int
    equal: bool


class RestrictedDigraph:
    """The digraph G_S: kept vertices joined by maximal rising segments."""

    def __init__(self, base: LabeledDigraph, kept: frozenset, graph: LabeledDigraph):
        self.base = base
        self.kept = kept
        self.graph = graph

    def falling_at_minus_one(self) -> int:
        """Falling-path generating polynomial of [source, sink], evaluated at -1.

        Source and sink are the base graph's; the restriction may leave some
        kept vertex without rising in- or out-segments, so the restricted
        graph itself need not be bounded and may even disconnect the two
        (an empty falling sum then evaluates to zero).
        """
        bot, top = self.base.zero_hat(), self.base.one_hat()
        try:
            _, f = self.graph.rising_falling(bot, top)
        except NoPath:
            f = IntPoly.zero()
        return f(-1)

    def __repr__(self):
        return f"RestrictedDigraph(kept={sorted(map(str, self.kept))}, {self.graph!r})"


def _interior(g: LabeledDigraph) -> frozenset:
    return frozenset(g.vertices) - {g.zero_hat(), g.one_hat()}


def restrict(g: LabeledDigraph, subset: Iterable[Hashable]) -> RestrictedDigraph:
    """Build G_S for S a set of interior vertices of a bounded graph.

    One edge is created per rising base path that starts and ends in
    S + {source, sink} and whose interior vertices all avoid S; its label
    is the tuple of base labels along the path.  Rising-path counts
    between kept vertices are preserved by construction.
    """
    bot, top = g.zero_hat(), g.one_hat()
    subset = frozenset(subset)
    unknown = subset - set(g.vertices)
    if unknown:
        raise ValueError(f"subset contains unknown vertices: {sorted(map(str, unknown))}")
    if bot in subset or top in subset:
        raise ValueError("subset must avoid the source and the sink")
    members = subset | {bot, top}
    rel = g.relation.related

    edges = []

    def grow(start, v, labels):
        for e in g.out_edges(v):
            if labels and not rel(labels[-1], e.label):
                continue
            extended = labels + [e.label]
            if e.head in members:
                edges.append((start, e.head, tuple(extended)))
            else:
                grow(start, e.head, extended)

    order = [v for v in g.topological_order if v in members]
    for v in order:
        grow(v, v, [])

    labels = {lab for _, _, lab in edges}
    pairs = [
        (l, m) for l in labels for m in labels if rel(l[-1], m[0])
    ]
    graph = LabeledDigraph(order, edges, PairsRelation(pairs))
    return RestrictedDigraph(g, subset, graph)


def parity_condition(g: LabeledDigraph) -> ParityResult:
    """Whether all source-to-sink path lengths agree mod 2, plus the longest one."""
    bot, top = g.zero_hat(), g.one_hat()
    parities: dict[Hashable, set[int]] = {v: set() for v in g.vertices}
    longest: dict[Hashable, int] = {v: -1 for v in g.vertices}
    parities[bot] = {0}
    longest[bot] = 0
    for v in g.topological_order:
        if not parities[v]:
            continue
        for e in g.out_edges(v):
            parities[e.head] |= {(p + 1) % 2 for p in parities[v]}
            longest[e.head] = max(longest[e.head], longest[v] + 1)
    return ParityResult(uniform=len(parities[top]) <= 1, longest=max(longest[top], 0))


def alexander_check(g: LabeledDigraph, subset: Iterable[Hashable]) -> AlexanderResult:
    """Evaluate both sides of the duality identity for the split S, T.

    Requires g bounded, balanced, and satisfying the parity condition;
    raises PreconditionFailed naming the first violated hypothesis.  The
    left side is the falling count of G_S at -1; the right side is the
    falling count of G_T at -1 times (-1)^(longest length - 1) where T is
    the complementary interior subset.
    """
    if not g.is_bounded():
        raise PreconditionFailed("bounded: the graph must have a unique source and sink")
    subset = frozenset(subset)
    if not g.is_balanced().balanced:
        raise PreconditionFailed("balanced: some interval has unequal rising/falling counts")
    parity = parity_condition(g)
    if not parity.uniform:
        raise PreconditionFailed("parity: source-to-sink path lengths have mixed parity")
    complement = _interior(g) - subset
    lhs = restrict(g, subset).falling_at_minus_one()
    rhs = (-1) ** (parity.longest - 1) * restrict(g, complement).falling_at_minus_one()
    return AlexanderResult(lhs=lhs, rhs=rhs, equal=lhs == rhs)


def signed_path_sums(g: LabeledDigraph, subset: Iterable[Hashable]) -> tuple[int, int]:
    """The two signed path sums attached to an interior split S, T.

    The first sum runs over source-to-sink paths whose ascent vertices lie
    in T and descent vertices in S, the second over paths with the roles of
    S and T exchanged; both weight a path by (-1)^(number of interior
    vertices in S).  The two agree whenever every interval of g has equally
    many rising and falling paths (no per-length matching is needed).

    Paths are enumerated explicitly since the weight depends on the global
    ascent/descent pattern.
    """
    bot, top = g.zero_hat(), g.one_hat()
    subset = frozenset(subset)
    tee = _interior(g) - subset
    rel = g.relation.related
    first = 0
    second = 0
    for path in g.paths(bot, top):
        asc = set()
        des = set()
        for e, f in zip(path, path[1:]):
            (asc if rel(e.label, f.label) else des).add(e.head)
        sign = (-1) ** len({e.head for e in path[:-1]} & subset)
        if asc <= tee and des <= subset:
            first += sign
        if asc <= subset and des <= tee:
            second += sign
    return first, second
