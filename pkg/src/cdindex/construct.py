"""Realize nonnegative cd-polynomials as balanced, linearly labeled digraphs.

Butterfly graphs (two vertices per interior rank, every cover edge present,
labels inherited from a dihedral reflection ordering) realize the powers of
c.  Two constructions combine them:

* the d-join hangs one graph above another through two parallel edges
  labeled by a fresh global minimum and a fresh global maximum, which
  multiplies the cd-indexes with a d in between;
* the glue sum identifies the sources and the sinks of two graphs, which
  adds the cd-indexes.

Any nonzero cd-polynomial with nonnegative coefficients is realized by
joining butterflies along each monomial and gluing the monomial graphs
(with multiplicity) together.  All emitted graphs carry a linear label
relation and are balanced.

The module also houses the randomized search harness looking for a
balanced, linearly labeled, bounded digraph whose cd-index has a negative
coefficient.  No such graph is expected; any candidate is re-verified by
brute-force path enumeration before being reported, and reports are
reproducible from their seed.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .coxeter import dihedral_bruhat_graph, dihedral_graph
from .digraph import (
    LabeledDigraph,
    LinearRelation,
    Unbounded,
    to_json_dict,
)
from .ncpoly import AbPoly, CdPoly, ab_to_cd, cd_sort_key

__all__ = [
    "Counterexample",
    "NegativeCoefficient",
    "SearchReport",
    "ZeroPolynomial",
    "butterfly",
    "conjecture_search",
    "d_join",
    "glue_sum",
    "random_labeled_dag",
    "realize",
]


class ZeroPolynomial(ValueError):
    pass


class NegativeCoefficient(ValueError):
    pass


def _normalize(vertices, edges, order) -> LabeledDigraph:
    """Rename vertices to v0, v1, ... and labels to L0, L1, ... (order kept)."""
    label_names = {label: f"L{i}" for i, label in enumerate(order)}
    staged = LabeledDigraph(vertices, edges, LinearRelation(order))
    vertex_names = {v: f"v{i}" for i, v in enumerate(staged.topological_order)}
    return LabeledDigraph(
        [vertex_names[v] for v in staged.topological_order],
        [
            (vertex_names[e.tail], vertex_names[e.head], label_names[e.label])
            for e in staged.edges
        ],
        LinearRelation([label_names[label] for label in order]),
    )


def _require_joinable(g: LabeledDigraph, side: str) -> None:
    if not isinstance(g.relation, LinearRelation):
        raise ValueError(f"{side} graph must carry a linear label relation")
    if not g.is_bounded() or g.zero_hat() == g.one_hat():
        raise Unbounded(f"{side} graph must be bounded with source != sink")
    if not g.is_balanced().balanced:
        raise ValueError(f"{side} graph must be balanced")


def butterfly(k: int) -> LabeledDigraph:
    """The bounded rank-(k + 1) butterfly with a balanced linear labeling.

    Two vertices per interior rank, all cover edges present; the labeling
    comes from a dihedral reflection ordering, so the cd-index is c^k.
    k = 0 gives a single edge.
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    m = k + 2
    bg = dihedral_bruhat_graph(m)
    top = dihedral_graph(m, k + 1).one_hat()
    cover = bg.cover_interval(bg.identity, top)
    used = sorted({e.label for e in cover.edges})
    return _normalize(
        cover.vertices,
        [(e.tail, e.head, e.label) for e in cover.edges],
        used,
    )


def d_join(g1: LabeledDigraph, g2: LabeledDigraph) -> LabeledDigraph:
    """Join two balanced linear graphs through a fresh minimum/maximum edge pair.

    The sink of the first graph is wired to the source of the second by two
    parallel edges; one carries a label below everything, the other a label
    above everything, so exactly one of the two crossings descends on each
    side.  The cd-index multiplies with a d between the factors.
    """
    _require_joinable(g1, "left")
    _require_joinable(g2, "right")
    vertices = [("1", v) for v in g1.vertices] + [("2", v) for v in g2.vertices]
    lo, hi = ("lo",), ("hi",)
    edges = [(("1", e.tail), ("1", e.head), ("1", e.label)) for e in g1.edges]
    edges += [(("2", e.tail), ("2", e.head), ("2", e.label)) for e in g2.edges]
    junction_tail, junction_head = ("1", g1.one_hat()), ("2", g2.zero_hat())
    edges.append((junction_tail, junction_head, lo))
    edges.append((junction_tail, junction_head, hi))
    order = (
        [lo]
        + [("1", label) for label in g1.relation.order]
        + [("2", label) for label in g2.relation.order]
        + [hi]
    )
    return _normalize(vertices, edges, order)


def glue_sum(g1: LabeledDigraph, g2: LabeledDigraph) -> LabeledDigraph:
    """Identify the sources and the sinks of two balanced linear graphs.

    Label sets are kept disjoint and concatenated into one linear order
    (any interleaving preserves within-graph comparisons, so the simplest
    deterministic one is used).  The cd-index adds.
    """
    _require_joinable(g1, "left")
    _require_joinable(g2, "right")
    bot, top = ("bot",), ("top",)

    def place(tag, g, v):
        if v == g.zero_hat():
            return bot
        if v == g.one_hat():
            return top
        return (tag, v)

    vertices = [bot]
    vertices += [("1", v) for v in g1.vertices if v not in (g1.zero_hat(), g1.one_hat())]
    vertices += [("2", v) for v in g2.vertices if v not in (g2.zero_hat(), g2.one_hat())]
    vertices.append(top)
    edges = [
        (place("1", g1, e.tail), place("1", g1, e.head), ("1", e.label))
        for e in g1.edges
    ]
    edges += [
        (place("2", g2, e.tail), place("2", g2, e.head), ("2", e.label))
        for e in g2.edges
    ]
    order = [("1", label) for label in g1.relation.order]
    order += [("2", label) for label in g2.relation.order]
    return _normalize(vertices, edges, order)


def realize(w: CdPoly) -> LabeledDigraph:
    """A bounded, balanced, linearly labeled digraph whose cd-index is w.

    Each monomial c^i0 d c^i1 d ... d c^ip becomes a chain of butterflies
    joined by d-joins; multiplicities and distinct monomials are glued.
    Requires w nonzero with nonnegative coefficients.
    """
    if w.is_zero():
        raise ZeroPolynomial("cannot realize the zero polynomial")
    negatives = {word: c for word, c in w.items() if c < 0}
    if negatives:
        raise NegativeCoefficient(f"negative coefficients: {negatives}")
    result = None
    for word in sorted(w.terms, key=cd_sort_key):
        runs = [len(part) for part in word.split("d")]
        monomial_graph = butterfly(runs[0])
        for run in runs[1:]:
            monomial_graph = d_join(monomial_graph, butterfly(run))
        for _ in range(w.coefficient(word)):
            result = (
                monomial_graph
                if result is None
                else glue_sum(result, monomial_graph)
            )
    return result


def random_labeled_dag(
    rng: random.Random,
    max_vertices: int = 8,
    max_labels: int = 4,
) -> LabeledDigraph:
    """A random bounded layered DAG with a random linear labeling.

    Vertices sit on levels; edges point to strictly later levels, with skip
    edges and occasional parallel edges allowed, so source-to-sink path
    lengths usually mix parities.  Labels repeat freely.
    """
    if max_vertices < 2:
        raise ValueError("need at least a source and a sink")
    n_interior = rng.randint(0, max_vertices - 2)
    layers = [["v0"]]
    next_id = 1
    remaining = n_interior
    while remaining:
        width = rng.randint(1, remaining)
        layers.append([f"v{next_id + i}" for i in range(width)])
        next_id += width
        remaining -= width
    sink = f"v{next_id}"
    layers.append([sink])

    level_of = {v: i for i, layer in enumerate(layers) for v in layer}
    vertices = [v for layer in layers for v in layer]
    edges = []
    # every non-sink vertex escapes upward; every non-source vertex is entered
    for i, layer in enumerate(layers[:-1]):
        for v in layer:
            target_level = rng.randint(i + 1, len(layers) - 1)
            edges.append((v, rng.choice(layers[target_level]), None))
    for i, layer in enumerate(layers[1:], start=1):
        for v in layer:
            if not any(head == v for _, head, _ in edges):
                source_level = rng.randint(0, i - 1)
                edges.append((rng.choice(layers[source_level]), v, None))
    extra = rng.randint(0, max(2, len(vertices)))
    for _ in range(extra):
        tail = rng.choice(vertices[:-1])
        later = [v for v in vertices if level_of[v] > level_of[tail]]
        edges.append((tail, rng.choice(later), None))

    label_count = rng.randint(1, max_labels)
    order = [str(i) for i in range(1, label_count + 1)]
    labeled = [
        (tail, head, rng.choice(order)) for tail, head, _ in edges
    ]
    return LabeledDigraph(vertices, labeled, LinearRelation(order))


@dataclass(frozen=True)
class Counterexample:
    trial: int
    graph: dict
    cd_index: str
    negative_words: tuple
    verified: bool


@dataclass(frozen=True)
class SearchReport:
    seed: int
    trials: int
    max_vertices: int
    balanced_found: int
    counterexamples: tuple = field(default_factory=tuple)

    @property
    def clean(self) -> bool:
        return not self.counterexamples


def conjecture_search(
    seed: int, trials: int, max_vertices: int = 8, max_labels: int = 4
) -> SearchReport:
    """Search random balanced linear labelings for a negative cd-coefficient.

    Every candidate is re-verified by recomputing the ab-index through
    explicit path enumeration before it is reported; the report never
    asserts the nonnegativity statement, it only records what was found.
    Identical seeds give identical reports.
    """
    rng = random.Random(seed)
    balanced_found = 0
    counterexamples = []
    for trial in range(trials):
        g = random_labeled_dag(rng, max_vertices=max_vertices, max_labels=max_labels)
        report = g.is_balanced()
        if not report.balanced:
            continue
        balanced_found += 1
        negative = tuple(
            word for word, coeff in sorted(report.cd_index.items()) if coeff < 0
        )
        if not negative:
            continue
        brute = AbPoly.zero()
        for path in g.paths(g.zero_hat(), g.one_hat()):
            brute = brute + AbPoly.monomial(g.descent_word(path))
        verified_cd = ab_to_cd(brute)
        still_negative = tuple(
            word for word, coeff in sorted(verified_cd.items()) if coeff < 0
        )
        counterexamples.append(
            Counterexample(
                trial=trial,
                graph=to_json_dict(g),
                cd_index=str(verified_cd),
                negative_words=still_negative,
                verified=verified_cd == report.cd_index and bool(still_negative),
            )
        )
    return SearchReport(
        seed=seed,
        trials=trials,
        max_vertices=max_vertices,
        balanced_found=balanced_found,
        counterexamples=tuple(counterexamples),
    )
