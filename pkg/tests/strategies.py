"""Hypothesis strategies and small shared helpers for the test suite."""

from itertools import combinations

import hypothesis.strategies as st

from ftmd import (
    Leaf,
    complement,
    complement_node,
    connected_components,
    from_edges,
    random_cotree,
    realize,
    union_node,
)


@st.composite
def graphs(draw, min_n=1, max_n=8):
    """Arbitrary simple graphs (not necessarily cographs)."""
    n = draw(st.integers(min_n, max_n))
    pairs = list(combinations(range(n), 2))
    if pairs:
        edges = draw(st.sets(st.sampled_from(pairs)))
    else:
        edges = set()
    return from_edges(n, edges)


@st.composite
def graphs_with_subset(draw, min_n=1, max_n=8):
    g = draw(graphs(min_n, max_n))
    r = draw(st.sets(st.integers(0, g.n - 1)))
    return g, frozenset(r)


@st.composite
def cotrees(draw, min_n=1, max_n=10):
    n = draw(st.integers(min_n, max_n))
    seed = draw(st.integers(0, 2**32 - 1))
    return random_cotree(n, seed)


@st.composite
def cographs(draw, min_n=1, max_n=10):
    return realize(draw(cotrees(min_n, max_n)))


@st.composite
def cographs_with_subset(draw, min_n=1, max_n=10):
    g = draw(cographs(min_n, max_n))
    r = draw(st.sets(st.integers(0, g.n - 1)))
    return g, frozenset(r)


@st.composite
def connected_cographs(draw, min_n=1, max_n=10):
    g = draw(cographs(min_n, max_n))
    # The complement of a disconnected graph is connected, and cographs are
    # closed under complement.
    if len(connected_components(g)) > 1:
        g = complement(g)
    return g


def enumerate_cotrees(max_leaves):
    """Every normalized cotree shape with <= max_leaves leaves, with every
    union node optionally complement-wrapped; leaves labelled left to right."""

    def shapes(leaves):
        if leaves == 1:
            yield ("leaf",)
            return
        for k in range(1, leaves):
            for ls in shapes(k):
                for rs in shapes(leaves - k):
                    u = ("U", ls, rs)
                    yield u
                    yield ("C", u)

    def materialize(shape, counter):
        if shape[0] == "leaf":
            v = counter[0]
            counter[0] += 1
            return Leaf(v)
        if shape[0] == "U":
            left = materialize(shape[1], counter)
            right = materialize(shape[2], counter)
            return union_node(left, right)
        return complement_node(materialize(shape[1], counter))

    for leaves in range(1, max_leaves + 1):
        for shape in shapes(leaves):
            yield materialize(shape, [0])


def graph_key(g):
    """Canonical key for labelled-graph deduplication."""
    return (g.n, tuple(g.edges()))
