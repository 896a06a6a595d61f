from __future__ import annotations

import itertools

import pytest
from hypothesis import given, settings, strategies as st

from monopart.errors import CapExceeded, GraphFormatError
from monopart.generators import colored
from monopart.graph import (
    BLUE,
    RED,
    ColoredGraph,
    PathSeq,
    bipartite_complement_contains_kpp,
    complement_contains,
    format_graph,
    independence_number,
    is_cycle,
    is_path,
    maximum_independent_set,
    monochromatic_components,
    parse_graph,
)

from conftest import nx_alpha


@st.composite
def colored_graphs(draw, max_n=9):
    n = draw(st.integers(0, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    picks = draw(st.lists(st.sampled_from(["r", "b", None]), min_size=len(pairs), max_size=len(pairs)))
    return ColoredGraph(n, [(u, v, c) for (u, v), c in zip(pairs, picks) if c])


def test_edges_are_normalised_and_colored():
    g = ColoredGraph(3, [(2, 0, "r"), (1, 2, BLUE)])
    assert g.edges() == [(0, 2, RED), (1, 2, BLUE)]
    assert g.color(2, 0) is RED and g.color(0, 1) is None
    assert g.has_edge(1, 2, BLUE) and not g.has_edge(1, 2, RED)


@pytest.mark.parametrize("edges", [[(0, 0, "r")], [(0, 1, "r"), (1, 0, "b")], [(0, 5, "r")]])
def test_bad_edges_rejected(edges):
    with pytest.raises(ValueError):
        ColoredGraph(3, edges)


def test_parse_format_round_trip_with_marks():
    g = ColoredGraph(4, [(0, 1, RED), (1, 2, BLUE), (2, 3, RED)])
    text = format_graph(g, perturbed=[(2, 1)], comment="demo")
    back, marks = parse_graph(text)
    assert back == g
    assert marks == frozenset({(1, 2)})


def test_parse_labels_and_comments():
    g, _ = parse_graph("# triangle\nn 3\na b r\nb c b  # trailing\n")
    assert g.n == 3 and g.edge_count() == 2


@pytest.mark.parametrize("text", ["n 2\n0 1 r\n0 1 b\n", "n 2\n0 2 r\n", "0 1 r\n", "n 2\n0 1 x\n", "n 2\n0 0 r\n"])
def test_parse_errors(text):
    with pytest.raises(GraphFormatError):
        parse_graph(text)


def test_components_sorted_by_lowest_vertex():
    g = ColoredGraph(5, [(3, 4, RED), (0, 2, RED), (1, 2, BLUE)])
    assert monochromatic_components(g, RED) == [[0, 2], [1], [3, 4]]


def test_independence_matches_networkx():
    for seed in range(40):
        g = colored(11, 0.4, 0.5, seed)
        s = maximum_independent_set(g)
        assert len(s) == nx_alpha(g)
        assert all(not g.has_edge(u, v) for u, v in itertools.combinations(s, 2))


def test_independence_cap():
    with pytest.raises(CapExceeded):
        independence_number(ColoredGraph(50), cap=40)


def test_complement_patterns():
    # complement of K_4 minus a perfect matching is a matching: no C4
    g = ColoredGraph(4, [(0, 1, RED), (2, 3, RED), (0, 2, BLUE), (1, 3, BLUE)])
    assert complement_contains(g, "C4") is False
    assert complement_contains(ColoredGraph(4), "C4") is True
    assert complement_contains(ColoredGraph(6), "Kpp", p=3) is True
    with pytest.raises(CapExceeded):
        complement_contains(ColoredGraph(8), "Kpp", p=4)


def test_bipartite_complement_kpp():
    a, b = [0, 1], [2, 3]
    assert bipartite_complement_contains_kpp(a, b, [], 2)
    assert not bipartite_complement_contains_kpp(a, b, [(0, 2)], 2)


def test_paths_and_cycles_validate_colors():
    g = ColoredGraph(4, [(0, 1, RED), (1, 2, RED), (2, 3, BLUE), (0, 3, RED)])
    assert is_path(g, [0, 1, 2], RED)
    assert not is_path(g, [0, 1, 2, 3], RED)
    assert is_path(g, [0, 1, 2, 3])
    assert is_cycle(g, [0, 1, 2, 3])
    assert PathSeq((3, 0, 1), RED).is_valid(g)


@settings(max_examples=60, deadline=None)
@given(colored_graphs())
def test_text_round_trip(g):
    back, marks = parse_graph(format_graph(g))
    assert back == g and not marks


@settings(max_examples=60, deadline=None)
@given(colored_graphs())
def test_swapped_exchanges_colors(g):
    s = g.swapped()
    assert s.edge_list(RED) == g.edge_list(BLUE)
    assert s.swapped() == g
