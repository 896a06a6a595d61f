from __future__ import annotations

import itertools

import networkx as nx
import pytest

from monopart.errors import PreconditionViolated
from monopart.extremal import (
    bipartite_long_path,
    erdos_gallai_cycle,
    kst_edge_bound,
    long_path,
    mono_cycle_quarter,
)
from monopart.generators import colored, kpp_free_complement
from monopart.graph import BLUE, RED, ColoredGraph

from conftest import all_red_complete, from_nx


def test_long_path_is_a_path():
    for seed in range(30):
        g = colored(14, 0.3, 1.0, seed)
        path = long_path(g.rows(RED), g.full_mask)
        assert len(set(path)) == len(path)
        assert all(g.has_edge(u, v, RED) for u, v in zip(path, path[1:]))


def test_long_path_hamiltonian_on_complete_graph():
    g = all_red_complete(9)
    assert len(long_path(g.rows(RED), g.full_mask, start=4)) == 9


@pytest.mark.parametrize("h,ell,least", [
    (nx.petersen_graph(), 3, 4),
    (nx.complete_graph(4), 3, 4),
    (nx.cycle_graph(6), 1, 2),
    (nx.complete_bipartite_graph(3, 3), 2, 3),
])
def test_erdos_gallai_examples(h, ell, least):
    g = from_nx(h)
    cyc = erdos_gallai_cycle(g, ell, RED)
    assert len(cyc.vertices) >= least and cyc.is_valid(g)


def test_erdos_gallai_precondition():
    with pytest.raises(PreconditionViolated):
        erdos_gallai_cycle(from_nx(nx.path_graph(5)), 2)


def test_erdos_gallai_on_subset():
    g = colored(12, 0.7, 1.0, 3)
    part = list(range(8))
    h = nx.Graph([(u, v) for u, v in g.edge_list(RED) if u < 8 and v < 8])
    m = h.number_of_edges()
    ell = (2 * m - 1) // 7
    cyc = erdos_gallai_cycle(g, ell, RED, vertices=part)
    assert set(cyc.vertices) <= set(part) and len(cyc.vertices) >= ell + 1


def test_kst_values():
    assert kst_edge_bound(10, 2) == pytest.approx(10 ** 1.5 + 10)
    assert kst_edge_bound(100, 2, relaxed=True) == pytest.approx(4000)
    assert kst_edge_bound(10, 1) == 0


def test_quarter_cycle_on_complete_graph():
    cyc, guaranteed = mono_cycle_quarter(all_red_complete(10), 1)
    assert guaranteed and len(cyc.vertices) == 10 and cyc.color is RED
    assert not mono_cycle_quarter(all_red_complete(9), 1)[1]


def test_quarter_cycle_flags_small_graphs():
    for seed in range(10):
        g = kpp_free_complement(8, 2, seed)
        cyc, guaranteed = mono_cycle_quarter(g, 2)
        assert not guaranteed
        assert cyc.is_valid(g) and len(cyc.vertices) >= 2


def test_quarter_cycle_precondition():
    # complement of a perfect matching on 4 vertices contains no C4; empty graph does
    with pytest.raises(PreconditionViolated):
        mono_cycle_quarter(ColoredGraph(4), 2)


def test_bipartite_complete_gives_hamiltonian_path():
    a, b = list(range(5)), list(range(5, 10))
    edges = list(itertools.product(a, b))
    path, _ = bipartite_long_path(a, b, edges, 1, 0.5)
    assert len(path.vertices) == 10


def test_bipartite_missing_matching():
    a, b = list(range(5)), list(range(5, 10))
    edges = [(u, v) for u, v in itertools.product(a, b) if v != u + 5]
    path, guaranteed = bipartite_long_path(a, b, edges, 2, 0.5)
    assert not guaranteed
    assert len(path.vertices) == 10
    verts = path.vertices
    assert all((u in a) != (v in a) and v != u + 5 and u != v + 5 for u, v in zip(verts, verts[1:]))


def test_bipartite_precondition():
    with pytest.raises(PreconditionViolated):
        bipartite_long_path([0, 1], [2, 3], [], 2, 0.5)
    with pytest.raises(PreconditionViolated):
        bipartite_long_path([0, 1], [2], [(0, 2)], 1, 0.5)
