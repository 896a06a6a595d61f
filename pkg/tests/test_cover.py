from __future__ import annotations

import itertools

from hypothesis import given, settings

from monopart.cover import DualMultigraph, alpha_star, check_cover, component_cover, cover_from_dual
from monopart.generators import colored, ks_blocks
from monopart.graph import BLUE, RED, ColoredGraph

from conftest import nx_alpha, nx_alpha_star
from test_graph import colored_graphs


def test_edgeless_graph_needs_every_vertex():
    cc = component_cover(ColoredGraph(4))
    assert cc.size == 4 == alpha_star(ColoredGraph(4))


def test_all_two_colorings_of_k5_have_cover_one():
    pairs = list(itertools.combinations(range(5), 2))
    for mask in range(1 << len(pairs)):
        g = ColoredGraph(5, [(u, v, RED if mask >> i & 1 else BLUE) for i, (u, v) in enumerate(pairs)])
        assert component_cover(g).size == 1


def test_ks_blocks_cover_uses_one_component_per_block():
    for k in (1, 2, 3):
        assert component_cover(ks_blocks(k, 4)).size == k


def test_cover_matches_independent_clique_oracle():
    for seed in range(150):
        g = colored(10, [0.2, 0.4, 0.7][seed % 3], 0.5, seed)
        cc = component_cover(g)
        assert cc.size == nx_alpha_star(g) <= nx_alpha(g)


def test_cover_prefers_red_components():
    # one red edge and one blue edge on the same two vertices is impossible; use a path r-b
    g = ColoredGraph(3, [(0, 1, RED), (1, 2, BLUE)])
    cc = component_cover(g)
    assert cc.size == 2
    assert [c for c, _ in cc.components].count(RED) >= 1


def test_restricted_dual_covers_only_listed_vertices():
    g = ColoredGraph(4, [(0, 1, RED), (2, 3, BLUE)])
    reds = [[0, 1], [2], [3]]
    blues = [[0], [1], [2, 3]]
    dual = DualMultigraph.from_components(reds, blues, [0, 1])
    cc = cover_from_dual(dual)
    assert cc.size == 1 and cc.components[0] == (RED, (0, 1))


@settings(max_examples=80, deadline=None)
@given(colored_graphs(max_n=10))
def test_koenig_certificates(g):
    cc = component_cover(g)
    check_cover(g, cc)
    assert cc.size == alpha_star(g) == len(cc.matching)
    assert cc.to_json()["size"] == cc.size
