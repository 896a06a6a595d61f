from __future__ import annotations

import itertools

import networkx as nx
import numpy as np
import pytest

from monopart.graph import BLUE, RED, ColoredGraph


def from_nx(h: nx.Graph, color=RED) -> ColoredGraph:
    h = nx.convert_node_labels_to_integers(h)
    return ColoredGraph(h.number_of_nodes(), [(u, v, color) for u, v in h.edges()])


def all_red_complete(n: int) -> ColoredGraph:
    return ColoredGraph(n, [(u, v, RED) for u, v in itertools.combinations(range(n), 2)])


def nx_alpha(g: ColoredGraph) -> int:
    """Independence number through networkx cliques of the complement (independent of monopart)."""
    comp = nx.Graph()
    comp.add_nodes_from(range(g.n))
    for u, v in itertools.combinations(range(g.n), 2):
        if not g.has_edge(u, v):
            comp.add_edge(u, v)
    if g.n == 0:
        return 0
    _, w = nx.max_weight_clique(comp, weight=None)
    return w


def nx_alpha_star(g: ColoredGraph) -> int:
    """Largest set with pairwise distinct red and blue components, as a networkx clique."""
    if g.n == 0:
        return 0
    comp_id = {}
    for col in (RED, BLUE):
        h = nx.Graph()
        h.add_nodes_from(range(g.n))
        h.add_edges_from(g.edge_list(col))
        for i, c in enumerate(nx.connected_components(h)):
            for v in c:
                comp_id[(col, v)] = i
    ok = nx.Graph()
    ok.add_nodes_from(range(g.n))
    for u, v in itertools.combinations(range(g.n), 2):
        if comp_id[(RED, u)] != comp_id[(RED, v)] and comp_id[(BLUE, u)] != comp_id[(BLUE, v)]:
            ok.add_edge(u, v)
    _, w = nx.max_weight_clique(ok, weight=None)
    return w


def case1_instance(n: int, seed: int) -> ColoredGraph:
    """Even n, min degree >= 3n/4, largest monochromatic component missing some vertices.

    A core W plus P (red to all of W) and Q (blue to all of W), |P| = |Q| = n/4 - 1,
    no P-Q edges; every other pair is an edge with a random color.
    """
    rng = np.random.default_rng(seed)
    k = n // 4 - 1
    p_set = set(range(k))
    q_set = set(range(k, 2 * k))
    edges = []
    for u, v in itertools.combinations(range(n), 2):
        in_p = (u in p_set) + (v in p_set)
        in_q = (u in q_set) + (v in q_set)
        if in_p and in_q:
            continue
        if in_p == 1 and not in_q and not (u in p_set and v in p_set):
            col = RED
        elif in_q == 1 and not in_p and not (u in q_set and v in q_set):
            col = BLUE
        else:
            col = RED if rng.random() < 0.5 else BLUE
        edges.append((u, v, col))
    return ColoredGraph(n, edges)


@pytest.fixture
def petersen() -> ColoredGraph:
    return from_nx(nx.petersen_graph())


def low_alpha_instance(n: int, seed: int, black_frac: float = 0.3, p_red: float = 0.5) -> ColoredGraph:
    """Random graph with independence number <= 2: its complement is grown triangle-free."""
    rng = np.random.default_rng(seed)
    pairs = list(itertools.combinations(range(n), 2))
    black = [set() for _ in range(n)]
    for idx in rng.permutation(len(pairs)):
        u, v = pairs[idx]
        if rng.random() < black_frac and not black[u] & black[v]:
            black[u].add(v)
            black[v].add(u)
    edges = [(u, v, RED if rng.random() < p_red else BLUE) for u, v in pairs if v not in black[u]]
    return ColoredGraph(n, edges)
