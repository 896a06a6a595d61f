from __future__ import annotations

import itertools

import pytest

import monopart.perturbed as perturbed_mod
from monopart.errors import CapExceeded, InternalContradiction, PreconditionViolated
from monopart.generators import colored, rng_for
from monopart.graph import BLUE, RED, ColoredGraph
from monopart.partition import partition_details
from monopart.perturbed import (
    PerturbedGraph,
    loss_factor,
    multicolor_triangle_ramsey,
    perturbed_component_cover,
    perturbed_partition,
    ramsey_bound,
)

from conftest import all_red_complete


def _has_mono_triangle(mask: int, pairs: list[tuple[int, int]], n: int) -> bool:
    col = {pairs[i]: mask >> i & 1 for i in range(len(pairs))}
    return any(col[(a, b)] == col[(a, c)] == col[(b, c)] for a, b, c in itertools.combinations(range(n), 3))


def test_two_color_triangle_ramsey_is_six():
    assert multicolor_triangle_ramsey(2) == 6
    for n, expect in ((5, False), (6, True)):
        pairs = list(itertools.combinations(range(n), 2))
        every = all(_has_mono_triangle(m, pairs, n) for m in range(1 << len(pairs)))
        assert every is expect


def test_ramsey_bounds():
    assert ramsey_bound(1) == 6 and loss_factor(1) == 25
    assert len(str(ramsey_bound(2))) == 122
    with pytest.raises(CapExceeded):
        ramsey_bound(3)
    with pytest.raises(PreconditionViolated):
        ramsey_bound(0)


def test_marks_must_be_edges_within_budget():
    g = ColoredGraph(3, [(0, 1, RED)])
    with pytest.raises(PreconditionViolated):
        PerturbedGraph(g, [(1, 2)])
    with pytest.raises(PreconditionViolated):
        PerturbedGraph(g, [(0, 1)], eps=0.1)


def _low_alpha(n: int, seed: int) -> ColoredGraph:
    # complement is a random matching, so alpha <= 2
    rng = rng_for(seed)
    order = rng.permutation(n)
    missing = {tuple(sorted((int(order[i]), int(order[i + 1])))) for i in range(0, n - 1, 2) if rng.random() < 0.5}
    return ColoredGraph(n, [(u, v, RED if rng.random() < 0.5 else BLUE)
                            for u, v in itertools.combinations(range(n), 2) if (u, v) not in missing])


def test_unperturbed_partition_matches_plain_version():
    for seed in range(30):
        g = _low_alpha(10, seed)
        pp = perturbed_partition(PerturbedGraph(g, [], eps=0.0))
        assert list(pp.pieces) == list(partition_details(g).pieces)
        assert not pp.leftover


def test_one_perturbed_edge_in_complete_red_graph():
    g = all_red_complete(100)
    pp = perturbed_partition(PerturbedGraph(g, [(0, 1)], eps=0.01))
    assert len(pp.pieces) == 1 and not pp.leftover
    for u, v in pp.pieces[0].edges:
        assert (u, v) != (0, 1)


def test_witness_blocks_are_given_up():
    # two red cliques joined by blue edges, all blue edges perturbed
    n = 20
    edges = [(u, v, RED if (u < 10) == (v < 10) else BLUE) for u, v in itertools.combinations(range(n), 2)]
    g = ColoredGraph(n, edges)
    marks = [(u, v) for u, v, c in edges if c is BLUE]
    pg = PerturbedGraph(g, marks)
    pc = perturbed_component_cover(pg)
    assert pc.alpha == 1
    assert len(pc.components) <= 1
    assert len(pc.leftover) <= loss_factor(1) * pg.unit


def test_random_leftover_bound():
    for seed in range(40):
        g = _low_alpha(14, seed)
        rng = rng_for(1000 + seed)
        edges = g.edge_list()
        k = int(rng.integers(0, 5))
        marks = [edges[i] for i in rng.choice(len(edges), size=k, replace=False)]
        pg = PerturbedGraph(g, marks, eps=0.05)
        pp = perturbed_partition(pg)
        assert len(pp.leftover) <= (loss_factor(pp.cover.alpha) + pp.cover.alpha) * pg.unit
        assert len(pp.pieces) <= 2 * pp.cover.alpha
        used = {e for p in pp.pieces for e in p.edges}
        assert not used & pg.perturbed


def test_large_independence_rejected():
    with pytest.raises(CapExceeded):
        perturbed_component_cover(PerturbedGraph(ColoredGraph(3), [], eps=0.0))


def test_small_n_rejected():
    # sqrt(eps) n < 1: the loss scale is below one vertex
    with pytest.raises(PreconditionViolated):
        perturbed_component_cover(PerturbedGraph(all_red_complete(4), [], eps=0.01))


def test_false_ramsey_bound_is_reported(monkeypatch):
    n = 20
    edges = [(u, v, RED if (u < 10) == (v < 10) else BLUE) for u, v in itertools.combinations(range(n), 2)]
    g = ColoredGraph(n, edges)
    monkeypatch.setattr(perturbed_mod, "ramsey_bound", lambda alpha: 0)
    with pytest.raises(InternalContradiction):
        perturbed_component_cover(PerturbedGraph(g, [(0, 10)], eps=0.05))
