from __future__ import annotations

import pytest
from hypothesis import given, settings

from monopart.generators import colored, ks_blocks
from monopart.graph import BLUE, RED, ColoredGraph, independence_number
from monopart.partition import (
    PieceKind,
    check_partition,
    connected_matching_partition,
    max_matching,
    partition_details,
    posa_partition,
)

from conftest import all_red_complete, nx_alpha
from test_graph import colored_graphs


@pytest.mark.parametrize("k,s", [(1, 3), (2, 3), (3, 4), (4, 5)])
def test_ks_blocks_need_two_pieces_per_block(k, s):
    pieces = connected_matching_partition(ks_blocks(k, s))
    assert len(pieces) == 2 * k
    check_partition(ks_blocks(k, s), pieces)


def test_complete_red_graph_is_one_or_two_pieces():
    for n in range(1, 9):
        pieces = connected_matching_partition(all_red_complete(n))
        assert len(pieces) <= 2
        assert sum(len(p.vertices) for p in pieces) == n


def test_petersen_perfect_matching(petersen):
    assert len(max_matching(petersen)) == 5


def test_posa_parts_bounded_by_independence(petersen):
    pieces = posa_partition(petersen, RED)
    assert len(pieces) <= independence_number(petersen) == 4
    kinds = {p.kind for p in pieces}
    assert kinds <= {PieceKind.SPANNING_CYCLE, PieceKind.SINGLE_EDGE, PieceKind.SINGLE_VERTEX}


def test_posa_on_edgeless_graph_gives_singletons():
    pieces = posa_partition(ColoredGraph(4))
    assert [p.kind for p in pieces] == [PieceKind.SINGLE_VERTEX] * 4


def test_details_residue_classes_are_disjoint():
    for seed in range(60):
        g = colored(12, 0.5, 0.5, seed)
        d = partition_details(g)
        used = {v for p in d.pieces if p.kind is PieceKind.CONNECTED_MATCHING for v in p.vertices}
        classes = [set(d.doubly), set(d.red_only), set(d.blue_only)]
        assert not any(a & b for i, a in enumerate(classes) for b in classes[i + 1:])
        assert not used & set().union(*classes)
        assert len(d.pieces) <= 2 * nx_alpha(g)


def test_piece_json():
    piece = connected_matching_partition(ColoredGraph(2, [(0, 1, BLUE)]))[0]
    data = piece.to_json()
    assert data["color"] == "b" and sorted(data["vertices"]) == [0, 1]


@settings(max_examples=80, deadline=None)
@given(colored_graphs(max_n=10))
def test_partition_invariants(g):
    pieces = connected_matching_partition(g)
    check_partition(g, pieces)
    assert len(pieces) <= max(2 * nx_alpha(g), 0)
