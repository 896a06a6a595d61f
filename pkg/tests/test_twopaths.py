from __future__ import annotations

import pytest

from monopart.errors import PreconditionViolated
from monopart.extremal import c4free_single_path, c4free_two_paths, two_path_cover_kpp
from monopart.extremal.twopaths import (
    PairSearch,
    _exchange_moves,
    _harvest_moves,
    _rebuild_moves,
    _recolor_moves,
    coverage_objective,
)
from monopart.generators import g5, g6, kpp_free_complement, remark2
from monopart.graph import BLUE, RED, ColoredGraph
from monopart.oracle import brute_max_two_path_cover

from conftest import all_red_complete


@pytest.mark.parametrize("n", range(7, 13))
def test_remark_construction_misses_exactly_one(n):
    res = c4free_two_paths(remark2(n))
    assert res.guaranteed and res.pair.covered == n - 1


def test_small_examples_are_flagged():
    res = c4free_two_paths(g6())
    assert not res.guaranteed and res.pair.covered == 4
    assert c4free_two_paths(g5()).pair.covered == 3


def test_single_color_complete_graph():
    res = c4free_two_paths(all_red_complete(7))
    assert res.pair.covered == 7 and len(res.pair.blue_path.vertices) <= 1


def test_balanced_search_on_random_instances():
    for seed in range(40):
        g = kpp_free_complement(8, 2, seed)
        res = c4free_two_paths(g)
        assert g.n - 1 <= res.pair.covered <= brute_max_two_path_cover(g)
        assert res.trace.objectives_increase()


def test_single_path_examples():
    for seed in range(20):
        g = kpp_free_complement(9, 2, seed)
        path = c4free_single_path(g)
        assert len(path.vertices) >= 8 and path.is_valid(g)
    with pytest.raises(PreconditionViolated):
        c4free_single_path(ColoredGraph(4))


def test_kpp_terminal_state_has_no_improving_move():
    for seed in range(30):
        g = kpp_free_complement(8, 3, seed, black_frac=0.5)
        res = two_path_cover_kpp(g, 3)
        assert res.trace.objectives_increase()
        search = PairSearch(g, coverage_objective, [_harvest_moves, _recolor_moves, _exchange_moves, _rebuild_moves])
        search.blue = list(res.pair.blue_path.vertices)
        search.red = list(res.pair.red_path.vertices)
        assert search.step() is False
        assert res.pair.covered == brute_max_two_path_cover(g)


def test_kpp_precondition():
    with pytest.raises(PreconditionViolated):
        two_path_cover_kpp(ColoredGraph(6), 3)
    with pytest.raises(PreconditionViolated):
        two_path_cover_kpp(all_red_complete(4), 4)


def test_result_json():
    res = two_path_cover_kpp(remark2(7), 2)
    data = res.pair.to_json()
    assert data["covered"] == 6 and len(data["uncovered"]) == 1
    assert res.trace.to_json()[0]["after"][0] > res.trace.to_json()[0]["before"][0]
