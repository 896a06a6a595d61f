from __future__ import annotations

import itertools

import pytest

from monopart.errors import InvalidParams
from monopart.generators import (
    colored,
    g5,
    g6,
    gen_catalog,
    gen_random,
    kpp_free_complement,
    ks_blocks,
    min_degree,
    remark2,
    sharpness4,
)
from monopart.graph import BLUE, RED, complement_contains, format_graph


def test_seeded_families_are_reproducible():
    for build in (lambda s: colored(12, 0.5, 0.5, s), lambda s: min_degree(12, 0.75, s),
                  lambda s: kpp_free_complement(9, 2, s), lambda s: sharpness4(3, s)):
        assert format_graph(build(7)) == format_graph(build(7))
    assert format_graph(colored(12, 0.5, 0.5, 1)) != format_graph(colored(12, 0.5, 0.5, 2))


def test_sharpness4_structure():
    g = sharpness4(3, 0)
    assert g.n == 12 and g.min_degree() == 3 * 12 // 4 - 1
    assert not g.has_edge(0, 3) and not g.has_edge(6, 9)
    assert g.color(0, 6) is RED and g.color(0, 9) is BLUE


def test_ks_blocks_structure():
    g = ks_blocks(2, 4)
    assert g.n == 8 and g.edge_count() == 12
    assert g.color(0, 1) is RED and g.color(1, 2) is BLUE and not g.has_edge(3, 4)


def test_small_named_graphs():
    assert g5().n == 5 and g5().degree(0) == 0
    assert g6().edge_count() == 9
    assert all(g6().color(i, i + 3) is RED for i in range(3))
    r = remark2(6)
    assert r.degree(0) == 0 and r.color(1, 4) is RED and r.color(2, 5) is BLUE


def test_min_degree_bound():
    for seed in range(10):
        assert min_degree(16, 0.75, seed).min_degree() >= 12


def test_kpp_free_complement_property():
    for seed in range(10):
        assert not complement_contains(kpp_free_complement(9, 2, seed), "C4")
        assert not complement_contains(kpp_free_complement(8, 3, seed), "Kpp", p=3)


def test_colors_follow_probability():
    g = colored(30, 1.0, 1.0, 0)
    assert g.edge_list(BLUE) == [] and len(g.edge_list(RED)) == 435


@pytest.mark.parametrize("call", [
    lambda: sharpness4(0),
    lambda: ks_blocks(1, 2),
    lambda: remark2(2),
    lambda: colored(5, 1.5, 0.5, 0),
    lambda: min_degree(4, 1.0, 0),
    lambda: kpp_free_complement(5, 4, 0),
    lambda: gen_catalog("nope"),
    lambda: gen_catalog("g5", n=3),
    lambda: gen_random("nope", 0),
])
def test_invalid_parameters(call):
    with pytest.raises(InvalidParams):
        call()


def test_dispatch_matches_direct_calls():
    assert gen_catalog("ks_blocks", k=2, s=3) == ks_blocks(2, 3)
    assert gen_random("colored", 3, n=6, p_edge=0.5, p_red=0.5) == colored(6, 0.5, 0.5, 3)
