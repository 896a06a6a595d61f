"""Named extremal constructions and seeded random instance families.

Random families draw from numpy's PCG64 bit generator; a given
(family, parameters, seed) triple always yields the same graph.
"""

from __future__ import annotations

import math
from typing import Any

import numpy as np

from .errors import GenerationFailed, InvalidParams
from .graph import BLUE, RED, Color, ColoredGraph, bits, complement_contains, contains_kpp

PRNG_NAME = "PCG64"
DEFAULT_RETRIES = 50


def rng_for(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(seed))


def _random_color(rng: np.random.Generator, p_red: float) -> Color:
    return RED if rng.random() < p_red else BLUE


# -- catalog ----------------------------------------------------------------------
def sharpness4(m: int, seed: int = 0) -> ColoredGraph:
    """Four classes of size m showing that minimum degree 3n/4 - 1 is not enough.

    No edges between A1-A2 and A3-A4; [A1,A3], [A2,A4] red; [A1,A4], [A2,A3]
    blue; inside each class a complete graph with uniformly random colors.
    """
    if m < 1:
        raise InvalidParams(f"sharpness4 needs m >= 1, got {m}")
    rng = rng_for(seed)
    cls = [range(i * m, (i + 1) * m) for i in range(4)]
    edges = []
    for part in cls:
        for i, u in enumerate(part):
            for v in part[i + 1:]:
                edges.append((u, v, _random_color(rng, 0.5)))
    for (x, y), col in (((0, 2), RED), ((1, 3), RED), ((0, 3), BLUE), ((1, 2), BLUE)):
        edges += [(u, v, col) for u in cls[x] for v in cls[y]]
    return ColoredGraph(4 * m, edges)


def ks_blocks(k: int, s: int) -> ColoredGraph:
    """k disjoint K_s; in each, the blue edges form a K_{s-1} and the remaining vertex is a red star."""
    if k < 1 or s < 3:
        raise InvalidParams(f"ks_blocks needs k >= 1 and s >= 3, got k={k}, s={s}")
    edges = []
    for b in range(k):
        base = b * s
        for i in range(s):
            for j in range(i + 1, s):
                edges.append((base + i, base + j, RED if i == 0 else BLUE))
    return ColoredGraph(k * s, edges)


def remark2(n: int) -> ColoredGraph:
    """Vertex 0 isolated, vertex 1 red to everything else, all other pairs blue."""
    if n < 3:
        raise InvalidParams(f"remark2 needs n >= 3, got {n}")
    edges = [(1, y, RED) for y in range(2, n)]
    edges += [(u, v, BLUE) for u in range(2, n) for v in range(u + 1, n)]
    return ColoredGraph(n, edges)


def g5() -> ColoredGraph:
    """K1 plus a C4 colored alternately red and blue."""
    return ColoredGraph(5, [(1, 2, RED), (2, 3, BLUE), (3, 4, RED), (1, 4, BLUE)])


def g6() -> ColoredGraph:
    """Complement of the 6-cycle 0..5: long diagonals red, short diagonals blue."""
    edges = [(i, i + 3, RED) for i in range(3)]
    edges += [(i, (i + 2) % 6, BLUE) for i in range(6)]
    return ColoredGraph(6, [(min(u, v), max(u, v), c) for u, v, c in edges])


CATALOG = {
    "sharpness4": sharpness4,
    "ks_blocks": ks_blocks,
    "remark2": remark2,
    "g5": g5,
    "g6": g6,
}


def gen_catalog(name: str, **params: Any) -> ColoredGraph:
    try:
        build = CATALOG[name]
    except KeyError:
        raise InvalidParams(f"unknown catalog graph {name!r}; choose from {sorted(CATALOG)}") from None
    try:
        return build(**params)
    except TypeError as exc:
        raise InvalidParams(f"bad parameters for {name}: {exc}") from None


# -- random families ----------------------------------------------------------------
def colored(n: int, p_edge: float, p_red: float, seed: int) -> ColoredGraph:
    """G(n, p_edge) with each edge red with probability p_red."""
    _check_prob(p_edge, "p_edge")
    _check_prob(p_red, "p_red")
    if n < 0:
        raise InvalidParams("n must be non-negative")
    rng = rng_for(seed)
    edges = []
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p_edge:
                edges.append((u, v, _random_color(rng, p_red)))
    return ColoredGraph(n, edges)


def min_degree(n: int, delta_frac: float, seed: int, p_red: float = 0.5,
               p_remove: float = 1.0) -> ColoredGraph:
    """Random graph with minimum degree >= ceil(delta_frac * n).

    Starting from K_n, pairs are visited in random order and deleted (with
    probability ``p_remove``) whenever both endpoints stay above the bound,
    so with the default the degrees end up close to the threshold.
    """
    _check_prob(delta_frac, "delta_frac")
    _check_prob(p_red, "p_red")
    _check_prob(p_remove, "p_remove")
    need = math.ceil(delta_frac * n)
    if n and need > n - 1:
        raise InvalidParams(f"minimum degree {need} impossible on {n} vertices")
    rng = rng_for(seed)
    deg = [n - 1] * n
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    keep = set(pairs)
    for idx in rng.permutation(len(pairs)):
        u, v = pairs[idx]
        if deg[u] > need and deg[v] > need and rng.random() < p_remove:
            keep.discard((u, v))
            deg[u] -= 1
            deg[v] -= 1
    g = ColoredGraph(n, [(u, v, _random_color(rng, p_red)) for u, v in sorted(keep)])
    if n and g.min_degree() < need:
        raise GenerationFailed("minimum degree check failed")
    return g


def kpp_free_complement(n: int, p: int, seed: int, p_red: float = 0.5,
                        black_frac: float = 1.0, retries: int = DEFAULT_RETRIES) -> ColoredGraph:
    """Random graph whose complement has no K_{p,p}.

    The complement is grown greedily in random pair order, each pair being
    tried with probability ``black_frac`` and rejected if it would complete a
    K_{p,p}.  The remaining pairs become red/blue edges.
    """
    if p < 1 or p > 3:
        raise InvalidParams(f"kpp_free_complement supports 1 <= p <= 3, got {p}")
    _check_prob(p_red, "p_red")
    _check_prob(black_frac, "black_frac")
    rng = rng_for(seed)
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    full = (1 << n) - 1
    for _ in range(retries):
        black = [0] * n
        for idx in rng.permutation(len(pairs)):
            if rng.random() >= black_frac:
                continue
            u, v = pairs[idx]
            black[u] |= 1 << v
            black[v] |= 1 << u
            if _completes_kpp(black, p, u, v, full):
                black[u] &= ~(1 << v)
                black[v] &= ~(1 << u)
        edges = [(u, v, _random_color(rng, p_red)) for u, v in pairs if not black[u] >> v & 1]
        g = ColoredGraph(n, edges)
        pattern_free = not (complement_contains(g, "C4") if p == 2 else complement_contains(g, "Kpp", p))
        if pattern_free:
            return g
    raise GenerationFailed(f"no K_{{{p},{p}}}-free complement after {retries} attempts")


def _completes_kpp(black: list[int], p: int, u: int, v: int, full: int) -> bool:
    # a new K_{p,p} must use the edge uv, with u and v on opposite sides
    if p == 1:
        return True
    return contains_kpp(black, p, full) if p > 2 else _has_c4_through(black, u, v)


def _has_c4_through(black: list[int], u: int, v: int) -> bool:
    # C4 u-v-w-x-u: w a neighbour of v, x a neighbour of u, and w ~ x
    for w in bits(black[v] & ~(1 << u)):
        if black[w] & black[u] & ~(1 << v):
            return True
    return False


RANDOM = {
    "colored": colored,
    "min_degree": min_degree,
    "kpp_free_complement": kpp_free_complement,
}


def gen_random(kind: str, seed: int, **params: Any) -> ColoredGraph:
    try:
        build = RANDOM[kind]
    except KeyError:
        raise InvalidParams(f"unknown random family {kind!r}; choose from {sorted(RANDOM)}") from None
    try:
        return build(seed=seed, **params)
    except TypeError as exc:
        raise InvalidParams(f"bad parameters for {kind}: {exc}") from None


def _check_prob(x: float, name: str) -> None:
    if not 0.0 <= x <= 1.0:
        raise InvalidParams(f"{name} must lie in [0, 1], got {x}")
