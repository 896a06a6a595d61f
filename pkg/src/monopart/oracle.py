"""Exponential exact solvers used as ground truth on small graphs.

All of them work on bitmask subsets.  Monochromatic path/cycle feasibility
of a vertex subset is decided by a Held-Karp style dynamic program; the
partition and pair questions are then answered by subset DPs on top.
The ``search_*`` functions answer the same questions by plain backtracking
and exist only to cross-check the DP route.
"""

from __future__ import annotations

import os
from functools import lru_cache
from typing import Optional, Sequence

from .errors import CapExceeded
from .graph import BLUE, RED, Color, ColoredGraph, bits

DEFAULT_ORACLE_CAP = 10


def oracle_cap() -> int:
    raw = os.environ.get("MONO_ORACLE_CAP")
    return int(raw) if raw else DEFAULT_ORACLE_CAP


def _check(g: ColoredGraph, cap: Optional[int]) -> None:
    limit = oracle_cap() if cap is None else cap
    if g.n > limit:
        raise CapExceeded(f"oracle asked for n={g.n} (cap {limit}; set MONO_ORACLE_CAP to raise)")


def path_ends(rows: Sequence[int], n: int) -> list[int]:
    """``ends[mask]`` = mask of vertices at which some Hamiltonian path of ``mask`` ends."""
    ends = [0] * (1 << n)
    for v in range(n):
        ends[1 << v] = 1 << v
    for mask in range(1, 1 << n):
        e = ends[mask]
        if not e:
            continue
        for v in bits(e):
            for w in bits(rows[v] & ~mask):
                ends[mask | (1 << w)] |= 1 << w
    return ends


def cycle_masks(rows: Sequence[int], n: int) -> list[bool]:
    """``ok[mask]`` for masks of size >= 3 spanning a cycle in ``rows``."""
    anchored = [0] * (1 << n)
    for s in range(n):
        anchored[1 << s] = 1 << s
    ok = [False] * (1 << n)
    for mask in range(1, 1 << n):
        e = anchored[mask]
        if not e:
            continue
        low = mask & -mask
        s = low.bit_length() - 1
        if mask.bit_count() >= 3 and e & rows[s]:
            ok[mask] = True
        higher = ~((low << 1) - 1)
        for v in bits(e):
            for w in bits(rows[v] & ~mask & higher):
                anchored[mask | (1 << w)] |= 1 << w
    return ok


def _cycle_ok(g: ColoredGraph, color: Color, trivial_cycles: bool, allow_empty: bool) -> list[bool]:
    rows = g.rows(color)
    ok = cycle_masks(rows, g.n)
    if allow_empty:
        ok[0] = True
    if trivial_cycles:
        for v in range(g.n):
            ok[1 << v] = True
            for w in bits(rows[v]):
                ok[(1 << v) | (1 << w)] = True
    return ok


def _min_partition_table(g: ColoredGraph, trivial_cycles: bool) -> list[Optional[int]]:
    n = g.n
    red = _cycle_ok(g, RED, trivial_cycles, False)
    blue = _cycle_ok(g, BLUE, trivial_cycles, False)
    feasible = [r or b for r, b in zip(red, blue)]
    best: list[Optional[int]] = [None] * (1 << n)
    best[0] = 0
    for mask in range(1, 1 << n):
        low = mask & -mask
        rest = mask ^ low
        top = None
        sub = rest
        while True:
            piece = sub | low
            if feasible[piece]:
                prev = best[mask ^ piece]
                if prev is not None and (top is None or prev + 1 < top):
                    top = prev + 1
            if sub == 0:
                break
            sub = (sub - 1) & rest
        best[mask] = top
    return best


def brute_min_cycle_partition(g: ColoredGraph, trivial_cycles: bool = True,
                              cap: Optional[int] = None) -> Optional[int]:
    """Fewest vertex-disjoint monochromatic cycles partitioning V(g).

    With ``trivial_cycles`` a vertex or a single edge counts as a cycle; with
    it off only cycles on at least three vertices count and the answer is
    None when no partition exists.
    """
    _check(g, cap)
    return _min_partition_table(g, trivial_cycles)[g.full_mask]


def brute_max_cycle_cover(g: ColoredGraph, k: int, trivial_cycles: bool = True,
                          cap: Optional[int] = None) -> int:
    """Most vertices covered by at most ``k`` vertex-disjoint monochromatic cycles."""
    _check(g, cap)
    best = _min_partition_table(g, trivial_cycles)
    return max(mask.bit_count() for mask, b in enumerate(best) if b is not None and b <= k)


def brute_max_two_path_cover(g: ColoredGraph, cap: Optional[int] = None) -> int:
    """Most vertices covered by a disjoint (blue path, red path) pair; either path may be empty."""
    _check(g, cap)
    n = g.n
    full = g.full_mask
    red_ends = path_ends(g.rows(RED), n)
    blue_ends = path_ends(g.rows(BLUE), n)
    best_blue = [0] * (1 << n)
    for mask in range(1, 1 << n):
        if blue_ends[mask]:
            best_blue[mask] = mask.bit_count()
        else:
            best_blue[mask] = max(best_blue[mask ^ (1 << v)] for v in bits(mask))
    top = best_blue[full]
    for mask in range(1, 1 << n):
        if red_ends[mask]:
            top = max(top, mask.bit_count() + best_blue[full ^ mask])
    return top


def brute_two_cycle_cover_exists(g: ColoredGraph, trivial_cycles: bool = True,
                                 allow_empty: bool = True, cap: Optional[int] = None) -> bool:
    """Is V(g) the disjoint union of a red cycle and a blue cycle?"""
    _check(g, cap)
    full = g.full_mask
    red = _cycle_ok(g, RED, trivial_cycles, allow_empty)
    blue = _cycle_ok(g, BLUE, trivial_cycles, allow_empty)
    return any(red[m] and blue[full ^ m] for m in range(1 << g.n))


# -- backtracking cross-checks ---------------------------------------------------------
def _cycles_through(g: ColoredGraph, color: Color, start: int, allowed: int, trivial: bool):
    """Vertex masks of all ``color`` cycles containing ``start`` inside ``allowed``."""
    rows = g.rows(color)
    found = set()
    if trivial:
        found.add(1 << start)
        for w in bits(rows[start] & allowed):
            found.add((1 << start) | (1 << w))

    def dfs(v: int, used: int, length: int) -> None:
        if length >= 3 and rows[v] >> start & 1:
            found.add(used)
        for w in bits(rows[v] & allowed & ~used):
            dfs(w, used | (1 << w), length + 1)

    dfs(start, 1 << start, 1)
    return found


def search_min_cycle_partition(g: ColoredGraph, trivial_cycles: bool = True,
                               cap: Optional[int] = None) -> Optional[int]:
    _check(g, cap)

    @lru_cache(maxsize=None)
    def solve(left: int) -> Optional[int]:
        if not left:
            return 0
        v = (left & -left).bit_length() - 1
        best = None
        for color in (RED, BLUE):
            for cyc in _cycles_through(g, color, v, left, trivial_cycles):
                sub = solve(left & ~cyc)
                if sub is not None and (best is None or sub + 1 < best):
                    best = sub + 1
        return best

    return solve(g.full_mask)


def search_two_cycle_cover(g: ColoredGraph, trivial_cycles: bool = True,
                           allow_empty: bool = True, cap: Optional[int] = None) -> bool:
    _check(g, cap)
    full = g.full_mask

    def is_cycle_set(color: Color, mask: int) -> bool:
        if mask == 0:
            return allow_empty
        v = (mask & -mask).bit_length() - 1
        return mask in _cycles_through(g, color, v, mask, trivial_cycles)

    return any(is_cycle_set(RED, m) and is_cycle_set(BLUE, full ^ m) for m in range(1 << g.n))


def search_max_cycle_cover(g: ColoredGraph, k: int, trivial_cycles: bool = True,
                           cap: Optional[int] = None) -> int:
    _check(g, cap)

    @lru_cache(maxsize=None)
    def solve(left: int, budget: int) -> int:
        if not left or budget == 0:
            return 0
        v = (left & -left).bit_length() - 1
        best = solve(left & ~(1 << v), budget)
        for color in (RED, BLUE):
            for cyc in _cycles_through(g, color, v, left, trivial_cycles):
                best = max(best, cyc.bit_count() + solve(left & ~cyc, budget - 1))
        return best

    return solve(g.full_mask, k)
