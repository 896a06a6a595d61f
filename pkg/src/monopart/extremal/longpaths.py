"""Long paths and cycles: Posa-rotation path growth, Erdos-Gallai cycles, Kovari-Sos-Turan bounds."""

from __future__ import annotations

from typing import Iterable, Optional, Sequence

import networkx as nx

from ..errors import InternalContradiction, PreconditionViolated
from ..graph import (
    BLUE,
    RED,
    Color,
    ColoredGraph,
    CycleSeq,
    PathSeq,
    bipartite_complement_contains_kpp,
    bits,
    complement_contains,
    mask_of,
)


def _lowest(mask: int) -> int:
    return (mask & -mask).bit_length() - 1


def _grow(rows: Sequence[int], within: int, path: list[int], used: int) -> tuple[list[int], int]:
    """Extend the tail greedily, preferring the neighbour with fewest free neighbours."""
    while True:
        free = rows[path[-1]] & within & ~used
        if not free:
            return path, used
        v = min(bits(free), key=lambda w: ((rows[w] & within & ~used).bit_count(), w))
        path.append(v)
        used |= 1 << v


def _rotate_extend(rows: Sequence[int], within: int, path: list[int], used: int,
                   budget: int) -> Optional[list[int]]:
    """Posa rotations of the tail; returns a rotated path whose new tail has a free neighbour."""
    seen = {path[-1]}
    queue = [path]
    while queue and budget > 0:
        q = queue.pop(0)
        end = q[-1]
        if rows[end] & within & ~used:
            return q
        pos = {v: i for i, v in enumerate(q)}
        for w in bits(rows[end] & used):
            k = pos[w]
            if k >= len(q) - 2:
                continue
            new_end = q[k + 1]
            if new_end in seen:
                continue
            seen.add(new_end)
            budget -= 1
            queue.append(q[:k + 1] + q[k + 1:][::-1])
    return None


def long_path(rows: Sequence[int], within: int, start: Optional[int] = None,
              budget: Optional[int] = None) -> list[int]:
    """A long path inside ``within`` found by greedy growth, Posa rotations and cycle opening."""
    if not within:
        return []
    if start is None:
        start = _lowest(within)
    n_in = within.bit_count()
    budget = budget if budget is not None else 4 * n_in + 16
    path, used = _grow(rows, within, [start], 1 << start)
    path.reverse()
    path, used = _grow(rows, within, path, used)
    while True:
        rotated = _rotate_extend(rows, within, path, used, budget)
        if rotated is None:
            rotated = _rotate_extend(rows, within, path[::-1], used, budget)
        if rotated is not None:
            path, used = _grow(rows, within, list(rotated), used)
            continue
        if len(path) >= 3 and rows[path[0]] >> path[-1] & 1:
            opened = None
            for k, v in enumerate(path):
                free = rows[v] & within & ~used
                if free:
                    w = _lowest(free)
                    opened = path[k + 1:] + path[:k + 1] + [w]
                    break
            if opened is not None:
                path, used = _grow(rows, within, opened, used | (1 << opened[-1]))
                continue
        return path


# -- Erdos-Gallai -------------------------------------------------------------------
def _edges_in(rows: Sequence[int], within: int) -> int:
    return sum((rows[v] & within).bit_count() for v in bits(within)) // 2


def dense_core(rows: Sequence[int], within: int, ell: int) -> int:
    """Shrink to a 2-connected (or single-edge) piece keeping |E| > ell(|V|-1)/2 and min degree > ell/2.

    Deleting a vertex of degree <= ell/2 keeps the edge inequality; among
    the blocks at least one inherits it because the block sizes minus one
    sum to at most |V| - 1.
    """
    while True:
        changed = True
        while changed:
            changed = False
            for v in bits(within):
                if 2 * (rows[v] & within).bit_count() <= ell:
                    within &= ~(1 << v)
                    changed = True
        h = nx.Graph()
        h.add_nodes_from(bits(within))
        h.add_edges_from((u, v) for u in bits(within) for v in bits(rows[u] & within) if u < v)
        blocks = sorted(sorted(b) for b in nx.biconnected_components(h))
        if len(blocks) == 1 and len(blocks[0]) == within.bit_count():
            return within
        for b in blocks:
            bm = mask_of(b)
            if 2 * _edges_in(rows, bm) > ell * (len(b) - 1):
                within = bm
                break
        else:
            raise InternalContradiction("no block inherits the edge-density bound")


def _cycles_from_path(rows: Sequence[int], path: list[int]) -> list[int]:
    best: list[int] = []
    first, last = path[0], path[-1]
    for end_path in (path, path[::-1]):
        x = end_path[0]
        ks = [i for i, v in enumerate(end_path) if rows[x] >> v & 1]
        if ks and ks[-1] >= 2 and ks[-1] + 1 > len(best):
            best = end_path[:ks[-1] + 1]
    if len(path) >= 3 and rows[first] >> last & 1:
        return list(path)
    for i in range(1, len(path) - 2):
        if rows[first] >> path[i + 1] & 1 and rows[path[i]] >> last & 1:
            return [first] + path[i + 1:] + path[1:i + 1][::-1]
    return best


def _search_cycle(rows: Sequence[int], within: int, target: int) -> Optional[list[int]]:
    """Depth-first search for a cycle with at least ``target`` vertices; its minimum vertex is the start."""
    for s in bits(within):
        allowed = within & ~((1 << (s + 1)) - 1)
        if allowed.bit_count() + 1 < target:
            break
        path = [s]

        def reach(v: int, used: int) -> int:
            seen = 1 << v
            frontier = seen
            pool = allowed & ~used
            while frontier:
                nxt = 0
                for u in bits(frontier):
                    nxt |= rows[u]
                nxt &= pool & ~seen
                seen |= nxt
                frontier = nxt
            return seen.bit_count()

        def dfs(v: int, used: int) -> bool:
            if len(path) >= target and rows[v] >> s & 1:
                return True
            if len(path) - 1 + reach(v, used & ~(1 << v)) < target:
                return False
            for w in bits(rows[v] & allowed & ~used):
                path.append(w)
                if dfs(w, used | (1 << w)):
                    return True
                path.pop()
            return False

        if dfs(s, 1 << s):
            return path
    return None


def erdos_gallai_cycle(g: ColoredGraph, ell: int, color: Optional[Color] = None,
                       vertices: Optional[Iterable[int]] = None) -> CycleSeq:
    """A cycle on at least ell + 1 vertices in a graph with more than ell(n-1)/2 edges.

    A single edge counts as a cycle (needed for ell = 1), a single vertex for ell = 0.
    """
    rows = g.rows(color)
    within = g.full_mask if vertices is None else mask_of(vertices)
    n = within.bit_count()
    m = _edges_in(rows, within)
    if ell < 0 or 2 * m <= ell * (n - 1):
        raise PreconditionViolated(f"need more than {ell}*(n-1)/2 = {ell * (n - 1) / 2} edges, have {m}")
    target = ell + 1
    core = dense_core(rows, within, ell)
    if target <= 2:
        v = _lowest(core)
        cyc = [v] if target == 1 else [v, _lowest(rows[v] & core)]
        return CycleSeq(tuple(cyc), color)
    path = long_path(rows, core)
    cyc = _cycles_from_path(rows, path)
    if len(cyc) < target:
        found = _search_cycle(rows, core, target)
        if found is None:
            raise InternalContradiction(f"no cycle on {target} vertices in a dense 2-connected core")
        cyc = found
    out = CycleSeq(tuple(cyc), color)
    assert out.is_valid(g) and len(cyc) >= target
    return out


def kst_edge_bound(n: int, p: int, relaxed: bool = False) -> float:
    """Kovari-Sos-Turan: most edges of a K_{p,p}-free graph on n vertices.

    ``relaxed`` gives the cruder ``2 p n^(2 - 1/p)``.
    """
    if p < 1:
        raise PreconditionViolated("p must be at least 1")
    if relaxed:
        return 2 * p * n ** (2 - 1 / p)
    return (p - 1) ** (1 / p) * n ** (2 - 1 / p) + (p - 1) * n


def _complement_free(g: ColoredGraph, p: int) -> bool:
    if p == 2:
        return not complement_contains(g, "C4")
    return not complement_contains(g, "Kpp", p)


def quarter_threshold(p: int) -> int:
    return (10 * p) ** p


def mono_cycle_quarter(g: ColoredGraph, p: int) -> tuple[CycleSeq, bool]:
    """Long cycle in the majority color when the complement has no K_{p,p}.

    Returns the cycle and whether the n/4 length is guaranteed (n >= (10p)^p).
    """
    if not _complement_free(g, p):
        raise PreconditionViolated(f"complement contains K_{{{p},{p}}}")
    n = g.n
    color = RED if g.edge_count(RED) >= g.edge_count(BLUE) else BLUE
    m = g.edge_count(color)
    guaranteed = n >= quarter_threshold(p)
    if n == 0:
        return CycleSeq((), color), guaranteed
    if m == 0 or n == 1:
        return CycleSeq((0,), color), guaranteed
    ell = (2 * m - 1) // (n - 1)
    cyc = erdos_gallai_cycle(g, ell, color)
    if guaranteed and 4 * len(cyc) < n:
        raise InternalContradiction(f"majority-color cycle of length {len(cyc)} < n/4")
    return cyc, guaranteed


def bipartite_threshold(p: int, eps: float) -> float:
    return (50 * p) ** p / eps


def bipartite_long_path(a: Sequence[int], b: Sequence[int], edges: Iterable[tuple[int, int]],
                        p: int, eps: float) -> tuple[PathSeq, bool]:
    """Long path in a balanced bipartite graph whose bipartite complement has no K_{p,p}.

    Repeatedly finds a path in the unused parts of both classes and splices it
    onto the tail of the current path through an edge between the two tails.
    Returns the path and whether the (2 - eps) m edge length is guaranteed.
    """
    a, b = list(a), list(b)
    if len(a) != len(b):
        raise PreconditionViolated("classes must have equal size")
    if set(a) & set(b):
        raise PreconditionViolated("classes must be disjoint")
    edges = list(edges)
    if bipartite_complement_contains_kpp(a, b, edges, p):
        raise PreconditionViolated(f"bipartite complement contains K_{{{p},{p}}}")
    m = len(a)
    labels = a + b
    local = {v: i for i, v in enumerate(labels)}
    rows = [0] * len(labels)
    for u, v in edges:
        if u in local and v in local and (local[u] < m) != (local[v] < m):
            rows[local[u]] |= 1 << local[v]
            rows[local[v]] |= 1 << local[u]
    full = (1 << len(labels)) - 1
    path = long_path(rows, full)
    target = (2 - eps) * m
    a_mask = (1 << m) - 1
    while len(path) - 1 < target:
        used = mask_of(path)
        free_a = [v for v in bits(a_mask & ~used)]
        free_b = [v for v in bits(full & ~a_mask & ~used)]
        k = min(len(free_a), len(free_b))
        if k == 0:
            break
        other = long_path(rows, mask_of(free_a[:k] + free_b[:k]))
        best = None
        for s in range(len(path)):
            for t, w in enumerate(other):
                if rows[path[s]] >> w & 1:
                    cand = path[:s + 1] + (other[t::-1] if t + 1 >= len(other) - t else other[t:])
                    if best is None or len(cand) > len(best):
                        best = cand
        if best is None or len(best) <= len(path):
            break
        path = _extend_both(rows, full, best)
    guaranteed = m >= bipartite_threshold(p, eps)
    if guaranteed and len(path) - 1 < target:
        raise InternalContradiction("bipartite path shorter than (2 - eps) m")
    return PathSeq(tuple(labels[v] for v in path)), guaranteed


def _extend_both(rows: Sequence[int], within: int, path: list[int]) -> list[int]:
    used = mask_of(path)
    path, used = _grow(rows, within, list(path), used)
    path.reverse()
    path, used = _grow(rows, within, path, used)
    return path
