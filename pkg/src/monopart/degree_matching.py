"""Perfect matchings split into a red and a blue connected matching.

Works on graphs with an even number of vertices and minimum degree at least
3n/4.  The largest monochromatic component C1 and a complementary component
C2 of the other color are located, a few edges are deleted so that every
remaining edge of each color lies in one component, and a perfect matching
of what is left is extracted either from a Hamiltonian cycle (Bondy-Chvatal
closure) or directly by blossom matching.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Iterable, Optional

from .errors import CapExceeded, InternalContradiction, PreconditionViolated
from .graph import (
    BLUE,
    RED,
    Color,
    ColoredGraph,
    CycleSeq,
    bits,
    component_index,
    components_of_rows,
    mask_of,
    monochromatic_components,
)
from .partition import max_matching

TUTTE_CAP = 20


@dataclass(frozen=True)
class MatchingSplit:
    red_edges: tuple[tuple[int, int], ...]
    red_component: Optional[int]
    blue_edges: tuple[tuple[int, int], ...]
    blue_component: Optional[int]

    @property
    def edges(self) -> tuple[tuple[int, int], ...]:
        return tuple(sorted(self.red_edges + self.blue_edges))

    def to_json(self) -> dict:
        return {
            "red": {"edges": [list(e) for e in self.red_edges], "component": self.red_component},
            "blue": {"edges": [list(e) for e in self.blue_edges], "component": self.blue_component},
        }


@dataclass(frozen=True)
class CaseTrace:
    case: int
    primary_color: Color
    c1: tuple[int, ...]
    c2: tuple[int, ...]
    p: int
    q: int
    g1_edges: tuple[tuple[int, int, Color], ...]

    def to_json(self) -> dict:
        return {
            "case": self.case,
            "primary_color": self.primary_color.value,
            "C1": list(self.c1),
            "C2": list(self.c2),
            "p": self.p,
            "q": self.q,
            "G1_edges": [[u, v, c.value] for u, v, c in self.g1_edges],
        }


def chvatal_condition(degrees: Iterable[int]) -> bool:
    """Chvatal's degree-sequence condition: d_k <= k < n/2 implies d_{n-k} >= n-k."""
    d = sorted(degrees)
    n = len(d)
    if n < 3:
        return False
    for k in range(1, (n + 1) // 2):
        if 2 * k < n and d[k - 1] <= k and d[n - k - 1] < n - k:
            return False
    return True


def hamiltonian_cycle(g: ColoredGraph, color: Optional[Color] = None) -> CycleSeq:
    """Hamiltonian cycle of a graph satisfying Chvatal's condition.

    Builds the Bondy-Chvatal closure (which is complete under the condition),
    starts from the trivial cycle of the complete graph and removes closure
    edges in reverse insertion order, repairing the cycle with the crossing
    exchange each time a removed edge was on it.
    """
    n = g.n
    rows = list(g.rows(color))
    if n <= 2:
        if n == 2 and not rows[0]:
            raise PreconditionViolated("two isolated vertices have no spanning cycle")
        return CycleSeq(tuple(range(n)), color)
    if not chvatal_condition(r.bit_count() for r in rows):
        raise PreconditionViolated("degree sequence fails Chvatal's condition")

    added: list[tuple[int, int]] = []
    changed = True
    while changed:
        changed = False
        for u in range(n):
            for v in range(u + 1, n):
                if not rows[u] >> v & 1 and rows[u].bit_count() + rows[v].bit_count() >= n:
                    rows[u] |= 1 << v
                    rows[v] |= 1 << u
                    added.append((u, v))
                    changed = True
    full = (1 << n) - 1
    if any(rows[v] | (1 << v) != full for v in range(n)):
        raise InternalContradiction("closure of a Chvatal graph is not complete")

    cyc = list(range(n))
    for u, v in reversed(added):
        rows[u] &= ~(1 << v)
        rows[v] &= ~(1 << u)
        pos = {x: i for i, x in enumerate(cyc)}
        i, j = pos[u], pos[v]
        if (i - j) % n not in (1, n - 1):
            continue
        # rotate so the cycle reads as a path from v to u
        if (i - j) % n == n - 1:
            start = j
        else:
            start = i
            u, v = v, u
        path = cyc[start:] + cyc[:start]
        assert path[0] == v and path[-1] == u
        first, last = path[0], path[-1]
        for k in range(1, n - 2):
            if rows[first] >> path[k + 1] & 1 and rows[path[k]] >> last & 1:
                cyc = [first] + path[k + 1:] + path[1:k + 1][::-1]
                break
        else:
            raise InternalContradiction(f"no crossing exchange for closure edge {(u, v)}")
    out = CycleSeq(tuple(cyc), color)
    assert out.is_valid(g) and len(set(cyc)) == n
    return out


def tutte_violator(g: ColoredGraph, color: Optional[Color] = None,
                   cap: int = TUTTE_CAP) -> Optional[tuple[int, ...]]:
    """A set X whose removal leaves more than |X| odd components, or None if a perfect matching exists."""
    n = g.n
    if n > cap:
        raise CapExceeded(f"Tutte search on {n} vertices (cap {cap})")
    if 2 * len(max_matching(g, color)) == n:
        return None
    rows = g.rows(color)
    full = g.full_mask
    for size in range(n + 1):
        for xs in itertools.combinations(range(n), size):
            rest = full & ~mask_of(xs)
            odd = sum(1 for comp in components_of_rows(rows, rest) if len(comp) % 2)
            if odd > size:
                return xs
    raise InternalContradiction("no Tutte set found for a graph without a perfect matching")


def _largest(comps: list[list[int]]) -> list[int]:
    return min(comps, key=lambda c: (-len(c), c[0]))


def degmatch_split(g: ColoredGraph) -> tuple[MatchingSplit, CaseTrace]:
    """Perfect matching = red connected matching + blue connected matching, for delta >= 3n/4."""
    n = g.n
    if n % 2:
        raise PreconditionViolated(f"n must be even, got {n}")
    need = math.ceil(3 * n / 4)
    if n and g.min_degree() < need:
        raise PreconditionViolated(f"minimum degree {g.min_degree()} < ceil(3n/4) = {need}")
    if n == 0:
        return MatchingSplit((), None, (), None), CaseTrace(1, RED, (), (), 0, 0, ())

    reds = monochromatic_components(g, RED)
    blues = monochromatic_components(g, BLUE)
    best_red, best_blue = _largest(reds), _largest(blues)
    if len(best_red) >= len(best_blue):
        c1_color, c1 = RED, best_red
    else:
        c1_color, c1 = BLUE, best_blue
    c2_color = c1_color.other
    if 4 * len(c1) < 3 * n:
        raise InternalContradiction(f"largest monochromatic component has {len(c1)} < 3n/4 vertices")

    c1_set = set(c1)
    others = blues if c2_color is BLUE else reds
    outside = [v for v in range(n) if v not in c1_set]
    if outside:
        c2 = next(c for c in others if outside[0] in c)
        if not set(outside) <= set(c2):
            raise InternalContradiction("vertices outside C1 are not in one component of the other color")
    else:
        c2 = _largest(others)
    c2_set = set(c2)
    only1 = c1_set - c2_set
    only2 = c2_set - c1_set
    p, q = len(only1), len(only2)
    assert p >= q

    drop = [(u, v) for u, v in g.edge_list(c2_color) if u in only1 and v in only1]
    drop += [(u, v) for u, v in g.edge_list(c1_color) if u in only2 and v in only2]
    g1 = g.without_edges(drop)

    if len(c1) < n:
        case = 1
    elif 2 * p <= n:
        case = 2
    else:
        case = 3
    if case in (1, 2):
        try:
            cyc = hamiltonian_cycle(g1).vertices
        except PreconditionViolated as exc:
            raise InternalContradiction(f"case {case}: reduced graph not Hamiltonian-certified ({exc})") from exc
        edges = [tuple(sorted(cyc[k:k + 2])) for k in range(0, n, 2)]
    else:
        edges = max_matching(g1)
        if 2 * len(edges) != n:
            raise InternalContradiction("case 3: reduced graph has no perfect matching")

    split_edges: dict[Color, list[tuple[int, int]]] = {RED: [], BLUE: []}
    for u, v in sorted(edges):
        split_edges[g.color(u, v)].append((u, v))
    witness: dict[Color, Optional[int]] = {}
    for col in (RED, BLUE):
        index = component_index(g, col)
        ids = {index[v] for e in split_edges[col] for v in e}
        if len(ids) > 1:
            raise InternalContradiction(f"{col} part of the matching is not connected")
        witness[col] = ids.pop() if ids else None
    split = MatchingSplit(tuple(split_edges[RED]), witness[RED], tuple(split_edges[BLUE]), witness[BLUE])
    trace = CaseTrace(case, c1_color, tuple(c1), tuple(c2), p, q, tuple(g1.edges()))
    return split, trace


def check_split(g: ColoredGraph, split: MatchingSplit) -> None:
    touched = [v for e in split.edges for v in e]
    assert sorted(touched) == list(range(g.n)), "not a perfect matching"
    for col, edges, comp in ((RED, split.red_edges, split.red_component),
                             (BLUE, split.blue_edges, split.blue_component)):
        assert all(g.has_edge(u, v, col) for u, v in edges)
        index = component_index(g, col)
        assert all(index[u] == comp and index[v] == comp for u, v in edges)
