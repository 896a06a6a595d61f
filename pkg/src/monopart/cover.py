"""Minimum covers by monochromatic components via Koenig duality.

Red components are the left side of a bipartite multigraph, blue components
the right side, and every vertex ``v`` of the colored graph contributes the
edge (red component of v, blue component of v).  A maximum matching of this
dual gives the largest vertex set with no two vertices in a common
monochromatic component; the Koenig vertex cover built from it is a minimum
set of components covering every vertex, and the two have the same size.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Optional

from .graph import BLUE, RED, Color, ColoredGraph, monochromatic_components


@dataclass(frozen=True)
class DualMultigraph:
    red_components: tuple[tuple[int, ...], ...]
    blue_components: tuple[tuple[int, ...], ...]
    # edges[k] = (red component index, blue component index) of vertices[k]
    edges: tuple[tuple[int, int], ...]
    vertices: tuple[int, ...]

    @classmethod
    def of(cls, g: ColoredGraph) -> "DualMultigraph":
        reds = monochromatic_components(g, RED)
        blues = monochromatic_components(g, BLUE)
        return cls.from_components(reds, blues, range(g.n))

    @classmethod
    def from_components(cls, reds, blues, vertices) -> "DualMultigraph":
        """Dual on ``vertices``; every vertex must lie in exactly one listed component of each color."""
        reds = tuple(tuple(c) for c in reds)
        blues = tuple(tuple(c) for c in blues)
        rid = {v: i for i, comp in enumerate(reds) for v in comp}
        bid = {v: j for j, comp in enumerate(blues) for v in comp}
        vertices = tuple(vertices)
        return cls(reds, blues, tuple((rid[v], bid[v]) for v in vertices), vertices)

    def edge_of(self, v: int) -> tuple[int, int]:
        if self.vertices == tuple(range(len(self.vertices))):
            return self.edges[v]
        return self.edges[self.vertices.index(v)]

    @property
    def p(self) -> int:
        return len(self.red_components)

    @property
    def q(self) -> int:
        return len(self.blue_components)

    def left_adjacency(self) -> list[list[tuple[int, int]]]:
        """For each red component, its (blue component, vertex) dual edges in vertex order."""
        adj: list[list[tuple[int, int]]] = [[] for _ in range(self.p)]
        for v, (i, j) in zip(self.vertices, self.edges):
            adj[i].append((j, v))
        return adj


@dataclass(frozen=True)
class ComponentCover:
    """Chosen monochromatic components plus the Koenig certificate.

    ``matching`` lists graph vertices, one per matched dual edge; no two of
    them share a red or a blue component.  ``cover`` lists the chosen
    components as (color, component index) pairs in the dual.
    """

    components: tuple[tuple[Color, tuple[int, ...]], ...]
    matching: tuple[int, ...]
    cover: tuple[tuple[Color, int], ...]
    dual: DualMultigraph = field(repr=False)

    @property
    def size(self) -> int:
        return len(self.components)

    @property
    def red(self) -> list[tuple[int, ...]]:
        return [vs for c, vs in self.components if c is RED]

    @property
    def blue(self) -> list[tuple[int, ...]]:
        return [vs for c, vs in self.components if c is BLUE]

    def to_json(self) -> dict:
        return {
            "size": self.size,
            "components": [{"color": c.value, "vertices": list(vs)} for c, vs in self.components],
            "matching": list(self.matching),
        }


def hopcroft_karp(adj: list[list[tuple[int, int]]], q: int) -> tuple[list[Optional[tuple[int, int]]], list[Optional[int]]]:
    """Maximum matching of a bipartite multigraph.

    ``adj[i]`` lists (right vertex, edge label) pairs.  Returns ``match_l``
    with the matched (right, label) of each left vertex and ``match_r`` with
    the matched left vertex of each right vertex.
    """
    p = len(adj)
    match_l: list[Optional[tuple[int, int]]] = [None] * p
    match_r: list[Optional[int]] = [None] * q
    inf = p + q + 1

    while True:
        dist = [inf] * p
        queue = deque()
        for i in range(p):
            if match_l[i] is None:
                dist[i] = 0
                queue.append(i)
        found = False
        while queue:
            i = queue.popleft()
            for j, _ in adj[i]:
                k = match_r[j]
                if k is None:
                    found = True
                elif dist[k] == inf:
                    dist[k] = dist[i] + 1
                    queue.append(k)
        if not found:
            break

        def augment(i: int) -> bool:
            for j, label in adj[i]:
                k = match_r[j]
                if k is None or (dist[k] == dist[i] + 1 and augment(k)):
                    match_l[i] = (j, label)
                    match_r[j] = i
                    return True
            dist[i] = inf
            return False

        for i in range(p):
            if match_l[i] is None:
                augment(i)
    return match_l, match_r


def koenig_cover(adj: list[list[tuple[int, int]]], q: int,
                 match_l: list[Optional[tuple[int, int]]],
                 match_r: list[Optional[int]]) -> tuple[list[int], list[int]]:
    """Minimum vertex cover from a maximum matching (alternating search from free left vertices).

    Left vertices reachable from a free left vertex are excluded from every
    minimum cover, so this cover uses as many left vertices as possible.
    """
    p = len(adj)
    seen_l = [False] * p
    seen_r = [False] * q
    queue = deque(i for i in range(p) if match_l[i] is None)
    for i in queue:
        seen_l[i] = True
    while queue:
        i = queue.popleft()
        for j, _ in adj[i]:
            if seen_r[j]:
                continue
            seen_r[j] = True
            k = match_r[j]
            if k is not None and not seen_l[k]:
                seen_l[k] = True
                queue.append(k)
    left = [i for i in range(p) if not seen_l[i]]
    right = [j for j in range(q) if seen_r[j]]
    return left, right


def component_cover(g: ColoredGraph) -> ComponentCover:
    """Cover V(g) by the fewest monochromatic components (size = alpha_star(g))."""
    result = cover_from_dual(DualMultigraph.of(g))
    check_cover(g, result)
    return result


def cover_from_dual(dual: DualMultigraph) -> ComponentCover:
    """Koenig cover of the dual: the fewest listed components covering ``dual.vertices``."""
    adj = dual.left_adjacency()
    match_l, match_r = hopcroft_karp(adj, dual.q)
    left, right = koenig_cover(adj, dual.q, match_l, match_r)
    comps = tuple([(RED, dual.red_components[i]) for i in left]
                  + [(BLUE, dual.blue_components[j]) for j in right])
    cover = tuple([(RED, i) for i in left] + [(BLUE, j) for j in right])
    matching = tuple(sorted(m[1] for m in match_l if m is not None))
    return ComponentCover(comps, matching, cover, dual)


def alpha_star(g: ColoredGraph) -> int:
    """Largest number of vertices no two of which lie in a common monochromatic component."""
    dual = DualMultigraph.of(g)
    match_l, _ = hopcroft_karp(dual.left_adjacency(), dual.q)
    return sum(1 for m in match_l if m is not None)


def check_cover(g: ColoredGraph, cc: ComponentCover) -> None:
    """Re-validate both certificates; raises AssertionError on a broken invariant."""
    covered = set()
    for _, vs in cc.components:
        covered.update(vs)
    assert covered >= set(cc.dual.vertices), "components do not cover the ground set"
    if cc.dual.vertices == tuple(range(g.n)):
        assert covered == set(range(g.n))
    assert len(cc.components) == len(cc.matching), "Koenig equality fails"
    ends = [cc.dual.edge_of(v) for v in cc.matching]
    assert len({i for i, _ in ends}) == len({j for _, j in ends}) == len(ends), \
        "matching vertices share a component"
    # every dual edge must meet the cover
    chosen_r = {i for c, i in cc.cover if c is RED}
    chosen_b = {j for c, j in cc.cover if c is BLUE}
    assert all(i in chosen_r or j in chosen_b for i, j in cc.dual.edges)
