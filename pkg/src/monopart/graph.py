"""Two-edge-colored simple graphs and the basic queries on them.

Vertices are the integers ``0..n-1``.  Every edge carries exactly one of
the two colors; non-edges are the "black" edges of the complement.
Adjacency is kept twice: as an edge dictionary and as one bitmask row per
vertex and color (bit ``u`` of ``rows[v]`` is set when ``uv`` is an edge).
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Sequence

from .errors import CapExceeded, GraphFormatError, InvalidParams

DEFAULT_INDEPENDENCE_CAP = 40


class Color(str, enum.Enum):
    RED = "r"
    BLUE = "b"

    @property
    def other(self) -> "Color":
        return Color.BLUE if self is Color.RED else Color.RED

    def __str__(self) -> str:
        return "red" if self is Color.RED else "blue"


RED = Color.RED
BLUE = Color.BLUE


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def _key(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


class ColoredGraph:
    """Immutable simple graph whose edges are colored red or blue."""

    __slots__ = ("_n", "_edges", "_red", "_blue", "_adj")

    def __init__(self, n: int, edges: Iterable[tuple[int, int, Color | str]] = ()):
        if n < 0:
            raise InvalidParams(f"vertex count must be non-negative, got {n}")
        self._n = n
        table: dict[tuple[int, int], Color] = {}
        red = [0] * n
        blue = [0] * n
        for u, v, c in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise InvalidParams(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise InvalidParams(f"self-loop at {u}")
            k = _key(u, v)
            if k in table:
                raise InvalidParams(f"duplicate edge {k}")
            c = Color(c)
            table[k] = c
            rows = red if c is RED else blue
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        self._edges = table
        self._red = tuple(red)
        self._blue = tuple(blue)
        self._adj = tuple(r | b for r, b in zip(red, blue))

    # -- basic accessors ---------------------------------------------------
    @property
    def n(self) -> int:
        return self._n

    @property
    def full_mask(self) -> int:
        return (1 << self._n) - 1

    def __len__(self) -> int:
        return self._n

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ColoredGraph):
            return NotImplemented
        return self._n == other._n and self._edges == other._edges

    def __hash__(self) -> int:
        return hash((self._n, frozenset(self._edges.items())))

    def __repr__(self) -> str:
        return f"ColoredGraph(n={self._n}, red={self.edge_count(RED)}, blue={self.edge_count(BLUE)})"

    def rows(self, color: Optional[Color] = None) -> tuple[int, ...]:
        """Adjacency bitmask rows for one color, or for all edges if ``color`` is None."""
        if color is None:
            return self._adj
        return self._red if Color(color) is RED else self._blue

    def color(self, u: int, v: int) -> Optional[Color]:
        """Color of edge ``uv``, or None for a non-edge (black pair)."""
        return self._edges.get(_key(u, v))

    def has_edge(self, u: int, v: int, color: Optional[Color] = None) -> bool:
        c = self._edges.get(_key(u, v))
        if c is None:
            return False
        return color is None or c is color

    def edges(self) -> list[tuple[int, int, Color]]:
        return [(u, v, c) for (u, v), c in sorted(self._edges.items())]

    def edge_list(self, color: Optional[Color] = None) -> list[tuple[int, int]]:
        return [(u, v) for (u, v), c in sorted(self._edges.items()) if color is None or c is color]

    def edge_count(self, color: Optional[Color] = None) -> int:
        if color is None:
            return len(self._edges)
        return sum(1 for c in self._edges.values() if c is color)

    def neighbors(self, v: int, color: Optional[Color] = None) -> list[int]:
        return list(bits(self.rows(color)[v]))

    def degree(self, v: int, color: Optional[Color] = None) -> int:
        return self.rows(color)[v].bit_count()

    def min_degree(self) -> int:
        return min((r.bit_count() for r in self._adj), default=0)

    def complement_rows(self) -> tuple[int, ...]:
        full = self.full_mask
        return tuple(full & ~r & ~(1 << v) for v, r in enumerate(self._adj))

    # -- derived graphs ------------------------------------------------------
    def subgraph(self, vertices: Iterable[int]) -> tuple["ColoredGraph", tuple[int, ...]]:
        """Induced subgraph relabeled to ``0..k-1``; returns it with the old ids."""
        old = tuple(sorted(set(vertices)))
        new = {v: i for i, v in enumerate(old)}
        edges = [(new[u], new[v], c) for (u, v), c in self._edges.items() if u in new and v in new]
        return ColoredGraph(len(old), edges), old

    def without_edges(self, pairs: Iterable[tuple[int, int]]) -> "ColoredGraph":
        drop = {_key(u, v) for u, v in pairs}
        return ColoredGraph(self._n, [(u, v, c) for (u, v), c in self._edges.items() if (u, v) not in drop])

    def swapped(self) -> "ColoredGraph":
        """The same graph with red and blue exchanged."""
        return ColoredGraph(self._n, [(u, v, c.other) for (u, v), c in self._edges.items()])


# -- paths and cycles --------------------------------------------------------
@dataclass(frozen=True)
class PathSeq:
    """Sequence of distinct vertices; consecutive ones are joined by ``color`` edges.

    ``color=None`` means any edge of the graph may be used.
    """

    vertices: tuple[int, ...]
    color: Optional[Color] = None

    def __len__(self) -> int:
        return len(self.vertices)

    def is_valid(self, g: ColoredGraph) -> bool:
        return is_path(g, self.vertices, self.color)


@dataclass(frozen=True)
class CycleSeq:
    """Like :class:`PathSeq` but the last vertex is also joined to the first.

    Empty, single-vertex and single-edge sequences count as cycles.
    """

    vertices: tuple[int, ...]
    color: Optional[Color] = None

    def __len__(self) -> int:
        return len(self.vertices)

    def is_valid(self, g: ColoredGraph) -> bool:
        return is_cycle(g, self.vertices, self.color)


def is_path(g: ColoredGraph, seq: Sequence[int], color: Optional[Color] = None) -> bool:
    if len(set(seq)) != len(seq) or any(not 0 <= v < g.n for v in seq):
        return False
    return all(g.has_edge(u, v, color) for u, v in zip(seq, seq[1:]))


def is_cycle(g: ColoredGraph, seq: Sequence[int], color: Optional[Color] = None) -> bool:
    if not is_path(g, seq, color):
        return False
    if len(seq) <= 2:
        return True
    return g.has_edge(seq[-1], seq[0], color)


# -- components --------------------------------------------------------------
def components_of_rows(rows: Sequence[int], within: int) -> list[list[int]]:
    """Connected components of the graph given by ``rows`` restricted to mask ``within``."""
    out = []
    left = within
    while left:
        low = left & -left
        comp = low
        frontier = low
        while frontier:
            nxt = 0
            for v in bits(frontier):
                nxt |= rows[v]
            nxt &= within & ~comp
            comp |= nxt
            frontier = nxt
        out.append(list(bits(comp)))
        left &= ~comp
    return out


def monochromatic_components(g: ColoredGraph, color: Color,
                             vertices: Optional[Iterable[int]] = None) -> list[list[int]]:
    """Components of the ``color`` subgraph, ordered by smallest vertex.

    Vertices without an edge of that color are singleton components, so the
    result partitions the vertex set (or ``vertices`` when given).
    """
    within = g.full_mask if vertices is None else mask_of(vertices)
    return components_of_rows(g.rows(Color(color)), within)


def component_index(g: ColoredGraph, color: Color) -> list[int]:
    """``index[v]`` = position of v's ``color`` component in :func:`monochromatic_components`."""
    index = [0] * g.n
    for i, comp in enumerate(monochromatic_components(g, color)):
        for v in comp:
            index[v] = i
    return index


# -- independence number -----------------------------------------------------
def _max_clique(rows: Sequence[int], cand: int) -> int:
    """Maximum clique inside ``cand`` by branch and bound with greedy coloring bounds."""
    best = 0
    best_size = 0

    def color_order(p: int) -> list[tuple[int, int]]:
        # Greedy coloring of the candidate set; each color class is an
        # independent set, so the number of classes bounds any clique.
        order = []
        uncolored = p
        k = 0
        while uncolored:
            k += 1
            avail = uncolored
            while avail:
                low = avail & -avail
                v = low.bit_length() - 1
                order.append((v, k))
                uncolored &= ~low
                avail &= ~low & ~rows[v]
        return order

    def expand(clique: int, size: int, p: int) -> None:
        nonlocal best, best_size
        order = color_order(p)
        for v, k in reversed(order):
            if size + k <= best_size:
                return
            new_p = p & rows[v]
            if new_p:
                expand(clique | (1 << v), size + 1, new_p)
            elif size + 1 > best_size:
                best, best_size = clique | (1 << v), size + 1
            p &= ~(1 << v)

    if cand:
        expand(0, 0, cand)
    return best


def maximum_independent_set(g: ColoredGraph, vertices: Optional[Iterable[int]] = None,
                            cap: Optional[int] = DEFAULT_INDEPENDENCE_CAP) -> list[int]:
    """A largest set of pairwise non-adjacent vertices (w.r.t. all colored edges)."""
    within = g.full_mask if vertices is None else mask_of(vertices)
    size = within.bit_count()
    if cap is not None and size > cap:
        raise CapExceeded(f"independence number requested on {size} vertices (cap {cap})")
    return list(bits(_max_clique(g.complement_rows(), within)))


def independence_number(g: ColoredGraph, vertices: Optional[Iterable[int]] = None,
                        cap: Optional[int] = DEFAULT_INDEPENDENCE_CAP) -> int:
    """Exact alpha(G) (or of the subgraph induced by ``vertices``)."""
    return len(maximum_independent_set(g, vertices, cap))


# -- forbidden complement patterns ---------------------------------------------
def contains_kpp(rows: Sequence[int], p: int, within: int) -> bool:
    """Does the graph given by ``rows`` on ``within`` contain K_{p,p} as a subgraph?"""
    if p <= 0:
        return True
    verts = list(bits(within))
    for side in itertools.combinations(verts, p):
        common = within
        for v in side:
            common &= rows[v]
            if common.bit_count() < p:
                break
        else:
            return True
    return False


def contains_c4(rows: Sequence[int], within: int) -> bool:
    """C4 subgraph exists iff two vertices have two common neighbours."""
    verts = list(bits(within))
    for i, u in enumerate(verts):
        ru = rows[u] & within
        if ru.bit_count() < 2:
            continue
        for v in verts[i + 1:]:
            if (ru & rows[v]).bit_count() >= 2:
                return True
    return False


def complement_contains(g: ColoredGraph, pattern: str, p: int = 2,
                        vertices: Optional[Iterable[int]] = None) -> bool:
    """Whether the complement of ``g`` contains ``pattern`` ("C4" or "Kpp") as a subgraph."""
    within = g.full_mask if vertices is None else mask_of(vertices)
    comp = g.complement_rows()
    pattern = pattern.upper()
    if pattern == "C4":
        return contains_c4(comp, within)
    if pattern == "KPP":
        if p > 3:
            raise CapExceeded(f"K_{{p,p}} search only supported for p <= 3, got {p}")
        return contains_kpp(comp, p, within)
    raise InvalidParams(f"unknown pattern {pattern!r}")


def bipartite_complement_contains_kpp(a: Sequence[int], b: Sequence[int],
                                      edges: Iterable[tuple[int, int]], p: int) -> bool:
    """K_{p,p} in the bipartite complement between ``a`` and ``b``, one side in each class."""
    aset, bset = set(a), set(b)
    present: dict[int, set[int]] = {v: set() for v in a}
    for u, v in edges:
        if u in aset and v in bset:
            present[u].add(v)
        elif v in aset and u in bset:
            present[v].add(u)
    missing = {v: bset - present[v] for v in a}
    for side in itertools.combinations(list(a), p):
        common = set(bset)
        for v in side:
            common &= missing[v]
        if len(common) >= p:
            return True
    return False


# -- file format ---------------------------------------------------------------
def parse_graph(text: str) -> tuple[ColoredGraph, frozenset[tuple[int, int]]]:
    """Parse the line format ``n <count>`` / ``u v c[!]``.

    Returns the graph and the set of edges marked perturbed with ``!``.
    Integer tokens are vertex ids and must lie in ``0..n-1``; any other token
    is a label, mapped to the next free id in order of first appearance.
    """
    n: Optional[int] = None
    edges = []
    perturbed = set()
    seen = set()
    labels: dict[str, int] = {}

    def vid(tok: str, lineno: int) -> int:
        assert n is not None
        try:
            v = int(tok)
        except ValueError:
            if tok not in labels:
                taken = set(labels.values())
                free = next((i for i in range(n) if i not in taken), None)
                if free is None:
                    raise GraphFormatError(f"line {lineno}: too many vertex labels for n={n}")
                labels[tok] = free
            return labels[tok]
        if not 0 <= v < n:
            raise GraphFormatError(f"line {lineno}: vertex {v} out of range 0..{n - 1}")
        return v

    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if n is None:
            if len(parts) != 2 or parts[0] != "n":
                raise GraphFormatError(f"line {lineno}: expected header 'n <count>'")
            try:
                n = int(parts[1])
            except ValueError:
                raise GraphFormatError(f"line {lineno}: bad vertex count {parts[1]!r}") from None
            if n < 0:
                raise GraphFormatError(f"line {lineno}: negative vertex count")
            continue
        if len(parts) != 3:
            raise GraphFormatError(f"line {lineno}: expected 'u v c'")
        u, v = vid(parts[0], lineno), vid(parts[1], lineno)
        tag = parts[2]
        marked = tag.endswith("!")
        tag = tag.rstrip("!")
        if tag not in ("r", "b"):
            raise GraphFormatError(f"line {lineno}: color must be r or b, got {parts[2]!r}")
        if u == v:
            raise GraphFormatError(f"line {lineno}: self-loop at {u}")
        k = _key(u, v)
        if k in seen:
            raise GraphFormatError(f"line {lineno}: duplicate edge {k}")
        seen.add(k)
        edges.append((u, v, Color(tag)))
        if marked:
            perturbed.add(k)
    if n is None:
        raise GraphFormatError("missing header 'n <count>'")
    return ColoredGraph(n, edges), frozenset(perturbed)


def format_graph(g: ColoredGraph, perturbed: Iterable[tuple[int, int]] = (),
                 comment: Optional[str] = None) -> str:
    marked = {_key(u, v) for u, v in perturbed}
    lines = []
    if comment:
        lines.extend(f"# {c}" for c in comment.splitlines())
    lines.append(f"n {g.n}")
    for u, v, c in g.edges():
        lines.append(f"{u} {v} {c.value}{'!' if (u, v) in marked else ''}")
    return "\n".join(lines) + "\n"


def read_graph(path) -> ColoredGraph:
    with open(path, encoding="utf-8") as fh:
        return parse_graph(fh.read())[0]


def write_graph(path, g: ColoredGraph, perturbed: Iterable[tuple[int, int]] = (),
                comment: Optional[str] = None) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_graph(g, perturbed, comment))
