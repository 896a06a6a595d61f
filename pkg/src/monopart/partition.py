"""Partitions into monochromatic connected matchings, cycles, edges and vertices."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Callable, Iterable, Optional, Sequence

import networkx as nx

from .cover import ComponentCover, component_cover
from .errors import CapExceeded
from .graph import (
    BLUE,
    DEFAULT_INDEPENDENCE_CAP,
    RED,
    Color,
    ColoredGraph,
    bits,
    component_index,
    independence_number,
    is_cycle,
    mask_of,
)


class PieceKind(str, enum.Enum):
    CONNECTED_MATCHING = "connected_matching"
    SPANNING_CYCLE = "spanning_cycle"
    SINGLE_EDGE = "single_edge"
    SINGLE_VERTEX = "single_vertex"


@dataclass(frozen=True)
class PartitionPiece:
    kind: PieceKind
    color: Optional[Color]
    vertices: tuple[int, ...]
    edges: tuple[tuple[int, int], ...] = ()
    witness_component: Optional[int] = None

    def to_json(self) -> dict:
        out = {
            "kind": self.kind.value,
            "color": None if self.color is None else self.color.value,
            "vertices": list(self.vertices),
            "edges": [list(e) for e in self.edges],
        }
        if self.witness_component is not None:
            out["witness_component"] = self.witness_component
        return out


def max_matching(g: ColoredGraph, color: Optional[Color] = None,
                 vertices: Optional[Iterable[int]] = None) -> list[tuple[int, int]]:
    """Maximum-cardinality matching of the ``color`` edges (all edges if None) inside ``vertices``."""
    within = g.full_mask if vertices is None else mask_of(vertices)
    return _rows_matching(g.rows(color), within)


# -- Posa procedure ----------------------------------------------------------------
def _maximal_path(rows: Sequence[int], within: int) -> list[int]:
    start = (within & -within).bit_length() - 1
    path = [start]
    used = 1 << start
    while True:
        nxt = rows[path[-1]] & within & ~used
        if not nxt:
            break
        v = (nxt & -nxt).bit_length() - 1
        path.append(v)
        used |= 1 << v
    head = []
    while True:
        end = head[-1] if head else path[0]
        nxt = rows[end] & within & ~used
        if not nxt:
            break
        v = (nxt & -nxt).bit_length() - 1
        head.append(v)
        used |= 1 << v
    return head[::-1] + path


def posa_steps(rows: Sequence[int], within: int, color: Optional[Color],
               discard: Optional[Callable[[int, int], int]] = None) -> tuple[list[PartitionPiece], int]:
    """Run the Posa peeling procedure on the graph ``rows`` restricted to ``within``.

    ``discard(x, remaining)`` may return a mask of extra vertices to throw
    away after each step (used by the perturbed variant).  Returns the pieces
    and the mask of discarded vertices.
    """
    pieces = []
    dropped = 0
    left = within
    while left:
        path = _maximal_path(rows, left)
        x = path[0]
        nbrs = rows[x] & left
        deg = nbrs.bit_count()
        if deg == 0:
            piece = PartitionPiece(PieceKind.SINGLE_VERTEX, None, (x,))
        elif deg == 1:
            y = path[1]
            piece = PartitionPiece(PieceKind.SINGLE_EDGE, color, (x, y), ((min(x, y), max(x, y)),))
        else:
            k = max(i for i, v in enumerate(path) if nbrs >> v & 1)
            cyc = tuple(path[:k + 1])
            edges = tuple((min(u, v), max(u, v)) for u, v in zip(cyc, cyc[1:] + cyc[:1]))
            piece = PartitionPiece(PieceKind.SPANNING_CYCLE, color, cyc, edges)
        pieces.append(piece)
        left &= ~mask_of(piece.vertices)
        if discard is not None:
            extra = discard(x, left) & left
            dropped |= extra
            left &= ~extra
    return pieces, dropped


def posa_partition(g: ColoredGraph, color: Optional[Color] = None,
                   vertices: Optional[Iterable[int]] = None) -> list[PartitionPiece]:
    """Split the vertices into at most alpha parts: spanning cycles, edges or single vertices."""
    within = g.full_mask if vertices is None else mask_of(vertices)
    return posa_steps(g.rows(color), within, color)[0]


# -- connected matching partition -----------------------------------------------------
@dataclass(frozen=True)
class PartitionDetail:
    pieces: tuple[PartitionPiece, ...]
    cover: ComponentCover
    doubly: tuple[int, ...]      # A: residue covered by a red and a blue component
    red_only: tuple[int, ...]    # S: residue covered only by red components (blue edges remain)
    blue_only: tuple[int, ...]   # T: residue covered only by blue components (red edges remain)


def matching_pieces(g: ColoredGraph, cover: ComponentCover, allowed: int) -> tuple[list[PartitionPiece], int]:
    """Largest red matchings in the chosen red components, then blue ones in what is left.

    Returns the non-empty matching pieces and the mask of matched vertices.
    """
    red_index = component_index(g, RED)
    blue_index = component_index(g, BLUE)
    pieces = []
    used = 0
    order = [vs for c, vs in cover.components if c is RED] + [vs for c, vs in cover.components if c is BLUE]
    colors = [RED] * len(cover.red) + [BLUE] * len(cover.blue)
    for comp, col in zip(order, colors):
        rows = g.rows(col)
        within = mask_of(comp) & allowed & ~used
        m = _rows_matching(rows, within)
        if not m:
            continue
        vs = tuple(sorted(v for e in m for v in e))
        used |= mask_of(vs)
        witness = (red_index if col is RED else blue_index)[comp[0]]
        pieces.append(PartitionPiece(PieceKind.CONNECTED_MATCHING, col, vs, tuple(m), witness))
    return pieces, used


def _rows_matching(rows: Sequence[int], within: int) -> list[tuple[int, int]]:
    h = nx.Graph()
    for u in bits(within):
        for v in bits(rows[u] & within):
            if u < v:
                h.add_edge(u, v)
    if h.number_of_edges() == 0:
        return []
    return sorted((min(e), max(e)) for e in nx.max_weight_matching(h, maxcardinality=True))


def residue_classes(cover: ComponentCover, residue: int) -> tuple[int, int, int]:
    red_cov = mask_of(v for vs in cover.red for v in vs)
    blue_cov = mask_of(v for vs in cover.blue for v in vs)
    a = residue & red_cov & blue_cov
    s = residue & red_cov & ~blue_cov
    t = residue & blue_cov & ~red_cov
    assert a | s | t == residue
    return a, s, t


def check_residue(rows_red: Sequence[int], rows_blue: Sequence[int], a: int, s: int, t: int) -> None:
    """After the matchings: A is isolated, S spans only blue edges, T only red, and no S-T edges."""
    residue = a | s | t
    for v in bits(a):
        assert not ((rows_red[v] | rows_blue[v]) & residue), f"vertex {v} of A is not isolated"
    for v in bits(s):
        assert not (rows_red[v] & residue), f"red edge at {v} inside S"
        assert not (rows_blue[v] & t), f"edge between S and T at {v}"
    for v in bits(t):
        assert not (rows_blue[v] & residue), f"blue edge at {v} inside T"
        assert not (rows_red[v] & s), f"edge between S and T at {v}"


def partition_details(g: ColoredGraph, cap: Optional[int] = DEFAULT_INDEPENDENCE_CAP) -> PartitionDetail:
    cover = component_cover(g)
    rr, rb = g.rows(RED), g.rows(BLUE)
    pieces, used = matching_pieces(g, cover, g.full_mask)
    a, s, t = residue_classes(cover, g.full_mask & ~used)
    check_residue(rr, rb, a, s, t)
    pieces += [PartitionPiece(PieceKind.SINGLE_VERTEX, None, (v,)) for v in bits(a)]
    s_pieces = posa_steps(rb, s, BLUE)[0]
    t_pieces = posa_steps(rr, t, RED)[0]
    pieces += s_pieces + t_pieces

    p_q = len(cover.components)
    if cap is None or g.n <= cap:
        alpha = independence_number(g, cap=cap)
        bound = a.bit_count() + independence_number(g, bits(s), cap) + independence_number(g, bits(t), cap)
        assert p_q <= alpha and bound <= alpha, "residual independence bound fails"
        assert len(pieces) <= 2 * alpha, f"{len(pieces)} pieces exceed 2*alpha = {2 * alpha}"
    else:
        try:
            sa = independence_number(g, bits(s), cap)
            ta = independence_number(g, bits(t), cap)
        except CapExceeded:
            pass
        else:
            assert len(s_pieces) <= sa and len(t_pieces) <= ta
    detail = PartitionDetail(tuple(pieces), cover, tuple(bits(a)), tuple(bits(s)), tuple(bits(t)))
    check_partition(g, detail.pieces)
    return detail


def connected_matching_partition(g: ColoredGraph,
                                 cap: Optional[int] = DEFAULT_INDEPENDENCE_CAP) -> list[PartitionPiece]:
    """Partition V(g) into at most 2*alpha(g) monochromatic parts.

    Each part is a connected matching, a spanning cycle, an edge or a vertex.
    """
    return list(partition_details(g, cap).pieces)


def check_piece(g: ColoredGraph, piece: PartitionPiece, forbidden: frozenset = frozenset()) -> None:
    """Assert the internal invariants of one piece; ``forbidden`` edges may not be used."""
    vs = piece.vertices
    assert len(set(vs)) == len(vs)
    for u, v in piece.edges:
        assert (min(u, v), max(u, v)) not in forbidden, f"piece uses forbidden edge {(u, v)}"
    if piece.kind is PieceKind.SINGLE_VERTEX:
        assert len(vs) == 1 and not piece.edges
    elif piece.kind is PieceKind.SINGLE_EDGE:
        (u, v), = piece.edges
        assert set(vs) == {u, v} and g.has_edge(u, v, piece.color)
    elif piece.kind is PieceKind.SPANNING_CYCLE:
        assert len(vs) >= 3 and is_cycle(g, vs, piece.color)
    else:
        touched = [v for e in piece.edges for v in e]
        assert len(touched) == len(set(touched)), "matching edges overlap"
        assert sorted(touched) == sorted(vs)
        assert all(g.has_edge(u, v, piece.color) for u, v in piece.edges)
        index = component_index(g, piece.color)
        assert len({index[v] for v in vs}) == 1, "matching is not connected"
        assert index[vs[0]] == piece.witness_component


def check_partition(g: ColoredGraph, pieces: Sequence[PartitionPiece],
                    ground: Optional[Iterable[int]] = None) -> None:
    seen: list[int] = []
    for piece in pieces:
        check_piece(g, piece)
        seen.extend(piece.vertices)
    assert len(seen) == len(set(seen)), "pieces overlap"
    target = set(range(g.n)) if ground is None else set(ground)
    assert set(seen) == target, "pieces do not cover the ground set"
