"""Component covers and partitions of graphs with a few marked (perturbed) edges.

Perturbed edges may not be used by any cover component, matching or cycle.
A bounded set of vertices is given up instead: vertices carrying many
perturbed edges, a maximal family of witness sets that block a small cover,
and the vertices sending perturbed edges into those witnesses.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from typing import Iterable, Optional

from .cover import ComponentCover, DualMultigraph, cover_from_dual
from .errors import CapExceeded, InternalContradiction, PreconditionViolated
from .graph import BLUE, RED, Color, ColoredGraph, bits, components_of_rows, independence_number, mask_of
from .partition import (
    PartitionPiece,
    check_partition,
    check_residue,
    matching_pieces,
    posa_steps,
    residue_classes,
)

MAX_ALPHA = 2


def _edge_key(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class PerturbedGraph:
    base: ColoredGraph
    perturbed: frozenset
    eps: float

    def __init__(self, base: ColoredGraph, perturbed: Iterable[tuple[int, int]], eps: Optional[float] = None):
        marks = frozenset(_edge_key(u, v) for u, v in perturbed)
        for u, v in marks:
            if not base.has_edge(u, v):
                raise PreconditionViolated(f"perturbed pair {(u, v)} is not an edge")
        pairs = base.n * (base.n - 1) / 2
        if eps is None:
            eps = len(marks) / pairs if pairs else 0.0
        if len(marks) > eps * pairs + 1e-9:
            raise PreconditionViolated(f"{len(marks)} perturbed edges exceed eps * C(n, 2) = {eps * pairs:g}")
        object.__setattr__(self, "base", base)
        object.__setattr__(self, "perturbed", marks)
        object.__setattr__(self, "eps", float(eps))

    @property
    def n(self) -> int:
        return self.base.n

    @property
    def reduced(self) -> ColoredGraph:
        """The base graph without its perturbed edges."""
        return self.base.without_edges(self.perturbed)

    def perturbed_rows(self) -> list[int]:
        rows = [0] * self.n
        for u, v in self.perturbed:
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return rows

    @property
    def unit(self) -> float:
        """sqrt(eps) * n, the scale of every loss bound."""
        return math.sqrt(self.eps) * self.n


# -- Ramsey bound --------------------------------------------------------------------
def multicolor_triangle_ramsey(k: int) -> int:
    """Upper bound on R_k(3) from R_k(3) <= k (R_{k-1}(3) - 1) + 2, starting at R_1(3) = 3."""
    r = 3
    for colors in range(2, k + 1):
        r = colors * (r - 1) + 2
    return r


def ramsey_bound(alpha: int) -> int:
    """Upper bound on the c-color Ramsey number with c = 3^(alpha^2).

    The first c - 1 colors ask for a triangle, the last for a clique on alpha + 1
    vertices.  For alpha = 1 the last color is satisfied by any edge, leaving
    c - 1 = 2 triangle colors; for alpha = 2 it asks for a triangle too.
    """
    if alpha < 1:
        raise PreconditionViolated("alpha must be positive")
    if alpha > MAX_ALPHA:
        raise CapExceeded(f"Ramsey bound for alpha={alpha} is beyond the supported range (alpha <= {MAX_ALPHA})")
    c = 3 ** (alpha * alpha)
    return multicolor_triangle_ramsey(c - 1 if alpha == 1 else c)


def loss_factor(alpha: int) -> int:
    """f(alpha) = 1 + 2 R (alpha + 1)."""
    return 1 + 2 * ramsey_bound(alpha) * (alpha + 1)


# -- cover ----------------------------------------------------------------------------
@dataclass(frozen=True)
class WitnessHypergraph:
    """Sets of alpha + 1 vertices, no two in a common monochromatic component of the reduced graph."""
    size: int
    hyperedges: tuple[tuple[int, ...], ...]
    selected: tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class PerturbedCover:
    cover: ComponentCover
    leftover: tuple[int, ...]
    heavy: tuple[int, ...]                     # X
    witnesses: WitnessHypergraph
    blocked: tuple[int, ...]                   # Z = selected witnesses plus Y
    alpha: int

    @property
    def components(self) -> tuple[tuple[Color, tuple[int, ...]], ...]:
        return self.cover.components

    def to_json(self) -> dict:
        return {
            "components": [{"color": c.value, "vertices": list(vs)} for c, vs in self.components],
            "leftover": list(self.leftover),
            "heavy": list(self.heavy),
            "witnesses": [list(t) for t in self.witnesses.selected],
            "alpha": self.alpha,
        }


def _alpha(g: ColoredGraph) -> int:
    comp = g.complement_rows()
    for u in range(g.n):
        for v in bits(comp[u] & ~((2 << u) - 1)):
            if comp[u] & comp[v] & ~((2 << v) - 1):
                raise CapExceeded(f"independence number above {MAX_ALPHA} is not supported")
    return independence_number(g, cap=None)


def _strip_heavy(pert: list[int], alive: int, limit: float) -> int:
    """Greedily delete the vertex with most perturbed edges until none has more than ``limit``."""
    heavy = 0
    while True:
        worst = max(bits(alive), key=lambda v: ((pert[v] & alive).bit_count(), -v), default=None)
        if worst is None or (pert[worst] & alive).bit_count() <= limit:
            return heavy
        heavy |= 1 << worst
        alive &= ~(1 << worst)


def perturbed_component_cover(pg: PerturbedGraph) -> PerturbedCover:
    """Cover all but a few vertices by at most alpha components of the reduced graph."""
    g = pg.base
    n = g.n
    if pg.eps > 0 and pg.unit < 1:
        raise PreconditionViolated(f"need n >= eps^(-1/2); n={n}, eps={pg.eps:g}")
    alpha = _alpha(g) if n else 0
    reduced = pg.reduced
    pert = pg.perturbed_rows()
    unit = pg.unit

    heavy = _strip_heavy(pert, g.full_mask, unit)
    if heavy.bit_count() > unit:
        raise InternalContradiction(f"{heavy.bit_count()} heavy vertices exceed sqrt(eps) n")
    alive = g.full_mask & ~heavy
    red_comps = components_of_rows(reduced.rows(RED), alive)
    blue_comps = components_of_rows(reduced.rows(BLUE), alive)
    rid = {v: i for i, c in enumerate(red_comps) for v in c}
    bid = {v: j for j, c in enumerate(blue_comps) for v in c}

    size = alpha + 1
    hyperedges = []
    selected: list[tuple[int, ...]] = []
    taken = 0
    for t in itertools.combinations(bits(alive), size):
        if len({rid[v] for v in t}) < size or len({bid[v] for v in t}) < size:
            continue
        hyperedges.append(t)
        tm = mask_of(t)
        if tm & taken or any(pert[v] & taken for v in t):
            continue
        selected.append(t)
        taken |= tm
    bound = ramsey_bound(alpha) if alpha else 1
    if len(selected) >= bound:
        raise InternalContradiction(f"{len(selected)} independent witnesses, Ramsey bound is {bound}")
    senders = 0
    for v in bits(alive & ~taken):
        if pert[v] & taken:
            senders |= 1 << v
    blocked = taken | senders
    ground = alive & ~blocked

    dual = DualMultigraph.from_components(red_comps, blue_comps, bits(ground))
    raw = cover_from_dual(dual)
    if raw.size > alpha:
        raise InternalContradiction(f"cover of the unblocked part needs {raw.size} > alpha = {alpha} components")
    covered = mask_of(v for _, vs in raw.components for v in vs)
    leftover = g.full_mask & ~covered
    f = loss_factor(alpha) if alpha else 1
    if pg.perturbed and leftover.bit_count() > f * unit + 1e-9:
        raise InternalContradiction(f"{leftover.bit_count()} uncovered vertices exceed f(alpha) sqrt(eps) n")
    if not pg.perturbed and leftover:
        raise InternalContradiction("unperturbed cover left vertices uncovered")
    _check_reduced_components(reduced, raw)
    witnesses = WitnessHypergraph(size, tuple(hyperedges), tuple(selected))
    return PerturbedCover(raw, tuple(bits(leftover)), tuple(bits(heavy)), witnesses,
                          tuple(bits(blocked)), alpha)


def _check_reduced_components(reduced: ColoredGraph, cover: ComponentCover) -> None:
    # each chosen component must be connected without perturbed edges
    for col, vs in cover.components:
        parts = components_of_rows(reduced.rows(col), mask_of(vs))
        assert len(parts) == 1, f"{col} component {vs[:5]}... is not connected in the reduced graph"


# -- partition ---------------------------------------------------------------------
@dataclass(frozen=True)
class PerturbedPartition:
    pieces: tuple[PartitionPiece, ...]
    leftover: tuple[int, ...]
    cover: PerturbedCover
    discarded: tuple[int, ...] = field(default=())

    def to_json(self) -> dict:
        return {
            "pieces": [p.to_json() for p in self.pieces],
            "leftover": list(self.leftover),
            "cover": self.cover.to_json(),
        }


def perturbed_partition(pg: PerturbedGraph) -> PerturbedPartition:
    """Partition all but a few vertices into at most 2 alpha monochromatic pieces avoiding perturbed edges."""
    pc = perturbed_component_cover(pg)
    g = pg.base
    reduced = pg.reduced
    pert = pg.perturbed_rows()
    ground = g.full_mask & ~mask_of(pc.leftover)

    pieces, used = matching_pieces(reduced, pc.cover, ground)
    a, s, t = residue_classes(pc.cover, ground & ~used)
    rr, rb = reduced.rows(RED), reduced.rows(BLUE)
    check_residue(rr, rb, a, s, t)

    # Posa peeling on A, then S, then T; after each step the perturbed
    # neighbours of the chosen end vertex leave every remaining class.
    remaining = a | s | t
    dropped = 0
    for part, rows, col in ((a, rb, BLUE), (s, rb, BLUE), (t, rr, RED)):
        outside = remaining & ~part

        def discard(x: int, left: int) -> int:
            nonlocal outside, dropped
            hit = pert[x] & (left | outside)
            dropped |= hit
            outside &= ~hit
            return hit

        part_pieces, _ = posa_steps(rows, part & remaining, col, discard)
        pieces += part_pieces
        remaining = outside
    leftover = mask_of(pc.leftover) | dropped

    alpha = pc.alpha
    f = loss_factor(alpha) if alpha else 1
    if leftover.bit_count() > (f + alpha) * pg.unit + 1e-9 and pg.perturbed:
        raise InternalContradiction("partition leftover exceeds (f(alpha) + alpha) sqrt(eps) n")
    if len(pieces) > 2 * alpha:
        raise InternalContradiction(f"{len(pieces)} pieces exceed 2 alpha = {2 * alpha}")
    check_partition(reduced, pieces, ground=bits(g.full_mask & ~leftover))
    return PerturbedPartition(tuple(pieces), tuple(bits(leftover)), pc, tuple(bits(dropped)))
