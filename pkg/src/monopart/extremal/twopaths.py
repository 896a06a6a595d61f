"""Local search for a blue path and a disjoint red path covering as many vertices as possible.

The state is a pair (blue path, red path).  A move rewrites it into another
pair; a move is accepted only if the result is valid and strictly improves
the objective, so every run terminates.  Moves are tried in a fixed order
and the first improving one is applied.

Most moves are exchange templates on a *view* of the state: the pair is
read as ``(a, b)`` where ``a`` has color ``ca`` and ``b`` has the other
color, possibly with colors swapped and either path reversed.  A template
only proposes a candidate; validity is always checked edge by edge, so a
template that does not fit the current graph is simply rejected.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Callable, Iterator, Optional, Sequence

from ..errors import InternalContradiction, PreconditionViolated
from ..graph import BLUE, RED, Color, ColoredGraph, PathSeq, bits, complement_contains, mask_of
from .longpaths import long_path, mono_cycle_quarter

Pair = tuple[list[int], list[int]]  # (blue, red)


@dataclass(frozen=True)
class PathPair:
    blue_path: PathSeq
    red_path: PathSeq
    uncovered: tuple[int, ...]

    @property
    def covered(self) -> int:
        return len(self.blue_path.vertices) + len(self.red_path.vertices)

    def to_json(self) -> dict:
        return {
            "blue_path": list(self.blue_path.vertices),
            "red_path": list(self.red_path.vertices),
            "uncovered": list(self.uncovered),
            "covered": self.covered,
        }


@dataclass(frozen=True)
class Move:
    name: str
    before: tuple[int, ...]
    after: tuple[int, ...]


@dataclass
class SearchTrace:
    moves: list[Move] = field(default_factory=list)

    def objectives_increase(self) -> bool:
        return all(m.after > m.before for m in self.moves) and all(
            a.after == b.before for a, b in zip(self.moves, self.moves[1:]))

    def to_json(self) -> list[dict]:
        return [{"move": m.name, "before": list(m.before), "after": list(m.after)} for m in self.moves]


@dataclass
class SearchResult:
    pair: PathPair
    trace: SearchTrace
    guaranteed: bool


def balanced_objective(i: int, j: int) -> tuple[int, ...]:
    return (i + j, -abs(i - j))


def coverage_objective(i: int, j: int) -> tuple[int, ...]:
    return (i + j,)


# -- exchange templates ------------------------------------------------------------
# Each entry: name, minimum |a|, minimum |b|, rewrite.
_ONE: list[tuple[str, int, int, Callable]] = [
    ("extend", 0, 0, lambda a, b, x: (a + [x], b)),
    ("cross-shift", 1, 1, lambda a, b, x: ([x, b[0]], b[1:])),
    ("cross-claim", 1, 1, lambda a, b, x: ([x, b[0]] + a, b[1:])),
    ("chord-close", 1, 3, lambda a, b, x: (a[::-1] + [b[0], b[-1], x], b[1:-1])),
    ("chord-b2-same", 1, 3, lambda a, b, x: ([b[0]] + a + [b[1], x], b[2:])),
    ("chord-b2-reversed", 1, 3, lambda a, b, x: ([b[0]] + a[::-1] + [b[1], x], b[2:])),
    ("tail-swap", 2, 2, lambda a, b, x: ([b[0]] + a[:-1], [x, a[-1]] + b[1:])),
    ("tail-hand-over", 2, 1, lambda a, b, x: (a[:-1], [x, a[-1]] + b)),
    ("tail-b2-detour", 3, 2, lambda a, b, x: ([b[0]] + a[:-1] + [x, b[1]], [a[-1]])),
    ("tail-b2-close", 3, 2, lambda a, b, x: ([b[0]] + a[:-1] + [b[1]], [a[-1], x])),
    ("tail-b1-other", 2, 2, lambda a, b, x: (a[:-1], [b[1], b[0], a[-1], x])),
    ("tail-b1-wrap", 3, 2, lambda a, b, x: ([x, a[-2], a[-1], b[0]] + a[:-2], [b[1]])),
    ("tail-rebalance", 4, 2, lambda a, b, x: ([b[0]] + a[:-2], [b[1], a[-2], x])),
    ("short-a-fold", 3, 2, lambda a, b, x: ([a[-1]], [b[0], b[1], a[-2], x, a[0]])),
    ("short-a-wrap", 3, 2, lambda a, b, x: ([a[-1], b[0], a[0], a[1], x], [b[1]])),
]

_TWO: list[tuple[str, int, int, Callable]] = [
    ("fresh-edge", 0, 0, lambda a, b, x, y: ([x, y], b)),
    ("split-tail", 2, 2, lambda a, b, x, y: ([b[0]] + a[:-1], [x, a[-1], y])),
    ("red-detour", 3, 2, lambda a, b, x, y: (a[:-2], [b[0], b[1], a[-2], x, a[-1]])),
    ("tail-pair-same", 2, 1, lambda a, b, x, y: (a[:-1] + [x, y], b)),
    ("tail-pair-other", 2, 1, lambda a, b, x, y: ([b[0]] + a[:-1], [a[-1], x, y])),
    ("tail-pair-weave", 3, 1, lambda a, b, x, y: ([b[0]] + a[:-2], [a[-1], x, a[-2], y])),
    ("tail-pair-split", 2, 1, lambda a, b, x, y: ([b[0]] + a[:-1] + [y], [a[-1], x])),
    ("head-rebalance", 4, 1, lambda a, b, x, y: (a[1:], [x, a[0], y])),
    ("short-a-1", 3, 2, lambda a, b, x, y: ([b[0], a[0], a[1], y, b[1]], [a[-1], x])),
    ("short-a-2", 3, 1, lambda a, b, x, y: ([b[0]], [a[-1], x, a[0], y, a[1]])),
    ("short-a-3", 3, 2, lambda a, b, x, y: ([b[0], a[0], a[1], b[1], y], [a[-1], x])),
    ("short-a-4", 3, 2, lambda a, b, x, y: ([], [a[1], b[1], b[0], a[-1], x, a[0], y])),
    ("short-a-5", 3, 2, lambda a, b, x, y: ([a[1]], [b[1], b[0], a[-1], x, a[0], y])),
    ("short-a-6", 3, 1, lambda a, b, x, y: ([b[0], a[-1], a[1]], [x, a[0], y])),
    ("tail-swap-pair", 2, 2, lambda a, b, x, y: ([b[0]] + a[:-1], [x, a[-1], y] + b[1:])),
    ("ends-swap-pair", 3, 2, lambda a, b, x, y: (a[1:-1], [y, a[-1], x, a[0]] + b[1:])),
    ("chord-pair", 1, 3, lambda a, b, x, y: (a[::-1] + [b[1], x, b[-1], y], b[2:-1])),
]


def _views(blue: list[int], red: list[int]) -> Iterator[tuple[list[int], list[int], Color, bool]]:
    """(a, b, color of a, swapped) for every color swap and orientation."""
    for swapped in (False, True):
        p, q = (red, blue) if swapped else (blue, red)
        ca = RED if swapped else BLUE
        for pa in ([p, p[::-1]] if len(p) > 1 else [p]):
            for qb in ([q, q[::-1]] if len(q) > 1 else [q]):
                yield pa, qb, ca, swapped


class PairSearch:
    """First-improvement local search over (blue path, red path) pairs."""

    def __init__(self, g: ColoredGraph, objective: Callable[[int, int], tuple[int, ...]],
                 extra_moves: Sequence[Callable[["PairSearch"], Iterator[tuple[str, Pair]]]] = ()):
        self.g = g
        self.objective = objective
        self.blue: list[int] = []
        self.red: list[int] = []
        self.trace = SearchTrace()
        self.extra_moves = list(extra_moves)

    # state helpers
    @property
    def score(self) -> tuple[int, ...]:
        return self.objective(len(self.blue), len(self.red))

    def uncovered(self) -> list[int]:
        used = set(self.blue) | set(self.red)
        return [v for v in range(self.g.n) if v not in used]

    def valid(self, blue: Sequence[int], red: Sequence[int]) -> bool:
        if len(set(blue)) + len(set(red)) != len(set(blue) | set(red)):
            return False
        if len(set(blue)) != len(blue) or len(set(red)) != len(red):
            return False
        g = self.g
        if any(not 0 <= v < g.n for v in itertools.chain(blue, red)):
            return False
        return all(g.has_edge(u, v, BLUE) for u, v in zip(blue, blue[1:])) and all(
            g.has_edge(u, v, RED) for u, v in zip(red, red[1:]))

    def offer(self, name: str, blue: list[int], red: list[int]) -> bool:
        new = self.objective(len(blue), len(red))
        old = self.score
        if new <= old or not self.valid(blue, red):
            return False
        self.trace.moves.append(Move(name, old, new))
        self.blue, self.red = list(blue), list(red)
        return True

    # candidate generators
    def template_moves(self) -> Iterator[tuple[str, Pair]]:
        free = self.uncovered()
        for a, b, ca, swapped in _views(self.blue, self.red):
            for name, min_a, min_b, fn in _ONE:
                if len(a) < min_a or len(b) < min_b:
                    continue
                for x in free:
                    na, nb = fn(a, b, x)
                    yield name, ((nb, na) if swapped else (na, nb))
            for name, min_a, min_b, fn in _TWO:
                if len(a) < min_a or len(b) < min_b:
                    continue
                for x, y in itertools.permutations(free, 2):
                    na, nb = fn(a, b, x, y)
                    yield name, ((nb, na) if swapped else (na, nb))

    def restart_moves(self) -> Iterator[tuple[str, Pair]]:
        """Fresh short pairs: two disjoint edges of different colors, or a 3-vertex path and a vertex."""
        if len(self.blue) + len(self.red) > 3:
            return
        g = self.g
        blue_edges = g.edge_list(BLUE)
        red_edges = g.edge_list(RED)
        for (u, v), (s, t) in itertools.product(blue_edges, red_edges):
            if len({u, v, s, t}) == 4:
                yield "restart-two-edges", ([u, v], [s, t])
        for col in (RED, BLUE):
            rows = g.rows(col)
            for mid in range(g.n):
                for u, w in itertools.combinations(bits(rows[mid]), 2):
                    for z in range(g.n):
                        if z not in (u, mid, w):
                            p3 = [u, mid, w]
                            yield "restart-path-vertex", (([z], p3) if col is RED else (p3, [z]))

    def rotation_moves(self) -> Iterator[tuple[str, Pair]]:
        """Reopen a path closed into a cycle, or Posa-rotate it, then try the one-vertex templates."""
        free = self.uncovered()
        if not free:
            return
        base = [t for t in _ONE if t[0] in ("extend", "cross-claim", "cross-shift")]
        for a, b, ca, swapped in _views(self.blue, self.red):
            rows = self.g.rows(ca)
            variants = []
            if len(a) >= 3 and rows[a[0]] >> a[-1] & 1:
                variants += [("cycle-rotate", a[k:] + a[:k]) for k in range(1, len(a))]
            for k in range(len(a) - 2):
                if rows[a[-1]] >> a[k] & 1:
                    variants.append(("posa-rotate", a[:k + 1] + a[k + 1:][::-1]))
            for label, ra in variants:
                for name, min_a, min_b, fn in base:
                    if len(b) < min_b:
                        continue
                    for x in free:
                        na, nb = fn(ra, b, x)
                        yield f"{label}+{name}", ((nb, na) if swapped else (na, nb))

    def insertion_moves(self) -> Iterator[tuple[str, Pair]]:
        """Put an uncovered vertex between two consecutive vertices of a path."""
        g = self.g
        for x in self.uncovered():
            for col, path in ((BLUE, self.blue), (RED, self.red)):
                for k in range(len(path) - 1):
                    if g.has_edge(path[k], x, col) and g.has_edge(x, path[k + 1], col):
                        new = path[:k + 1] + [x] + path[k + 1:]
                        yield "insert", ((new, self.red) if col is BLUE else (self.blue, new))

    def families(self) -> Iterator[Iterator[tuple[str, Pair]]]:
        yield self.template_moves()
        yield self.restart_moves()
        yield self.insertion_moves()
        yield self.rotation_moves()
        for extra in self.extra_moves:
            yield extra(self)

    def step(self) -> bool:
        for family in self.families():
            for name, (blue, red) in family:
                if self.offer(name, blue, red):
                    return True
        return False

    def run(self, max_moves: Optional[int] = None) -> None:
        limit = max_moves if max_moves is not None else max(self.g.n ** 2, 1) * 4
        for _ in range(limit):
            if not self.step():
                return
        raise InternalContradiction(f"local search exceeded {limit} moves")

    def result(self) -> PathPair:
        return PathPair(PathSeq(tuple(self.blue), BLUE), PathSeq(tuple(self.red), RED), tuple(self.uncovered()))


def _check_pair(g: ColoredGraph, pair: PathPair) -> None:
    assert pair.blue_path.is_valid(g) and pair.red_path.is_valid(g)
    seen = pair.blue_path.vertices + pair.red_path.vertices + pair.uncovered
    assert sorted(seen) == list(range(g.n))


# -- single path ----------------------------------------------------------------------
def c4free_single_path(g: ColoredGraph) -> PathSeq:
    """A path over edges of both colors missing at most one vertex, when the complement has no C4.

    With two uncovered vertices x, y and path ends a, b, one of ax, xb, by, ya
    is an edge (otherwise they would form a C4 of non-edges), so the path
    can be extended or closed into a cycle and reopened.
    """
    if complement_contains(g, "C4"):
        raise PreconditionViolated("complement contains a C4")
    rows = g.rows()
    if g.n == 0:
        return PathSeq(())
    start = next((v for v in range(g.n) if rows[v]), 0)
    path = long_path(rows, g.full_mask, start)
    while g.n - len(path) >= 2:
        free = [v for v in range(g.n) if v not in set(path)]
        a, b = path[0], path[-1]
        grown = None
        for x, y in itertools.permutations(free, 2):
            if rows[b] >> x & 1:
                grown = path + [x]
            elif rows[a] >> x & 1:
                grown = [x] + path
            elif len(path) >= 2 and rows[x] >> a & 1 and rows[y] >> b & 1:
                grown = [x] + path + [y]
            if grown:
                break
        if grown is None and len(path) >= 3 and rows[a] >> b & 1:
            for k, v in enumerate(path):
                hit = next((x for x in free if rows[v] >> x & 1), None)
                if hit is not None:
                    grown = path[k + 1:] + path[:k + 1] + [hit]
                    break
        if grown is None:
            raise InternalContradiction(f"path stuck with {g.n - len(path)} uncovered vertices")
        path = _regrow(rows, g.full_mask, grown)
    out = PathSeq(tuple(path))
    assert out.is_valid(g)
    return out


def _regrow(rows: Sequence[int], full: int, path: list[int]) -> list[int]:
    used = mask_of(path)
    for _ in range(2):
        while True:
            free = rows[path[-1]] & full & ~used
            if not free:
                break
            v = (free & -free).bit_length() - 1
            path.append(v)
            used |= 1 << v
        path.reverse()
    return path


# -- two paths, complement C4-free --------------------------------------------------
def c4free_two_paths(g: ColoredGraph) -> SearchResult:
    """Blue path + disjoint red path leaving at most one vertex uncovered.

    The guarantee needs n >= 7 and a complement without C4; otherwise the
    best pair found is returned with ``guaranteed`` false.
    """
    guaranteed = g.n >= 7 and not complement_contains(g, "C4")
    search = PairSearch(g, balanced_objective)
    search.run()
    pair = search.result()
    _check_pair(g, pair)
    if guaranteed and len(pair.uncovered) >= 2:
        raise InternalContradiction(f"search stuck with {len(pair.uncovered)} uncovered vertices")
    return SearchResult(pair, search.trace, guaranteed)


# -- two paths, complement K_{p,p}-free ---------------------------------------------
def _harvest_moves(search: PairSearch) -> Iterator[tuple[str, Pair]]:
    """Take a long monochromatic path from the uncovered part and splice or swap it in."""
    g = search.g
    free = search.uncovered()
    if len(free) < 2:
        return
    fm = mask_of(free)
    for col in (BLUE, RED):
        rows = g.rows(col)
        for s in free:
            cand = long_path(rows, fm, s)
            if len(cand) < 2:
                continue
            own = search.blue if col is BLUE else search.red
            other = search.red if col is BLUE else search.blue
            options = [cand]
            if own:
                for seq in (own, own[::-1]):
                    for c in (cand, cand[::-1]):
                        options.append(seq + c)
            for opt in options:
                pair = (opt, other) if col is BLUE else (other, opt)
                yield "harvest", pair


def _recolor_moves(search: PairSearch) -> Iterator[tuple[str, Pair]]:
    """Rebuild one path from the union of its vertices and the uncovered ones, keeping the other."""
    g = search.g
    free = mask_of(search.uncovered())
    if not free:
        return
    for col in (BLUE, RED):
        own = search.blue if col is BLUE else search.red
        other = search.red if col is BLUE else search.blue
        pool = free | mask_of(own)
        rows = g.rows(col)
        for s in bits(pool):
            new = long_path(rows, pool, s)
            yield "regrow", ((new, other) if col is BLUE else (other, new))


def _exchange_moves(search: PairSearch) -> Iterator[tuple[str, Pair]]:
    """Cut both paths and recombine: a prefix of one joined to a piece of the uncovered part."""
    g = search.g
    free = mask_of(search.uncovered())
    for col in (BLUE, RED):
        own = search.blue if col is BLUE else search.red
        other = search.red if col is BLUE else search.blue
        rows = g.rows(col)
        for k in range(1, len(other)):
            for keep, give in ((other[:k], other[k:]), (other[k:], other[:k])):
                pool = free | mask_of(give) | mask_of(own)
                best = None
                for s in (own[0], own[-1]) if own else bits(pool):
                    cand = long_path(rows, pool, s)
                    if best is None or len(cand) > len(best):
                        best = cand
                if best is not None:
                    yield "exchange", ((best, keep) if col is BLUE else (keep, best))


def _rebuild_moves(search: PairSearch) -> Iterator[tuple[str, Pair]]:
    """Grow a fresh long path of one color over all vertices, then the longest other-color path on the rest."""
    g = search.g
    full = g.full_mask
    for col in (BLUE, RED):
        rows, other_rows = g.rows(col), g.rows(col.other)
        for s in range(g.n):
            first = long_path(rows, full, s)
            rest = full & ~mask_of(first)
            second: list[int] = []
            for t in bits(rest):
                cand = long_path(other_rows, rest, t)
                if len(cand) > len(second):
                    second = cand
            yield "rebuild", ((first, second) if col is BLUE else (second, first))


def _complement_kpp_free(g: ColoredGraph, p: int) -> bool:
    if p == 2:
        return not complement_contains(g, "C4")
    return not complement_contains(g, "Kpp", p)


def _kpp_starts(g: ColoredGraph, p: int) -> Iterator[tuple[str, list[int], list[int]]]:
    """Starting pairs: empty, a long majority-color cycle, the balanced search, then long paths."""
    yield "empty", [], []
    seed, _ = mono_cycle_quarter(g, p)
    cyc = list(seed.vertices)
    yield ("seed-cycle", cyc, []) if seed.color is BLUE else ("seed-cycle", [], cyc)
    balanced = PairSearch(g, balanced_objective)
    balanced.run()
    yield "balanced-start", balanced.blue, balanced.red
    for s in range(g.n):
        yield "blue-start", long_path(g.rows(BLUE), g.full_mask, s), []
        yield "red-start", [], long_path(g.rows(RED), g.full_mask, s)


def kpp_uncovered_bound(p: int) -> int:
    return 1000 * (50 * p) ** p


def two_path_cover_kpp(g: ColoredGraph, p: int) -> SearchResult:
    """Blue path + disjoint red path covering as many vertices as the search can reach.

    Needs a complement without K_{p,p} (1 <= p <= 3).  The objective is the
    covered count alone; the classic exchanges are complemented by harvesting
    long monochromatic paths out of the uncovered part and by rebuilding a
    path over its own vertices plus the uncovered ones.  The search is
    restarted from several starting pairs and the best final pair is kept;
    its trace begins with the move that installed the start.
    """
    if not 1 <= p <= 3:
        raise PreconditionViolated(f"p must be 1, 2 or 3, got {p}")
    if not _complement_kpp_free(g, p):
        raise PreconditionViolated(f"complement contains K_{{{p},{p}}}")
    best: Optional[PairSearch] = None
    for name, blue, red in _kpp_starts(g, p):
        search = PairSearch(g, coverage_objective, [_harvest_moves, _recolor_moves, _exchange_moves, _rebuild_moves])
        if (blue or red) and not search.offer(name, blue, red):
            continue
        search.run()
        if best is None or search.score > best.score:
            best = search
        if not search.uncovered():
            break
    assert best is not None
    search = best
    pair = search.result()
    _check_pair(g, pair)
    if len(pair.uncovered) > kpp_uncovered_bound(p):
        raise InternalContradiction("uncovered count exceeds the guaranteed bound")
    return SearchResult(pair, search.trace, True)
