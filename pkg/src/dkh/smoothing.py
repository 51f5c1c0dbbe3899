"""The cube of smoothings.

Every token occurrence ``o`` (numbered through the components in order)
has an *in*-end ``2o`` and an *out*-end ``2o + 1``.  The arcs of the
diagram join the out-end of each token to the in-end of the next token on
its component.  Resolving a crossing with occurrences ``a`` and ``b`` adds
two more edges:

* oriented smoothing: ``in_a - out_b`` and ``in_b - out_a``;
* unoriented smoothing: ``in_a - in_b`` and ``out_a - out_b``.

The 0-resolution of a positive crossing and the 1-resolution of a negative
crossing are the oriented smoothing.  Cycles are the connected components
of the resulting 2-regular graph.  A crossingless component is a cycle on
its own and is represented by the single pseudo-end ``-(k + 1)``.

Words are tuples of bits indexed by the crossings in ascending id order.
Internally they are also packed into integers whose most significant bit
belongs to the smallest crossing id, so integer order is word order.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

from .diagram import VirtualLinkDiagram, degenerate_circles, gauss_diagram
from .errors import DiagramError

__all__ = [
    "SmoothingState", "EdgeData", "Cube", "MERGE", "SPLIT", "SINGLE",
    "resolve", "classify_edge", "edge_sign", "height",
    "enumerate_alternately_coloured", "enumerate_alternately_coloured_bruteforce",
    "acs_count", "cube",
]

MERGE, SPLIT, SINGLE = "merge", "split", "single"
RED, GREEN = "red", "green"


def _cycle_key(cyc: frozenset) -> tuple:
    lo = min(cyc)
    return (0, lo) if lo >= 0 else (1, -lo)


@dataclass(frozen=True)
class SmoothingState:
    """One vertex of the cube.

    ``cycles`` is in canonical order (by smallest end, crossingless
    components last) and ``end_cycle`` maps every end to its cycle index.
    """

    word: tuple[int, ...]
    cycles: tuple[frozenset, ...]
    end_cycle: dict

    @property
    def n_cycles(self) -> int:
        return len(self.cycles)

    @property
    def ones(self) -> int:
        return sum(self.word)


@dataclass(frozen=True)
class EdgeData:
    """How the cycles of two adjacent states correspond.

    ``src`` and ``tgt`` are the indices of the cycles touching the changed
    crossing (or saddle) before and after; ``carry`` lists
    ``(source index, target index)`` for every untouched cycle.
    """

    kind: str
    src: tuple[int, ...]
    tgt: tuple[int, ...]
    carry: tuple[tuple[int, int], ...]
    n_target: int


class Cube:
    """Cached cube-of-smoothings data for one diagram."""

    def __init__(self, d: VirtualLinkDiagram):
        self.d = d
        self.ids = d.crossings
        self.n = len(self.ids)
        self.pos = {c: k for k, c in enumerate(self.ids)}
        occ = []          # (component, position) for occurrence o
        index = {}
        for k, comp in enumerate(d.components):
            for p, _ in enumerate(comp):
                index[(k, p)] = len(occ)
                occ.append((k, p))
        self.occ = occ
        self.occ_index = index
        self.n_ends = 2 * len(occ)
        arcs = []
        for k, comp in enumerate(d.components):
            L = len(comp)
            for p in range(L):
                arcs.append((2 * index[(k, p)] + 1, 2 * index[(k, (p + 1) % L)]))
        self.arc_edges = arcs
        self.empty = [k for k, c in enumerate(d.components) if not c]
        # per crossing: in/out ends of the two occurrences, and orientation rule
        self.cross_ends = []
        self.oriented_bit = []
        for c in self.ids:
            (ka, pa), (kb, pb) = d.occurrences[c]
            a, b = index[(ka, pa)], index[(kb, pb)]
            self.cross_ends.append((2 * a, 2 * a + 1, 2 * b, 2 * b + 1))
            self.oriented_bit.append(0 if d.signs[c] > 0 else 1)
        self._states: dict[int, SmoothingState] = {}

    # -- words -------------------------------------------------------
    def word_of(self, w: int) -> tuple[int, ...]:
        n = self.n
        return tuple((w >> (n - 1 - k)) & 1 for k in range(n))

    def int_of(self, word: Sequence[int]) -> int:
        if len(word) != self.n:
            raise DiagramError(f"word has length {len(word)}, expected {self.n}")
        w = 0
        for b in word:
            w = (w << 1) | (1 if b else 0)
        return w

    def bit(self, k: int) -> int:
        """Integer mask of the crossing at canonical position ``k``."""
        return 1 << (self.n - 1 - k)

    def height(self, w: int) -> int:
        return bin(w).count("1") - self.d.n_minus

    # -- tracing -----------------------------------------------------
    def crossing_edges(self, k: int, bit: int) -> tuple[tuple[int, int], tuple[int, int]]:
        ia, oa, ib, ob = self.cross_ends[k]
        if bit == self.oriented_bit[k]:
            return (ia, ob), (ib, oa)
        return (ia, ib), (oa, ob)

    def trace(self, extra_edges) -> tuple[tuple[frozenset, ...], dict]:
        parent = list(range(self.n_ends))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for u, v in itertools.chain(self.arc_edges, extra_edges):
            ru, rv = find(u), find(v)
            if ru != rv:
                parent[ru] = rv
        groups: dict[int, set] = {}
        for e in range(self.n_ends):
            groups.setdefault(find(e), set()).add(e)
        cycles = [frozenset(g) for g in groups.values()]
        cycles += [frozenset({-(k + 1)}) for k in self.empty]
        cycles.sort(key=_cycle_key)
        end_cycle = {e: i for i, cyc in enumerate(cycles) for e in cyc}
        return tuple(cycles), end_cycle

    def state(self, w: int) -> SmoothingState:
        s = self._states.get(w)
        if s is None:
            word = self.word_of(w)
            edges = [e for k in range(self.n) for e in self.crossing_edges(k, word[k])]
            cycles, end_cycle = self.trace(edges)
            s = SmoothingState(word, cycles, end_cycle)
            self._states[w] = s
        return s

    def crossing_cycles(self, s: SmoothingState, k: int) -> tuple[int, ...]:
        return tuple(sorted({s.end_cycle[e] for e in self.cross_ends[k]}))

    def edge(self, w: int, k: int) -> EdgeData:
        """Cycle correspondence along the cube edge flipping crossing ``k`` in ``w``."""
        mask = self.bit(k)
        if w & mask:
            raise DiagramError("edge source must have bit 0 at the crossing")
        s, t = self.state(w), self.state(w | mask)
        return edge_between(s, t, self.crossing_cycles(s, k), self.crossing_cycles(t, k))

    def edge_sign(self, w: int, k: int) -> int:
        return -1 if bin(w >> (self.n - k)).count("1") % 2 else 1


def edge_between(s: SmoothingState, t: SmoothingState, src, tgt) -> EdgeData:
    src, tgt = tuple(src), tuple(tgt)
    if len(src) == 2 and len(tgt) == 1:
        kind = MERGE
    elif len(src) == 1 and len(tgt) == 2:
        kind = SPLIT
    elif len(src) == 1 and len(tgt) == 1:
        kind = SINGLE
    else:  # pragma: no cover - impossible for a single crossing change
        raise DiagramError("a cube edge changes the cycle count by at most one")
    lookup = {cyc: i for i, cyc in enumerate(t.cycles)}
    carry = tuple((i, lookup[cyc]) for i, cyc in enumerate(s.cycles) if i not in src)
    return EdgeData(kind, src, tgt, carry, len(t.cycles))


_CUBES: dict[VirtualLinkDiagram, Cube] = {}


def cube(d: VirtualLinkDiagram) -> Cube:
    """Return the (memoised) cube of ``d``."""
    c = _CUBES.get(d)
    if c is None:
        if len(_CUBES) > 64:
            _CUBES.clear()
        c = _CUBES[d] = Cube(d)
    return c


def resolve(d: VirtualLinkDiagram, w: Sequence[int]) -> SmoothingState:
    """Trace the cycles of the smoothing ``w``."""
    cb = cube(d)
    return cb.state(cb.int_of(w))


def _crossing_pos(d: VirtualLinkDiagram, c: int) -> int:
    try:
        return d.crossings.index(c)
    except ValueError:
        from .errors import UnknownCrossing
        raise UnknownCrossing(c) from None


def classify_edge(d: VirtualLinkDiagram, w: Sequence[int], c: int) -> str:
    """Return ``"merge"``, ``"split"`` or ``"single"`` for the edge at crossing ``c``."""
    cb = cube(d)
    return cb.edge(cb.int_of(w), _crossing_pos(d, c)).kind


def edge_sign(w: Sequence[int], c: int, crossings: Sequence[int] | None = None) -> int:
    """``(-1)`` to the number of 1-bits strictly before crossing ``c``.

    ``c`` is a position in the word unless ``crossings`` (the ascending id
    list) is given, in which case it is a crossing id.
    """
    k = list(crossings).index(c) if crossings is not None else c
    if w[k]:
        raise DiagramError("edge_sign needs a 0 bit at the crossing")
    return -1 if sum(w[:k]) % 2 else 1


def height(s: SmoothingState, d: VirtualLinkDiagram) -> int:
    """Number of 1-resolutions minus the number of negative crossings."""
    return s.ones - d.n_minus


def _segment_colour(base: int, p: int, end: str) -> int:
    # colour of the arc entering token p, or leaving it
    return base ^ ((p + (end == "out")) & 1)


def enumerate_alternately_coloured(d: VirtualLinkDiagram):
    """All alternately coloured smoothings with their colourings.

    A 2-colouring of the Gauss-diagram circles that flips at each chord
    endpoint fixes, at every crossing, the unique resolution joining equal
    colours.  Returns a list of ``(SmoothingState, {cycle: "red"|"green"})``.
    """
    if degenerate_circles(gauss_diagram(d)):
        return []
    cb = cube(d)
    comps = d.components
    out = []
    for bases in itertools.product((0, 1), repeat=len(comps)):
        word = []
        for c in cb.ids:
            (ka, pa), (kb, pb) = d.occurrences[c]
            oriented = (_segment_colour(bases[ka], pa, "in")
                        == _segment_colour(bases[kb], pb, "out"))
            obit = 0 if d.signs[c] > 0 else 1
            word.append(obit if oriented else 1 - obit)
        s = cb.state(cb.int_of(word))
        col = {}
        for i, cyc in enumerate(s.cycles):
            e = min(cyc)
            if e < 0:
                colour = bases[-e - 1]
            else:
                k, p = cb.occ[e // 2]
                colour = _segment_colour(bases[k], p, "out" if e % 2 else "in")
            col[i] = RED if colour == 0 else GREEN
        out.append((s, col))
    return out


def enumerate_alternately_coloured_bruteforce(d: VirtualLinkDiagram):
    """Same as :func:`enumerate_alternately_coloured` by exhaustive search.

    Tries every state and every 2-colouring of its cycles and keeps those in
    which the two local strands at every crossing differ in colour.  Only
    meant as an oracle on small diagrams.
    """
    cb = cube(d)
    found = []
    for w in range(1 << cb.n):
        s = cb.state(w)
        pairs = []
        for k in range(cb.n):
            e1, e2 = cb.crossing_edges(k, s.word[k])
            pairs.append((s.end_cycle[e1[0]], s.end_cycle[e2[0]]))
        for cols in itertools.product((0, 1), repeat=s.n_cycles):
            if all(cols[x] != cols[y] for x, y in pairs):
                found.append((s, {i: RED if c == 0 else GREEN for i, c in enumerate(cols)}))
    return found


def acs_count(d: VirtualLinkDiagram) -> int:
    """Number of alternately coloured smoothings (state, colouring pairs)."""
    if degenerate_circles(gauss_diagram(d)):
        return 0
    return 2 ** d.n_components


def disjoint_single_cycle_faces(d: VirtualLinkDiagram, limit: int | None = None):
    """Cube faces whose two edges are single-cycle changes of *different* cycles.

    On such a face the two composites of single-cycle maps differ (each
    map reads and rewrites the whole-string tag), so the cube does not
    square to zero.  Returns ``(word, crossing_a, crossing_b)`` triples,
    stopping after ``limit`` hits if given.
    """
    cb = cube(d)
    out = []
    for w in range(1 << cb.n):
        s = cb.state(w)
        singles = []
        for k in range(cb.n):
            if w & cb.bit(k):
                continue
            cyc = cb.crossing_cycles(s, k)
            if len(cyc) == 1 and cb.edge(w, k).kind == SINGLE:
                singles.append((k, cyc[0]))
        for (k1, a), (k2, b) in itertools.combinations(singles, 2):
            if a != b:
                out.append((s.word, cb.ids[k1], cb.ids[k2]))
                if limit is not None and len(out) >= limit:
                    return out
    return out
