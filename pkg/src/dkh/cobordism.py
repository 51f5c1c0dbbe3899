"""Maps of elementary cobordisms on doubled Lee complexes.

A cobordism is presented as a start diagram followed by elementary moves:
births and deaths of crossingless circles, oriented saddles between two
arcs, and virtual moves.  None of these moves touches a classical
crossing, so the cubes before and after a move are indexed by the same
state words and every move acts vertex by vertex:

* birth inserts ``v+`` on the new circle;
* death applies ``eps(v+) = 0, eps(v-) = 1`` to the dying circle;
* a saddle acts by ``m'``, ``D'`` or ``eta'`` according to what it does to
  the cycles of each state;
* a virtual move is the identity.

Cycles are matched between the two sides through the tokens they pass
through, which moves never alter.  Crossingless components have no tokens
and are followed through the presentation by explicit labels.

Arcs are written ``(k, g)`` (text form ``"k:g"``): the gap ``g`` of
component ``k``, i.e. the arc entering its token ``g``.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Union

from .algebra import LEE, edge_terms
from .complex import DoubledChainComplex, build_complex, require_admissible
from .diagram import VirtualLinkDiagram, degenerate_circles, gauss_diagram, parse_gauss_code
from .errors import (BadArc, BadMove, DeathOnKnottedComponent, DiagramError,
                     MultiComponentSaddle, NotAChainComplex)
from .linalg import ImageReducer
from .smoothing import MERGE, SINGLE, SPLIT, EdgeData, acs_count, cube, enumerate_alternately_coloured

__all__ = [
    "Birth", "Death", "Saddle", "VirtualMove", "ElementaryMove", "CobordismPresentation",
    "ChainMap", "InducedMap", "apply_move", "chain_map_of_move", "compose",
    "induced_map_on_lee", "shared_degrees", "lee_support", "saddle_kills_acs",
    "parse_presentation", "parse_arc",
]


# ------------------------------------------------------------------ moves

@dataclass(frozen=True)
class Birth:
    """0-handle: append a crossingless component."""


@dataclass(frozen=True)
class Death:
    """2-handle: remove the crossingless component ``component``."""

    component: int


@dataclass(frozen=True)
class Saddle:
    """1-handle between the arcs ``arc1`` and ``arc2`` (each ``(k, g)``)."""

    arc1: tuple[int, int]
    arc2: tuple[int, int]


@dataclass(frozen=True)
class VirtualMove:
    """Rewrite the code into an equivalent one (rotation or reordering of components)."""

    target: VirtualLinkDiagram


ElementaryMove = Union[Birth, Death, Saddle, VirtualMove]


def parse_arc(text: str) -> tuple[int, int]:
    try:
        k, g = text.split(":")
        return int(k), int(g)
    except ValueError:
        raise BadArc(f"arc {text!r} is not of the form k:g") from None


def _check_gap(d: VirtualLinkDiagram, arc) -> tuple[int, int]:
    k, g = arc
    if not 0 <= k < d.n_components:
        raise BadArc(f"no component {k}")
    n = len(d.components[k])
    if not 0 <= g < max(n, 1):
        raise BadArc(f"gap {g} is not an arc of component {k}")
    return k, g


# ------------------------------------------------- move geometry

@dataclass
class _Step:
    """Result of a move plus the data needed to match cycles across it.

    ``empty_before``/``empty_after`` label the crossingless components of the
    two diagrams (``None`` for components with tokens); ``ends_before`` and
    ``ends_after`` are end keys of the cycles the move acts on.
    """

    after: VirtualLinkDiagram
    empty_before: list
    empty_after: list
    ends_before: tuple = ()
    ends_after: tuple = ()
    kind: str = "identity"
    perm: list | None = None


_fresh = itertools.count()


def _arc_keys(d: VirtualLinkDiagram, arc, labels) -> tuple:
    """End keys of the arc at ``arc``: the out-end before it and the in-end after it."""
    k, g = arc
    comp = d.components[k]
    if not comp:
        return (("E", labels[k]),)
    a, b = comp[g - 1], comp[g]
    return ((1, a.cid, a.over), (0, b.cid, b.over))


def _labels(d: VirtualLinkDiagram, labels=None) -> list:
    if labels is None:
        labels = list(range(d.n_components))
    return [lab if not c else None for lab, c in zip(labels, d.components)]


def _step(d: VirtualLinkDiagram, m: ElementaryMove, labels=None) -> _Step:
    labels = list(range(d.n_components)) if labels is None else list(labels)
    comps = [list(c) for c in d.components]
    before = _labels(d, labels)
    if isinstance(m, Birth):
        new = ("birth", next(_fresh))
        after = VirtualLinkDiagram.from_components(comps + [[]])
        return _Step(after, before, _labels(after, labels + [new]), (),
                     (("E", new),), "birth")
    if isinstance(m, Death):
        k = m.component
        if not 0 <= k < len(comps):
            raise BadArc(f"no component {k}")
        if comps[k]:
            raise DeathOnKnottedComponent(f"component {k} has crossings")
        after = VirtualLinkDiagram.from_components(comps[:k] + comps[k + 1:])
        return _Step(after, before, _labels(after, labels[:k] + labels[k + 1:]),
                     (("E", labels[k]),), (), "death")
    if isinstance(m, VirtualMove):
        return _virtual_step(d, m.target, labels)
    if not isinstance(m, Saddle):
        raise BadMove(f"unknown move {m!r}")
    (k1, g1), (k2, g2) = _check_gap(d, m.arc1), _check_gap(d, m.arc2)
    ends_before = tuple(dict.fromkeys(_arc_keys(d, (k1, g1), labels)
                                      + _arc_keys(d, (k2, g2), labels)))
    if k1 != k2:
        a, b = comps[k1], comps[k2]
        merged = a[g1:] + a[:g1] + b[g2:] + b[:g2]
        lo, hi = min(k1, k2), max(k1, k2)
        new_comps = [merged if k == lo else c for k, c in enumerate(comps) if k != hi]
        new_labels = [lab for k, lab in enumerate(labels) if k != hi]
        kind = "merge"
        if merged:
            ends_after = tuple(k for k in ends_before if k[0] != "E")
        else:   # two crossingless circles become one, which keeps the first label
            new_labels[lo] = labels[k1]
            ends_after = (("E", labels[k1]),)
    else:
        c = comps[k1]
        kind = "self"
        if not c:   # a crossingless circle splits in two
            new = ("split", next(_fresh))
            new_comps = comps + [[]]
            new_labels = labels + [new]
            ends_after = (("E", labels[k1]), ("E", new))
        else:
            if g1 == g2:
                raise BadMove("saddle arcs must be distinct")
            lo, hi = sorted((g1, g2))
            new_comps = [c[lo:hi] if k == k1 else cc for k, cc in enumerate(comps)]
            new_comps.append(c[hi:] + c[:lo])
            new_labels = labels + [None]
            ends_after = ends_before
    after = VirtualLinkDiagram.from_components(new_comps)
    after_labels = _labels(after, new_labels)
    return _Step(after, before, after_labels, ends_before, ends_after, kind)


def _rotations_match(a, b) -> bool:
    if len(a) != len(b):
        return False
    if not a:
        return True
    return any(a[r:] + a[:r] == b for r in range(len(a)))


def _virtual_step(d: VirtualLinkDiagram, target: VirtualLinkDiagram, labels) -> _Step:
    """Accept only rewrites that rotate components or permute them."""
    perm: list[int] = []
    for c in target.components:
        k = next((k for k, old in enumerate(d.components)
                  if k not in perm and _rotations_match(list(old), list(c))), None)
        if k is None:
            raise BadMove("virtual move must rotate or reorder the components of the code")
        perm.append(k)
    if len(perm) != d.n_components:
        raise BadMove("virtual move must keep every component")
    return _Step(target, _labels(d, labels), _labels(target, [labels[k] for k in perm]),
                 perm=perm)


def apply_move(d: VirtualLinkDiagram, m: ElementaryMove) -> VirtualLinkDiagram:
    """The diagram after one elementary move."""
    return _step(d, m).after


# --------------------------------------------------------- chain maps

def _end_keys(d: VirtualLinkDiagram, labels) -> dict:
    cb = cube(d)
    keys = {}
    for o, (k, p) in enumerate(cb.occ):
        t = d.components[k][p]
        keys[2 * o] = (0, t.cid, t.over)
        keys[2 * o + 1] = (1, t.cid, t.over)
    for k, c in enumerate(d.components):
        if not c:
            keys[-(k + 1)] = ("E", labels[k])
    return keys


@dataclass
class ChainMap:
    """Sparse map between two doubled Lee complexes.

    ``blocks[i]`` maps ``(target index, source index)`` to a coefficient in
    homological degree ``i``; ``degree`` is the smallest quantum-degree
    change over all nonzero entries (``None`` for the zero map).
    """

    source: DoubledChainComplex
    target: DoubledChainComplex
    blocks: dict[int, dict[tuple[int, int], object]]
    expected_degree: int = 0

    @property
    def degree(self) -> int | None:
        jumps = [self.target.jgrades[i][r] - self.source.jgrades[i][c]
                 for i, b in self.blocks.items() for (r, c) in b]
        return min(jumps) if jumps else None

    def is_zero(self) -> bool:
        return not any(self.blocks.values())

    def apply(self, i: int, vec: dict) -> dict:
        out: dict[int, object] = {}
        for (r, c), v in self.blocks.get(i, {}).items():
            if c in vec:
                out[r] = out.get(r, 0) + v * vec[c]
        return {k: v for k, v in out.items() if v}

    def commutes(self) -> bool:
        """``phi d = d phi`` on every degree."""
        return not self.defects()

    def defects(self) -> list:
        bad = []
        for i in self.source.degrees:
            for col in range(self.source.rank(i)):
                left = self.apply(i + 1, _apply_d(self.source, i, {col: 1}))
                right = _apply_d(self.target, i, self.apply(i, {col: 1}))
                keys = set(left) | set(right)
                if any(left.get(k, 0) != right.get(k, 0) for k in keys):
                    bad.append((i, col))
        return bad


def _apply_d(c: DoubledChainComplex, i: int, vec: dict) -> dict:
    out: dict[int, object] = {}
    for (r, col), v in c.d.get(i, {}).items():
        if col in vec:
            out[r] = out.get(r, 0) + v * vec[col]
    return {k: v for k, v in out.items() if v}


def _vertex_map(st: _Step, s, t, keys_s, keys_t):
    """Cycle correspondence at one cube vertex: ``(kind, EdgeData-like)``."""
    cyc_t = {frozenset(keys_t[e] for e in cyc): i for i, cyc in enumerate(t.cycles)}
    end_t = {keys_t[e]: t.end_cycle[e] for e in keys_t}
    end_s = {keys_s[e]: s.end_cycle[e] for e in keys_s}
    src = tuple(sorted({end_s[k] for k in st.ends_before}))
    tgt = tuple(sorted({end_t[k] for k in st.ends_after}))
    carry = []
    for i, cyc in enumerate(s.cycles):
        if i in src:
            continue
        key = frozenset(keys_s[e] for e in cyc)
        if key not in cyc_t:
            raise DiagramError("cycle lost across a move")
        carry.append((i, cyc_t[key]))
    if st.kind in ("birth", "death", "identity"):
        kind = st.kind
    else:
        kind = {(2, 1): MERGE, (1, 2): SPLIT, (1, 1): SINGLE}[(len(src), len(tgt))]
    return kind, EdgeData(kind, src, tgt, tuple(carry), len(t.cycles))


def _index(c: DoubledChainComplex) -> dict:
    return {key: (i, n) for i in c.degrees for n, key in enumerate(c.basis[i])}


_EXPECTED = {"birth": 1, "death": 1, "merge": -1, "self": -1, "identity": 0}


def _chain_map(d: VirtualLinkDiagram, m: ElementaryMove, labels=None,
               max_crossings: int | None = None) -> tuple[ChainMap, _Step]:
    st = _step(d, m, labels)
    d2 = st.after
    for x in (d, d2):
        require_admissible(x)
    c1, c2 = build_complex(d, LEE, max_crossings), build_complex(d2, LEE, max_crossings)
    cb1, cb2 = cube(d), cube(d2)
    lab1 = st.empty_before
    keys_s, keys_t = _end_keys(d, lab1), _end_keys(d2, st.empty_after)
    idx2 = _index(c2)
    blocks: dict[int, dict] = {i: {} for i in c1.degrees}
    vertex = {}
    for i in c1.degrees:
        blk = blocks[i]
        for col, (w, labels_, tag) in enumerate(c1.basis[i]):
            if w not in vertex:
                vertex[w] = _vertex_map(st, cb1.state(w), cb2.state(w), keys_s, keys_t)
            kind, ed = vertex[w]
            for coef, new, ntag in _move_terms(kind, ed, labels_, tag):
                r = idx2[(w, new, ntag)][1]
                v = blk.get((r, col), 0) + coef
                if v:
                    blk[(r, col)] = v
                else:
                    blk.pop((r, col), None)
    return ChainMap(c1, c2, blocks, _EXPECTED[st.kind]), st


def _move_terms(kind: str, ed: EdgeData, labels: tuple, tag: int):
    base = [0] * ed.n_target
    for a, b in ed.carry:
        base[b] = labels[a]
    if kind == "identity":
        return [(1, tuple(base), tag)]
    if kind == "birth":
        (t,) = ed.tgt
        base[t] = 0
        return [(1, tuple(base), tag)]
    if kind == "death":
        (s,) = ed.src
        return [(1, tuple(base), tag)] if labels[s] == 1 else []
    return edge_terms(kind, LEE, labels, tag, ed)


def chain_map_of_move(d: VirtualLinkDiagram, m: ElementaryMove,
                      max_crossings: int | None = None, check: bool = True) -> ChainMap:
    """Chain map ``CDKh'(d) -> CDKh'(apply_move(d, m))`` of one elementary move.

    With ``check`` (the default) the map is verified to commute with the
    Lee differentials and :class:`NotAChainComplex` is raised otherwise.
    """
    phi, _ = _chain_map(d, m, None, max_crossings)
    if check and not phi.commutes():
        raise NotAChainComplex(f"move {m!r} does not give a chain map")
    return phi


def compose(second: ChainMap, first: ChainMap) -> ChainMap:
    """``second o first``."""
    blocks: dict[int, dict] = {}
    for i, b1 in first.blocks.items():
        by_mid: dict[int, list] = {}
        for (r, c), v in second.blocks.get(i, {}).items():
            by_mid.setdefault(c, []).append((r, v))
        out: dict = {}
        for (mid, c), v in b1.items():
            for r, w in by_mid.get(mid, ()):
                out[(r, c)] = out.get((r, c), 0) + v * w
        blocks[i] = {k: v for k, v in out.items() if v}
    return ChainMap(first.source, second.target, blocks,
                    first.expected_degree + second.expected_degree)


# ------------------------------------------------------- presentations

@dataclass
class CobordismPresentation:
    """Start diagram plus moves; the intermediate diagrams are derived."""

    start: VirtualLinkDiagram
    moves: list = field(default_factory=list)

    def __post_init__(self):
        self.diagrams = [self.start]
        self._labels = [_labels(self.start)]
        self._steps = []
        pieces = list(range(self.start.n_components))   # surface piece per component
        parent = list(range(self.start.n_components))

        def find(x):
            while parent[x] != x:
                x = parent[x]
            return x

        for m in self.moves:
            st = _step(self.diagrams[-1], m, self._labels[-1])
            self._steps.append(st)
            self.diagrams.append(st.after)
            self._labels.append(st.empty_after)
            if isinstance(m, Birth):
                parent.append(len(parent))
                pieces = pieces + [len(parent) - 1]
            elif isinstance(m, Death):
                pieces = pieces[:m.component] + pieces[m.component + 1:]
            elif isinstance(m, Saddle):
                (k1, _), (k2, _) = m.arc1, m.arc2
                if k1 != k2:
                    parent[find(pieces[k1])] = find(pieces[k2])
                    pieces = [p for k, p in enumerate(pieces) if k != max(k1, k2)]
                else:
                    pieces = pieces + [pieces[k1]]
            else:
                pieces = [pieces[k] for k in st.perm]
        self._surface_pieces = len({find(x) for x in range(len(parent))})

    @property
    def end(self) -> VirtualLinkDiagram:
        return self.diagrams[-1]

    def counts(self) -> dict[str, int]:
        return {"births": sum(isinstance(m, Birth) for m in self.moves),
                "deaths": sum(isinstance(m, Death) for m in self.moves),
                "saddles": sum(isinstance(m, Saddle) for m in self.moves)}

    def euler_characteristic(self) -> int:
        c = self.counts()
        return c["births"] + c["deaths"] - c["saddles"]

    def n_surface_components(self) -> int:
        return self._surface_pieces

    def genus(self) -> int | None:
        """Genus of a connected surface, from ``chi = 2 - 2g - #boundary``."""
        if self._surface_pieces != 1:
            return None
        b = self.start.n_components + self.end.n_components
        g2 = 2 - self.euler_characteristic() - b
        return g2 // 2

    def filtration_budget(self) -> int:
        c = self.counts()
        return c["births"] + c["deaths"] - c["saddles"]

    def degenerate_counts(self) -> list[int]:
        return [len(degenerate_circles(gauss_diagram(d))) for d in self.diagrams]


def parse_presentation(text: str) -> CobordismPresentation:
    """Parse the line format ``start: <code>`` then ``birth``, ``death k``,
    ``saddle k:g k:g`` or ``vmove <code>``; ``#`` starts a comment."""
    start = None
    moves: list = []
    for n, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("start:"):
            start = parse_gauss_code(line[len("start:"):].strip())
            continue
        if start is None:
            raise BadMove(f"line {n}: 'start:' must come first")
        word, _, rest = line.partition(" ")
        rest = rest.strip()
        if word == "birth" and not rest:
            moves.append(Birth())
        elif word == "death":
            moves.append(Death(int(rest)))
        elif word == "saddle":
            parts = rest.split()
            if len(parts) != 2:
                raise BadMove(f"line {n}: saddle needs two arcs")
            moves.append(Saddle(parse_arc(parts[0]), parse_arc(parts[1])))
        elif word == "vmove":
            moves.append(VirtualMove(parse_gauss_code(rest)))
        else:
            raise BadMove(f"line {n}: cannot parse {line!r}")
    if start is None:
        raise BadMove("presentation has no 'start:' line")
    return CobordismPresentation(start, moves)


# ------------------------------------------------- homology-level maps

def lee_support(d: VirtualLinkDiagram) -> set[int]:
    """Homological degrees where doubled Lee homology is nonzero."""
    return {s.ones - d.n_minus for s, _ in enumerate_alternately_coloured(d)}


def shared_degrees(p: CobordismPresentation) -> set[int]:
    """Degrees in which every diagram of the presentation has nonzero DKh'."""
    out = None
    for d in p.diagrams:
        sup = lee_support(d)
        out = sup if out is None else out & sup
    return out or set()


def _acs_vectors(c: DoubledChainComplex, d: VirtualLinkDiagram):
    """Alternately coloured cycles in the v basis: ``[(label, degree, {index: coef})]``."""
    idx = _index(c)
    half = Fraction(1, 2)
    out = []
    for s, col in enumerate_alternately_coloured(d):
        w = cube(d).int_of(s.word)
        i = s.ones - d.n_minus
        colour = "".join("rg"[col[k] == "green"] for k in range(s.n_cycles))
        for tag in (0, 1):
            vec: dict[int, Fraction] = {}
            for labels in itertools.product((0, 1), repeat=s.n_cycles):
                coef = Fraction(1)
                for k, lab in enumerate(labels):
                    # r = (v+ + v-)/2, g = (v+ - v-)/2
                    coef *= half if (col[k] != "green" or lab == 0) else -half
                vec[idx[(w, labels, tag)][1]] = coef
            out.append((f"{''.join(map(str, s.word))}:{colour}^{'ul'[tag]}", i, vec))
    return out


@dataclass
class InducedMap:
    """Matrix of a cobordism map on doubled Lee homology.

    Columns are the alternately coloured classes of the start diagram,
    rows those of the end diagram (labels ``word:colours^tag``).
    """

    source_basis: list[str]
    target_basis: list[str]
    matrix: list[list[Fraction]]
    filtration_degree: int | None
    expected_degree: int
    shared: set

    @property
    def nonzero(self) -> bool:
        return any(x for row in self.matrix for x in row)

    def to_json(self) -> dict:
        return {"source": self.source_basis, "target": self.target_basis,
                "matrix": [[str(x) for x in row] for row in self.matrix],
                "nonzero": self.nonzero, "filtration_degree": self.filtration_degree,
                "expected_degree": self.expected_degree, "shared_degrees": sorted(self.shared)}


def induced_map_on_lee(p: CobordismPresentation, max_crossings: int | None = None) -> InducedMap:
    """Compose the chain maps of ``p`` and read off the map on homology."""
    phi = None
    for k, m in enumerate(p.moves):
        step_map, _ = _chain_map(p.diagrams[k], m, p._labels[k], max_crossings)
        if not step_map.commutes():
            raise NotAChainComplex(f"move {k} ({m!r}) does not give a chain map")
        phi = step_map if phi is None else compose(step_map, phi)
    if phi is None:   # no moves: the identity
        require_admissible(p.start)
        c = build_complex(p.start, LEE, max_crossings)
        phi = ChainMap(c, c, {i: {(n, n): 1 for n in range(c.rank(i))} for i in c.degrees})
    src = _acs_vectors(phi.source, p.start)
    tgt = _acs_vectors(phi.target, p.end)
    # reduce modulo boundaries, then solve for target coordinates
    by_deg: dict[int, ImageReducer] = {}

    def reducer(i):
        if i not in by_deg:
            red = ImageReducer()
            cols: dict[int, dict] = {}
            for (r, c), v in phi.target.d.get(i - 1, {}).items():
                cols.setdefault(c, {})[r] = v
            for vec in cols.values():
                red.add(vec)
            by_deg[i] = red
        return by_deg[i]

    matrix = [[Fraction(0)] * len(src) for _ in tgt]
    for col, (_, i, vec) in enumerate(src):
        image = phi.apply(i, vec)
        if not image:
            continue
        red = reducer(i)
        rest = red.reduce(image)
        if not rest:
            continue
        targets = [(row, red.reduce(v)) for row, (_, ti, v) in enumerate(tgt) if ti == i]
        coeffs = _solve(rest, targets)
        for row, x in coeffs.items():
            matrix[row][col] = x
    return InducedMap([s[0] for s in src], [t[0] for t in tgt], matrix, phi.degree,
                      phi.expected_degree, shared_degrees(p))


def _solve(vec: dict, basis: list[tuple[int, dict]]) -> dict[int, Fraction]:
    """Coordinates of ``vec`` in the independent vectors ``basis``."""
    keys = sorted(set(vec).union(*(set(b) for _, b in basis)))
    rows = [[b.get(k, 0) for _, b in basis] + [vec.get(k, 0)] for k in keys]
    n = len(basis)
    a = [[Fraction(x) for x in r] for r in rows]
    piv_cols = []
    r = 0
    for c in range(n):
        p = next((i for i in range(r, len(a)) if a[i][c]), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        inv = 1 / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(len(a)):
            if i != r and a[i][c]:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        piv_cols.append(c)
        r += 1
    if any(row[n] for row in a[r:]):
        raise ArithmeticError("image is not in the span of the target classes")
    return {basis[c][0]: a[k][n] for k, c in enumerate(piv_cols) if a[k][n]}


# ------------------------------------------------------ colour criterion

def saddle_kills_acs(d: VirtualLinkDiagram, saddle: Saddle) -> bool:
    """True iff the saddle joins two arcs of opposite colour.

    Along a component the colour flips at every classical passage, so two
    arcs of one component have opposite colours exactly when their gaps
    differ by an odd number; the saddle then leaves an odd number of chord
    endpoints on each new circle and no alternate colouring survives.
    """
    (k1, g1), (k2, g2) = _check_gap(d, saddle.arc1), _check_gap(d, saddle.arc2)
    if k1 != k2:
        raise MultiComponentSaddle("saddle_kills_acs needs both arcs on one component")
    if acs_count(d) == 0:
        raise ValueError("the diagram has no alternately coloured smoothing")
    return (g1 - g2) % 2 == 1
