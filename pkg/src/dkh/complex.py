"""Assembly of doubled Khovanov, doubled Lee and reduced chain complexes.

Generators are keyed ``(w, labels, tag)`` where ``w`` is the packed state
word (see :mod:`dkh.smoothing`).  Within a homological degree they are
ordered by state word, then label vector (``+ < -``), then tag (``u < l``).
Differentials are stored as sparse ``{(row, col): value}`` dictionaries,
``row`` indexing the target degree ``i + 1`` and ``col`` the source ``i``.
"""
from __future__ import annotations

import itertools
import os
from dataclasses import dataclass, field

from .algebra import LEE, STANDARD, _check_variant, edge_terms, p_degree
from .diagram import VirtualLinkDiagram
from .errors import BadBasepoint, NotAChainComplex, ResourceLimit, VariantMismatch
from .smoothing import cube, disjoint_single_cycle_faces

__all__ = [
    "DoubledChainComplex", "Diagnostics", "build_complex", "verify_chain_complex",
    "split_by_quantum", "build_reduced", "dump_complex", "crossing_cap",
    "DEFAULT_CAPS", "is_admissible", "require_admissible",
]

DEFAULT_CAPS = {STANDARD: 20, LEE: 14}


def crossing_cap(variant: str, max_crossings: int | None = None) -> int:
    """Crossing cap: explicit argument, then ``DKH_MAX_CROSSINGS``, then the default."""
    if max_crossings is not None:
        return max_crossings
    env = os.environ.get("DKH_MAX_CROSSINGS")
    if env:
        return int(env)
    return DEFAULT_CAPS[variant]


def is_admissible(d: VirtualLinkDiagram) -> bool:
    """True iff the cube has no face with two single-cycle edges on distinct cycles.

    Exactly these faces break ``d^2 = 0``; see :func:`dkh.smoothing.disjoint_single_cycle_faces`.
    """
    return not disjoint_single_cycle_faces(d, limit=1)


def require_admissible(d: VirtualLinkDiagram) -> None:
    hit = disjoint_single_cycle_faces(d, limit=1)
    if hit:
        w, a, b = hit[0]
        word = "".join(map(str, w))
        raise NotAChainComplex(
            f"face at state {word} with crossings {a} and {b}: two single-cycle "
            "maps on different cycles do not commute, so d^2 != 0")


@dataclass
class DoubledChainComplex:
    """Graded chain groups with ordered bases and sparse exact differentials."""

    variant: str
    n_plus: int
    n_minus: int
    n_crossings: int
    basis: dict[int, list[tuple]]
    jgrades: dict[int, list[int]]
    d: dict[int, dict[tuple[int, int], int]]
    ring: str = "Z"
    meta: dict = field(default_factory=dict)

    @property
    def degrees(self) -> list[int]:
        return sorted(self.basis)

    def rank(self, i: int) -> int:
        return len(self.basis.get(i, ()))

    def ranks(self) -> dict[int, int]:
        return {i: len(b) for i, b in sorted(self.basis.items())}

    def word(self, w: int) -> str:
        n = self.n_crossings
        return "".join(str((w >> (n - 1 - k)) & 1) for k in range(n))

    def bigraded_ranks(self) -> dict[tuple[int, int], int]:
        out: dict[tuple[int, int], int] = {}
        for i, js in self.jgrades.items():
            for j in js:
                out[(i, j)] = out.get((i, j), 0) + 1
        return out

    def restrict(self, keep: dict[int, list[int]], **meta) -> "DoubledChainComplex":
        """Subquotient spanned by the kept indices, with the induced differential
        (entries between kept generators)."""
        remap = {i: {old: new for new, old in enumerate(idx)} for i, idx in keep.items()}
        basis = {i: [self.basis[i][k] for k in idx] for i, idx in keep.items()}
        jgr = {i: [self.jgrades[i][k] for k in idx] for i, idx in keep.items()}
        d = {}
        for i, mat in self.d.items():
            src, tgt = remap.get(i, {}), remap.get(i + 1, {})
            d[i] = {(tgt[r], src[c]): v for (r, c), v in mat.items() if r in tgt and c in src}
        return DoubledChainComplex(self.variant, self.n_plus, self.n_minus, self.n_crossings,
                                   basis, jgr, d, self.ring, {**self.meta, **meta})


def build_complex(d: VirtualLinkDiagram, variant: str = STANDARD,
                  max_crossings: int | None = None) -> DoubledChainComplex:
    """Build the doubled Khovanov (``"standard"``) or doubled Lee (``"lee"``) complex."""
    _check_variant(variant)
    cap = crossing_cap(variant, max_crossings)
    cb = cube(d)
    n = cb.n
    if n > cap:
        raise ResourceLimit(f"{n} crossings exceeds the {variant} cap of {cap}")
    nm, npl = d.n_minus, d.n_plus
    shift = npl - nm
    basis: dict[int, list] = {i: [] for i in range(-nm, npl + 1)}
    jgr: dict[int, list] = {i: [] for i in range(-nm, npl + 1)}
    offset = {}
    for w in range(1 << n):
        s = cb.state(w)
        i = cb.height(w)
        offset[w] = len(basis[i])
        for labels in itertools.product((0, 1), repeat=s.n_cycles):
            base = p_degree(labels, 0) + i + shift
            for tag in (0, 1):
                basis[i].append((w, labels, tag))
                jgr[i].append(base - tag)
    diff: dict[int, dict] = {i: {} for i in range(-nm, npl)}
    for w in range(1 << n):
        s = cb.state(w)
        i = cb.height(w)
        if i == npl:
            continue
        mat = diff[i]
        src_off = offset[w]
        for k in range(n):
            mask = cb.bit(k)
            if w & mask:
                continue
            ed = cb.edge(w, k)
            sign = cb.edge_sign(w, k)
            t = w | mask
            tgt_off = offset[t]
            for li, labels in enumerate(itertools.product((0, 1), repeat=s.n_cycles)):
                for tag in (0, 1):
                    col = src_off + 2 * li + tag
                    for coef, new, ntag in edge_terms(ed.kind, variant, labels, tag, ed):
                        lint = 0
                        for x in new:
                            lint = (lint << 1) | x
                        row = tgt_off + 2 * lint + ntag
                        key = (row, col)
                        v = mat.get(key, 0) + sign * coef
                        if v:
                            mat[key] = v
                        else:
                            mat.pop(key, None)
    ring = "Z" if variant == STANDARD else "Q"
    return DoubledChainComplex(variant, npl, nm, n, basis, jgr, diff, ring,
                               {"diagram": d})


@dataclass
class Diagnostics:
    """Result of :func:`verify_chain_complex`.

    ``d_squared`` lists ``(i, row, col, value)`` for nonzero entries of
    ``d_{i+1} d_i`` together with the offending face (source and target
    state words); ``grading`` lists differential entries violating the
    grading rule; ``jumps`` collects all observed ``j_target - j_source``.
    """

    ok: bool
    d_squared: list = field(default_factory=list)
    grading: list = field(default_factory=list)
    jumps: set = field(default_factory=set)


def _columns(mat: dict) -> dict[int, dict[int, int]]:
    cols: dict[int, dict[int, int]] = {}
    for (r, c), v in mat.items():
        cols.setdefault(c, {})[r] = v
    return cols


def verify_chain_complex(c: DoubledChainComplex) -> Diagnostics:
    """Check ``d^2 = 0`` and the grading rule of the variant."""
    diag = Diagnostics(ok=True)
    for i in c.degrees:
        if i + 1 not in c.d or i not in c.d:
            continue
        first, second = _columns(c.d[i]), _columns(c.d[i + 1])
        for col, entries in first.items():
            acc: dict[int, int] = {}
            for mid, a in entries.items():
                for r, b in second.get(mid, {}).items():
                    acc[r] = acc.get(r, 0) + a * b
            for r, v in acc.items():
                if v:
                    face = (c.word(c.basis[i][col][0]), c.word(c.basis[i + 2][r][0]))
                    diag.d_squared.append((i, r, col, v, face))
    allowed = {0} if c.variant == STANDARD else {0, 4}
    for i, mat in c.d.items():
        for (r, col), v in mat.items():
            jump = c.jgrades[i + 1][r] - c.jgrades[i][col]
            diag.jumps.add(jump)
            if jump not in allowed:
                diag.grading.append((i, r, col, v, jump))
    diag.ok = not diag.d_squared and not diag.grading
    return diag


def split_by_quantum(c: DoubledChainComplex) -> dict[int, DoubledChainComplex]:
    """Direct-sum decomposition of a standard complex by quantum degree."""
    if c.variant != STANDARD:
        raise VariantMismatch("only the standard differential preserves j")
    js = sorted({j for g in c.jgrades.values() for j in g})
    pieces = {}
    for j in js:
        keep = {i: [k for k, jj in enumerate(c.jgrades[i]) if jj == j] for i in c.degrees}
        pieces[j] = c.restrict(keep, j=j)
    return pieces


def _marked_ends(d: VirtualLinkDiagram, basepoints) -> list[int]:
    if basepoints is None:
        basepoints = [0] * d.n_components
    basepoints = list(basepoints)
    if len(basepoints) != d.n_components:
        raise BadBasepoint("need exactly one basepoint per component")
    cb = cube(d)
    ends = []
    for k, g in enumerate(basepoints):
        L = len(d.components[k])
        if not isinstance(g, int) or not 0 <= g < max(L, 1):
            raise BadBasepoint(f"basepoint {g!r} is not an arc of component {k}")
        ends.append(2 * cb.occ_index[(k, g)] if L else -(k + 1))
    return ends


def build_reduced(d: VirtualLinkDiagram, basepoints=None,
                  max_crossings: int | None = None):
    """Reduced subcomplex and quotient of the standard complex.

    ``basepoints[k]`` is a gap on component ``k`` (default 0).  The
    subcomplex is spanned by generators whose marked cycles all carry the
    label ``-``; the tag is a single global one, so nothing more is needed.
    Returns ``(sub, quotient)``.
    """
    ends = _marked_ends(d, basepoints)
    full = build_complex(d, STANDARD, max_crossings)
    cb = cube(d)
    marked: dict[int, set] = {}
    keep_sub: dict[int, list[int]] = {}
    keep_quo: dict[int, list[int]] = {}
    for i, keys in full.basis.items():
        ks, kq = [], []
        for idx, (w, labels, _tag) in enumerate(keys):
            m = marked.get(w)
            if m is None:
                s = cb.state(w)
                m = marked[w] = {s.end_cycle[e] for e in ends}
            (ks if all(labels[x] == 1 for x in m) else kq).append(idx)
        keep_sub[i], keep_quo[i] = ks, kq
    sub = full.restrict(keep_sub, reduced="sub", basepoints=basepoints)
    quo = full.restrict(keep_quo, reduced="quotient", basepoints=basepoints)
    # record any leak of the subcomplex into the complement (must be empty)
    insub = {i: set(v) for i, v in keep_sub.items()}
    leaks = [(i, r, col) for i, mat in full.d.items() for (r, col) in mat
             if col in insub[i] and r not in insub[i + 1]]
    sub.meta["leaks"] = leaks
    return sub, quo


def dump_complex(c: DoubledChainComplex) -> str:
    """Text dump: a basis manifest followed by ``(i, row, col, value)`` lines."""
    lines = [f"# variant={c.variant} ring={c.ring} n_plus={c.n_plus} n_minus={c.n_minus}"]
    for i in c.degrees:
        for idx, ((w, labels, tag), j) in enumerate(zip(c.basis[i], c.jgrades[i])):
            lab = "".join("+-"[x] for x in labels)
            lines.append(f"# basis i={i} idx={idx} word={c.word(w)} labels={lab} "
                         f"tag={'ul'[tag]} j={j}")
    for i in sorted(c.d):
        for (r, col), v in sorted(c.d[i].items(), key=lambda t: (t[0][1], t[0][0])):
            lines.append(f"({i}, {r}, {col}, {v})")
    return "\n".join(lines) + "\n"
