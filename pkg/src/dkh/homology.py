"""Homology computations.

Integral doubled Khovanov homology is computed by cancelling unit entries
of the differential and running Smith normal form on what is left.  Doubled
Lee homology is reduced by cancelling only entries of filtration degree 0;
this keeps the filtered chain homotopy type, so the filtration levels
(s-levels) can then be read from a much smaller complex.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction

from .algebra import LEE, STANDARD, AlgebraElement, DoubledGenerator, from_red_green
from .complex import (DoubledChainComplex, build_complex, build_reduced, crossing_cap,
                      require_admissible)
from .diagram import VirtualLinkDiagram, crossing_parity
from .errors import NotAKnot, ResourceLimit
from .laurent import Laurent
from .linalg import SparseComplex, cancel, dense, rank_q, smith_invariants
from .smoothing import GREEN, cube, enumerate_alternately_coloured

__all__ = [
    "BigradedAbelianGroup", "LeeSummary", "RasmussenPair", "smith_normal_form",
    "homology", "dkh", "reduced_dkh", "lee_complex_reduced", "lee_summary",
    "filtration_levels", "rasmussen", "rasmussen_leftmost", "is_leftmost",
    "euler_characteristic", "chain_euler_characteristic", "jones", "bracket_oracle",
]


@dataclass
class BigradedAbelianGroup:
    """``(i, j) -> (free rank, sorted invariant factors > 1)``."""

    groups: dict[tuple[int, int], tuple[int, tuple[int, ...]]] = field(default_factory=dict)

    def __post_init__(self):
        self.groups = {k: (f, tuple(sorted(t))) for k, (f, t) in self.groups.items() if f or t}

    def free(self, i: int, j: int) -> int:
        return self.groups.get((i, j), (0, ()))[0]

    def torsion(self, i: int, j: int) -> tuple[int, ...]:
        return self.groups.get((i, j), (0, ()))[1]

    def total_rank(self) -> int:
        return sum(f for f, _ in self.groups.values())

    def degrees(self) -> set[int]:
        return {i for i, _ in self.groups}

    def __eq__(self, other) -> bool:
        return isinstance(other, BigradedAbelianGroup) and self.groups == other.groups

    def shift_j(self, k: int) -> "BigradedAbelianGroup":
        return BigradedAbelianGroup({(i, j + k): v for (i, j), v in self.groups.items()})

    def to_json(self) -> dict:
        return {"invariant": "dkh", "groups": [
            {"i": i, "j": j, "free_rank": f, "torsion": list(t)}
            for (i, j), (f, t) in sorted(self.groups.items())]}

    @classmethod
    def from_json(cls, data: dict) -> "BigradedAbelianGroup":
        return cls({(g["i"], g["j"]): (g["free_rank"], tuple(g["torsion"]))
                    for g in data["groups"]})

    def table(self) -> str:
        """Human-readable table, one row per nonzero bidegree."""
        rows = []
        for (i, j), (f, t) in sorted(self.groups.items()):
            parts = ([f"Z^{f}" if f > 1 else "Z"] if f else []) + [f"Z/{x}" for x in t]
            rows.append(f"i={i:>3} j={j:>4}  " + " + ".join(parts))
        return "\n".join(rows) if rows else "0"


def smith_normal_form(m) -> tuple[list[int], int]:
    """Invariant factors and rank of an integer matrix."""
    f = smith_invariants(m)
    return f, len(f)


def homology(c: DoubledChainComplex, ring: str = "Z") -> BigradedAbelianGroup:
    """Bigraded homology of a j-homogeneous complex over ``Z`` or ``Q``."""
    if ring == "Z":
        sc = SparseComplex.from_chain_complex(c, int)
        cancel(sc, lambda a, b, v: v in (1, -1))
    else:
        sc = SparseComplex.from_chain_complex(c, Fraction)
        cancel(sc, lambda a, b, v: True)
    by_ij: dict[tuple[int, int], list[int]] = {}
    for g in sorted(sc.deg):
        by_ij.setdefault((sc.deg[g], sc.j[g]), []).append(g)
    info: dict[tuple[int, int], tuple[int, list[int]]] = {}   # rank, factors of d_i on block

    def block(i, j):
        if (i, j) not in info:
            cols, rows = by_ij.get((i, j), []), by_ij.get((i + 1, j), [])
            if not cols or not rows:
                info[(i, j)] = (0, [])
            else:
                mat = dense(sc, i, rows, cols)
                if ring == "Z":
                    f = smith_invariants(mat)
                    info[(i, j)] = (len(f), f)
                else:
                    info[(i, j)] = (rank_q(mat), [])
        return info[(i, j)]

    out = {}
    for (i, j), gens in by_ij.items():
        r_out, _ = block(i, j)
        r_in, f_in = block(i - 1, j)
        free = len(gens) - r_out - r_in
        tors = tuple(x for x in f_in if x > 1)
        if free or tors:
            out[(i, j)] = (free, tors)
    return BigradedAbelianGroup(out)


def dkh(d: VirtualLinkDiagram, ring: str = "Z", max_crossings: int | None = None
        ) -> BigradedAbelianGroup:
    """Doubled Khovanov homology over ``Z`` (default) or ``Q``."""
    require_admissible(d)
    return homology(build_complex(d, STANDARD, max_crossings), ring)


def reduced_dkh(d: VirtualLinkDiagram, basepoints=None, ring: str = "Z",
                max_crossings: int | None = None) -> BigradedAbelianGroup:
    """Homology of the reduced subcomplex."""
    require_admissible(d)
    sub, _ = build_reduced(d, basepoints, max_crossings)
    return homology(sub, ring)


# ---------------------------------------------------------------- Lee theory

def lee_complex_reduced(c: DoubledChainComplex) -> SparseComplex:
    """Cancel every filtration-degree-0 entry of a Lee complex."""
    sc = SparseComplex.from_chain_complex(c, Fraction)
    cancel(sc, lambda a, b, v: sc.j[a] == sc.j[b])
    return sc


def filtration_levels(sc: SparseComplex, i: int) -> dict[int, int]:
    """s-levels of homology in degree ``i``: ``{level: multiplicity}``.

    For each threshold ``k`` the rank of ``H(F_k) -> H`` equals
    ``dim Z(F_k) - dim(B cap F_k)``; levels sit where this rank drops.
    """
    gens = sc.generators(i)
    if not gens:
        return {}
    below = sc.generators(i - 1)
    above = sc.generators(i + 1)
    d_out = dense(sc, i, above, gens)
    d_in = dense(sc, i - 1, gens, below)
    r_in = rank_q(d_in)
    jvals = sorted({sc.j[g] for g in gens}, reverse=True)
    image_rank = {}
    for k in jvals:
        cols = [n for n, g in enumerate(gens) if sc.j[g] >= k]
        z = len(cols) - rank_q([[row[c] for c in cols] for row in d_out])
        low = [n for n, g in enumerate(gens) if sc.j[g] < k]
        b = r_in - rank_q([d_in[r] for r in low])
        image_rank[k] = z - b
    levels = {}
    prev = 0
    for k in jvals:
        if image_rank[k] > prev:
            levels[k] = image_rank[k] - prev
        prev = image_rank[k]
    return levels


@dataclass
class LeeSummary:
    """Ranks and s-levels of doubled Lee homology per homological degree."""

    ranks: dict[int, int]
    levels: dict[int, dict[int, int]]
    acs_word: tuple | None = None
    acs_cycles: int | None = None
    n_plus: int = 0
    n_minus: int = 0

    @property
    def total_rank(self) -> int:
        return sum(self.ranks.values())

    def support(self) -> list[int]:
        return sorted(i for i, r in self.ranks.items() if r)

    def l_parity(self) -> int | None:
        """Parity of quantum degrees of the ``l`` summand at the colourable state."""
        if self.acs_word is None:
            return None
        i = sum(self.acs_word) - self.n_minus
        return (self.acs_cycles - 1 + i + self.n_plus - self.n_minus) % 2

    def split_levels(self, i: int) -> tuple[list[int], list[int]]:
        """Levels in degree ``i`` split into (upper, lower) summand classes."""
        par = self.l_parity()
        lv = sorted(self.levels.get(i, {}), reverse=True)
        return ([k for k in lv if k % 2 != par], [k for k in lv if k % 2 == par])

    def to_json(self) -> dict:
        return {"invariant": "lee", "ranks": {str(i): r for i, r in self.ranks.items() if r},
                "levels": {str(i): {str(k): m for k, m in lv.items()}
                           for i, lv in self.levels.items() if lv}}


def lee_summary(d: VirtualLinkDiagram, max_crossings: int | None = None) -> LeeSummary:
    """Rational ranks and filtration levels of doubled Lee homology."""
    require_admissible(d)
    c = build_complex(d, LEE, max_crossings)
    sc = lee_complex_reduced(c)
    ranks, levels = {}, {}
    for i in c.degrees:
        lv = filtration_levels(sc, i)
        levels[i] = lv
        ranks[i] = sum(lv.values())
    acs = enumerate_alternately_coloured(d)
    word = acs[0][0].word if acs else None
    m = acs[0][0].n_cycles if acs else None
    return LeeSummary(ranks, levels, word, m, d.n_plus, d.n_minus)


@dataclass(frozen=True)
class RasmussenPair:
    """``s1`` is the second-highest s-level, ``s2`` the Lee support degree.

    ``sl_max`` is the top level among classes of the lower-summand parity;
    it coincides with ``s1`` unless the lower summand sits on top, which
    happens on some diagrams of the unknot, so it is informational only.
    """

    s1: int
    s2: int
    sl_max: int | None = None

    def to_json(self) -> dict:
        return {"invariant": "rasmussen", "s1": self.s1, "s2": self.s2}


def is_leftmost(d: VirtualLinkDiagram) -> bool:
    """True iff every positive crossing is even and every negative one odd."""
    if not d.is_knot():
        raise NotAKnot("leftmost is defined for knot diagrams")
    par = crossing_parity(d)
    return all((par[c] == "even") == (s > 0) for c, s in d.signs.items())


def _acs_generators(d: VirtualLinkDiagram, tag: int):
    """The two alternately coloured generators with the given tag, in the v basis."""
    out = []
    for s, col in enumerate_alternately_coloured(d):
        labels = tuple(1 if col[k] == GREEN else 0 for k in range(s.n_cycles))
        x = AlgebraElement.of(DoubledGenerator(labels, tag), 1, basis="rg")
        out.append((s, from_red_green(x)))
    return out


def rasmussen_leftmost(d: VirtualLinkDiagram) -> RasmussenPair:
    """Chain-level evaluation for leftmost knots.

    The colourable state sits at the bottom of the cube, so homology classes
    there have a unique representative and the s-level of ``s +- sbar`` is
    the lowest quantum degree among its terms.  The four classes (two per
    summand) sit in distinct residues mod 4, so the top level of homology
    is the largest of their four levels.
    """
    if not is_leftmost(d):
        raise ValueError("diagram is not leftmost")
    levels = {}
    for tag in (0, 1):
        (s, x), (_, y) = _acs_generators(d, tag)
        i = s.ones - d.n_minus
        shift = i + d.n_plus - d.n_minus
        levels[tag] = [min(sum(1 - 2 * v for v in g.labels) - g.summand + shift
                           for g in z.terms) for z in (x + y, x - y)]
    top = max(levels[0] + levels[1])
    return RasmussenPair(top - 1, i, max(levels[1]))


def rasmussen(d: VirtualLinkDiagram, max_crossings: int | None = None,
              fast: bool = True) -> RasmussenPair:
    """The doubled Rasmussen invariant ``(s1, s2)`` of a knot diagram."""
    if not d.is_knot():
        raise NotAKnot("the doubled Rasmussen invariant is defined for knots")
    if fast and is_leftmost(d):
        require_admissible(d)
        return rasmussen_leftmost(d)
    lee = lee_summary(d, max_crossings)
    (s2,) = lee.support()
    _, lower = lee.split_levels(s2)
    return RasmussenPair(max(lee.levels[s2]) - 1, s2, max(lower))


# ---------------------------------------------------------- Euler and Jones

def euler_characteristic(h: BigradedAbelianGroup) -> Laurent:
    """``sum (-1)^i rank H^{i,j} q^j``; torsion is ignored."""
    acc: dict[int, int] = {}
    for (i, j), (f, _) in h.groups.items():
        acc[j] = acc.get(j, 0) + (-1) ** (i % 2) * f
    return Laurent(acc)


def chain_euler_characteristic(c: DoubledChainComplex) -> Laurent:
    """Graded Euler characteristic of the chain groups themselves."""
    acc: dict[int, int] = {}
    for (i, j), r in c.bigraded_ranks().items():
        acc[j] = acc.get(j, 0) + (-1) ** (i % 2) * r
    return Laurent(acc)


def jones(d: VirtualLinkDiagram, max_crossings: int | None = None) -> Laurent:
    """Unnormalised Jones polynomial: the Euler characteristic of DKh over ``1 + q^-1``.

    The Euler characteristic is taken on chain level, which equals that of
    homology and stays meaningful on diagrams whose cube is not a complex.
    """
    c = build_complex(d, STANDARD, max_crossings)
    return chain_euler_characteristic(c).divide_one_plus_qinv()


def bracket_oracle(d: VirtualLinkDiagram, max_crossings: int | None = None) -> Laurent:
    """Kauffman bracket state sum, normalised so the unknot gives ``q + 1/q``.

    Works with the variable ``A``: each state contributes
    ``A^(#A - #B) (-A^2 - A^-2)^loops``; the result is multiplied by
    ``(-A^3)^-w`` and ``A^2`` is replaced by ``-q^-1``.  Loops are counted by
    walking half-edges, independently of the cube machinery.
    """
    n = d.n_crossings
    if n > crossing_cap(STANDARD, max_crossings):
        raise ResourceLimit(f"{n} crossings exceeds the cap")
    # half-edge model: each token position has an 'in' and an 'out' port
    ports = []
    nxt = {}
    for k, comp in enumerate(d.components):
        for p in range(len(comp)):
            nxt[(k, p, "out")] = (k, (p + 1) % len(comp), "in")
            nxt[(k, (p + 1) % len(comp), "in")] = (k, p, "out")
            ports += [(k, p, "in"), (k, p, "out")]
    empties = sum(1 for c in d.components if not c)
    occ = d.occurrences
    ids = d.crossings
    writhe = d.n_plus - d.n_minus
    poly: dict[int, int] = {}              # exponent of A -> coefficient
    delta = {2: -1, -2: -1}

    def mul(p, q):
        r: dict[int, int] = {}
        for a, x in p.items():
            for b, y in q.items():
                r[a + b] = r.get(a + b, 0) + x * y
        return r

    delta_pow = [{0: 1}]
    for _ in range(n + d.n_components + 1):
        delta_pow.append(mul(delta_pow[-1], delta))
    for choice in itertools.product((True, False), repeat=n):   # True = A-smoothing
        link = {}
        for c, a_smooth in zip(ids, choice):
            (ka, pa), (kb, pb) = occ[c]
            ia, oa, ib, ob = (ka, pa, "in"), (ka, pa, "out"), (kb, pb, "in"), (kb, pb, "out")
            oriented = a_smooth == (d.signs[c] > 0)
            pairs = [(ia, ob), (ib, oa)] if oriented else [(ia, ib), (oa, ob)]
            for u, v in pairs:
                link[u], link[v] = v, u
        seen = set()
        loops = empties
        for start in ports:
            if start in seen:
                continue
            loops += 1
            cur = start
            while cur not in seen:
                seen.add(cur)
                other = nxt[cur]
                seen.add(other)
                cur = link[other]
        na = sum(choice)
        shift = na - (n - na)
        for e, v in delta_pow[loops].items():
            poly[e + shift] = poly.get(e + shift, 0) + v
    # (-A^3)^(-w)
    sign = -1 if writhe % 2 else 1
    poly = {e - 3 * writhe: sign * v for e, v in poly.items() if v}
    out: dict[int, int] = {}
    for e, v in poly.items():
        assert e % 2 == 0, "odd A exponent in normalised bracket"
        h = e // 2                         # A^e = (-q^-1)^h
        out[-h] = out.get(-h, 0) + v * (-1 if h % 2 else 1)
    return Laurent(out)
