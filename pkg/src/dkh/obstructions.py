"""Decision procedures built on doubled Khovanov and doubled Lee homology.

Every procedure returns a :class:`Verdict` whose ``status`` is either a
positive finding (``"obstructed"``, ``"yes"``, ``"fails"``) or
``"inconclusive"``; none of them ever certifies the converse property.
Each verdict names the result it relies on in ``theorems``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .diagram import VirtualLinkDiagram, odd_writhe
from .errors import NotAKnot, S2Mismatch
from .homology import BigradedAbelianGroup, dkh, lee_summary, rasmussen

__all__ = [
    "Verdict", "PeelResult", "GenusBound", "ObstructionReport", "peel",
    "classicality_test", "unknot_connect_sum_condition", "slice_obstruction",
    "concordance_obstruction", "genus_lower_bound", "link_to_knot_bound", "report",
]

# names of the results a verdict can rest on
CLASSICAL_SPLITTING = "classical splitting DKh = Kh + Kh{-1}"
UNKNOT_SUM = "connect sums of trivial knots have the homology of the unknot"
ODD_WRITHE_SLICE = "nonzero odd writhe obstructs sliceness"
ODD_WRITHE_CONCORDANCE = "odd writhe is a concordance invariant"
ODD_WRITHE_CLASSICAL = "nonzero odd writhe obstructs concordance to a classical knot"
S1_SLICE = "s2 = 0 and s1 != 0 obstructs sliceness"
S1_CONCORDANCE = "s1 is a concordance invariant among knots with equal s2"
GENUS_BOUND = "|s1 difference| / 2 bounds targeted cobordisms with shared degree s2"
LINK_TO_KNOT = "connected concordance from a link needs M(L) <= s1(K) + |L|"


@dataclass
class Verdict:
    status: str
    reason: str = ""
    theorems: list[str] = field(default_factory=list)
    evidence: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {"status": self.status, "reason": self.reason,
                "theorems": list(self.theorems), "evidence": dict(self.evidence)}


# ------------------------------------------------------------ classicality

def _prime_powers(n: int) -> list[int]:
    out, p = [], 2
    while p * p <= n:
        if n % p == 0:
            q = 1
            while n % p == 0:
                n //= p
                q *= p
            out.append(q)
        p += 1
    if n > 1:
        out.append(n)
    return out


def _peel_one(counts: dict[tuple[int, int], int]):
    """Solve ``h(i,j) = g(i,j) + g(i,j+1)`` top-down; return ``(g, failure)``."""
    g: dict[tuple[int, int], int] = {}
    for i in sorted({i for i, _ in counts}):
        js = [j for (ii, j) in counts if ii == i]
        prev = 0
        for j in range(max(js), min(js) - 2, -1):
            v = counts.get((i, j), 0) - prev
            if v < 0:
                return g, (i, j)
            if v:
                g[(i, j)] = v
            prev = v
        if prev:  # residual below the support
            return g, (i, min(js) - 1)
    return g, None


@dataclass
class PeelResult:
    """Outcome of splitting ``h`` as ``G + G{-1}``.

    ``free`` and ``torsion`` (keyed by prime power) hold the recovered
    ``G``; ``failure`` is the first bidegree where no ``G`` exists, with
    ``failure_kind`` naming the rank that failed (``"free"`` or ``"Z/p^k"``).
    """

    free: dict
    torsion: dict
    failure: tuple | None = None
    failure_kind: str | None = None


def peel(h: BigradedAbelianGroup) -> PeelResult:
    """Unique top-down solution of ``h(i,j) = G(i,j) + G(i,j+1)``.

    Free ranks and the multiplicity of every prime-power elementary divisor
    are peeled independently.
    """
    free_counts = {k: f for k, (f, _) in h.groups.items() if f}
    g_free, fail = _peel_one(free_counts)
    if fail:
        return PeelResult(g_free, {}, fail, "free")
    by_pp: dict[int, dict] = {}
    for k, (_, tors) in h.groups.items():
        for t in tors:
            for q in _prime_powers(t):
                by_pp.setdefault(q, {}).setdefault(k, 0)
                by_pp[q][k] += 1
    g_tors = {}
    for q in sorted(by_pp):
        g_tors[q], fail = _peel_one(by_pp[q])
        if fail:
            return PeelResult(g_free, g_tors, fail, f"Z/{q}")
    return PeelResult(g_free, g_tors)


def classicality_test(h: BigradedAbelianGroup) -> Verdict:
    """``"yes"`` (non-classical) if ``h`` is not of the form ``G + G{-1}``.

    An ``"inconclusive"`` answer carries the recovered ``G``; it does not
    mean the link is classical.
    """
    res = peel(h)
    if res.failure is not None:
        return Verdict("yes", f"{res.failure_kind} rank cannot be split at (i, j) = {res.failure}",
                       [CLASSICAL_SPLITTING],
                       {"peel_failure": list(res.failure), "kind": res.failure_kind})
    witness = [{"i": i, "j": j, "free_rank": f} for (i, j), f in sorted(res.free.items())]
    return Verdict("inconclusive", "homology splits as G + G{-1}", [CLASSICAL_SPLITTING],
                   {"peel_failure": None, "witness": witness})


# ------------------------------------------------------------------ knots

def _knot(d: VirtualLinkDiagram, what: str) -> None:
    if not d.is_knot():
        raise NotAKnot(f"{what} needs a knot diagram")


def unknot_connect_sum_condition(d: VirtualLinkDiagram) -> Verdict:
    """``"holds"`` iff DKh(d) equals DKh of the unknot; ``"fails"`` proves d is
    not a connect sum of two trivial knots."""
    _knot(d, "unknot_connect_sum_condition")
    unknot = dkh(VirtualLinkDiagram.from_components([[]]))
    same = dkh(d) == unknot
    return Verdict("holds" if same else "fails",
                   "DKh agrees with the unknot" if same else "DKh differs from the unknot",
                   [UNKNOT_SUM])


def slice_obstruction(d: VirtualLinkDiagram, max_crossings: int | None = None) -> Verdict:
    _knot(d, "slice_obstruction")
    r = rasmussen(d, max_crossings)
    ev = {"s1": r.s1, "s2": r.s2, "J": odd_writhe(d)}
    if r.s2 != 0:
        return Verdict("obstructed", f"s2 = {r.s2} != 0", [ODD_WRITHE_SLICE], ev)
    if r.s1 != 0:
        return Verdict("obstructed", f"s2 = 0 and s1 = {r.s1} != 0", [S1_SLICE], ev)
    return Verdict("inconclusive", "s1 = s2 = 0", [ODD_WRITHE_SLICE, S1_SLICE], ev)


def concordance_obstruction(d1: VirtualLinkDiagram, d2: VirtualLinkDiagram,
                            max_crossings: int | None = None) -> Verdict:
    _knot(d1, "concordance_obstruction")
    _knot(d2, "concordance_obstruction")
    j1, j2 = odd_writhe(d1), odd_writhe(d2)
    ev: dict = {"J": [j1, j2]}
    notes = []
    if j1 or j2:
        ev["not_concordant_to_classical"] = [bool(j1), bool(j2)]
        notes.append(ODD_WRITHE_CLASSICAL)
    if j1 != j2:
        return Verdict("obstructed", f"J differs: {j1} vs {j2}",
                       [ODD_WRITHE_CONCORDANCE] + notes, ev)
    r1, r2 = rasmussen(d1, max_crossings), rasmussen(d2, max_crossings)
    ev.update(s1=[r1.s1, r2.s1], s2=[r1.s2, r2.s2])
    if r1.s2 == r2.s2 and r1.s1 != r2.s1:
        return Verdict("obstructed", f"s2 = {r1.s2} for both, s1 differs: {r1.s1} vs {r2.s1}",
                       [S1_CONCORDANCE] + notes, ev)
    return Verdict("inconclusive", "equal odd writhe and doubled Rasmussen invariant",
                   [ODD_WRITHE_CONCORDANCE, S1_CONCORDANCE] + notes, ev)


@dataclass(frozen=True)
class GenusBound:
    value: Fraction
    caveat: str

    def to_json(self) -> dict:
        return {"genus_lower_bound": str(self.value), "caveat": self.caveat}


def genus_lower_bound(d1: VirtualLinkDiagram, d2: VirtualLinkDiagram,
                      max_crossings: int | None = None) -> GenusBound:
    """``|s1(d1) - s1(d2)| / 2`` for knots with equal ``s2``.

    The bound only applies to targeted cobordisms for which ``s2`` is a
    shared degree; the diagrams cannot certify that, hence the caveat.
    """
    _knot(d1, "genus_lower_bound")
    _knot(d2, "genus_lower_bound")
    r1, r2 = rasmussen(d1, max_crossings), rasmussen(d2, max_crossings)
    if r1.s2 != r2.s2:
        raise S2Mismatch(f"s2 differs ({r1.s2} vs {r2.s2}); no genus bound applies")
    return GenusBound(Fraction(abs(r1.s1 - r2.s1), 2),
                      f"lower bound for targeted cobordisms with shared degree {r1.s2}")


def link_to_knot_bound(link: VirtualLinkDiagram, knot: VirtualLinkDiagram,
                       max_crossings: int | None = None) -> Verdict:
    """Obstruct connected concordances from ``link`` to ``knot``.

    ``M(L)`` is taken as the top s-level over all Lee classes of the link in
    degree ``s2(knot)``.  This bounds the quantity for every cobordism, so
    the obstruction stays valid.
    """
    _knot(knot, "link_to_knot_bound (second argument)")
    r = rasmussen(knot, max_crossings)
    lee = lee_summary(link, max_crossings)
    n = link.n_components
    ev = {"s1": r.s1, "s2": r.s2, "components": n}
    levels = lee.levels.get(r.s2, {})
    if not levels:
        ev["M"] = None
        return Verdict("obstructed",
                       f"doubled Lee homology of the link vanishes in degree {r.s2}",
                       [LINK_TO_KNOT], ev)
    m = max(levels)
    ev["M"] = m
    if m > r.s1 + n:
        return Verdict("obstructed", f"M(L) = {m} > s1 + |L| = {r.s1 + n}", [LINK_TO_KNOT], ev)
    return Verdict("inconclusive", f"M(L) = {m} <= s1 + |L| = {r.s1 + n}", [LINK_TO_KNOT], ev)


# ----------------------------------------------------------------- report

@dataclass
class ObstructionReport:
    verdicts: dict[str, Verdict]
    genus_bound: GenusBound | None = None

    def to_json(self) -> dict:
        slice_ev = self.verdicts["slice"].evidence if "slice" in self.verdicts else {}
        evidence = {k: slice_ev.get(k) for k in ("s1", "s2", "J")}
        evidence["peel_failure"] = self.verdicts["non_classical"].evidence.get("peel_failure")
        theorems: list[str] = []
        for v in self.verdicts.values():
            theorems += [t for t in v.theorems if t not in theorems]
        out = {"verdicts": {k: v.status for k, v in self.verdicts.items()},
               "evidence": evidence, "theorems": theorems}
        if self.genus_bound is not None:
            out["genus_bound"] = self.genus_bound.to_json()
        return out


def report(d: VirtualLinkDiagram, max_crossings: int | None = None) -> ObstructionReport:
    """Run every check that applies to ``d`` (knot-only checks are skipped for links)."""
    verdicts = {"non_classical": classicality_test(dkh(d, max_crossings=max_crossings))}
    if d.is_knot():
        verdicts["unknot_connect_sum_condition"] = unknot_connect_sum_condition(d)
        verdicts["slice"] = slice_obstruction(d, max_crossings)
        unknot = VirtualLinkDiagram.from_components([[]])
        verdicts["concordance"] = concordance_obstruction(d, unknot, max_crossings)
    return ObstructionReport(verdicts)
