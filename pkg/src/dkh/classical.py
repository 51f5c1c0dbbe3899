"""A naive classical Lee complex, kept separate from the doubled machinery.

It re-traces smoothings directly from the token sequence and uses dense
matrices, so it serves as an independent cross-check of the doubled
Rasmussen invariant on classical knots, where ``s1`` must equal the
classical Rasmussen invariant.
"""
from __future__ import annotations

import itertools
from fractions import Fraction

from .diagram import VirtualLinkDiagram
from .errors import NotAKnot

__all__ = ["classical_rasmussen"]


def _loops(d: VirtualLinkDiagram, word: dict[int, int]) -> list[set]:
    """Loops of a smoothing as sets of ``("in"|"out", position)`` nodes."""
    seq = d.components[0]
    n = len(seq)
    pos: dict[int, list[int]] = {}
    for p, t in enumerate(seq):
        pos.setdefault(t.cid, []).append(p)
    # nodes: ("in", p) and ("out", p); arcs join out(p) to in(p+1)
    adj: dict[tuple, list[tuple]] = {}

    def link(a, b):
        adj.setdefault(a, []).append(b)
        adj.setdefault(b, []).append(a)

    for p in range(n):
        link(("out", p), ("in", (p + 1) % n))
    for c, (a, b) in pos.items():
        oriented = word[c] == (0 if d.signs[c] > 0 else 1)
        if oriented:
            link(("in", a), ("out", b))
            link(("in", b), ("out", a))
        else:
            link(("in", a), ("in", b))
            link(("out", a), ("out", b))
    seen, loops = set(), []
    for start in adj:
        if start in seen:
            continue
        stack, comp = [start], set()
        while stack:
            v = stack.pop()
            if v in comp:
                continue
            comp.add(v)
            stack.extend(adj[v])
        seen |= comp
        loops.append(comp)
    return loops


def _rank(rows: list[list[Fraction]]) -> int:
    a = [r[:] for r in rows if any(r)]
    rank, ncol = 0, len(a[0]) if a else 0
    for c in range(ncol):
        p = next((i for i in range(rank, len(a)) if a[i][c]), None)
        if p is None:
            continue
        a[rank], a[p] = a[p], a[rank]
        for i in range(rank + 1, len(a)):
            if a[i][c]:
                f = a[i][c] / a[rank][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[rank])]
        rank += 1
    return rank


def classical_rasmussen(d: VirtualLinkDiagram) -> int:
    """Rasmussen's ``s`` of a classical knot diagram by brute force.

    Computes Lee homology in degree 0 and the top filtration level ``s_max``
    of its classes; ``s = s_max - 1``.
    """
    if not d.is_knot() or not d.components[0]:
        if d.is_knot():
            return 0
        raise NotAKnot("classical_rasmussen needs a knot diagram")
    ids = sorted(d.signs)
    n_minus = sum(1 for c in ids if d.signs[c] < 0)
    n_plus = len(ids) - n_minus
    gens: dict[int, list] = {}        # degree -> [(word, loops, labels, q)]
    for bits in itertools.product((0, 1), repeat=len(ids)):
        word = dict(zip(ids, bits))
        loops = _loops(d, word)
        i = sum(bits) - n_minus
        for labels in itertools.product((1, -1), repeat=len(loops)):   # 1 -> "1", -1 -> "x"
            q = sum(labels) + i + n_plus - n_minus
            gens.setdefault(i, []).append((bits, loops, labels, q))

    def diff(i):
        src, tgt = gens.get(i, []), gens.get(i + 1, [])
        index = {(b, tuple(l)): k for k, (b, _, l, _) in enumerate(tgt)}
        m = [[Fraction(0)] * len(src) for _ in tgt]
        for col, (bits, loops, labels, _) in enumerate(src):
            for k, c in enumerate(ids):
                if bits[k]:
                    continue
                sign = (-1) ** sum(bits[:k])
                nb = bits[:k] + (1,) + bits[k + 1:]
                new_loops = _loops(d, dict(zip(ids, nb)))
                for img, coef in _lee_edge(loops, labels, new_loops):
                    m[index[(nb, img)]][col] += sign * coef
        return m

    d_out, d_in = diff(0), diff(-1)
    g0 = gens.get(0, [])
    r_in = _rank(d_in) if d_in and d_in[0] else 0
    best = None
    for k in sorted({g[3] for g in g0}, reverse=True):
        cols = [n for n, g in enumerate(g0) if g[3] >= k]
        z = len(cols) - (_rank([[row[c] for c in cols] for row in d_out]) if d_out else 0)
        low = [n for n, g in enumerate(g0) if g[3] < k]
        b = r_in - (_rank([d_in[r] for r in low]) if low and d_in and d_in[0] else 0)
        if z - b > 0:
            best = k
            break
    return best - 1


def _lee_edge(loops, labels, new_loops):
    """Lee merge/split between two adjacent smoothings, loops matched by their nodes."""
    old = [frozenset(x) for x in loops]
    new = [frozenset(x) for x in new_loops]
    keep = {o: n for o in old for n in new if o == n}
    src = [k for k, o in enumerate(old) if o not in keep]
    tgt = [k for k, n in enumerate(new) if n not in keep.values()]
    base = [0] * len(new)
    for k, o in enumerate(old):
        if o in keep:
            base[new.index(keep[o])] = labels[k]
    out = []
    if len(src) == 2 and len(tgt) == 1:
        a, b = labels[src[0]], labels[src[1]]
        # 1*1 = 1, 1*x = x, x*x = 1
        base[tgt[0]] = a * b
        out.append((tuple(base), 1))
    elif len(src) == 1 and len(tgt) == 2:
        a = labels[src[0]]
        # D(1) = 1x + x1, D(x) = xx + 11
        pairs = [(1, -1), (-1, 1)] if a == 1 else [(-1, -1), (1, 1)]
        for x, y in pairs:
            base[tgt[0]], base[tgt[1]] = x, y
            out.append((tuple(base), 1))
    else:
        raise ValueError("single-cycle edge: the diagram is not classical")
    return out
