"""Exact sparse linear algebra for chain complexes.

Three pieces:

* :func:`smith_invariants` - invariant factors of an integer matrix;
* :func:`rank_q` - rank over the rationals;
* :func:`cancel` - Gaussian elimination of a chain complex (cancel an
  invertible entry ``a -> b`` and correct the zig-zag entries), which
  preserves homology and, when only entries with equal filtration degree
  are cancelled, the filtered chain homotopy type.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Callable, Sequence

__all__ = ["smith_invariants", "rank_q", "cancel", "SparseComplex", "dense", "ImageReducer"]


def smith_invariants(rows: Sequence[Sequence[int]]) -> list[int]:
    """Nonzero invariant factors ``d_1 | d_2 | ...`` of an integer matrix.

    Classic pivoting on the entry of least absolute value; the input is
    not modified.
    """
    a = [list(map(int, r)) for r in rows]
    if not a or not a[0]:
        return []
    m, n = len(a), len(a[0])
    out = []
    t = 0
    while t < min(m, n):
        # locate the smallest nonzero entry in the trailing block
        best = None
        for i in range(t, m):
            row = a[i]
            for j in range(t, n):
                v = row[j]
                if v and (best is None or abs(v) < best[0]):
                    best = (abs(v), i, j)
                    if best[0] == 1:
                        break
            if best is not None and best[0] == 1:
                break
        if best is None:
            break
        _, pi, pj = best
        a[t], a[pi] = a[pi], a[t]
        for row in a:
            row[t], row[pj] = row[pj], row[t]
        while True:
            p = a[t][t]
            done = True
            for i in range(t + 1, m):  # clear column
                if a[i][t]:
                    q = a[i][t] // p
                    if q:
                        ri, rt = a[i], a[t]
                        for j in range(t, n):
                            ri[j] -= q * rt[j]
                    if a[i][t]:
                        done = False
            for j in range(t + 1, n):  # clear row
                if a[t][j]:
                    q = a[t][j] // p
                    if q:
                        for row in a[t:]:
                            row[j] -= q * row[t]
                    if a[t][j]:
                        done = False
            if done:
                # divisibility of the rest of the block
                bad = next(((i, j) for i in range(t + 1, m) for j in range(t + 1, n)
                            if a[i][j] % p), None)
                if bad is None:
                    break
                i, _ = bad
                for j in range(t, n):
                    a[t][j] += a[i][j]
                continue
            # move the smallest remaining entry of row/column t to the pivot
            cand = [(abs(a[i][t]), i, t) for i in range(t, m) if a[i][t]]
            cand += [(abs(a[t][j]), t, j) for j in range(t, n) if a[t][j]]
            _, i, j = min(cand)
            a[t], a[i] = a[i], a[t]
            for row in a:
                row[t], row[j] = row[j], row[t]
        out.append(abs(a[t][t]))
        t += 1
    return out


def rank_q(rows: Sequence[Sequence]) -> int:
    """Rank over the rationals by fraction-exact row reduction."""
    a = [[Fraction(x) for x in r] for r in rows if any(r)]
    if not a:
        return 0
    n = len(a[0])
    rank = 0
    for col in range(n):
        piv = next((i for i in range(rank, len(a)) if a[i][col]), None)
        if piv is None:
            continue
        a[rank], a[piv] = a[piv], a[rank]
        pr = a[rank]
        inv = 1 / pr[col]
        for i in range(rank + 1, len(a)):
            f = a[i][col]
            if f:
                f *= inv
                ri = a[i]
                for j in range(col, n):
                    if pr[j]:
                        ri[j] -= f * pr[j]
        rank += 1
        if rank == len(a):
            break
    return rank


class SparseComplex:
    """Mutable sparse complex used by :func:`cancel`.

    Generators are global integer ids with a homological degree and a
    filtration (quantum) degree; ``out[g]`` maps targets to coefficients and
    ``inn[t]`` mirrors it.
    """

    def __init__(self):
        self.deg: dict[int, int] = {}
        self.j: dict[int, int] = {}
        self.out: dict[int, dict[int, object]] = {}
        self.inn: dict[int, dict[int, object]] = {}

    @classmethod
    def from_chain_complex(cls, c, ring=int) -> "SparseComplex":
        sc = cls()
        ids = {}
        for i in c.degrees:
            for k, j in enumerate(c.jgrades[i]):
                g = len(ids)
                ids[(i, k)] = g
                sc.deg[g], sc.j[g] = i, j
                sc.out[g], sc.inn[g] = {}, {}
        for i, mat in c.d.items():
            for (r, col), v in mat.items():
                s, t = ids[(i, col)], ids[(i + 1, r)]
                sc.out[s][t] = ring(v)
                sc.inn[t][s] = ring(v)
        sc.ids = ids
        return sc

    def generators(self, i: int) -> list[int]:
        return sorted(g for g, dg in self.deg.items() if dg == i)

    def _remove(self, g: int) -> None:
        for s in self.inn.pop(g):
            self.out[s].pop(g, None)
        for t in self.out.pop(g):
            self.inn[t].pop(g, None)
        del self.deg[g], self.j[g]

    def cancel_pair(self, a: int, b: int) -> None:
        """Cancel the invertible entry ``d(a -> b)``."""
        v = self.out[a][b]
        srcs = [(x, c) for x, c in self.inn[b].items() if x != a]
        tgts = [(y, c) for y, c in self.out[a].items() if y != b]
        unit = isinstance(v, int)
        for x, xb in srcs:
            ox = self.out[x]
            f = xb * v if unit else xb / v
            for y, ay in tgts:
                nv = ox.get(y, 0) - f * ay
                if nv:
                    ox[y] = nv
                    self.inn[y][x] = nv
                else:
                    ox.pop(y, None)
                    self.inn[y].pop(x, None)
        self._remove(a)
        self._remove(b)


def cancel(sc: SparseComplex, allowed: Callable[[int, int, object], bool]) -> SparseComplex:
    """Cancel pivots until no allowed entry remains.

    ``allowed(a, b, v)`` decides whether ``d(a -> b) = v`` may be cancelled
    (for integers it must be a unit).  Pivots with the smallest fill-in
    estimate are preferred.
    """
    changed = True
    while changed:
        changed = False
        for a in sorted(sc.deg, key=lambda g: len(sc.out.get(g, ()))):
            if a not in sc.deg:
                continue
            best = None
            for b, v in sc.out[a].items():
                if allowed(a, b, v):
                    cost = len(sc.inn[b])
                    if best is None or cost < best[0]:
                        best = (cost, b)
                        if cost == 1:
                            break
            if best is not None:
                sc.cancel_pair(a, best[1])
                changed = True
    return sc


def dense(sc: SparseComplex, i: int, rows=None, cols=None) -> list[list]:
    """Matrix of ``d_i`` on the surviving generators (rows: degree ``i+1``)."""
    cols = sc.generators(i) if cols is None else cols
    rows = sc.generators(i + 1) if rows is None else rows
    ridx = {g: k for k, g in enumerate(rows)}
    mat = [[0] * len(cols) for _ in rows]
    for k, g in enumerate(cols):
        for t, v in sc.out[g].items():
            r = ridx.get(t)
            if r is not None:
                mat[r][k] = v
    return mat


class ImageReducer:
    """Incremental echelon basis of a span of sparse rational vectors.

    Vectors are ``{index: value}`` dictionaries.  :meth:`add` inserts a
    vector into the span; :meth:`reduce` returns the remainder of a vector
    modulo the span (zero iff the vector lies in it).
    """

    def __init__(self):
        self.pivots: dict[int, dict[int, Fraction]] = {}

    def reduce(self, vec: dict) -> dict:
        v = {k: Fraction(x) for k, x in vec.items() if x}
        while v:
            p = max(v)
            row = self.pivots.get(p)
            if row is None:
                return v
            f = v[p] / row[p]
            for k, x in row.items():
                nv = v.get(k, 0) - f * x
                if nv:
                    v[k] = nv
                else:
                    v.pop(k, None)
        return v

    def add(self, vec: dict) -> bool:
        """Insert ``vec``; return False if it was already in the span."""
        v = self.reduce(vec)
        if not v:
            return False
        self.pivots[max(v)] = v
        return True

    def __len__(self) -> int:
        return len(self.pivots)
