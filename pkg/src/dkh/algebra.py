"""The doubled algebra and its structure maps.

A generator of the doubled space attached to a smoothing with ``m`` cycles
is a label vector in ``{+, -}^m`` together with one tag for the whole
string: ``u`` (upper copy) or ``l`` (lower copy, shifted down by one in
quantum degree).  Internally labels are encoded ``0 = +``, ``1 = -`` and
tags ``0 = u``, ``1 = l``.

Standard maps::

    m : ++ -> +,  +- , -+ -> -,  -- -> 0
    D : +  -> +- + -+,  - -> --
    eta : u+ -> l+,  u- -> l-,  l+ -> 2 u-,  l- -> 0

The Lee variant changes ``m(--) = +``, ``D(-) = -- + ++`` and
``eta(l-) = 2 u+``.  Everything else is shared, including ``eta(u+) = l+``;
this is the choice that makes the red/green formulas
``eta(r^u) = r^l, eta(g^u) = g^l`` hold and squares anticommute.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping

from .errors import ArityMismatch, CycleNotFree, VariantMismatch
from .smoothing import MERGE, SINGLE, SPLIT, EdgeData

__all__ = [
    "STANDARD", "LEE", "DoubledGenerator", "AlgebraElement", "gen",
    "merge_terms", "split_terms", "eta_terms", "edge_terms",
    "apply_edge_map", "birth_map", "death_map", "to_red_green",
    "from_red_green", "p_degree", "quantum_degree",
]

STANDARD, LEE = "standard", "lee"
PLUS, MINUS = 0, 1
U, L = 0, 1

_MERGE = {
    STANDARD: {(0, 0): [(1, 0)], (0, 1): [(1, 1)], (1, 0): [(1, 1)], (1, 1): []},
    LEE: {(0, 0): [(1, 0)], (0, 1): [(1, 1)], (1, 0): [(1, 1)], (1, 1): [(1, 0)]},
}
_SPLIT = {
    STANDARD: {0: [(1, (0, 1)), (1, (1, 0))], 1: [(1, (1, 1))]},
    LEE: {0: [(1, (0, 1)), (1, (1, 0))], 1: [(1, (1, 1)), (1, (0, 0))]},
}
_ETA = {
    STANDARD: {(0, U): [(1, 0, L)], (1, U): [(1, 1, L)], (0, L): [(2, 1, U)], (1, L): []},
    LEE: {(0, U): [(1, 0, L)], (1, U): [(1, 1, L)], (0, L): [(2, 1, U)], (1, L): [(2, 0, U)]},
}


def _check_variant(variant: str) -> None:
    if variant not in (STANDARD, LEE):
        raise VariantMismatch(f"unknown variant {variant!r}")


def merge_terms(variant: str, a: int, b: int):
    return _MERGE[variant][(a, b)]


def split_terms(variant: str, a: int):
    return _SPLIT[variant][a]


def eta_terms(variant: str, a: int, tag: int):
    return _ETA[variant][(a, tag)]


def edge_terms(kind: str, variant: str, labels: tuple, tag: int, ed: EdgeData):
    """Image of one generator under the edge map, as ``(coef, labels, tag)`` triples."""
    base = [0] * ed.n_target
    for i, j in ed.carry:
        base[j] = labels[i]
    out = []
    if kind == MERGE:
        (s1, s2), (t,) = ed.src, ed.tgt
        for coef, c in _MERGE[variant][(labels[s1], labels[s2])]:
            base[t] = c
            out.append((coef, tuple(base), tag))
    elif kind == SPLIT:
        (s,), (t1, t2) = ed.src, ed.tgt
        for coef, (c1, c2) in _SPLIT[variant][labels[s]]:
            base[t1], base[t2] = c1, c2
            out.append((coef, tuple(base), tag))
    elif kind == SINGLE:
        (s,), (t,) = ed.src, ed.tgt
        for coef, c, ntag in _ETA[variant][(labels[s], tag)]:
            base[t] = c
            out.append((coef, tuple(base), ntag))
    else:
        raise ValueError(f"unknown edge kind {kind!r}")
    return out


@dataclass(frozen=True, order=True)
class DoubledGenerator:
    """Label vector (``0 = +``, ``1 = -``) plus whole-string tag (``0 = u``, ``1 = l``)."""

    labels: tuple[int, ...]
    summand: int = U

    def __str__(self) -> str:
        s = "".join("+-"[x] for x in self.labels)
        return f"v^{'ul'[self.summand]}_{{{s}}}"


def gen(labels: str, summand: str = "u") -> DoubledGenerator:
    """Build a generator from strings, e.g. ``gen("+-", "l")``."""
    return DoubledGenerator(tuple(0 if ch == "+" else 1 for ch in labels.replace("−", "-")),
                            U if summand == "u" else L)


class AlgebraElement:
    """A finite linear combination of doubled generators.

    ``basis`` is ``"v"`` for the standard basis or ``"rg"`` for the
    red/green basis, where label 0 means ``r`` and label 1 means ``g``.
    """

    __slots__ = ("terms", "basis")

    def __init__(self, terms: Mapping[DoubledGenerator, object] | Iterable = (),
                 basis: str = "v"):
        acc: dict[DoubledGenerator, object] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for g, c in items:
            acc[g] = acc.get(g, 0) + c
        self.terms = {g: c for g, c in sorted(acc.items()) if c != 0}
        self.basis = basis

    @classmethod
    def of(cls, g: DoubledGenerator, coef=1, basis: str = "v") -> "AlgebraElement":
        return cls({g: coef}, basis)

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        self._same_basis(other)
        return AlgebraElement(list(self.terms.items()) + list(other.terms.items()), self.basis)

    def __sub__(self, other: "AlgebraElement") -> "AlgebraElement":
        return self + other * -1

    def __mul__(self, k) -> "AlgebraElement":
        return AlgebraElement({g: c * k for g, c in self.terms.items()}, self.basis)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)) and other == 0:
            return not self.terms
        return (isinstance(other, AlgebraElement) and self.basis == other.basis
                and self.terms == other.terms)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        body = " + ".join(f"{c}*{g}" for g, c in self.terms.items())
        return body if self.basis == "v" else f"[rg] {body}"

    def _same_basis(self, other: "AlgebraElement") -> None:
        if self.basis != other.basis:
            raise ValueError("cannot combine elements written in different bases")

    def arity(self) -> int | None:
        sizes = {len(g.labels) for g in self.terms}
        if len(sizes) > 1:
            raise ArityMismatch("mixed label lengths in one element")
        return sizes.pop() if sizes else None


def apply_edge_map(kind: str, variant: str, x: AlgebraElement, mapping: EdgeData) -> AlgebraElement:
    """Apply ``m``, ``D`` or ``eta`` (or their Lee versions) along a cube edge."""
    _check_variant(variant)
    if x.basis != "v":
        x = from_red_green(x)
    n_src = len(mapping.src) + len(mapping.carry)
    if x.terms and x.arity() != n_src:
        raise ArityMismatch(f"element has {x.arity()} factors, edge expects {n_src}")
    acc = []
    for g, c in x.terms.items():
        for coef, labels, tag in edge_terms(kind, variant, g.labels, g.summand, mapping):
            acc.append((DoubledGenerator(labels, tag), c * coef))
    return AlgebraElement(acc)


def birth_map(x: AlgebraElement, position: int) -> AlgebraElement:
    """Insert a new ``v+`` factor at ``position`` (the unit)."""
    if x.basis == "rg":  # v+ = r + g
        acc = []
        for g, c in x.terms.items():
            for new in (0, 1):
                labels = g.labels[:position] + (new,) + g.labels[position:]
                acc.append((DoubledGenerator(labels, g.summand), c))
        return AlgebraElement(acc, "rg")
    return AlgebraElement([(DoubledGenerator(g.labels[:position] + (PLUS,) + g.labels[position:],
                                             g.summand), c) for g, c in x.terms.items()])


def death_map(x: AlgebraElement, position: int, free: bool = True) -> AlgebraElement:
    """Remove the factor at ``position`` applying ``eps(v+) = 0, eps(v-) = 1``.

    In the red/green basis the scalars follow by linearity:
    ``eps(r) = 1/2`` and ``eps(g) = -1/2``.  ``free=False`` signals that the
    cycle meets a crossing, which is not allowed.
    """
    if not free:
        raise CycleNotFree("a death needs a crossingless cycle")
    if x.basis == "rg":
        weight = {0: Fraction(1, 2), 1: Fraction(-1, 2)}
    else:
        weight = {PLUS: 0, MINUS: 1}
    acc = []
    for g, c in x.terms.items():
        w = weight[g.labels[position]]
        if w:
            acc.append((DoubledGenerator(g.labels[:position] + g.labels[position + 1:],
                                         g.summand), c * w))
    return AlgebraElement(acc, x.basis)


def _change_basis(x: AlgebraElement, table, basis: str) -> AlgebraElement:
    acc: dict[DoubledGenerator, object] = {}
    for g, c in x.terms.items():
        partial = [((), Fraction(c))]
        for lab in g.labels:
            partial = [(pre + (new,), k * w) for pre, k in partial for new, w in table[lab]]
        for labels, k in partial:
            key = DoubledGenerator(labels, g.summand)
            acc[key] = acc.get(key, 0) + k
    return AlgebraElement(acc, basis)


def to_red_green(x: AlgebraElement) -> AlgebraElement:
    """Rewrite in the basis ``r = (v+ + v-)/2``, ``g = (v+ - v-)/2``."""
    if x.basis == "rg":
        return x
    # v+ = r + g, v- = r - g
    return _change_basis(x, {PLUS: [(0, 1), (1, 1)], MINUS: [(0, 1), (1, -1)]}, "rg")


def from_red_green(x: AlgebraElement) -> AlgebraElement:
    if x.basis == "v":
        return x
    half = Fraction(1, 2)
    return _change_basis(x, {0: [(PLUS, half), (MINUS, half)],
                             1: [(PLUS, half), (MINUS, -half)]}, "v")


def p_degree(labels: Iterable[int], tag: int) -> int:
    labels = tuple(labels)
    return len(labels) - 2 * sum(labels) - tag


def quantum_degree(g: DoubledGenerator, state, n_plus: int, n_minus: int) -> int:
    """``j = p + i + n_+ - n_-`` with ``i`` the height of ``state``.

    ``state`` may be a :class:`~dkh.smoothing.SmoothingState` or an
    already computed height.
    """
    i = state if isinstance(state, int) else state.ones - n_minus
    return p_degree(g.labels, g.summand) + i + n_plus - n_minus
