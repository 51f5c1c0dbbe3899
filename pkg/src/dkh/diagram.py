"""Oriented virtual link diagrams as signed Gauss codes.

A diagram is a tuple of components, each a cyclic sequence of tokens
``(crossing id, pass, sign)``.  Virtual crossings are never stored: two
Gauss codes that differ only by virtual moves are literally equal, and so
are their cubes of smoothings.

Arc positions
-------------
On a component with tokens ``t_0 ... t_{L-1}`` the arc at gap ``g`` is the
stretch of the component that ends at token ``t_g``; gap 0 therefore sits
between the last and the first token.  A crossingless component has the
single arc ``0``.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, NamedTuple

from .errors import (BadArc, GaussSyntaxError, NotAKnot, SignMismatch,
                     UnknownCrossing, UnmatchedCrossing)

__all__ = [
    "Token", "VirtualLinkDiagram", "GaussDiagram", "parse_gauss_code",
    "serialize", "mirror", "disjoint_union", "connect_sum", "flank",
    "virtualize", "reverse_component", "gauss_diagram", "degenerate_circles",
    "crossing_parity", "odd_writhe",
]

_TOKEN_RE = re.compile(r"^([OU])([0-9]+)([+-])$")


class Token(NamedTuple):
    """One passage of a component through a classical crossing."""

    cid: int
    over: bool
    sign: int

    def __str__(self) -> str:
        return f"{'O' if self.over else 'U'}{self.cid}{'+' if self.sign > 0 else '-'}"


@dataclass(frozen=True)
class VirtualLinkDiagram:
    """A validated signed Gauss code.

    Use :func:`parse_gauss_code` or :meth:`from_components`; the plain
    constructor does not validate.
    """

    components: tuple[tuple[Token, ...], ...]

    @classmethod
    def from_components(cls, comps: Iterable[Iterable[Token]]) -> "VirtualLinkDiagram":
        d = cls(tuple(tuple(Token(*t) for t in c) for c in comps))
        _validate(d)
        return d

    # -- derived data -------------------------------------------------
    @property
    def n_components(self) -> int:
        return len(self.components)

    def __len__(self) -> int:
        return len(self.components)

    @cached_property
    def signs(self) -> dict[int, int]:
        return {t.cid: t.sign for c in self.components for t in c}

    @cached_property
    def crossings(self) -> tuple[int, ...]:
        """Crossing ids in canonical (ascending) order."""
        return tuple(sorted(self.signs))

    @property
    def n_crossings(self) -> int:
        return len(self.signs)

    @cached_property
    def n_plus(self) -> int:
        return sum(1 for s in self.signs.values() if s > 0)

    @cached_property
    def n_minus(self) -> int:
        return sum(1 for s in self.signs.values() if s < 0)

    @cached_property
    def occurrences(self) -> dict[int, tuple[tuple[int, int], tuple[int, int]]]:
        """crossing id -> ((comp, pos) of the Over token, (comp, pos) of the Under token)."""
        over, under = {}, {}
        for k, comp in enumerate(self.components):
            for p, t in enumerate(comp):
                (over if t.over else under)[t.cid] = (k, p)
        return {c: (over[c], under[c]) for c in over}

    def is_knot(self) -> bool:
        return len(self.components) == 1

    def check_arc(self, arc: tuple[int, int]) -> tuple[int, int]:
        """Normalise and validate an arc ``(component, gap)``."""
        try:
            k, g = arc
        except (TypeError, ValueError):
            raise BadArc(f"arc must be a (component, gap) pair, got {arc!r}") from None
        if not 0 <= k < len(self.components):
            raise BadArc(f"no component {k}")
        L = len(self.components[k])
        if not (0 <= g < max(L, 1)):
            raise BadArc(f"gap {g} out of range on component {k} with {L} tokens")
        return (k, g)

    def __str__(self) -> str:
        return serialize(self)


def _validate(d: VirtualLinkDiagram) -> None:
    seen: dict[int, list[Token]] = {}
    for comp in d.components:
        for t in comp:
            seen.setdefault(t.cid, []).append(t)
    for cid, toks in seen.items():
        if len(toks) != 2 or toks[0].over == toks[1].over:
            raise UnmatchedCrossing(
                f"crossing {cid} must occur exactly twice, once O and once U")
        if toks[0].sign != toks[1].sign:
            raise SignMismatch(f"crossing {cid} has inconsistent signs")


def parse_gauss_code(text: str) -> VirtualLinkDiagram:
    """Parse a signed Gauss code.

    Components are separated by ``/``; ``()`` is an empty component and the
    empty string is the crossingless unknot.

    >>> parse_gauss_code("O1+ / U1+").n_components
    2
    """
    text = text.replace("−", "-").strip()
    if not text:
        return VirtualLinkDiagram(((),))
    comps = []
    for raw in text.split("/"):
        raw = raw.strip()
        if raw in ("()", ""):
            if raw == "" and "/" in text:
                raise GaussSyntaxError("empty component must be written '()'")
            comps.append(())
            continue
        toks = []
        for word in raw.split():
            m = _TOKEN_RE.match(word)
            if m is None:
                raise GaussSyntaxError(f"bad token {word!r}")
            toks.append(Token(int(m.group(2)), m.group(1) == "O",
                              1 if m.group(3) == "+" else -1))
        comps.append(tuple(toks))
    return VirtualLinkDiagram.from_components(comps)


def serialize(d: VirtualLinkDiagram) -> str:
    """Canonical text form; inverse of :func:`parse_gauss_code`."""
    return " / ".join(" ".join(map(str, c)) if c else "()" for c in d.components)


def _rebuild(comps) -> VirtualLinkDiagram:
    return VirtualLinkDiagram.from_components(comps)


def mirror(d: VirtualLinkDiagram) -> VirtualLinkDiagram:
    """Flip every sign and swap Over/Under."""
    return _rebuild([[Token(t.cid, not t.over, -t.sign) for t in c] for c in d.components])


def relabel(d: VirtualLinkDiagram, offset: int) -> VirtualLinkDiagram:
    return _rebuild([[Token(t.cid + offset, t.over, t.sign) for t in c] for c in d.components])


def _fresh_offset(d1: VirtualLinkDiagram, d2: VirtualLinkDiagram) -> int:
    if not d2.signs:
        return 0
    top = max(d1.signs, default=0)
    return top + 1 - min(d2.signs) if min(d2.signs) <= top else 0


def disjoint_union(d1: VirtualLinkDiagram, d2: VirtualLinkDiagram) -> VirtualLinkDiagram:
    """Split union; the crossing ids of ``d2`` are shifted past those of ``d1``."""
    d2 = relabel(d2, _fresh_offset(d1, d2))
    return _rebuild(d1.components + d2.components)


def connect_sum(d1: VirtualLinkDiagram, arc1: int, d2: VirtualLinkDiagram,
                arc2: int) -> VirtualLinkDiagram:
    """Splice knot ``d2`` into knot ``d1``.

    ``d2`` is cut open at its gap ``arc2`` and inserted into gap ``arc1``
    of ``d1``, orientations preserved.
    """
    if not (d1.is_knot() and d2.is_knot()):
        raise NotAKnot("connect_sum needs two knot diagrams")
    d1.check_arc((0, arc1))
    d2.check_arc((0, arc2))
    d2 = relabel(d2, _fresh_offset(d1, d2))
    a, b = d1.components[0], d2.components[0]
    return _rebuild([a[:arc1] + b[arc2:] + b[:arc2] + a[arc1:]])


def _require(d: VirtualLinkDiagram, ids) -> None:
    for c in ids:
        if c not in d.signs:
            raise UnknownCrossing(c)


def flank(d: VirtualLinkDiagram, crossing_id: int) -> VirtualLinkDiagram:
    """Apply the flanking move at one crossing.

    Pictorially the crossing is surrounded by two virtual crossings, one on
    each side, which turns it a quarter turn: the strand that passed over
    now passes under.  The rotated crossing keeps its smoothings (its
    oriented smoothing is still the oriented one), so in the Gauss code the
    Over/Under labels swap while the sign is kept.  The resulting complex
    is literally the same as before.
    """
    _require(d, [crossing_id])
    return _rebuild([[Token(t.cid, not t.over, t.sign) if t.cid == crossing_id else t
                      for t in c] for c in d.components])


def virtualize(d: VirtualLinkDiagram, crossing_ids) -> VirtualLinkDiagram:
    """Turn the listed classical crossings into virtual ones (delete their tokens)."""
    ids = set(crossing_ids)
    _require(d, ids)
    return _rebuild([[t for t in c if t.cid not in ids] for c in d.components])


def reverse_component(d: VirtualLinkDiagram, k: int) -> VirtualLinkDiagram:
    """Reverse the orientation of component ``k``.

    Crossings between ``k`` and another component change sign; self
    crossings of ``k`` keep theirs.
    """
    if not 0 <= k < len(d.components):
        raise BadArc(f"no component {k}")
    own = [t.cid for t in d.components[k]]
    mixed = {c for c in own if own.count(c) == 1}
    comps = []
    for j, c in enumerate(d.components):
        seq = tuple(reversed(c)) if j == k else c
        comps.append([Token(t.cid, t.over, -t.sign if t.cid in mixed else t.sign)
                      for t in seq])
    return _rebuild(comps)


@dataclass(frozen=True)
class GaussDiagram:
    """Circles with chord endpoints.

    ``circles[k]`` lists the crossing ids met along component ``k`` in
    order; ``chords[c]`` gives the two endpoint positions ``(circle, index)``
    and ``signs[c]`` the chord sign.
    """

    circles: tuple[tuple[int, ...], ...]
    chords: dict[int, tuple[tuple[int, int], tuple[int, int]]]
    signs: dict[int, int]


def gauss_diagram(d: VirtualLinkDiagram) -> GaussDiagram:
    circles = tuple(tuple(t.cid for t in c) for c in d.components)
    return GaussDiagram(circles, dict(d.occurrences), dict(d.signs))


def degenerate_circles(g: GaussDiagram) -> set[int]:
    """Circles carrying an odd number of chord endpoints."""
    return {k for k, c in enumerate(g.circles) if len(c) % 2}


def crossing_parity(d: VirtualLinkDiagram) -> dict[int, str]:
    """``"odd"``/``"even"`` for every chord whose ends lie on one circle."""
    out = {}
    for cid, ((k1, p1), (k2, p2)) in d.occurrences.items():
        if k1 == k2:
            out[cid] = "odd" if (abs(p1 - p2) - 1) % 2 else "even"
    return out


def odd_writhe(d: VirtualLinkDiagram) -> int:
    """Sum of the signs of the odd crossings of a knot diagram."""
    if not d.is_knot():
        raise NotAKnot("odd writhe is defined for knot diagrams")
    par = crossing_parity(d)
    return sum(d.signs[c] for c, p in par.items() if p == "odd")
