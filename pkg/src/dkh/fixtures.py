"""Named diagrams used by the tests, the acceptance suite and the CLI.

``T43V`` and ``L9261V`` come from positive classical diagrams (the torus
knot T(4,3) as the closure of a 4-braid, and the two-component link 9^2_61
with one component reversed so that every crossing is positive) by turning
a subset of crossings virtual.  ``KISH`` is a connect sum of two diagrams of
the trivial knot, spliced so that neither summand can be undone by a second
Reidemeister move.  ``K37`` is a three-crossing unknot diagram with one
crossing flanked by virtual crossings.
"""
from __future__ import annotations

from .diagram import VirtualLinkDiagram, parse_gauss_code
from .errors import DiagramError

__all__ = ["FIXTURES", "SOURCES", "fixture", "KNOT_FIXTURES"]

FIXTURES: dict[str, str] = {
    "U0": "",
    "VH": "O1+ / U1+",
    "K21": "O1- O2- U1- U2-",
    "TRP": "O1+ U2+ O3+ U1+ O2+ U3+",
    "TRN": "U1- O2- U3- O1- U2- O3-",
    "HOPF": "O1+ U2+ / U1+ O2+",
    "KISH": "O1+ U4- O3+ O4- U3+ O2- U1+ U2-",
    "K37": "U1- U2+ U3+ O1- O2+ O3+",
    "T43V": "O8+ O7+ U2+ O6+ O5+ U8+ U6+ O2+ U7+ U5+",
    "L9261V": "O2+ O5+ U6+ U2+ O7+ U8+ O9+ U1+ / O6+ U5+ U9+ O8+ U7+ O1+",
}

# classical sources of the virtualized fixtures, with the crossings made virtual
SOURCES = {
    "T43V": ("O9+ O8+ O7+ U4+ U2+ U9+ O6+ O5+ O4+ U1+ U8+ U6+ O3+ O2+ O1+ U7+ U5+ U3+",
             (1, 3, 4, 9)),
    "L9261V": ("O2+ O3+ U4+ O5+ U6+ U2+ O7+ U8+ O9+ U1+ / O6+ U5+ U9+ O8+ O4+ U3+ U7+ O1+",
               (3, 4)),
    "K37": ("U1- U2+ O3+ O1- O2+ U3+", (3,)),   # flanked crossing
}

KNOT_FIXTURES = ("U0", "K21", "TRP", "TRN", "KISH", "K37", "T43V")


def fixture(name: str) -> VirtualLinkDiagram:
    try:
        return parse_gauss_code(FIXTURES[name])
    except KeyError:
        raise DiagramError(f"unknown fixture {name!r}; known: {', '.join(FIXTURES)}") from None
