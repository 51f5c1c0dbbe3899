"""Maps induced on doubled Lee homology by elementary cobordisms.

Run with ``python3 demos/03_cobordism_maps.py``.

A cobordism is given as a start diagram and a list of moves.  The engine
builds the chain map of every move, checks it commutes with the
differentials, composes them and reads off the map on the alternately
coloured classes.
"""
from pathlib import Path

from dkh import fixture, parse_gauss_code
from dkh.cobordism import (Birth, CobordismPresentation, Death, Saddle, induced_map_on_lee,
                           parse_presentation, saddle_kills_acs)

u = parse_gauss_code("")

# A birth followed by merging the new circle back in is a cylinder.
m = induced_map_on_lee(CobordismPresentation(u, [Birth(), Saddle((0, 0), (1, 0))]))
print("birth then merge:")
for row in m.matrix:
    print("   ", " ".join(str(x) for x in row))

# A birth followed by a death is a sphere, which evaluates to zero.
m = induced_map_on_lee(CobordismPresentation(u, [Birth(), Death(1)]))
print("birth then death is", "nonzero" if m.nonzero else "zero")

# A self-saddle between arcs of opposite colour leaves no colourable state.
k = fixture("K21")
s = Saddle((0, 0), (0, 1))
print("saddle 0:0 0:1 on K21 kills the colourings:", saddle_kills_acs(k, s))

# Both ends of this cobordism have doubled Lee homology in degree -2, yet the
# induced map is zero: a shared degree alone does not force a nonzero map.
p = parse_presentation((Path(__file__).parent / "two_saddles.txt").read_text())
m = induced_map_on_lee(p)
print("two saddles next to a Hopf link: shared degrees", sorted(m.shared),
      "map", "nonzero" if m.nonzero else "zero")
