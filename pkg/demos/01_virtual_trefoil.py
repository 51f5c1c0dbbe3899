"""A walk through the two-crossing virtual trefoil.

Run with ``python3 demos/01_virtual_trefoil.py``.

The knot has Gauss code ``O1- O2- U1- U2-``: two negative crossings, both
odd.  Ordinary Khovanov homology is not defined integrally for it (one
crossing change takes a single cycle to a single cycle), but the doubled
theory is, and it already tells the knot apart from every classical knot.
"""
from dkh import dkh, fixture, jones, lee_summary, odd_writhe, rasmussen, serialize
from dkh.cli import render_grid
from dkh.obstructions import classicality_test, report

k = fixture("K21")
print("diagram:", serialize(k))
print()

h = dkh(k)
print("doubled Khovanov homology (i across, j down):")
print(render_grid(h))
print()

# A classical knot has DKh = G + G{-1}.  Peeling from the top fails here.
v = classicality_test(h)
print("non-classical:", v.status, "-", v.reason)

print("Jones polynomial:", jones(k))
print("odd writhe J =", odd_writhe(k))

lee = lee_summary(k)
print("doubled Lee homology lives in degree", lee.support(), "with s-levels",
      sorted(lee.levels[lee.support()[0]]))
r = rasmussen(k)
print(f"doubled Rasmussen invariant: s1 = {r.s1}, s2 = {r.s2}")
print()

print("obstruction report:")
for name, verdict in report(k).verdicts.items():
    print(f"  {name:30s} {verdict.status:12s} {verdict.reason}")
