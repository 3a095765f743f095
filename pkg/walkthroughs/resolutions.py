"""
Free resolutions and the Cohen-Macaulay test
============================================
"""

from conelab import Ideal, PolyRing, free_resolution, is_cohen_macaulay, syzygies
from conelab.cli import corpus_path
from conelab.parser import parse

R = PolyRing(("x", "y", "z"))
x, y, z = R.gens()

print("Koszul ranks of <x, y, z>:", free_resolution(Ideal(R, [x, y, z])).ranks)
print("syzygies of the twisted cubic:",
      [[str(p) for p in s] for s in syzygies([x**2 - y, x * y - z, x * z - y**2])])

# the tangent star cone of three lines is not Cohen-Macaulay
s = parse(corpus_path("ex51.cone").read_text())
I = Ideal(s.ring, s.ideals["I"])
res = free_resolution(I)
print("ranks:", res.ranks)
print("betti table:", dict(sorted(res.betti_table().items())))
cm = is_cohen_macaulay(I)
print(f"pd = {cm.pd}, height = {cm.height}, Cohen-Macaulay: {cm.verdict}")
