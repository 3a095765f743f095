"""
Tangent star cones
==================

The tangent star cone of X is the normal cone of the diagonal in X x X.
For each base variable there is a direction variable; the cone ideal is
built from the lowest-degree parts in the directions of f(x + u) and f(x).
"""

from conelab import (Ideal, PolyRing, cone_fiber_compare, hypersurface_cone, ideal_equal,
                     tangent_star_ideal)
from conelab.cli import corpus_path
from conelab.parser import parse

# three lines in 3-space, one of them doubled in a plane
s = parse(corpus_path("ex51.cone").read_text())
X = Ideal(s.ring, s.ideals["X"])
C = tangent_star_ideal(X, s.directions)
print("cone ideal:")
for g in C.ideal.generators:
    print("  ", g)
print("matches the reference ideal:", ideal_equal(C.ideal, Ideal(s.ring, s.ideals["I"])))

# for a hypersurface the same ideal comes from the polarization equations
R = PolyRing(("x", "y", "t"), param="t")
f = R("x^2*y")
H = hypersurface_cone(f)
D = tangent_star_ideal(Ideal(R, [f]))
print("equations of the cone of x^2*y:", [str(g) for g in H.ideal.generators])
print("same ideal both ways:", ideal_equal(H.ideal, D.ideal))

# in a family over the t-line, compare the fiber of the cone with the cone of the fiber
fam = Ideal(R, [R("x*y - t")])
print("xy - t:", cone_fiber_compare(tangent_star_ideal(fam), fam).outcome)
