"""
Segre classes of hypersurface cones
===================================

For a hypersurface with components X_k of multiplicity m_k, the top Segre
class of its tangent star cone is sum m_k^2 [X_k].  If the components of a
family stay reduced and distinct at t = 0, the class specializes and the
cone is flat over the base.
"""

from conelab import PolyRing, coalescence_check, s0_specializes, s0_tangent_star

R = PolyRing(("x", "y", "t"), param="t")

print("s0 of x^2*y:", s0_tangent_star(R("x^2*y")))

for text in ["x*y - t", "x^2 - t^2", "x*(x - t)", "(x - t)^2*(x + t)"]:
    rep = coalescence_check(R(text))
    print(f"{text:>18}: non-coalescing={rep.verdict}",
          f"criterion={rep.failing_criterion} certificate={rep.certificate}")

res = s0_specializes(R("x^2 - t^2"))
print("family class:", res.family, "  fiber class:", res.fiber)
