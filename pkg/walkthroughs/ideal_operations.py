"""
Intersections, colons and saturation
====================================
"""

from conelab import (Ideal, PolyRing, colon, dimension, eliminate, height, ideal_equal,
                     intersect, saturate)

R = PolyRing(("x", "y", "t"), param="t")
x, y, t = R.gens()

# a line with an embedded point: <x^2, x*y> = <x> ∩ <x^2, y>
I = Ideal(R, [x**2, x * y])
print("I : x =", colon(I, Ideal(R, [x])))
print("I : x^oo =", saturate(I, x))
print("<x> ∩ <x^2, y> == I:", ideal_equal(intersect(Ideal(R, [x]), Ideal(R, [x**2, y])), I))

# the parabola y = x^2 from its parametrization
P = Ideal(R, [x - t, y - t**2])
print("eliminating t:", eliminate(P, ["t"]))

# dimension from the leading monomials of a Groebner basis
print("dim R/I =", dimension(I), " height =", height(I))
