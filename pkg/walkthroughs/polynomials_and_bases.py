"""
Polynomials and Groebner bases
==============================

Exact arithmetic over Q, monomial orders and reduced bases.
"""

from conelab import LEX, Ideal, PolyRing, buchberger, multivariate_gcd, squarefree_decomposition

# a ring is a tuple of variable names plus a monomial order (grevlex by default)
R = PolyRing(("x", "y", "z"))
x, y, z = R.gens()

f = (x + y) ** 2 - R("1/2*z")
print("f =", f)
print("df/dx =", f.diff("x"))

# gcd and squarefree parts never leave Q
print("gcd =", multivariate_gcd(x**2 - y**2, x**2 + 2 * x * y + y**2))
print("squarefree groups of x^2*y:", squarefree_decomposition(x**2 * y))

# the twisted cubic, parametrized as (s, s^2, s^3), in lex order
gb = buchberger([x**2 - y, x**3 - z], LEX)
for g in gb.elements:
    print("  ", g)

# normal forms decide membership
I = Ideal(R, [x**2 - y, x**3 - z])
print("x*y - z in I:", I.contains_poly(x * y - z))
print("normal form of x^5:", I.groebner().normal_form(x**5))
