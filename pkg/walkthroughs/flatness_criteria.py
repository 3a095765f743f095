"""
Flatness over a curve germ
==========================

Three colon tests with t as the parameter of the base curve:

* no embedded components:  J : (J : I)  inside I
* flat:                    I : t        inside I
* internally flat:         (I : t) ∩ (J : (J : I))  inside I

J is a test ideal: a regular sequence inside I of length height(I).
"""

from conelab import (Ideal, PolyRing, has_no_embedded_components, is_flat_over_germ,
                     is_internally_flat, witness_is_valid)
from conelab.cli import corpus_path
from conelab.parser import parse

R = PolyRing(("x", "y", "t"), param="t")
x, y, t = R.gens()

r = is_flat_over_germ(Ideal(R, [t * x]))
print("<t*x> flat:", r.verdict, "witness", r.witness)

r = has_no_embedded_components(Ideal(R, [x**2, x * y]), Ideal(R, [x**2]))
print("<x^2, x*y> free of embedded components:", r.verdict, "witness", r.witness)

# the cone of the moving three lines xy = z(z - t x) = 0
s = parse(corpus_path("ex52.cone").read_text())
I = Ideal(s.ring, s.ideals["I"])
ref = is_internally_flat(I, Ideal(s.ring, s.ideals["J"]))
print("internally flat with the reference J:", ref.verdict, "witness", ref.witness)
print("witness checks out:", witness_is_valid(I, ref))

# a generated test ideal gives the same answer for any seed
for seed in range(3):
    r = is_internally_flat(I, seed=seed)
    print(f"  seed {seed}: {r.verdict}")
