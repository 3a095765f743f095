"""Normal cones: deformation to the normal cone, tangent star cones and S_m f.

Cone ideals live in a ring with base variables x, one direction variable
per base variable, and the family parameter if there is one.  The second
copy of X in X x X is written as x + u, so the diagonal sits at u = 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .exactpoly import GREVLEX, Polynomial, PolyRing, squarefree_decomposition
from .groebner import Ideal, Limits, ideal_contains, ideal_equal
from .ideal_ops import eliminate, saturate


class InconsistentFiberError(RuntimeError):
    """The family cone fiber was found strictly inside the fiber's cone."""


@dataclass
class ConePresentation:
    ring: PolyRing
    ideal: Ideal
    base: tuple[str, ...]
    directions: tuple[str, ...]
    provenance: str = "deformation"

    @property
    def param(self) -> str | None:
        return self.ring.param

    def direction_indices(self) -> list[int]:
        return [self.ring.index(u) for u in self.directions]


def default_directions(base: Sequence[str], taken: Sequence[str] = ()) -> tuple[str, ...]:
    out = []
    used = set(base) | set(taken)
    for b in base:
        name = "d" + b
        while name in used:
            name = "d" + name
        used.add(name)
        out.append(name)
    return tuple(out)


def cone_ring(ring: PolyRing, directions: Sequence[str] | None = None
              ) -> tuple[PolyRing, tuple[str, ...], tuple[str, ...]]:
    """Ambient ring (x, u, [t]) for cones over subschemes of ``ring``.

    If ``ring`` already contains the direction variables it is reused.
    Returns (ring, base names, direction names).
    """
    if directions is not None and all(d in ring.names for d in directions):
        base = tuple(n for n in ring.names if n not in directions and n != ring.param)
        if len(base) != len(directions):
            raise ValueError("need exactly one direction variable per base variable")
        return ring, base, tuple(directions)
    base = tuple(n for n in ring.names if n != ring.param)
    if directions is None:
        directions = default_directions(base, ring.names)
    directions = tuple(directions)
    if len(directions) != len(base):
        raise ValueError("need exactly one direction variable per base variable")
    names = base + directions + ((ring.param,) if ring.param else ())
    return PolyRing(names, GREVLEX, ring.param), base, directions


def initial_form_ideal(Q: Ideal, directions: Sequence[str],
                       limits: Limits | None = None) -> Ideal:
    """Ideal of lowest u-degree forms of the elements of Q.

    Substitute u -> s*u, saturate by s, then set s = 0.
    """
    ring = Q.ring
    s = ring.fresh_name("s")
    ext = ring.extend([s])
    sv = ext.var(s)
    images = {u: sv * ext.var(u) for u in directions}
    lifted = Ideal(ext, [g.to_ring(ext).subs(images) for g in Q.generators])
    sat = saturate(lifted, sv, limits)
    gens = [g.evaluate(0, 0).to_ring(ring) for g in sat.generators]
    return Ideal(ring, gens).reduced()


def tangent_star_ideal(IX: Ideal, directions: Sequence[str] | None = None,
                       limits: Limits | None = None) -> ConePresentation:
    """Ideal of the (relative) tangent star cone of X = V(IX).

    With a parameter t declared the fiber product is over the t-line, so t
    is shared by both copies.
    """
    ring, base, dirs = cone_ring(IX.ring, directions)
    shift = {b: ring.var(b) + ring.var(u) for b, u in zip(base, dirs)}
    first = [g.to_ring(ring) for g in IX.generators]
    for g in first:
        if any(g.degree(u) > 0 for u in dirs):
            raise ValueError("the ideal of X must not involve direction variables")
    second = [g.subs(shift) for g in first]
    Q = Ideal(ring, first + second)
    return ConePresentation(ring, initial_form_ideal(Q, dirs, limits), base, dirs,
                            "deformation")


def polarize(f: Polynomial, k: int, base: Sequence[str], directions: Sequence[str]
             ) -> Polynomial:
    """P^k f for the polarization operator P = sum u_i d/dx_i."""
    out = f
    for _ in range(k):
        nxt = f.ring.zero()
        for b, u in zip(base, directions):
            d = out.diff(b)
            if d:
                nxt = nxt + d * f.ring.var(u)
        out = nxt
        if not out:
            break
    return out


def _prod(polys, ring):
    out = ring.one()
    for p in polys:
        out = out * p
    return out


def hypersurface_ts_generators(f: Polynomial, base: Sequence[str],
                               directions: Sequence[str]) -> list[Polynomial]:
    """[f, S_1 f, S_2 f, ...] up to the first vanishing S_m f.

    With f = prod g_m^m grouped by multiplicity,
    S_m f = (prod_{m'<m} g_{m'}^{m'})^2 * P^(2m-1)(prod_{m'>=m} g_{m'}^(m'+m-1)).
    """
    if f.is_zero() or f.degree_in(f.ring.index(b) for b in base) <= 0:
        raise ValueError("hypersurface equation must be nonconstant in the base variables")
    ring = f.ring
    groups = squarefree_decomposition(f, base)
    out = [f]
    m = 1
    while True:
        low = _prod((g ** mm for mm, g in groups if mm < m), ring)
        high = _prod((g ** (mm + m - 1) for mm, g in groups if mm >= m), ring)
        sm = low * low * polarize(high, 2 * m - 1, base, directions)
        if sm.is_zero():
            break
        out.append(sm)
        m += 1
    return out


def hypersurface_cone(f: Polynomial, directions: Sequence[str] | None = None
                      ) -> ConePresentation:
    """Tangent star cone of V(f) from the S_m f equations."""
    ring, base, dirs = cone_ring(f.ring, directions)
    g = f.to_ring(ring)
    gens = hypersurface_ts_generators(g, base, dirs)
    return ConePresentation(ring, Ideal(ring, gens), base, dirs, "polarization")


def rees_normal_cone(IY: Ideal, center: Sequence[Polynomial], fiber_names: Sequence[str] | None = None,
                     limits: Limits | None = None) -> tuple[PolyRing, Ideal]:
    """Normal cone of Z = V(IY + <center>) in Y = V(IY) via the Rees algebra.

    In the ring extended by w and fiber coordinates y_1..y_s, eliminate w
    from IY + <y_i - w*g_i>; adding the ideal of Z then gives the associated
    graded ring as a quotient of (ambient)[y].
    """
    ring = IY.ring
    center = list(center)
    if fiber_names is None:
        fiber_names = [ring.fresh_name(f"y{i + 1}") for i in range(len(center))]
    fiber_names = tuple(fiber_names)
    target = PolyRing(ring.names + fiber_names, GREVLEX, ring.param)
    w = target.fresh_name("w")
    ext = target.extend([w])
    wv = ext.var(w)
    gens = [g.to_ring(ext) for g in IY.generators]
    gens += [ext.var(y) - wv * g.to_ring(ext) for y, g in zip(fiber_names, center)]
    rees = eliminate(Ideal(ext, gens), [0], limits)
    out = [g.to_ring(target) for g in rees.generators]
    out += [g.to_ring(target) for g in IY.generators]
    out += [g.to_ring(target) for g in center]
    return target, Ideal(target, out).reduced()


@dataclass
class FiberComparison:
    equal: bool
    certificate: Polynomial | None
    family_fiber: Ideal
    fiber_cone: Ideal

    @property
    def outcome(self) -> str:
        return "equal" if self.equal else "cone_fiber_strictly_larger"


def specialize_ring(ring: PolyRing) -> PolyRing:
    """The ring with the parameter removed."""
    names = tuple(n for n in ring.names if n != ring.param)
    return PolyRing(names, GREVLEX, None)


def cone_fiber_compare(C: ConePresentation, IX: Ideal, limits: Limits | None = None
                       ) -> FiberComparison:
    """Compare the fiber at t = 0 of the family cone with the cone of the fiber."""
    t = C.ring.param
    if t is None:
        raise ValueError("cone_fiber_compare needs a parameter")
    fring = specialize_ring(C.ring)
    fam = Ideal(fring, [g.evaluate(t, 0).to_ring(fring) for g in C.ideal.generators])
    xring = specialize_ring(IX.ring)
    tx = IX.ring.param
    X0 = Ideal(xring, [g.evaluate(tx, 0).to_ring(xring) for g in IX.generators])
    fib = tangent_star_ideal(X0, C.directions, limits).ideal.to_ring(fring)
    if not ideal_contains(fib, fam):
        raise InconsistentFiberError("family cone fiber is not contained in the fiber cone")
    gb = fam.groebner()
    for g in fib.reduced().generators:
        if not gb.reduces_to_zero(g):
            return FiberComparison(False, g, fam, fib)
    return FiberComparison(True, None, fam, fib)
