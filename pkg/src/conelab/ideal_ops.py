"""Intersection, colon, saturation, elimination, dimension and test ideals."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence

from .exactpoly import GREVLEX, MonomialOrder, Polynomial, PolyRing, divexact
from .groebner import Ideal, Limits, _same, buchberger, ideal_contains


class TestIdeal:
    """An ideal generated by a regular sequence inside a target ideal.

    ``certificate`` holds one ``(step, coefficients, height)`` entry per
    generator, where ``coefficients`` is the integer vector that combined the
    target's generators (``None`` for a user-supplied generator).
    """

    __test__ = False  # not a pytest class

    def __init__(self, ideal: Ideal, certificate: list | None = None, seed: int | None = None):
        self.ideal = ideal
        self.certificate = certificate or []
        self.seed = seed

    @property
    def generators(self):
        return self.ideal.generators

    def __repr__(self):
        return f"TestIdeal({self.ideal}, seed={self.seed})"


class TestIdealError(ValueError):
    __test__ = False


def eliminate(I: Ideal, vars: Iterable[str | int], limits: Limits | None = None) -> Ideal:
    """I intersected with the subring free of ``vars`` (same ambient ring)."""
    ring = I.ring
    elim = sorted({v if isinstance(v, int) else ring.index(v) for v in vars})
    if not elim:
        return I
    keep = [i for i in range(ring.nvars) if i not in elim]
    order = MonomialOrder.block(("grevlex", elim), ("grevlex", keep))
    gb = I.groebner(order, limits)
    out = [g for g in gb.elements if not any(g.degree(i) > 0 for i in elim)]
    return Ideal(ring, out)


def _drop_front(I: Ideal, k: int, ring: PolyRing) -> Ideal:
    """Move an ideal whose generators avoid the first k variables into ``ring``."""
    return Ideal(ring, [g.to_ring(ring) for g in I.generators])


def _homogenize(I: Ideal, ring_h: PolyRing, limits: Limits | None = None) -> list[Polynomial]:
    """Generators of the homogenization of I in ``ring_h`` (one extra last variable).

    Homogenizing a Groebner basis for a degree-compatible order gives
    generators of the homogenized ideal, not just of the generators.
    """
    if all(g.is_homogeneous() for g in I.generators):
        gens = I.generators
    else:
        gens = I.groebner(GREVLEX, limits).elements
    out = []
    for g in gens:
        d = g.total_degree()
        out.append(Polynomial(ring_h, {e + (d - sum(e),): c for e, c in g.coeffs.items()}))
    return out


def intersect(I: Ideal, J: Ideal, limits: Limits | None = None) -> Ideal:
    """I ∩ J by eliminating w from w*I + (1 - w)*J.

    Both ideals are homogenized first and the result dehomogenized, since
    the homogenization of I ∩ J is the intersection of the homogenizations.
    Eliminating from inhomogeneous input under a block order is prone to
    severe coefficient growth; the homogeneous computation is not.
    """
    _same(I, J)
    ring = I.ring
    if I.is_zero() or J.is_zero():
        return Ideal(ring, [])
    h = ring.fresh_name("h")
    ring_h = PolyRing(ring.names + (h,), GREVLEX)
    w = ring_h.fresh_name("w")
    ext = ring_h.extend([w])
    wv = ext.var(w)
    gens = [wv * g.to_ring(ext) for g in _homogenize(I, ring_h, limits)]
    gens += [(1 - wv) * g.to_ring(ext) for g in _homogenize(J, ring_h, limits)]
    elim = eliminate(Ideal(ext, gens), [0], limits)
    return Ideal(ring, [g.evaluate(h, 1).to_ring(ring) for g in elim.generators])


def _colon_principal(I: Ideal, g: Polynomial, limits: Limits | None = None) -> Ideal:
    meet = intersect(I, Ideal(I.ring, [g]), limits)
    return Ideal(I.ring, [divexact(h, g) for h in meet.generators])


def colon(I: Ideal, J: Ideal, limits: Limits | None = None) -> Ideal:
    """I : J = {f : f*J ⊆ I}, intersecting I : g over the generators g of J."""
    _same(I, J)
    if J.is_zero():
        raise ValueError("colon by the zero ideal")
    result = None
    for g in J.generators:
        part = _colon_principal(I, g, limits)
        result = part if result is None else intersect(result, part, limits)
    return result.reduced()


def saturate(I: Ideal, f: Polynomial, limits: Limits | None = None) -> Ideal:
    """I : f^∞ by eliminating w from I + <1 - w*f>."""
    if f.is_zero():
        raise ValueError("saturation by the zero polynomial")
    ring = I.ring
    if f.is_constant():
        return I
    w = ring.fresh_name("w")
    ext = ring.extend([w])
    gens = [g.to_ring(ext) for g in I.generators]
    gens.append(1 - ext.var(w) * f.to_ring(ext))
    elim = eliminate(Ideal(ext, gens), [0], limits)
    return _drop_front(elim, 1, ring).reduced()


def _independent_size(lms: Sequence[tuple], n: int) -> int:
    supports = [frozenset(i for i, x in enumerate(m) if x) for m in lms]
    for size in range(n, -1, -1):
        for S in combinations(range(n), size):
            s = set(S)
            if not any(sup <= s for sup in supports):
                return size
    return -1


def dimension(I: Ideal, limits: Limits | None = None) -> int:
    """Krull dimension of R/I; -1 for the unit ideal.

    The size of a largest variable set containing the support of no leading
    monomial of a Groebner basis.
    """
    n = I.ring.nvars
    if I.is_zero():
        return n
    gb = I.groebner(limits=limits)
    if gb.is_unit():
        return -1
    return _independent_size(gb.leading_monomials(), n)


def height(I: Ideal, limits: Limits | None = None) -> int:
    """Codimension of I; the unit ideal gets nvars + 1."""
    return I.ring.nvars - dimension(I, limits)


def build_test_ideal(I: Ideal, seed: int = 0, attempts: int = 24,
                     limits: Limits | None = None) -> TestIdeal:
    """A regular sequence of length height(I) made of combinations of I's generators.

    Each prefix is checked to have height equal to its length; in a
    polynomial ring this certifies the sequence is regular.  Candidates are
    drawn by a generator seeded with ``seed``: a random support of the
    generators, growing by one every few attempts, with coefficients from
    {-3..3} minus 0.  Sparse supports come first because dense combinations
    make the later colon computations much more expensive.
    """
    gens = list(I.generators)
    if not gens:
        raise TestIdealError("test ideal of the zero ideal")
    h = height(I, limits)
    if h > I.ring.nvars:
        raise TestIdealError("test ideal of the unit ideal")
    rng = random.Random(seed)
    chosen: list[Polynomial] = []
    cert = []
    choices = [-3, -2, -1, 1, 2, 3]
    n = len(gens)
    for step in range(1, h + 1):
        tried = set()
        for attempt in range(attempts):
            size = min(n, 1 + attempt // 4)
            support = sorted(rng.sample(range(n), size))
            coeffs = [0] * n
            for i in support:
                coeffs[i] = rng.choice(choices) if size > 1 else 1
            coeffs = tuple(coeffs)
            if coeffs in tried:
                continue
            tried.add(coeffs)
            cand = I.ring.zero()
            for c, g in zip(coeffs, gens):
                if c:
                    cand = cand + g.scale(c)
            if cand.is_zero():
                continue
            prefix = Ideal(I.ring, chosen + [cand])
            if height(prefix, limits) == step:
                chosen.append(cand)
                cert.append((step, coeffs, step))
                break
        else:
            raise TestIdealError(
                f"no combination of height {step} found in {attempts} attempts (seed {seed})")
    return TestIdeal(Ideal(I.ring, chosen), cert, seed)


def validate_test_ideal(I: Ideal, J: Ideal | TestIdeal, limits: Limits | None = None
                        ) -> TestIdeal:
    """Check a user-supplied test ideal and wrap it with a certificate."""
    if isinstance(J, TestIdeal):
        J = J.ideal
    gens = list(J.generators)
    if not ideal_contains(I, J):
        raise TestIdealError("test ideal is not contained in the target ideal")
    h = height(I, limits)
    if len(gens) != h:
        raise TestIdealError(f"test ideal has {len(gens)} generators but height(I) = {h}")
    cert = []
    for step in range(1, h + 1):
        hp = height(Ideal(I.ring, gens[:step]), limits)
        if hp != step:
            raise TestIdealError(f"prefix of length {step} has height {hp}")
        cert.append((step, None, hp))
    return TestIdeal(J, cert)
