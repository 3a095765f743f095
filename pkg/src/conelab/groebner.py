"""Buchberger's algorithm, normal forms and ideal membership.

Inside the kernel a monomial is carried as two packed integers: an order key
(the weight-row sums of the monomial order, packed so that integer comparison
is the monomial order) and a packed exponent vector with guard bits for fast
divisibility tests.  Both packings are additive, so multiplying monomials is
integer addition.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from heapq import heapify, heappop, heappush
from typing import Iterable, Sequence

from gmpy2 import mpq

from .exactpoly import GREVLEX, MonomialOrder, Polynomial, PolyRing, RingMismatchError

KEY_BITS = 24
EXP_BITS = 16
_EXP_LIMIT = 1 << (EXP_BITS - 1)


class ResourceLimitExceeded(RuntimeError):
    """The pair or basis cap was hit; no answer is produced."""


@dataclass
class Limits:
    max_pairs: int | None = None
    max_basis: int | None = None


# Module-level default limits, adjustable by the command line.
DEFAULT_LIMITS = Limits()


class Packer:
    def __init__(self, nvars: int, order: MonomialOrder):
        self.n = nvars
        self.rows = order.rows(nvars)
        self.guard = sum(1 << (i * EXP_BITS + EXP_BITS - 1) for i in range(nvars))
        self.field = (1 << EXP_BITS) - 1

    def key(self, e) -> int:
        k = 0
        for r in self.rows:
            k = (k << KEY_BITS) | sum([e[i] for i in r])
        return k

    def pexp(self, e) -> int:
        p = 0
        for i in range(self.n - 1, -1, -1):
            if e[i] >= _EXP_LIMIT:
                raise OverflowError("exponent too large for the packed representation")
            p = (p << EXP_BITS) | e[i]
        return p

    def unpack(self, p: int) -> tuple:
        f = self.field
        return tuple((p >> (i * EXP_BITS)) & f for i in range(self.n))

    def divides(self, a: int, b: int) -> bool:
        """Does the monomial packed as ``a`` divide the one packed as ``b``?"""
        g = self.guard
        return ((b | g) - a) & g == g


class KPoly:
    """Kernel polynomial: monic, terms (key, pexp, coeff) strictly descending."""

    __slots__ = ("terms", "K", "E", "e", "sugar")

    def __init__(self, terms, e, sugar):
        self.terms = terms
        self.K, self.E = terms[0][0], terms[0][1]
        self.e = e
        self.sugar = sugar


def _to_terms(f: Polynomial, P: Packer) -> dict:
    return {P.key(e): (P.pexp(e), c) for e, c in f.coeffs.items()}


def _make_kpoly(d: dict, P: Packer, sugar: int) -> KPoly | None:
    if not d:
        return None
    ks = sorted(d, reverse=True)
    lc = d[ks[0]][1]
    if lc == 1:
        terms = [(k, d[k][0], d[k][1]) for k in ks]
    else:
        inv = 1 / lc
        terms = [(k, d[k][0], d[k][1] * inv) for k in ks]
    return KPoly(terms, P.unpack(terms[0][1]), sugar)


def _find_divisor(E: int, basis: Sequence[KPoly], guard: int):
    for g in basis:
        if ((E | guard) - g.E) & guard == guard:
            return g
    return None


def reduce_terms(d: dict, basis: Sequence[KPoly], P: Packer, full: bool = True) -> dict:
    """Remainder of the term map ``d`` (key -> (pexp, coeff)) on division by basis.

    ``d`` is consumed.  With ``full`` the tail is reduced as well.
    """
    if not basis or not d:
        return d
    guard = P.guard
    heap = [-k for k in d]
    heapify(heap)
    rem = {}
    while heap:
        k = -heappop(heap)
        ent = d.pop(k, None)
        if ent is None:
            continue
        E, c = ent
        g = _find_divisor(E, basis, guard)
        if g is None:
            rem[k] = ent
            if not full:
                rem.update(d)
                return rem
            continue
        dk = k - g.K
        dE = E - g.E
        it = iter(g.terms)
        next(it)
        for gk, gE, gc in it:
            nk = gk + dk
            old = d.get(nk)
            if old is None:
                d[nk] = (gE + dE, -c * gc)
                heappush(heap, -nk)
            else:
                v = old[1] - c * gc
                if v:
                    d[nk] = (old[0], v)
                else:
                    del d[nk]
    return rem


def reduce_with_quotients(d: dict, basis: Sequence[KPoly], P: Packer):
    """Full division that also records quotients: returns (remainder, {index: terms})."""
    guard = P.guard
    heap = [-k for k in d]
    heapify(heap)
    rem: dict = {}
    quots: dict = {}
    while heap:
        k = -heappop(heap)
        ent = d.pop(k, None)
        if ent is None:
            continue
        E, c = ent
        for idx, g in enumerate(basis):
            if ((E | guard) - g.E) & guard == guard:
                break
        else:
            rem[k] = ent
            continue
        dk = k - g.K
        dE = E - g.E
        q = quots.setdefault(idx, {})
        q[dk] = (dE, q[dk][1] + c if dk in q else c)
        it = iter(g.terms)
        next(it)
        for gk, gE, gc in it:
            nk = gk + dk
            old = d.get(nk)
            if old is None:
                d[nk] = (gE + dE, -c * gc)
                heappush(heap, -nk)
            else:
                v = old[1] - c * gc
                if v:
                    d[nk] = (old[0], v)
                else:
                    del d[nk]
    return rem, quots


def _lcm(a, b):
    return tuple([x if x > y else y for x, y in zip(a, b)])


def _coprime(a, b):
    for x, y in zip(a, b):
        if x and y:
            return False
    return True


def _divides_t(a, b):
    for x, y in zip(a, b):
        if x > y:
            return False
    return True


def spoly_terms(f: KPoly, g: KPoly, P: Packer) -> tuple[dict, int]:
    l = _lcm(f.e, g.e)
    lk, lE = P.key(l), P.pexp(l)
    df_k, df_E = lk - f.K, lE - f.E
    dg_k, dg_E = lk - g.K, lE - g.E
    d = {}
    for k, E, c in f.terms[1:]:
        d[k + df_k] = (E + df_E, c)
    for k, E, c in g.terms[1:]:
        nk = k + dg_k
        old = d.get(nk)
        if old is None:
            d[nk] = (E + dg_E, -c)
        else:
            v = old[1] - c
            if v:
                d[nk] = (old[0], v)
            else:
                del d[nk]
    dl = sum(l)
    sugar = max(f.sugar + dl - sum(f.e), g.sugar + dl - sum(g.e))
    return d, sugar


@dataclass
class GBStats:
    pairs: int = 0
    zero_reductions: int = 0
    product_skipped: int = 0
    chain_skipped: int = 0
    seconds: float = 0.0


def buchberger_kernel(polys: list[KPoly], P: Packer, *, product_criterion=True,
                      chain_criterion=True, limits: Limits | None = None,
                      stats: GBStats | None = None) -> list[KPoly]:
    """Reduced Groebner basis of monic kernel polynomials."""
    limits = limits or DEFAULT_LIMITS
    stats = stats if stats is not None else GBStats()
    t0 = time.perf_counter()
    basis: list[KPoly] = []
    active: list[int] = []
    live: dict = {}    # (i, j) -> lcm, pairs not yet treated
    heap: list = []    # (sugar, lcm key, i, j)

    def update(h: int):
        nonlocal active
        hp = basis[h]
        he = hp.e
        cand = [(g, _lcm(basis[g].e, he)) for g in active]
        if chain_criterion:
            # Gebauer-Moeller: among the new pairs keep only those whose lcm is
            # not a multiple of another new lcm; coprime pairs win ties
            kept: list = []
            while cand:
                g, l = cand.pop(0)
                if _coprime(basis[g].e, he) or (
                        not any(_divides_t(l2, l) for _, l2 in cand)
                        and not any(_divides_t(l2, l) for _, l2 in kept)):
                    kept.append((g, l))
                else:
                    stats.chain_skipped += 1
            cand = kept
        if product_criterion:
            n0 = len(cand)
            cand = [(g, l) for g, l in cand if not _coprime(basis[g].e, he)]
            stats.product_skipped += n0 - len(cand)
        if chain_criterion:
            for ij, l in list(live.items()):
                i, j = ij
                if _divides_t(he, l) and _lcm(basis[i].e, he) != l and \
                        _lcm(basis[j].e, he) != l:
                    del live[ij]
                    stats.chain_skipped += 1
        for g, l in cand:
            ds = sum(l)
            s = max(basis[g].sugar + ds - sum(basis[g].e), hp.sugar + ds - sum(he))
            live[(g, h)] = l
            heappush(heap, (s, P.key(l), g, h))
        if chain_criterion:
            active = [g for g in active if not _divides_t(he, basis[g].e)]
        active.append(h)

    def add(p: KPoly):
        basis.append(p)
        if limits.max_basis is not None and len(basis) > limits.max_basis:
            raise ResourceLimitExceeded(f"basis size exceeded {limits.max_basis}")
        update(len(basis) - 1)

    for p in sorted(polys, key=lambda q: (q.sugar, q.K)):
        d = {k: (E, c) for k, E, c in p.terms}
        red = reduce_terms(d, [basis[g] for g in active], P)
        q = _make_kpoly(red, P, p.sugar)
        if q is not None:
            add(q)

    while heap:
        s, _, i, j = heappop(heap)
        if live.pop((i, j), None) is None:
            continue
        stats.pairs += 1
        if limits.max_pairs is not None and stats.pairs > limits.max_pairs:
            raise ResourceLimitExceeded(f"pair count exceeded {limits.max_pairs}")
        d, sugar = spoly_terms(basis[i], basis[j], P)
        red = reduce_terms(d, [basis[g] for g in active], P)
        q = _make_kpoly(red, P, sugar)
        if q is None:
            stats.zero_reductions += 1
        else:
            add(q)

    result = interreduce([basis[g] for g in active], P)
    stats.seconds += time.perf_counter() - t0
    return result


def interreduce(polys: list[KPoly], P: Packer) -> list[KPoly]:
    """Minimal, fully tail-reduced, monic, sorted ascending by leading monomial."""
    minimal = []
    for p in sorted(polys, key=lambda q: q.K):
        if not any(P.divides(m.E, p.E) for m in minimal):
            minimal.append(p)
    out = []
    for idx, p in enumerate(minimal):
        others = minimal[:idx] + minimal[idx + 1:]
        d = {k: (E, c) for k, E, c in p.terms[1:]}
        tail = reduce_terms(d, others, P)
        d2 = {p.K: (p.E, mpq(1))}
        d2.update(tail)
        out.append(_make_kpoly(d2, P, p.sugar))
    return out


# ---------- public layer ----------

class GroebnerBasis:
    """Reduced Groebner basis of an ideal under a fixed order."""

    def __init__(self, ring: PolyRing, order: MonomialOrder, kpolys: list[KPoly],
                 packer: Packer, stats: GBStats | None = None):
        self.ring = ring
        self.order = order
        self._k = kpolys
        self._packer = packer
        self.stats = stats or GBStats()
        self._elements = None

    @property
    def elements(self) -> list[Polynomial]:
        if self._elements is None:
            P = self._packer
            self._elements = [
                Polynomial(self.ring, {P.unpack(E): c for _, E, c in g.terms})
                for g in self._k]
        return self._elements

    def __len__(self):
        return len(self._k)

    def __iter__(self):
        return iter(self.elements)

    def leading_monomials(self) -> list[tuple]:
        return [g.e for g in self._k]

    def is_unit(self) -> bool:
        return len(self._k) == 1 and not any(self._k[0].e)

    def normal_form(self, f: Polynomial) -> Polynomial:
        if f.ring.names != self.ring.names:
            raise RingMismatchError(f"{f.ring} vs {self.ring}")
        P = self._packer
        rem = reduce_terms(_to_terms(f, P), self._k, P)
        return Polynomial(self.ring, {P.unpack(E): c for E, c in rem.values()})

    def reduces_to_zero(self, f: Polynomial) -> bool:
        P = self._packer
        return not reduce_terms(_to_terms(f, P), self._k, P)

    def __repr__(self):
        return f"GroebnerBasis({[str(g) for g in self.elements]}, {self.order})"


def buchberger(gens: Iterable[Polynomial], order: MonomialOrder | None = None, *,
               ring: PolyRing | None = None, product_criterion: bool = True,
               chain_criterion: bool = True, limits: Limits | None = None) -> GroebnerBasis:
    gens = list(gens)
    if ring is None:
        if not gens:
            raise ValueError("ring required for an empty generator list")
        ring = gens[0].ring
    for g in gens:
        if g.ring != ring:
            raise RingMismatchError(f"{g.ring} vs {ring}")
    order = ring.order if order is None else order
    P = Packer(ring.nvars, order)
    kp = []
    for g in gens:
        if g:
            k = _make_kpoly(_to_terms(g, P), P, g.total_degree())
            kp.append(k)
    stats = GBStats()
    basis = buchberger_kernel(kp, P, product_criterion=product_criterion,
                              chain_criterion=chain_criterion, limits=limits, stats=stats)
    return GroebnerBasis(ring, order, basis, P, stats)


def normal_form(f: Polynomial, G: GroebnerBasis) -> Polynomial:
    return G.normal_form(f)


class Ideal:
    """Generators plus a per-order cache of reduced Groebner bases."""

    def __init__(self, ring: PolyRing, generators: Iterable[Polynomial] = ()):
        gens = []
        for g in generators:
            if g.ring != ring:
                if g.ring.names != ring.names:
                    raise RingMismatchError(f"{g.ring} vs {ring}")
                g = Polynomial(ring, dict(g.coeffs))
            if g:
                gens.append(g)
        self.ring = ring
        self.generators = tuple(gens)
        self._gb: dict = {}

    @classmethod
    def of(cls, *gens: Polynomial) -> "Ideal":
        return cls(gens[0].ring, gens)

    def groebner(self, order: MonomialOrder | None = None, limits: Limits | None = None
                 ) -> GroebnerBasis:
        order = self.ring.order if order is None else order
        gb = self._gb.get(order)
        if gb is None:
            gb = buchberger(self.generators, order, ring=self.ring, limits=limits)
            self._gb[order] = gb
        return gb

    def reduced(self) -> "Ideal":
        """Same ideal, generated by its reduced Groebner basis."""
        gb = self.groebner()
        out = Ideal(self.ring, gb.elements)
        out._gb[gb.order] = gb
        return out

    def contains_poly(self, f: Polynomial) -> bool:
        return self.groebner().reduces_to_zero(f)

    def is_zero(self) -> bool:
        return not self.generators

    def is_unit(self) -> bool:
        return self.groebner().is_unit()

    def to_ring(self, ring: PolyRing) -> "Ideal":
        return Ideal(ring, [g.to_ring(ring) for g in self.generators])

    def __add__(self, other: "Ideal") -> "Ideal":
        _same(self, other)
        return Ideal(self.ring, self.generators + other.generators)

    def __mul__(self, other: "Ideal") -> "Ideal":
        _same(self, other)
        return Ideal(self.ring, [a * b for a in self.generators for b in other.generators])

    def __len__(self):
        return len(self.generators)

    def __iter__(self):
        return iter(self.generators)

    def __str__(self):
        return "<" + ", ".join(map(str, self.generators)) + ">"

    def __repr__(self):
        return f"Ideal({self})"


def _same(I: Ideal, J: Ideal):
    if I.ring.names != J.ring.names:
        raise RingMismatchError(f"{I.ring} vs {J.ring}")


def ideal_contains(I: Ideal, J: Ideal) -> bool:
    """True iff J is a subset of I."""
    _same(I, J)
    G = I.groebner()
    return all(G.reduces_to_zero(g) for g in J.generators)


def ideal_equal(I: Ideal, J: Ideal) -> bool:
    return ideal_contains(I, J) and ideal_contains(J, I)
