"""Free resolutions by Schreyer's algorithm, minimization and projective dimension.

A level of the Schreyer frame is a Groebner basis f_1..f_s of a submodule
of R^r under the order induced from the previous level: the term m*e_a is
compared through m*LT(f_a) one level down, ties going to the smaller index.
Flattened, the term (m, a) has order key (ring key of m*M_a, chain_a) where
M_a is the product of lead monomials down to R and chain_a the tuple of
component indices met on the way (smaller chain = larger term).  With that
key the S-pair syzygies of one level are again a Groebner basis, so only
reductions are needed to climb.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from heapq import heapify, heappop, heappush
from typing import Iterable, Sequence

from gmpy2 import mpq

from .exactpoly import MonomialOrder, Polynomial, PolyRing
from .groebner import (GroebnerBasis, Ideal, Limits, Packer, ResourceLimitExceeded,
                       DEFAULT_LIMITS, buchberger, reduce_with_quotients, _to_terms,
                       _make_kpoly)
from .ideal_ops import eliminate, height


class NotGradedError(ValueError):
    pass


# ---------- kernel ----------

class _Frame:
    """Components of a free module with their induced-order data."""

    def __init__(self, tmk: list[int], tme: list[tuple], chain: list[tuple]):
        self.tmk = tmk      # packed ring key of M_a
        self.tme = tme      # exponent tuple of M_a
        self.chain = chain


def _lead(vec: dict, frame: _Frame):
    """Leading term (comp, key) of a module vector {(comp, key): (E, c)}."""
    best, bk = None, None
    for (a, k) in vec:
        ok = (-(k + frame.tmk[a]), frame.chain[a])
        if bk is None or ok < bk:
            best, bk = (a, k), ok
    return best


def _module_reduce(vec: dict, frame: _Frame, basis: list, by_comp: dict, P: Packer):
    """Divide ``vec`` by the frame basis; returns (remainder, quotients).

    ``basis[b]`` is (lead comp, lead key, lead pexp, lead coeff, vector).
    Quotients: {b: {key: (pexp, coeff)}}.
    """
    guard = P.guard
    tmk, chain = frame.tmk, frame.chain
    heap = [(-(k + tmk[a]), chain[a], a, k) for (a, k) in vec]
    heapify(heap)
    rem: dict = {}
    quots: dict = {}
    while heap:
        _, _, a, k = heappop(heap)
        ent = vec.pop((a, k), None)
        if ent is None:
            continue
        E, c = ent
        hit = None
        for b in by_comp.get(a, ()):
            la, lk, lE, lc, _ = basis[b]
            if ((E | guard) - lE) & guard == guard:
                hit = b
                break
        if hit is None:
            rem[(a, k)] = ent
            continue
        la, lk, lE, lc, bvec = basis[hit]
        dk, dE = k - lk, E - lE
        q = c / lc
        qd = quots.setdefault(hit, {})
        old = qd.get(dk)
        qd[dk] = (dE, q if old is None else old[1] + q)
        for (ba, bk), (bE, bc) in bvec.items():
            if ba == a and bk == lk:
                continue
            nk = bk + dk
            key = (ba, nk)
            cur = vec.get(key)
            if cur is None:
                vec[key] = (bE + dE, -q * bc)
                heappush(heap, (-(nk + tmk[ba]), chain[ba], ba, nk))
            else:
                v = cur[1] - q * bc
                if v:
                    vec[key] = (cur[0], v)
                else:
                    del vec[key]
    return rem, quots


def _lex_desc(e):
    return tuple(-x for x in e)


def _schreyer_step(elements: list[dict], frame: _Frame, P: Packer, limits: Limits):
    """Sort one level, then return (sorted elements, next frame, syzygies)."""
    leads = []
    for v in elements:
        a, k = _lead(v, frame)
        E, c = v[(a, k)]
        leads.append((a, k, E, c))
    e_of = [P.unpack(l[2]) for l in leads]
    # within a lead component, decreasing lex order of lead monomials keeps
    # the frame length within the number of variables
    perm = sorted(range(len(elements)), key=lambda i: (leads[i][0], _lex_desc(e_of[i])))
    elements = [elements[i] for i in perm]
    leads = [leads[i] for i in perm]
    e_of = [e_of[i] for i in perm]

    tmk = [l[1] + frame.tmk[l[0]] for l in leads]
    tme = [tuple(x + y for x, y in zip(e_of[i], frame.tme[leads[i][0]]))
           for i in range(len(leads))]
    chain = [frame.chain[leads[i][0]] + (i,) for i in range(len(leads))]
    nxt = _Frame(tmk, tme, chain)

    basis = [(l[0], l[1], l[2], l[3], v) for l, v in zip(leads, elements)]
    by_comp: dict = {}
    for i, l in enumerate(leads):
        by_comp.setdefault(l[0], []).append(i)

    syz = []
    for comp, idxs in by_comp.items():
        for pos, a in enumerate(idxs):
            # Schreyer syzygies s_ab (a < b) have lead term (lcm/lm_a) e_a; keep
            # only those whose lead monomials are minimal among the candidates
            cands = []
            for b in idxs[pos + 1:]:
                l = tuple(max(x, y) for x, y in zip(e_of[a], e_of[b]))
                ma = tuple(x - y for x, y in zip(l, e_of[a]))
                cands.append((sum(ma), ma, b, l))
            cands.sort()
            kept = []
            for deg, ma, b, l in cands:
                if any(all(x <= y for x, y in zip(m2, ma)) for _, m2, _, _ in kept):
                    continue
                kept.append((deg, ma, b, l))
            for _, ma, b, l in kept:
                if limits.max_pairs is not None and len(syz) > limits.max_pairs:
                    raise ResourceLimitExceeded(f"syzygy count exceeded {limits.max_pairs}")
                mb = tuple(x - y for x, y in zip(l, e_of[b]))
                ka, Ea = P.key(ma), P.pexp(ma)
                kb, Eb = P.key(mb), P.pexp(mb)
                ca, cb = 1 / leads[a][3], 1 / leads[b][3]
                svec: dict = {}
                for (x, k), (E, c) in basis[a][4].items():
                    svec[(x, k + ka)] = (E + Ea, c * ca)
                for (x, k), (E, c) in basis[b][4].items():
                    key = (x, k + kb)
                    cur = svec.get(key)
                    v = -c * cb if cur is None else cur[1] - c * cb
                    if v:
                        svec[key] = (E + Eb if cur is None else cur[0], v)
                    else:
                        svec.pop(key, None)
                rem, quots = _module_reduce(svec, frame, basis, by_comp, P)
                if rem:
                    raise AssertionError("Schreyer frame level is not a Groebner basis")
                s = {(a, ka): (Ea, ca), (b, kb): (Eb, -cb)}
                for idx, qd in quots.items():
                    for k, (E, c) in qd.items():
                        key = (idx, k)
                        cur = s.get(key)
                        v = -c if cur is None else cur[1] - c
                        if v:
                            s[key] = (E if cur is None else cur[0], v)
                        else:
                            s.pop(key, None)
                syz.append(s)
    return elements, nxt, syz


# ---------- public layer ----------

def _vec_to_public(vec: dict, ring: PolyRing, P: Packer) -> dict[int, Polynomial]:
    cols: dict = {}
    for (a, _), (E, c) in vec.items():
        cols.setdefault(a, {})[P.unpack(E)] = c
    return {a: Polynomial(ring, d) for a, d in cols.items()}


@dataclass
class FreeResolution:
    """Resolution F_0 <- F_1 <- ... of R/I.

    ``maps[i]`` is d_{i+1}: F_{i+1} -> F_i as a list of columns, each column a
    dict {row index: Polynomial}.  ``shifts[i]`` are the generator degrees of
    F_i when graded.
    """

    ring: PolyRing
    maps: list[list[dict[int, Polynomial]]]
    ranks: list[int]
    graded: bool
    shifts: list[list[int]] = field(default_factory=list)
    minimal: bool = False

    @property
    def length(self) -> int:
        return len(self.maps)

    def betti_table(self) -> dict[tuple[int, int], int]:
        """{(i, degree): count} for the generators of each F_i."""
        out: dict = {}
        for i, degs in enumerate(self.shifts):
            for d in degs:
                out[(i, d)] = out.get((i, d), 0) + 1
        return out

    def composition_is_zero(self) -> bool:
        zero = self.ring.zero()
        for k in range(len(self.maps) - 1):
            d1, d2 = self.maps[k], self.maps[k + 1]
            for col in d2:
                acc: dict = {}
                for j, p in col.items():
                    for r, q in d1[j].items():
                        acc[r] = acc.get(r, zero) + q * p
                if any(v for v in acc.values()):
                    return False
        return True


def _is_graded(I: Ideal) -> bool:
    return all(g.is_homogeneous() for g in I.generators)


def schreyer_resolution(I: Ideal, limits: Limits | None = None) -> FreeResolution:
    """The (generally non-minimal) Schreyer resolution of R/I."""
    limits = limits or DEFAULT_LIMITS
    ring = I.ring
    gb = I.groebner(limits=limits)
    if gb.is_unit():
        raise ValueError("cannot resolve R/I for the unit ideal")
    P = Packer(ring.nvars, ring.order)
    zero_e = (0,) * ring.nvars
    frame = _Frame([0], [zero_e], [()])
    elements = []
    for g in gb.elements:
        elements.append({(0, P.key(e)): (P.pexp(e), c) for e, c in g.coeffs.items()})
    maps, ranks, shifts = [], [1], [[0]]
    while elements:
        elements, nxt, syz = _schreyer_step(elements, frame, P, limits)
        maps.append([_vec_to_public(v, ring, P) for v in elements])
        ranks.append(len(elements))
        shifts.append([sum(e) for e in nxt.tme])
        frame = nxt
        elements = syz
    return FreeResolution(ring, maps, ranks, _is_graded(I), shifts)


def minimize(res: FreeResolution) -> FreeResolution:
    """Cancel unit entries until none remain.

    For a graded resolution the result is minimal; otherwise it is a shorter
    resolution whose length only bounds the projective dimension.
    """
    ring = res.ring
    # mutable copies keyed by stable ids: cols[k][col_id] = {row_id: poly}
    cols = [{j: dict(c) for j, c in enumerate(m)} for m in res.maps]
    degs = [dict(enumerate(s)) for s in res.shifts] if res.shifts else None
    changed = True
    while changed:
        changed = False
        for k, dk in enumerate(cols):
            pivot = None
            for j, col in dk.items():
                for r, p in col.items():
                    if p.is_constant() and p:
                        pivot = (j, r, p.constant_value())
                        break
                if pivot:
                    break
            if not pivot:
                continue
            c, r, lam = pivot
            pc = dk.pop(c)
            for j, col in dk.items():
                mu = col.get(r)
                if mu is None:
                    continue
                f = mu.scale(1 / lam)
                for row, p in pc.items():
                    v = col.get(row, ring.zero()) - f * p
                    if v:
                        col[row] = v
                    else:
                        col.pop(row, None)
                col.pop(r, None)
            # row c of d_{k+1} and column r of d_{k-1} go away with the cancelled pair
            if k + 1 < len(cols):
                for col in cols[k + 1].values():
                    col.pop(c, None)
            if k > 0:
                cols[k - 1].pop(r)
            if degs is not None:
                degs[k + 1].pop(c, None)
                degs[k].pop(r, None)
            changed = True
            break
    # relabel
    while cols and not cols[-1]:
        cols.pop()
    ids = [[0]] + [sorted(dk) for dk in cols]
    pos = [{v: i for i, v in enumerate(lst)} for lst in ids]
    maps = []
    for k, dk in enumerate(cols):
        maps.append([{pos[k][r]: p for r, p in dk[j].items()} for j in ids[k + 1]])
    ranks = [len(x) for x in ids]
    shifts = [[degs[k][i] for i in ids[k]] for k in range(len(ids))] if degs else []
    return FreeResolution(ring, maps, ranks, res.graded, shifts, minimal=res.graded)


def free_resolution(I: Ideal, limits: Limits | None = None) -> FreeResolution:
    """Resolution of R/I: Schreyer frame followed by cancellation of unit entries."""
    return minimize(schreyer_resolution(I, limits))


def projective_dimension(I: Ideal, limits: Limits | None = None) -> int:
    """pd(R/I) for graded I; for non-graded I this is an upper bound."""
    return free_resolution(I, limits).length


@dataclass
class CMReport:
    verdict: bool | None   # None: indeterminate (non-graded input)
    pd: int
    height: int
    graded: bool

    def __bool__(self):
        return bool(self.verdict)


def is_cohen_macaulay(I: Ideal, limits: Limits | None = None) -> CMReport:
    """R/I is Cohen-Macaulay iff pd(R/I) = height(I) (graded case)."""
    res = free_resolution(I, limits)
    h = height(I, limits)
    if not res.graded:
        return CMReport(None, res.length, h, False)
    return CMReport(res.length == h, res.length, h, True)


# ---------- syzygies of generator lists ----------

def schreyer_syzygies(G: GroebnerBasis) -> list[list[Polynomial]]:
    """Syzygies of a Groebner basis from the standard representations of its S-pairs."""
    ring = G.ring
    P = Packer(ring.nvars, G.order)
    frame = _Frame([0], [(0,) * ring.nvars], [()])
    elements = [{(0, P.key(e)): (P.pexp(e), c) for e, c in g.coeffs.items()}
                for g in G.elements]
    # keep the Groebner basis order so the output indexes G.elements
    if not elements:
        return []
    leads = []
    for v in elements:
        a, k = _lead(v, frame)
        E, c = v[(a, k)]
        leads.append((a, k, E, c))
    sorted_elems, _, syz = _schreyer_step(elements, frame, P, DEFAULT_LIMITS)
    # map sorted indices back to the order of G.elements
    back = {}
    for i, v in enumerate(sorted_elems):
        back[i] = next(j for j, w in enumerate(elements) if w is v)
    out = []
    for s in syz:
        row = [ring.zero()] * len(elements)
        for a, p in _vec_to_public(s, ring, P).items():
            row[back[a]] = p
        out.append(row)
    return out


def _module_ring(ring: PolyRing, r: int, tag: str = "e") -> tuple[PolyRing, list[str]]:
    names = [ring.fresh_name(f"{tag}{i}") for i in range(r)]
    return ring.extend(names, front=True,
                       order=MonomialOrder.block(("grevlex", range(r)),
                                                 ("grevlex", range(r, r + ring.nvars)))), names


def _quadrics(ext: PolyRing, names: Sequence[str]) -> list[Polynomial]:
    v = [ext.var(n) for n in names]
    return [v[i] * v[j] for i in range(len(v)) for j in range(i, len(v))]


def module_contains(vectors: Sequence[Sequence[Polynomial]], u: Sequence[Polynomial]) -> bool:
    """Is u in the submodule of R^r spanned by ``vectors``?"""
    r = len(u)
    ring = u[0].ring
    ext, names = _module_ring(ring, r)
    es = [ext.var(n) for n in names]
    gens = [sum((p.to_ring(ext) * e for p, e in zip(v, es)), ext.zero()) for v in vectors]
    I = Ideal(ext, gens + _quadrics(ext, names))
    target = sum((p.to_ring(ext) * e for p, e in zip(u, es)), ext.zero())
    return I.contains_poly(target)


def syzygies(gens: Sequence[Polynomial] | GroebnerBasis) -> list[list[Polynomial]]:
    """Generators of the first syzygy module.

    For a GroebnerBasis these come from its S-pairs.  For a plain generator
    list the module {(sum a_i f_i, a)} is encoded as the linear part of an
    ideal in tag variables h, e_1..e_r; eliminating h leaves the syzygies,
    which are then pruned to an irredundant generating set.
    """
    if isinstance(gens, GroebnerBasis):
        return schreyer_syzygies(gens)
    gens = list(gens)
    if not gens:
        return []
    ring = gens[0].ring
    r = len(gens)
    names = [ring.fresh_name("h")]
    names += [ring.fresh_name(f"e{i}") for i in range(r)]
    ext = ring.extend(names, front=True, order=MonomialOrder.block(
        ("grevlex", [0]), ("grevlex", range(1, r + 1)),
        ("grevlex", range(r + 1, r + 1 + ring.nvars))))
    tags = [ext.var(n) for n in names]
    h, es = tags[0], tags[1:]
    I = Ideal(ext, [h * f.to_ring(ext) + e for f, e in zip(gens, es)] + _quadrics(ext, names))
    elim = eliminate(I, [0])
    vecs = []
    for g in elim.generators:
        if any(g.degree(i) != 1 for i in range(1, r + 1) if g.degree(i) > 1):
            continue
        if g.degree_in(range(1, r + 1)) != 1 or not g.is_homogeneous(range(1, r + 1)):
            continue
        row = [g.coeff_in(i, 1).to_ring(ring) for i in range(1, r + 1)]
        vecs.append(row)
    vecs.sort(key=lambda v: (max(p.total_degree() for p in v), sum(len(p) for p in v)))
    kept: list = []
    for idx, v in enumerate(vecs):
        rest = kept + vecs[idx + 1:]
        if rest and module_contains(rest, v):
            continue
        kept.append(v)
    return kept
