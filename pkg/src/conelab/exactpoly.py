"""Exact multivariate polynomials over the rationals.

Polynomials are sparse maps from exponent tuples to ``gmpy2.mpq``
coefficients.  Every polynomial belongs to a :class:`PolyRing`, which fixes
the variable names, an optional family parameter and the monomial order used
to sort terms for display and leading-term queries.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import reduce
from typing import Iterable, Mapping, Sequence

from gmpy2 import gcd, isqrt, mpq, mpz

Exponents = tuple  # tuple[int, ...]


class RingMismatchError(ValueError):
    """Raised when polynomials from different rings are combined."""


class NotDivisibleError(ArithmeticError):
    pass


def to_rational(c) -> mpq:
    if isinstance(c, Fraction):
        return mpq(c.numerator, c.denominator)
    return mpq(c)


# ---------- monomial orders ----------

@dataclass(frozen=True)
class MonomialOrder:
    """A monomial order given by kind and, for block orders, a partition.

    ``blocks`` is a tuple of ``(kind, variable indices)`` pairs, compared
    left to right; the first block is the one eliminated first.
    """

    kind: str = "grevlex"
    blocks: tuple = ()

    def __post_init__(self):
        if self.kind not in ("lex", "grevlex", "block"):
            raise ValueError(f"unknown monomial order {self.kind!r}")
        if self.kind == "block":
            for sub, _ in self.blocks:
                if sub not in ("lex", "grevlex"):
                    raise ValueError(f"unknown block sub-order {sub!r}")

    @classmethod
    def block(cls, *blocks: tuple[str, Sequence[int]]) -> "MonomialOrder":
        return cls("block", tuple((k, tuple(ix)) for k, ix in blocks))

    def rows(self, nvars: int) -> tuple[tuple[int, ...], ...]:
        """0/1 weight rows; monomials compare by the lex order of row sums."""
        if self.kind == "lex":
            return _lex_rows(tuple(range(nvars)))
        if self.kind == "grevlex":
            return _grevlex_rows(tuple(range(nvars)))
        seen = sorted(i for _, ix in self.blocks for i in ix)
        if seen != list(range(nvars)):
            raise ValueError("block order must cover every variable exactly once")
        rows: list = []
        for sub, ix in self.blocks:
            rows.extend(_lex_rows(ix) if sub == "lex" else _grevlex_rows(ix))
        return tuple(rows)

    def __str__(self):
        if self.kind != "block":
            return self.kind
        return "block(" + "; ".join(f"{k}{list(ix)}" for k, ix in self.blocks) + ")"


def _lex_rows(ix):
    return tuple((i,) for i in ix)


def _grevlex_rows(ix):
    # grevlex == lex on the partial sums (total, total minus last, ...)
    return tuple(ix[: len(ix) - k] for k in range(len(ix)))


GREVLEX = MonomialOrder("grevlex")
LEX = MonomialOrder("lex")


def order_key(rows):
    def key(e):
        return tuple([sum([e[i] for i in r]) for r in rows])
    return key


# ---------- rings ----------

@dataclass(frozen=True)
class PolyRing:
    names: tuple[str, ...]
    order: MonomialOrder = GREVLEX
    param: str | None = None
    _key: object = field(default=None, init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        names = tuple(self.names)
        object.__setattr__(self, "names", names)
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate variable names in {names}")
        if self.param is not None and self.param not in names:
            raise ValueError(f"parameter {self.param!r} is not a ring variable")
        object.__setattr__(self, "_key", order_key(self.order.rows(len(names))))

    @property
    def nvars(self) -> int:
        return len(self.names)

    @property
    def param_index(self) -> int | None:
        return None if self.param is None else self.names.index(self.param)

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise KeyError(f"{name!r} is not a variable of {self}") from None

    def key(self, e: Exponents):
        return self._key(e)

    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    def one(self) -> "Polynomial":
        return self.const(1)

    def const(self, c) -> "Polynomial":
        c = to_rational(c)
        return Polynomial(self, {(0,) * self.nvars: c} if c else {})

    def var(self, name: str | int) -> "Polynomial":
        i = name if isinstance(name, int) else self.index(name)
        e = [0] * self.nvars
        e[i] = 1
        return Polynomial(self, {tuple(e): mpq(1)})

    def gens(self) -> list["Polynomial"]:
        return [self.var(i) for i in range(self.nvars)]

    def monomial(self, e: Sequence[int], c=1) -> "Polynomial":
        c = to_rational(c)
        return Polynomial(self, {tuple(e): c} if c else {})

    def from_dict(self, d: Mapping) -> "Polynomial":
        out = {}
        for e, c in d.items():
            if len(e) != self.nvars:
                raise ValueError("exponent vector length does not match ring")
            c = to_rational(c)
            if c:
                out[tuple(int(x) for x in e)] = c
        return Polynomial(self, out)

    def __call__(self, text: str) -> "Polynomial":
        """Parse a polynomial expression in this ring."""
        from .parser import parse_poly

        return parse_poly(text, self)

    def with_order(self, order: MonomialOrder) -> "PolyRing":
        return PolyRing(self.names, order, self.param)

    def with_param(self, param: str | None) -> "PolyRing":
        return PolyRing(self.names, self.order, param)

    def extend(self, names: Sequence[str], front: bool = True,
               order: MonomialOrder | None = None) -> "PolyRing":
        """Ring with extra variables; default order eliminates them first."""
        names = tuple(names)
        clash = set(names) & set(self.names)
        if clash:
            raise ValueError(f"variables {sorted(clash)} already present")
        allnames = names + self.names if front else self.names + names
        if order is None:
            k = len(names)
            if front:
                order = MonomialOrder.block(("grevlex", range(k)),
                                            ("grevlex", range(k, k + self.nvars)))
            else:
                order = GREVLEX
        return PolyRing(allnames, order, self.param)

    def fresh_name(self, stem: str) -> str:
        name, k = stem, 0
        while name in self.names:
            k += 1
            name = f"{stem}{k}"
        return name

    def __str__(self):
        s = f"Q[{', '.join(self.names)}] ({self.order})"
        return s + (f" param {self.param}" if self.param else "")


# ---------- polynomials ----------

class Polynomial:
    """Immutable sparse polynomial; ``terms`` are sorted descending in the ring order."""

    __slots__ = ("ring", "_c", "_terms", "_hash")

    def __init__(self, ring: PolyRing, coeffs: dict):
        self.ring = ring
        self._c = coeffs
        self._terms = None
        self._hash = None

    # -- structure --
    @property
    def coeffs(self) -> Mapping:
        return self._c

    @property
    def terms(self) -> list:
        """List of (coefficient, exponents), strictly descending."""
        if self._terms is None:
            key = self.ring._key
            self._terms = [(self._c[e], e) for e in sorted(self._c, key=key, reverse=True)]
        return self._terms

    def __len__(self):
        return len(self._c)

    def __bool__(self):
        return bool(self._c)

    def is_zero(self) -> bool:
        return not self._c

    def is_constant(self) -> bool:
        return not self._c or (len(self._c) == 1 and not any(next(iter(self._c))))

    def constant_value(self) -> mpq:
        return self._c.get((0,) * self.ring.nvars, mpq(0))

    @property
    def lm(self) -> Exponents:
        return self.terms[0][1]

    @property
    def lc(self) -> mpq:
        return self.terms[0][0]

    def lt(self) -> "Polynomial":
        c, e = self.terms[0]
        return Polynomial(self.ring, {e: c})

    def total_degree(self) -> int:
        return max((sum(e) for e in self._c), default=-1)

    def degree(self, var: str | int) -> int:
        i = self._ix(var)
        return max((e[i] for e in self._c), default=-1)

    def _indices(self, vars: Iterable[int | str]) -> list[int]:
        return [v if isinstance(v, int) else self.ring.index(v) for v in vars]

    def degree_in(self, vars: Iterable[int | str]) -> int:
        vars = self._indices(vars)
        return max((sum(e[i] for i in vars) for e in self._c), default=-1)

    def support(self) -> set[int]:
        """Indices of variables that occur."""
        s = set()
        for e in self._c:
            s.update(i for i, x in enumerate(e) if x)
        return s

    def is_homogeneous(self, vars: Iterable[int | str] | None = None) -> bool:
        vars = range(self.ring.nvars) if vars is None else self._indices(vars)
        return len({sum(e[i] for i in vars) for e in self._c}) <= 1

    def _ix(self, var):
        return var if isinstance(var, int) else self.ring.index(var)

    def _check(self, other):
        if other.ring != self.ring:
            raise RingMismatchError(f"{self.ring} vs {other.ring}")

    def _coerce(self, other):
        if isinstance(other, Polynomial):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction, type(mpq(0)), type(mpz(0)))):
            return self.ring.const(other)
        return NotImplemented

    # -- arithmetic --
    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._c)
        for e, c in other._c.items():
            v = out.get(e)
            if v is None:
                out[e] = c
            else:
                v = v + c
                if v:
                    out[e] = v
                else:
                    del out[e]
        return Polynomial(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.ring, {e: -c for e, c in self._c.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self._c, other._c
        if len(a) < len(b):
            a, b = b, a
        out: dict = {}
        for eb, cb in b.items():
            for ea, ca in a.items():
                e = tuple([x + y for x, y in zip(ea, eb)])
                v = out.get(e)
                out[e] = ca * cb if v is None else v + ca * cb
        return Polynomial(self.ring, {e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result, base = self.ring.one(), self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def scale(self, c) -> "Polynomial":
        c = to_rational(c)
        if not c:
            return self.ring.zero()
        return Polynomial(self.ring, {e: x * c for e, x in self._c.items()})

    def mul_monomial(self, m: Exponents, c=1) -> "Polynomial":
        c = to_rational(c)
        return Polynomial(self.ring, {tuple([x + y for x, y in zip(e, m)]): v * c
                                      for e, v in self._c.items()})

    def __truediv__(self, other):
        if isinstance(other, Polynomial):
            return divexact(self, other)
        return self.scale(1 / to_rational(other))

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.ring == other.ring and self._c == other._c
        if isinstance(other, (int, Fraction, type(mpq(0)))):
            return self._c == self.ring.const(other)._c
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring.names, frozenset(self._c.items())))
        return self._hash

    # -- normalization --
    def monic(self) -> "Polynomial":
        if not self._c:
            return self
        return self.scale(1 / self.lc)

    def content(self) -> mpq:
        """Rational content: gcd of numerators over lcm of denominators, signed by lc."""
        if not self._c:
            return mpq(0)
        num = reduce(_gcd, (c.numerator for c in self._c.values()))
        den = reduce(_lcm, (c.denominator for c in self._c.values()))
        g = mpq(num, den)
        return g if self.lc > 0 else -g

    def primitive(self) -> "Polynomial":
        """Integer coefficients with gcd 1 and positive leading coefficient."""
        if not self._c:
            return self
        return self.scale(1 / self.content())

    # -- calculus and substitution --
    def diff(self, var: str | int) -> "Polynomial":
        i = self._ix(var)
        out = {}
        for e, c in self._c.items():
            if e[i]:
                f = list(e)
                f[i] -= 1
                out[tuple(f)] = c * e[i]
        return Polynomial(self.ring, out)

    def subs(self, assignments: Mapping, target: PolyRing | None = None) -> "Polynomial":
        """Substitute variables by polynomials of ``target``.

        Variables not mentioned are mapped to the variable of the same name in
        ``target`` (which must then exist).  Keys may be names or indices.
        """
        target = self.ring if target is None else target
        images = []
        for i, name in enumerate(self.ring.names):
            img = assignments.get(name, assignments.get(i))
            if img is None:
                img = target.var(name) if name in target.names else None
            elif not isinstance(img, Polynomial):
                img = target.const(img)
            elif img.ring != target:
                raise RingMismatchError(f"substitution image lives in {img.ring}, not {target}")
            images.append(img)
        out = target.zero()
        powers: dict = {}
        for e, c in self._c.items():
            t = target.const(c)
            for i, k in enumerate(e):
                if not k:
                    continue
                if images[i] is None:
                    raise RingMismatchError(
                        f"variable {self.ring.names[i]!r} has no image in {target}")
                p = powers.get((i, k))
                if p is None:
                    p = powers[(i, k)] = images[i] ** k
                t = t * p
            out = out + t
        return out

    def to_ring(self, target: PolyRing) -> "Polynomial":
        """Re-embed by variable name; unused target variables get exponent 0."""
        if target == self.ring:
            return self
        pos = []
        for i, name in enumerate(self.ring.names):
            pos.append(target.names.index(name) if name in target.names else None)
        out = {}
        n = target.nvars
        for e, c in self._c.items():
            f = [0] * n
            for i, k in enumerate(e):
                if k:
                    if pos[i] is None:
                        raise RingMismatchError(
                            f"variable {self.ring.names[i]!r} not in {target}")
                    f[pos[i]] = k
            out[tuple(f)] = c
        return Polynomial(target, out)

    def evaluate(self, var: str | int, value) -> "Polynomial":
        """Set one variable to a constant; the ring is unchanged."""
        i = self._ix(var)
        value = to_rational(value)
        out: dict = {}
        for e, c in self._c.items():
            f = e[:i] + (0,) + e[i + 1:]
            v = c * value ** e[i] if e[i] else c
            out[f] = out.get(f, 0) + v
        return Polynomial(self.ring, {e: c for e, c in out.items() if c})

    # -- univariate views --
    def coeff_in(self, var: int, k: int) -> "Polynomial":
        """Coefficient of var^k, as a polynomial free of var."""
        out = {}
        for e, c in self._c.items():
            if e[var] == k:
                out[e[:var] + (0,) + e[var + 1:]] = c
        return Polynomial(self.ring, out)

    def coeffs_in(self, var: int) -> dict[int, "Polynomial"]:
        buckets: dict = {}
        for e, c in self._c.items():
            buckets.setdefault(e[var], {})[e[:var] + (0,) + e[var + 1:]] = c
        return {k: Polynomial(self.ring, d) for k, d in buckets.items()}

    # -- rendering --
    def __str__(self):
        if not self._c:
            return "0"
        names = self.ring.names
        parts = []
        for c, e in self.terms:
            mono = "*".join(n if k == 1 else f"{n}^{k}" for n, k in zip(names, e) if k)
            a = abs(c)
            if not mono:
                body = str(a)
            elif a == 1:
                body = mono
            else:
                body = f"{a}*{mono}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        s = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, body in parts[1:]:
            s += f" {sign} {body}"
        return s

    def __repr__(self):
        return f"Polynomial({self})"


def _gcd(a, b):
    from gmpy2 import gcd
    return gcd(a, b)


def _lcm(a, b):
    from gmpy2 import lcm
    return lcm(a, b)


def same_ring(*polys: Polynomial) -> PolyRing:
    ring = polys[0].ring
    for p in polys[1:]:
        if p.ring != ring:
            raise RingMismatchError(f"{ring} vs {p.ring}")
    return ring


# ---------- exact division ----------

def divexact(f: Polynomial, g: Polynomial) -> Polynomial:
    """Quotient f/g, raising NotDivisibleError unless the division is exact."""
    ring = same_ring(f, g)
    if g.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if g.is_constant():
        return f.scale(1 / g.constant_value())
    key = ring._key
    gl_e, gl_c = max(g._c.items(), key=lambda t: key(t[0]))
    rest = [(e, c) for e, c in g._c.items() if e != gl_e]
    r = dict(f._c)
    q = {}
    while r:
        e = max(r, key=key)
        c = r.pop(e)
        d = tuple([a - b for a, b in zip(e, gl_e)])
        if min(d) < 0:
            raise NotDivisibleError(f"{g} does not divide {f}")
        qc = c / gl_c
        q[d] = qc
        for ge, gc in rest:
            m = tuple([a + b for a, b in zip(ge, d)])
            v = r.get(m, 0) - qc * gc
            if v:
                r[m] = v
            else:
                r.pop(m, None)
    return Polynomial(ring, q)


def divides(g: Polynomial, f: Polynomial) -> bool:
    try:
        divexact(f, g)
    except NotDivisibleError:
        return False
    return True


# ---------- gcd ----------

def _main_variable(f: Polynomial, among: Iterable[int] | None = None) -> int | None:
    """Variable of highest degree in f, ties broken by ring position."""
    best, bd = None, 0
    cand = range(f.ring.nvars) if among is None else sorted(among)
    for i in cand:
        d = f.degree(i)
        if d > bd:
            best, bd = i, d
    return best


def _normalize(f: Polynomial) -> Polynomial:
    return f.primitive() if f else f


def content_in(f: Polynomial, var: int) -> Polynomial:
    """gcd of the coefficients of f viewed as a polynomial in ``var``."""
    acc = f.ring.zero()
    for c in sorted(f.coeffs_in(var).values(), key=lambda p: len(p.terms)):
        acc = multivariate_gcd(acc, c)
        if acc.is_constant():
            return acc
    return acc


def prem(a: Polynomial, b: Polynomial, var: int) -> Polynomial:
    """Pseudo-remainder of a by b with respect to ``var``."""
    db = b.degree(var)
    lb = b.coeff_in(var, db)
    r = a
    x = [0] * a.ring.nvars
    while r and r.degree(var) >= db:
        dr = r.degree(var)
        lr = r.coeff_in(var, dr)
        x[var] = dr - db
        r = lb * r - (lr * b).mul_monomial(tuple(x))
    return r


def _int_terms(f: Polynomial) -> dict:
    return {e: mpz(c.numerator) for e, c in f.primitive().coeffs.items()}


def _int_content(d: dict) -> mpz:
    return reduce(gcd, d.values(), mpz(0))


def _eval_at(d: dict, x: int, xi: mpz) -> dict:
    out: dict = {}
    for e, c in d.items():
        k = e[:x] + (0,) + e[x + 1:]
        out[k] = out.get(k, 0) + c * xi ** e[x]
    return {e: c for e, c in out.items() if c}


def _interpolate(h: dict, x: int, xi: mpz) -> dict:
    """Read h as the value at x = xi of a polynomial with coefficients in (-xi/2, xi/2]."""
    out, i, half = {}, 0, xi // 2
    while h:
        low = {}
        for e, c in h.items():
            r = c % xi
            if r > half:
                r -= xi
            if r:
                low[e] = r
                out[e[:x] + (i,) + e[x + 1:]] = r
        h = {e: (c - low.get(e, 0)) // xi for e, c in h.items() if c != low.get(e, 0)}
        i += 1
    return out


def _heu_gcd(f: dict, g: dict, xs: list[int], ring: PolyRing) -> dict | None:
    """Heuristic gcd of integer polynomials: evaluate, recurse, reconstruct, verify.

    Returns None when the evaluation points tried were unlucky.
    """
    cf, cg = _int_content(f), _int_content(g)
    c = gcd(cf, cg)
    f = {e: v // cf for e, v in f.items()}
    g = {e: v // cg for e, v in g.items()}
    if not xs:
        return {next(iter(f)): c}
    x, rest = xs[-1], xs[:-1]
    xi = 2 * min(max(abs(v) for v in f.values()), max(abs(v) for v in g.values())) + 29
    F = Polynomial(ring, {e: mpq(v) for e, v in f.items()})
    G = Polynomial(ring, {e: mpq(v) for e, v in g.items()})
    for _ in range(6):
        fe, ge = _eval_at(f, x, xi), _eval_at(g, x, xi)
        if fe and ge:
            h = _heu_gcd(fe, ge, rest, ring)
            if h is not None:
                H = _interpolate(h, x, xi)
                ch = _int_content(H)
                H = {e: v // ch for e, v in H.items()}
                P = Polynomial(ring, {e: mpq(v) for e, v in H.items()})
                if divides(P, F) and divides(P, G):
                    return {e: v * c for e, v in H.items()}
        xi = xi * 73794 * isqrt(isqrt(xi)) // 27011
    return None


def multivariate_gcd(f: Polynomial, g: Polynomial) -> Polynomial:
    """gcd with content 1 and positive leading coefficient.

    Tries the heuristic evaluation gcd first and falls back to the primitive
    PRS, whose intermediate degrees can swell badly on some inputs.
    """
    ring = same_ring(f, g)
    if f.is_zero():
        return _normalize(g)
    if g.is_zero():
        return _normalize(f)
    if f.is_constant() or g.is_constant():
        return ring.one()
    xs = sorted(f.support() | g.support())
    h = _heu_gcd(_int_terms(f), _int_terms(g), xs, ring)
    if h is not None:
        return _normalize(Polynomial(ring, {e: mpq(v) for e, v in h.items()}))
    return _prs_gcd(f, g)


def _prs_gcd(f: Polynomial, g: Polynomial) -> Polynomial:
    """gcd via recursive primitive PRS; content 1 and positive leading coefficient."""
    ring = same_ring(f, g)
    if f.is_zero():
        return _normalize(g)
    if g.is_zero():
        return _normalize(f)
    if f.is_constant() or g.is_constant():
        return ring.one()
    v = _main_variable(f)
    if v is None or g.degree(v) <= 0:
        v = _main_variable(g) if v is None else v
        if f.degree(v) <= 0:
            # g carries v, f does not: gcd divides every coefficient of g
            return _prs_gcd(f, content_in(g, v))
        return _prs_gcd(content_in(f, v), g)
    cf, cg = content_in(f, v), content_in(g, v)
    a, b = divexact(f, cf), divexact(g, cg)
    c = _prs_gcd(cf, cg)
    if a.degree(v) < b.degree(v):
        a, b = b, a
    while b and b.degree(v) > 0:
        r = prem(a, b, v)
        a = b
        b = divexact(r, content_in(r, v)) if r else r
    h = divexact(a, content_in(a, v)) if not b else ring.one()
    return _normalize(c * h)


# ---------- squarefree decomposition ----------

def _yun(f: Polynomial, v: int) -> list[tuple[int, Polynomial]]:
    """Yun's algorithm in ``v`` for f primitive in v with positive v-degree."""
    df = f.diff(v)
    b = multivariate_gcd(f, df)
    c = divexact(f, b)
    d = divexact(df, b) - c.diff(v)
    out = []
    i = 1
    while c.degree(v) > 0:
        a = multivariate_gcd(c, d)
        c = divexact(c, a)
        d = divexact(d, a) - c.diff(v)
        if a.degree(v) > 0:
            out.append((i, a))
        i += 1
    return out


def squarefree_decomposition(f: Polynomial, vars: Iterable[str | int] | None = None
                             ) -> list[tuple[int, Polynomial]]:
    """Group the irreducible factors of f by multiplicity without factoring.

    Returns ``[(m, g_m), ...]`` sorted by m with each g_m squarefree and the
    g_m pairwise coprime, such that ``prod(g_m**m)`` equals f up to a factor
    free of ``vars`` (default: every non-parameter variable).
    """
    if f.is_zero():
        raise ValueError("squarefree decomposition of the zero polynomial")
    ring = f.ring
    if vars is None:
        vix = {i for i in range(ring.nvars) if i != ring.param_index}
    else:
        vix = {v if isinstance(v, int) else ring.index(v) for v in vars}
    acc: dict[int, Polynomial] = {}
    rest = f
    while True:
        v = _main_variable(rest, vix & rest.support())
        if v is None:
            break
        cont = content_in(rest, v)
        pp = divexact(rest, cont)
        for m, g in _yun(pp, v):
            acc[m] = acc[m] * g if m in acc else g
        rest = cont
    return [(m, _normalize(acc[m])) for m in sorted(acc)]
