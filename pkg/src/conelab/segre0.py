"""Top Segre class of the relative tangent star cone of a hypersurface family.

For a hypersurface X = V(f) with components X_k of multiplicity m_k the top
Segre class is sum m_k^2 [X_k].  Components with the same multiplicity are
kept together as the squarefree factor g_m of f, so no factorization over Q
is needed.

Why testing at the level of the g_m suffices for coalescence: write
g_m = prod of the components of multiplicity m.  If one component
specializes to a nonreduced scheme, or two components of the same
multiplicity share a component after t -> 0, then g_m(x, 0) has a repeated
factor.  Conversely a repeated factor of g_m(x, 0) comes from one of those
two situations, because degree is preserved by the non-degeneracy check.
Components of different multiplicities share a component at t = 0 exactly
when gcd(g_m(x, 0), g_m'(x, 0)) is nonconstant.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .exactpoly import Polynomial, multivariate_gcd, squarefree_decomposition


class DegenerateFamilyError(ValueError):
    """The special fiber is empty, vertical, or drops degree."""


@dataclass
class CycleClass:
    terms: list[tuple[int, Polynomial]] = field(default_factory=list)

    def weight_of(self, component: Polynomial) -> int:
        c = component.primitive()
        return sum(w for w, g in self.terms if g.primitive() == c)

    def same_as(self, other: "CycleClass") -> bool:
        """Equal weights on proportional components."""
        mine = sorted((w, str(g.primitive())) for w, g in self.terms)
        theirs = sorted((w, str(g.primitive())) for w, g in other.terms)
        return mine == theirs

    def __str__(self):
        return " + ".join(f"{w}[{g}]" for w, g in self.terms) or "0"


@dataclass
class CoalescenceReport:
    verdict: bool
    failing_criterion: int | None = None
    certificate: Polynomial | None = None
    groups: list[tuple[int, Polynomial]] = field(default_factory=list)


def _xvars(f: Polynomial) -> list[int]:
    p = f.ring.param_index
    return [i for i in range(f.ring.nvars) if i != p]


def s0_tangent_star(f: Polynomial) -> CycleClass:
    """sum m^2 [V(g_m)] over the multiplicity groups of f."""
    xs = _xvars(f)
    if f.is_zero() or f.degree_in(xs) <= 0:
        raise ValueError("s0 needs a polynomial that is nonconstant in the base variables")
    groups = squarefree_decomposition(f, xs)
    return CycleClass(sorted(((m * m, g) for m, g in groups), key=lambda t: -t[0]))


def _squarefree_defect(g: Polynomial, xs: list[int]) -> Polynomial:
    """gcd of g with its partials over xs; constant iff g is squarefree."""
    r = g
    for i in xs:
        r = multivariate_gcd(r, g.diff(i))
        if r.is_constant():
            break
    return r


def _special_fiber(f: Polynomial) -> Polynomial:
    t = f.ring.param
    if t is None:
        return f
    return f.evaluate(t, 0)


def coalescence_check(f: Polynomial) -> CoalescenceReport:
    """Do the components of V(f) stay reduced and distinct at t = 0?"""
    if f.ring.param is None:
        raise ValueError("coalescence check needs a family parameter")
    xs = _xvars(f)
    f0 = _special_fiber(f)
    if f0.is_zero() or f0.degree_in(xs) != f.degree_in(xs):
        raise DegenerateFamilyError(
            "special fiber is empty or drops degree; the family is degenerate at t = 0")
    groups = squarefree_decomposition(f, xs)
    special = [(m, _special_fiber(g)) for m, g in groups]
    for m, g0 in special:
        r = _squarefree_defect(g0, xs)
        if not r.is_constant():
            return CoalescenceReport(False, 1, r.primitive(), groups)
    for a in range(len(special)):
        for b in range(a + 1, len(special)):
            r = multivariate_gcd(special[a][1], special[b][1])
            if not r.is_constant():
                return CoalescenceReport(False, 2, r, groups)
    return CoalescenceReport(True, None, None, groups)


@dataclass
class SpecializationResult:
    verdict: bool
    family: CycleClass
    fiber: CycleClass
    report: CoalescenceReport


def s0_specializes(f: Polynomial) -> SpecializationResult:
    """Coalescence verdict together with the family and fiber s0 classes."""
    report = coalescence_check(f)
    family = s0_tangent_star(f)
    fiber = s0_tangent_star(_special_fiber(f))
    if report.verdict:
        specialized = CycleClass([(w, _special_fiber(g)) for w, g in family.terms])
        if not specialized.same_as(fiber):
            raise AssertionError(
                f"non-coalescing family but s0 classes differ: {specialized} vs {fiber}")
    return SpecializationResult(report.verdict, family, fiber, report)
