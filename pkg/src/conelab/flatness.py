"""Colon-ideal tests for embedded components, flatness and internal flatness.

The base curve germ is the t-line at t = 0, with t the ring parameter.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .exactpoly import Polynomial
from .groebner import Ideal, Limits, ideal_contains
from .ideal_ops import (TestIdeal, build_test_ideal, colon, dimension, intersect,
                        saturate, validate_test_ideal)


class MissingParameterError(ValueError):
    pass


@dataclass
class FlatnessReport:
    criterion: str  # "no_embedded" | "flat" | "internally_flat"
    verdict: bool
    witness: Polynomial | None = None
    test_ideal_used: TestIdeal | None = None
    hypothesis_notes: list[str] = field(default_factory=list)
    expression: Ideal | None = None
    saturated_verdict: bool | None = None

    def __bool__(self):
        return self.verdict


def _first_outside(I: Ideal, expr: Ideal) -> Polynomial | None:
    gb = I.groebner()
    for g in expr.reduced().generators:
        if not gb.reduces_to_zero(g):
            return g
    return None


def _param(I: Ideal) -> Polynomial:
    if I.ring.param is None:
        raise MissingParameterError("no family parameter declared for this ring")
    return I.ring.var(I.ring.param)


def unmixed_part(I: Ideal, J: TestIdeal, limits: Limits | None = None) -> Ideal:
    """J : (J : I), the intersection of the minimal primary components of I."""
    return colon(J.ideal, colon(J.ideal, I, limits), limits)


def _test_ideal(I: Ideal, J, seed: int, limits) -> TestIdeal:
    if J is None:
        return build_test_ideal(I, seed, limits=limits)
    if isinstance(J, TestIdeal) and J.certificate:
        return J
    return validate_test_ideal(I, J, limits)


def _unmixed_notes(I: Ideal, U: Ideal, limits) -> list[str]:
    notes = ["equidimensionality of the quotient is assumed, not verified"]
    if dimension(I, limits) != dimension(U, limits):
        notes.append("sanity check failed: dim(I) != dim(J:(J:I)); "
                     "the equidimensional hypothesis is likely violated")
    return notes


def has_no_embedded_components(I: Ideal, J: Ideal | TestIdeal | None = None, seed: int = 0,
                               limits: Limits | None = None) -> FlatnessReport:
    """J : (J : I) ⊆ I."""
    J = _test_ideal(I, J, seed, limits)
    U = unmixed_part(I, J, limits)
    w = _first_outside(I, U)
    return FlatnessReport("no_embedded", w is None, w, J, _unmixed_notes(I, U, limits), U)


def is_flat_over_germ(I: Ideal, limits: Limits | None = None) -> FlatnessReport:
    """I : t ⊆ I."""
    t = _param(I)
    E = colon(I, Ideal(I.ring, [t]), limits)
    w = _first_outside(I, E)
    return FlatnessReport("flat", w is None, w, expression=E)


def is_internally_flat(I: Ideal, J: Ideal | TestIdeal | None = None, seed: int = 0,
                       saturated: bool = False, limits: Limits | None = None
                       ) -> FlatnessReport:
    """(I : t) ∩ (J : (J : I)) ⊆ I.

    With ``saturated`` the same containment is also tested with I : t^∞ in
    place of I : t and recorded in ``saturated_verdict``.
    """
    t = _param(I)
    J = _test_ideal(I, J, seed, limits)
    U = unmixed_part(I, J, limits)
    E = intersect(colon(I, Ideal(I.ring, [t]), limits), U, limits)
    w = _first_outside(I, E)
    rep = FlatnessReport("internally_flat", w is None, w, J, _unmixed_notes(I, U, limits), E)
    if saturated:
        Es = intersect(saturate(I, t, limits), U, limits)
        rep.saturated_verdict = ideal_contains(I, Es)
        if rep.saturated_verdict != rep.verdict:
            rep.hypothesis_notes.append(
                "single colon and saturation variants disagree: "
                f"colon={rep.verdict}, saturation={rep.saturated_verdict}")
    return rep


def fiber_dimension(I: Ideal, limits: Limits | None = None) -> int:
    """Dimension of the fiber over t = 0 (dimension of I + <t>)."""
    t = _param(I)
    return dimension(I + Ideal(I.ring, [t]), limits)


def witness_is_valid(I: Ideal, report: FlatnessReport, limits: Limits | None = None) -> bool:
    """Check a false verdict's witness: it lies in the tested expression and not in I."""
    w = report.witness
    if report.verdict:
        return w is None
    if w is None or I.contains_poly(w):
        return False
    if report.criterion == "flat":
        return I.contains_poly(w * _param(I))
    J = report.test_ideal_used.ideal
    inner = colon(J, I, limits)
    # w*(J:I) ⊆ J
    if not all(J.contains_poly(w * g) for g in inner.generators):
        return False
    if report.criterion == "internally_flat":
        return I.contains_poly(w * _param(I))
    return True
