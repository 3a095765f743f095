import pytest

from conelab import (DegenerateFamilyError, PolyRing, coalescence_check, s0_specializes,
                     s0_tangent_star)

R = PolyRing(("x", "y", "t"), param="t")
x, y, t = R.gens()


def terms(c):
    return [(w, str(g)) for w, g in c.terms]


def test_s0_squarefree():
    f = x * y - t
    assert terms(s0_tangent_star(f)) == [(1, str(f))]


def test_s0_double_line():
    assert terms(s0_tangent_star(x**2 * y)) == [(4, "x"), (1, "y")]


def test_s0_reduced_weights_sum_to_degree():
    f = x * y * (x + y - t)
    c = s0_tangent_star(f)
    assert sum(w * g.degree_in(["x", "y"]) for w, g in c.terms) == 3


@pytest.mark.parametrize("f, verdict, criterion, cert", [
    (x * y - t, True, None, None),
    (x**2 - t**2, False, 1, "x"),
    (x * (x - t), False, 1, "x"),
    (x**2 * y, True, None, None),
    ((x - t)**2 * (x + t), False, 2, "x"),
])
def test_coalescence(f, verdict, criterion, cert):
    r = coalescence_check(f)
    assert r.verdict is verdict
    assert r.failing_criterion == criterion
    assert (None if r.certificate is None else str(r.certificate)) == cert


def test_coalescing_family_classes_differ():
    r = s0_specializes(x**2 - t**2)
    assert not r.verdict
    assert terms(r.family) == [(1, "x^2 - t^2")]
    assert terms(r.fiber) == [(4, "x")]
    assert not r.family.same_as(r.fiber)


def test_constant_family_classes_agree():
    r = s0_specializes(x**2 * y)
    assert r.verdict and r.family.same_as(r.fiber)


def test_smooth_family_classes_match():
    r = s0_specializes(x * y - t)
    assert r.verdict
    assert terms(r.fiber) == [(1, "x*y")]


def test_degenerate_family():
    with pytest.raises(DegenerateFamilyError):
        coalescence_check(t * x - 1)
    with pytest.raises(DegenerateFamilyError):
        coalescence_check(t * x**2 + x)


def test_needs_parameter():
    S = PolyRing(("x", "y"))
    with pytest.raises(ValueError):
        coalescence_check(S("x*y"))
