import pytest

from conelab import (Ideal, PolyRing, TestIdealError, build_test_ideal, colon, dimension,
                     eliminate, height, ideal_equal, intersect, saturate, validate_test_ideal)
from conelab.flatness import is_internally_flat

from conftest import ideal

R = PolyRing(("x", "y", "z", "t"), param="t")
x, y, z, t = R.gens()


def I(*gens):
    return Ideal(R, gens)


def test_intersect():
    assert ideal_equal(intersect(I(x), I(y)), I(x * y))
    A = I(x**2 - y, z * t)
    assert ideal_equal(intersect(A, A), A)
    assert ideal_equal(intersect(I(x**2), I(x)), I(x**2))


def test_intersect_comaximal_inhomogeneous():
    # eliminating without homogenizing ran into heavy coefficient growth here
    A = I(x * z**2 - 5, x**2 * y + y**2 * z + z)
    B = I(3 * x * y**2 + x**2 * z + 2 * z, x**2 * z + 2 * y * z**2 + 2 * y * z)
    assert (A + B).is_unit()
    assert ideal_equal(intersect(A, B), A * B)


def test_colon():
    assert ideal_equal(colon(I(x**2, x * y), I(x)), I(x, y))
    A = I(x * y - z, t**2)
    assert ideal_equal(colon(A, I(R.one())), A)


def test_colon_by_zero_rejected():
    with pytest.raises(ValueError):
        colon(I(x), I())


def test_saturate():
    assert saturate(I(x**2, x * y), x).is_unit()
    A = I(x * y - z)
    assert ideal_equal(saturate(A, R.one()), A)
    assert ideal_equal(saturate(I(t * x), t), I(x))


def test_eliminate():
    assert ideal_equal(eliminate(I(x - t, y - t**2), ["t"]), I(y - x**2))
    A = I(x * y, z)
    assert ideal_equal(eliminate(A, []), A)
    assert eliminate(I(x), ["x"]).is_zero()


def test_dimension():
    S = PolyRing(("x", "y", "z"))
    a, b, c = S.gens()
    assert dimension(Ideal(S, [a * b, c * (c - a)])) == 1
    assert dimension(Ideal(S, [])) == 3
    assert dimension(Ideal(S, [S.one()])) == -1


def test_height_of_cone_ideal(lines3):
    J = ideal(lines3, "I")
    assert J.ring.nvars == 6
    assert height(J) == 4


def test_test_ideal_of_complete_intersection():
    J = validate_test_ideal(I(x, y), I(x, y))
    assert len(J.generators) == 2


def test_test_ideal_of_principal_ideal():
    f = x**2 * y - z
    J = build_test_ideal(I(f))
    assert ideal_equal(J.ideal, I(f))


def test_generated_test_ideal_is_regular_sequence(lines_family):
    target = ideal(lines_family, "I")
    J = build_test_ideal(target, seed=1)
    assert len(J.generators) == height(target) == 4
    for k in range(1, 5):
        assert height(Ideal(target.ring, J.generators[:k])) == k
    assert all(target.contains_poly(g) for g in J.generators)


def test_test_ideal_deterministic_per_seed(lines_family):
    target = ideal(lines_family, "I")
    a = build_test_ideal(target, seed=3)
    b = build_test_ideal(target, seed=3)
    assert a.generators == b.generators


def test_generated_test_ideal_matches_reference_verdict(lines_family):
    target = ideal(lines_family, "I")
    ref = is_internally_flat(target, ideal(lines_family, "J")).verdict
    assert is_internally_flat(target, seed=0).verdict == ref


def test_bad_test_ideals_rejected():
    with pytest.raises(TestIdealError):
        validate_test_ideal(I(x, y), I(x))
    with pytest.raises(TestIdealError):
        validate_test_ideal(I(x, y), I(x, x + x * y))
    with pytest.raises(TestIdealError):
        validate_test_ideal(I(x, y), I(x, z))
