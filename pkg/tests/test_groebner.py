import pytest

from conelab import (LEX, GREVLEX, Ideal, Limits, PolyRing, ResourceLimitExceeded, buchberger,
                     ideal_contains, ideal_equal)
from conelab.groebner import spoly_terms, reduce_terms

from conftest import ideal

R = PolyRing(("x", "y", "z"), LEX)
x, y, z = R.gens()


def test_linear_generators_are_reduced():
    for order in (LEX, GREVLEX):
        assert buchberger([x, y], order).elements == [y, x]


def test_zero_ideal_has_empty_basis():
    assert buchberger([R.zero()], ring=R).elements == []
    assert Ideal(R, [R.zero()]).is_zero()


def test_twisted_cubic_lex():
    gb = buchberger([x**2 - y, x**3 - z])
    assert set(map(str, gb.elements)) == {"x^2 - y", "x*y - z", "x*z - y^2", "y^3 - z^2"}
    assert all(gb.reduces_to_zero(g) for g in [x**2 - y, x**3 - z])


def test_all_spolys_reduce_to_zero():
    gb = buchberger([x**2 - y, x**3 - z, y * z - x])
    ks = gb._k
    for i in range(len(ks)):
        for j in range(i + 1, len(ks)):
            d, _ = spoly_terms(ks[i], ks[j], gb._packer)
            assert reduce_terms(d, ks, gb._packer) == {}


def test_normal_form():
    gb = buchberger([x, y])
    assert gb.normal_form(x * y + z) == z
    assert buchberger([x**2]).normal_form(x) == x


def test_normal_form_idempotent():
    gb = buchberger([x**2 - y * z, y**2 - x])
    f = x**3 * z + y**4 - 3 * z
    nf = gb.normal_form(f)
    assert gb.normal_form(nf) == nf
    assert gb.reduces_to_zero(f - nf)


def test_contains():
    assert ideal_contains(Ideal.of(x**2, x * y), Ideal.of(x**2))
    assert not ideal_contains(Ideal.of(x**2), Ideal.of(x))


def test_equal():
    assert ideal_equal(Ideal.of(x, y), Ideal.of(x + y, x - y))
    assert not ideal_equal(Ideal.of(x), Ideal.of(x**2))


def test_criteria_do_not_change_the_basis():
    gens = [x**2 * y - z**2, x * y**2 - z, x * z - y**3 + 1]
    ref = buchberger(gens, GREVLEX, product_criterion=False, chain_criterion=False)
    for p in (True, False):
        for c in (True, False):
            got = buchberger(gens, GREVLEX, product_criterion=p, chain_criterion=c)
            assert got.elements == ref.elements


def test_criteria_prune_pairs(lines_family):
    I = ideal(lines_family, "I")
    on = buchberger(I.generators)
    off = buchberger(I.generators, product_criterion=False, chain_criterion=False)
    assert on.elements == off.elements
    assert on.stats.pairs < off.stats.pairs


def test_pair_cap():
    with pytest.raises(ResourceLimitExceeded):
        buchberger([x**2 * y - z**2, x * y**2 - z, x * z - y**3 + 1], GREVLEX,
                   limits=Limits(max_pairs=2))


def test_basis_cap():
    with pytest.raises(ResourceLimitExceeded):
        buchberger([x**2 - y, x**3 - z], limits=Limits(max_basis=2))


def test_unit_ideal():
    assert Ideal.of(x * y - 1, y).is_unit()
    assert Ideal.of(x * y - 1, y).reduced().generators == (R.one(),)
