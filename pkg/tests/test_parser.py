import pytest

from conelab import Ideal, ideal_equal, intersect
from conelab.parser import ParseError, parse, parse_poly_list, tokenize


def test_family_binding():
    s = parse("ring x,y,z,t; param t; ideal I = x*y, z*(z - t*x);")
    assert s.ring.param == "t"
    assert len(s.ideals["I"]) == 2
    assert str(s.ideals["I"][1]) == "-x*z*t + z^2" or s.ideals["I"][1] == s.ring("z^2 - t*x*z")


def test_expansion():
    s = parse("ring x, y; poly f = (x + y)^2;")
    assert s.polys["f"] == s.ring("x^2 + 2*x*y + y^2")


def test_power_spellings_agree():
    s = parse("ring x, y; poly f = (x - y)**3; poly g = (x - y)^3;")
    assert s.polys["f"] == s.polys["g"]


def test_bound_polys_usable_in_later_bindings():
    s = parse("ring x, y; poly f = x - y; ideal I = f^2, x*f;")
    x, y = s.ring.gens()
    assert s.ideals["I"] == [(x - y) ** 2, x * (x - y)]


def test_rationals():
    s = parse("ring x; poly f = 3/6*x - 1/2;")
    assert str(s.polys["f"]) == "1/2*x - 1/2"


def test_directions_and_order():
    s = parse("ring x, a, t; param t; order lex; directions a;")
    assert s.directions == ("a",)
    assert s.base_variables() == ("x",)


def test_command_statement():
    s = parse("ring x, t; param t; poly f = x^2 - t^2; command coalesce --poly f;")
    assert s.command == "coalesce"
    assert s.command_args == ["--poly", "f"]


@pytest.mark.parametrize("src, line, col", [
    ("ring x, y;\nideal I = ;", 2, 11),
    ("ring x;\npoly f = x + q;", 2, 14),
    ("ring x;\npoly f = x^y;", 2, 12),
    ("ring x;\npoly f = 1/0;", 2, 12),
    ("ring x;\npoly f = x $ 2;", 2, 12),
    ("ring x;\npoly f = (x + 1;", 2, 16),
])
def test_errors_carry_positions(src, line, col):
    with pytest.raises(ParseError) as err:
        parse(src)
    assert (err.value.line, err.value.col) == (line, col)


def test_missing_ring():
    with pytest.raises(ParseError):
        parse("poly f = x;")


def test_second_ring_rejected():
    with pytest.raises(ParseError):
        parse("ring x; ring y;")


def test_round_trip_of_computed_ideal():
    s = parse("ring x, y, z; ideal A = x*y - z, y^2; ideal B = x - z^2;")
    A, B = Ideal(s.ring, s.ideals["A"]), Ideal(s.ring, s.ideals["B"])
    meet = intersect(A, B).reduced()
    text = ", ".join(str(g) for g in meet.generators)
    again = Ideal(s.ring, parse_poly_list(text, s.ring))
    assert ideal_equal(meet, again)


def test_tokens_track_lines():
    toks = tokenize("ring x;\n  poly")
    assert (toks[-2].line, toks[-2].col) == (2, 3)
