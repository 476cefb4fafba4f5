import random

import pytest
from hypothesis import given

from pgwa.parse import ParseError, parse_poly, parse_scalar
from pgwa.poly import LaurentPoly
from pgwa.scalar import Scalar
from strategies import polys, scalars

z = Scalar.root_of_unity


def test_examples():
    assert parse_poly("h^2 + 1", ("h",)) == LaurentPoly("h", {(2,): 1, (0,): 1})
    assert parse_poly("h^-1 + 3/2 h^3", ("h",)) == LaurentPoly("h", {(-1,): 1, (3,): Scalar(3, 2)})
    assert parse_poly("z4 h^2", ("h",)) == LaurentPoly("h", {(2,): z(4)})
    assert parse_poly("(h-1)^2", ("h",)) == parse_poly("h^2-2h+1", ("h",))
    assert parse_poly("2*z12^5*t h", ("t", "h")) == LaurentPoly(("t", "h"), {(1, 1): z(12, 5) * 2})


def test_scalar():
    assert parse_scalar("-z4") == -z(4)
    assert parse_scalar("3/2*z12^3 + z12") == z(12, 3) * Scalar(3, 2) + z(12)


@pytest.mark.parametrize("text, pos", [
    ("", 0),
    ("h^", 2),
    ("h + ", 4),
    ("q", 0),
    ("(h+1", 4),
    ("1/0", 2),
    ("h $ 1", 2),
    ("h*", 2),
    ("(h+1)^-1", 5),
])
def test_errors_report_position(text, pos):
    with pytest.raises(ParseError) as info:
        parse_poly(text, ("h",))
    assert info.value.position == pos


def test_conductor_limit():
    with pytest.raises(ParseError):
        parse_poly("z2000 h", ("h",))
    assert parse_poly("z2000", ("h",), max_conductor=2000).constant_term() == z(2000)


@given(polys(coeffs=scalars(conductors=(1, 3, 4, 12))))
def test_roundtrip(p):
    assert parse_poly(str(p), ("t", "h")) == p


def test_roundtrip_200_random():
    rng = random.Random(7)
    for _ in range(200):
        terms = {}
        for _ in range(rng.randint(0, 5)):
            n = rng.choice([1, 2, 3, 4, 5, 8, 12])
            c = Scalar(rng.randint(-9, 9), rng.randint(1, 6)) * z(n, rng.randint(0, n - 1))
            terms[(rng.randint(-4, 4), rng.randint(-4, 4))] = c + Scalar(rng.randint(-2, 2))
        p = LaurentPoly(("t", "h"), terms)
        assert parse_poly(str(p)) == p
