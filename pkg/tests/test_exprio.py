"""Fixture-expression grammar: parsing, canonical printing, round trips."""
import pytest
from hypothesis import given, settings

from conftest import rationalfn_st
from ncres.exprio import ExprError, parse_rationalfn, print_rationalfn
from ncres.rational import RationalFn


def test_basic_forms():
    assert parse_rationalfn("0") == RationalFn.zero()
    assert parse_rationalfn("xi^2") == RationalFn.xi(2)
    assert parse_rationalfn("1/(xi-i)") == RationalFn.pole("upper", 1)
    assert parse_rationalfn("1/(xi+i)^3") == RationalFn.pole("lower", 3)


def test_mixed_expression():
    f = parse_rationalfn("(3*xi^2 - 8*i*xi - 5)/(4*(xi-i)^4*(xi+i)^2)")
    g = parse_rationalfn("3*xi^2/(4*(xi-i)^4*(xi+i)^2)") \
        - parse_rationalfn("(8*i*xi+5)/(4*(xi-i)^4*(xi+i)^2)")
    assert f == g


def test_whitespace_and_unary():
    assert parse_rationalfn(" - xi ") == -RationalFn.xi()


def test_pole_away_from_i_rejected():
    with pytest.raises(ExprError, match="pole away"):
        parse_rationalfn("1/(xi-2)")


def test_h_in_denominator_rejected():
    with pytest.raises(ExprError, match="denominator"):
        parse_rationalfn("1/h")


def test_division_by_zero_rejected():
    with pytest.raises(ExprError):
        parse_rationalfn("1/(xi-xi)")


def test_bad_token():
    with pytest.raises(ExprError):
        parse_rationalfn("sin(xi)")


def test_negative_exponent_rejected():
    with pytest.raises(ExprError):
        parse_rationalfn("(xi-i)^-1")


@pytest.mark.parametrize("text", [
    "1/(1+xi^2)",
    "xi/(1+xi^2)^2",
    "h/(xi-i) + xi^2 - i*h^2",
    "(1/2 - 3/4*i)*h^2/(xi+i)^4",
    "((4-1)*xi^2+(-12-6+2)*i*xi-5)/(4*(xi-i)^4*(xi+i)^2)",
])
def test_print_parse_roundtrip_fixtures(text):
    f = parse_rationalfn(text)
    assert parse_rationalfn(print_rationalfn(f)) == f


@given(rationalfn_st)
@settings(max_examples=300, deadline=None)
def test_print_parse_roundtrip_random(f):
    assert parse_rationalfn(print_rationalfn(f)) == f


def test_printer_is_canonical():
    a = parse_rationalfn("1/(1+xi^2)")
    b = parse_rationalfn("1/((xi-i)*(xi+i))")
    assert print_rationalfn(a) == print_rationalfn(b)
