from fractions import Fraction

import pytest

from app.models.precision import PrecisionPolicy
from app.services.identities import CATALOG
from app.utils.errors import ParseError
from app.utils.expression import (
    BinOp,
    Func,
    Neg,
    Num,
    Pi,
    Pow,
    evaluate,
    parse_equation,
    parse_expression,
    parse_value,
    to_text,
)

RHS = "(1/3)*(-1+2*sqrt(7)*cos((1/3)*arctan(3*sqrt(3))))"


def test_parse_tree():
    tree = parse_expression("2*cos(2*pi/7)")
    assert tree == BinOp("*", Num("2"), Func("cos", BinOp("/", BinOp("*", Num("2"), Pi()), Num("7"))))


def test_parse_is_whitespace_insensitive():
    assert parse_expression(" 2 * cos( 2*pi / 7 ) ") == parse_expression("2*cos(2*pi/7)")


def test_evaluate(policy):
    value = evaluate(parse_expression(RHS), policy)
    assert abs(value - policy.ctx.mpf("1.24698")) < 1e-5


def test_unary_minus_binds_tighter_than_power(policy):
    assert parse_expression("-2^2") == Pow(Neg(Num("2")), 2)
    assert evaluate(parse_expression("-2^2"), policy) == 4
    assert evaluate(parse_expression("-(2^2)"), policy) == -4


@pytest.mark.parametrize("text, offset", [("cos(", 4), ("2 $ 3", 2), ("2^x", 2), ("foo(1)", 0), ("1)", 1)])
def test_parse_errors(text, offset):
    with pytest.raises(ParseError) as info:
        parse_expression(text)
    assert info.value.offset == offset
    assert info.value.expected


def test_parse_equation():
    lhs, rhs = parse_equation("1 + 1 == 2")
    assert lhs == BinOp("+", Num("1"), Num("1"))
    assert rhs == Num("2")
    with pytest.raises(ParseError):
        parse_equation("1 + 1")


def test_to_text():
    assert to_text(parse_expression("(1+2)*3")) == "(1 + 2)*3"
    assert to_text(parse_expression("1-(2-3)")) == "1 - (2 - 3)"
    assert to_text(parse_expression("cbrt(-8)")) == "cbrt(-8)"


def test_parse_value():
    policy = PrecisionPolicy(target_digits=30)
    assert parse_value("1/3", policy) == Fraction(1, 3)
    assert parse_value("-3/2", policy) == Fraction(-3, 2)
    assert parse_value("4", policy) == 4 and isinstance(parse_value("4", policy), int)
    assert parse_value("sqrt(4)", policy) == 2
    assert parse_value("cbrt(-27/8)", policy) == Fraction(-3, 2)
    assert parse_value("0.25", policy) == Fraction(1, 4)
    root2 = parse_value("sqrt(2)", policy)
    assert abs(root2 ** 2 - 2) < policy.tolerance


@pytest.mark.parametrize("name", sorted(CATALOG))
def test_catalog_round_trips_through_printer(policy, name):
    for text in (CATALOG[name].lhs, CATALOG[name].rhs):
        tree = parse_expression(text)
        assert parse_expression(to_text(tree)) == tree
        assert evaluate(parse_expression(to_text(tree)), policy) == evaluate(tree, policy)


@pytest.mark.parametrize(
    "text",
    [
        "1",
        "-1",
        "--2",
        "1/3",
        "0.125",
        "pi",
        "-pi^2",
        "(-pi)^2",
        "1-2-3",
        "1-(2-3)",
        "8/4/2",
        "8/(4/2)",
        "2*3+4*5",
        "2*(3+4)*5",
        "(1+2)^3",
        "sqrt(2)^2",
        "cbrt(-27)",
        "cos(2*pi/7)+cos(4*pi/7)+cos(8*pi/7)",
        "sin(pi/6)*arctan(1)",
        "arctan(3*sqrt(3))/3",
        "-(1+14*sqrt(7))/(3*sqrt(2))",
        "cbrt(cos(2*pi/9))+cbrt(cos(4*pi/9))+cbrt(cos(8*pi/9))",
        "1/cbrt(5)^2",
        "-sqrt(3)*-2",
        "3.50",
        "(((7)))",
        "2*-3",
    ],
)
def test_corpus_round_trips_through_printer(text):
    tree = parse_expression(text)
    assert parse_expression(to_text(tree)) == tree


def test_parse_error_offsets_count_bytes():
    # U+00A0 is whitespace of two UTF-8 bytes
    with pytest.raises(ParseError) as info:
        parse_expression("1 +\u00a0)")
    assert info.value.offset == 5
    with pytest.raises(ParseError) as info:
        parse_expression("\u00a0\u00a0$")
    assert info.value.offset == 4
