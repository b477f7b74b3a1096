"""
Expression language for identity checks.

    expr   := term (('+'|'-') term)*
    term   := factor (('*'|'/') factor)*
    factor := base ('^' integer)?
    base   := number | 'pi' | func '(' expr ')' | '(' expr ')' | '-' base

Functions are sqrt, cbrt, cos, sin and arctan. '^' takes a literal integer
exponent only, so fractional powers always go through sqrt/cbrt and keep
their real-branch meaning. Note that '-' binds tighter than '^': "-x^2" is (-x)^2.
"""

import re
from dataclasses import dataclass
from fractions import Fraction
from math import isqrt
from typing import Iterator, List, NamedTuple, Optional, Tuple, Union

from app.models.precision import PrecisionPolicy
from app.services.precision import exact_cbrt, real_cbrt
from app.utils.errors import EvaluationDomainError, ParseError

FUNCTIONS = ("sqrt", "cbrt", "cos", "sin", "arctan")
BASE_STARTS = ("number", "pi", "(", "-") + FUNCTIONS


@dataclass(frozen=True)
class Num:
    text: str


@dataclass(frozen=True)
class Pi:
    pass


@dataclass(frozen=True)
class Func:
    name: str
    arg: "Expression"


@dataclass(frozen=True)
class Neg:
    arg: "Expression"


@dataclass(frozen=True)
class BinOp:
    op: str
    left: "Expression"
    right: "Expression"


@dataclass(frozen=True)
class Pow:
    base: "Expression"
    exponent: int


Expression = Union[Num, Pi, Func, Neg, BinOp, Pow]


class Token(NamedTuple):
    kind: str  # number, name, op, end
    text: str
    offset: int


_TOKEN = re.compile(r"\s*(?:(\d+(?:\.\d*)?|\.\d+)|([A-Za-z_]+)|(==|[-+*/^()]))")


def _byte_offset(text: str, index: int) -> int:
    return len(text[:index].encode("utf-8"))


def tokenize(text: str) -> Iterator[Token]:
    """Tokens of text; offsets count UTF-8 bytes"""
    pos = 0
    while True:
        match = _TOKEN.match(text, pos)
        if match is None:
            rest = text[pos:]
            if not rest.strip():
                yield Token("end", "", _byte_offset(text, len(text)))
                return
            offset = pos + len(rest) - len(rest.lstrip())
            raise ParseError(_byte_offset(text, offset), BASE_STARTS + ("+", "-", "*", "/", "^", ")"), text[offset])
        number, name, op = match.groups()
        offset = _byte_offset(text, match.start(match.lastindex))
        if number:
            yield Token("number", number, offset)
        elif name:
            yield Token("name", name, offset)
        else:
            yield Token("op", op, offset)
        pos = match.end()


class _Parser:
    def __init__(self, text: str):
        self.tokens: List[Token] = list(tokenize(text))
        self.index = 0

    @property
    def token(self) -> Token:
        return self.tokens[self.index]

    def advance(self) -> Token:
        token = self.token
        self.index += 1
        return token

    def fail(self, expected) -> ParseError:
        token = self.token
        return ParseError(token.offset, expected, token.text or None)

    def expect(self, text: str) -> Token:
        if self.token.kind == "op" and self.token.text == text:
            return self.advance()
        raise self.fail((text,))

    def at_op(self, *ops: str) -> bool:
        return self.token.kind == "op" and self.token.text in ops

    def expr(self) -> Expression:
        node = self.term()
        while self.at_op("+", "-"):
            op = self.advance().text
            node = BinOp(op, node, self.term())
        return node

    def term(self) -> Expression:
        node = self.factor()
        while self.at_op("*", "/"):
            op = self.advance().text
            node = BinOp(op, node, self.factor())
        return node

    def factor(self) -> Expression:
        node = self.base()
        if self.at_op("^"):
            self.advance()
            token = self.token
            if token.kind != "number" or not token.text.isdigit():
                raise self.fail(("integer",))
            self.advance()
            node = Pow(node, int(token.text))
        return node

    def base(self) -> Expression:
        token = self.token
        if token.kind == "number":
            self.advance()
            return Num(token.text)
        if token.kind == "name":
            if token.text == "pi":
                self.advance()
                return Pi()
            if token.text in FUNCTIONS:
                self.advance()
                self.expect("(")
                arg = self.expr()
                self.expect(")")
                return Func(token.text, arg)
            raise self.fail(BASE_STARTS)
        if self.at_op("("):
            self.advance()
            node = self.expr()
            self.expect(")")
            return node
        if self.at_op("-"):
            self.advance()
            return Neg(self.base())
        raise self.fail(BASE_STARTS)

    def finish(self, node: Expression, allowed: Tuple[str, ...] = ()) -> Expression:
        if self.token.kind != "end":
            raise self.fail(("+", "-", "*", "/", "^", "end of input") + allowed)
        return node


def parse_expression(text: str) -> Expression:
    parser = _Parser(text)
    return parser.finish(parser.expr())


def parse_equation(text: str) -> Tuple[Expression, Expression]:
    """Split '<lhs> == <rhs>' and parse both sides"""
    parser = _Parser(text)
    lhs = parser.expr()
    if not parser.at_op("=="):
        raise parser.fail(("==", "+", "-", "*", "/", "^"))
    parser.advance()
    rhs = parser.expr()
    return lhs, parser.finish(rhs)


# print levels
SUM, PRODUCT, FACTOR, BASE = 1, 2, 3, 4


def _level(node: Expression) -> int:
    if isinstance(node, BinOp):
        return SUM if node.op in "+-" else PRODUCT
    if isinstance(node, Pow):
        return FACTOR
    return BASE


def to_text(node: Expression, required: int = SUM) -> str:
    if isinstance(node, Num):
        text = node.text
    elif isinstance(node, Pi):
        text = "pi"
    elif isinstance(node, Func):
        text = f"{node.name}({to_text(node.arg)})"
    elif isinstance(node, Neg):
        text = "-" + to_text(node.arg, BASE)
    elif isinstance(node, Pow):
        text = f"{to_text(node.base, BASE)}^{node.exponent}"
    elif node.op in "+-":
        text = f"{to_text(node.left, SUM)} {node.op} {to_text(node.right, PRODUCT)}"
    else:
        text = f"{to_text(node.left, PRODUCT)}{node.op}{to_text(node.right, FACTOR)}"
    if _level(node) < required:
        return f"({text})"
    return text


def evaluate(node: Expression, policy: PrecisionPolicy):
    ctx = policy.ctx
    if isinstance(node, Num):
        return policy.high(Fraction(node.text))
    if isinstance(node, Pi):
        return +ctx.pi
    if isinstance(node, Neg):
        return -evaluate(node.arg, policy)
    if isinstance(node, Pow):
        return evaluate(node.base, policy) ** node.exponent
    if isinstance(node, Func):
        arg = evaluate(node.arg, policy)
        if node.name == "sqrt":
            if arg < 0:
                raise EvaluationDomainError(f"sqrt of a negative value in {to_text(node)}")
            return ctx.sqrt(arg)
        if node.name == "cbrt":
            return real_cbrt(arg, policy)
        return {"cos": ctx.cos, "sin": ctx.sin, "arctan": ctx.atan}[node.name](arg)

    left = evaluate(node.left, policy)
    right = evaluate(node.right, policy)
    if node.op == "+":
        return left + right
    if node.op == "-":
        return left - right
    if node.op == "*":
        return left * right
    if right == 0:
        raise EvaluationDomainError(f"division by zero in {to_text(node)}")
    return left / right


def evaluate_exact(node: Expression) -> Optional[Fraction]:
    """Rational value of the tree, or None when it involves pi or an irrational root"""
    if isinstance(node, Num):
        return Fraction(node.text)
    if isinstance(node, Pi):
        return None
    if isinstance(node, Neg):
        value = evaluate_exact(node.arg)
        return None if value is None else -value
    if isinstance(node, Pow):
        value = evaluate_exact(node.base)
        return None if value is None else value ** node.exponent
    if isinstance(node, Func):
        value = evaluate_exact(node.arg)
        if value is None:
            return None
        if node.name == "cbrt":
            root = exact_cbrt(value)
            return None if root is None else Fraction(root)
        if node.name == "sqrt":
            if value < 0:
                raise EvaluationDomainError(f"sqrt of a negative value in {to_text(node)}")
            num, den = isqrt(value.numerator), isqrt(value.denominator)
            if num * num == value.numerator and den * den == value.denominator:
                return Fraction(num, den)
            return None
        return Fraction(0) if value == 0 and node.name in ("sin", "arctan") else None

    left = evaluate_exact(node.left)
    right = evaluate_exact(node.right)
    if left is None or right is None:
        return None
    if node.op == "+":
        return left + right
    if node.op == "-":
        return left - right
    if node.op == "*":
        return left * right
    if right == 0:
        raise EvaluationDomainError(f"division by zero in {to_text(node)}")
    return left / right


def parse_value(text: str, policy: PrecisionPolicy):
    """Numeric argument: an exact int/Fraction when rational, else an mpf"""
    node = parse_expression(text)
    value = evaluate_exact(node)
    if value is not None:
        return value.numerator if value.denominator == 1 else value
    return evaluate(node, policy)
