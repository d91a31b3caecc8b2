"""
Expression grammar for polynomials and h-identities.

    expr        := ['+'|'-'] term (('+'|'-') term)*
    term        := coefficient ['*' factor ('*' factor)*] | factor ('*' factor)*
    coefficient := integer ['/' integer]
    factor      := atom ['^' integer]
    atom        := var | '(' expr ')'          (right-hand sides use H(var) instead of var)
    identity    := 'h' '(' expr ')' '=' expr

Juxtaposition is rejected: '*' is mandatory between factors.
"""

from fractions import Fraction
from functools import lru_cache

import pyparsing as pp

from njordan.errors import ParseError
from njordan.freealg.poly import FreePoly, Mode, scalar_mul
from njordan.freealg.variables import var_id

RHS_HEAD = "H"


def _build_expr(mode: Mode, head: str | None) -> pp.ParserElement:
    star = pp.Suppress("*")
    sign = pp.one_of("+ -")

    integer = pp.Word(pp.nums).set_parse_action(lambda toks: int(toks[0]))

    def to_fraction(s, loc, toks):
        if len(toks) == 2 and toks[1] == 0:
            raise ParseError("Zero denominator", position=loc)
        return Fraction(toks[0], toks[1]) if len(toks) == 2 else Fraction(toks[0])

    coefficient = (integer + pp.Optional(pp.Suppress("/") + integer)).set_parse_action(to_fraction)

    def to_variable(s, loc, toks):
        name = toks[0]
        try:
            vid = var_id(name)
        except ParseError as exc:
            raise type(exc)(exc.detail, position=loc) from None
        return FreePoly.variable(vid, mode)

    name = pp.Word(pp.alphas, pp.alphanums)
    if head is None:
        symbol = name.copy().set_parse_action(to_variable)
    else:
        symbol = (pp.Suppress(pp.Keyword(head)) + pp.Suppress("(") + name + pp.Suppress(")")).set_parse_action(to_variable)

    expr = pp.Forward()
    atom = symbol | (pp.Suppress("(") + expr + pp.Suppress(")"))

    def to_power(toks):
        return toks[0] ** toks[1] if len(toks) == 2 else toks[0]

    factor = (atom + pp.Optional(pp.Suppress("^") + integer)).set_parse_action(to_power)
    product = factor + pp.ZeroOrMore(star + factor)

    def to_term(toks):
        scale = Fraction(1)
        result = FreePoly.one(mode)
        for tok in toks:
            if isinstance(tok, Fraction):
                scale *= tok
            else:
                result = result * tok
        return scalar_mul(scale, result)

    term = ((coefficient + pp.Optional(star + product)) | product).set_parse_action(to_term)

    def to_sum(toks):
        total = FreePoly.zero(mode)
        op = "+"
        for tok in toks:
            if isinstance(tok, str):
                op = tok
                continue
            total = total + tok if op == "+" else total - tok
            op = "+"
        return total

    expr <<= (pp.Optional(sign) + term + pp.ZeroOrMore(sign + term)).set_parse_action(to_sum)
    return expr


@lru_cache(maxsize=None)
def _expr_grammar(mode: Mode, head: str | None) -> pp.ParserElement:
    return _build_expr(mode, head)


@lru_cache(maxsize=None)
def _identity_grammar(mode: Mode) -> pp.ParserElement:
    lhs = _build_expr(mode, None)
    rhs = _build_expr(Mode.COMMUTATIVE, RHS_HEAD)
    return (
        pp.Suppress(pp.Keyword("h")) + pp.Suppress("(") + lhs + pp.Suppress(")")
        + pp.Suppress("=") + rhs
    )


def _run(grammar: pp.ParserElement, text: str):
    try:
        return grammar.parse_string(text, parse_all=True)
    except pp.ParseBaseException as exc:
        raise ParseError(f"Syntax error: {exc.msg}", position=exc.loc) from None


def parse_expr(text: str, mode: Mode | str = Mode.NONCOMMUTATIVE) -> FreePoly:
    return _run(_expr_grammar(Mode(mode), None), text)[0]


def parse_rhs(text: str) -> FreePoly:
    return _run(_expr_grammar(Mode.COMMUTATIVE, RHS_HEAD), text)[0]


def parse_identity_parts(text: str, mode: Mode | str = Mode.NONCOMMUTATIVE) -> tuple[FreePoly, FreePoly]:
    result = _run(_identity_grammar(Mode(mode)), text)
    return result[0], result[1]
