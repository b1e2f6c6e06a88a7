"""A small expression language for two-leg tensors.

Grammar (EBNF, shipped in docs/dsl.md):

    expr   := term (('+' | '-') term)*
    term   := factor ('*' factor | '/' factor)*
    factor := primary ('(x)' primary)*
    primary:= INT | SYMBOL | VAR | '(' expr ')'

SYMBOL is one of e, f, h (generators) and t (the invariant tensor); VAR is
l or m.  '(x)' is the tensor-product operator.  Division is only legal by
scalar expressions whose value factors over the denominator-atom family;
anything else raises AtomEscape.  Rational constants are written 3/2 (the
division rule evaluates them exactly).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from cybelab.atoms import AtomEscape
from cybelab.poly import MPoly
from cybelab.ratfunc import RatFn, ratfn
from cybelab.sl2 import Sl2Vec, Tensor2, casimir


class DslSyntaxError(ValueError):
    def __init__(self, message, position):
        super().__init__(f"{message} (column {position + 1})")
        self.position = position


@dataclass(frozen=True)
class DslExpr:
    """AST node: op in {num, sym, var, add, sub, mul, div, tensor}."""

    op: str
    args: tuple

    def __repr__(self):
        return f"DslExpr({pretty(self)})"


_TOKEN = re.compile(r"\s*(?:(\(x\))|(\d+)|([eftlmh])|([()+\-*/]))")


def _tokenize(text: str):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == m.start():
            if text[pos:].strip() == "":
                break
            raise DslSyntaxError(f"unexpected character {text[pos]!r}", pos)
        if m.group(1):
            tokens.append(("TENSOR", "(x)", m.start(1)))
        elif m.group(2):
            tokens.append(("INT", m.group(2), m.start(2)))
        elif m.group(3):
            tokens.append(("NAME", m.group(3), m.start(3)))
        else:
            tokens.append((m.group(4), m.group(4), m.start(4)))
        pos = m.end()
    tokens.append(("EOF", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, tokens):
        self.tokens = tokens
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self, kind=None):
        tok = self.tokens[self.i]
        if kind is not None and tok[0] != kind:
            raise DslSyntaxError(f"expected {kind}, found {tok[1]!r}", tok[2])
        self.i += 1
        return tok

    def parse(self) -> DslExpr:
        node = self.expr()
        tok = self.peek()
        if tok[0] != "EOF":
            raise DslSyntaxError(f"trailing input {tok[1]!r}", tok[2])
        return node

    def expr(self) -> DslExpr:
        node = self.term()
        while self.peek()[0] in ("+", "-"):
            op = self.take()[0]
            rhs = self.term()
            node = DslExpr("add" if op == "+" else "sub", (node, rhs))
        return node

    def term(self) -> DslExpr:
        node = self.factor()
        while self.peek()[0] in ("*", "/"):
            op = self.take()[0]
            rhs = self.factor()
            node = DslExpr("mul" if op == "*" else "div", (node, rhs))
        return node

    def factor(self) -> DslExpr:
        node = self.primary()
        while self.peek()[0] == "TENSOR":
            self.take()
            rhs = self.primary()
            node = DslExpr("tensor", (node, rhs))
        return node

    def primary(self) -> DslExpr:
        tok = self.peek()
        if tok[0] == "INT":
            self.take()
            return DslExpr("num", (Fraction(int(tok[1])),))
        if tok[0] == "NAME":
            self.take()
            if tok[1] in ("l", "m"):
                return DslExpr("var", (tok[1],))
            return DslExpr("sym", (tok[1],))
        if tok[0] == "(":
            self.take()
            node = self.expr()
            self.take(")")
            return node
        raise DslSyntaxError(f"expected a value, found {tok[1]!r}", tok[2])


def parse_expr(text: str) -> DslExpr:
    """Parse; raises DslSyntaxError with a column position."""
    return _Parser(_tokenize(text)).parse()


# -- evaluation ---------------------------------------------------------------


class DslTypeError(ValueError):
    pass


def _eval(node: DslExpr):
    op = node.op
    if op == "num":
        return ("scalar", ratfn(node.args[0]))
    if op == "var":
        return ("scalar", ratfn(MPoly.var(node.args[0])))
    if op == "sym":
        name = node.args[0]
        if name == "t":
            return ("tensor2", casimir().map_coeffs(ratfn))
        return ("vec", Sl2Vec({name: RatFn.one()}))
    a_kind, a = _eval(node.args[0])
    if op == "tensor":
        b_kind, b = _eval(node.args[1])
        if a_kind == "vec" and b_kind == "vec":
            out = Tensor2()
            for x, cx in a.comps.items():
                for y, cy in b.comps.items():
                    out = out + Tensor2({(x, y): cx * cy})
            return ("tensor2", out)
        raise DslTypeError("(x) needs generator-valued operands")
    b_kind, b = _eval(node.args[1])
    if op in ("add", "sub"):
        if a_kind != b_kind:
            raise DslTypeError(f"cannot {op} {a_kind} and {b_kind}")
        return (a_kind, a + b if op == "add" else a - b)
    if op == "mul":
        if a_kind == "scalar" and b_kind == "scalar":
            return ("scalar", a * b)
        if a_kind == "scalar":
            return (b_kind, b.scale(a))
        if b_kind == "scalar":
            return (a_kind, a.scale(b))
        raise DslTypeError(f"cannot multiply {a_kind} by {b_kind}")
    if op == "div":
        if b_kind != "scalar":
            raise DslTypeError("division only by scalars")
        inv = b.inverse()  # AtomEscape when not atom-factored
        if a_kind == "scalar":
            return ("scalar", a * inv)
        return (a_kind, a.scale(inv))
    raise ValueError(f"unknown node {op}")


def eval_tensor(node: DslExpr) -> Tensor2:
    """Evaluate to a two-leg tensor over RatFn(l, m)."""
    kind, val = _eval(node)
    if kind != "tensor2":
        raise DslTypeError(f"expression is {kind}-valued, expected a tensor")
    return val


def eval_text(text: str) -> Tensor2:
    return eval_tensor(parse_expr(text))


# -- printing -----------------------------------------------------------------


_PREC = {"add": 1, "sub": 1, "mul": 2, "div": 2, "tensor": 3,
         "num": 4, "sym": 4, "var": 4}


def pretty(node: DslExpr) -> str:
    """Canonical print; parse(pretty(parse(s))) == parse(s)."""
    op = node.op
    if op == "num":
        return str(node.args[0])
    if op in ("sym", "var"):
        return node.args[0]
    a, b = node.args
    sep = {"add": " + ", "sub": " - ", "mul": "*", "div": "/",
           "tensor": "(x)"}[op]
    left = pretty(a)
    right = pretty(b)
    if _PREC[a.op] < _PREC[op]:
        left = f"({left})"
    # right operand needs parens at equal precedence for -, /, and (x)
    if _PREC[b.op] < _PREC[op] or (_PREC[b.op] == _PREC[op]
                                   and op in ("sub", "div", "tensor")):
        right = f"({right})"
    return f"{left}{sep}{right}"


CATALOG_EXPRESSIONS = {
    "r1": "t/(l-m)",
    "r2_plus": "(l+m)/(l-m)*t + 2*(e(x)f + f(x)e)",
    "r2_minus": "(l+m)/(l-m)*t + 2*(e(x)f - f(x)e)",
    "r3": "l*m/(l-m)*t + 2*l*e(x)f - 2*m*f(x)e",
    "r1_stolin_const": "t/(l-m) + 2*(h(x)e - e(x)h)",
    "r1_stolin_lin": "t/(l-m) + 2*(m*h(x)e - l*e(x)h)",
    "r3_stolin_const": "l*m*t/(l-m) + 2*(l*e(x)f + m*f(x)e) + 2*(h(x)e - e(x)h)",
    "r3_stolin_lin": "l*m*t/(l-m) + 2*(l*e(x)f + m*f(x)e) + 2*(m*h(x)e - l*e(x)h)",
}
