"""Recursive-descent parser shared by field elements and polynomials.

Grammar (juxtaposition is not a product)::

    expr   := ['+'|'-'] term (('+'|'-') term)*
    term   := power ('*' power)*
    power  := atom ('^' INT)?
    atom   := INT | NAME | '(' expr ')' | '-' atom

The parser is parametrised by an *algebra* object supplying ``const``,
``name``, ``add``, ``sub``, ``mul``, ``neg`` and ``pow``.
"""

import re

from .errors import ParseError

_TOKEN = re.compile(r"(\d+)|([A-Za-z_][A-Za-z0-9_]*)|([-+*^()])")
_SPACE = re.compile(r"\s*")


def tokenize(text):
    tokens = []
    pos = _SPACE.match(text, 0).end()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", pos)
        if m.group(1) is not None:
            tokens.append(("int", m.group(1), pos))
        elif m.group(2) is not None:
            tokens.append(("name", m.group(2), pos))
        else:
            tokens.append((m.group(3), m.group(3), pos))
        pos = _SPACE.match(text, m.end()).end()
    tokens.append(("eof", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text, algebra):
        self.tokens = tokenize(text)
        self.i = 0
        self.alg = algebra

    def peek(self):
        return self.tokens[self.i]

    def take(self, kind=None):
        tok = self.tokens[self.i]
        if kind is not None and tok[0] != kind:
            what = tok[1] or "end of input"
            raise ParseError(f"expected {kind!r}, found {what!r}", tok[2])
        self.i += 1
        return tok

    def expr(self):
        alg = self.alg
        tok = self.peek()
        if tok[0] in ("+", "-"):
            self.take()
            value = self.term()
            if tok[0] == "-":
                value = alg.neg(value)
        else:
            value = self.term()
        while self.peek()[0] in ("+", "-"):
            op = self.take()[0]
            rhs = self.term()
            value = alg.add(value, rhs) if op == "+" else alg.sub(value, rhs)
        return value

    def term(self):
        value = self.power()
        while self.peek()[0] == "*":
            self.take()
            value = self.alg.mul(value, self.power())
        return value

    def power(self):
        value = self.atom()
        if self.peek()[0] == "^":
            self.take()
            exp = self.take("int")
            value = self.alg.pow(value, int(exp[1]))
        return value

    def atom(self):
        tok = self.peek()
        kind = tok[0]
        if kind == "int":
            self.take()
            return self.alg.const(int(tok[1]))
        if kind == "name":
            self.take()
            return self.alg.name(tok[1], tok[2])
        if kind == "(":
            self.take()
            value = self.expr()
            self.take(")")
            return value
        if kind == "-":
            self.take()
            return self.alg.neg(self.atom())
        what = tok[1] or "end of input"
        raise ParseError(f"unexpected {what!r}", tok[2])


def parse(text, algebra):
    parser = _Parser(text, algebra)
    if parser.peek()[0] == "eof":
        raise ParseError("empty expression", 0)
    value = parser.expr()
    tok = parser.peek()
    if tok[0] != "eof":
        if tok[0] in ("name", "int", "("):
            raise ParseError("juxtaposition is not a product; use '*'", tok[2])
        raise ParseError(f"unexpected {tok[1]!r}", tok[2])
    return value
