"""Textual grammar for exact rational functions.

Accepts integers, + - * / ^, parentheses, one main variable name and any
declared parameter names.  print -> parse is the identity on canonical
forms (tested), since parsing just evaluates the expression tree with
exact RatFun arithmetic.
"""

from __future__ import annotations

from fractions import Fraction

from .field import FieldElem
from .poly import Poly, RatFun


class ParseError(ValueError):
    pass


def tokenize(text: str):
    toks = []
    i = 0
    while i < len(text):
        c = text[i]
        if c.isspace():
            i += 1
        elif c.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            toks.append(("int", int(text[i:j])))
            i = j
        elif c.isalpha() or c == "_":
            j = i
            while j < len(text) and (text[j].isalnum() or text[j] == "_"):
                j += 1
            toks.append(("name", text[i:j]))
            i = j
        elif c in "+-*/^()":
            toks.append((c, c))
            i += 1
        else:
            raise ParseError("unexpected character %r" % c)
    toks.append(("end", None))
    return toks


class _Parser:
    def __init__(self, toks, var, params):
        self.toks = toks
        self.pos = 0
        self.var = var
        self.params = tuple(params)

    def peek(self):
        return self.toks[self.pos][0]

    def next(self):
        t = self.toks[self.pos]
        self.pos += 1
        return t

    def expect(self, kind):
        t = self.next()
        if t[0] != kind:
            raise ParseError("expected %s, got %r" % (kind, t[1]))
        return t

    def parse(self) -> RatFun:
        v = self.expr()
        self.expect("end")
        return v

    def expr(self):
        v = self.term()
        while self.peek() in "+-":
            op = self.next()[0]
            w = self.term()
            v = v + w if op == "+" else v - w
        return v

    def term(self):
        v = self.factor()
        while self.peek() in "*/":
            op = self.next()[0]
            w = self.factor()
            v = v * w if op == "*" else v / w
        return v

    def factor(self):
        sign = 1
        while self.peek() in "+-":
            if self.next()[0] == "-":
                sign = -sign
        v = self.atom()
        if self.peek() == "^":
            self.next()
            neg = False
            if self.peek() == "-":
                self.next()
                neg = True
            k = self.expect("int")[1]
            v = v ** (-k if neg else k)
        return v if sign == 1 else -v

    def atom(self):
        kind, val = self.next()
        if kind == "int":
            return RatFun.const(Fraction(val), self.var, self.params)
        if kind == "name":
            if val in self.params:
                return RatFun.const(
                    FieldElem.parameter(val, self.params), self.var, self.params)
            if val == self.var:
                return RatFun.gen(self.var, self.params)
            raise ParseError("unknown name %r (variable is %r, parameters %s)"
                             % (val, self.var, list(self.params)))
        if kind == "(":
            v = self.expr()
            self.expect(")")
            return v
        raise ParseError("unexpected token %r" % val)


def parse_ratfun(text: str, var="t", params=()) -> RatFun:
    return _Parser(tokenize(text), var, params).parse()


def print_ratfun(f: RatFun) -> str:
    return str(f)
