"""Reader for ``.cone`` session scripts and polynomial expressions.

Grammar::

    script    := ring-decl {decl} {binding} [command]
    ring-decl := "ring" ident {"," ident} ";"
    decl      := "param" ident ";" | "order" ("lex"|"grevlex") ";"
               | "directions" ident {"," ident} ";"
    binding   := "poly" ident "=" poly-expr ";"
               | "ideal" ident "=" poly-expr {"," poly-expr} ";"
    command   := "command" name {word} ";"
    poly-expr := ["+"|"-"] term {("+"|"-") term}
    term      := factor {"*" factor}
    factor    := atom {"^" nat}
    atom      := rational | ident | "(" poly-expr ")"

``#`` starts a comment.  Identifiers in expressions are ring variables or
previously bound polynomials.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from gmpy2 import mpq

from .exactpoly import LEX, GREVLEX, Polynomial, PolyRing


class ParseError(ValueError):
    def __init__(self, msg: str, line: int = 0, col: int = 0):
        super().__init__(f"line {line}, column {col}: {msg}" if line else msg)
        self.line, self.col = line, col


_TOKEN = re.compile(r"""
    (?P<ws>[ \t\r\n]+|\#[^\n]*)
  | (?P<num>\d+)
  | (?P<ident>[A-Za-z_][A-Za-z0-9_]*)
  | (?P<op>\*\*|[-+*/^(),;=])
""", re.VERBOSE)


@dataclass
class Token:
    kind: str
    text: str
    line: int
    col: int


def tokenize(src: str) -> list[Token]:
    out = []
    pos, line, linestart = 0, 1, 0
    while pos < len(src):
        m = _TOKEN.match(src, pos)
        if m is None:
            raise ParseError(f"unexpected character {src[pos]!r}", line, pos - linestart + 1)
        kind = m.lastgroup
        text = m.group()
        if kind != "ws":
            out.append(Token(kind, "^" if text == "**" else text, line, pos - linestart + 1))
        nl = text.count("\n")
        if nl:
            line += nl
            linestart = pos + text.rindex("\n") + 1
        pos = m.end()
    out.append(Token("eof", "", line, pos - linestart + 1))
    return out


class _Parser:
    def __init__(self, tokens: list[Token], ring: PolyRing | None = None, polys=None):
        self.toks = tokens
        self.i = 0
        self.ring = ring
        self.polys: dict[str, Polynomial] = {} if polys is None else polys

    @property
    def tok(self) -> Token:
        return self.toks[self.i]

    def error(self, msg: str, tok: Token | None = None):
        tok = tok or self.tok
        raise ParseError(msg, tok.line, tok.col)

    def next(self) -> Token:
        t = self.toks[self.i]
        self.i += 1
        return t

    def expect(self, kind: str, text: str | None = None) -> Token:
        t = self.tok
        if t.kind != kind or (text is not None and t.text != text):
            want = text or kind
            got = t.text or "end of input"
            self.error(f"expected {want!r}, found {got!r}")
        return self.next()

    def accept(self, text: str) -> bool:
        if self.tok.kind in ("op", "ident") and self.tok.text == text:
            self.i += 1
            return True
        return False

    # -- expressions --
    def expr(self) -> Polynomial:
        if self.tok.kind in ("eof",) or self.tok.text in (";", ",", ")"):
            self.error("expected a polynomial expression")
        neg = False
        if self.tok.text in ("+", "-"):
            neg = self.next().text == "-"
        acc = self.term()
        if neg:
            acc = -acc
        while self.tok.text in ("+", "-"):
            op = self.next().text
            t = self.term()
            acc = acc + t if op == "+" else acc - t
        return acc

    def term(self) -> Polynomial:
        acc = self.factor()
        while self.accept("*"):
            acc = acc * self.factor()
        return acc

    def factor(self) -> Polynomial:
        base = self.atom()
        while self.tok.text == "^":
            self.next()
            t = self.tok
            if t.kind != "num":
                self.error("exponent must be a nonnegative integer")
            self.next()
            base = base ** int(t.text)
        return base

    def atom(self) -> Polynomial:
        t = self.tok
        if t.kind == "num":
            self.next()
            val = mpq(int(t.text))
            if self.tok.text == "/":
                self.next()
                d = self.tok
                if d.kind != "num":
                    self.error("denominator of a rational literal must be an integer")
                self.next()
                if int(d.text) == 0:
                    raise ParseError("zero denominator", d.line, d.col)
                val = mpq(int(t.text), int(d.text))
            return self.ring.const(val)
        if t.kind == "ident":
            self.next()
            if t.text in self.polys:
                return self.polys[t.text]
            if t.text in self.ring.names:
                return self.ring.var(t.text)
            raise ParseError(f"undeclared identifier {t.text!r}", t.line, t.col)
        if t.text == "(":
            self.next()
            e = self.expr()
            self.expect("op", ")")
            return e
        self.error(f"unexpected {t.text or 'end of input'!r}")

    def expr_list(self) -> list[Polynomial]:
        out = [self.expr()]
        while self.accept(","):
            out.append(self.expr())
        return out


@dataclass
class SessionScript:
    ring: PolyRing
    polys: dict[str, Polynomial] = field(default_factory=dict)
    ideals: dict[str, list[Polynomial]] = field(default_factory=dict)
    directions: tuple[str, ...] | None = None
    command: str | None = None
    command_args: list[str] = field(default_factory=list)

    def base_variables(self) -> tuple[str, ...]:
        """Variables that are neither the parameter nor direction variables."""
        skip = set(self.directions or ()) | {self.ring.param}
        return tuple(n for n in self.ring.names if n not in skip)


def _ident_list(p: _Parser) -> list[Token]:
    out = [p.expect("ident")]
    while p.accept(","):
        out.append(p.expect("ident"))
    return out


def parse(source: str) -> SessionScript:
    """Parse a session script."""
    p = _Parser(tokenize(source))
    if p.tok.text != "ring":
        p.error("script must start with a ring declaration")
    p.next()
    names = _ident_list(p)
    p.expect("op", ";")
    seen = set()
    for t in names:
        if t.text in seen:
            raise ParseError(f"duplicate variable {t.text!r}", t.line, t.col)
        seen.add(t.text)
    names = [t.text for t in names]
    param, order, directions = None, GREVLEX, None

    while p.tok.kind == "ident" and p.tok.text in ("param", "order", "directions"):
        kw = p.next()
        if kw.text == "param":
            t = p.expect("ident")
            if t.text not in names:
                raise ParseError(f"parameter {t.text!r} is not a ring variable", t.line, t.col)
            param = t.text
        elif kw.text == "order":
            t = p.expect("ident")
            if t.text not in ("lex", "grevlex"):
                raise ParseError(f"unknown order {t.text!r}", t.line, t.col)
            order = LEX if t.text == "lex" else GREVLEX
        else:
            toks = _ident_list(p)
            for t in toks:
                if t.text not in names:
                    raise ParseError(f"direction {t.text!r} is not a ring variable",
                                     t.line, t.col)
            directions = tuple(t.text for t in toks)
        p.expect("op", ";")

    ring = PolyRing(tuple(names), order, param)
    p.ring = ring
    script = SessionScript(ring, directions=directions)
    if directions is not None:
        base = script.base_variables()
        if len(base) != len(directions):
            p.error(f"{len(directions)} directions declared for {len(base)} base variables")
    p.polys = script.polys

    while p.tok.kind != "eof":
        kw = p.tok
        if kw.text == "poly":
            p.next()
            name = p.expect("ident")
            p.expect("op", "=")
            script.polys[name.text] = p.expr()
        elif kw.text == "ideal":
            p.next()
            name = p.expect("ident")
            p.expect("op", "=")
            script.ideals[name.text] = p.expr_list()
        elif kw.text == "command":
            p.next()
            # tokens written without spaces between them form one word, so
            # "internal-flat" and "--seed" survive tokenization
            words: list[str] = []
            prev = None
            while p.tok.kind != "eof" and p.tok.text != ";":
                tok = p.next()
                if prev and tok.line == prev.line and tok.col == prev.col + len(prev.text):
                    words[-1] += tok.text
                else:
                    words.append(tok.text)
                prev = tok
            if not words:
                p.error("command name expected")
            script.command, script.command_args = words[0], words[1:]
            p.expect("op", ";")
            if p.tok.kind != "eof":
                p.error("the command must be the last statement")
            break
        else:
            p.error(f"expected 'poly', 'ideal' or 'command', found {kw.text or 'end of input'!r}")
        p.expect("op", ";")
    return script


def parse_poly(text: str, ring: PolyRing, bindings: dict | None = None) -> Polynomial:
    """Parse a single polynomial expression in ``ring``."""
    p = _Parser(tokenize(text), ring, dict(bindings or {}))
    out = p.expr()
    if p.tok.kind != "eof":
        p.error(f"trailing input {p.tok.text!r}")
    return out


def parse_poly_list(text: str, ring: PolyRing) -> list[Polynomial]:
    p = _Parser(tokenize(text), ring)
    out = p.expr_list()
    if p.tok.kind != "eof":
        p.error(f"trailing input {p.tok.text!r}")
    return out
