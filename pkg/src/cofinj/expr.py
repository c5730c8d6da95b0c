"""Expression grammar for naming elements in text.

    expr    := term ("*" term)*
    term    := "inv(" expr ")" | atom | "(" expr ")"
    atom    := "id" | "a" | "b" | "e(" nat ")" | "ray(" nat ")"
             | "cn(" nat "," nat ")" | literal
    literal := "[" (pair ("," pair)*)? "|" nat ".." sign nat "]"
    pair    := nat ">" nat        sign := "+" | "-"

"*" composes left to right and whitespace is insignificant everywhere.
``parse_expression`` raises :class:`ParseError` with the byte offset of
the first offending character; literals are validated as they are read,
so a syntactically fine but invalid literal raises the element errors.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .algebra import (
    SHIFT_DOWN,
    SHIFT_UP,
    cn_element,
    compose,
    invert,
    make_idempotent,
    ray_idempotent,
)
from .core import Element, IDENTITY, element
from .errors import BadArguments, ParseError


@dataclass(frozen=True)
class Lit:
    value: Element


@dataclass(frozen=True)
class Gen:
    name: str
    args: tuple[int, ...] = ()


@dataclass(frozen=True)
class Product:
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Inverse:
    inner: "Expr"


Expr = Union[Lit, Gen, Product, Inverse]


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, message: str) -> ParseError:
        return ParseError(f"{message} at offset {self.pos}", self.pos)

    def skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch: str) -> None:
        self.skip_ws()
        if self.peek() != ch:
            raise self.error(f"expected {ch!r}")
        self.pos += 1

    def nat(self) -> int:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            raise self.error("expected a number")
        return int(self.text[start:self.pos])

    def word(self) -> str:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isalpha():
            self.pos += 1
        if self.pos == start:
            raise self.error("expected a name")
        return self.text[start:self.pos]

    def expression(self) -> Expr:
        node = self.term()
        while True:
            self.skip_ws()
            if self.peek() == "*":
                self.pos += 1
                node = Product(node, self.term())
            else:
                return node

    def term(self) -> Expr:
        self.skip_ws()
        ch = self.peek()
        if ch == "(":
            self.pos += 1
            node = self.expression()
            self.expect(")")
            return node
        if ch == "[":
            return self.literal()
        name = self.word()
        if name == "inv":
            self.expect("(")
            node = self.expression()
            self.expect(")")
            return Inverse(node)
        if name in ("id", "a", "b"):
            return Gen(name)
        if name in ("e", "ray"):
            self.expect("(")
            n = self.nat()
            self.expect(")")
            return Gen(name, (n,))
        if name == "cn":
            self.expect("(")
            i = self.nat()
            self.expect(",")
            j = self.nat()
            self.expect(")")
            return Gen(name, (i, j))
        self.pos -= len(name)
        raise self.error(f"unknown name {name!r}")

    def literal(self) -> Expr:
        self.expect("[")
        pairs = []
        self.skip_ws()
        if self.peek() != "|":
            while True:
                x = self.nat()
                self.expect(">")
                y = self.nat()
                pairs.append((x, y))
                self.skip_ws()
                if self.peek() == ",":
                    self.pos += 1
                else:
                    break
        self.expect("|")
        tail_start = self.nat()
        self.expect(".")
        self.expect(".")
        self.skip_ws()
        sign = self.peek()
        if sign not in ("+", "-"):
            raise self.error("expected a sign '+' or '-'")
        self.pos += 1
        magnitude = self.nat()
        self.expect("]")
        shift = magnitude if sign == "+" else -magnitude
        return Lit(element(tuple(pairs), tail_start, shift))


def parse_expression(text: str) -> Expr:
    """Parse the whole string as one expression."""
    parser = _Parser(text)
    node = parser.expression()
    parser.skip_ws()
    if parser.pos != len(text):
        raise parser.error("trailing input")
    return node


def evaluate(node: Expr) -> Element:
    """Evaluate an expression tree to a canonical element."""
    if isinstance(node, Lit):
        return node.value
    if isinstance(node, Gen):
        if node.name == "id":
            return IDENTITY
        if node.name == "a":
            return SHIFT_UP
        if node.name == "b":
            return SHIFT_DOWN
        if node.name == "e":
            return make_idempotent({node.args[0]})
        if node.name == "ray":
            return ray_idempotent(node.args[0])
        if node.name == "cn":
            return cn_element(*node.args)
        raise BadArguments(f"unknown generator {node.name!r}")
    if isinstance(node, Product):
        return compose(evaluate(node.left), evaluate(node.right))
    return invert(evaluate(node.inner))


def parse_element(text: str) -> Element:
    """Parse and evaluate in one step."""
    return evaluate(parse_expression(text))


def render(e: Element, mode: str = "compact") -> str:
    """Literal text for an element; parse_element(render(e)) == e.

    Compact form example: "[1>1 | 3..+0]"; the shift sign is always
    written.  Mode "json" gives the interchange document instead.
    """
    if mode == "json":
        import json

        return json.dumps(e.to_json_dict())
    if mode != "compact":
        raise BadArguments(f"unknown render mode {mode!r}")
    pairs = ", ".join(f"{x}>{y}" for x, y in e.front)
    sign = "+" if e.shift >= 0 else "-"
    return f"[{pairs} | {e.tail_start}..{sign}{abs(e.shift)}]"
