"""A small expression language for motives.

Grammar (whitespace insignificant)::

    expr   := term { "+" term }
    term   := factor { "*" factor }
    factor := atom [ "^" nat ]
    atom   := "1" | "L" | "h1" | "lam" "(" nat ")" | "C"
            | "Sym" "(" nat ")" | "M" | "Mconj" | "(" expr ")"
    nat    := decimal digits

"+" is direct sum, "*" is tensor product and "^" repeated tensor; "^"
binds tightest, then "*", then "+", and the binary operators associate to
the left.  Genus is not part of the language: it is supplied at
evaluation time, so one expression can be swept over a genus range.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .core import (
    MotiveClass,
    NonTateTensor,
    _check_genus,
    direct_sum,
    lambda_h1,
    lefschetz,
    tensor,
    unit,
)
from .formulas import (
    moduli_motive_conjectural,
    moduli_motive_delbano,
    sym_power_curve,
)


class ParseError(ValueError):
    """Syntax error, carrying a 1-based byte offset into the source."""

    def __init__(self, reason: str, position: int):
        super().__init__(f"parse error at byte offset {position}: {reason}")
        self.reason = reason
        self.position = position


def _require_nonnegative(value: int, what: str) -> None:
    if not isinstance(value, int) or isinstance(value, bool) or value < 0:
        raise ValueError(f"{what} must be a nonnegative integer, got {value!r}")


@dataclass(frozen=True)
class Unit:
    pass


@dataclass(frozen=True)
class Lefschetz:
    power: int = 1

    def __post_init__(self):
        _require_nonnegative(self.power, "Lefschetz power")


@dataclass(frozen=True)
class LambdaH1:
    index: int

    def __post_init__(self):
        _require_nonnegative(self.index, "lambda index")


@dataclass(frozen=True)
class Curve:
    pass


@dataclass(frozen=True)
class SymPower:
    n: int

    def __post_init__(self):
        _require_nonnegative(self.n, "symmetric power")


@dataclass(frozen=True)
class ModuliDelBano:
    pass


@dataclass(frozen=True)
class ModuliConjectural:
    pass


@dataclass(frozen=True)
class Sum:
    left: "MotiveExpr"
    right: "MotiveExpr"


@dataclass(frozen=True)
class Product:
    left: "MotiveExpr"
    right: "MotiveExpr"


@dataclass(frozen=True)
class Power:
    base: "MotiveExpr"
    exponent: int

    def __post_init__(self):
        _require_nonnegative(self.exponent, "tensor power")


MotiveExpr = Union[
    Unit, Lefschetz, LambdaH1, Curve, SymPower,
    ModuliDelBano, ModuliConjectural, Sum, Product, Power,
]

_KEYWORDS = ("L", "h1", "lam", "C", "Sym", "M", "Mconj")
_ATOM_DESCRIPTION = "an atom ('1', 'L', 'h1', 'lam(k)', 'C', 'Sym(n)', 'M', 'Mconj' or '(')"


@dataclass(frozen=True)
class _Token:
    kind: str  # NUMBER, NAME, +, *, ^, (, ), EOF
    text: str
    position: int  # 1-based byte offset
    value: int = 0


def _is_ascii_letter(ch: str) -> bool:
    return "a" <= ch <= "z" or "A" <= ch <= "Z"


def _tokenize(source: str) -> list:
    tokens = []
    i = 0
    byte_pos = 1
    n = len(source)
    while i < n:
        ch = source[i]
        start = byte_pos
        if ch.isspace():
            byte_pos += len(ch.encode("utf-8"))
            i += 1
            continue
        if "0" <= ch <= "9":
            j = i
            while j < n and "0" <= source[j] <= "9":
                j += 1
            text = source[i:j]
            tokens.append(_Token("NUMBER", text, start, int(text)))
            byte_pos += j - i
            i = j
            continue
        if _is_ascii_letter(ch):
            j = i
            while j < n and (_is_ascii_letter(source[j]) or "0" <= source[j] <= "9"):
                j += 1
            text = source[i:j]
            if text not in _KEYWORDS:
                raise ParseError(f"unknown name '{text}'", start)
            tokens.append(_Token("NAME", text, start))
            byte_pos += j - i
            i = j
            continue
        if ch in "+*^()":
            tokens.append(_Token(ch, ch, start))
            byte_pos += 1
            i += 1
            continue
        raise ParseError(f"unexpected character {ch!r}", start)
    tokens.append(_Token("EOF", "", byte_pos))
    return tokens


class _Parser:
    def __init__(self, tokens: list):
        self._tokens = tokens
        self._index = 0

    def _peek(self) -> _Token:
        return self._tokens[self._index]

    def _advance(self) -> _Token:
        token = self._tokens[self._index]
        self._index += 1
        return token

    def _expect(self, kind: str, description: str) -> _Token:
        token = self._peek()
        if token.kind != kind:
            raise ParseError(f"expected {description}", token.position)
        return self._advance()

    def expression(self) -> MotiveExpr:
        node = self.term()
        while self._peek().kind == "+":
            self._advance()
            node = Sum(node, self.term())
        return node

    def term(self) -> MotiveExpr:
        node = self.factor()
        while self._peek().kind == "*":
            self._advance()
            node = Product(node, self.factor())
        return node

    def factor(self) -> MotiveExpr:
        node = self.atom()
        if self._peek().kind == "^":
            self._advance()
            exponent = self._expect("NUMBER", "a number after '^'")
            return Power(node, exponent.value)
        return node

    def atom(self) -> MotiveExpr:
        token = self._peek()
        if token.kind == "NUMBER":
            if token.value != 1:
                raise ParseError(f"expected {_ATOM_DESCRIPTION}", token.position)
            self._advance()
            return Unit()
        if token.kind == "NAME":
            self._advance()
            if token.text == "L":
                return Lefschetz(1)
            if token.text == "h1":
                return LambdaH1(1)
            if token.text == "C":
                return Curve()
            if token.text == "M":
                return ModuliDelBano()
            if token.text == "Mconj":
                return ModuliConjectural()
            # lam(k) / Sym(n)
            self._expect("(", f"'(' after '{token.text}'")
            number = self._expect("NUMBER", f"a number inside '{token.text}(...)'")
            self._expect(")", "')'")
            return LambdaH1(number.value) if token.text == "lam" else SymPower(number.value)
        if token.kind == "(":
            self._advance()
            node = self.expression()
            self._expect(")", "')'")
            return node
        raise ParseError(f"expected {_ATOM_DESCRIPTION}", token.position)


def parse(source: str) -> MotiveExpr:
    """Parse a DSL expression; raise ParseError with a byte offset otherwise."""
    parser = _Parser(_tokenize(source))
    node = parser.expression()
    trailing = parser._peek()
    if trailing.kind != "EOF":
        raise ParseError("unexpected trailing input", trailing.position)
    return node


_PLAIN_ATOMS = (Unit, LambdaH1, Curve, SymPower, ModuliDelBano, ModuliConjectural)


def _is_plain_atom(expr: MotiveExpr) -> bool:
    if isinstance(expr, Lefschetz):
        return expr.power == 1
    return isinstance(expr, _PLAIN_ATOMS)


def print_expr(expr: MotiveExpr) -> str:
    """Canonical text with minimal parentheses; reparses to the same tree
    for every tree the grammar denotes."""
    if isinstance(expr, Sum):
        left = print_expr(expr.left)
        right = print_expr(expr.right)
        if isinstance(expr.right, Sum):
            right = f"({right})"
        return f"{left} + {right}"
    if isinstance(expr, Product):
        left = print_expr(expr.left)
        if isinstance(expr.left, Sum):
            left = f"({left})"
        right = print_expr(expr.right)
        if isinstance(expr.right, (Sum, Product)):
            right = f"({right})"
        return f"{left} * {right}"
    if isinstance(expr, Power):
        base = print_expr(expr.base)
        if not _is_plain_atom(expr.base):
            base = f"({base})"
        return f"{base}^{expr.exponent}"
    if isinstance(expr, Unit):
        return "1"
    if isinstance(expr, Lefschetz):
        return "L" if expr.power == 1 else f"L^{expr.power}"
    if isinstance(expr, LambdaH1):
        return "h1" if expr.index == 1 else f"lam({expr.index})"
    if isinstance(expr, Curve):
        return "C"
    if isinstance(expr, SymPower):
        return f"Sym({expr.n})"
    if isinstance(expr, ModuliDelBano):
        return "M"
    if isinstance(expr, ModuliConjectural):
        return "Mconj"
    raise TypeError(f"not a MotiveExpr node: {expr!r}")


def evaluate(expr: MotiveExpr, genus: int) -> MotiveClass:
    """Evaluate a tree at the given genus (g >= 2).

    Sums map to direct sums and products/powers to tensor products; a
    tensor of two lambda-classes raises NonTateTensor naming the printed
    offending subexpression.
    """
    _check_genus(genus)
    return _eval(expr, genus)


def _eval(expr: MotiveExpr, genus: int) -> MotiveClass:
    if isinstance(expr, Unit):
        return unit(genus)
    if isinstance(expr, Lefschetz):
        return lefschetz(genus, expr.power)
    if isinstance(expr, LambdaH1):
        return lambda_h1(genus, expr.index)
    if isinstance(expr, Curve):
        return sym_power_curve(1, genus)
    if isinstance(expr, SymPower):
        return sym_power_curve(expr.n, genus)
    if isinstance(expr, ModuliDelBano):
        return moduli_motive_delbano(genus)
    if isinstance(expr, ModuliConjectural):
        return moduli_motive_conjectural(genus)
    if isinstance(expr, Sum):
        return direct_sum(_eval(expr.left, genus), _eval(expr.right, genus))
    if isinstance(expr, Product):
        left = _eval(expr.left, genus)
        right = _eval(expr.right, genus)
        return _tensor_named(left, right, expr)
    if isinstance(expr, Power):
        base = _eval(expr.base, genus)
        result = unit(genus)
        for _ in range(expr.exponent):
            result = _tensor_named(result, base, expr)
        return result
    raise TypeError(f"not a MotiveExpr node: {expr!r}")


def _tensor_named(left: MotiveClass, right: MotiveClass, expr: MotiveExpr) -> MotiveClass:
    try:
        return tensor(left, right)
    except NonTateTensor as exc:
        raise NonTateTensor(f"{exc.args[0]} in '{print_expr(expr)}'") from exc
