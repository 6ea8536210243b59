"""Surface syntax and canonical serialization for bicomplex functions.

Grammar (whitespace-insensitive)::

    input  := expr ('|' expr)?            -- 'P | M' combines components
    expr   := term (('+' | '-') term)*
    term   := unary (('*' unary) | ('/' INT))*
    unary  := '-' unary | power
    power  := atom ('^' INT)?
    atom   := INT | 'i' | 'j' | 'k' | 'e+' | 'e-' | 'Z'
            | 'a' | 'ac' | 'b' | 'bc'      -- raw idempotent mode only
            | FUNC '(' expr ')' | '(' expr ')'
    FUNC   := 'dag' | 'til' | 'star' | 'rehyp' | 'rec'

Precedence is ``^`` over unary minus over ``*`` and ``/`` over binary
``+``/``-``.  Division is permitted only by nonzero integer literals, and
exponents are nonnegative integers, so every expression denotes a polynomial
function.  In raw idempotent mode the tokens a, ac, b, bc denote the four
idempotent variables placed in both components, which is how componentwise
formulas are entered verbatim.  As input sugar an integer immediately
followed by i, j or k multiplies it (``2i`` is ``2*i``).

The canonical text for a function is ``plus-poly | minus-poly`` with
monomials in ascending lexicographic exponent order; parsing the canonical
text in raw mode restores the function exactly.  The JSON codecs are
bit-exact round trips over the same sorted term lists.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Union

from .bicomplex import Bicomplex, BicomplexError, GaussianRational
from .bicomplex import E_MINUS, E_PLUS, I, J, K
from .bicomplex import _join_terms
from .operators import Operator
from .polyfun import BicomplexFunction, Poly4

__all__ = [
    "ExprSyntaxError",
    "JsonFormatError",
    "parse",
    "parse_point",
    "format_function",
    "format_poly",
    "function_to_json_obj",
    "function_from_json_obj",
    "function_to_json",
    "function_from_json",
    "operator_to_json_obj",
    "operator_from_json_obj",
    "VAR_NAMES",
]

VAR_NAMES = ("a", "ac", "b", "bc")

_UNITS = {"i": I, "j": J, "k": K, "e+": E_PLUS, "e-": E_MINUS}
_FUNCS = ("dag", "til", "star", "rehyp", "rec")
_RAW_VARS = {"a": 0, "ac": 1, "b": 2, "bc": 3}
_WORDS = {"Z"} | set(_UNITS) | set(_FUNCS) | set(_RAW_VARS)


class ExprSyntaxError(BicomplexError):
    """Syntax error carrying the character position it occurred at."""

    def __init__(self, message: str, pos: int):
        super().__init__(f"{message} (at position {pos})")
        self.pos = pos


class JsonFormatError(BicomplexError):
    """Malformed serialized data; the message names the offending path."""


# ---------------------------------------------------------------- tokens

_SYMBOLS = {"+", "-", "*", "/", "^", "(", ")", "|"}


@dataclass(frozen=True)
class _Token:
    kind: str  # 'int', 'name', one of the symbols, or 'eof'
    value: Union[int, str, None]
    pos: int


def _tokenize(text: str) -> list[_Token]:
    tokens: list[_Token] = []
    i, n = 0, len(text)
    while i < n:
        c = text[i]
        if c.isspace():
            i += 1
            continue
        if c.isdigit():
            start = i
            while i < n and text[i].isdigit():
                i += 1
            tokens.append(_Token("int", int(text[start:i]), start))
            if i < n and text[i] in "ijk":  # sugar: 2i means 2*i
                tokens.append(_Token("*", "*", i))
            continue
        if c.isalpha():
            start = i
            while i < n and text[i].isalpha():
                i += 1
            word = text[start:i]
            if word == "e" and i < n and text[i] in "+-":
                word += text[i]
                i += 1
            if word not in _WORDS:
                raise ExprSyntaxError(f"unknown name {word!r}", start)
            tokens.append(_Token("name", word, start))
            continue
        if c in _SYMBOLS:
            tokens.append(_Token(c, c, i))
            i += 1
            continue
        raise ExprSyntaxError(f"unexpected character {c!r}", i)
    tokens.append(_Token("eof", None, n))
    return tokens


# ---------------------------------------------------------------- ast

@dataclass(frozen=True)
class Num:
    value: int


@dataclass(frozen=True)
class UnitLit:
    name: str


@dataclass(frozen=True)
class VarZ:
    pass


@dataclass(frozen=True)
class RawVar:
    index: int


@dataclass(frozen=True)
class Neg:
    operand: object


@dataclass(frozen=True)
class BinOp:
    op: str  # '+', '-', '*'
    left: object
    right: object


@dataclass(frozen=True)
class RatDiv:
    operand: object
    divisor: int


@dataclass(frozen=True)
class PowNat:
    base: object
    exponent: int


@dataclass(frozen=True)
class Call:
    func: str
    arg: object


@dataclass(frozen=True)
class Pair:
    left: object
    right: object


class _Parser:
    def __init__(self, tokens: list[_Token], raw: bool):
        self.tokens = tokens
        self.raw = raw
        self.index = 0

    @property
    def current(self) -> _Token:
        return self.tokens[self.index]

    def advance(self) -> _Token:
        token = self.current
        self.index += 1
        return token

    def expect(self, kind: str) -> _Token:
        if self.current.kind != kind:
            raise ExprSyntaxError(f"expected {kind!r}, found {self.current.kind!r}", self.current.pos)
        return self.advance()

    def parse_input(self):
        left = self.parse_expr()
        if self.current.kind == "|":
            self.advance()
            right = self.parse_expr()
            node = Pair(left, right)
        else:
            node = left
        if self.current.kind != "eof":
            raise ExprSyntaxError(f"unexpected trailing {self.current.kind!r}", self.current.pos)
        return node

    def parse_expr(self):
        node = self.parse_term()
        while self.current.kind in ("+", "-"):
            op = self.advance().kind
            node = BinOp(op, node, self.parse_term())
        return node

    def parse_term(self):
        node = self.parse_unary()
        while self.current.kind in ("*", "/"):
            if self.advance().kind == "*":
                node = BinOp("*", node, self.parse_unary())
            else:
                divisor = self.expect("int")
                if divisor.value == 0:
                    raise ExprSyntaxError("division by zero", divisor.pos)
                node = RatDiv(node, divisor.value)
        return node

    def parse_unary(self):
        if self.current.kind == "-":
            self.advance()
            return Neg(self.parse_unary())
        return self.parse_power()

    def parse_power(self):
        node = self.parse_atom()
        if self.current.kind == "^":
            self.advance()
            exponent = self.expect("int")
            return PowNat(node, exponent.value)
        return node

    def parse_atom(self):
        token = self.current
        if token.kind == "int":
            self.advance()
            return Num(token.value)
        if token.kind == "(":
            self.advance()
            node = self.parse_expr()
            self.expect(")")
            return node
        if token.kind == "name":
            self.advance()
            word = token.value
            if word == "Z":
                return VarZ()
            if word in _UNITS:
                return UnitLit(word)
            if word in _RAW_VARS:
                if not self.raw:
                    raise ExprSyntaxError(
                        f"idempotent variable {word!r} requires raw idempotent mode", token.pos
                    )
                return RawVar(_RAW_VARS[word])
            if word in _FUNCS:
                self.expect("(")
                arg = self.parse_expr()
                self.expect(")")
                return Call(word, arg)
        raise ExprSyntaxError(f"expected an atom, found {token.kind!r}", token.pos)


def _lower(node) -> BicomplexFunction:
    if isinstance(node, Num):
        return BicomplexFunction.constant(node.value)
    if isinstance(node, UnitLit):
        return BicomplexFunction.constant(_UNITS[node.name])
    if isinstance(node, VarZ):
        return BicomplexFunction.variable()
    if isinstance(node, RawVar):
        return BicomplexFunction.from_shared(Poly4.variable(node.index))
    if isinstance(node, Neg):
        return -_lower(node.operand)
    if isinstance(node, BinOp):
        left, right = _lower(node.left), _lower(node.right)
        if node.op == "+":
            return left + right
        if node.op == "-":
            return left - right
        return left * right
    if isinstance(node, RatDiv):
        return _lower(node.operand) / node.divisor
    if isinstance(node, PowNat):
        return _lower(node.base) ** node.exponent
    if isinstance(node, Call):
        arg = _lower(node.arg)
        if node.func == "dag":
            return arg.conjugate("dagger")
        if node.func == "til":
            return arg.conjugate("tilde")
        if node.func == "star":
            return arg.conjugate("star")
        if node.func == "rehyp":
            return arg.hyperbolic_part()
        return arg.real_part()
    if isinstance(node, Pair):
        return BicomplexFunction(_lower(node.left).plus, _lower(node.right).minus)
    raise TypeError(f"unknown AST node {node!r}")


def parse(text: str, raw: bool = False) -> BicomplexFunction:
    """Parse an expression into canonical componentwise form."""
    return _lower(_Parser(_tokenize(text), raw).parse_input())


def parse_point(text: str) -> Bicomplex:
    """Parse a constant expression into a bicomplex value."""
    fn = parse(text, raw=False)
    if not fn.is_constant():
        raise BicomplexError("expected a constant bicomplex value, got a non-constant expression")
    return fn.constant_value()


# ---------------------------------------------------------------- printing

def _coeff_prefix(coeff: GaussianRational, has_monomial: bool) -> str:
    """Render a coefficient, with trailing '*' when a monomial follows."""
    if coeff.im == 0:
        body = str(coeff.re)
        if has_monomial:
            if coeff.re == 1:
                return ""
            if coeff.re == -1:
                return "-"
            return body + "*"
        return body
    if coeff.re == 0:
        if coeff.im == 1:
            body = "i"
        elif coeff.im == -1:
            body = "-i"
        else:
            body = f"{coeff.im}*i"
    else:
        im = coeff.im
        if im == 1:
            im_text = "i"
        elif im == -1:
            im_text = "-i"
        else:
            im_text = f"{im}*i"
        if not im_text.startswith("-"):
            im_text = "+" + im_text
        body = f"({coeff.re}{im_text})"
    return body + "*" if has_monomial else body


def _monomial_text(key) -> str:
    pieces = []
    for var, exponent in enumerate(key):
        if exponent == 1:
            pieces.append(VAR_NAMES[var])
        elif exponent > 1:
            pieces.append(f"{VAR_NAMES[var]}^{exponent}")
    return "*".join(pieces)


def format_poly(poly: Poly4) -> str:
    if poly.is_zero():
        return "0"
    rendered = []
    for key, coeff in poly.sorted_terms():
        monomial = _monomial_text(key)
        rendered.append(_coeff_prefix(coeff, bool(monomial)) + monomial)
    return _join_terms(rendered)


def format_function(fn: BicomplexFunction) -> str:
    return f"{format_poly(fn.plus)} | {format_poly(fn.minus)}"


# ---------------------------------------------------------------- json

def _terms_to_json(poly: Poly4) -> list:
    return [[*key, coeff.to_json()] for key, coeff in poly.sorted_terms()]


def _terms_from_json(data, path: str) -> Poly4:
    if not isinstance(data, list):
        raise JsonFormatError(f"{path}: expected a list of terms")
    terms = {}
    for idx, entry in enumerate(data):
        entry_path = f"{path}[{idx}]"
        if not isinstance(entry, list) or len(entry) != 5:
            raise JsonFormatError(f"{entry_path}: expected [a, b, c, d, coeff]")
        exponents = entry[:4]
        if any((not isinstance(e, int)) or isinstance(e, bool) or e < 0 for e in exponents):
            raise JsonFormatError(f"{entry_path}: exponents must be nonnegative integers")
        try:
            coeff = GaussianRational.from_json(entry[4], f"{entry_path}[4]")
        except BicomplexError as exc:
            raise JsonFormatError(str(exc)) from None
        key = tuple(exponents)
        if key in terms:
            raise JsonFormatError(f"{entry_path}: duplicate monomial {key}")
        if coeff.is_zero():
            raise JsonFormatError(f"{entry_path}: explicit zero coefficient")
        terms[key] = coeff
    return Poly4(terms)


def function_to_json_obj(fn: BicomplexFunction) -> dict:
    return {"plus": _terms_to_json(fn.plus), "minus": _terms_to_json(fn.minus)}


def function_from_json_obj(obj, path: str = "function") -> BicomplexFunction:
    if not isinstance(obj, dict) or set(obj) != {"plus", "minus"}:
        raise JsonFormatError(f"{path}: expected an object with keys 'plus' and 'minus'")
    return BicomplexFunction(
        _terms_from_json(obj["plus"], f"{path}.plus"),
        _terms_from_json(obj["minus"], f"{path}.minus"),
    )


def function_to_json(fn: BicomplexFunction) -> str:
    return json.dumps(function_to_json_obj(fn), separators=(",", ":"))


def function_from_json(text: str) -> BicomplexFunction:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise JsonFormatError(f"function: invalid JSON ({exc})") from None
    return function_from_json_obj(obj)


def operator_to_json_obj(op: Operator) -> dict:
    return {"op_plus": _terms_to_json(op.plus), "op_minus": _terms_to_json(op.minus)}


def operator_from_json_obj(obj, path: str = "operator") -> Operator:
    if not isinstance(obj, dict) or set(obj) != {"op_plus", "op_minus"}:
        raise JsonFormatError(f"{path}: expected an object with keys 'op_plus' and 'op_minus'")
    return Operator(
        _terms_from_json(obj["op_plus"], f"{path}.op_plus"),
        _terms_from_json(obj["op_minus"], f"{path}.op_minus"),
    )
