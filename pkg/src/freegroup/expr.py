"""Parser and evaluator for free-group expressions.

Grammar, loosest binding first::

    expr    := mult (("+" | "-") mult)*
    mult    := conj ("*" conj)*
    conj    := unary ("^" unary)*
    unary   := "-" unary | primary
    primary := WORD | WORD "(" [expr ("," expr)*] ")" | INT [":" INT]
             | "(" expr ")" | "[" expr "," expr "]"

All binary operators are left-associative.  ``WORD`` is a word in canonical
notation (``a^2.b^-3``); a bare name that has a binding refers to the
binding, otherwise it names a generator of the alphabet.  Integers are only
meaningful as an operand of ``*``, except that ``0`` also denotes the
identity.  Built-in functions: ``alpha``, ``abc``, ``rfree``, ``sum`` and
``c``, which joins its arguments into one vector.
"""

from __future__ import annotations

import random as _random
import re
from dataclasses import dataclass
from typing import Dict, List, Mapping, Optional, Sequence, Tuple, Union

from . import vector as _v
from . import words as _w
from .errors import EvaluationError, ParseError
from .random import RandomSpec, random_words
from .textio import DEFAULT_ALPHABET, RESERVED, Alphabet, parse_canonical
from .vector import WordVector
from .words import Word

_NAME = "[^" + re.escape("".join(sorted(RESERVED))) + r"\s]+"
_TERM = _NAME + r"(?:\^[+-]?[0-9]+)?"
_TOKEN = re.compile(
    rf"(?P<ws>\s+)|(?P<word>{_TERM}(?:\.{_TERM})*)|(?P<int>[0-9]+)|(?P<op>[-+*^()\[\],:])"
)
NAME_RE = re.compile(_NAME + r"\Z")

FUNCTIONS = ("alpha", "abc", "rfree", "sum", "c")


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    pos: int


def tokenize(src: str) -> List[Token]:
    out = []
    pos = 0
    while pos < len(src):
        m = _TOKEN.match(src, pos)
        if m is None:
            raise ParseError(f"unexpected character {src[pos]!r}", pos)
        if m.lastgroup != "ws":
            out.append(Token(m.lastgroup, m.group(), pos))
        pos = m.end()
    out.append(Token("end", "", len(src)))
    return out


# syntax tree

@dataclass(frozen=True)
class Lit:
    text: str
    pos: int


@dataclass(frozen=True)
class Ints:
    values: Tuple[int, ...]
    pos: int


@dataclass(frozen=True)
class Neg:
    operand: "Node"
    pos: int


@dataclass(frozen=True)
class BinOp:
    op: str
    left: "Node"
    right: "Node"
    pos: int


@dataclass(frozen=True)
class Bracket:
    left: "Node"
    right: "Node"
    pos: int


@dataclass(frozen=True)
class Call:
    name: str
    args: Tuple["Node", ...]
    pos: int


Node = Union[Lit, Ints, Neg, BinOp, Bracket, Call]


class _Parser:
    def __init__(self, src: str):
        self.tokens = tokenize(src)
        self.i = 0

    @property
    def tok(self) -> Token:
        return self.tokens[self.i]

    def advance(self) -> Token:
        t = self.tokens[self.i]
        self.i += 1
        return t

    def expect(self, text: str) -> Token:
        if self.tok.text != text or self.tok.kind not in ("op",):
            found = self.tok.text or "end of input"
            raise ParseError(f"expected {text!r}, found {found!r}", self.tok.pos)
        return self.advance()

    def parse(self) -> Node:
        node = self.expr()
        if self.tok.kind != "end":
            raise ParseError(f"unexpected {self.tok.text!r}", self.tok.pos)
        return node

    def expr(self) -> Node:
        left = self.mult()
        while self.tok.kind == "op" and self.tok.text in "+-":
            t = self.advance()
            left = BinOp(t.text, left, self.mult(), t.pos)
        return left

    def mult(self) -> Node:
        left = self.conj()
        while self.tok.kind == "op" and self.tok.text == "*":
            t = self.advance()
            left = BinOp("*", left, self.conj(), t.pos)
        return left

    def conj(self) -> Node:
        left = self.unary()
        while self.tok.kind == "op" and self.tok.text == "^":
            t = self.advance()
            left = BinOp("^", left, self.unary(), t.pos)
        return left

    def unary(self) -> Node:
        if self.tok.kind == "op" and self.tok.text == "-":
            t = self.advance()
            if self.tok.kind == "int":
                return self.ints(sign=-1, pos=t.pos)
            return Neg(self.unary(), t.pos)
        return self.primary()

    def ints(self, sign: int, pos: int) -> Ints:
        lo = sign * int(self.advance().text)
        if not (self.tok.kind == "op" and self.tok.text == ":"):
            return Ints((lo,), pos)
        self.advance()
        sign = 1
        if self.tok.kind == "op" and self.tok.text == "-":
            self.advance()
            sign = -1
        if self.tok.kind != "int":
            raise ParseError("expected integer after ':'", self.tok.pos)
        hi = sign * int(self.advance().text)
        step = 1 if hi >= lo else -1
        return Ints(tuple(range(lo, hi + step, step)), pos)

    def primary(self) -> Node:
        t = self.tok
        if t.kind == "word":
            self.advance()
            if self.tok.kind == "op" and self.tok.text == "(" and t.text in FUNCTIONS:
                return self.call(t)
            return Lit(t.text, t.pos)
        if t.kind == "int":
            return self.ints(sign=1, pos=t.pos)
        if t.kind == "op" and t.text == "(":
            self.advance()
            node = self.expr()
            self.expect(")")
            return node
        if t.kind == "op" and t.text == "[":
            self.advance()
            left = self.expr()
            self.expect(",")
            right = self.expr()
            self.expect("]")
            return Bracket(left, right, t.pos)
        found = t.text or "end of input"
        raise ParseError(f"expected an operand, found {found!r}", t.pos)

    def call(self, name: Token) -> Call:
        self.expect("(")
        args = []
        if not (self.tok.kind == "op" and self.tok.text == ")"):
            args.append(self.expr())
            while self.tok.kind == "op" and self.tok.text == ",":
                self.advance()
                args.append(self.expr())
        self.expect(")")
        return Call(name.text, tuple(args), name.pos)


def parse(src: str) -> Node:
    return _Parser(src).parse()


class IntVector(tuple):
    """Integer operand of ``*`` during evaluation."""


Value = Union[WordVector, IntVector]


class Evaluator:
    """Evaluates parsed expressions against bindings and an alphabet.

    ``rfree(...)`` calls draw from one generator seeded with ``seed`` and
    shared by every evaluation on this instance, so successive calls give
    different but reproducible words.
    """

    def __init__(self, bindings: Optional[Mapping[str, Union[Word, Sequence[Word]]]] = None,
                 alphabet: Alphabet = DEFAULT_ALPHABET, seed: int = 0):
        self.alphabet = alphabet
        self.bindings: Dict[str, WordVector] = {}
        self.rng = _random.Random(seed)
        for name, value in (bindings or {}).items():
            self.bind(name, value)

    def bind(self, name: str, value) -> None:
        if not NAME_RE.match(name):
            raise EvaluationError(f"invalid identifier {name!r}")
        if isinstance(value, str):
            value = self.evaluate(value)
        elif isinstance(value, Word):
            value = WordVector([value])
        else:
            value = WordVector(value)
        self.bindings[name] = value

    def evaluate(self, src: str) -> WordVector:
        return self._words(self._eval(parse(src)), 0)

    def _words(self, value: Value, pos: int) -> WordVector:
        if isinstance(value, IntVector):
            if all(n == 0 for n in value):
                return WordVector([Word.identity()] * len(value))
            raise EvaluationError(
                f"integer used as a word at position {pos}; integers may only multiply words"
            )
        return value

    def _eval(self, node: Node) -> Value:
        if isinstance(node, Lit):
            return self._literal(node)
        if isinstance(node, Ints):
            return IntVector(node.values)
        if isinstance(node, Neg):
            v = self._eval(node.operand)
            if isinstance(v, IntVector):
                return IntVector(-n for n in v)
            return -v
        if isinstance(node, Bracket):
            x = self._words(self._eval(node.left), node.left.pos)
            y = self._words(self._eval(node.right), node.right.pos)
            return _v.commutator_vec(x, y)
        if isinstance(node, Call):
            return self._call(node)
        return self._binop(node)

    def _literal(self, node: Lit) -> WordVector:
        text = node.text
        if text in self.bindings:
            return self.bindings[text]
        try:
            return WordVector([parse_canonical(text, self.alphabet)])
        except ParseError as exc:
            if NAME_RE.match(text):
                raise EvaluationError(
                    f"unbound identifier {text!r} at position {node.pos}"
                ) from None
            raise ParseError(exc.message, node.pos + (exc.position or 0)) from None

    def _binop(self, node: BinOp) -> Value:
        left = self._eval(node.left)
        right = self._eval(node.right)
        if node.op == "*":
            if isinstance(left, IntVector) and not isinstance(right, IntVector):
                left, right = right, left
            if isinstance(left, IntVector) or not isinstance(right, IntVector):
                raise EvaluationError(
                    f"'*' at position {node.pos} needs exactly one integer operand"
                )
            return _v.zip_op(_w.repeat, left, right)
        x = self._words(left, node.left.pos)
        y = self._words(right, node.right.pos)
        if node.op == "+":
            return x + y
        if node.op == "-":
            return x - y
        return x ^ y

    def _call(self, node: Call) -> Value:
        args = [self._eval(a) for a in node.args]
        name = node.name

        def ints(k: int) -> IntVector:
            a = args[k]
            if not isinstance(a, IntVector):
                raise EvaluationError(f"{name}() argument {k + 1} must be integers")
            return a

        def scalar(k: int) -> int:
            a = ints(k)
            if len(a) != 1:
                raise EvaluationError(f"{name}() argument {k + 1} must be a single integer")
            return a[0]

        if name in ("alpha", "abc"):
            if len(args) != 1:
                raise EvaluationError(f"{name}() takes one argument")
            fn = _v.alpha if name == "alpha" else _v.abc
            for n in ints(0):
                if n < 1:
                    raise EvaluationError(f"{name}() arguments must be >= 1, got {n}")
            return fn(ints(0))
        if name == "c":
            items = []
            for a, arg in zip(args, node.args):
                items.extend(self._words(a, arg.pos))
            return WordVector(items)
        if name == "sum":
            if len(args) != 1:
                raise EvaluationError("sum() takes one argument")
            return WordVector([_v.word_sum(self._words(args[0], node.args[0].pos))])
        # rfree([count [, syllables]])
        if len(args) > 2:
            raise EvaluationError("rfree() takes at most two arguments")
        count = scalar(0) if args else 7
        m = scalar(1) if len(args) > 1 else None
        spec = RandomSpec(count=count, syllables=m or 5, max_symbol=m or 3)
        return random_words(spec, rng=self.rng)


def eval_expression(src: str, bindings: Optional[Mapping] = None,
                    alphabet: Alphabet = DEFAULT_ALPHABET, seed: int = 0) -> WordVector:
    """Parse and evaluate ``src``; always returns a :class:`WordVector`.

    >>> [str(w) for w in eval_expression("a^2.b^-3.c^5.a^-2 + a^2.b^3.c^4")]
    ['a^2.b^-3.c^5.b^3.c^4']
    """
    return Evaluator(bindings, alphabet, seed).evaluate(src)
