"""A small language for q-series expressions.

Grammar::

    expr     := term (("+"|"-") term)*
    term     := factor (("*"|"/") factor)*
    factor   := ("-" factor) | atom ("^" sint)?
    atom     := uint | qpow | call | "(" expr ")"
    qpow     := "q" ("^" uint)?
    call     := name "(" (arg ("," arg)*)? ")"
    arg      := expr | monomial | "inf"
    monomial := ("-")? "q" ("^" uint)?
    name     := "phi"|"psi"|"f"|"E"|"poch"|"v0"|"H"|"ext"|"sub"
    sint     := ("-")? uint

``^`` binds tighter than unary minus, so ``-q^2`` is ``-(q^2)``.  A ``q``
literal takes its own exponent first, so ``q^1^2`` is ``(q^1)^2 = q^2``.

Builtins::

    phi(+-q^k)      psi(q^k)        f(+-q^a, +-q^b)     E(k) = (q^k;q^k)_oo
    poch(s, r, step, n|inf) = (s q^r; q^step)_n         v0() = sum v0(n) q^n
    H(e)  even part in place       ext(e, p, r) = sum e[pn+r] q^n
    sub(e, k)  q -> q^k
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .dissect import extract, huffing
from .series import ZZ, Ring, Series
from .theta import Monomial, check_memory, euler_product, pochhammer, theta_f, theta_phi, theta_psi, v0_series


class ParseError(ValueError):
    """Syntax, name or arity error; ``offset`` is the byte position in the input."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} at offset {offset}")
        self.message = message
        self.offset = offset


class EvalError(ValueError):
    pass


# ---------------------------------------------------------------------------
# AST
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Int:
    value: int


@dataclass(frozen=True)
class QPow:
    k: int


@dataclass(frozen=True)
class Mono:
    """``+-q^k`` appearing as a theta argument."""

    sign: int
    k: int


@dataclass(frozen=True)
class Inf:
    pass


@dataclass(frozen=True)
class Neg:
    arg: object


@dataclass(frozen=True)
class BinOp:
    op: str  # one of + - * /
    left: object
    right: object


@dataclass(frozen=True)
class Pow:
    base: object
    exp: int


@dataclass(frozen=True)
class Call:
    name: str
    args: tuple


# name -> argument kinds: "mono" (+-q^k), "pos_mono" (+q^k), "expr", "int" (>= 1),
# "nat" (>= 0), "sign" (+-1), "count" (>= 0 or inf)
BUILTINS = {
    "phi": ("mono",),
    "psi": ("pos_mono",),
    "f": ("mono", "mono"),
    "E": ("int",),
    "poch": ("sign", "int", "int", "count"),
    "v0": (),
    "H": ("expr",),
    "ext": ("expr", "int", "nat"),
    "sub": ("expr", "int"),
}


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------


class _Parser:
    def __init__(self, text: str):
        try:
            self.data = text.encode("ascii")
        except UnicodeEncodeError as exc:
            raise ParseError("non-ASCII input", len(text[: exc.start].encode())) from None
        self.pos = 0

    # -- lexing helpers ------------------------------------------------------

    def _skip(self):
        while self.pos < len(self.data) and self.data[self.pos] in b" \t\r\n":
            self.pos += 1

    def peek(self) -> str:
        self._skip()
        return chr(self.data[self.pos]) if self.pos < len(self.data) else ""

    def eat(self, ch: str) -> bool:
        if self.peek() == ch:
            self.pos += 1
            return True
        return False

    def expect(self, ch: str):
        if not self.eat(ch):
            got = self.peek() or "end of input"
            raise ParseError(f"expected {ch!r}, found {got!r}", self.pos)

    def uint(self) -> int:
        self._skip()
        start = self.pos
        while self.pos < len(self.data) and chr(self.data[self.pos]).isdigit():
            self.pos += 1
        if start == self.pos:
            raise ParseError("expected an unsigned integer", start)
        return int(self.data[start : self.pos])

    def sint(self) -> int:
        neg = self.eat("-")
        v = self.uint()
        return -v if neg else v

    def word(self) -> tuple[str, int]:
        self._skip()
        start = self.pos
        while self.pos < len(self.data) and (chr(self.data[self.pos]).isalnum() or self.data[self.pos] == ord("_")):
            self.pos += 1
        return self.data[start : self.pos].decode(), start

    # -- grammar ----------------------------------------------------------------

    def parse(self):
        if not self.data.strip():
            raise ParseError("empty expression", 0)
        node = self.expr()
        self._skip()
        if self.pos != len(self.data):
            raise ParseError(f"unexpected {chr(self.data[self.pos])!r}", self.pos)
        return node

    def expr(self):
        node = self.term()
        while self.peek() in ("+", "-"):
            op = self.peek()
            self.pos += 1
            node = BinOp(op, node, self.term())
        return node

    def term(self):
        node = self.factor()
        while self.peek() in ("*", "/"):
            op = self.peek()
            self.pos += 1
            node = BinOp(op, node, self.factor())
        return node

    def factor(self):
        if self.eat("-"):
            return Neg(self.factor())
        node = self.atom()
        if self.eat("^"):
            node = Pow(node, self.sint())
        return node

    def atom(self):
        ch = self.peek()
        if not ch:
            raise ParseError("unexpected end of input", self.pos)
        if ch.isdigit():
            return Int(self.uint())
        if ch == "(":
            self.pos += 1
            node = self.expr()
            self.expect(")")
            return node
        if ch.isalpha():
            name, start = self.word()
            if name == "q":
                return QPow(self._qexp())
            if name == "inf":
                raise ParseError("'inf' is only allowed as a poch() argument", start)
            if name not in BUILTINS:
                raise ParseError(f"unknown function {name!r}", start)
            return self.call(name, start)
        raise ParseError(f"unexpected {ch!r}", self.pos)

    def _qexp(self) -> int:
        # q's own exponent; a following "^" is handled as a power by factor()
        save = self.pos
        if self.eat("^"):
            self._skip()
            if self.pos < len(self.data) and chr(self.data[self.pos]).isdigit():
                return self.uint()
            self.pos = save
        return 1

    def call(self, name: str, start: int):
        kinds = BUILTINS[name]
        self.expect("(")
        args = []
        if not self.eat(")"):
            while True:
                args.append(self.arg(kinds[len(args)] if len(args) < len(kinds) else "expr"))
                if self.eat(")"):
                    break
                self.expect(",")
        if len(args) != len(kinds):
            raise ParseError(f"{name}() takes {len(kinds)} argument(s), got {len(args)}", start)
        return Call(name, tuple(args))

    def arg(self, kind: str):
        self._skip()
        start = self.pos
        if kind in ("mono", "pos_mono"):
            sign = -1 if self.eat("-") else 1
            word, wpos = self.word()
            if word != "q":
                raise ParseError("expected a monomial +-q^k", start)
            k = self._qexp()
            if self.peek() not in (",", ")"):
                raise ParseError("theta arguments must be monomials +-q^k", self.pos)
            if kind == "pos_mono" and sign < 0:
                raise ParseError("psi() takes +q^k only", start)
            return Mono(sign, k)
        if kind == "count":
            save = self.pos
            word, _ = self.word()
            if word == "inf":
                return Inf()
            self.pos = save
        node = self.expr()
        if kind in ("int", "nat", "sign", "count"):
            val = _const_int(node)
            if val is None:
                raise ParseError("expected an integer literal", start)
            if kind == "sign" and val not in (1, -1):
                raise ParseError("sign must be 1 or -1", start)
            if kind == "int" and val < 1:
                raise ParseError("expected a positive integer", start)
            if kind in ("nat", "count") and val < 0:
                raise ParseError("expected a nonnegative integer", start)
            return Int(val)
        return node


def _const_int(node):
    if isinstance(node, Int):
        return node.value
    if isinstance(node, Neg) and isinstance(node.arg, Int):
        return -node.arg.value
    return None


def parse(text: str):
    return _Parser(text).parse()


# ---------------------------------------------------------------------------
# printer
# ---------------------------------------------------------------------------

_PREC = {"+": 1, "-": 1, "*": 2, "/": 2}


def to_text(node) -> str:
    """Render an AST; ``parse(to_text(ast)) == ast``."""
    return _show(node, 0)


def _show(node, ctx: int) -> str:
    if isinstance(node, Int):
        return str(node.value)
    if isinstance(node, QPow):
        return f"q^{node.k}"
    if isinstance(node, Mono):
        return f"{'-' if node.sign < 0 else ''}q^{node.k}"
    if isinstance(node, Inf):
        return "inf"
    if isinstance(node, Call):
        return f"{node.name}({', '.join(_show_arg(a) for a in node.args)})"
    if isinstance(node, Pow):
        return f"{_show(node.base, 4)}^{node.exp}"
    if isinstance(node, Neg):
        s = f"-{_show(node.arg, 3)}"
        return f"({s})" if ctx > 3 else s
    if isinstance(node, BinOp):
        p = _PREC[node.op]
        s = f"{_show(node.left, p)} {node.op} {_show(node.right, p + 1)}"
        return f"({s})" if ctx > p else s
    raise TypeError(f"not an expression node: {node!r}")


def _show_arg(a) -> str:
    if isinstance(a, Int) and a.value < 0:
        return str(a.value)
    return _show(a, 0)


# ---------------------------------------------------------------------------
# evaluator
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class EvalContext:
    ring: Ring = ZZ
    order: int = 20

    def __post_init__(self):
        if self.order < 1:
            raise ValueError("order must be >= 1")


def evaluate(node, ctx: EvalContext | None = None, *, ring: Ring = ZZ, order: int = 20) -> Series:
    if isinstance(node, str):
        node = parse(node)
    ctx = ctx or EvalContext(ring, order)
    # a few live intermediates of Python ints per coefficient
    check_memory(4 * ctx.order, 32, "expression")
    return _eval(node, ctx.ring, ctx.order)


def _eval(node, ring: Ring, n: int) -> Series:
    if isinstance(node, Int):
        return Series.constant(ring, node.value, n)
    if isinstance(node, QPow):
        return Series.monomial(ring, node.k, n)
    if isinstance(node, Neg):
        return -_eval(node.arg, ring, n)
    if isinstance(node, BinOp):
        a, b = _eval(node.left, ring, n), _eval(node.right, ring, n)
        if node.op == "+":
            return a + b
        if node.op == "-":
            return a - b
        if node.op == "*":
            return a * b
        return a / b
    if isinstance(node, Pow):
        return _eval(node.base, ring, n) ** node.exp
    if isinstance(node, Call):
        return _call(node, ring, n)
    raise EvalError(f"cannot evaluate {node!r}")


def _call(node: Call, ring: Ring, n: int) -> Series:
    name, args = node.name, node.args
    if name == "phi":
        m = args[0]
        return theta_phi(m.k, n, m.sign, ring)
    if name == "psi":
        return theta_psi(args[0].k, n, ring)
    if name == "f":
        a, b = args
        return theta_f(Monomial(a.sign, a.k), Monomial(b.sign, b.k), n, ring)
    if name == "E":
        return euler_product(args[0].value, n, ring)
    if name == "poch":
        s, r, step, cnt = args
        count = math.inf if isinstance(cnt, Inf) else cnt.value
        # (s q^r; q^step)_n = prod (1 - s q^(r + step i))
        return pochhammer(s.value, r.value, step.value, count, n, ring)
    if name == "v0":
        return v0_series(n, ring).series()
    if name == "H":
        return huffing(_eval(args[0], ring, n))
    if name == "ext":
        e, p, r = args
        inner = p.value * (n - 1) + r.value + 1
        return extract(_eval(e, ring, inner), p.value, r.value)
    if name == "sub":
        e, k = args
        inner = -(-n // k.value)
        s = _eval(e, ring, inner)
        out = [ring.zero] * n
        out[:: k.value] = s.coeffs[: (n - 1) // k.value + 1]
        return Series._raw(ring, out)
    raise EvalError(f"unknown builtin {name!r}")
