"""A small expression language over U(W(2,2))[[t]].

Grammar, loosest binding first::

    sum    := tens (("+" | "-") tens)*
    tens   := prod ("ox" prod)*          # at most three factors
    prod   := unary ("*" unary)*
    unary  := "-" unary | power
    power  := atom ("^" INT)?
    atom   := INT ("/" INT)? | "hb" | NAME "(" args ")" | "(" sum ")"

Names: L, W (one integer), hb_r, hb_f (rational b, integer k),
C, D, U, V (rational b), and the maps Delta0, S0, eps, Delta, S.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .algebra import (
    AlgebraElement,
    Generator,
    TwistConfig,
    hbar,
    hbar_falling,
    hbar_rising,
)
from .hopf import delta0, eps, s0
from .series import TruncatedSeries
from .tensor import TensorElement, tensor
from .twist import build_twist, twisted_antipode, twisted_delta


class ExprError(ValueError):
    """Base class for every error raised while parsing or evaluating."""


class ParseError(ExprError):
    def __init__(self, message: str, position: int, expected=()):
        self.position = position
        self.expected = tuple(expected)
        text = "%s at position %d" % (message, position)
        if self.expected:
            text += " (expected %s)" % ", ".join(self.expected)
        super().__init__(text)


class ArityError(ParseError):
    pass


class EvalError(ExprError):
    pass


class KindMismatch(EvalError):
    pass


class UnknownIdentifier(ParseError):
    pass


# AST -------------------------------------------------------------------------


@dataclass(frozen=True)
class Num:
    value: Fraction

    def __post_init__(self):
        if not isinstance(self.value, Fraction) or self.value < 0:
            raise ValueError("Num holds a nonnegative Fraction; negate with Neg")


@dataclass(frozen=True)
class Gen:
    kind: str
    index: int


@dataclass(frozen=True)
class Hbar:
    pass


@dataclass(frozen=True)
class Fact:
    rising: bool
    b: Fraction
    k: int


@dataclass(frozen=True)
class Twist:
    name: str  # C, D, U or V
    b: Fraction


@dataclass(frozen=True)
class Apply:
    fn: str
    arg: object


@dataclass(frozen=True)
class Neg:
    arg: object


@dataclass(frozen=True)
class Add:
    left: object
    right: object


@dataclass(frozen=True)
class Sub:
    left: object
    right: object


@dataclass(frozen=True)
class Mul:
    left: object
    right: object


@dataclass(frozen=True)
class Ox:
    factors: tuple


@dataclass(frozen=True)
class Pow:
    base: object
    exp: int


MAPS = ("Delta0", "S0", "eps", "Delta", "S")
TWISTS = ("C", "D", "U", "V")
GENERATORS = ("L", "W")
FACTORIALS = ("hb_r", "hb_f")


# tokenizer -------------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(⊗)|(.))")


@dataclass(frozen=True)
class Token:
    kind: str  # INT, NAME, OP, EOF
    text: str
    pos: int


def tokenize(src: str) -> list:
    out = []
    pos = 0
    while pos < len(src):
        m = _TOKEN.match(src, pos)
        if m.group(0).strip() == "":
            break
        start = m.start(m.lastindex)
        if m.group(1):
            out.append(Token("INT", m.group(1), start))
        elif m.group(2):
            name = m.group(2)
            out.append(Token("OP", "ox", start) if name == "ox" else Token("NAME", name, start))
        elif m.group(3):
            out.append(Token("OP", "ox", start))
        else:
            ch = m.group(4)
            if ch not in "+-*^/(),":
                raise ParseError("unexpected character %r" % ch, start)
            out.append(Token("OP", ch, start))
        pos = m.end()
    out.append(Token("EOF", "", len(src)))
    return out


# parser ----------------------------------------------------------------------


class _Parser:
    def __init__(self, src: str):
        self.toks = tokenize(src)
        self.i = 0

    @property
    def tok(self) -> Token:
        return self.toks[self.i]

    def _next(self) -> Token:
        t = self.toks[self.i]
        self.i += 1
        return t

    def _is(self, text) -> bool:
        return self.tok.kind == "OP" and self.tok.text == text

    def _expect(self, text) -> Token:
        if not self._is(text):
            self._fail("unexpected %s" % self._describe(), [repr(text)])
        return self._next()

    def _describe(self) -> str:
        return "end of input" if self.tok.kind == "EOF" else repr(self.tok.text)

    def _fail(self, msg, expected=()):
        raise ParseError(msg, self.tok.pos, expected)

    def parse(self):
        e = self.sum()
        if self.tok.kind != "EOF":
            self._fail("unexpected %s" % self._describe(), ["'+'", "'-'", "'*'", "'ox'", "'^'", "end of input"])
        return e

    def sum(self):
        e = self.tens()
        while self._is("+") or self._is("-"):
            op = self._next().text
            r = self.tens()
            e = Add(e, r) if op == "+" else Sub(e, r)
        return e

    def tens(self):
        start = self.tok.pos
        factors = [self.prod()]
        while self._is("ox"):
            self._next()
            factors.append(self.prod())
        if len(factors) == 1:
            return factors[0]
        if len(factors) > 3:
            raise ArityError("tensor product of %d factors; at most 3 are supported" % len(factors), start)
        return Ox(tuple(factors))

    def prod(self):
        e = self.unary()
        while self._is("*"):
            self._next()
            e = Mul(e, self.unary())
        return e

    def unary(self):
        if self._is("-"):
            self._next()
            return Neg(self.unary())
        return self.power()

    def power(self):
        base = self.atom()
        if self._is("^"):
            self._next()
            if self.tok.kind != "INT":
                self._fail("unexpected %s" % self._describe(), ["nonnegative integer exponent"])
            return Pow(base, int(self._next().text))
        return base

    def atom(self):
        t = self.tok
        if t.kind == "INT":
            return Num(self._rational())
        if self._is("("):
            self._next()
            e = self.sum()
            self._expect(")")
            return e
        if t.kind == "NAME":
            return self._call()
        self._fail("unexpected %s" % self._describe(), ["number", "name", "'('", "'-'"])

    def _rational(self) -> Fraction:
        p = int(self._next().text)
        if self._is("/"):
            self._next()
            if self.tok.kind != "INT":
                self._fail("unexpected %s" % self._describe(), ["denominator"])
            q = int(self._next().text)
            if q == 0:
                raise ParseError("zero denominator", self.toks[self.i - 1].pos)
            return Fraction(p, q)
        return Fraction(p)

    def _signed_rational(self) -> Fraction:
        sign = 1
        if self._is("-"):
            self._next()
            sign = -1
        if self.tok.kind != "INT":
            self._fail("unexpected %s" % self._describe(), ["number"])
        return sign * self._rational()

    def _call(self):
        name_tok = self._next()
        name = name_tok.text
        if name == "hb":
            return Hbar()
        if name not in GENERATORS + FACTORIALS + TWISTS + MAPS:
            raise UnknownIdentifier("unknown identifier %r" % name, name_tok.pos)
        self._expect("(")
        if name in MAPS:
            args = [self.sum()]
            while self._is(","):
                self._next()
                args.append(self.sum())
        else:
            args = [(self.tok.pos, self._signed_rational())]
            while self._is(","):
                self._next()
                args.append((self.tok.pos, self._signed_rational()))
        self._expect(")")
        want = 2 if name in FACTORIALS else 1
        if len(args) != want:
            raise ArityError("%s takes %d argument%s, got %d" % (name, want, "s" if want > 1 else "", len(args)),
                             name_tok.pos)
        if name in MAPS:
            return Apply(name, args[0])
        if name in GENERATORS:
            pos, v = args[0]
            if v.denominator != 1:
                raise ParseError("generator index must be an integer", pos)
            return Gen(name, int(v))
        if name in TWISTS:
            return Twist(name, args[0][1])
        (_, b), (kpos, k) = args
        if k.denominator != 1 or k < 0:
            raise ParseError("factorial length must be a nonnegative integer", kpos)
        return Fact(name == "hb_r", b, int(k))


def parse(src: str):
    return _Parser(src).parse()


# printer ---------------------------------------------------------------------

_P_SUM, _P_TENS, _P_PROD, _P_UNARY, _P_ATOM = 1, 2, 3, 4, 6


def _rat(v: Fraction) -> str:
    return str(v.numerator) if v.denominator == 1 else "%d/%d" % (v.numerator, v.denominator)


def _prec(e) -> int:
    if isinstance(e, (Add, Sub)):
        return _P_SUM
    if isinstance(e, Ox):
        return _P_TENS
    if isinstance(e, Mul):
        return _P_PROD
    if isinstance(e, (Neg, Pow)):
        return _P_UNARY
    return _P_ATOM


def _wrap(e, need: int) -> str:
    s = to_source(e)
    return s if _prec(e) >= need else "(" + s + ")"


def to_source(e) -> str:
    """Canonical text; parse(to_source(e)) == e."""
    if isinstance(e, Num):
        return _rat(e.value)
    if isinstance(e, Gen):
        return "%s(%d)" % (e.kind, e.index)
    if isinstance(e, Hbar):
        return "hb"
    if isinstance(e, Fact):
        return "%s(%s,%d)" % ("hb_r" if e.rising else "hb_f", _rat(e.b), e.k)
    if isinstance(e, Twist):
        return "%s(%s)" % (e.name, _rat(e.b))
    if isinstance(e, Apply):
        return "%s(%s)" % (e.fn, to_source(e.arg))
    if isinstance(e, Neg):
        return "-" + _wrap(e.arg, _P_UNARY)
    if isinstance(e, Add):
        return "%s + %s" % (_wrap(e.left, _P_SUM), _wrap(e.right, _P_TENS))
    if isinstance(e, Sub):
        return "%s - %s" % (_wrap(e.left, _P_SUM), _wrap(e.right, _P_TENS))
    if isinstance(e, Ox):
        return " ox ".join(_wrap(f, _P_PROD) for f in e.factors)
    if isinstance(e, Mul):
        return "%s*%s" % (_wrap(e.left, _P_PROD), _wrap(e.right, _P_UNARY))
    if isinstance(e, Pow):
        return "%s^%d" % (_wrap(e.base, _P_ATOM), e.exp)
    raise TypeError("not an expression node: %r" % (e,))


# evaluation ------------------------------------------------------------------


@dataclass(frozen=True)
class Value:
    """An evaluated expression.

    kind is "scalar", "algebra", "tensor2" or "tensor3"; series values carry
    a TruncatedSeries of that kind in ``data``.
    """

    kind: str
    series: bool
    order: int | None
    data: object

    @property
    def arity(self) -> int:
        return {"scalar": 0, "algebra": 1, "tensor2": 2, "tensor3": 3}[self.kind]

    def describe(self) -> str:
        return ("series of %s to order %d" % (self.kind, self.order)) if self.series else self.kind


def _kind_of(x) -> str:
    if isinstance(x, Fraction):
        return "scalar"
    if isinstance(x, AlgebraElement):
        return "algebra"
    if isinstance(x, TensorElement):
        return "tensor%d" % x.arity
    raise TypeError(type(x).__name__)


def _plain(x) -> Value:
    return Value(_kind_of(x), False, None, x)


def _series(s: TruncatedSeries) -> Value:
    return Value(_kind_of(s[0]), True, s.order, s)


def _lift_scalar(c: Fraction, kind: str):
    if kind == "algebra":
        return AlgebraElement.scalar(c)
    return TensorElement.one(int(kind[-1])).scale(c)


def _promote(a: Value, b: Value, op: str):
    """Bring two operands to one kind (scalars lift) and one series-ness."""
    kind = a.kind
    if a.kind != b.kind:
        if a.kind == "scalar":
            kind = b.kind
        elif b.kind != "scalar":
            raise KindMismatch("cannot %s %s and %s" % (op, a.kind, b.kind))

    def conv(v: Value, order):
        x = v.data
        if v.kind == "scalar" and kind != "scalar":
            x = x.map(lambda c: _lift_scalar(c, kind)) if v.series else _lift_scalar(x, kind)
        if order is not None and not v.series:
            x = TruncatedSeries.constant(x if kind != "scalar" else AlgebraElement.scalar(x), order)
        return x

    order = a.order if a.series else (b.order if b.series else None)
    if kind == "scalar" and order is not None:
        kind = "algebra"
    return kind, order, conv(a, order), conv(b, order)


def _wrap_result(kind, order, x) -> Value:
    return Value(kind, order is not None, order, x)


class _Evaluator:
    def __init__(self, cfg: TwistConfig):
        self.cfg = cfg

    def ev(self, e) -> Value:
        m = getattr(self, "_" + type(e).__name__, None)
        if m is None:
            raise EvalError("cannot evaluate %r" % (e,))
        return m(e)

    def _Num(self, e):
        return _plain(e.value)

    def _Gen(self, e):
        return _plain(AlgebraElement.from_generator(Generator(e.kind, e.index)))

    def _Hbar(self, e):
        return _plain(hbar(self.cfg))

    def _Fact(self, e):
        f = hbar_rising if e.rising else hbar_falling
        return _plain(f(self.cfg, e.b, e.k))

    def _Twist(self, e):
        tw = build_twist(self.cfg, e.b)
        return _series(getattr(tw, e.name))

    def _Neg(self, e):
        v = self.ev(e.arg)
        return Value(v.kind, v.series, v.order, -v.data)

    def _Add(self, e):
        kind, order, x, y = _promote(self.ev(e.left), self.ev(e.right), "add")
        return _wrap_result(kind, order, x + y)

    def _Sub(self, e):
        kind, order, x, y = _promote(self.ev(e.left), self.ev(e.right), "subtract")
        return _wrap_result(kind, order, x - y)

    def _Mul(self, e):
        a, b = self.ev(e.left), self.ev(e.right)
        if not a.series and a.kind == "scalar":
            return Value(b.kind, b.series, b.order, b.data * a.data if b.kind == "scalar" else b.data.scale(a.data))
        if not b.series and b.kind == "scalar":
            return Value(a.kind, a.series, a.order, a.data * b.data if a.kind == "scalar" else a.data.scale(b.data))
        kind, order, x, y = _promote(a, b, "multiply")
        return _wrap_result(kind, order, x * y)

    def _Pow(self, e):
        v = self.ev(e.base)
        if v.kind == "scalar" and not v.series:
            return _plain(v.data ** e.exp)
        if v.series:
            acc = TruncatedSeries.constant(_lift_scalar(Fraction(1), v.kind), v.order)
        else:
            acc = _lift_scalar(Fraction(1), v.kind)
        for _ in range(e.exp):
            acc = acc * v.data
        return Value(v.kind, v.series, v.order, acc)

    def _Ox(self, e):
        vals = [self.ev(f) for f in e.factors]
        for v in vals:
            if v.kind not in ("scalar", "algebra"):
                raise KindMismatch("cannot tensor %s with further factors" % v.kind)
        orders = {v.order for v in vals if v.series}
        if len(orders) > 1:
            raise KindMismatch("tensor factors have different truncation orders")
        order = orders.pop() if orders else None

        def as_alg(v):
            x = v.data
            if v.kind == "scalar":
                x = x.map(AlgebraElement.scalar) if v.series else AlgebraElement.scalar(x)
            return x

        parts = [as_alg(v) for v in vals]
        kind = "tensor%d" % len(parts)
        if order is None:
            return _plain(tensor(*parts))
        series = [p if isinstance(p, TruncatedSeries) else TruncatedSeries.constant(p, order) for p in parts]
        coeffs = [TensorElement.zero(len(parts)) for _ in range(order + 1)]
        self._convolve(series, 0, 0, [], coeffs, order)
        return Value(kind, True, order, TruncatedSeries(coeffs, order))

    def _convolve(self, series, idx, deg, chosen, coeffs, order):
        if idx == len(series):
            coeffs[deg] = coeffs[deg] + tensor(*chosen)
            return
        for k in range(order + 1 - deg):
            c = series[idx][k]
            if c:
                self._convolve(series, idx + 1, deg + k, chosen + [c], coeffs, order)

    def _Apply(self, e):
        v = self.ev(e.arg)
        if v.kind == "scalar":
            x = v.data.map(AlgebraElement.scalar) if v.series else AlgebraElement.scalar(v.data)
            v = Value("algebra", v.series, v.order, x)
        if v.kind != "algebra":
            raise KindMismatch("%s takes an algebra-valued argument, got %s" % (e.fn, v.kind))
        x = v.data
        if e.fn == "Delta":
            return _series(twisted_delta(self.cfg, x))
        if e.fn == "S":
            return _series(twisted_antipode(self.cfg, x))
        if e.fn == "eps":
            if v.series:
                return _series(x.map(lambda a: AlgebraElement.scalar(eps(a))))
            return _plain(eps(x))
        f = delta0 if e.fn == "Delta0" else s0
        return _series(x.map(f)) if v.series else _plain(f(x))


def evaluate(e, cfg: TwistConfig) -> Value:
    if isinstance(e, str):
        e = parse(e)
    return _Evaluator(cfg).ev(e)
