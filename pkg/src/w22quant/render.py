"""Output of evaluated values as text, JSON and LaTeX.

The LaTeX emitter looks for the shape ``u ⊗ c t^j (1 - X t)^q m`` in each
left tensor slot so that coproducts print the way they are usually written
by hand; anything it cannot factor is printed coefficient by coefficient.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .algebra import (
    AlgebraElement,
    TwistConfig,
    as_scalar,
    element_from_json,
    element_to_json,
    format_element,
    word_exponents,
)
from .expr import Value
from .series import TruncatedSeries, one_minus_Xt_power, series_from_json, series_to_json
from .tensor import TensorElement, format_tensor, tensor_from_json, tensor_to_json

FORMATS = ("text", "json", "latex")


# text ------------------------------------------------------------------------


def _text_coeff(x) -> str:
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, TensorElement):
        return format_tensor(x)
    return format_element(x)


def to_text(v: Value) -> str:
    if not v.series:
        return _text_coeff(v.data)
    lines = []
    for k, c in enumerate(v.data.coeffs):
        if c:
            lines.append("t^%d: %s" % (k, _text_coeff(c)))
    lines.append("+ O(t^%d)" % (v.order + 1))
    return "\n".join(lines)


# json ------------------------------------------------------------------------


def _coeff_codec(kind):
    if kind == "algebra":
        return element_to_json, element_from_json
    arity = int(kind[-1])
    return tensor_to_json, (lambda d: tensor_from_json(d, arity))


def value_to_json(v: Value) -> dict:
    out = {"kind": v.kind, "series": v.series}
    if v.kind == "scalar":
        out["value"] = str(v.data)
        return out
    enc, _ = _coeff_codec(v.kind)
    if v.series:
        out["order"] = v.order
        out["value"] = series_to_json(v.data, enc)
    else:
        out["value"] = enc(v.data)
    return out


def value_from_json(data: dict) -> Value:
    kind, series = data["kind"], bool(data["series"])
    if kind == "scalar":
        return Value("scalar", False, None, as_scalar(data["value"]))
    _, dec = _coeff_codec(kind)
    if series:
        s = series_from_json(data["value"], dec)
        return Value(kind, True, s.order, s)
    return Value(kind, False, None, dec(data["value"]))


def to_json(v: Value) -> str:
    return json.dumps(value_to_json(v), sort_keys=True)


# latex -----------------------------------------------------------------------


def latex_scalar(c: Fraction) -> str:
    if c.denominator == 1:
        return str(c.numerator)
    sign = "-" if c < 0 else ""
    return "%s\\frac{%d}{%d}" % (sign, abs(c.numerator), c.denominator)


def latex_word(word) -> str:
    if not word:
        return "1"
    parts = []
    for kind, idx, exp in word_exponents(word):
        parts.append("%s_{%d}" % (kind, idx) + ("^{%d}" % exp if exp > 1 else ""))
    return " ".join(parts)


def _signed_terms(items) -> str:
    """Join (coeff, body) pairs; body "1" means a bare scalar."""
    out = []
    for c, body in items:
        neg = c < 0
        a = -c if neg else c
        if body == "1":
            text = latex_scalar(a)
        elif a == 1:
            text = body
        elif body[:1].isdigit():
            text = latex_scalar(a) + "\\cdot " + body
        else:
            text = latex_scalar(a) + body
        if not out:
            out.append(("-" if neg else "") + text)
        else:
            out.append((" - " if neg else " + ") + text)
    return "".join(out) if out else "0"


def latex_element(a: AlgebraElement) -> str:
    return _signed_terms((c, latex_word(w)) for w, c in a.sorted_items())


def latex_tensor(x: TensorElement) -> str:
    return _signed_terms((c, _otimes(latex_word(w) for w in key)) for key, c in x.sorted_items())


def _otimes(parts) -> str:
    out = ""
    for p in parts:
        if out:
            out += "\\otimes" + (" " if p[:1].isalnum() else "")
        out += p
    return out


_X = "\\mathcal{X}"


def _power_factor(q: Fraction) -> str:
    if q == 0:
        return ""
    if q == 1:
        return "(1-%st)" % _X
    return "(1-%st)^{%s}" % (_X, latex_scalar(q))


def _factor_series(cfg: TwistConfig, s: TruncatedSeries, budget: int = 8):
    """Split s into pieces c t^j (1-Xt)^q m with m a single word.

    Returns a list of (j, q, coeff, word) or None if no factorization is
    found within ``budget`` pieces.
    """
    pieces = []
    rest = s
    N = s.order
    X = cfg.X
    for _ in range(budget):
        j = next((k for k in range(N + 1) if rest[k]), None)
        if j is None:
            return pieces
        w, c = rest[j].sorted_items()[0]
        m = AlgebraElement.from_word(w)
        q = Fraction(0)
        if j < N:
            xm = X * m
            nxt = rest[j + 1]
            cx = nxt.coeff(xm.sorted_items()[0][0]) if xm else Fraction(0)
            if xm and len(xm.terms) == 1:
                q = -cx / (c * xm.sorted_items()[0][1])
        piece = (one_minus_Xt_power(cfg, q) * m).scale(c).shift(j)
        rest = rest - piece
        pieces.append((j, q, c, w))
    return pieces if not any(rest.coeffs) else None


def _latex_pieces(pieces) -> list:
    items = []
    for j, q, c, w in pieces:
        body = ""
        if j:
            body += "t" if j == 1 else "t^{%d}" % j
        body += _power_factor(q)
        if w:
            body += latex_word(w)
        items.append((c, body or "1"))
    return items


def _latex_series_generic(s: TruncatedSeries, fmt) -> str:
    parts = []
    for k, c in enumerate(s.coeffs):
        if not c:
            continue
        inner = fmt(c)
        if k == 0:
            parts.append(inner)
        else:
            tk = "t" if k == 1 else "t^{%d}" % k
            parts.append("\\left(%s\\right)%s" % (inner, tk))
    body = " + ".join(parts) if parts else "0"
    return body + " + O(t^{%d})" % (s.order + 1)


def latex_series(cfg: TwistConfig, v: Value) -> str:
    s = v.data
    if v.kind == "algebra":
        pieces = _factor_series(cfg, s)
        if pieces is not None:
            return _signed_terms(_latex_pieces(pieces))
        return _latex_series_generic(s, latex_element)
    if v.kind == "tensor2":
        # group by left word: s = sum_u u ⊗ R_u(t)
        groups = {}
        for k, c in enumerate(s.coeffs):
            for (u, w), a in c.terms.items():
                groups.setdefault(u, [AlgebraElement.zero() for _ in range(s.order + 1)])
                groups[u][k] = groups[u][k] + AlgebraElement.from_word(w, a)
        items = []
        # the unit word goes last so the leading slot reads first
        for u in sorted(groups, key=lambda u: (u == (), u)):
            pieces = _factor_series(cfg, TruncatedSeries(groups[u], s.order))
            if pieces is None:
                return _latex_series_generic(s, latex_tensor)
            left = latex_word(u)
            for c, body in _latex_pieces(pieces):
                items.append((c, _otimes((left, body))))
        return _signed_terms(items)
    return _latex_series_generic(s, latex_tensor)


def to_latex(v: Value, cfg: TwistConfig) -> str:
    if v.series:
        return latex_series(cfg, v)
    if v.kind == "scalar":
        return latex_scalar(v.data)
    if v.kind == "algebra":
        return latex_element(v.data)
    return latex_tensor(v.data)


def render(v: Value, fmt: str, cfg: TwistConfig) -> str:
    if fmt == "text":
        return to_text(v)
    if fmt == "json":
        return to_json(v)
    if fmt == "latex":
        return to_latex(v, cfg)
    raise ValueError("unknown format %r" % fmt)
