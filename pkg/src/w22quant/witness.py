"""Univariate rational polynomials in a commuting indeterminate y.

Used as an independent test ring for the factorial identities, which are
stated for an arbitrary element of a unital algebra.
"""

from __future__ import annotations

from fractions import Fraction


class PolyWitness:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [Fraction(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def y(cls):
        return cls([0, 1])

    @classmethod
    def const(cls, c):
        return cls([c])

    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = PolyWitness.const(other)
        return isinstance(other, PolyWitness) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = PolyWitness.const(other)
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (Fraction(0),) * (n - len(self.coeffs))
        b = other.coeffs + (Fraction(0),) * (n - len(other.coeffs))
        return PolyWitness([x + y for x, y in zip(a, b)])

    __radd__ = __add__

    def __neg__(self):
        return PolyWitness([-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return PolyWitness([c * other for c in self.coeffs])
        if not self.coeffs or not other.coeffs:
            return PolyWitness()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return PolyWitness(out)

    __rmul__ = __mul__

    def __call__(self, x):
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __repr__(self):
        return "PolyWitness(%s)" % list(self.coeffs)


def rising(b, i: int) -> PolyWitness:
    """y_b^{<i>} = (y+b)(y+b+1)...(y+b+i-1)."""
    y = PolyWitness.y()
    p = PolyWitness.const(1)
    for k in range(i):
        p = p * (y + (Fraction(b) + k))
    return p


def falling(b, i: int) -> PolyWitness:
    """y_b^{[i]} = (y+b)(y+b-1)...(y+b-i+1)."""
    y = PolyWitness.y()
    p = PolyWitness.const(1)
    for k in range(i):
        p = p * (y + (Fraction(b) - k))
    return p
