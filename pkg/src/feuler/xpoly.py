"""Polynomials in x over the scalar field Q(L)."""

from __future__ import annotations

from fractions import Fraction
from math import comb

from .scalar import NEG_INF, ONE, ZERO, LambdaPoly, LambdaRat, lrat


def _as_scalar(value):
    if isinstance(value, LambdaRat):
        return value
    if isinstance(value, (int, Fraction, LambdaPoly)):
        return lrat(value)
    return None


class XPoly:
    """Polynomial in x with coefficients in Q(L), stored ascending.

    The coefficient tuple carries no trailing zero, so degree and leading
    coefficient read straight off the representation and equal values are
    structurally equal.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = []
        for c in coeffs:
            s = _as_scalar(c)
            if s is None:
                raise TypeError(f"bad coefficient {c!r}")
            cs.append(s)
        while cs and cs[-1].is_zero:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def _raw(cls, coeffs: tuple) -> "XPoly":
        # trusted: trimmed tuple of LambdaRat
        self = object.__new__(cls)
        self.coeffs = coeffs
        return self

    @classmethod
    def monomial(cls, k: int, coeff=1) -> "XPoly":
        c = lrat(coeff)
        if c.is_zero:
            return cls._raw(())
        return cls._raw((ZERO,) * k + (c,))

    @classmethod
    def const(cls, value) -> "XPoly":
        return cls.monomial(0, value)

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    @property
    def leading_coeff(self) -> LambdaRat:
        return self.coeffs[-1] if self.coeffs else ZERO

    @property
    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == ONE

    def coeff(self, k: int) -> LambdaRat:
        """Coefficient of x^k."""
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return ZERO

    def __add__(self, other):
        if not isinstance(other, XPoly):
            s = _as_scalar(other)
            if s is None:
                return NotImplemented
            other = XPoly.monomial(0, s)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        while out and out[-1].is_zero:
            out.pop()
        return XPoly._raw(tuple(out))

    __radd__ = __add__

    def __neg__(self):
        return XPoly._raw(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        if not isinstance(other, XPoly):
            s = _as_scalar(other)
            if s is None:
                return NotImplemented
            other = XPoly.monomial(0, s)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, XPoly):
            s = _as_scalar(other)
            if s is None:
                return NotImplemented
            if s.is_zero:
                return XPoly._raw(())
            return XPoly._raw(tuple(c * s for c in self.coeffs))
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return XPoly._raw(())
        out = [ZERO] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if not ai.is_zero:
                for j, bj in enumerate(b):
                    if not bj.is_zero:
                        out[i + j] = out[i + j] + ai * bj
        while out and out[-1].is_zero:
            out.pop()
        return XPoly._raw(tuple(out))

    __rmul__ = __mul__

    def __truediv__(self, other):
        s = _as_scalar(other)
        if s is None:
            return NotImplemented
        return self * s.inverse()

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        out = XPoly.const(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            n >>= 1
            if n:
                base = base * base
        return out

    def derivative(self, order: int = 1) -> "XPoly":
        """order-th derivative with respect to x."""
        if order < 0:
            raise ValueError("negative derivative order")
        cs = self.coeffs
        for _ in range(order):
            if len(cs) <= 1:
                return XPoly._raw(())
            cs = tuple(cs[k] * k for k in range(1, len(cs)))
        return XPoly._raw(cs)

    def shift(self, a) -> "XPoly":
        """p(x + a), expanded binomially so coefficients stay canonical."""
        a = lrat(a)
        if a.is_zero or not self.coeffs:
            return self
        n = len(self.coeffs) - 1
        apow = [ONE]
        for _ in range(n):
            apow.append(apow[-1] * a)
        out = [ZERO] * (n + 1)
        for m, c in enumerate(self.coeffs):
            if c.is_zero:
                continue
            for k in range(m + 1):
                out[k] = out[k] + c * comb(m, k) * apow[m - k]
        while out and out[-1].is_zero:
            out.pop()
        return XPoly._raw(tuple(out))

    def dilate(self, alpha) -> "XPoly":
        """p(alpha * x)."""
        alpha = lrat(alpha)
        out = []
        power = ONE
        for k, c in enumerate(self.coeffs):
            if k:
                power = power * alpha
            out.append(c * power)
        while out and out[-1].is_zero:
            out.pop()
        return XPoly._raw(tuple(out))

    def evaluate(self, point) -> LambdaRat:
        """Value at a point of Q(L), by Horner's rule."""
        point = lrat(point)
        acc = ZERO
        for c in reversed(self.coeffs):
            acc = acc * point + c
        return acc

    def __eq__(self, other):
        if isinstance(other, XPoly):
            return self.coeffs == other.coeffs
        s = _as_scalar(other)
        if s is None:
            return NotImplemented
        if s.is_zero:
            return not self.coeffs
        return len(self.coeffs) == 1 and self.coeffs[0] == s

    def __hash__(self):
        if len(self.coeffs) <= 1:
            return hash(self.coeffs[0] if self.coeffs else ZERO)
        return hash(self.coeffs)

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c.is_zero:
                continue
            if c.is_poly and c.num.degree <= 0 and c.num.coeffs[0] > 0:
                parts.append(f"{c.num.coeffs[0]}*x^{k}")
            else:
                parts.append(f"({c.embed_str()})*x^{k}")
        return " + ".join(parts)

    def __repr__(self):
        return f"XPoly({self})"


X = XPoly.monomial(1)
