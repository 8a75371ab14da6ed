"""Truncated exponential series acting on polynomials.

A series f(t) = sum_k a_k t^k / k! is kept as the tuple of its divided
coefficients a_0..a_N together with the truncation bound N.  In this
representation the pairing with polynomials is a plain dot product
(<f | x^n> = a_n), multiplication is binomial convolution, and applying
f as an operator differentiates: t^k acts on p as the k-th derivative.
"""

from __future__ import annotations

from math import comb

from .scalar import ONE, ZERO, LambdaRat, lrat
from .xpoly import XPoly


class NotInvertibleError(ValueError):
    """Reciprocal of a series whose constant term vanishes."""


class TruncationError(ValueError):
    """A computation needs more series coefficients than were kept."""


class TruncSeries:
    """Exponential power series truncated past degree ``trunc``."""

    __slots__ = ("coeffs", "trunc")

    def __init__(self, coeffs=(), trunc=None):
        cs = [lrat(c) if not isinstance(c, LambdaRat) else c for c in coeffs]
        if trunc is None:
            trunc = len(cs) - 1
        if trunc < 0:
            raise ValueError("truncation bound must be >= 0")
        if len(cs) > trunc + 1:
            del cs[trunc + 1:]
        while len(cs) < trunc + 1:
            cs.append(ZERO)
        self.coeffs = tuple(cs)
        self.trunc = trunc

    @classmethod
    def _raw(cls, coeffs: tuple, trunc: int) -> "TruncSeries":
        self = object.__new__(cls)
        self.coeffs = coeffs
        self.trunc = trunc
        return self

    @classmethod
    def one(cls, trunc: int) -> "TruncSeries":
        return cls._raw((ONE,) + (ZERO,) * trunc, trunc)

    @classmethod
    def exponential(cls, y, trunc: int) -> "TruncSeries":
        """e^{yt}: divided coefficients are the powers of y."""
        y = lrat(y)
        cs = [ONE]
        for _ in range(trunc):
            cs.append(cs[-1] * y)
        return cls._raw(tuple(cs), trunc)

    @classmethod
    def t_power(cls, k: int, trunc: int) -> "TruncSeries":
        if k > trunc:
            raise TruncationError(f"t^{k} is not representable below order {trunc}")
        cs = [ZERO] * (trunc + 1)
        f = 1
        for i in range(2, k + 1):
            f *= i
        cs[k] = lrat(f)
        return cls._raw(tuple(cs), trunc)

    def order(self):
        """Index of the first nonzero coefficient, or None if all vanish."""
        for k, c in enumerate(self.coeffs):
            if not c.is_zero:
                return k
        return None

    def __eq__(self, other):
        if not isinstance(other, TruncSeries):
            return NotImplemented
        return self.trunc == other.trunc and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.coeffs, self.trunc))

    def __add__(self, other):
        if not isinstance(other, TruncSeries):
            return NotImplemented
        n = min(self.trunc, other.trunc)
        return TruncSeries._raw(
            tuple(self.coeffs[k] + other.coeffs[k] for k in range(n + 1)), n)

    def __sub__(self, other):
        if not isinstance(other, TruncSeries):
            return NotImplemented
        n = min(self.trunc, other.trunc)
        return TruncSeries._raw(
            tuple(self.coeffs[k] - other.coeffs[k] for k in range(n + 1)), n)

    def __neg__(self):
        return TruncSeries._raw(tuple(-c for c in self.coeffs), self.trunc)

    def __mul__(self, other):
        if not isinstance(other, TruncSeries):
            try:
                s = lrat(other)
            except TypeError:
                return NotImplemented
            return TruncSeries._raw(tuple(c * s for c in self.coeffs), self.trunc)
        n = min(self.trunc, other.trunc)
        a, b = self.coeffs, other.coeffs
        out = []
        for m in range(n + 1):
            acc = ZERO
            for k in range(m + 1):
                ak = a[k]
                bk = b[m - k]
                if not ak.is_zero and not bk.is_zero:
                    acc = acc + comb(m, k) * ak * bk
            out.append(acc)
        return TruncSeries._raw(tuple(out), n)

    __rmul__ = __mul__

    def mul_t_power(self, k: int) -> "TruncSeries":
        """Product with t^k, which shifts divided coefficients upward."""
        out = [ZERO] * (self.trunc + 1)
        for m in range(k, self.trunc + 1):
            c = self.coeffs[m - k]
            if not c.is_zero:
                # m! / (m-k)!
                f = 1
                for i in range(m - k + 1, m + 1):
                    f *= i
                out[m] = c * f
        return TruncSeries._raw(tuple(out), self.trunc)

    def recip(self) -> "TruncSeries":
        """Multiplicative inverse; needs a nonzero constant term."""
        a = self.coeffs
        if a[0].is_zero:
            raise NotInvertibleError("series of order >= 1 has no reciprocal")
        b0 = a[0].inverse()
        out = [b0]
        for n in range(1, self.trunc + 1):
            acc = ZERO
            for k in range(1, n + 1):
                ak = a[k]
                if not ak.is_zero:
                    acc = acc + comb(n, k) * ak * out[n - k]
            out.append(-b0 * acc)
        return TruncSeries._raw(tuple(out), self.trunc)

    def __pow__(self, n: int):
        base = self
        if n < 0:
            base = self.recip()
            n = -n
        out = TruncSeries.one(base.trunc)
        while n:
            if n & 1:
                out = out * base
            n >>= 1
            if n:
                base = base * base
        return out

    def scale_arg(self, alpha) -> "TruncSeries":
        """f(alpha * t)."""
        alpha = lrat(alpha)
        out = []
        power = ONE
        for k, c in enumerate(self.coeffs):
            if k:
                power = power * alpha
            out.append(c * power)
        return TruncSeries._raw(tuple(out), self.trunc)

    def functional(self, p: XPoly) -> LambdaRat:
        """<f | p>: the linear functional with <t^k | x^n> = n! delta."""
        d = len(p.coeffs) - 1
        if d > self.trunc:
            raise TruncationError(
                f"need {d} series coefficients, kept {self.trunc}")
        acc = ZERO
        for n, c in enumerate(p.coeffs):
            a = self.coeffs[n]
            if not c.is_zero and not a.is_zero:
                acc = acc + a * c
        return acc

    def operate(self, p: XPoly) -> XPoly:
        """f(t) applied to p(x); t^k differentiates k times."""
        d = len(p.coeffs) - 1
        if d > self.trunc:
            raise TruncationError(
                f"need {d} series coefficients, kept {self.trunc}")
        if p.is_zero:
            return p
        out = [ZERO] * (d + 1)
        for n, c in enumerate(p.coeffs):
            if c.is_zero:
                continue
            for k in range(n + 1):
                a = self.coeffs[k]
                if not a.is_zero:
                    out[n - k] = out[n - k] + comb(n, k) * a * c
        while out and out[-1].is_zero:
            out.pop()
        return XPoly(out)

    def __str__(self):
        parts = []
        for k, c in enumerate(self.coeffs):
            if c.is_zero:
                continue
            body = c.embed_str()
            if len(parts) or k > 0 or not c.is_poly:
                body = f"({body})"
            if k == 0:
                parts.append(body)
            elif k == 1:
                parts.append(f"{body}*t")
            else:
                parts.append(f"{body}/{k}!*t^{k}")
        shown = " + ".join(parts) if parts else "0"
        return f"{shown} (order {self.trunc})"

    def __repr__(self):
        return f"TruncSeries({self})"


def appell_sequence(g: TruncSeries, n_max: int) -> list:
    """First n_max+1 members of the Appell sequence attached to g.

    s_n = g(t)^{-1} x^n, so the leading coefficient of s_n is 1/g(0);
    it is 1 (monic) exactly when g has constant term 1.
    """
    if n_max > g.trunc:
        raise TruncationError(
            f"need {n_max} series coefficients, kept {g.trunc}")
    h = g.recip().coeffs
    out = []
    for n in range(n_max + 1):
        cs = [comb(n, m) * h[n - m] for m in range(n + 1)]
        out.append(XPoly(cs))
    return out


def appell_expand(g: TruncSeries, p: XPoly) -> list:
    """Coefficients of p in the Appell basis of g.

    C_k = <g(t) t^k | p> / k!, returned for k = 0..deg p, so that
    p = sum_k C_k s_k.  The zero polynomial has no coefficients.
    """
    if p.is_zero:
        return []
    d = p.degree
    if d > g.trunc:
        raise TruncationError(f"need {d} series coefficients, kept {g.trunc}")
    a = g.coeffs
    out = []
    for k in range(d + 1):
        acc = ZERO
        for n in range(k, d + 1):
            c = p.coeffs[n]
            am = a[n - k]
            if not c.is_zero and not am.is_zero:
                acc = acc + comb(n, k) * am * c
        out.append(acc)
    return out
