"""Exact scalars: rationals, polynomials in L, and the field Q(L).

Every value is kept in a canonical form so that equality of mathematical
values coincides with structural (and textual) equality:

* ``LambdaPoly`` stores ascending rational coefficients with no trailing
  zero, so the zero polynomial is the empty tuple.
* ``LambdaRat`` stores a reduced fraction num/den where den has integer
  coefficients with content 1 and a positive lowest-order coefficient,
  den is the constant 1 whenever the value is a polynomial, and zero is
  stored as 0/1.

The heavy lifting (gcd, exact division, convolution) runs on plain lists
of Python ints; rational content is factored out once per operand and
reattached at the end, which keeps Fraction traffic out of the inner
loops.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

NEG_INF = float("-inf")  # degree of the zero polynomial


class PoleError(ZeroDivisionError):
    """Evaluation of a LambdaRat at a root of its denominator."""


# ---------------------------------------------------------------------------
# integer-coefficient kernels (ascending lists of int, trimmed)

def _itrim(c: list) -> list:
    while c and c[-1] == 0:
        c.pop()
    return c


def _imul(a: list, b: list) -> list:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return out


def _iprim(a: list) -> tuple:
    """Split a nonzero int list into (content, primitive part).

    The primitive part begins with a positive coefficient (lowest nonzero
    term, the one printed first); the sign goes into the content.
    """
    g = 0
    for v in a:
        g = gcd(g, v)
    for v in a:
        if v:
            if v < 0:
                g = -g
            break
    if g == 1:
        return 1, a
    return g, [v // g for v in a]


def _irem(a: list, b: list) -> list:
    """Integer-scaled remainder of a by b, up to a constant factor.

    Each reduction step scales the remainder by the smallest factor that
    keeps the arithmetic integral, which is all the primitive PRS needs;
    the result is only meaningful up to sign and content.
    """
    r = list(a)
    db = len(b) - 1
    lb = b[-1]
    while len(r) - 1 >= db:
        lead = r[-1]
        if lead == 0:
            r.pop()
            continue
        g = gcd(lead, lb)
        mr = lb // g
        mb = lead // g
        if mr != 1:
            r = [mr * c for c in r]
        off = len(r) - 1 - db
        for i in range(db):
            r[off + i] -= mb * b[i]
        r.pop()
    return _itrim(r)


def _igcd(a: list, b: list) -> list:
    """Primitive gcd of two int lists, positive leading coefficient."""
    if not a:
        return _iprim(b)[1] if b else []
    if not b:
        return _iprim(a)[1]
    a = _iprim(a)[1]
    b = _iprim(b)[1]
    if len(a) < len(b):
        a, b = b, a
    while b:
        if len(b) == 1:
            return [1]
        r = _irem(a, b)
        a, b = b, (_iprim(r)[1] if r else [])
    return a


def _idivexact(a: list, b: list) -> list:
    """Quotient a // b when b is known to divide a over the integers."""
    if not a:
        return []
    q = [0] * (len(a) - len(b) + 1)
    r = list(a)
    lb = b[-1]
    for k in range(len(q) - 1, -1, -1):
        c = r[len(b) - 1 + k]
        if c:
            qc = c // lb
            q[k] = qc
            for i, bc in enumerate(b):
                r[i + k] -= qc * bc
    return q


def _ipow(a: list, n: int) -> list:
    out = [1]
    base = a
    while n:
        if n & 1:
            out = _imul(out, base)
        n >>= 1
        if n:
            base = _imul(base, base)
    return out


# ---------------------------------------------------------------------------

class LambdaPoly:
    """Polynomial in L with exact rational coefficients, stored ascending."""

    __slots__ = ("coeffs", "_parts")

    def __init__(self, coeffs=()):
        cs = [c if isinstance(c, Fraction) else Fraction(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs = tuple(cs)
        self._parts = None

    @classmethod
    def _raw(cls, coeffs: tuple) -> "LambdaPoly":
        # trusted: coeffs already a trimmed tuple of Fraction
        self = object.__new__(cls)
        self.coeffs = coeffs
        self._parts = None
        return self

    @classmethod
    def const(cls, value) -> "LambdaPoly":
        v = value if isinstance(value, Fraction) else Fraction(value)
        return cls._raw((v,) if v else ())

    @property
    def degree(self):
        """Degree, with the zero polynomial at -infinity."""
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def _int_parts(self) -> tuple:
        """Lazy (scale, primitive int list): scale * ints == self."""
        if self._parts is None:
            if not self.coeffs:
                self._parts = (Fraction(0), [])
            else:
                den = 1
                for c in self.coeffs:
                    d = c.denominator
                    den = den // gcd(den, d) * d
                ints = [c.numerator * (den // c.denominator) for c in self.coeffs]
                g, prim = _iprim(ints)
                self._parts = (Fraction(g, den), prim)
        return self._parts

    def __add__(self, other):
        if not isinstance(other, LambdaPoly):
            if isinstance(other, (int, Fraction)):
                other = LambdaPoly.const(other)
            else:
                return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        while out and not out[-1]:
            out.pop()
        return LambdaPoly._raw(tuple(out))

    __radd__ = __add__

    def __neg__(self):
        return LambdaPoly._raw(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = LambdaPoly.const(other)
        if not isinstance(other, LambdaPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return _LP_ZERO
            return LambdaPoly._raw(tuple(c * other for c in self.coeffs))
        if not isinstance(other, LambdaPoly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return _LP_ZERO
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    out[i + j] += ai * bj
        while out and not out[-1]:
            out.pop()
        return LambdaPoly._raw(tuple(out))

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        out = _LP_ONE
        base = self
        while n:
            if n & 1:
                out = out * base
            n >>= 1
            if n:
                base = base * base
        return out

    def evaluate(self, point) -> Fraction:
        """Value at a rational point, by Horner's rule."""
        if not isinstance(point, Fraction):
            point = Fraction(point)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * point + c
        return acc

    def __eq__(self, other):
        if isinstance(other, LambdaPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == LambdaPoly.const(other).coeffs
        return NotImplemented

    def __hash__(self):
        # constants must hash like the rational they equal
        if len(self.coeffs) <= 1:
            return hash(self.coeffs[0] if self.coeffs else Fraction(0))
        return hash(self.coeffs)

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            mag = -c if c < 0 else c
            if k == 0:
                body = str(mag)
            elif k == 1:
                body = f"{mag}*L"
            else:
                body = f"{mag}*L^{k}"
            if not parts:
                parts.append(f"-{body}" if c < 0 else body)
            else:
                parts.append(f" - {body}" if c < 0 else f" + {body}")
        return "".join(parts)

    def __repr__(self):
        return f"LambdaPoly({self})"


_LP_ZERO = LambdaPoly._raw(())
_LP_ONE = LambdaPoly._raw((Fraction(1),))


class LambdaRat:
    """Element of the rational-function field Q(L), always reduced.

    Invariants: gcd(num, den) = 1, den has integer coefficients with
    content 1 and a positive first (lowest-order) coefficient, polynomial
    values have den = 1, and zero is stored as 0/1.  Two equal field
    elements are therefore structurally identical and print identically.
    """

    __slots__ = ("num", "den")

    def __init__(self, num=0, den=1):
        if not isinstance(num, LambdaPoly):
            num = LambdaPoly.const(num) if isinstance(num, (int, Fraction)) else LambdaPoly(num)
        if not isinstance(den, LambdaPoly):
            den = LambdaPoly.const(den) if isinstance(den, (int, Fraction)) else LambdaPoly(den)
        n, d = _normalized(num, den)
        self.num = n
        self.den = d

    @classmethod
    def _make(cls, num: LambdaPoly, den: LambdaPoly) -> "LambdaRat":
        # trusted: (num, den) already satisfy the class invariants
        self = object.__new__(cls)
        self.num = num
        self.den = den
        return self

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    @property
    def is_poly(self) -> bool:
        """True when the denominator is 1."""
        return self.den.coeffs == _ONE_COEFFS

    def __bool__(self) -> bool:
        return not self.num.is_zero

    def _pieces(self) -> tuple:
        # (scale, primitive num ints, den ints)
        s, p = self.num._int_parts()
        q = self.den._int_parts()[1]
        return s, p, q

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        if self.num.is_zero:
            return other
        if other.num.is_zero:
            return self
        sa, pa, qa = self._pieces()
        sb, pb, qb = other._pieces()
        g = _igcd(qa, qb)
        if len(g) > 1:
            qa2 = _idivexact(qa, g)
            qb2 = _idivexact(qb, g)
        else:
            qa2, qb2 = qa, qb
        left = _imul(pa, qb2)
        right = _imul(pb, qa2)
        # sa*left + sb*right with one common integer denominator
        da, db = sa.denominator, sb.denominator
        dd = da // gcd(da, db) * db
        ua = sa.numerator * (dd // da)
        ub = sb.numerator * (dd // db)
        if len(left) < len(right):
            left, right, ua, ub = right, left, ub, ua
        acc = [ua * c for c in left]
        for i, c in enumerate(right):
            acc[i] += ub * c
        _itrim(acc)
        if not acc:
            return ZERO
        cn, pn = _iprim(acc)
        scale = Fraction(cn, dd)
        # the only shared factors left can sit inside g
        if len(g) > 1:
            g2 = _igcd(pn, g)
            if len(g2) > 1:
                pn = _idivexact(pn, g2)
                g = _idivexact(g, g2)
        den = _imul(_imul(qa2, g), qb2)
        return _assemble(scale, pn, den)

    __radd__ = __add__

    def __neg__(self):
        return LambdaRat._make(-self.num, self.den)

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        if self.num.is_zero or other.num.is_zero:
            return ZERO
        sa, pa, qa = self._pieces()
        sb, pb, qb = other._pieces()
        g1 = _igcd(pa, qb)
        if len(g1) > 1:
            pa = _idivexact(pa, g1)
            qb = _idivexact(qb, g1)
        g2 = _igcd(pb, qa)
        if len(g2) > 1:
            pb = _idivexact(pb, g2)
            qa = _idivexact(qa, g2)
        return _assemble(sa * sb, _imul(pa, pb), _imul(qa, qb))

    __rmul__ = __mul__

    def inverse(self) -> "LambdaRat":
        if self.num.is_zero:
            raise ZeroDivisionError("inverse of zero in Q(L)")
        s, p, q = self._pieces()
        scale = Fraction(1) / s
        return _assemble(scale, q, p)

    def __truediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, n: int):
        if n == 0:
            return ONE
        if n < 0:
            return self.inverse() ** (-n)
        if self.num.is_zero:
            return ZERO
        s, p, q = self._pieces()
        return _assemble(s ** n, _ipow(p, n), _ipow(q, n))

    def evaluate(self, point) -> Fraction:
        """Value at a rational point of L; raises PoleError at a pole."""
        d = self.den.evaluate(point)
        if not d:
            raise PoleError(f"pole at L = {point}")
        return self.num.evaluate(point) / d

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self.num.coeffs == other.num.coeffs and self.den.coeffs == other.den.coeffs

    def __hash__(self):
        # polynomial values must hash like the LambdaPoly they equal
        if self.is_poly:
            return hash(self.num)
        return hash((self.num.coeffs, self.den.coeffs))

    def __str__(self):
        if self.is_poly:
            return str(self.num)
        return f"({self.num}) / ({self.den})"

    def embed_str(self) -> str:
        """Compact rendering for use inside a larger expression."""
        if self.is_poly:
            return str(self.num)
        num = str(self.num)
        nonzero = [c for c in self.num.coeffs if c]
        if len(nonzero) == 1:
            return f"{num}/({self.den})"
        return f"({num})/({self.den})"

    def __repr__(self):
        return f"LambdaRat({self})"


_ONE_COEFFS = (Fraction(1),)


def _coerce(value):
    if isinstance(value, LambdaRat):
        return value
    if isinstance(value, (int, Fraction)):
        return LambdaRat._make(LambdaPoly.const(value), _LP_ONE)
    if isinstance(value, LambdaPoly):
        return LambdaRat._make(value, _LP_ONE)
    return NotImplemented


def _normalized(num: LambdaPoly, den: LambdaPoly) -> tuple:
    if den.is_zero:
        raise ZeroDivisionError("zero denominator in Q(L)")
    if num.is_zero:
        return _LP_ZERO, _LP_ONE
    sn, p = num._int_parts()
    sd, q = den._int_parts()
    g = _igcd(p, q)
    if len(g) > 1:
        p = _idivexact(p, g)
        q = _idivexact(q, g)
    s = sn / sd
    if len(q) == 1:
        s = s / q[0]
        return LambdaPoly._raw(tuple(s * c for c in p)), _LP_ONE
    return (LambdaPoly._raw(tuple(s * c for c in p)),
            LambdaPoly._raw(tuple(Fraction(c) for c in q)))


def _assemble(scale: Fraction, p: list, q: list) -> LambdaRat:
    # p, q primitive with positive leading coefficient and coprime
    if len(q) == 1:
        num = LambdaPoly._raw(tuple(scale * c for c in p))
        return LambdaRat._make(num, _LP_ONE)
    num = LambdaPoly._raw(tuple(scale * c for c in p))
    den = LambdaPoly._raw(tuple(Fraction(c) for c in q))
    return LambdaRat._make(num, den)


def lrat(value) -> LambdaRat:
    """Coerce an int, Fraction, or LambdaPoly into Q(L)."""
    out = _coerce(value)
    if out is NotImplemented:
        raise TypeError(f"cannot coerce {type(value).__name__} into Q(L)")
    return out


ZERO = LambdaRat._make(_LP_ZERO, _LP_ONE)
ONE = LambdaRat._make(_LP_ONE, _LP_ONE)
LAMBDA = LambdaRat._make(LambdaPoly._raw((Fraction(0), Fraction(1))), _LP_ONE)
