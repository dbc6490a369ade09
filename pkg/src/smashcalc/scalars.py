"""Exact arithmetic in Q(q), rational functions in one variable over Q.

A Scalar is a pair of integer-coefficient polynomials num/den held in a
canonical form, so that equality is structural:

  * polynomials are tuples of ints, lowest degree first, no trailing zeros;
  * zero is num == () with den == (1,);
  * gcd(num, den) == 1 over Z[q], including the integer contents;
  * the leading coefficient of den is positive.

All operations are exact; nothing here ever touches a float.  Division by the
zero scalar raises ZeroDivisionError, evaluation at a pole raises PoleAtPoint.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .errors import PoleAtPoint

# -- integer polynomial helpers (tuples, low degree first) --


def _trim(cs):
    n = len(cs)
    while n and cs[n - 1] == 0:
        n -= 1
    return tuple(cs[:n])


def _padd(a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] += c
    return _trim(out)


def _pneg(a):
    return tuple(-c for c in a)


def _psub(a, b):
    return _padd(a, _pneg(b))


def _pmul(a, b):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim(out)


def _pscale(k, a):
    if k == 0:
        return ()
    return tuple(k * c for c in a)


def _content(a):
    g = 0
    for c in a:
        g = math.gcd(g, c)
    return g


def _pdiv_exact(a, b):
    """Quotient of a by b assuming exact divisibility in Z[q]."""
    if not a:
        return ()
    assert b, "division by zero polynomial"
    a = list(a)
    lead = b[-1]
    q = [0] * (len(a) - len(b) + 1)
    for i in range(len(q) - 1, -1, -1):
        c = a[i + len(b) - 1]
        assert c % lead == 0, "inexact polynomial division"
        q[i] = c // lead
        if q[i]:
            for j, y in enumerate(b):
                a[i + j] -= q[i] * y
    assert not any(a), "inexact polynomial division"
    return _trim(q)


def _prem(a, b):
    """Pseudo-remainder of a by b (b nonzero, deg a >= deg b)."""
    a = list(a)
    db, lb = len(b) - 1, b[-1]
    while len(a) - 1 >= db and any(a):
        a = _trim(a)
        if not a or len(a) - 1 < db:
            break
        la = a[-1]
        shift = len(a) - 1 - db
        a = [c * lb for c in a]
        for j, y in enumerate(b):
            a[shift + j] -= la * y
        a = list(_trim(a))
    return _trim(a)


def _primitive(a):
    if not a:
        return ()
    c = _content(a)
    sign = 1 if a[-1] > 0 else -1
    c *= sign
    return tuple(x // c for x in a)


def _pgcd(a, b):
    """Gcd in Z[q], primitive with positive leading coefficient times
    the gcd of the contents."""
    if not a:
        return _scaled_abs(b)
    if not b:
        return _scaled_abs(a)
    ca, cb = _content(a), _content(b)
    u, v = _primitive(a), _primitive(b)
    while v:
        r = _prem(u, v)
        u, v = v, _primitive(r)
    return _pscale(math.gcd(ca, cb), _primitive(u))


def _scaled_abs(a):
    # normalize sign so the leading coefficient is positive
    if a and a[-1] < 0:
        return _pneg(a)
    return a


def _peval(a, x):
    acc = Fraction(0)
    for c in reversed(a):
        acc = acc * x + c
    return acc


def _pdegree(a):
    return len(a) - 1 if a else -1


def _pstr(a, var="q"):
    if not a:
        return "0"
    parts = []
    for i in range(len(a) - 1, -1, -1):
        c = a[i]
        if c == 0:
            continue
        if i == 0:
            term = str(abs(c))
        else:
            base = var if i == 1 else "%s^%d" % (var, i)
            term = base if abs(c) == 1 else "%d*%s" % (abs(c), base)
        if not parts:
            parts.append(term if c > 0 else "-" + term)
        else:
            parts.append((" + " if c > 0 else " - ") + term)
    return "".join(parts)


class Scalar:
    """An element of Q(q) in canonical reduced form.  Immutable."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=(1,)):
        num = _trim(num)
        den = _trim(den)
        if not den:
            raise ZeroDivisionError("zero denominator in Q(q)")
        if not num:
            self.num, self.den = (), (1,)
            return
        g = _pgcd(num, den)
        if _pdegree(g) > 0 or (g and g[0] != 1):
            num = _pdiv_exact(num, g)
            den = _pdiv_exact(den, g)
        if den[-1] < 0:
            num, den = _pneg(num), _pneg(den)
        self.num, self.den = num, den

    # -- constructors --

    @staticmethod
    def from_int(n):
        return Scalar((n,) if n else ())

    @staticmethod
    def from_fraction(fr):
        return Scalar((fr.numerator,) if fr.numerator else (), (fr.denominator,))

    # -- predicates --

    @property
    def is_zero(self):
        return not self.num

    @property
    def is_one(self):
        return self.num == (1,) and self.den == (1,)

    def is_constant(self):
        return len(self.num) <= 1 and len(self.den) <= 1

    # -- arithmetic --

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.is_zero:
            return other
        if other.is_zero:
            return self
        return Scalar(
            _padd(_pmul(self.num, other.den), _pmul(other.num, self.den)),
            _pmul(self.den, other.den),
        )

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __neg__(self):
        out = object.__new__(Scalar)
        out.num, out.den = _pneg(self.num), self.den
        return out

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.is_zero or other.is_zero:
            return ZERO
        if self.is_one:
            return other
        if other.is_one:
            return self
        return Scalar(_pmul(self.num, other.num), _pmul(self.den, other.den))

    __rmul__ = __mul__

    def inv(self):
        if self.is_zero:
            raise ZeroDivisionError("inverse of 0 in Q(q)")
        return Scalar(self.den, self.num)

    def __truediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inv()

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other * self.inv()

    def __pow__(self, n):
        if n == 0:
            return ONE
        base = self if n > 0 else self.inv()
        out = ONE
        for _ in range(abs(n)):
            out = out * base
        return out

    # -- evaluation --

    def __call__(self, point):
        """Evaluate at a rational point.  Raises PoleAtPoint on a pole."""
        point = Fraction(point)
        dv = _peval(self.den, point)
        if dv == 0:
            raise PoleAtPoint("pole of %s at q = %s" % (self, point))
        return _peval(self.num, point) / dv

    # -- comparison, hashing, display --

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __repr__(self):
        return "Scalar(%s)" % self

    def __str__(self):
        ns = _pstr(self.num)
        if self.den == (1,):
            return ns
        ds = _pstr(self.den)
        if _nterms(self.num) > 1:
            ns = "(%s)" % ns
        if _nterms(self.den) > 1 or _pdegree(self.den) > 0:
            ds = "(%s)" % ds
        return "%s/%s" % (ns, ds)


def _nterms(a):
    return sum(1 for c in a if c)


def _coerce(x):
    if isinstance(x, Scalar):
        return x
    if isinstance(x, int):
        return Scalar.from_int(x)
    if isinstance(x, Fraction):
        return Scalar.from_fraction(x)
    return NotImplemented


ZERO = Scalar(())
ONE = Scalar((1,))
Q = Scalar((0, 1))


def qpow(k):
    """q**k for any integer k, negative exponents giving 1/q**-k."""
    if k >= 0:
        return Scalar((0,) * k + (1,))
    return Scalar((1,), (0,) * (-k) + (1,))


def integer(n):
    return Scalar.from_int(n)
