"""Exact arithmetic in Q and in quadratic extensions Q(sqrt(m)).

Values are x + y*sqrt(m) with x, y rational and m a squarefree integer.
For m < 0 the fixed embedding takes sqrt(m) = i*sqrt(|m|), and the
nontrivial field automorphism acts as complex conjugation.  Rationals are
plain ``fractions.Fraction`` throughout; a QuadNum with zero irrational
part is compatible with any radicand, which lets the imaginary quadratic
field K and real auxiliary fields coexist in one computation.
"""

from fractions import Fraction
from math import isqrt


def rat(x):
    """Coerce ints, strings like "3/4", and Fractions to Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    raise TypeError("cannot interpret %r as a rational" % (x,))


def format_rat(x):
    x = rat(x)
    if x.denominator == 1:
        return str(x.numerator)
    return "%d/%d" % (x.numerator, x.denominator)


def is_squarefree(m):
    m = abs(m)
    if m == 0:
        return False
    d = 2
    while d * d <= m:
        if m % (d * d) == 0:
            return False
        d += 1
    return True


def rational_sqrt(x):
    """Exact square root of a rational, or None if x is not a square."""
    x = rat(x)
    if x < 0:
        return None
    n, d = x.numerator, x.denominator
    rn, rd = isqrt(n), isqrt(d)
    if rn * rn == n and rd * rd == d:
        return Fraction(rn, rd)
    return None


class QuadNum:
    """Exact element re + im*sqrt(m) of a quadratic field over Q.

    m must be a squarefree integer other than 0 and 1 whenever im != 0;
    purely rational values use m = 0 as a neutral radicand and mix freely
    with any field.
    """

    __slots__ = ("re", "im", "m")

    def __init__(self, re, im=0, m=0):
        re, im = rat(re), rat(im)
        if im == 0:
            m = 0
        else:
            if not isinstance(m, int) or m in (0, 1) or not is_squarefree(m):
                raise ValueError("radicand must be a squarefree integer != 0, 1; got %r" % (m,))
        self.re, self.im, self.m = re, im, m

    # -- plumbing -----------------------------------------------------------

    @staticmethod
    def coerce(x, m=0):
        if isinstance(x, QuadNum):
            return x
        return QuadNum(rat(x), 0, 0)

    def _join(self, other):
        """Common radicand for a binary operation; error on true mismatch."""
        other = QuadNum.coerce(other)
        if self.m == other.m:
            return other, self.m
        if self.im == 0:
            return other, other.m
        if other.im == 0:
            return other, self.m
        raise ValueError("mismatched radicands: sqrt(%d) vs sqrt(%d)" % (self.m, other.m))

    def __repr__(self):
        return "QuadNum(%s)" % format_quad(self)

    def __hash__(self):
        return hash((self.re, self.im, self.m))

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, str)):
            other = QuadNum.coerce(other)
        if not isinstance(other, QuadNum):
            return NotImplemented
        try:
            other, _ = self._join(other)
        except ValueError:
            return False
        return self.re == other.re and self.im == other.im

    def __bool__(self):
        return self.re != 0 or self.im != 0

    # -- ring operations ----------------------------------------------------

    def __add__(self, other):
        other, m = self._join(other)
        return QuadNum(self.re + other.re, self.im + other.im, m)

    __radd__ = __add__

    def __neg__(self):
        return QuadNum(-self.re, -self.im, self.m)

    def __sub__(self, other):
        return self + (-QuadNum.coerce(other))

    def __rsub__(self, other):
        return QuadNum.coerce(other) + (-self)

    def __mul__(self, other):
        other, m = self._join(other)
        return QuadNum(
            self.re * other.re + self.im * other.im * m,
            self.re * other.im + self.im * other.re,
            m,
        )

    __rmul__ = __mul__

    def conj(self):
        """Field conjugate re - im*sqrt(m); complex conjugation for m < 0."""
        return QuadNum(self.re, -self.im, self.m)

    def field_norm(self):
        """re^2 - im^2 * m, as a Fraction."""
        return self.re * self.re - self.im * self.im * self.m

    def inverse(self):
        n = self.field_norm()
        if n == 0:
            raise ZeroDivisionError("division by zero in Q(sqrt(%d))" % self.m)
        return QuadNum(self.re / n, -self.im / n, self.m)

    def __truediv__(self, other):
        other, _ = self._join(other)
        return self * other.inverse()

    def __rtruediv__(self, other):
        return QuadNum.coerce(other) * self.inverse()

    # -- order (real embeddings only) ----------------------------------------

    def sign(self):
        """Sign under the real embedding; error if the value is not real."""
        if self.im == 0:
            return -1 if self.re < 0 else (1 if self.re > 0 else 0)
        if self.m < 0:
            raise ValueError("sign of a non-real value")
        sr = -1 if self.re < 0 else (1 if self.re > 0 else 0)
        si = -1 if self.im < 0 else 1
        if sr == si or sr == 0:
            return si
        # re and im*sqrt(m) pull in opposite directions: compare squares.
        t = self.re * self.re - self.im * self.im * self.m
        st = -1 if t < 0 else (1 if t > 0 else 0)
        return sr * st if st != 0 else 0

    def is_real(self):
        return self.im == 0 or self.m > 0

    def is_rational(self):
        return self.im == 0

    def as_rat(self):
        if self.im != 0:
            raise ValueError("not rational: %s" % format_quad(self))
        return self.re

    def _cmp(self, other):
        other, _ = self._join(other)
        return (self - other).sign()

    def __lt__(self, other):
        return self._cmp(other) < 0

    def __le__(self, other):
        return self._cmp(other) <= 0

    def __gt__(self, other):
        return self._cmp(other) > 0

    def __ge__(self, other):
        return self._cmp(other) >= 0


def quad_arith(x, y, op):
    """Dispatch-style arithmetic: op in {add, sub, mul, div}."""
    x, y = QuadNum.coerce(x), QuadNum.coerce(y)
    if op == "add":
        return x + y
    if op == "sub":
        return x - y
    if op == "mul":
        return x * y
    if op == "div":
        return x / y
    raise ValueError("unknown op %r" % (op,))


def quad_conj(x):
    return QuadNum.coerce(x).conj()


def quad_compare(x, y):
    """-1, 0 or +1 under the fixed real embedding; error for non-real values."""
    x, y = QuadNum.coerce(x), QuadNum.coerce(y)
    if not x.is_real() or not y.is_real():
        raise ValueError("comparison of non-real values")
    return x._cmp(y)


# -- text round-trip ---------------------------------------------------------

def format_quad(x):
    """Render as "p/q", "r/s*sqrt(m)" or "p/q+r/s*sqrt(m)" (exact round-trip)."""
    x = QuadNum.coerce(x)
    if x.im == 0:
        return format_rat(x.re)
    tail = "%s*sqrt(%d)" % (format_rat(abs(x.im)), x.m)
    tail = ("-" if x.im < 0 else "") + tail
    if x.re == 0:
        return tail
    if not tail.startswith("-"):
        tail = "+" + tail
    return format_rat(x.re) + tail


def parse_quad(text, m=None):
    """Parse the format_quad text form.  Optional m checks the radicand."""
    s = text.strip().replace(" ", "")
    if "sqrt" not in s:
        v = QuadNum(rat(s))
        if m not in (None, 0) and v.im != 0:
            raise ValueError("radicand mismatch")
        return v
    # split the sqrt term from an optional leading rational
    idx = s.index("*sqrt(") if "*sqrt(" in s else s.index("sqrt(")
    # walk back to the sign that starts the sqrt term (not at position 0)
    cut = 0
    for i, ch in enumerate(s):
        if ch in "+-" and i > 0 and s[i - 1] not in "+-*(" and i <= idx:
            cut = i
    if cut:
        head, tail = s[:cut], s[cut:]
    else:
        head, tail = "", s
    if not tail.endswith(")"):
        raise ValueError("malformed quadratic literal %r" % text)
    body = tail[:-1]
    if "*sqrt(" in body:
        coef_s, rad_s = body.split("*sqrt(")
        if coef_s in ("", "+"):
            coef = Fraction(1)
        elif coef_s == "-":
            coef = Fraction(-1)
        else:
            coef = rat(coef_s)
    else:
        pre, rad_s = body.split("sqrt(")
        if pre in ("", "+"):
            coef = Fraction(1)
        elif pre == "-":
            coef = Fraction(-1)
        else:
            raise ValueError("malformed quadratic literal %r" % text)
    rad = int(rad_s)
    re = rat(head) if head else Fraction(0)
    if m is not None and m != rad:
        raise ValueError("radicand mismatch: expected %r, got %r" % (m, rad))
    return QuadNum(re, coef, rad)
